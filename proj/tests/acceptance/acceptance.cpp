// Property-based acceptance run. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails. Exact arithmetic throughout.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "cli/commands.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "radix/radix.hpp"

namespace {

using namespace radix;
using radix::testing::Rng;
namespace rt = radix::testing;

constexpr int kCases = 200;

struct Outcome {
  bool pass = true;
  int cases = 0;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::size_t random_dim(Rng& rng) { return rt::uniform_int(rng, 1, 8); }

std::vector<std::size_t> shuffled_order(Rng& rng, std::size_t n) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

/// A space with both a nonzero radical and a nonzero rank.
Space mixed_space(Rng& rng, std::size_t min_dim) {
  for (;;) {
    const std::size_t n = rt::uniform_int(rng, min_dim, 8);
    Space s = rt::random_space(rng, n);
    if (s.radical().dim() > 0 && s.rank() > 0) return s;
  }
}

/// Screen vectors of the canonical screen shifted by random radical vectors.
std::vector<Vector> sheared_screen(Rng& rng, const Space& s) {
  std::vector<Vector> out;
  const ScreenDecomposition canonical = choose_screen(s);
  for (const auto& w : canonical.screen_basis) {
    Vector x = w;
    Vector z = rt::random_radical_vector(rng, s);
    for (int tries = 0; tries < 3 && is_zero(z); ++tries) z = rt::random_radical_vector(rng, s);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += z[i];
    out.push_back(std::move(x));
  }
  return out;
}

std::string dim_note(std::size_t n) { return "n=" + std::to_string(n); }

Outcome sylvester_invariance() {
  Outcome o;
  Rng rng(101);
  for (int c = 0; c < kCases; ++c, ++o.cases) {
    const std::size_t n = random_dim(rng);
    const Matrix g = rt::random_gram(rng, n);
    const Matrix q = rt::random_invertible(rng, n);
    const Signature before = Space(g).signature();
    const Signature after = Space(q.transpose() * g * q).signature();
    if (before != after) o.fail("signature changed under congruence, " + dim_note(n));
    if (before != rt::signature_oracle(g)) o.fail("signature disagrees with oracle, " + dim_note(n));
  }
  return o;
}

Outcome cometric_signature() {
  Outcome o;
  Rng rng(102);
  for (int c = 0; c < kCases; ++c, ++o.cases) {
    const std::size_t n = random_dim(rng);
    const Space s = rt::random_space(rng, n);
    const std::vector<Vector> gens = s.gram().columns();
    std::vector<Covector> basis;
    const Subspace image = Subspace::span(n, gens);
    for (const auto& v : image.basis()) basis.emplace_back(v);
    Matrix m(basis.size(), basis.size());
    for (std::size_t a = 0; a < basis.size(); ++a) {
      for (std::size_t b = 0; b < basis.size(); ++b) m(a, b) = cometric(s, basis[a], basis[b]);
    }
    const Signature sig = s.signature();
    if (rt::signature_oracle(m) != Signature{0, sig.negative, sig.positive}) {
      o.fail("cometric signature mismatch, " + dim_note(n));
    }
  }
  return o;
}

Outcome dual_bases() {
  Outcome o;
  Rng rng(103);
  for (int c = 0; c < kCases; ++c, ++o.cases) {
    const std::size_t n = random_dim(rng);
    const Space s = rt::random_space(rng, n);
    const RadicalBasis b = orthogonal_radical_basis(s, shuffled_order(rng, n));
    const std::vector<Covector> omega = dual_basis(b);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (omega[x](b.vectors[y]) != (x == y ? 1 : 0)) o.fail("not a dual basis, " + dim_note(n));
      }
    }
    for (std::size_t x = b.radical_count; x < n; ++x) {
      for (std::size_t y = b.radical_count; y < n; ++y) {
        const Scalar expected = x == y ? Scalar(1 / b.alpha[x]) : Scalar(0);
        if (cometric(s, omega[x], omega[y]) != expected) {
          o.fail("g(w^a, w^b) != delta/alpha, " + dim_note(n));
        }
      }
    }
  }
  return o;
}

Outcome trace_is_rank() {
  Outcome o;
  Rng rng(104);
  for (int c = 0; c < kCases; ++c, ++o.cases) {
    const std::size_t n = random_dim(rng);
    const Space s = rt::random_space(rng, n);
    const Signature sig = rt::signature_oracle(s.gram());
    const Scalar trace = contract_covariant(s, Tensor::metric(s), 1, 2).value();
    if (trace != Scalar(sig.negative + sig.positive)) o.fail("trace != rank, " + dim_note(n));
  }
  return o;
}

Outcome flat_pair_is_inner() {
  Outcome o;
  Rng rng(105);
  for (int c = 0; c < kCases; ++c, ++o.cases) {
    const std::size_t n = random_dim(rng);
    const Space s = rt::random_space(rng, n);
    const Vector v = rt::random_vector(rng, n);
    const Vector w = rt::random_vector(rng, n);
    Scalar expected = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) expected += v[i] * s.gram()(i, j) * w[j];
    }
    const Tensor t = tensor_product(Tensor::covector(flat(s, v)), Tensor::covector(flat(s, w)));
    if (contract_covariant(s, t, 1, 2).value() != expected) o.fail("<v,.><w,.> != <v,w>, " + dim_note(n));
  }
  return o;
}

Outcome triple_agreement() {
  Outcome o;
  Rng rng(106);
  for (int c = 0; c < kCases; ++c, ++o.cases) {
    const std::size_t n = random_dim(rng);
    const Space s = rt::random_space(rng, n);
    // Order ≤ 4; keep the largest shapes to the smaller dimensions.
    const std::size_t max_order = n <= 5 ? 4 : 3;
    const std::size_t cova = rt::uniform_int(rng, 2, max_order);
    const std::size_t contra = rt::uniform_int(rng, 0, max_order - cova);
    const std::size_t k = rt::uniform_int(rng, 1, cova - 1);
    const std::size_t l = rt::uniform_int(rng, k + 1, cova);
    const Tensor t = rt::radannih_pair_tensor(rng, s, contra, cova, k, l);

    const Tensor by_coform = contract_covariant(s, t, k, l);
    const Tensor by_other_screen =
        contract_covariant(s, t, k, l, choose_screen(s, sheared_screen(rng, s)));
    const Tensor by_sum =
        contract_covariant_orthogonal(s, t, k, l, orthogonal_radical_basis(s, shuffled_order(rng, n)));
    const Matrix b = rt::random_invertible(rng, n);
    const Tensor after_change = to_ambient(contract_covariant(s, change_basis(t, b), k, l));
    const Tensor sum_after_change = to_ambient(contract_covariant_orthogonal(s, change_basis(t, b), k, l));

    if (by_coform != by_sum) o.fail("coform route != orthogonal sum, " + dim_note(n));
    if (by_coform != by_other_screen) o.fail("result depends on the screen, " + dim_note(n));
    if (by_coform != after_change || by_coform != sum_after_change) {
      o.fail("result depends on the basis, " + dim_note(n));
    }
    if (n <= 4 && by_coform != rt::orthogonal_sum_oracle(s, t, k, l)) {
      o.fail("disagrees with evaluation oracle, " + dim_note(n));
    }
  }
  return o;
}

Outcome gate_negative_control() {
  Outcome o;
  Rng rng(107);
  int screen_dependent = 0;
  for (int c = 0; c < kCases; ++c, ++o.cases) {
    const Space s = mixed_space(rng, 2);
    const std::size_t n = s.dim();
    const std::size_t cova = rt::uniform_int(rng, 2, n <= 5 ? 4 : 3);
    const std::size_t bad_slot = rt::uniform_int(rng, 1, cova);
    std::size_t other = rt::uniform_int(rng, 1, cova - 1);
    if (other >= bad_slot) ++other;

    // Random tensor with a non-radical-annihilator factor in bad_slot.
    Tensor t = tensor_product(rt::random_tensor(rng, n, 0, cova - 1),
                              Tensor::covector(rt::random_non_radannih_covector(rng, s)));
    t = move_covariant_slot(t, cova, bad_slot);
    if (is_radannih_slot(s, t, bad_slot)) {
      // Only possible when the other factor is zero.
      --o.cases;
      --c;
      continue;
    }

    const Matrix g1 = extend_cometric(s, choose_screen(s));
    const Matrix g2 = extend_cometric(s, choose_screen(s, sheared_screen(rng, s)));
    if (contract_with_coform(t, bad_slot, other, g1) != contract_with_coform(t, bad_slot, other, g2)) {
      ++screen_dependent;
    }
    bool refused = false;
    try {
      contract_covariant(s, t, bad_slot, other);
    } catch (const Error& err) {
      refused = err.kind() == ErrorKind::NotRadicalAnnihilator;
    }
    if (!refused) o.fail("ungated tensor was contracted, " + dim_note(n));
  }
  if (screen_dependent == 0) o.fail("no screen dependence observed without the gate");
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(screen_dependent) + " screen-dependent";
  return o;
}

Outcome lowering_kernel() {
  Outcome o;
  Rng rng(108);
  for (int c = 0; c < kCases; ++c, ++o.cases) {
    const Space s = mixed_space(rng, 1);
    const std::size_t n = s.dim();
    const std::size_t max_order = n <= 5 ? 4 : 3;
    const std::size_t contra = rt::uniform_int(rng, 1, max_order);
    const std::size_t cova = rt::uniform_int(rng, 0, max_order - contra);
    const std::size_t k = rt::uniform_int(rng, 1, contra);
    const Tensor radical_t = rt::radical_slot_tensor(rng, s, contra, cova, k);
    const Tensor other_t = rt::nonradical_slot_tensor(rng, s, contra, cova, k);
    if (!lower_index(s, radical_t, k).is_zero()) o.fail("radical slot did not lower to zero, " + dim_note(n));
    if (lower_index(s, other_t, k).is_zero()) o.fail("non-radical slot lowered to zero, " + dim_note(n));
    if (!is_radical_slot(s, radical_t, k) || is_radical_slot(s, other_t, k)) {
      o.fail("radical predicate disagrees with construction, " + dim_note(n));
    }
  }
  return o;
}

Outcome two_path_remark() {
  Outcome o;
  Rng rng(109);
  for (int c = 0; c < kCases; ++c, ++o.cases) {
    const Space s = mixed_space(rng, 1);
    const std::size_t n = s.dim();
    const Vector v = rt::random_vector(rng, n);
    const Covector omega = rt::random_radannih_covector(rng, s);
    Vector w;
    Covector tau;
    do {
      w = rt::random_radical_vector(rng, s);
      tau = rt::random_non_radannih_covector(rng, s);
    } while (tau(w) == 0);

    const Tensor t = tensor_product(Tensor::vector(v), Tensor::covector(omega)) +
                     tensor_product(Tensor::vector(w), Tensor::covector(tau));
    const Scalar direct = contract_mixed(t, 1, 1).value();
    const Scalar lowered = contract_covariant(s, lower_index(s, t, 1), 1, 2).value();
    if (direct != omega(v) + tau(w)) o.fail("direct trace != w(v) + t(w), " + dim_note(n));
    if (lowered != omega(v)) o.fail("lowered trace != w(v), " + dim_note(n));
    if (direct - lowered != tau(w)) o.fail("difference != t(w), " + dim_note(n));
  }
  return o;
}

Outcome cli_golden() {
  Outcome o;
  const std::string dir = RADIX_FIXTURE_DIR;
  std::ifstream in(dir + "/diag_0_m1_2.analyze.golden", std::ios::binary);
  std::ostringstream golden;
  golden << in.rdbuf();
  if (golden.str().empty()) {
    o.fail("golden report missing");
    return o;
  }
  for (int c = 0; c < 3; ++c, ++o.cases) {
    const std::vector<std::string> args{"analyze", dir + "/diag_0_m1_2.json"};
    std::ostringstream out;
    std::ostringstream err;
    if (cli::run(args, out, err) != 0) o.fail("analyze failed: " + err.str());
    if (out.str() != golden.str()) o.fail("analyze output differs from golden report");
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"sylvester_invariance", sylvester_invariance},
      {"cometric_signature", cometric_signature},
      {"dual_basis_cometric", dual_bases},
      {"metric_trace_is_rank", trace_is_rank},
      {"flat_pair_is_inner_product", flat_pair_is_inner},
      {"contraction_triple_agreement", triple_agreement},
      {"gate_negative_control", gate_negative_control},
      {"lowering_kernel", lowering_kernel},
      {"two_path_contraction", two_path_remark},
      {"cli_golden_analyze", cli_golden},
  };

  int failures = 0;
  for (const auto& [name, check] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& ex) {
      o.fail(std::string("exception: ") + ex.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << " cases=" << o.cases << " time=" << timing;
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << '\n';
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << '\n';
  return failures == 0 ? 0 : 1;
}
