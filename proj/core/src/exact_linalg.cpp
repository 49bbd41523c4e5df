#include "radix/exact_linalg.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "radix/error.hpp"

namespace radix {

EchelonForm reduced_row_echelon(Matrix m) {
  EchelonForm out;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t found = pivot_row;
    while (found < m.rows() && m(found, col) == 0) ++found;
    if (found == m.rows()) continue;

    if (found != pivot_row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(found, c), m(pivot_row, c));
    }
    const Scalar inv = 1 / Scalar(m(pivot_row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(pivot_row, c) *= inv;

    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == pivot_row || m(r, col) == 0) continue;
      const Scalar factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(pivot_row, c);
    }
    out.pivots.push_back(col);
    ++pivot_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::vector<Vector> kernel(const Matrix& m) {
  const EchelonForm ef = reduced_row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ef.pivots) is_pivot[p] = true;

  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), Scalar(0));
    v[free] = 1;
    for (std::size_t i = 0; i < ef.pivots.size(); ++i) v[ef.pivots[i]] = -ef.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const Matrix& m) { return reduced_row_echelon(m).pivots.size(); }

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw Error(ErrorKind::DimensionMismatch, "solve: rhs length");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const EchelonForm ef = reduced_row_echelon(std::move(aug));
  if (!ef.pivots.empty() && ef.pivots.back() == m.cols()) return std::nullopt;

  Vector x(m.cols(), Scalar(0));
  for (std::size_t i = 0; i < ef.pivots.size(); ++i) x[ef.pivots[i]] = ef.reduced(i, m.cols());
  return x;
}

std::optional<Matrix> try_inverse(const Matrix& m) {
  if (!m.is_square()) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const EchelonForm ef = reduced_row_echelon(std::move(aug));
  if (ef.pivots.size() < n || ef.pivots[n - 1] != n - 1) return std::nullopt;

  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = ef.reduced(r, n + c);
  }
  return inv;
}

Matrix inverse(const Matrix& m) {
  auto inv = try_inverse(m);
  if (!inv) throw Error(ErrorKind::SingularMatrix, "matrix is not invertible");
  return *std::move(inv);
}

namespace {

std::vector<std::size_t> resolve_order(std::size_t n, std::span<const std::size_t> pivot_order) {
  std::vector<std::size_t> order(n);
  if (pivot_order.empty()) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    return order;
  }
  if (pivot_order.size() != n) {
    throw Error(ErrorKind::DimensionMismatch, "pivot order must list every index once");
  }
  order.assign(pivot_order.begin(), pivot_order.end());
  std::vector<bool> seen(n, false);
  for (auto i : order) {
    if (i >= n || seen[i]) {
      throw Error(ErrorKind::DimensionMismatch, "pivot order must be a permutation");
    }
    seen[i] = true;
  }
  return order;
}

// e_i ← e_i + f·e_j on both the working form and the accumulated basis.
void add_basis_vector(Matrix& a, Matrix& p, std::size_t i, std::size_t j, const Scalar& f) {
  const std::size_t n = a.rows();
  for (std::size_t r = 0; r < n; ++r) p(r, i) += f * p(r, j);
  for (std::size_t c = 0; c < n; ++c) a(i, c) += f * a(j, c);
  for (std::size_t r = 0; r < n; ++r) a(r, i) += f * a(r, j);
}

}  // namespace

Congruence congruence_diagonalize(const Matrix& g, std::span<const std::size_t> pivot_order) {
  if (!g.is_square()) throw Error(ErrorKind::DimensionMismatch, "Gram matrix must be square");
  if (!g.is_symmetric()) throw Error(ErrorKind::NonSymmetric, "Gram matrix is not symmetric");

  const std::size_t n = g.rows();
  std::vector<std::size_t> remaining = resolve_order(n, pivot_order);
  Matrix a = g;
  Matrix p = Matrix::identity(n);
  std::vector<std::size_t> emitted;
  emitted.reserve(n);

  while (!remaining.empty()) {
    auto pivot_it = std::find_if(remaining.begin(), remaining.end(),
                                 [&](std::size_t i) { return a(i, i) != 0; });
    if (pivot_it == remaining.end()) {
      bool fixed = false;
      for (std::size_t x = 0; x < remaining.size() && !fixed; ++x) {
        for (std::size_t y = x + 1; y < remaining.size() && !fixed; ++y) {
          const std::size_t i = remaining[x];
          const std::size_t j = remaining[y];
          if (a(i, j) != 0) {
            add_basis_vector(a, p, i, j, Scalar(1));
            pivot_it = remaining.begin() + static_cast<std::ptrdiff_t>(x);
            fixed = true;
          }
        }
      }
      if (!fixed) break;  // remaining block is zero
    }

    const std::size_t k = *pivot_it;
    remaining.erase(pivot_it);
    for (std::size_t j : remaining) {
      if (a(k, j) == 0) continue;
      const Scalar f = -a(k, j) / a(k, k);
      add_basis_vector(a, p, j, k, f);
    }
    emitted.push_back(k);
  }
  emitted.insert(emitted.end(), remaining.begin(), remaining.end());

  Congruence out{Matrix(n, n), Matrix(n, n)};
  for (std::size_t c = 0; c < n; ++c) {
    const std::size_t src = emitted[c];
    for (std::size_t r = 0; r < n; ++r) out.p(r, c) = p(r, src);
    out.d(c, c) = a(src, src);
  }
  return out;
}

namespace {

// |value| = root² · core with core free of prime squares ≤ 1000 (and core
// reduced to 1 if it is itself a perfect square).
void split_square(const mpz_class& value, mpz_class& root, mpz_class& core) {
  core = abs(value);
  root = 1;
  for (unsigned long k = 2; k <= 1000; ++k) {
    const unsigned long sq = k * k;
    if (sq > core) break;
    while (mpz_divisible_ui_p(core.get_mpz_t(), sq)) {
      core /= sq;
      root *= k;
    }
  }
  if (mpz_perfect_square_p(core.get_mpz_t())) {
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), core.get_mpz_t());
    root *= s;
    core = 1;
  }
}

}  // namespace

Congruence normalize(const Congruence& c) {
  Congruence out = c;
  const std::size_t n = c.d.rows();
  for (std::size_t j = 0; j < n; ++j) {
    const Scalar& alpha = c.d(j, j);
    if (alpha == 0) continue;
    // α = p/q; scaling by q/root turns α into p·q/root² = sign·core.
    const mpz_class num = alpha.get_num();
    const mpz_class den = alpha.get_den();
    mpz_class root;
    mpz_class core;
    split_square(mpz_class(num * den), root, core);
    Scalar scale(den, root);
    scale.canonicalize();
    for (std::size_t r = 0; r < n; ++r) out.p(r, j) = c.p(r, j) * scale;
    out.d(j, j) = alpha * scale * scale;
  }
  return out;
}

SignCounts count_signs(const Matrix& diagonal) {
  SignCounts counts;
  for (std::size_t i = 0; i < diagonal.rows(); ++i) {
    const int sign = sgn(diagonal(i, i));
    if (sign == 0) ++counts.zero;
    else if (sign < 0) ++counts.negative;
    else ++counts.positive;
  }
  return counts;
}

}  // namespace radix
