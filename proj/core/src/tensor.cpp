#include "radix/tensor.hpp"

#include <algorithm>
#include <string>

#include "radix/error.hpp"
#include "radix/exact_linalg.hpp"

namespace radix {

namespace {

using Index = std::vector<std::size_t>;

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  while (exp--) out *= base;
  return out;
}

Index decode(std::size_t flat, std::size_t n, std::size_t order) {
  Index idx(order, 0);
  for (std::size_t a = order; a-- > 0;) {
    idx[a] = flat % n;
    flat /= n;
  }
  return idx;
}

void require_contra_slot(const Tensor& t, std::size_t k) {
  if (k < 1 || k > t.contra()) {
    throw Error(ErrorKind::SlotOutOfRange,
                "contravariant slot " + std::to_string(k) + " outside 1.." + std::to_string(t.contra()),
                k);
  }
}

void require_cova_slot(const Tensor& t, std::size_t l) {
  if (l < 1 || l > t.cova()) {
    throw Error(ErrorKind::SlotOutOfRange,
                "covariant slot " + std::to_string(l) + " outside 1.." + std::to_string(t.cova()), l);
  }
}

void require_space(const Space& s, const Tensor& t) {
  if (s.dim() != t.dim()) {
    throw Error(ErrorKind::SpaceMismatch, "tensor dimension " + std::to_string(t.dim()) +
                                              " differs from space dimension " + std::to_string(s.dim()));
  }
}

void require_compatible(const Tensor& a, const Tensor& b) {
  if (a.dim() != b.dim() || a.basis() != b.basis()) {
    throw Error(ErrorKind::SpaceMismatch, "tensors live over different spaces or bases");
  }
}

// Sum over two axes weighted by w(i, j). Axes are 0-based positions in the
// full index; the result keeps the other axes in order.
Tensor contract_axes(const Tensor& t, std::size_t axis_a, std::size_t axis_b, const Matrix& w,
                     std::size_t contra, std::size_t cova) {
  const std::size_t n = t.dim();
  const std::size_t out_order = t.order() - 2;
  std::vector<Scalar> out(ipow(n, out_order), Scalar(0));
  Index full(t.order());
  for (std::size_t flat = 0; flat < out.size(); ++flat) {
    const Index reduced = decode(flat, n, out_order);
    for (std::size_t a = 0, r = 0; a < full.size(); ++a) {
      if (a != axis_a && a != axis_b) full[a] = reduced[r++];
    }
    Scalar acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (w(i, j) == 0) continue;
        full[axis_a] = i;
        full[axis_b] = j;
        acc += w(i, j) * t.at(full);
      }
    }
    out[flat] = std::move(acc);
  }
  return Tensor(n, contra, cova, std::move(out), t.basis());
}

// Sum over one axis weighted by a vector.
Tensor contract_axis(const Tensor& t, std::size_t axis, const Vector& w, std::size_t contra,
                     std::size_t cova) {
  const std::size_t n = t.dim();
  if (w.size() != n) throw Error(ErrorKind::DimensionMismatch, "contraction weight has wrong length");
  const std::size_t out_order = t.order() - 1;
  std::vector<Scalar> out(ipow(n, out_order), Scalar(0));
  Index full(t.order());
  for (std::size_t flat = 0; flat < out.size(); ++flat) {
    const Index reduced = decode(flat, n, out_order);
    for (std::size_t a = 0, r = 0; a < full.size(); ++a) {
      if (a != axis) full[a] = reduced[r++];
    }
    Scalar acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (w[i] == 0) continue;
      full[axis] = i;
      acc += w[i] * t.at(full);
    }
    out[flat] = std::move(acc);
  }
  return Tensor(n, contra, cova, std::move(out), t.basis());
}

// result[.., j, ..] = Σ_i w(j, i) src[.., i, ..] on one axis.
std::vector<Scalar> transform_axis(const std::vector<Scalar>& src, std::size_t n, std::size_t order,
                                   std::size_t axis, const Matrix& w) {
  const std::size_t stride = ipow(n, order - 1 - axis);
  std::vector<Scalar> out(src.size(), Scalar(0));
  for (std::size_t flat = 0; flat < src.size(); ++flat) {
    const std::size_t j = (flat / stride) % n;
    const std::size_t base = flat - j * stride;
    Scalar acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (w(j, i) == 0) continue;
      acc += w(j, i) * src[base + i * stride];
    }
    out[flat] = std::move(acc);
  }
  return out;
}

// result axis j is source axis perm[j].
Tensor permute_axes(const Tensor& t, const Index& perm) {
  const std::size_t n = t.dim();
  std::vector<Scalar> out(t.components().size());
  Index src(t.order());
  for (std::size_t flat = 0; flat < out.size(); ++flat) {
    const Index dst = decode(flat, n, t.order());
    for (std::size_t j = 0; j < perm.size(); ++j) src[perm[j]] = dst[j];
    out[flat] = t.at(src);
  }
  return Tensor(n, t.contra(), t.cova(), std::move(out), t.basis());
}

Index move_axis(std::size_t order, std::size_t from, std::size_t to) {
  Index perm;
  for (std::size_t a = 0; a < order; ++a) {
    if (a != from) perm.push_back(a);
  }
  perm.insert(perm.begin() + static_cast<std::ptrdiff_t>(to), from);
  return perm;
}

void gate_radannih(const Space& s, const Tensor& t, std::size_t slot) {
  if (!is_radannih_slot(s, t, slot)) {
    throw Error(ErrorKind::NotRadicalAnnihilator,
                "covariant slot " + std::to_string(slot) +
                    " does not vanish on the radical; covariant contraction is undefined",
                slot);
  }
}

std::pair<std::size_t, std::size_t> ordered_pair(const Tensor& t, std::size_t k, std::size_t l) {
  require_cova_slot(t, k);
  require_cova_slot(t, l);
  if (k == l) throw Error(ErrorKind::SlotOutOfRange, "covariant contraction needs two distinct slots", k);
  return {std::min(k, l), std::max(k, l)};
}

}  // namespace

Tensor::Tensor(std::size_t dim, std::size_t contra, std::size_t cova)
    : dim_(dim),
      contra_(contra),
      cova_(cova),
      components_(ipow(dim, contra + cova), Scalar(0)),
      basis_(Matrix::identity(dim)) {}

Tensor::Tensor(std::size_t dim, std::size_t contra, std::size_t cova, std::vector<Scalar> components,
               std::optional<Matrix> basis)
    : dim_(dim),
      contra_(contra),
      cova_(cova),
      components_(std::move(components)),
      basis_(basis ? *std::move(basis) : Matrix::identity(dim)) {
  if (components_.size() != ipow(dim_, contra_ + cova_)) {
    throw Error(ErrorKind::DimensionMismatch,
                "expected " + std::to_string(ipow(dim_, contra_ + cova_)) + " components, got " +
                    std::to_string(components_.size()));
  }
  if (basis_.rows() != dim_ || basis_.cols() != dim_) {
    throw Error(ErrorKind::DimensionMismatch, "tensor basis must be n x n");
  }
  if (!in_ambient_basis() && rank(basis_) != dim_) {
    throw Error(ErrorKind::SingularBasis, "tensor basis is not invertible");
  }
}

Tensor Tensor::scalar(std::size_t dim, const Scalar& value) { return Tensor(dim, 0, 0, {value}); }

Tensor Tensor::vector(const Vector& v) { return Tensor(v.size(), 1, 0, v); }

Tensor Tensor::covector(const Covector& w) { return Tensor(w.dim(), 0, 1, w.components()); }

Tensor Tensor::metric(const Space& s) { return Tensor(s.dim(), 0, 2, s.gram().entries()); }

Tensor Tensor::identity(std::size_t dim) { return Tensor(dim, 1, 1, Matrix::identity(dim).entries()); }

bool Tensor::in_ambient_basis() const { return basis_ == Matrix::identity(dim_); }

bool Tensor::is_zero() const { return radix::is_zero(components_); }

std::size_t Tensor::flat_index(std::span<const std::size_t> index) const {
  if (index.size() != order()) throw Error(ErrorKind::DimensionMismatch, "index has wrong order");
  std::size_t flat = 0;
  for (auto i : index) {
    if (i >= dim_) throw Error(ErrorKind::DimensionMismatch, "index component out of range");
    flat = flat * dim_ + i;
  }
  return flat;
}

const Scalar& Tensor::at(std::span<const std::size_t> index) const {
  return components_[flat_index(index)];
}

const Scalar& Tensor::value() const {
  if (order() != 0) throw Error(ErrorKind::DimensionMismatch, "value() needs a (0, 0) tensor");
  return components_.front();
}

Tensor operator+(const Tensor& a, const Tensor& b) {
  require_compatible(a, b);
  if (a.contra_ != b.contra_ || a.cova_ != b.cova_) {
    throw Error(ErrorKind::SpaceMismatch, "tensor types differ");
  }
  Tensor out = a;
  for (std::size_t i = 0; i < out.components_.size(); ++i) out.components_[i] += b.components_[i];
  return out;
}

Tensor operator-(const Tensor& a, const Tensor& b) { return a + Scalar(-1) * b; }

Tensor operator*(const Scalar& k, const Tensor& t) {
  Tensor out = t;
  for (auto& x : out.components_) x *= k;
  return out;
}

Tensor tensor_product(const Tensor& a, const Tensor& b) {
  require_compatible(a, b);
  const std::size_t n = a.dim();
  const std::size_t contra = a.contra() + b.contra();
  const std::size_t cova = a.cova() + b.cova();
  std::vector<Scalar> out(ipow(n, contra + cova));
  Index ia(a.order());
  Index ib(b.order());
  for (std::size_t flat = 0; flat < out.size(); ++flat) {
    const Index idx = decode(flat, n, contra + cova);
    std::size_t p = 0;
    for (std::size_t x = 0; x < a.contra(); ++x) ia[x] = idx[p++];
    for (std::size_t x = 0; x < b.contra(); ++x) ib[x] = idx[p++];
    for (std::size_t x = 0; x < a.cova(); ++x) ia[a.contra() + x] = idx[p++];
    for (std::size_t x = 0; x < b.cova(); ++x) ib[b.contra() + x] = idx[p++];
    out[flat] = a.at(ia) * b.at(ib);
  }
  return Tensor(n, contra, cova, std::move(out), a.basis());
}

Tensor contract_mixed(const Tensor& t, std::size_t k, std::size_t l) {
  require_contra_slot(t, k);
  require_cova_slot(t, l);
  return contract_axes(t, k - 1, t.contra() + l - 1, Matrix::identity(t.dim()), t.contra() - 1,
                       t.cova() - 1);
}

Tensor move_covariant_slot(const Tensor& t, std::size_t from, std::size_t to) {
  require_cova_slot(t, from);
  require_cova_slot(t, to);
  Index perm(t.contra());
  for (std::size_t a = 0; a < t.contra(); ++a) perm[a] = a;
  for (auto a : move_axis(t.cova(), from - 1, to - 1)) perm.push_back(t.contra() + a);
  return permute_axes(t, perm);
}

Tensor move_contravariant_slot(const Tensor& t, std::size_t from, std::size_t to) {
  require_contra_slot(t, from);
  require_contra_slot(t, to);
  Index perm = move_axis(t.contra(), from - 1, to - 1);
  for (std::size_t a = 0; a < t.cova(); ++a) perm.push_back(t.contra() + a);
  return permute_axes(t, perm);
}

Tensor plug_vector(const Tensor& t, std::size_t l, const Vector& v) {
  require_cova_slot(t, l);
  return contract_axis(t, t.contra() + l - 1, v, t.contra(), t.cova() - 1);
}

Tensor plug_covector(const Tensor& t, std::size_t k, const Covector& w) {
  require_contra_slot(t, k);
  return contract_axis(t, k - 1, w.components(), t.contra() - 1, t.cova());
}

Matrix metric_in_basis(const Space& s, const Matrix& basis) { return s.gram_in(basis); }

Matrix coform_in_basis(const Matrix& coform, const Matrix& basis) {
  const Matrix inv = inverse(basis);
  return inv * coform * inv.transpose();
}

Vector vector_in_basis(const Vector& ambient, const Matrix& basis) {
  return inverse(basis) * ambient;
}

Covector covector_in_basis(const Covector& ambient, const Matrix& basis) {
  return Covector(left_multiply(ambient.components(), basis));
}

Tensor lower_index(const Space& s, const Tensor& t, std::size_t k) {
  require_space(s, t);
  require_contra_slot(t, k);
  const Matrix g = metric_in_basis(s, t.basis());
  const std::size_t n = t.dim();
  const std::size_t order = t.order();
  std::vector<Scalar> out(ipow(n, order));
  Index full(order);
  for (std::size_t flat = 0; flat < out.size(); ++flat) {
    const Index idx = decode(flat, n, order);
    // idx = (a without a_k, b_1..b_s, c)
    const std::size_t c = idx.back();
    for (std::size_t a = 0, r = 0; a < order; ++a) {
      if (a != k - 1) full[a] = idx[r++];
    }
    Scalar acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (g(c, i) == 0) continue;
      full[k - 1] = i;
      acc += t.at(full) * g(c, i);
    }
    out[flat] = std::move(acc);
  }
  return Tensor(n, t.contra() - 1, t.cova() + 1, std::move(out), t.basis());
}

bool is_radical_slot(const Space& s, const Tensor& t, std::size_t k) {
  require_space(s, t);
  require_contra_slot(t, k);
  for (const auto& w : annih_view(s).basis) {
    if (!plug_covector(t, k, covector_in_basis(w, t.basis())).is_zero()) return false;
  }
  return true;
}

bool is_radannih_slot(const Space& s, const Tensor& t, std::size_t l) {
  require_space(s, t);
  require_cova_slot(t, l);
  for (const auto& z : s.radical().basis()) {
    if (!plug_vector(t, l, vector_in_basis(z, t.basis())).is_zero()) return false;
  }
  return true;
}

Tensor contract_with_coform(const Tensor& t, std::size_t k, std::size_t l, const Matrix& coform) {
  const auto [lo, hi] = ordered_pair(t, k, l);
  if (coform.rows() != t.dim() || coform.cols() != t.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "coform must be n x n");
  }
  return contract_axes(t, t.contra() + lo - 1, t.contra() + hi - 1, coform, t.contra(), t.cova() - 2);
}

Tensor contract_covariant(const Space& s, const Tensor& t, std::size_t k, std::size_t l,
                          const std::optional<ScreenDecomposition>& screen) {
  require_space(s, t);
  const auto [lo, hi] = ordered_pair(t, k, l);
  gate_radannih(s, t, lo);
  gate_radannih(s, t, hi);
  const ScreenDecomposition sd = screen ? *screen : choose_screen(s);
  const Matrix gstar = coform_in_basis(extend_cometric(s, sd), t.basis());
  return contract_with_coform(t, lo, hi, gstar);
}

Tensor contract_covariant_orthogonal(const Space& s, const Tensor& t, std::size_t k, std::size_t l,
                                     const std::optional<RadicalBasis>& basis) {
  require_space(s, t);
  const auto [lo, hi] = ordered_pair(t, k, l);
  gate_radannih(s, t, lo);
  gate_radannih(s, t, hi);
  const RadicalBasis b = basis ? make_radical_basis(s, basis->vectors, basis->radical_count)
                               : s.canonical_basis();
  if (!b.orthogonal) {
    throw Error(ErrorKind::NotOrthogonal, "contraction sum needs an orthogonal radical basis");
  }

  Tensor acc(t.dim(), t.contra(), t.cova() - 2, std::vector<Scalar>(ipow(t.dim(), t.order() - 2)),
             t.basis());
  for (std::size_t a = b.radical_count; a < b.dim(); ++a) {
    const Vector e = vector_in_basis(b.vectors[a], t.basis());
    // Plug the higher slot first so the lower one keeps its position.
    const Tensor term = plug_vector(plug_vector(t, hi, e), lo, e);
    acc = acc + (1 / b.alpha[a]) * term;
  }
  return acc;
}

MetricContraction contract_with_metric(const Space& s, const Tensor& t, std::size_t k,
                                       const Vector& v) {
  require_space(s, t);
  require_cova_slot(t, k);
  s.require_vector(v);
  gate_radannih(s, t, k);
  const Tensor flat_v(t.dim(), 0, 1, covector_in_basis(flat(s, v), t.basis()).components(),
                      t.basis());
  const Tensor product = tensor_product(t, flat_v);
  return {contract_covariant(s, product, k, product.cova()),
          plug_vector(t, k, vector_in_basis(v, t.basis()))};
}

Tensor raise_index_screen(const Space& s, const Tensor& t, std::size_t l,
                          const ScreenDecomposition& screen) {
  require_space(s, t);
  require_cova_slot(t, l);
  gate_radannih(s, t, l);
  const Matrix gstar = coform_in_basis(extend_cometric(s, screen), t.basis());

  const std::size_t n = t.dim();
  const std::size_t order = t.order();
  const std::size_t new_axis = t.contra();
  const std::size_t old_axis = t.contra() + l - 1;
  std::vector<Scalar> out(ipow(n, order));
  Index full(order);
  for (std::size_t flat = 0; flat < out.size(); ++flat) {
    const Index idx = decode(flat, n, order);
    // idx = (a_1..a_r, c, b without b_l)
    const std::size_t c = idx[new_axis];
    for (std::size_t a = 0, r = 0; a < order; ++a) {
      if (r == new_axis) ++r;
      if (a != old_axis) full[a] = idx[r++];
    }
    Scalar acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (gstar(c, i) == 0) continue;
      full[old_axis] = i;
      acc += gstar(c, i) * t.at(full);
    }
    out[flat] = std::move(acc);
  }
  return Tensor(n, t.contra() + 1, t.cova() - 1, std::move(out), t.basis());
}

Tensor change_basis(const Tensor& t, const Matrix& basis) {
  if (basis.rows() != t.dim() || basis.cols() != t.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "basis must be n x n");
  }
  const auto new_inv = try_inverse(basis);
  if (!new_inv) throw Error(ErrorKind::SingularBasis, "target basis is not invertible");

  // to_new maps old coordinates to new ones; covariant axes use its inverse.
  const Matrix to_new = *new_inv * t.basis();
  const Matrix cov = (inverse(t.basis()) * basis).transpose();
  std::vector<Scalar> comps = t.components();
  for (std::size_t axis = 0; axis < t.order(); ++axis) {
    comps = transform_axis(comps, t.dim(), t.order(), axis, axis < t.contra() ? to_new : cov);
  }
  return Tensor(t.dim(), t.contra(), t.cova(), std::move(comps), basis);
}

Tensor to_ambient(const Tensor& t) { return change_basis(t, Matrix::identity(t.dim())); }

}  // namespace radix
