#include "radix/space.hpp"

#include <string>

#include "radix/error.hpp"

namespace radix {

namespace {

void require_length(std::size_t n, const Vector& v) {
  if (v.size() != n) {
    throw Error(ErrorKind::DimensionMismatch,
                "vector of length " + std::to_string(v.size()) + " in dimension " + std::to_string(n));
  }
}

}  // namespace

Subspace::Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

Subspace::Subspace(std::size_t ambient_dim, std::vector<Vector> basis)
    : ambient_dim_(ambient_dim), basis_(std::move(basis)) {
  for (const auto& v : basis_) require_length(ambient_dim_, v);
  if (rank(as_columns()) != basis_.size()) {
    throw Error(ErrorKind::DimensionMismatch, "subspace basis is linearly dependent");
  }
}

Subspace Subspace::span(std::size_t ambient_dim, std::span<const Vector> vectors) {
  for (const auto& v : vectors) require_length(ambient_dim, v);
  const EchelonForm ef = reduced_row_echelon(Matrix::from_columns(ambient_dim, vectors));
  std::vector<Vector> basis;
  basis.reserve(ef.pivots.size());
  for (auto col : ef.pivots) basis.push_back(vectors[col]);
  Subspace out(ambient_dim);
  out.basis_ = std::move(basis);
  return out;
}

Subspace Subspace::whole(std::size_t ambient_dim) {
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < ambient_dim; ++i) basis.push_back(unit_vector(ambient_dim, i));
  return Subspace(ambient_dim, std::move(basis));
}

Matrix Subspace::as_columns() const { return Matrix::from_columns(ambient_dim_, basis_); }

bool Subspace::contains(const Vector& v) const {
  require_length(ambient_dim_, v);
  std::vector<Vector> cols = basis_;
  cols.push_back(v);
  return rank(Matrix::from_columns(ambient_dim_, cols)) == basis_.size();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) {
    throw Error(ErrorKind::DimensionMismatch, "subspaces of different spaces");
  }
  std::vector<Vector> cols = basis_;
  cols.insert(cols.end(), other.basis_.begin(), other.basis_.end());
  return rank(Matrix::from_columns(ambient_dim_, cols)) == basis_.size();
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.dim() == b.dim() && a.contains(b);
}

Subspace operator+(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw Error(ErrorKind::DimensionMismatch, "subspaces of different spaces");
  }
  std::vector<Vector> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient_dim(), all);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw Error(ErrorKind::DimensionMismatch, "subspaces of different spaces");
  }
  const std::size_t n = a.ambient_dim();
  // A·x = B·y  ⇔  [A | −B]·(x, y) = 0.
  Matrix stacked(n, a.dim() + b.dim());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < a.dim(); ++c) stacked(r, c) = a.basis()[c][r];
    for (std::size_t c = 0; c < b.dim(); ++c) stacked(r, a.dim() + c) = -b.basis()[c][r];
  }
  std::vector<Vector> common;
  for (const auto& xy : kernel(stacked)) {
    Vector v(n, Scalar(0));
    for (std::size_t c = 0; c < a.dim(); ++c) {
      for (std::size_t r = 0; r < n; ++r) v[r] += xy[c] * a.basis()[c][r];
    }
    common.push_back(std::move(v));
  }
  return Subspace::span(n, common);
}

Matrix RadicalBasis::as_columns() const {
  return Matrix::from_columns(vectors.empty() ? 0 : vectors.front().size(), vectors);
}

Space::Space(Matrix gram) : gram_(std::move(gram)), radical_(gram_.rows()) {
  if (!gram_.is_square()) throw Error(ErrorKind::DimensionMismatch, "Gram matrix must be square");
  if (!gram_.is_symmetric()) throw Error(ErrorKind::NonSymmetric, "Gram matrix is not symmetric");

  radical_ = Subspace(dim(), kernel(gram_));
  canonical_basis_ = orthogonal_radical_basis(*this);
  const SignCounts counts = count_signs(Matrix::diagonal(canonical_basis_.alpha));
  signature_ = Signature{counts.zero, counts.negative, counts.positive};
}

void Space::require_vector(const Vector& v) const { require_length(dim(), v); }

Scalar Space::inner(const Vector& u, const Vector& v) const {
  require_vector(u);
  require_vector(v);
  return dot(u, gram_ * v);
}

Matrix Space::gram_of(std::span<const Vector> vectors) const {
  for (const auto& v : vectors) require_vector(v);
  const Matrix cols = Matrix::from_columns(dim(), vectors);
  return cols.transpose() * gram_ * cols;
}

Matrix Space::gram_in(const Matrix& basis) const {
  if (basis.rows() != dim()) throw Error(ErrorKind::DimensionMismatch, "basis has wrong row count");
  return basis.transpose() * gram_ * basis;
}

Scalar inner(const Space& s, const Vector& u, const Vector& v) { return s.inner(u, v); }

Subspace orth_complement(const Space& s, std::span<const Vector> vectors) {
  // Row i is ♭(v_i); the complement is the common null space.
  Matrix m(vectors.size(), s.dim());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    s.require_vector(vectors[i]);
    const Vector row = left_multiply(vectors[i], s.gram());
    for (std::size_t c = 0; c < s.dim(); ++c) m(i, c) = row[c];
  }
  return Subspace(s.dim(), kernel(m));
}

Subspace orth_complement(const Space& s, const Subspace& sub) {
  if (sub.ambient_dim() != s.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "subspace does not belong to this space");
  }
  return orth_complement(s, std::span<const Vector>(sub.basis()));
}

Subspace radical(const Space& s) { return s.radical(); }

Signature signature(const Space& s) { return s.signature(); }

RadicalBasis orthogonal_radical_basis(const Space& s, std::span<const std::size_t> pivot_order) {
  const Congruence c = congruence_diagonalize(s.gram(), pivot_order);
  RadicalBasis out;
  out.orthogonal = true;
  for (int pass = 0; pass < 2; ++pass) {
    const bool radical_pass = pass == 0;
    for (std::size_t j = 0; j < s.dim(); ++j) {
      if ((c.d(j, j) == 0) != radical_pass) continue;
      out.vectors.push_back(c.p.column(j));
      out.alpha.push_back(c.d(j, j));
      if (radical_pass) ++out.radical_count;
    }
  }
  return out;
}

RadicalBasis make_radical_basis(const Space& s, std::vector<Vector> vectors,
                                std::size_t radical_count) {
  if (vectors.size() != s.dim() || radical_count > s.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "a radical basis has exactly n vectors");
  }
  for (const auto& v : vectors) s.require_vector(v);
  const Matrix cols = Matrix::from_columns(s.dim(), vectors);
  if (rank(cols) != s.dim()) throw Error(ErrorKind::SingularBasis, "basis vectors are dependent");

  if (radical_count != s.radical().dim()) {
    throw Error(ErrorKind::NotRadicalBasis, "radical block size differs from dim rad V");
  }
  for (std::size_t a = 0; a < radical_count; ++a) {
    if (!s.radical().contains(vectors[a])) {
      throw Error(ErrorKind::NotRadicalBasis,
                  "vector " + std::to_string(a + 1) + " is not in the radical");
    }
  }

  const Matrix g = s.gram_in(cols);
  RadicalBasis out{std::move(vectors), radical_count, g.is_diagonal(), g.diagonal_entries()};
  return out;
}

DimensionReport check_dimension_identity(const Space& s, const Subspace& u) {
  if (u.ambient_dim() != s.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "subspace does not belong to this space");
  }
  const Subspace u_perp = orth_complement(s, u);
  const Subspace rad_cap_u = intersect(s.radical(), u);

  DimensionReport r;
  r.dim_v = s.dim();
  r.dim_u = u.dim();
  r.dim_u_perp = u_perp.dim();
  r.dim_rad_cap_u = rad_cap_u.dim();
  r.identity_holds = r.dim_u + r.dim_u_perp == r.dim_v + r.dim_rad_cap_u;
  r.three_term_form_holds = r.dim_v == r.dim_u + r.dim_u_perp + r.dim_rad_cap_u;
  r.radical_in_u_perp = u_perp.contains(s.radical());
  r.perp_perp_is_u_plus_radical = orth_complement(s, u_perp) == u + s.radical();
  return r;
}

}  // namespace radix
