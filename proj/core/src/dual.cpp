#include "radix/dual.hpp"

#include <string>

#include "radix/error.hpp"
#include "radix/exact_linalg.hpp"

namespace radix {

namespace {

void require_covector(const Space& s, const Covector& w) {
  if (w.dim() != s.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "covector of length " + std::to_string(w.dim()) +
                                                  " in dimension " + std::to_string(s.dim()));
  }
}

RadicalBasis require_orthogonal(const Space& s, const RadicalBasis& b) {
  RadicalBasis checked = make_radical_basis(s, b.vectors, b.radical_count);
  if (!checked.orthogonal) {
    throw Error(ErrorKind::NotOrthogonal, "non-radical basis vectors are not g-orthogonal");
  }
  return checked;
}

std::vector<Vector> canonical_screen(const Space& s) {
  const RadicalBasis& b = s.canonical_basis();
  return {b.vectors.begin() + static_cast<std::ptrdiff_t>(b.radical_count), b.vectors.end()};
}

void check_screen_vectors(const Space& s, const std::vector<Vector>& screen) {
  for (const auto& v : screen) {
    if (v.size() != s.dim()) throw Error(ErrorKind::BadScreen, "screen vector has wrong length");
  }
  if (screen.size() != s.rank()) {
    throw Error(ErrorKind::BadScreen, "a screen needs exactly rank g = " +
                                          std::to_string(s.rank()) + " vectors");
  }
  std::vector<Vector> stacked = screen;
  stacked.insert(stacked.end(), s.radical().basis().begin(), s.radical().basis().end());
  if (rank(Matrix::from_columns(s.dim(), stacked)) != s.dim()) {
    throw Error(ErrorKind::BadScreen, "screen does not complement the radical");
  }
  if (rank(s.gram_of(screen)) != screen.size()) {
    throw Error(ErrorKind::BadScreen, "metric restricted to the screen is degenerate");
  }
}

}  // namespace

Scalar Covector::operator()(const Vector& v) const { return dot(components_, v); }

Covector flat(const Space& s, const Vector& v) {
  s.require_vector(v);
  return Covector(left_multiply(v, s.gram()));
}

bool in_radical_annihilator(const Space& s, const Covector& w) {
  require_covector(s, w);
  for (const auto& z : s.radical().basis()) {
    if (w(z) != 0) return false;
  }
  return true;
}

Scalar cometric(const Space& s, const Covector& w, const Covector& t) {
  require_covector(s, w);
  require_covector(s, t);
  // g is symmetric, so ♭u = ω reads g·u = ω.
  const auto u = solve(s.gram(), w.components());
  if (!u) throw Error(ErrorKind::NotRadicalAnnihilator, "first argument is not in Im flat", 1);
  const auto v = solve(s.gram(), t.components());
  if (!v) throw Error(ErrorKind::NotRadicalAnnihilator, "second argument is not in Im flat", 2);
  return s.inner(*u, *v);
}

AnnihView annih_view(const Space& s) { return annih_view(s, s.canonical_basis()); }

AnnihView annih_view(const Space& s, const RadicalBasis& b) {
  const RadicalBasis checked = require_orthogonal(s, b);
  AnnihView view;
  std::vector<Scalar> diag;
  for (std::size_t a = checked.radical_count; a < checked.dim(); ++a) {
    view.basis.push_back(flat(s, checked.vectors[a]));
    diag.push_back(checked.alpha[a]);
  }
  view.cometric = Matrix::diagonal(diag);
  return view;
}

std::vector<DualComponent> cometric_in_dual_basis(const Space& s, const RadicalBasis& b) {
  const RadicalBasis checked = require_orthogonal(s, b);
  std::vector<DualComponent> out;
  for (std::size_t a = checked.radical_count; a < checked.dim(); ++a) {
    out.push_back({a + 1, 1 / checked.alpha[a]});
  }
  return out;
}

std::vector<Covector> annihilator_of_subspace(const Subspace& w) {
  const Matrix rows = Matrix::from_rows(w.ambient_dim(), w.basis());
  std::vector<Covector> out;
  for (auto& k : kernel(rows)) out.emplace_back(std::move(k));
  return out;
}

std::vector<Covector> dual_basis(const RadicalBasis& b) { return dual_basis(b.as_columns()); }

std::vector<Covector> dual_basis(const Matrix& basis_columns) {
  const auto inv = try_inverse(basis_columns);
  if (!inv) throw Error(ErrorKind::SingularBasis, "basis matrix is not invertible");
  std::vector<Covector> out;
  for (std::size_t r = 0; r < inv->rows(); ++r) out.emplace_back(inv->row(r));
  return out;
}

ScreenDecomposition choose_screen(const Space& s, const std::optional<std::vector<Vector>>& hint) {
  std::vector<Vector> screen = hint ? *hint : canonical_screen(s);
  check_screen_vectors(s, screen);
  ScreenDecomposition sd;
  sd.coscreen_basis = annihilator_of_subspace(Subspace(s.dim(), screen));
  sd.screen_basis = std::move(screen);
  return sd;
}

void validate_screen(const Space& s, const ScreenDecomposition& sd) {
  check_screen_vectors(s, sd.screen_basis);
  if (sd.coscreen_basis.size() != s.dim() - s.rank()) {
    throw Error(ErrorKind::BadScreen, "coscreen must have dim rad V covectors");
  }
  std::vector<Vector> rows;
  for (const auto& w : sd.coscreen_basis) {
    if (w.dim() != s.dim()) throw Error(ErrorKind::BadScreen, "coscreen covector has wrong length");
    for (const auto& v : sd.screen_basis) {
      if (w(v) != 0) throw Error(ErrorKind::BadScreen, "coscreen does not annihilate the screen");
    }
    rows.push_back(w.components());
  }
  if (rank(Matrix::from_rows(s.dim(), rows)) != rows.size()) {
    throw Error(ErrorKind::BadScreen, "coscreen covectors are dependent");
  }
}

Matrix extend_cometric(const Space& s, const ScreenDecomposition& sd) {
  validate_screen(s, sd);
  if (sd.screen_basis.empty()) return Matrix::zero(s.dim(), s.dim());
  const Matrix w = Matrix::from_columns(s.dim(), sd.screen_basis);
  return w * inverse(s.gram_of(sd.screen_basis)) * w.transpose();
}

Vector flat_star(const Space& s, const ScreenDecomposition& sd, const Covector& w) {
  require_covector(s, w);
  return extend_cometric(s, sd) * w.components();
}

FactorPair factor_pair(const Space& s) {
  const std::size_t n = s.dim();
  const std::vector<Vector>& radical_basis = s.radical().basis();

  // Chart: the first coordinate axes that, together with rad V, span V.
  std::vector<Vector> stacked = radical_basis;
  std::vector<Vector> chart;
  for (std::size_t i = 0; i < n && stacked.size() < n; ++i) {
    stacked.push_back(unit_vector(n, i));
    if (rank(Matrix::from_columns(n, stacked)) == stacked.size()) {
      chart.push_back(unit_vector(n, i));
    } else {
      stacked.pop_back();
    }
  }
  const std::size_t r = radical_basis.size();
  const std::size_t m = chart.size();
  const Matrix coords = inverse(Matrix::from_columns(n, stacked));

  FactorPair fp;
  fp.dim = m;
  fp.projection = Matrix(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t c = 0; c < n; ++c) fp.projection(i, c) = coords(r + i, c);
  }
  fp.factor_metric = s.gram_of(chart);
  fp.flat_tilde = s.gram() * Matrix::from_columns(n, chart);
  fp.sharp_tilde = fp.projection * extend_cometric(s, choose_screen(s));
  return fp;
}

}  // namespace radix
