#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "radix/matrix.hpp"
#include "radix/space.hpp"

namespace radix {

/// Element of V*, stored by its action on the coordinate basis.
class Covector {
 public:
  Covector() = default;
  explicit Covector(Vector components) : components_(std::move(components)) {}

  std::size_t dim() const noexcept { return components_.size(); }
  const Vector& components() const noexcept { return components_; }
  bool is_zero() const { return radix::is_zero(components_); }

  /// ω(v) = Σ ω_i v^i.
  Scalar operator()(const Vector& v) const;

  friend bool operator==(const Covector&, const Covector&) = default;

 private:
  Vector components_;
};

/// ♭(v) = ⟨v, ·⟩, components vᵀ·g.
Covector flat(const Space& s, const Vector& v);

/// True iff ω vanishes on rad V, i.e. ω lies in V• = Im ♭.
bool in_radical_annihilator(const Space& s, const Covector& w);

/// g•(ω, τ) := ⟨u, v⟩ for any u, v with ♭u = ω, ♭v = τ. Independent of the
/// preimages chosen. Throws NotRadicalAnnihilator if either argument is
/// outside V•.
Scalar cometric(const Space& s, const Covector& w, const Covector& t);

/// V• with the basis ♭e_a over the non-radical vectors of an orthogonal
/// radical basis, and the cometric in that basis (diagonal, entries α_a).
struct AnnihView {
  std::vector<Covector> basis;
  Matrix cometric;

  std::size_t dim() const noexcept { return basis.size(); }
};

AnnihView annih_view(const Space& s);
/// Same construction over a caller-supplied orthogonal radical basis.
/// Throws NotOrthogonal if `b` is not one.
AnnihView annih_view(const Space& s, const RadicalBasis& b);

struct DualComponent {
  std::size_t index;  // 1-based position in the basis
  Scalar value;       // g•(ω^a, ω^a) = 1/α_a
};

/// Diagonal of the cometric in the dual basis (ω^a) of an orthogonal
/// radical basis: 1/α_a for every non-radical a. Radical positions are not
/// emitted. Throws NotOrthogonal.
std::vector<DualComponent> cometric_in_dual_basis(const Space& s, const RadicalBasis& b);

/// Basis of W⁰ = {ω : ω(w) = 0 for all w ∈ W}; dim W + dim W⁰ = n.
std::vector<Covector> annihilator_of_subspace(const Subspace& w);

/// ω^b(e_a) = δ^b_a, i.e. the rows of the inverse basis matrix.
std::vector<Covector> dual_basis(const RadicalBasis& b);
/// Throws SingularBasis.
std::vector<Covector> dual_basis(const Matrix& basis_columns);

/// A screen W with V = W ⊕ rad V and g|_W nondegenerate, plus the
/// coscreen W⁰, which complements V• in V*.
struct ScreenDecomposition {
  std::vector<Vector> screen_basis;
  std::vector<Covector> coscreen_basis;
};

/// Default screen: non-radical vectors of the canonical orthogonal radical
/// basis. A hint is validated and adopted as given. Throws BadScreen when
/// the hint does not complement rad V or g restricted to it is degenerate.
ScreenDecomposition choose_screen(const Space& s,
                                  const std::optional<std::vector<Vector>>& hint = std::nullopt);

/// Throws BadScreen unless `sd` is a valid screen of `s`.
void validate_screen(const Space& s, const ScreenDecomposition& sd);

/// g*_W on V* in coordinate-dual components: W·(Wᵀ g W)⁻¹·Wᵀ with W the
/// screen vectors as columns. Agrees with g• on V• × V•; its radical is
/// the coscreen.
Matrix extend_cometric(const Space& s, const ScreenDecomposition& sd);

/// The vector representing g*_W(ω, ·). Lies in the screen, and
/// ♭(flat_star(ω)) = ω for ω ∈ V•.
Vector flat_star(const Space& s, const ScreenDecomposition& sd, const Covector& w);

/// V/rad V charted by the first coordinate axes that complement rad V
/// (all of them when g is nondegenerate, so the projection is the identity).
struct FactorPair {
  std::size_t dim = 0;        // n − r
  Matrix projection;          // dim × n, v ↦ chart coordinates of [v]
  Matrix factor_metric;       // dim × dim, g̃([u], [v]) = ⟨u, v⟩
  Matrix flat_tilde;          // n × dim, chart coordinates ↦ covector components
  Matrix sharp_tilde;         // dim × n, V• ∋ ω ↦ chart coordinates (inverse of flat_tilde on V•)
};

FactorPair factor_pair(const Space& s);

}  // namespace radix
