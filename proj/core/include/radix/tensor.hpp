#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "radix/dual.hpp"
#include "radix/matrix.hpp"
#include "radix/space.hpp"

namespace radix {

/// Dense tensor of type (r, s) over an n-dimensional space.
///
/// Components are stored row-major with the r contravariant axes first, so
/// T^{a_1..a_r}_{b_1..b_s} sits at the flat index of (a_1, .., a_r, b_1, .., b_s).
/// Slots are 1-based in every public operation. `basis()` holds the basis
/// the components refer to, as columns in ambient coordinates; it is the
/// identity for tensors built from ambient data.
class Tensor {
 public:
  Tensor(std::size_t dim, std::size_t contra, std::size_t cova);
  /// Throws DimensionMismatch when the component count is not n^(r+s) or
  /// the basis is not n × n, and SingularBasis when it is not invertible.
  Tensor(std::size_t dim, std::size_t contra, std::size_t cova, std::vector<Scalar> components,
         std::optional<Matrix> basis = std::nullopt);

  static Tensor scalar(std::size_t dim, const Scalar& value);
  static Tensor vector(const Vector& v);
  static Tensor covector(const Covector& w);
  /// The metric g as a (0, 2) tensor.
  static Tensor metric(const Space& s);
  /// Identity endomorphism as a (1, 1) tensor.
  static Tensor identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t contra() const noexcept { return contra_; }
  std::size_t cova() const noexcept { return cova_; }
  std::size_t order() const noexcept { return contra_ + cova_; }
  const std::vector<Scalar>& components() const noexcept { return components_; }
  const Matrix& basis() const noexcept { return basis_; }
  bool in_ambient_basis() const;
  bool is_zero() const;

  /// Contravariant indices first, then covariant.
  const Scalar& at(std::span<const std::size_t> index) const;
  std::size_t flat_index(std::span<const std::size_t> index) const;

  /// Scalar value of a (0, 0) tensor.
  const Scalar& value() const;

  friend bool operator==(const Tensor&, const Tensor&) = default;
  friend Tensor operator+(const Tensor& a, const Tensor& b);
  friend Tensor operator-(const Tensor& a, const Tensor& b);
  friend Tensor operator*(const Scalar& k, const Tensor& t);

 private:
  std::size_t dim_;
  std::size_t contra_;
  std::size_t cova_;
  std::vector<Scalar> components_;
  Matrix basis_;
};

/// Outer product. Result index order: a's contravariant, b's contravariant,
/// a's covariant, b's covariant. Throws SpaceMismatch on differing
/// dimension or basis.
Tensor tensor_product(const Tensor& a, const Tensor& b);

/// C^k_l: sum over the k-th contravariant and l-th covariant index.
Tensor contract_mixed(const Tensor& t, std::size_t k, std::size_t l);

/// Moves covariant slot `from` to position `to`, others keep their order.
Tensor move_covariant_slot(const Tensor& t, std::size_t from, std::size_t to);
Tensor move_contravariant_slot(const Tensor& t, std::size_t from, std::size_t to);

/// Inserts v into covariant slot l: Σ_i T_{..i..} v^i. v is in t's basis.
Tensor plug_vector(const Tensor& t, std::size_t l, const Vector& v);
/// Inserts ω into contravariant slot k. ω is in t's basis.
Tensor plug_covector(const Tensor& t, std::size_t k, const Covector& w);

/// Components of g, g* and vectors/covectors in the basis a tensor uses.
Matrix metric_in_basis(const Space& s, const Matrix& basis);
Matrix coform_in_basis(const Matrix& coform, const Matrix& basis);
Vector vector_in_basis(const Vector& ambient, const Matrix& basis);
Covector covector_in_basis(const Covector& ambient, const Matrix& basis);

/// ♭_k(T) = C^k_{s+2}(T ⊗ g). The new covariant slot is the last one
/// (position s + 1); use move_covariant_slot to reorder.
Tensor lower_index(const Space& s, const Tensor& t, std::size_t k);

/// T is radical in contravariant slot k iff contracting that slot with
/// every basis covector of V• gives zero.
bool is_radical_slot(const Space& s, const Tensor& t, std::size_t k);

/// T is radical-annihilator in covariant slot l iff inserting every basis
/// vector of rad V there gives zero.
bool is_radannih_slot(const Space& s, const Tensor& t, std::size_t l);

/// Contracts covariant slots k < l against an arbitrary symmetric form on
/// V* given in coordinate-dual components. No well-definedness check; the
/// remaining covariant slots keep their order.
Tensor contract_with_coform(const Tensor& t, std::size_t k, std::size_t l, const Matrix& coform);

/// Covariant contraction C_kl through the screen extension g*_W of the
/// cometric (canonical screen unless one is given).
///
/// Defined only when both slots are radical-annihilator; otherwise throws
/// NotRadicalAnnihilator naming the first failing slot. On valid input the
/// result does not depend on the screen or the basis.
Tensor contract_covariant(const Space& s, const Tensor& t, std::size_t k, std::size_t l,
                          const std::optional<ScreenDecomposition>& screen = std::nullopt);

/// The same contraction as Σ_a (1/⟨e_a, e_a⟩) T(.., e_a, .., e_a, ..) over
/// the non-radical vectors of an orthogonal radical basis (canonical unless
/// given). Gated like contract_covariant.
Tensor contract_covariant_orthogonal(const Space& s, const Tensor& t, std::size_t k,
                                     std::size_t l,
                                     const std::optional<RadicalBasis>& basis = std::nullopt);

/// Both sides of C(T(.., ∙, ..) ⟨v, ∙⟩) = T(.., v, ..) for covariant slot k.
struct MetricContraction {
  Tensor contracted;  // C_{k, s+1}(T ⊗ ♭v)
  Tensor plugged;     // v inserted in slot k
  bool equal() const { return contracted == plugged; }
};

/// v is in ambient coordinates. Throws NotRadicalAnnihilator if slot k is
/// not radical-annihilator.
MetricContraction contract_with_metric(const Space& s, const Tensor& t, std::size_t k,
                                       const Vector& v);

/// Raises covariant slot l with ♭*_W of the given screen; the new
/// contravariant slot is appended last. Requires slot l radical-annihilator,
/// so lower_index on the new slot followed by move_covariant_slot(s, l)
/// gives back t.
Tensor raise_index_screen(const Space& s, const Tensor& t, std::size_t l,
                          const ScreenDecomposition& screen);

/// Re-expresses t in the basis whose columns (ambient coordinates) are
/// `basis`. Throws SingularBasis.
Tensor change_basis(const Tensor& t, const Matrix& basis);
Tensor to_ambient(const Tensor& t);

}  // namespace radix
