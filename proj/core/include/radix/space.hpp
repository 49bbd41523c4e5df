#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "radix/exact_linalg.hpp"
#include "radix/matrix.hpp"

namespace radix {

/// Subspace of an n-dimensional coordinate space, held as an independent
/// spanning list. Equality is mutual containment, not basis identity.
class Subspace {
 public:
  /// The zero subspace.
  explicit Subspace(std::size_t ambient_dim);
  /// Throws DimensionMismatch when a vector has the wrong length or the
  /// list is dependent; use `span` for arbitrary generating sets.
  Subspace(std::size_t ambient_dim, std::vector<Vector> basis);

  /// Subspace generated by an arbitrary set; keeps the independent subset
  /// (first occurrence wins).
  static Subspace span(std::size_t ambient_dim, std::span<const Vector> vectors);
  static Subspace whole(std::size_t ambient_dim);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Vector>& basis() const noexcept { return basis_; }
  /// ambient_dim × dim, columns are the basis vectors.
  Matrix as_columns() const;

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  std::size_t ambient_dim_;
  std::vector<Vector> basis_;
};

Subspace operator+(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

/// (r, s, t): zero, negative and positive counts of any diagonal form.
struct Signature {
  std::size_t zero = 0;
  std::size_t negative = 0;
  std::size_t positive = 0;

  std::size_t dim() const noexcept { return zero + negative + positive; }
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// A basis of V whose first `radical_count` vectors span rad V. When
/// `orthogonal` is set, the remaining vectors are mutually g-orthogonal and
/// `alpha[a] = <e_a, e_a>` (zero for the radical block).
struct RadicalBasis {
  std::vector<Vector> vectors;
  std::size_t radical_count = 0;
  bool orthogonal = false;
  std::vector<Scalar> alpha;

  std::size_t dim() const noexcept { return vectors.size(); }
  Matrix as_columns() const;
};

/// A finite-dimensional real inner product space (V, g) in coordinates,
/// g possibly degenerate. Immutable; the canonical diagonalization is done
/// once at construction.
class Space {
 public:
  /// Throws DimensionMismatch if gram is not square and NonSymmetric if
  /// gram ≠ gramᵀ.
  explicit Space(Matrix gram);

  std::size_t dim() const noexcept { return gram_.rows(); }
  const Matrix& gram() const noexcept { return gram_; }

  Scalar inner(const Vector& u, const Vector& v) const;
  std::size_t rank() const noexcept { return dim() - signature_.zero; }
  Signature signature() const noexcept { return signature_; }
  bool nondegenerate() const noexcept { return signature_.zero == 0; }

  /// rad V = ker g, basis from `kernel(gram)`.
  const Subspace& radical() const noexcept { return radical_; }
  /// The canonical orthogonal radical basis (default pivot order).
  const RadicalBasis& canonical_basis() const noexcept { return canonical_basis_; }

  /// Gram matrix of the given vectors: entry (a, b) = <v_a, v_b>.
  Matrix gram_of(std::span<const Vector> vectors) const;
  /// Gram matrix in the basis whose columns are `basis`: basisᵀ·g·basis.
  Matrix gram_in(const Matrix& basis) const;

  void require_vector(const Vector& v) const;

 private:
  Matrix gram_;
  Signature signature_;
  Subspace radical_;
  RadicalBasis canonical_basis_;
};

Scalar inner(const Space& s, const Vector& u, const Vector& v);

/// {v : <v, x> = 0 for all x in the set}. Equal to the complement of the
/// span of the set.
Subspace orth_complement(const Space& s, std::span<const Vector> vectors);
Subspace orth_complement(const Space& s, const Subspace& sub);

Subspace radical(const Space& s);
Signature signature(const Space& s);

/// Columns of congruence_diagonalize(gram, pivot_order).p with the radical
/// columns moved to the front; relative order within each block is kept.
RadicalBasis orthogonal_radical_basis(const Space& s,
                                      std::span<const std::size_t> pivot_order = {});

/// Checks `basis` is a radical basis (first `radical_count` vectors span the
/// radical, all independent) and whether its non-radical part is
/// orthogonal; fills `orthogonal` and `alpha`. Throws DimensionMismatch,
/// SingularBasis or NotRadicalBasis.
RadicalBasis make_radical_basis(const Space& s, std::vector<Vector> vectors,
                                std::size_t radical_count);

/// Dimensions around a subspace U ⊆ V and the identities relating them.
struct DimensionReport {
  std::size_t dim_v = 0;
  std::size_t dim_u = 0;
  std::size_t dim_u_perp = 0;
  std::size_t dim_rad_cap_u = 0;
  /// dim U + dim U⊥ = dim V + dim(rad V ∩ U); holds for every U.
  bool identity_holds = false;
  /// dim V = dim U + dim U⊥ + dim(rad V ∩ U); fails whenever
  /// rad V ∩ U ≠ 0, e.g. U = V in a degenerate space.
  bool three_term_form_holds = false;
  bool radical_in_u_perp = false;
  /// (U⊥)⊥ = U + rad V.
  bool perp_perp_is_u_plus_radical = false;
};

DimensionReport check_dimension_identity(const Space& s, const Subspace& u);

}  // namespace radix
