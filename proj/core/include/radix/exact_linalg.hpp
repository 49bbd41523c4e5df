#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "radix/matrix.hpp"

namespace radix {

struct EchelonForm {
  Matrix reduced;                    // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column per nonzero row, ascending
};

EchelonForm reduced_row_echelon(Matrix m);

/// Null-space basis. One vector per free column, ascending; the free
/// variable is set to 1 and the others to 0, pivots read from the RREF.
std::vector<Vector> kernel(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Some x with m·x = b, or nullopt if the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

std::optional<Matrix> try_inverse(const Matrix& m);
/// Throws Error(SingularMatrix) when m is not invertible.
Matrix inverse(const Matrix& m);

/// pᵀ·g·p = d with p invertible and d diagonal.
struct Congruence {
  Matrix p;
  Matrix d;
};

/// Symmetric Gaussian elimination.
///
/// Pivot policy: at each step take the first remaining index (in
/// `pivot_order`, default 0..n-1) whose diagonal entry is nonzero and clear
/// its row and column. If every remaining diagonal entry is zero but some
/// off-diagonal (i, j) is not, replace e_i by e_i + e_j first; the new
/// diagonal entry is 2·g_ij. Columns of p are emitted in pivot order,
/// followed by the untouched indices, whose diagonal entries are zero.
///
/// Throws Error(NonSymmetric) if g ≠ gᵀ and Error(DimensionMismatch) if
/// `pivot_order` is not a permutation of 0..n-1.
Congruence congruence_diagonalize(const Matrix& g,
                                  std::span<const std::size_t> pivot_order = {});

/// Rescales each column of p so the matching diagonal entry becomes
/// sign(α)·f with f a positive integer free of small square factors (prime
/// squares up to 1000 are removed, and f itself is dropped to 1 when it is
/// a perfect square). The diagonal is ±1 only when every |α| is a rational
/// square, so the result is not orthonormal in general.
Congruence normalize(const Congruence& c);

/// Signs of the diagonal of a diagonal matrix.
struct SignCounts {
  std::size_t zero = 0;
  std::size_t negative = 0;
  std::size_t positive = 0;

  friend bool operator==(const SignCounts&, const SignCounts&) = default;
};

SignCounts count_signs(const Matrix& diagonal);

}  // namespace radix
