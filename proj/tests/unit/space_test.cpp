#include <gtest/gtest.h>

#include <algorithm>

#include "generators.hpp"
#include "oracles.hpp"
#include "radix/error.hpp"
#include "radix/space.hpp"

namespace radix {
namespace {

using testing::Rng;

Space diag_space() { return Space(Matrix::diagonal({0, -1, 2})); }

Vector e(std::size_t n, std::size_t i) { return unit_vector(n, i - 1); }

TEST(Space, RejectsNonSymmetricAndNonSquare) {
  try {
    Space(Matrix{{1, 2}, {3, 1}});
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::NonSymmetric);
  }
  EXPECT_THROW(Space(Matrix(2, 3)), Error);
}

TEST(Inner, KnownValues) {
  const Space s = diag_space();
  EXPECT_EQ(inner(s, e(3, 2), e(3, 2)), -1);
  EXPECT_EQ(inner(s, zero_vector(3), Vector{1, 2, 3}), 0);
  // 0·1·1 + (−1)·1·(−1) + 2·1·2
  EXPECT_EQ(inner(s, {1, 1, 1}, {1, -1, 2}), 5);
}

TEST(Inner, SymmetricAndChecksLength) {
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = testing::uniform_int(rng, 1, 6);
    const Space s = testing::random_space(rng, n);
    const Vector u = testing::random_vector(rng, n);
    const Vector v = testing::random_vector(rng, n);
    EXPECT_EQ(s.inner(u, v), s.inner(v, u));
  }
  try {
    diag_space().inner({1, 0}, {1, 0, 0});
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::DimensionMismatch);
  }
}

TEST(OrthComplement, KnownValues) {
  const Space s = diag_space();
  const Subspace perp = orth_complement(s, Subspace(3, {e(3, 2)}));
  EXPECT_EQ(perp, Subspace(3, {e(3, 1), e(3, 3)}));

  EXPECT_EQ(orth_complement(s, Subspace(3)), Subspace::whole(3));

  const Space id(Matrix::identity(3));
  EXPECT_EQ(orth_complement(id, Subspace::whole(3)).dim(), 0u);
}

TEST(OrthComplement, WrongAmbientDimension) {
  EXPECT_THROW(orth_complement(diag_space(), Subspace(2)), Error);
}

TEST(Radical, KnownValues) {
  EXPECT_EQ(radical(diag_space()), Subspace(3, {e(3, 1)}));
  EXPECT_EQ(radical(Space(Matrix::identity(4))).dim(), 0u);
  EXPECT_EQ(radical(Space(Matrix{{1, 1}, {1, 1}})), Subspace(2, {Vector{1, -1}}));
}

TEST(Signature, KnownValues) {
  EXPECT_EQ(signature(diag_space()), (Signature{1, 1, 1}));
  EXPECT_EQ(signature(Space(Matrix{{0, 1}, {1, 0}})), (Signature{0, 1, 1}));
  EXPECT_EQ(signature(Space(Matrix::zero(3, 3))), (Signature{3, 0, 0}));
}

TEST(Signature, MatchesCharacteristicPolynomialOracle) {
  Rng rng(31);
  for (int i = 0; i < 150; ++i) {
    const std::size_t n = testing::uniform_int(rng, 1, 6);
    const Space s = testing::random_space(rng, n);
    EXPECT_EQ(s.signature(), testing::signature_oracle(s.gram()));
    EXPECT_EQ(s.signature().dim(), n);
    EXPECT_EQ(s.signature().zero, s.radical().dim());
  }
}

TEST(OrthogonalRadicalBasis, KnownValues) {
  const RadicalBasis b = orthogonal_radical_basis(diag_space());
  EXPECT_EQ(b.radical_count, 1u);
  EXPECT_EQ(b.vectors, (std::vector<Vector>{e(3, 1), e(3, 2), e(3, 3)}));
  EXPECT_EQ(b.alpha, (std::vector<Scalar>{0, -1, 2}));

  const Space hyp(Matrix{{0, 1}, {1, 0}});
  const RadicalBasis h = orthogonal_radical_basis(hyp);
  ASSERT_EQ(h.dim(), 2u);
  EXPECT_EQ(hyp.inner(h.vectors[0], h.vectors[1]), 0);
  EXPECT_LT(hyp.inner(h.vectors[0], h.vectors[0]) * hyp.inner(h.vectors[1], h.vectors[1]), 0);

  const RadicalBasis id = orthogonal_radical_basis(Space(Matrix::identity(2)));
  EXPECT_EQ(id.radical_count, 0u);
  EXPECT_EQ(id.vectors, (std::vector<Vector>{e(2, 1), e(2, 2)}));
}

TEST(OrthogonalRadicalBasis, GramIsDiagonalWithRadicalFirst) {
  Rng rng(41);
  for (int i = 0; i < 150; ++i) {
    const std::size_t n = testing::uniform_int(rng, 1, 7);
    const Space s = testing::random_space(rng, n);
    std::vector<std::size_t> order(n);
    for (std::size_t k = 0; k < n; ++k) order[k] = k;
    std::shuffle(order.begin(), order.end(), rng);
    const RadicalBasis b = orthogonal_radical_basis(s, order);
    const Matrix g = s.gram_in(b.as_columns());
    EXPECT_EQ(g, Matrix::diagonal(b.alpha));
    EXPECT_EQ(b.radical_count, s.radical().dim());
    for (std::size_t a = 0; a < n; ++a) EXPECT_EQ(b.alpha[a] == 0, a < b.radical_count);
    EXPECT_EQ(rank(b.as_columns()), n);
  }
}

TEST(MakeRadicalBasis, ValidatesStructure) {
  const Space s = diag_space();
  const RadicalBasis ok = make_radical_basis(s, {e(3, 1), Vector{1, 1, 0}, e(3, 3)}, 1);
  EXPECT_TRUE(ok.orthogonal);
  EXPECT_EQ(ok.alpha, (std::vector<Scalar>{0, -1, 2}));

  const RadicalBasis skew = make_radical_basis(s, {e(3, 1), Vector{0, 1, 1}, e(3, 3)}, 1);
  EXPECT_FALSE(skew.orthogonal);

  try {
    make_radical_basis(s, {e(3, 2), e(3, 1), e(3, 3)}, 1);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::NotRadicalBasis);
  }
  try {
    make_radical_basis(s, {e(3, 1), e(3, 1), e(3, 3)}, 1);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::SingularBasis);
  }
}

TEST(DimensionIdentity, KnownValues) {
  const Space s = diag_space();

  const DimensionReport a = check_dimension_identity(s, Subspace(3, {e(3, 2)}));
  EXPECT_EQ(a.dim_u, 1u);
  EXPECT_EQ(a.dim_u_perp, 2u);
  EXPECT_EQ(a.dim_rad_cap_u, 0u);
  EXPECT_TRUE(a.identity_holds);
  EXPECT_TRUE(a.three_term_form_holds);  // 3 = 1 + 2 + 0

  const DimensionReport b = check_dimension_identity(s, s.radical());
  EXPECT_EQ(b.dim_rad_cap_u, b.dim_u);
  EXPECT_TRUE(b.identity_holds);

  // U = V: dim U = 3, dim U⊥ = 1, dim(rad ∩ U) = 1. The three-term form
  // would need 3 = 5; the two-sided form 3 + 1 = 3 + 1 holds.
  const DimensionReport c = check_dimension_identity(s, Subspace::whole(3));
  EXPECT_EQ(c.dim_u, 3u);
  EXPECT_EQ(c.dim_u_perp, 1u);
  EXPECT_EQ(c.dim_rad_cap_u, 1u);
  EXPECT_FALSE(c.three_term_form_holds);
  EXPECT_TRUE(c.identity_holds);
  EXPECT_TRUE(c.radical_in_u_perp);
  EXPECT_TRUE(c.perp_perp_is_u_plus_radical);
}

// Every subspace spanned by one or two vectors with entries in {−1, 0, 1},
// over a family of small spaces. Dimensions come from minors only:
// dim U⊥ = n − rank(Uᵀ g) and dim(rad ∩ U) = dim U − rank(g U).
TEST(DimensionIdentity, ExhaustiveSmallSpaceOracle) {
  std::vector<Matrix> grams = {Matrix::diagonal({0, -1, 2}), Matrix::diagonal({0, 0, 1}),
                               Matrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 0}}, Matrix::zero(3, 3),
                               Matrix{{1, 1, 0}, {1, 1, 0}, {0, 0, -1}}, Matrix::identity(3)};
  std::vector<Vector> pool;
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b)
      for (int c = -1; c <= 1; ++c)
        if (a || b || c) pool.push_back({a, b, c});

  std::size_t checked = 0;
  std::size_t three_term_failures = 0;
  for (const auto& g : grams) {
    const Space s(g);
    for (std::size_t i = 0; i < pool.size(); ++i) {
      for (std::size_t j = i; j < pool.size(); ++j) {
        std::vector<Vector> gens{pool[i]};
        if (j != i) gens.push_back(pool[j]);
        const Matrix u_cols = Matrix::from_columns(3, gens);
        const std::size_t dim_u = testing::rank_oracle(u_cols);
        const std::size_t dim_u_perp = 3 - testing::rank_oracle(u_cols.transpose() * g);
        const std::size_t dim_cap = dim_u - testing::rank_oracle(g * u_cols);

        const DimensionReport r = check_dimension_identity(s, Subspace::span(3, gens));
        ASSERT_EQ(r.dim_u, dim_u);
        ASSERT_EQ(r.dim_u_perp, dim_u_perp);
        ASSERT_EQ(r.dim_rad_cap_u, dim_cap);
        ASSERT_EQ(dim_u + dim_u_perp, 3 + dim_cap);
        ASSERT_TRUE(r.identity_holds);
        ASSERT_EQ(r.three_term_form_holds, dim_cap == 0);
        ASSERT_TRUE(r.radical_in_u_perp);
        ASSERT_TRUE(r.perp_perp_is_u_plus_radical);
        if (!r.three_term_form_holds) ++three_term_failures;
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 2000u);
  EXPECT_GT(three_term_failures, 0u);
}

TEST(OrthComplement, SetProperties) {
  Rng rng(77);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = testing::uniform_int(rng, 1, 5);
    const Space s = testing::random_space(rng, n);
    std::vector<Vector> set_s;
    std::vector<Vector> set_t;
    std::vector<Vector> shared;
    for (long k = testing::uniform_int(rng, 0, 2); k > 0; --k) shared.push_back(testing::random_vector(rng, n));
    set_s = shared;
    set_t = shared;
    for (long k = testing::uniform_int(rng, 0, 2); k > 0; --k) set_s.push_back(testing::random_vector(rng, n));
    for (long k = testing::uniform_int(rng, 0, 2); k > 0; --k) set_t.push_back(testing::random_vector(rng, n));
    std::vector<Vector> set_union = set_s;
    set_union.insert(set_union.end(), set_t.begin(), set_t.end());

    const Subspace s_perp = orth_complement(s, set_s);
    const Subspace t_perp = orth_complement(s, set_t);

    // S ⊆ S ∪ T ⇒ (S ∪ T)⊥ ⊆ S⊥
    EXPECT_TRUE(s_perp.contains(orth_complement(s, set_union)));
    EXPECT_EQ(orth_complement(s, set_union), intersect(s_perp, t_perp));
    EXPECT_TRUE(orth_complement(s, shared).contains(s_perp + t_perp));
    // S⊥ = (span S)⊥
    EXPECT_EQ(s_perp, orth_complement(s, Subspace::span(n, set_s)));
    // S ⊆ (S⊥)⊥ and (U⊥)⊥ = U + rad V
    const Subspace u = Subspace::span(n, set_s);
    const Subspace perp_perp = orth_complement(s, s_perp);
    for (const auto& v : set_s) EXPECT_TRUE(perp_perp.contains(v));
    EXPECT_EQ(perp_perp, u + s.radical());
    EXPECT_TRUE(s_perp.contains(s.radical()));
  }
}

TEST(Subspace, SpanDropsDependentVectors) {
  const Subspace u = Subspace::span(3, std::vector<Vector>{{1, 0, 0}, {2, 0, 0}, {0, 1, 0}});
  EXPECT_EQ(u.dim(), 2u);
  EXPECT_EQ(u.basis()[1], (Vector{0, 1, 0}));
  EXPECT_THROW(Subspace(3, {{1, 0, 0}, {2, 0, 0}}), Error);
}

}  // namespace
}  // namespace radix
