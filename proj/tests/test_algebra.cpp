#include <gtest/gtest.h>

#include <random>

#include "properties.hpp"

using namespace terminvar;

namespace {

// cofactor expansion, independent of the Bareiss routine
BigInt cofactor_det(const IntMatrix &M) {
  size_t n = M.rows();
  if (n == 1) return M(0, 0);
  BigInt d = 0;
  for (size_t c = 0; c < n; ++c) {
    IntMatrix minor(n - 1, n - 1);
    for (size_t i = 1; i < n; ++i)
      for (size_t j = 0, k = 0; j < n; ++j)
        if (j != c) minor(i - 1, k++) = M(i, j);
    d += (c % 2 ? -1 : 1) * M(0, c) * cofactor_det(minor);
  }
  return d;
}

IntMatrix random_matrix(std::mt19937 &rng, size_t r, size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix M(r, c);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j) M(i, j) = d(rng);
  return M;
}

} // namespace

TEST(Rational, CanonicalFormatting) {
  EXPECT_EQ(to_string(Rational(166, 3)), "166/3");
  EXPECT_EQ(to_string(Rational(-4, 6)), "-2/3");
  EXPECT_EQ(to_string(parse_rational("6/-3")), "-2");
  EXPECT_EQ(parse_rational("577/12"), Rational(577, 12));
  EXPECT_EQ(parse_rational("-2/4"), Rational(-1, 2));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
}

TEST(IntMatrix, DeterminantMatchesCofactorExpansion) {
  std::mt19937 rng(11);
  for (int k = 0; k < 200; ++k) {
    IntMatrix M = random_matrix(rng, 4, 4, -5, 5);
    EXPECT_EQ(M.determinant(), cofactor_det(M)) << M.str();
  }
}

TEST(IntMatrix, SmithNormalForm) {
  std::mt19937 rng(12);
  for (int k = 0; k < 100; ++k) {
    IntMatrix M = random_matrix(rng, 4, 4, -6, 6);
    SmithForm s = smith_normal_form(M);
    EXPECT_EQ(s.U * M * s.V, s.D);
    EXPECT_TRUE(s.U.is_unimodular());
    EXPECT_TRUE(s.V.is_unimodular());
    BigInt prod = 1;
    for (size_t i = 0; i < 4; ++i) {
      if (i < s.rank) {
        EXPECT_GT(s.diag(i), 0);
        if (i + 1 < s.rank) EXPECT_EQ(s.diag(i + 1) % s.diag(i), 0);
      }
      prod *= s.diag(i);
      for (size_t j = 0; j < 4; ++j)
        if (i != j) EXPECT_EQ(s.D(i, j), 0);
    }
    EXPECT_EQ(prod, abs(M.determinant()));
  }
}

TEST(Congruence, SolutionCountIsDeterminant) {
  std::mt19937 rng(13);
  for (int k = 0; k < 50; ++k) {
    IntMatrix M = random_matrix(rng, 4, 4, -2, 2);
    BigInt d = abs(M.determinant());
    if (d == 0 || d > 200) continue;
    std::vector<Rational> b{Rational(1, 3), Rational(0), Rational(2, 3), Rational(1, 3)};
    CongruenceSolution s = solve_congruence(M, b);
    ASSERT_FALSE(s.continuum);
    EXPECT_EQ(BigInt(s.points.size()), d);
    for (auto &x : s.points)
      for (int i = 0; i < 4; ++i) {
        Rational r = -b[i];
        for (int j = 0; j < 4; ++j) r += Rational(M(i, j)) * x.coord(j);
        EXPECT_EQ(boost::multiprecision::denominator(r), 1);
      }
  }
}

TEST(Congruence, SingularSystems) {
  IntMatrix Z(4, 4);
  EXPECT_TRUE(solve_congruence(Z, std::vector<Rational>(4)).continuum);
  EXPECT_TRUE(solve_congruence(Z, {Rational(1, 2), 0, 0, 0}).empty());
}

TEST(ExteriorSquare, IdentityAndMinusIdentity) {
  EXPECT_EQ(exterior_square(IntMatrix::identity(4)), IntMatrix::identity(6));
  IntMatrix M = IntMatrix::identity(4);
  for (int i = 0; i < 4; ++i) M(i, i) = -1;
  EXPECT_EQ(exterior_square(M), IntMatrix::identity(6));
}

TEST(ExteriorSquare, HomomorphismOnRandomUnimodularPairs) {
  auto v = props::exterior_square_homomorphism(100);
  EXPECT_TRUE(v.ok) << v.detail;
  EXPECT_EQ(v.checked, 100u);
}

TEST(FixedSubspace, RankOfInvariants) {
  // -id acts trivially on the exterior square
  IntMatrix M = IntMatrix::identity(4);
  for (int i = 0; i < 4; ++i) M(i, i) = -1;
  EXPECT_EQ(fixed_subspace_rank({exterior_square(M)}, 6), 6u);
  EXPECT_EQ(fixed_subspace_rank({}, 6), 6u);
}

TEST(Cyclotomic, Zeta12) {
  CycNumber z = CycNumber::zeta(1);
  CycNumber p(1);
  for (int k = 0; k < 12; ++k) p = p * z;
  EXPECT_EQ(p, CycNumber(1));
  EXPECT_EQ(CycNumber::i() * CycNumber::i(), CycNumber(-1));
  EXPECT_EQ(z * z.inverse(), CycNumber(1));
}
