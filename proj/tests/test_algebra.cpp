#include <gtest/gtest.h>

#include "octfactor/algebra.hpp"
#include "octfactor/errors.hpp"
#include "octfactor/text.hpp"
#include "oracles.hpp"
#include "printers.hpp"

using namespace octfactor;

namespace {

class AlgebraTest : public ::testing::Test {
 protected:
  AlgebraRef alg = make_algebra();
  Octonion e(std::size_t k) const { return Octonion::basis(alg, k); }
  Octonion O(const char* s) const { return parse_octonion(s, alg); }
  Octonion one() const { return Octonion::scalar(alg, 1); }
};

}  // namespace

TEST_F(AlgebraTest, BasisProducts) {
  EXPECT_EQ(e(1) * e(2), e(3));
  EXPECT_EQ(e(2) * e(1), -e(3));
  EXPECT_EQ(e(4) * e(4), Octonion::scalar(alg, -1));
  EXPECT_EQ(e(1) * e(4), e(5));
  EXPECT_EQ(e(3) * e(4), e(7));
}

TEST_F(AlgebraTest, WorkedProductFromTheWedderburnExample) {
  EXPECT_EQ(O("1 + il") * O("-1 + jl"), O("-1 - ij - il + jl"));
}

TEST_F(AlgebraTest, Conjugation) {
  EXPECT_EQ(one().conj(), one());
  EXPECT_EQ(O("i + l").conj(), O("-i - l"));
  EXPECT_EQ(O("1/2 + i").conj().conj(), O("1/2 + i"));
}

TEST_F(AlgebraTest, TraceAndNorm) {
  Octonion z = O("1/2 + 1/2 ij + 1/2 il + 1/2 jl");
  EXPECT_EQ(z.trace(), 1);
  EXPECT_EQ(z.norm(), 1);
  EXPECT_EQ(e(2).trace(), 0);
  EXPECT_EQ(e(2).norm(), 1);
  EXPECT_EQ(Octonion(alg).norm(), 0);
}

TEST_F(AlgebraTest, NormAgreesWithConjTimesZ) {
  oracle::Random rnd(3);
  for (int t = 0; t < 100; ++t) {
    Octonion z = rnd.octonion(alg, 10, 4);
    Octonion n = z.conj() * z;
    EXPECT_TRUE(n.is_central());
    EXPECT_EQ(n.real(), z.norm());
  }
}

TEST_F(AlgebraTest, Inverses) {
  EXPECT_EQ(e(1).inverse(), -e(1));
  EXPECT_EQ(O("1 + il").inverse(), O("1/2 - 1/2 il"));
  EXPECT_EQ(Octonion::scalar(alg, 2).inverse(), Octonion::scalar(alg, Rational(1, 2)));
  EXPECT_THROW(Octonion(alg).inverse(), ZeroDivisor);
}

TEST_F(AlgebraTest, SplitParamsExposeZeroDivisors) {
  AlgebraRef split = make_algebra({1, -1, -1, 8});
  Octonion z = Octonion::scalar(split, 1) + Octonion::basis(split, 1);  // 1 + i with i^2 = 1
  EXPECT_EQ(z.norm(), 0);
  EXPECT_THROW(z.inverse(), ZeroDivisor);
  EXPECT_FALSE(norm_positive_definite(*split));
  EXPECT_TRUE(norm_positive_definite(*alg));
}

TEST_F(AlgebraTest, InnerConjugate) {
  EXPECT_EQ(inner_conjugate(O("1 + il"), O("-1/2 + 1/2 ij - 1/2 il + 1/2 jl")),
            O("-1/2 - 1/2 ij - 1/2 il + 1/2 jl"));
  Octonion c = Octonion::scalar(alg, Rational(7, 3));
  EXPECT_EQ(inner_conjugate(O("2 - j + 3jl"), c), c);
  // Quaternion subalgebra: (i - j) j (i - j)^{-1}, checked with the recursive oracle too.
  Octonion u = O("i - j");
  EXPECT_EQ(inner_conjugate(u, e(2)), -e(1));
  EXPECT_EQ(oracle::mul(oracle::mul(u, e(2)), u.inverse()), -e(1));
  EXPECT_THROW(inner_conjugate(Octonion(alg), e(1)), ZeroDivisor);
}

TEST_F(AlgebraTest, InnerConjugatePreservesTraceAndNorm) {
  oracle::Random rnd(17);
  for (int t = 0; t < 200; ++t) {
    Octonion u = rnd.nonzero_octonion(alg, 5, 3);
    Octonion z = rnd.octonion(alg, 5, 3);
    Octonion w = inner_conjugate(u, z);
    EXPECT_EQ(w.trace(), z.trace());
    EXPECT_EQ(w.norm(), z.norm());
  }
}

TEST_F(AlgebraTest, BasisTableMatchesRecursiveDoubling) {
  for (const AlgebraParams& p : {AlgebraParams{}, AlgebraParams{-2, -3, -5, 8}, AlgebraParams{3, -7, 2, 8},
                                 AlgebraParams{-1, -1, -1, 4}}) {
    AlgebraRef a = make_algebra(p);
    BasisTable table = basis_table(a);
    for (int r = 0; r < p.dim; ++r) {
      for (int c = 0; c < p.dim; ++c) {
        EXPECT_EQ(table[r][c], oracle::mul(Octonion::basis(a, r), Octonion::basis(a, c)))
            << "row " << r << " col " << c << " gamma " << p.gamma;
      }
    }
    EXPECT_EQ(table[1][2], Octonion::basis(a, 3));
  }
  BasisTable t = basis_table(alg);
  EXPECT_EQ(t[4][4], Octonion::scalar(alg, -1));
  EXPECT_EQ(t[5][6], oracle::mul(e(5), e(6)));
}

TEST_F(AlgebraTest, RandomProductsMatchRecursiveDoubling) {
  oracle::Random rnd(23);
  AlgebraRef other = make_algebra({-2, 3, -5, 8});
  for (int t = 0; t < 200; ++t) {
    for (const auto& a : {alg, other}) {
      Octonion x = rnd.octonion(a, 6, 3);
      Octonion y = rnd.octonion(a, 6, 3);
      EXPECT_EQ(x * y, oracle::mul(x, y));
    }
  }
}

TEST_F(AlgebraTest, MismatchedAlgebrasThrow) {
  AlgebraRef q = make_algebra({-1, -1, -1, 4});
  AlgebraRef o2 = make_algebra({-1, -2, -1, 8});
  EXPECT_THROW(e(1) * Octonion::basis(q, 1), AlgebraMismatch);
  EXPECT_THROW(e(1) + Octonion::basis(o2, 1), AlgebraMismatch);
  // Equal parameters in separate handles interoperate.
  EXPECT_EQ(e(1) * Octonion::basis(make_algebra(), 2), e(3));
}

TEST_F(AlgebraTest, QuaternionAlgebraRejectsLCoordinates) {
  AlgebraRef q = make_algebra({-1, -1, -1, 4});
  EXPECT_THROW(Octonion::basis(q, 4), std::invalid_argument);
  EXPECT_THROW(make_algebra({0, -1, -1, 8}), std::invalid_argument);
  EXPECT_THROW(make_algebra({-1, -1, -1, 6}), std::invalid_argument);
}

TEST_F(AlgebraTest, PowersAreConsistent) {
  Octonion z = O("1 - 2i + 1/3 jl");
  EXPECT_EQ(power(z, 0), one());
  EXPECT_EQ(power(z, 3), z * (z * z));
  EXPECT_EQ(power(z, 3), (z * z) * z);
}

TEST(AlgebraIdentities, HoldForNonDefaultParameters) {
  oracle::Random rnd(29);
  for (const AlgebraParams& p : {AlgebraParams{-2, -3, -5, 8}, AlgebraParams{3, -7, 2, 8}, AlgebraParams{-1, 5, 1, 4}}) {
    AlgebraRef a = make_algebra(p);
    for (int t = 0; t < 60; ++t) {
      Octonion r = rnd.octonion(a, 5, 2), s = rnd.octonion(a, 5, 2), u = rnd.octonion(a, 5, 2);
      EXPECT_EQ((r * s).conj(), s.conj() * r.conj());
      EXPECT_TRUE((r * r - r * r.trace() + Octonion::scalar(a, r.norm())).is_zero());
      EXPECT_EQ((r * s).norm(), r.norm() * s.norm());
      EXPECT_EQ((r * s) * (u * r), r * ((s * u) * r));
      EXPECT_EQ((r * r) * s, r * (r * s));
      EXPECT_EQ((r * s) * s, r * (s * s));
    }
  }
}
