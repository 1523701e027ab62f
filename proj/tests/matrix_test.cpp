#include <gtest/gtest.h>

#include <random>

#include "weyl/error.hpp"
#include "weyl/matrix.hpp"

using namespace weyl;

namespace {

Matrix randomMatrix(std::mt19937& rng, std::size_t r, std::size_t c, int range = 3) {
  std::uniform_int_distribution<int> d(-range, range);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

// Determinant by cofactor expansion; independent of elimination.
Rational det(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Rational acc = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    Matrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0, kk = 0; k < n; ++k)
        if (k != c) minor(r - 1, kk++) = m(r, k);
    acc += (c % 2 == 0 ? 1 : -1) * m(0, c) * det(minor);
  }
  return acc;
}

}  // namespace

TEST(Matrix, KernelIsAnnihilatedAndHasComplementaryDimension) {
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    Matrix a = randomMatrix(rng, 1 + t % 4, 1 + t % 5, 1);
    Matrix k = kernelBasis(a);
    EXPECT_TRUE((a * k).isZero());
    EXPECT_EQ(rank(a) + k.cols(), a.cols());
    EXPECT_EQ(rank(k), k.cols());
  }
}

TEST(Matrix, InverseAndSolve) {
  std::mt19937 rng(11);
  for (int t = 0; t < 30; ++t) {
    Matrix a = randomMatrix(rng, 3, 3);
    if (det(a) == 0) {
      EXPECT_THROW(inverse(a), Error);
      continue;
    }
    EXPECT_EQ(a * inverse(a), Matrix::identity(3));
    std::vector<Rational> b{1, 2, 3};
    auto x = solve(a, b);
    ASSERT_TRUE(x);
    EXPECT_EQ(a.apply(*x), b);
  }
  Matrix z(2, 2);
  EXPECT_FALSE(solve(z, {1, 0}));
}

TEST(Matrix, CharacteristicPolynomialMatchesCofactorDeterminant) {
  std::mt19937 rng(3);
  for (int t = 0; t < 20; ++t) {
    Matrix a = randomMatrix(rng, 3, 3);
    auto c = characteristicPolynomial(a);
    ASSERT_EQ(c.size(), 4u);
    for (int s = -2; s <= 2; ++s) {
      Rational value = 0;
      for (std::size_t k = c.size(); k-- > 0;) value = value * s + c[k];
      EXPECT_EQ(value, det(Matrix::scalar(3, s) - a));
    }
  }
}

TEST(Matrix, NilpotencyOrder) {
  Matrix j(3, 3);
  j(0, 1) = 1;
  j(1, 2) = 1;
  EXPECT_EQ(nilpotencyOrder(j, 10), 3u);
  EXPECT_EQ(nilpotencyOrder(Matrix(0, 0), 10), 1u);
  EXPECT_EQ(nilpotencyOrder(Matrix(2, 2), 10), 1u);
  EXPECT_FALSE(nilpotencyOrder(Matrix::identity(2), 10));
  EXPECT_FALSE(nilpotencyOrder(j, 2));
}

TEST(Subquotient, DimensionAndCoordinates) {
  std::mt19937 rng(5);
  for (int t = 0; t < 40; ++t) {
    // chain complex U -> V -> W built as incoming = k * s so that out*in = 0
    Matrix out = randomMatrix(rng, 2, 5, 1);
    Matrix ker = kernelBasis(out);
    Matrix in = ker * randomMatrix(rng, ker.cols(), 2, 1);
    ASSERT_TRUE((out * in).isZero());
    auto h = Subquotient::compute(5, out, in);
    EXPECT_EQ(h.dim(), 5 - rank(out) - rank(in));
    for (std::size_t k = 0; k < h.dim(); ++k) {
      auto v = h.lifts()[k];
      // adding a boundary does not change coordinates
      auto w = v;
      auto bd = in.column(0);
      for (std::size_t i = 0; i < 5; ++i) w[i] += 2 * bd[i];
      auto cv = h.coordinates(v);
      EXPECT_EQ(h.coordinates(w), cv);
      for (std::size_t i = 0; i < cv.size(); ++i) EXPECT_EQ(cv[i], i == k ? 1 : 0);
    }
  }
}

TEST(Subquotient, InducedMapOfIdentityIsIdentity) {
  Matrix out(1, 3);
  out(0, 0) = 1;
  Matrix in(3, 1);
  in(1, 0) = 1;
  auto h = Subquotient::compute(3, out, in);
  ASSERT_EQ(h.dim(), 1u);
  EXPECT_EQ(h.induced(Matrix::identity(3), h), Matrix::identity(1));
  auto all = Subquotient::compute(2, Matrix(), Matrix());
  EXPECT_EQ(all.dim(), 2u);
}
