#include <gtest/gtest.h>

#include <map>
#include <random>
#include <utility>
#include <vector>

#include "weyl/element.hpp"
#include "weyl/element_io.hpp"
#include "weyl/error.hpp"

using namespace weyl;

namespace {

WeylElement P(const char* s, std::size_t n) { return parseElement(s, n); }

// Independent oracle: normal-order a word of generators by single swaps
// d_i x_i -> x_i d_i + 1, never using the closed reordering formula.
struct Gen {
  bool isD;
  std::size_t index;
  auto operator<=>(const Gen&) const = default;
};
using Word = std::vector<Gen>;

void normalizeWord(const Word& w, const Rational& c, std::size_t n,
                   std::map<Monomial, Rational>& out) {
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    if (w[k].isD && !w[k + 1].isD) {
      Word swapped = w;
      std::swap(swapped[k], swapped[k + 1]);
      normalizeWord(swapped, c, n, out);
      if (w[k].index == w[k + 1].index) {
        Word shorter;
        for (std::size_t j = 0; j < w.size(); ++j)
          if (j != k && j != k + 1) shorter.push_back(w[j]);
        normalizeWord(shorter, c, n, out);
      }
      return;
    }
  }
  Monomial m = Monomial::one(n);
  for (const Gen& g : w) (g.isD ? m.d : m.x)[g.index] += 1;
  out[m] += c;
}

Word wordOf(const Monomial& m) {
  Word w;
  for (std::size_t i = 0; i < m.n(); ++i)
    for (unsigned e = 0; e < m.x[i]; ++e) w.push_back({false, i});
  for (std::size_t i = 0; i < m.n(); ++i)
    for (unsigned e = 0; e < m.d[i]; ++e) w.push_back({true, i});
  return w;
}

WeylElement oracleProduct(const WeylElement& a, const WeylElement& b) {
  std::map<Monomial, Rational> acc;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      Word w = wordOf(ma);
      Word wb = wordOf(mb);
      w.insert(w.end(), wb.begin(), wb.end());
      normalizeWord(w, ca * cb, a.n(), acc);
    }
  }
  WeylElement r(a.n());
  for (const auto& [m, c] : acc) r.addTerm(m, c);
  return r;
}

WeylElement randomElement(std::mt19937& rng, std::size_t n, int maxTerms, unsigned maxExp) {
  std::uniform_int_distribution<int> termCount(1, maxTerms);
  std::uniform_int_distribution<unsigned> expo(0, maxExp);
  std::uniform_int_distribution<int> coeff(-5, 5);
  WeylElement e(n);
  const int t = termCount(rng);
  for (int k = 0; k < t; ++k) {
    Monomial m = Monomial::one(n);
    for (std::size_t i = 0; i < n; ++i) {
      m.x[i] = expo(rng);
      m.d[i] = expo(rng);
    }
    int c = coeff(rng);
    if (c == 0) c = 1;
    e.addTerm(m, Rational(c, 1 + (k % 3)));
  }
  return e;
}

WeylElement randomHomogeneous(std::mt19937& rng, std::size_t n, int maxTerms, unsigned maxExp) {
  WeylElement e = randomElement(rng, n, maxTerms, maxExp);
  const int deg = e.terms().begin()->first.degree();
  WeylElement h(n);
  for (const auto& [m, c] : e.terms())
    if (m.degree() == deg) h.addTerm(m, c);
  return h;
}

}  // namespace

TEST(WeylElement, AddExamples) {
  EXPECT_TRUE((P("x1*d1", 1) + P("-x1*d1", 1)).isZero());
  WeylElement s = P("d1", 1) + P("x1", 1);
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(toString(s), "x1 + d1");
  EXPECT_EQ(eulerOperator(2) + eulerOperator(2), P("2*x1*d1 + 2*x2*d2", 2));
  EXPECT_THROW(P("x1", 1) + P("x1", 2), DimensionMismatch);
}

TEST(WeylElement, MulExamples) {
  EXPECT_EQ(mul(P("d1", 1), P("x1", 1)), P("x1*d1 + 1", 1));
  EXPECT_EQ(mul(P("d1^2", 1), P("x1^2", 1)), P("x1^2*d1^2 + 4*x1*d1 + 2", 1));
  EXPECT_EQ(toString(mul(P("x1", 2), P("d2", 2))), "x1*d2");
  EXPECT_THROW(mul(P("x1", 1), P("x1", 2)), DimensionMismatch);
}

TEST(WeylElement, MulMatchesSwapOracle) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + trial % 3;
    WeylElement a = randomElement(rng, n, 3, 2);
    WeylElement b = randomElement(rng, n, 3, 2);
    ASSERT_EQ(mul(a, b), oracleProduct(a, b)) << toString(a) << " * " << toString(b);
  }
}

TEST(WeylElement, DefiningRelations) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const WeylElement one = WeylElement::constant(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        auto xi = WeylElement::x(n, i), xj = WeylElement::x(n, j);
        auto di = WeylElement::d(n, i), dj = WeylElement::d(n, j);
        EXPECT_EQ(xi * xj, xj * xi);
        EXPECT_EQ(di * dj, dj * di);
        if (i == j) {
          EXPECT_EQ(di * xi - xi * di, one);
        } else {
          EXPECT_EQ(dj * xi, xi * dj);
        }
      }
    }
  }
}

TEST(WeylElement, Associativity) {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 3;
    auto a = randomElement(rng, n, 4, 3);
    auto b = randomElement(rng, n, 4, 3);
    auto c = randomElement(rng, n, 4, 3);
    ASSERT_EQ(mul(mul(a, b), c), mul(a, mul(b, c)));
  }
}

TEST(WeylElement, EulerOperator) {
  EXPECT_EQ(toString(eulerOperator(1)), "x1*d1");
  EXPECT_EQ(toString(eulerOperator(2)), "x1*d1 + x2*d2");
  EXPECT_EQ(degreeOf(eulerOperator(3)).value, 0);
  for (unsigned a = 1; a <= 4; ++a) EXPECT_EQ(degreeOf(power(eulerOperator(2), a)).value, 0);
  EXPECT_THROW(eulerOperator(0), Error);
}

TEST(WeylElement, DegreeOf) {
  EXPECT_EQ(degreeOf(P("x1^2*d1", 1)).value, 1);
  EXPECT_FALSE(degreeOf(P("x1 + d1", 1)).homogeneous());
  EXPECT_THROW(degreeOf(WeylElement(2)), Error);
}

TEST(WeylElement, Transpose) {
  EXPECT_EQ(transpose(P("x1*d1", 1)), P("-x1*d1 - 1", 1));
  EXPECT_EQ(transpose(P("x1^2", 1)), P("x1^2", 1));
  const WeylElement w = P("d1^2*x1", 1);
  EXPECT_EQ(transpose(transpose(w)), w);
  for (std::size_t n = 1; n <= 3; ++n) {
    EXPECT_EQ(transpose(eulerOperator(n)),
              -eulerOperator(n) - WeylElement::constant(n, static_cast<long>(n)));
  }
}

TEST(WeylElement, TransposeIsDegreePreservingAntiAutomorphism) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 3;
    auto a = randomElement(rng, n, 3, 2);
    auto b = randomElement(rng, n, 3, 2);
    ASSERT_EQ(transpose(mul(a, b)), mul(transpose(b), transpose(a)));
    ASSERT_EQ(transpose(transpose(a)), a);
    auto h = randomHomogeneous(rng, n, 3, 3);
    ASSERT_EQ(degreeOf(transpose(h)).value, degreeOf(h).value);
  }
}

TEST(WeylElement, Power) {
  EXPECT_EQ(power(eulerOperator(1), 2), P("x1^2*d1^2 + x1*d1", 1));
  EXPECT_EQ(power(P("x1 + d2^3", 2), 0), WeylElement::constant(2, 1));
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = randomElement(rng, 2, 3, 2);
    for (unsigned k = 0; k <= 3; ++k) ASSERT_EQ(transpose(power(a, k)), power(transpose(a), k));
  }
}

TEST(WeylElement, GradingIsAdditive) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 3;
    auto a = randomHomogeneous(rng, n, 3, 3);
    auto b = randomHomogeneous(rng, n, 3, 3);
    auto ab = mul(a, b);
    if (ab.isZero()) continue;
    ASSERT_EQ(degreeOf(ab).value, *degreeOf(a).value + *degreeOf(b).value);
  }
}

TEST(WeylElement, EulerCommutationIdentities) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const WeylElement E = eulerOperator(n);
    for (int e = -5; e <= 5; ++e) {
      auto shifted = [&](int c) { return E - WeylElement::constant(n, c); };
      for (std::size_t i = 0; i < n; ++i) {
        const auto xi = WeylElement::x(n, i);
        const auto di = WeylElement::d(n, i);
        EXPECT_EQ(shifted(e) * xi, xi * shifted(e - 1));
        EXPECT_EQ(shifted(e) * di, di * shifted(e + 1));
        for (unsigned t = 1; t <= 4; ++t) {
          EXPECT_EQ(shifted(e) * power(xi, t), power(xi, t) * shifted(e - static_cast<int>(t)));
          EXPECT_EQ(shifted(e) * power(di, t), power(di, t) * shifted(e + static_cast<int>(t)));
        }
      }
    }
  }
}

TEST(ElementIO, ParseExamples) {
  EXPECT_EQ(P("x1*d1 + x2*d2", 2), eulerOperator(2));
  EXPECT_EQ(P("E", 3), P("x1*d1+x2*d2+x3*d3", 3));
  WeylElement q = P("3/2 x1^2", 1);
  ASSERT_EQ(q.size(), 1u);
  EXPECT_EQ(q.terms().begin()->second, Rational(3, 2));
  EXPECT_EQ(P(" ( x1 + d1 )^2 ", 1), P("x1^2 + 2*x1*d1 + d1^2 + 1", 1));
  EXPECT_EQ(P("4/6", 1), WeylElement::constant(1, Rational(2, 3)));
}

TEST(ElementIO, ParseErrors) {
  EXPECT_THROW(P("x3", 2), ParseError);
  EXPECT_THROW(P("x0", 2), ParseError);
  EXPECT_THROW(P("x1 +", 2), ParseError);
  EXPECT_THROW(P("y1", 2), ParseError);
  EXPECT_THROW(P("1/0", 2), ParseError);
  try {
    P("x1 + q", 1);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
}

TEST(ElementIO, RoundTripOnCanonicalForms) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 3;
    auto a = randomElement(rng, n, 5, 3);
    const std::string printed = toString(a);
    ASSERT_EQ(parseElement(printed, n), a) << printed;
    ASSERT_EQ(toString(parseElement(printed, n)), printed);
  }
  EXPECT_EQ(toString(WeylElement(2)), "0");
  EXPECT_EQ(parseElement("0", 2), WeylElement(2));
}
