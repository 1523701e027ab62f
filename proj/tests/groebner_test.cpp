#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "weyl/element_io.hpp"
#include "weyl/error.hpp"
#include "weyl/groebner.hpp"
#include "weyl/resolution.hpp"

using namespace weyl;

namespace {

WeylElement P(const char* s, std::size_t n) { return parseElement(s, n); }

GroebnerBasis gb(const char* s, std::size_t n) { return buchberger(parseElementList(s, n)); }

std::vector<std::size_t> ranks(const FreeResolution& r) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k <= r.length(); ++k) out.push_back(r.rank(k));
  return out;
}

}  // namespace

TEST(TermOrder, DegreeCompatibleAndVariableOrder) {
  TermOrder o;
  EXPECT_GT(o.compare(P("x1^2", 2).terms().begin()->first, P("d1", 2).terms().begin()->first), 0);
  EXPECT_GT(o.compare(P("x1", 2).terms().begin()->first, P("x2", 2).terms().begin()->first), 0);
  EXPECT_GT(o.compare(P("x2", 2).terms().begin()->first, P("d1", 2).terms().begin()->first), 0);
  EXPECT_EQ(TermOrder::parse("deglex").name(), "deglex");
  EXPECT_THROW(TermOrder::parse("lex"), Error);
  // the two orders differ on x1*d2 vs x2^2... and agree on degree
  TermOrder lex(OrderKind::Deglex);
  auto a = P("x1*d1", 2).terms().begin()->first;
  auto b = P("x2^2", 2).terms().begin()->first;
  EXPECT_GT(lex.compare(a, b), 0);
  EXPECT_LT(o.compare(a, b), 0);
}

TEST(NormalForm, ReferenceExamples) {
  auto j = gb("x1", 1);
  EXPECT_EQ(normalForm(P("x1*d1", 1), j), P("-1", 1));
  EXPECT_EQ(normalForm(P("E^2", 1), j), P("1", 1));
}

TEST(NormalForm, Idempotent) {
  std::mt19937 rng(1);
  auto j = gb("x1*d2, d1^2", 2);
  for (int t = 0; t < 40; ++t) {
    auto f = oracle::randomHomogeneous(rng, 2, t % 3 - 1, 4, 3);
    auto r = normalForm(f, j);
    EXPECT_EQ(normalForm(r, j), r);
  }
}

TEST(Buchberger, ReducedBasisIsStable) {
  for (const char* s : {"x1, d1", "x1*d2, d1^2", "d1, d2", "x1*d1 + 1, x2", "x1^2*d1 - x2, d2^2"}) {
    auto j = gb(s, 2);
    auto again = buchberger(j.idealGenerators());
    EXPECT_EQ(again.idealGenerators(), j.idealGenerators()) << s;
    for (const auto& g : parseElementList(s, 2)) EXPECT_TRUE(isMember(g, j)) << s;
  }
  // (x1, d1) is the unit ideal
  auto unit = gb("x1, d1", 1);
  ASSERT_EQ(unit.size(), 1u);
  EXPECT_EQ(unit.idealGenerators()[0], P("1", 1));
}

TEST(Buchberger, RejectsInhomogeneousInput) {
  EXPECT_THROW(gb("x1 + 1", 1), InhomogeneousError);
  EXPECT_THROW(gb("x1 + d1", 1), InhomogeneousError);
}

TEST(Syzygies, PartialDerivatives) {
  auto s = syzygies(gb("d1, d2", 2));
  ASSERT_EQ(s.size(), 1u);
  // the basis is sorted, so the syzygy relates d2 (first) and d1
  auto gens = gb("d1, d2", 2).idealGenerators();
  FreeModuleElement combo(2, 1);
  combo[0] = s[0][0] * gens[0] + s[0][1] * gens[1];
  EXPECT_TRUE(combo.isZero());
  EXPECT_TRUE((s[0][0] == P("d1", 2) && s[0][1] == P("-d2", 2)) ||
              (s[0][0] == P("d2", 2) && s[0][1] == P("-d1", 2)));
}

TEST(Syzygies, NonzerodivisorHasNone) {
  // A_n is a domain, so a single nonzero generator has no syzygies.
  EXPECT_TRUE(syzygies(gb("x1", 1)).empty());
  EXPECT_TRUE(syzygies(gb("x1*d2 + x2*d1", 2)).empty());
}

TEST(Resolution, ReferenceRanks) {
  auto r = freeResolution(gb("x1, d2", 2));
  EXPECT_EQ(ranks(r), (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_FALSE(r.truncated);
  EXPECT_TRUE(isComplex(r));
}

TEST(Resolution, KoszulRanksAreBinomial) {
  const char* ideals[] = {"x1", "x1, x2", "x1, x2, x3"};
  for (std::size_t n = 1; n <= 3; ++n) {
    auto r = freeResolution(gb(ideals[n - 1], n));
    std::vector<std::size_t> expect;
    for (std::size_t i = 0, c = 1; i <= n; ++i) {
      expect.push_back(c);
      c = c * (n - i) / (i + 1);
    }
    EXPECT_EQ(ranks(r), expect);
    EXPECT_TRUE(isComplex(r));
    ASSERT_TRUE(r.hasFineDegrees());
  }
}

TEST(Resolution, DerivativeKoszulComplex) {
  // F_i = A_n(i)^{C(n,i)}: generators of stage i sit in degree -i.
  for (std::size_t n = 1; n <= 3; ++n) {
    std::string ds;
    for (std::size_t i = 1; i <= n; ++i) ds += (i > 1 ? ", d" : "d") + std::to_string(i);
    auto r = freeResolution(gb(ds.c_str(), n));
    ASSERT_EQ(r.length(), n);
    for (std::size_t i = 0, c = 1; i <= n; ++i) {
      EXPECT_EQ(r.rank(i), c);
      for (int d : r.degrees[i]) EXPECT_EQ(d, -static_cast<int>(i));
      c = c * (n - i) / (i + 1);
    }
    EXPECT_TRUE(isComplex(r));
  }
}

TEST(Resolution, GeneratorDegreesTrackShift) {
  auto r = freeResolution(gb("x1, d2", 2), 1, std::vector<int>{1, 0});
  EXPECT_EQ(r.degrees[0], std::vector<int>{-1});
  EXPECT_EQ(r.fineDegrees[0][0], (std::vector<int>{-1, 0}));
  // F_1 generators: x1 and d2 sitting on e_0 of degree -1
  std::multiset<int> d1(r.degrees[1].begin(), r.degrees[1].end());
  EXPECT_EQ(d1, (std::multiset<int>{0, -2}));
}

TEST(EulerianIndex, Examples) {
  EXPECT_EQ(eulerianIndex(gb("d1, d2", 2)), 1u);
  EXPECT_FALSE(eulerianIndex(gb("x1", 1), 6));
  // (A/A x1)(1): E + 1 = d1 x1
  EXPECT_EQ(eulerianIndex(gb("x1", 1), 10, -1), 1u);
  EXPECT_EQ(eulerianIndex(gb("x1, d2", 2), 10, -1), 1u);
  EXPECT_EQ(eulerianIndex(gb("E^2", 1)), 2u);
}

TEST(Membership, AgreesWithBruteForceOracle) {
  std::mt19937 rng(2024);
  for (int t = 0; t < 100; ++t) {
    const auto inst = oracle::membershipInstance(rng, t);
    EXPECT_EQ(isMember(inst.f, buchberger(inst.gens)), oracle::inBoundedSlice(inst.f, inst.gens, 10))
        << "instance " << t;
  }
}
