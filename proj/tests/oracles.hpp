#ifndef WEYL_TESTS_ORACLES_HPP
#define WEYL_TESTS_ORACLES_HPP

// Test-side oracles that avoid the engine's Gröbner machinery.

#include <map>
#include <random>
#include <vector>

#include "weyl/element.hpp"
#include "weyl/matrix.hpp"

namespace weyl::oracle {

// All monomials in n variables with total exponent <= bound.
inline std::vector<Monomial> monomialsUpTo(std::size_t n, unsigned bound) {
  std::vector<Monomial> out;
  std::vector<unsigned> e(2 * n, 0);
  while (true) {
    unsigned t = 0;
    for (auto v : e) t += v;
    if (t <= bound) {
      Monomial m = Monomial::one(n);
      for (std::size_t i = 0; i < n; ++i) {
        m.x[i] = e[i];
        m.d[i] = e[n + i];
      }
      out.push_back(m);
    }
    std::size_t k = 0;
    for (; k < e.size(); ++k) {
      if (++e[k] <= bound) break;
      e[k] = 0;
    }
    if (k == e.size()) break;
  }
  return out;
}

// Brute force: is f = sum_i sum_m c_{i,m} m g_i with monomial multipliers m
// of total exponent <= bound? Only multipliers matching the degree of f are
// used, which is exact for homogeneous data. Sound for "yes"; "no" only
// means no certificate exists inside the bounded slice.
inline bool inBoundedSlice(const WeylElement& f, const std::vector<WeylElement>& gens, unsigned bound) {
  if (f.isZero()) return true;
  const std::size_t n = f.n();
  const auto fdeg = f.degree();
  std::vector<WeylElement> columns;
  for (const auto& g : gens) {
    if (g.isZero()) continue;
    const auto gdeg = g.degree();
    for (const auto& m : monomialsUpTo(n, bound)) {
      if (fdeg && gdeg && m.degree() + *gdeg != *fdeg) continue;
      columns.push_back(WeylElement::monomial(m) * g);
    }
  }
  std::map<Monomial, std::size_t> index;
  for (const auto& c : columns)
    for (const auto& [m, v] : c.terms()) index.try_emplace(m, 0);
  for (const auto& [m, v] : f.terms()) index.try_emplace(m, 0);
  std::size_t r = 0;
  for (auto& [m, k] : index) k = r++;
  Matrix a(index.size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (const auto& [m, v] : columns[c].terms()) a(index[m], c) = v;
  std::vector<Rational> b(index.size());
  for (const auto& [m, v] : f.terms()) b[index[m]] = v;
  return solve(a, b).has_value();
}

// Random element of coarse degree `deg` with up to `terms` terms, exponents
// <= maxExp and total exponent <= maxTotal.
inline WeylElement randomHomogeneous(std::mt19937& rng, std::size_t n, int deg, unsigned terms,
                                     unsigned maxExp, unsigned maxTotal = 3) {
  std::uniform_int_distribution<unsigned> e(0, maxExp);
  std::uniform_int_distribution<int> coef(-3, 3);
  WeylElement out(n);
  for (unsigned t = 0, tries = 0; t < terms && tries < 200; ++tries) {
    Monomial m = Monomial::one(n);
    for (std::size_t i = 0; i < n; ++i) {
      m.x[i] = e(rng);
      m.d[i] = e(rng);
    }
    if (m.degree() != deg || m.totalExponent() > maxTotal) continue;
    int c = coef(rng);
    if (c == 0) c = 1;
    out.addTerm(m, c);
    ++t;
  }
  return out;
}

struct MembershipInstance {
  std::vector<WeylElement> gens;
  WeylElement f;
};

// Random homogeneous ideal membership question in n = 1 or 2 variables with
// exponents <= 3; even instances are members by construction.
inline MembershipInstance membershipInstance(std::mt19937& rng, int t) {
  std::uniform_int_distribution<int> degree(-1, 1);
  const std::size_t n = 1 + t % 2;
  MembershipInstance inst{{}, WeylElement(n)};
  while (inst.gens.empty()) {
    for (int k = 0; k < 1 + t % 2; ++k) {
      auto g = randomHomogeneous(rng, n, degree(rng), 2, 3);
      if (!g.isZero()) inst.gens.push_back(g);
    }
  }
  if (t % 2 == 0) {
    const int target = *inst.gens[0].degree() + degree(rng);
    for (const auto& g : inst.gens) inst.f += randomHomogeneous(rng, n, target - *g.degree(), 2, 1) * g;
  } else {
    inst.f = randomHomogeneous(rng, n, degree(rng), 3, 3);
  }
  return inst;
}

}  // namespace weyl::oracle

#endif
