#include "weyl/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "weyl/error.hpp"

namespace weyl {

TermOrder TermOrder::parse(const std::string& name) {
  if (name == "degrevlex") return TermOrder(OrderKind::Degrevlex);
  if (name == "deglex") return TermOrder(OrderKind::Deglex);
  throw Error("unknown term order '" + name + "' (expected degrevlex or deglex)");
}

std::string TermOrder::name() const {
  return kind_ == OrderKind::Degrevlex ? "degrevlex" : "deglex";
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  const unsigned ta = a.totalExponent();
  const unsigned tb = b.totalExponent();
  if (ta != tb) return ta < tb ? -1 : 1;
  const std::size_t n = a.n();
  auto at = [n](const Monomial& m, std::size_t k) { return k < n ? m.x[k] : m.d[k - n]; };
  if (kind_ == OrderKind::Deglex) {
    for (std::size_t k = 0; k < 2 * n; ++k) {
      if (at(a, k) != at(b, k)) return at(a, k) > at(b, k) ? 1 : -1;
    }
    return 0;
  }
  for (std::size_t k = 2 * n; k-- > 0;) {
    if (at(a, k) != at(b, k)) return at(a, k) < at(b, k) ? 1 : -1;
  }
  return 0;
}

FreeModuleElement::FreeModuleElement(std::vector<WeylElement> comps) : comps_(std::move(comps)) {
  if (comps_.empty()) throw Error("free module element needs at least one component");
  n_ = comps_.front().n();
  for (const auto& c : comps_)
    if (c.n() != n_) throw DimensionMismatch("components over different ambient n");
}

FreeModuleElement FreeModuleElement::unit(std::size_t n, std::size_t rank, std::size_t k) {
  FreeModuleElement v(n, rank);
  v.comps_.at(k) = WeylElement::constant(n, 1);
  return v;
}

bool FreeModuleElement::isZero() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const auto& c) { return c.isZero(); });
}

FreeModuleElement& FreeModuleElement::operator+=(const FreeModuleElement& o) {
  if (o.rank() != rank()) throw DimensionMismatch("module elements of different rank");
  for (std::size_t k = 0; k < comps_.size(); ++k) comps_[k] += o.comps_[k];
  return *this;
}

FreeModuleElement& FreeModuleElement::operator-=(const FreeModuleElement& o) {
  if (o.rank() != rank()) throw DimensionMismatch("module elements of different rank");
  for (std::size_t k = 0; k < comps_.size(); ++k) comps_[k] -= o.comps_[k];
  return *this;
}

FreeModuleElement operator*(const WeylElement& a, const FreeModuleElement& v) {
  FreeModuleElement r = v;
  for (auto& c : r.comps_) c = a * c;
  return r;
}

std::optional<int> moduleDegree(const FreeModuleElement& v, const std::vector<int>& genDegrees) {
  std::optional<int> deg;
  for (std::size_t k = 0; k < v.rank(); ++k) {
    const int shift = genDegrees.empty() ? 0 : genDegrees.at(k);
    for (const auto& [m, c] : v[k].terms()) {
      const int d = m.degree() + shift;
      if (deg && *deg != d) return std::nullopt;
      deg = d;
    }
  }
  if (!deg) throw Error("degree of the zero module element is undefined");
  return deg;
}

std::optional<std::vector<int>> moduleFineDegree(const FreeModuleElement& v,
                                                 const std::vector<std::vector<int>>& genDegrees) {
  std::optional<std::vector<int>> deg;
  for (std::size_t k = 0; k < v.rank(); ++k) {
    for (const auto& [m, c] : v[k].terms()) {
      auto d = m.fineDegree();
      if (!genDegrees.empty())
        for (std::size_t i = 0; i < d.size(); ++i) d[i] += genDegrees.at(k).at(i);
      if (deg && *deg != d) return std::nullopt;
      deg = std::move(d);
    }
  }
  if (!deg) throw Error("degree of the zero module element is undefined");
  return deg;
}

std::vector<WeylElement> GroebnerBasis::idealGenerators() const {
  if (rank_ != 1) throw Error("not a basis of a left ideal");
  std::vector<WeylElement> out;
  for (const auto& g : gens_) out.push_back(g[0]);
  return out;
}

std::vector<std::pair<std::size_t, Monomial>> GroebnerBasis::leadingTerms() const {
  std::vector<std::pair<std::size_t, Monomial>> out;
  for (const auto& g : gens_) {
    auto lt = leadingTerm(g, order_);
    out.emplace_back(lt->component, lt->mono);
  }
  return out;
}

std::optional<LeadingTerm> leadingTerm(const WeylElement& v, const TermOrder& order) {
  if (v.isZero()) return std::nullopt;
  auto best = v.terms().begin();
  for (auto it = v.terms().begin(); it != v.terms().end(); ++it)
    if (order.compare(it->first, best->first) > 0) best = it;
  return LeadingTerm{0, best->first, best->second};
}

std::optional<LeadingTerm> leadingTerm(const FreeModuleElement& v, const TermOrder& order) {
  for (std::size_t k = 0; k < v.rank(); ++k) {
    if (auto lt = leadingTerm(v[k], order)) {
      lt->component = k;
      return lt;
    }
  }
  return std::nullopt;
}

namespace {

struct ModTerm {
  std::size_t comp;
  Monomial mono;
};

// Sorts in decreasing position-over-term order, so begin() is the leading term.
struct DescendingPot {
  const TermOrder* order;
  bool operator()(const ModTerm& a, const ModTerm& b) const {
    if (a.comp != b.comp) return a.comp < b.comp;
    return order->compare(a.mono, b.mono) > 0;
  }
};

using Poly = std::map<ModTerm, Rational, DescendingPot>;

int comparePot(const TermOrder& order, const ModTerm& a, const ModTerm& b) {
  if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
  return order.compare(a.mono, b.mono);
}

void addTerm(Poly& p, const ModTerm& t, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = p.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

Poly toPoly(const FreeModuleElement& v, const TermOrder& order) {
  Poly p(DescendingPot{&order});
  for (std::size_t k = 0; k < v.rank(); ++k)
    for (const auto& [m, c] : v[k].terms()) p.emplace(ModTerm{k, m}, c);
  return p;
}

FreeModuleElement fromPoly(const Poly& p, std::size_t n, std::size_t rank) {
  FreeModuleElement v(n, rank);
  for (const auto& [t, c] : p) v[t.comp].addTerm(t.mono, c);
  return v;
}

// p += c * (q . g), left multiplication by the monomial q.
void addLeftMultiple(Poly& p, const Monomial& q, const Rational& c, const Poly& g) {
  WeylElement::TermMap scratch;
  for (const auto& [t, coef] : g) {
    scratch.clear();
    accumulateProduct(q, t.mono, c * coef, scratch);
    for (const auto& [m, v] : scratch) addTerm(p, ModTerm{t.comp, m}, v);
  }
}

struct BasisEntry {
  Poly poly;
  ModTerm lead;
  Rational lc;
};

BasisEntry makeEntry(Poly p) {
  BasisEntry e{std::move(p), {}, 0};
  e.lead = e.poly.begin()->first;
  e.lc = e.poly.begin()->second;
  return e;
}

bool dividesTerm(const ModTerm& a, const ModTerm& b) {
  return a.comp == b.comp && a.mono.divides(b.mono);
}

Poly reduce(Poly p, const std::vector<const BasisEntry*>& basis, const TermOrder& order) {
  Poly rem(DescendingPot{&order});
  while (!p.empty()) {
    auto it = p.begin();
    const BasisEntry* divisor = nullptr;
    for (const BasisEntry* b : basis) {
      if (dividesTerm(b->lead, it->first)) {
        divisor = b;
        break;
      }
    }
    if (divisor == nullptr) {
      rem.insert(rem.end(), *it);
      p.erase(it);
      continue;
    }
    const Monomial q = it->first.mono - divisor->lead.mono;
    const Rational c = -it->second / divisor->lc;
    addLeftMultiple(p, q, c, divisor->poly);
  }
  return rem;
}

void makeMonic(Poly& p) {
  if (p.empty()) return;
  const Rational inv = 1 / p.begin()->second;
  for (auto& [t, c] : p) c *= inv;
}

void checkHomogeneous(const FreeModuleElement& v, const std::vector<int>& genDegrees) {
  if (!moduleDegree(v, genDegrees))
    throw InhomogeneousError("inhomogeneous generator rejected: the engine is graded-only");
}

}  // namespace

FreeModuleElement normalForm(const FreeModuleElement& f, const GroebnerBasis& g) {
  if (f.n() != g.n() || (f.rank() != g.rank() && !f.components().empty()))
    throw OrderMismatch("element and basis live in different free modules");
  const TermOrder& order = g.order();
  std::vector<BasisEntry> entries;
  entries.reserve(g.size());
  for (const auto& gen : g.generators()) entries.push_back(makeEntry(toPoly(gen, order)));
  std::vector<const BasisEntry*> ptrs;
  for (const auto& e : entries) ptrs.push_back(&e);
  return fromPoly(reduce(toPoly(f, order), ptrs, order), g.n(), g.rank());
}

WeylElement normalForm(const WeylElement& f, const GroebnerBasis& g) {
  if (g.rank() != 1) throw OrderMismatch("ideal element reduced against a module basis");
  return normalForm(FreeModuleElement({f}), g)[0];
}

GroebnerBasis buchberger(const std::vector<FreeModuleElement>& generators, const TermOrder& order,
                         const std::vector<int>& genDegrees) {
  if (generators.empty()) throw Error("buchberger needs at least one generator (use rank-aware overload)");
  const std::size_t n = generators.front().n();
  const std::size_t rank = generators.front().rank();
  if (!genDegrees.empty() && genDegrees.size() != rank)
    throw DimensionMismatch("generator degree list does not match the module rank");

  std::vector<BasisEntry> basis;
  // (lcm, i, j) ordered by increasing lcm, then indices
  struct Pair {
    ModTerm lcm;
    std::size_t i, j;
  };
  auto pairLess = [&order](const Pair& a, const Pair& b) {
    const int c = comparePot(order, a.lcm, b.lcm);
    if (c != 0) return c < 0;
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  };
  std::set<Pair, decltype(pairLess)> queue(pairLess);
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto addToBasis = [&](Poly p) {
    makeMonic(p);
    basis.push_back(makeEntry(std::move(p)));
    const std::size_t k = basis.size() - 1;
    for (std::size_t i = 0; i < k; ++i) {
      if (basis[i].lead.comp != basis[k].lead.comp) continue;
      ModTerm l{basis[k].lead.comp, basis[i].lead.mono.lcm(basis[k].lead.mono)};
      queue.insert(Pair{l, i, k});
      pending.insert({i, k});
    }
  };

  for (const auto& g : generators) {
    if (g.n() != n || g.rank() != rank) throw DimensionMismatch("generators in different free modules");
    if (g.isZero()) continue;
    checkHomogeneous(g, genDegrees);
    addToBasis(toPoly(g, order));
  }

  auto isPending = [&pending](std::size_t a, std::size_t b) {
    return pending.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  while (!queue.empty()) {
    const Pair pr = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({pr.i, pr.j});

    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!dividesTerm(basis[k].lead, pr.lcm)) continue;
      if (!isPending(pr.i, k) && !isPending(pr.j, k)) chain = true;
    }
    if (chain) continue;

    const BasisEntry& a = basis[pr.i];
    const BasisEntry& b = basis[pr.j];
    Poly s(DescendingPot{&order});
    addLeftMultiple(s, pr.lcm.mono - a.lead.mono, 1 / a.lc, a.poly);
    addLeftMultiple(s, pr.lcm.mono - b.lead.mono, -1 / b.lc, b.poly);
    std::vector<const BasisEntry*> ptrs;
    for (const auto& e : basis) ptrs.push_back(&e);
    Poly h = reduce(std::move(s), ptrs, order);
    if (!h.empty()) addToBasis(std::move(h));
  }

  // minimalize: drop elements whose leading term is divisible by another's
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j || !dividesTerm(basis[j].lead, basis[i].lead)) continue;
      // equal leads: keep the earliest
      const bool equal = basis[j].lead.mono == basis[i].lead.mono;
      redundant = !equal || j < i;
    }
    if (!redundant) keep.push_back(i);
  }

  // interreduce tails
  std::vector<BasisEntry> minimal;
  for (auto i : keep) minimal.push_back(basis[i]);
  std::vector<BasisEntry> reducedEntries;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<const BasisEntry*> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(&minimal[j]);
    Poly tail = minimal[i].poly;
    const auto leadTerm = *tail.begin();
    tail.erase(tail.begin());
    Poly r = reduce(std::move(tail), others, order);
    r.insert(leadTerm);
    makeMonic(r);
    reducedEntries.push_back(makeEntry(std::move(r)));
  }
  std::sort(reducedEntries.begin(), reducedEntries.end(),
            [&order](const BasisEntry& a, const BasisEntry& b) {
              return comparePot(order, a.lead, b.lead) < 0;
            });

  std::vector<FreeModuleElement> out;
  for (const auto& e : reducedEntries) out.push_back(fromPoly(e.poly, n, rank));
  return GroebnerBasis(n, rank, order, std::move(out), true);
}

GroebnerBasis buchberger(const std::vector<WeylElement>& generators, const TermOrder& order) {
  if (generators.empty()) throw Error("buchberger needs at least one generator");
  std::vector<FreeModuleElement> gens;
  for (const auto& g : generators) gens.emplace_back(std::vector<WeylElement>{g});
  bool allZero = std::all_of(gens.begin(), gens.end(), [](const auto& g) { return g.isZero(); });
  if (allZero) return GroebnerBasis(generators.front().n(), 1, order, {}, true);
  return buchberger(gens, order);
}

bool isMember(const WeylElement& f, const GroebnerBasis& j) {
  if (f.isZero()) return true;
  return normalForm(f, j).isZero();
}

std::optional<unsigned> eulerianIndex(const GroebnerBasis& j, unsigned aMax, int generatorDegree) {
  const std::size_t n = j.n();
  const WeylElement op = WeylElement::euler(n) - WeylElement::constant(n, generatorDegree);
  // J is a left ideal: NF(op^a) = NF(op * NF(op^{a-1}))
  WeylElement current = WeylElement::constant(n, 1);
  for (unsigned a = 1; a <= aMax; ++a) {
    current = normalForm(op * current, j);
    if (current.isZero()) return a;
  }
  return std::nullopt;
}

std::vector<FreeModuleElement> syzygies(const std::vector<FreeModuleElement>& gens,
                                        const TermOrder& order,
                                        const std::vector<int>& genDegrees) {
  if (gens.empty()) return {};
  const std::size_t n = gens.front().n();
  const std::size_t r = gens.front().rank();
  const std::size_t m = gens.size();
  std::vector<int> extDegrees(r, 0);
  if (!genDegrees.empty()) extDegrees = genDegrees;
  std::vector<FreeModuleElement> extended;
  for (std::size_t k = 0; k < m; ++k) {
    if (gens[k].isZero()) throw Error("syzygies of a zero generator");
    auto deg = moduleDegree(gens[k], extDegrees);
    if (!deg) throw InhomogeneousError("inhomogeneous generator rejected in syzygy computation");
    extDegrees.push_back(*deg);
  }
  for (std::size_t k = 0; k < m; ++k) {
    FreeModuleElement h(n, r + m);
    for (std::size_t c = 0; c < r; ++c) h[c] = gens[k][c];
    h[r + k] = WeylElement::constant(n, 1);
    extended.push_back(std::move(h));
  }
  GroebnerBasis gb = buchberger(extended, order, extDegrees);
  std::vector<FreeModuleElement> out;
  for (const auto& g : gb.generators()) {
    bool eliminated = true;
    for (std::size_t c = 0; c < r && eliminated; ++c) eliminated = g[c].isZero();
    if (!eliminated) continue;
    FreeModuleElement s(n, m);
    for (std::size_t k = 0; k < m; ++k) s[k] = g[r + k];
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<FreeModuleElement> syzygies(const GroebnerBasis& g, const std::vector<int>& genDegrees) {
  return syzygies(g.generators(), g.order(), genDegrees);
}

}  // namespace weyl
