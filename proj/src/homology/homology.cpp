#include "weyl/homology.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>

#include "weyl/error.hpp"

namespace weyl {

namespace {

using Bound = std::optional<int>;

Bound maxLower(Bound a, Bound b) { return a && b ? Bound(std::max(*a, *b)) : (a ? a : b); }
Bound minUpper(Bound a, Bound b) { return a && b ? Bound(std::min(*a, *b)) : (a ? a : b); }
Bound plus(Bound a, int c) { return a ? Bound(*a + c) : a; }

int total(const FineDegree& v) {
  int s = 0;
  for (int x : v) s += x;
  return s;
}

FineDegree add(FineDegree a, const FineDegree& b, int sign = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += sign * b[i];
  return a;
}

FineDegree indicator(std::size_t n, unsigned mask) {
  FineDegree v(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    if (mask >> i & 1u) v[i] = 1;
  return v;
}

/// Number of elements of `mask` below position l: the Koszul sign exponent.
int below(unsigned mask, std::size_t l) { return std::popcount(mask & ((1u << l) - 1u)); }

std::vector<unsigned> subsetsOfSize(std::size_t p, int q) {
  std::vector<unsigned> out;
  if (q < 0 || q > static_cast<int>(p)) return out;
  for (unsigned mask = 0; mask < (1u << p); ++mask)
    if (std::popcount(mask) == q) out.push_back(mask);
  return out;
}

/// Lattice points of a box; nullopt when the box is nonempty but unbounded.
std::optional<std::vector<FineDegree>> boxPoints(const std::vector<Bound>& lo, const std::vector<Bound>& hi) {
  const std::size_t n = lo.size();
  for (std::size_t i = 0; i < n; ++i)
    if (lo[i] && hi[i] && *lo[i] > *hi[i]) return std::vector<FineDegree>{};
  for (std::size_t i = 0; i < n; ++i)
    if (!lo[i] || !hi[i]) return std::nullopt;
  std::vector<FineDegree> out;
  FineDegree v(n);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      out.push_back(v);
      return;
    }
    for (int x = *lo[i]; x <= *hi[i]; ++x) {
      v[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

std::size_t dimAt(const GradedModel& m, const FineDegree& v) {
  return m.support().contains(v) ? m.dim(v) : 0;
}

bool isFreeRankOne(const GradedModel& m) {
  const auto d = m.descriptor();
  return d.value("constructor", std::string()) == "polynomial";
}

void requireLeftFull(const GradedModel& m, const char* what) {
  if (m.side() != Side::Left) throw Error(std::string(what) + " needs a left module");
  if (m.actingRank() != m.n()) throw Error(std::string(what) + " needs a module over the full Weyl algebra");
}

/// One graded block of a cochain level.
struct Block {
  FineDegree cell;  // fine degree in the underlying model(s)
  std::size_t offset = 0;
  std::size_t dim = 0;
};

struct Level {
  std::vector<Block> blocks;
  std::size_t dim = 0;
  void push(Block b) {
    b.offset = dim;
    dim += b.dim;
    blocks.push_back(std::move(b));
  }
};

/// Middle space with its outgoing/incoming maps and the transported E.
struct LocalComplex {
  std::size_t dim = 0;
  Matrix out;  // Matrix() when there is no next term
  Matrix in;   // Matrix() when there is no previous term
  Matrix euler;
  int label = 0;
};

using CellFn = std::function<LocalComplex(const FineDegree&, int)>;

HomologyTable runTable(const std::string& name, const std::vector<int>& indices, DegreeWindow window,
                       const SupportBounds& bounds, int offset, const HomologyOptions& opts, bool euler,
                       const CellFn& fn) {
  if (window.lo > window.hi) throw Error("empty degree window");
  HomologyTable t;
  t.invariant = name;
  t.window = window;
  t.indices = indices;
  const int radius = opts.radius.value_or(defaultRadius(window));
  const CellPlan plan = planCells(bounds, offset, window, radius);
  t.exactPieces = plan.exact;
  t.radius = radius;

  struct Job {
    int degree;
    const FineDegree* cell;
    int index;
  };
  std::vector<Job> jobs;
  for (const auto& [d, cells] : plan.cells)
    for (const auto& c : cells)
      for (int i : indices) jobs.push_back({d, &c, i});
  for (int i : indices)
    for (int d = window.lo; d <= window.hi; ++d) t.dims[{i, d}] = 0;

  struct Result {
    std::size_t dim = 0;
    std::optional<unsigned> order;
  };
  std::vector<Result> results(jobs.size());
  const bool carry = euler && opts.euler;
  parallelFor(opts.policy, jobs.size(), [&](std::size_t k) {
    const LocalComplex lc = fn(*jobs[k].cell, jobs[k].index);
    if (lc.dim == 0) return;
    const Subquotient h = Subquotient::compute(lc.dim, lc.out, lc.in);
    results[k].dim = h.dim();
    if (carry && h.dim() > 0) {
      const Matrix shifted = lc.euler - Matrix::scalar(lc.dim, Rational(lc.label));
      results[k].order = nilpotencyOrder(h.induced(shifted, h), opts.eulerBound);
    }
  });
  t.cellsEvaluated = plan.cells.empty() ? 0 : jobs.size() / std::max<std::size_t>(indices.size(), 1);
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    const std::pair<int, int> key{jobs[k].index, jobs[k].degree};
    t.dims[key] += results[k].dim;
    if (!carry || results[k].dim == 0) continue;
    auto it = t.eulerOrders.find(key);
    if (it == t.eulerOrders.end()) {
      t.eulerOrders[key] = results[k].order;
    } else if (it->second && results[k].order) {
      it->second = std::max(*it->second, *results[k].order);
    } else {
      it->second = std::nullopt;
    }
  }
  return t;
}

Matrix blockDiagonal(const Level& l, const std::function<Matrix(const Block&)>& f) {
  Matrix m(l.dim, l.dim);
  for (const auto& b : l.blocks)
    if (b.dim > 0) m.setBlock(b.offset, b.offset, f(b));
  return m;
}

// ---------------------------------------------------------------- Koszul

struct KoszulComplex {
  ModelPtr m;
  std::vector<KoszulOperator> ops;

  int opDegree(std::size_t l) const { return ops[l].kind == KoszulOp::X ? 1 : -1; }

  FineDegree cellOf(const FineDegree& w, unsigned mask) const {
    FineDegree u = w;
    for (std::size_t l = 0; l < ops.size(); ++l)
      if (!(mask >> l & 1u)) u[ops[l].index] -= opDegree(l);
    return u;
  }

  Level level(const FineDegree& w, int q, std::vector<unsigned>& masks) const {
    Level lv;
    masks = subsetsOfSize(ops.size(), q);
    for (unsigned mask : masks) {
      Block b;
      b.cell = cellOf(w, mask);
      b.dim = dimAt(*m, b.cell);
      lv.push(std::move(b));
    }
    return lv;
  }

  Matrix apply(std::size_t l, const FineDegree& u) const {
    return ops[l].kind == KoszulOp::X ? m->actX(ops[l].index, u) : m->actD(ops[l].index, u);
  }

  Matrix map(const Level& src, const std::vector<unsigned>& srcMasks, const Level& dst,
             const std::vector<unsigned>& dstMasks) const {
    Matrix d(dst.dim, src.dim);
    for (std::size_t a = 0; a < srcMasks.size(); ++a) {
      const Block& sb = src.blocks[a];
      if (sb.dim == 0) continue;
      for (std::size_t l = 0; l < ops.size(); ++l) {
        if (srcMasks[a] >> l & 1u) continue;
        const unsigned target = srcMasks[a] | (1u << l);
        const auto it = std::lower_bound(dstMasks.begin(), dstMasks.end(), target);
        const Block& tb = dst.blocks[static_cast<std::size_t>(it - dstMasks.begin())];
        if (tb.dim == 0) continue;
        Matrix blk = apply(l, sb.cell);
        if (below(srcMasks[a], l) % 2) blk *= Rational(-1);
        d.setBlock(tb.offset, sb.offset, blk);
      }
    }
    return d;
  }

  LocalComplex at(const FineDegree& w, int i) const {
    LocalComplex lc;
    const int p = static_cast<int>(ops.size());
    if (i < 0 || i > p) return lc;
    std::vector<unsigned> masks, prevMasks, nextMasks;
    const Level mid = level(w, i, masks);
    lc.dim = mid.dim;
    if (lc.dim == 0) return lc;
    if (i < p) lc.out = map(mid, masks, level(w, i + 1, nextMasks), nextMasks);
    if (i > 0) {
      const Level prev = level(w, i - 1, prevMasks);
      lc.in = map(prev, prevMasks, mid, masks);
    }
    lc.label = total(w) + m->coarseOffset();
    std::size_t k = 0;
    lc.euler = blockDiagonal(mid, [&](const Block& b) {
      int c = 0;
      for (std::size_t l = 0; l < ops.size(); ++l)
        if (!(masks[k] >> l & 1u)) c += opDegree(l);
      ++k;
      return eulerMatrix(*m, b.cell) + Matrix::scalar(b.dim, Rational(c));
    });
    return lc;
  }
};

// ---------------------------------------------------------------- Ext over A_n

struct ExtAnComplex {
  const FreeResolution* res;
  ModelPtr m;

  Level level(const FineDegree& w, std::size_t k) const {
    Level lv;
    if (k >= res->degrees.size()) return lv;
    for (const auto& g : res->fineDegrees[k]) {
      Block b;
      b.cell = add(w, g);
      b.dim = dimAt(*m, b.cell);
      lv.push(std::move(b));
    }
    return lv;
  }

  /// Hom(F_k, N) -> Hom(F_{k+1}, N), phi -> phi o d_{k+1}.
  Matrix map(const Level& src, const Level& dst, std::size_t k) const {
    Matrix d(dst.dim, src.dim);
    const auto& diff = res->differential(k + 1);
    for (std::size_t l = 0; l < dst.blocks.size(); ++l) {
      const Block& tb = dst.blocks[l];
      if (tb.dim == 0) continue;
      for (std::size_t j = 0; j < src.blocks.size(); ++j) {
        const Block& sb = src.blocks[j];
        const WeylElement& a = diff[l][j];
        if (sb.dim == 0 || a.isZero()) continue;
        d.setBlock(tb.offset, sb.offset, actElement(*m, a, sb.cell));
      }
    }
    return d;
  }

  LocalComplex at(const FineDegree& w, int nu) const {
    LocalComplex lc;
    if (nu < 0 || static_cast<std::size_t>(nu) > res->length()) return lc;
    const std::size_t k = static_cast<std::size_t>(nu);
    const Level mid = level(w, k);
    lc.dim = mid.dim;
    if (lc.dim == 0) return lc;
    if (k < res->length()) lc.out = map(mid, level(w, k + 1), k);
    if (k > 0) lc.in = map(level(w, k - 1), mid, k - 1);
    return lc;
  }
};

// ---------------------------------------------------------------- Tor over R

struct TorRComplex {
  ModelPtr a, b;

  std::vector<FineDegree> tensorCells(const FineDegree& c) const {
    const SupportBounds sa = a->support(), sb = b->support();
    const std::size_t n = c.size();
    std::vector<Bound> lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = maxLower(sa.lower[i], sb.upper[i] ? Bound(c[i] - *sb.upper[i]) : Bound());
      hi[i] = minUpper(sa.upper[i], sb.lower[i] ? Bound(c[i] - *sb.lower[i]) : Bound());
    }
    auto pts = boxPoints(lo, hi);
    if (!pts) throw InfiniteDimensionalPiece("tensor product piece is infinite-dimensional in fine degree");
    return *pts;
  }

  struct TLevel {
    Level level;
    std::map<std::pair<unsigned, FineDegree>, std::size_t> index;
    std::vector<unsigned> masks;
    std::vector<FineDegree> partner;  // cell in b
  };

  TLevel level(const FineDegree& x, int q) const {
    TLevel t;
    const std::size_t n = x.size();
    for (unsigned mask : subsetsOfSize(n, q)) {
      const FineDegree c = add(x, indicator(n, mask), -1);
      for (const auto& u : tensorCells(c)) {
        const FineDegree v = add(c, u, -1);
        const std::size_t da = dimAt(*a, u), db = dimAt(*b, v);
        if (da == 0 || db == 0) continue;
        t.index[{mask, u}] = t.level.blocks.size();
        t.masks.push_back(mask);
        t.partner.push_back(v);
        t.level.push({u, 0, da * db});
      }
    }
    return t;
  }

  /// d(e_S (x) z) = sum_{j in S} (-1)^{pos} e_{S-j} (x) y_j z.
  Matrix map(const TLevel& src, const TLevel& dst) const {
    Matrix d(dst.level.dim, src.level.dim);
    for (std::size_t k = 0; k < src.level.blocks.size(); ++k) {
      const Block& sb = src.level.blocks[k];
      const FineDegree& u = sb.cell;
      const FineDegree& v = src.partner[k];
      const std::size_t da = dimAt(*a, u), db = dimAt(*b, v);
      const unsigned mask = src.masks[k];
      for (std::size_t j = 0; j < u.size(); ++j) {
        if (!(mask >> j & 1u)) continue;
        const unsigned target = mask & ~(1u << j);
        const Rational sign(below(mask, j) % 2 ? -1 : 1);
        if (auto it = dst.index.find({target, plusUnit(u, j)}); it != dst.index.end()) {
          const Block& tb = dst.level.blocks[it->second];
          d.setBlock(tb.offset, sb.offset, kronecker(a->actX(j, u), Matrix::identity(db)) * sign);
        }
        if (auto it = dst.index.find({target, u}); it != dst.index.end()) {
          const Block& tb = dst.level.blocks[it->second];
          d.setBlock(tb.offset, sb.offset, kronecker(Matrix::identity(da), b->actX(j, v)) * (-sign));
        }
      }
    }
    return d;
  }

  LocalComplex at(const FineDegree& x, int nu) const {
    LocalComplex lc;
    const int n = static_cast<int>(x.size());
    if (nu < 0 || nu > n) return lc;
    const TLevel mid = level(x, nu);
    lc.dim = mid.level.dim;
    if (lc.dim == 0) return lc;
    if (nu > 0) lc.out = map(mid, level(x, nu - 1));
    if (nu < n) lc.in = map(level(x, nu + 1), mid);
    lc.label = total(x) + a->coarseOffset() + b->coarseOffset();
    // E (x) 1 + 1 (x) E, raised by |S| so that it commutes with the differential.
    lc.euler = Matrix(lc.dim, lc.dim);
    for (std::size_t k = 0; k < mid.level.blocks.size(); ++k) {
      const Block& blk = mid.level.blocks[k];
      const std::size_t da = dimAt(*a, blk.cell), db = dimAt(*b, mid.partner[k]);
      Matrix e = kronecker(eulerMatrix(*a, blk.cell), Matrix::identity(db)) +
                 kronecker(Matrix::identity(da), eulerMatrix(*b, mid.partner[k])) +
                 Matrix::scalar(blk.dim, Rational(std::popcount(mid.masks[k])));
      lc.euler.setBlock(blk.offset, blk.offset, e);
    }
    return lc;
  }
};

// ---------------------------------------------------------------- Ext over R

struct ExtRComplex {
  ModelPtr m, l;

  struct HLevel {
    Level level;
    std::map<std::pair<unsigned, FineDegree>, std::size_t> index;
    std::vector<unsigned> masks;
    std::vector<FineDegree> homDegree;
  };

  /// Cells u of M with Hom(M_u, L_{u+s}) possibly nonzero.
  std::vector<FineDegree> homCells(const FineDegree& s) const {
    const SupportBounds sm = m->support(), sl = l->support();
    const std::size_t n = s.size();
    std::vector<Bound> lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = maxLower(sm.lower[i], plus(sl.lower[i], -s[i]));
      hi[i] = minUpper(sm.upper[i], plus(sl.upper[i], -s[i]));
    }
    auto pts = boxPoints(lo, hi);
    if (!pts) throw InfiniteDimensionalPiece("Hom piece is an infinite product in fine degree");
    return *pts;
  }

  HLevel level(const FineDegree& t, int q) const {
    HLevel h;
    const std::size_t n = t.size();
    for (unsigned mask : subsetsOfSize(n, q)) {
      const FineDegree s = add(t, indicator(n, mask));
      for (const auto& u : homCells(s)) {
        const std::size_t dm = dimAt(*m, u), dl = dimAt(*l, add(u, s));
        if (dm == 0 || dl == 0) continue;
        h.index[{mask, u}] = h.level.blocks.size();
        h.masks.push_back(mask);
        h.homDegree.push_back(s);
        h.level.push({u, 0, dl * dm});
      }
    }
    return h;
  }

  /// (d phi)_S+j = (-1)^{pos} (x_j o phi - phi o x_j); phi stored row-major (L rows, M cols).
  Matrix map(const HLevel& src, const HLevel& dst) const {
    Matrix d(dst.level.dim, src.level.dim);
    for (std::size_t k = 0; k < src.level.blocks.size(); ++k) {
      const Block& sb = src.level.blocks[k];
      const FineDegree& u = sb.cell;
      const FineDegree& s = src.homDegree[k];
      const FineDegree us = add(u, s);
      const std::size_t dm = dimAt(*m, u), dl = dimAt(*l, us);
      const unsigned mask = src.masks[k];
      for (std::size_t j = 0; j < u.size(); ++j) {
        if (mask >> j & 1u) continue;
        const unsigned target = mask | (1u << j);
        const Rational sign(below(mask, j) % 2 ? -1 : 1);
        if (auto it = dst.index.find({target, u}); it != dst.index.end()) {
          const Block& tb = dst.level.blocks[it->second];
          d.setBlock(tb.offset, sb.offset, kronecker(l->actX(j, us), Matrix::identity(dm)) * sign);
        }
        const FineDegree u0 = plusUnit(u, j, -1);
        if (auto it = dst.index.find({target, u0}); it != dst.index.end()) {
          const Block& tb = dst.level.blocks[it->second];
          d.setBlock(tb.offset, sb.offset,
                     kronecker(Matrix::identity(dl), m->actX(j, u0).transposed()) * (-sign));
        }
      }
    }
    return d;
  }

  LocalComplex at(const FineDegree& t, int nu) const {
    LocalComplex lc;
    const int n = static_cast<int>(t.size());
    if (nu < 0 || nu > n) return lc;
    const HLevel mid = level(t, nu);
    lc.dim = mid.level.dim;
    if (lc.dim == 0) return lc;
    if (nu < n) lc.out = map(mid, level(t, nu + 1));
    if (nu > 0) lc.in = map(level(t, nu - 1), mid);
    lc.label = total(t) + l->coarseOffset() - m->coarseOffset();
    // phi -> E o phi - phi o E, lowered by |S| so that it commutes with the differential.
    lc.euler = Matrix(lc.dim, lc.dim);
    for (std::size_t k = 0; k < mid.level.blocks.size(); ++k) {
      const Block& blk = mid.level.blocks[k];
      const FineDegree us = add(blk.cell, mid.homDegree[k]);
      const std::size_t dm = dimAt(*m, blk.cell), dl = dimAt(*l, us);
      Matrix e = kronecker(eulerMatrix(*l, us), Matrix::identity(dm)) -
                 kronecker(Matrix::identity(dl), eulerMatrix(*m, blk.cell).transposed()) -
                 Matrix::scalar(blk.dim, Rational(std::popcount(mid.masks[k])));
      lc.euler.setBlock(blk.offset, blk.offset, e);
    }
    return lc;
  }
};

/// The module itself as a complex concentrated in index 0 (flat or free argument).
HomologyTable degenerateTable(const std::string& name, const ModelPtr& m, int labelOffset,
                              const std::vector<int>& nus, DegreeWindow window, const HomologyOptions& opts) {
  const int offset = m->coarseOffset() + labelOffset;
  return runTable(name, nus, window, m->support(), offset, opts, true, [&](const FineDegree& v, int nu) {
    LocalComplex lc;
    if (nu != 0) return lc;
    lc.dim = dimAt(*m, v);
    if (lc.dim == 0) return lc;
    lc.euler = eulerMatrix(*m, v);
    lc.label = total(v) + offset;
    return lc;
  });
}

}  // namespace

std::size_t HomologyTable::dim(int index, int degree) const {
  const auto it = dims.find({index, degree});
  return it == dims.end() ? 0 : it->second;
}

std::optional<unsigned> HomologyTable::eulerUniformBound() const {
  unsigned a = 1;
  for (const auto& [key, order] : eulerOrders) {
    if (!order) return std::nullopt;
    a = std::max(a, *order);
  }
  return a;
}

bool HomologyTable::eulerCompatible() const { return eulerUniformBound().has_value(); }

std::vector<KoszulOperator> derhamOperators(std::size_t n) {
  std::vector<KoszulOperator> ops;
  for (std::size_t i = 0; i < n; ++i) ops.push_back({KoszulOp::D, i});
  return ops;
}

HomologyTable koszulHomology(const ModelPtr& m, const std::vector<KoszulOperator>& ops,
                             const std::vector<int>& indices, DegreeWindow window, const HomologyOptions& opts) {
  if (ops.size() > 16) throw Error("too many Koszul operators");
  for (const auto& o : ops)
    if (o.index >= m->actingRank()) throw Error("Koszul operator outside the acting range of the module");
  for (std::size_t a = 0; a < ops.size(); ++a)
    for (std::size_t b = a + 1; b < ops.size(); ++b)
      if (ops[a].index == ops[b].index && ops[a].kind != ops[b].kind)
        throw NonCommutingOperators("x" + std::to_string(ops[a].index + 1) + " and d" +
                                    std::to_string(ops[a].index + 1) + " do not commute");
  KoszulComplex kc{m, ops};
  // w is a homology cell when some u_S = w + sum_{l not in S} deg(op_l) lies in the support.
  SupportBounds b = m->support();
  for (std::size_t i = 0; i < m->n(); ++i) {
    int lo = 0, hi = 0;
    for (std::size_t l = 0; l < ops.size(); ++l) {
      if (ops[l].index != i) continue;
      const int d = kc.opDegree(l);
      (d > 0 ? hi : lo) += d;
    }
    b.lower[i] = plus(b.lower[i], lo);
    b.upper[i] = plus(b.upper[i], hi);
  }
  std::ostringstream name;
  name << "H(";
  for (std::size_t l = 0; l < ops.size(); ++l)
    name << (l ? "," : "") << (ops[l].kind == KoszulOp::X ? "x" : "d") << ops[l].index + 1;
  name << ")";
  return runTable(name.str(), indices, window, b, m->coarseOffset(), opts, true,
                  [&](const FineDegree& w, int i) { return kc.at(w, i); });
}

HomologyTable torAgainstRr(const ModelPtr& m, const std::vector<int>& nus, DegreeWindow window,
                           const HomologyOptions& opts) {
  if (m->actingRank() != m->n()) throw Error("Tor against R needs a module over the full Weyl algebra");
  const int n = static_cast<int>(m->n());
  std::vector<int> cohom;
  for (int nu : nus) cohom.push_back(n - nu);
  HomologyTable h = koszulHomology(m, derhamOperators(m->n()), cohom, window, opts);
  HomologyTable t = h;
  t.invariant = "TorA(R,M)";
  t.indices = nus;
  t.dims.clear();
  t.eulerOrders.clear();
  for (const auto& [key, d] : h.dims) t.dims[{n - key.first, key.second}] = d;
  for (const auto& [key, o] : h.eulerOrders) t.eulerOrders[{n - key.first, key.second}] = o;
  return t;
}

HomologyTable extOverAn(const FreeResolution& res, const ModelPtr& n, const std::vector<int>& nus,
                        DegreeWindow window, const HomologyOptions& opts) {
  if (!res.hasFineDegrees()) throw Error("Ext over A_n needs a resolution homogeneous for the fine grading");
  if (n->n() != res.n) throw DimensionMismatch("resolution and module live over different Weyl algebras");
  requireLeftFull(*n, "Ext over A_n");
  for (int nu : nus)
    if (res.truncated && nu >= 0 && static_cast<std::size_t>(nu) >= res.length())
      throw TruncatedResolution("resolution truncated at length " + std::to_string(res.length()) +
                                "; Ext^" + std::to_string(nu) + " needs one more stage");
  const std::size_t dim = res.n;
  SupportBounds sn = n->support();
  SupportBounds b = SupportBounds::none(dim);
  bool first = true;
  for (const auto& stage : res.fineDegrees)
    for (const auto& g : stage) {
      for (std::size_t i = 0; i < dim; ++i) {
        const Bound lo = plus(sn.lower[i], -g[i]);
        const Bound hi = plus(sn.upper[i], -g[i]);
        if (first) {
          b.lower[i] = lo;
          b.upper[i] = hi;
        } else {
          b.lower[i] = (b.lower[i] && lo) ? Bound(std::min(*b.lower[i], *lo)) : Bound();
          b.upper[i] = (b.upper[i] && hi) ? Bound(std::max(*b.upper[i], *hi)) : Bound();
        }
      }
      first = false;
    }
  if (sn.isEmpty()) b = SupportBounds::none(dim);
  int sigma = 0;
  for (int x : res.fineShift) sigma += x;
  const int cM = sigma - res.shift;
  ExtAnComplex ec{&res, n};
  return runTable("ExtA(M,N)", nus, window, b, n->coarseOffset() - cM, opts, false,
                  [&](const FineDegree& w, int nu) { return ec.at(w, nu); });
}

HomologyTable torOverR(const ModelPtr& m, const ModelPtr& n, const std::vector<int>& nus, DegreeWindow window,
                       const HomologyOptions& opts) {
  if (m->n() != n->n()) throw DimensionMismatch("Tor over R of modules in different dimensions");
  requireLeftFull(*m, "Tor over R");
  requireLeftFull(*n, "Tor over R");
  if (isFreeRankOne(*m)) return degenerateTable("TorR(M,N)", n, m->coarseOffset(), nus, window, opts);
  if (isFreeRankOne(*n)) return degenerateTable("TorR(M,N)", m, n->coarseOffset(), nus, window, opts);
  const std::size_t dim = m->n();
  const SupportBounds sa = m->support(), sb = n->support();
  SupportBounds b = SupportBounds::unbounded(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    b.lower[i] = sa.lower[i] && sb.lower[i] ? Bound(*sa.lower[i] + *sb.lower[i]) : Bound();
    b.upper[i] = sa.upper[i] && sb.upper[i] ? Bound(*sa.upper[i] + *sb.upper[i] + 1) : Bound();
  }
  if (sa.isEmpty() || sb.isEmpty()) b = SupportBounds::none(dim);
  TorRComplex tc{m, n};
  return runTable("TorR(M,N)", nus, window, b, m->coarseOffset() + n->coarseOffset(), opts, true,
                  [&](const FineDegree& x, int nu) { return tc.at(x, nu); });
}

HomologyTable extOverR(const ModelPtr& m, const ModelPtr& l, const std::vector<int>& nus, DegreeWindow window,
                       const HomologyOptions& opts) {
  if (m->n() != l->n()) throw DimensionMismatch("Ext over R of modules in different dimensions");
  requireLeftFull(*m, "Ext over R");
  requireLeftFull(*l, "Ext over R");
  if (isFreeRankOne(*m)) return degenerateTable("ExtR(M,L)", l, -m->coarseOffset(), nus, window, opts);
  const std::size_t dim = m->n();
  const SupportBounds sm = m->support(), sl = l->support();
  SupportBounds b = SupportBounds::unbounded(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    b.lower[i] = sl.lower[i] && sm.upper[i] ? Bound(*sl.lower[i] - *sm.upper[i] - 1) : Bound();
    b.upper[i] = sl.upper[i] && sm.lower[i] ? Bound(*sl.upper[i] - *sm.lower[i]) : Bound();
  }
  if (sm.isEmpty() || sl.isEmpty()) b = SupportBounds::none(dim);
  ExtRComplex ec{m, l};
  return runTable("ExtR(M,L)", nus, window, b, l->coarseOffset() - m->coarseOffset(), opts, true,
                  [&](const FineDegree& t, int nu) { return ec.at(t, nu); });
}

std::string ConcentrationReport::verdict() const {
  std::ostringstream os;
  if (concentrated) {
    os << "concentrated at " << expectedDegree << " (window-verified on [" << window.lo << "," << window.hi << "]";
    if (vacuous) os << ", vacuous";
    os << ")";
  } else {
    const auto& [nu, d, k] = *counterexample;
    os << "counterexample: index " << nu << ", degree " << d << ", dim " << k;
  }
  return os.str();
}

ConcentrationReport concentration(const HomologyTable& t, int expectedDegree) {
  ConcentrationReport r;
  r.invariant = t.invariant;
  r.indices = t.indices;
  r.window = t.window;
  r.table = t.dims;
  r.expectedDegree = expectedDegree;
  r.vacuous = true;
  for (const auto& [key, d] : t.dims) {
    if (d == 0) continue;
    r.vacuous = false;
    if (key.second != expectedDegree && !r.counterexample) {
      r.concentrated = false;
      r.counterexample = std::make_tuple(key.first, key.second, d);
    }
  }
  return r;
}

}  // namespace weyl
