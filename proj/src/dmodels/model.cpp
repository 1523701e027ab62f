#include "weyl/model.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "weyl/error.hpp"

namespace weyl {

SupportBounds SupportBounds::unbounded(std::size_t n) {
  return SupportBounds{std::vector<std::optional<int>>(n), std::vector<std::optional<int>>(n)};
}

SupportBounds SupportBounds::none(std::size_t n) {
  return SupportBounds{std::vector<std::optional<int>>(n, 0), std::vector<std::optional<int>>(n, -1)};
}

bool SupportBounds::contains(const FineDegree& v) const {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (lower[i] && v[i] < *lower[i]) return false;
    if (upper[i] && v[i] > *upper[i]) return false;
  }
  return true;
}

bool SupportBounds::isEmpty() const {
  for (std::size_t i = 0; i < lower.size(); ++i)
    if (lower[i] && upper[i] && *lower[i] > *upper[i]) return true;
  return false;
}

GradedModel::GradedModel(std::size_t n, std::size_t actingRank, int coarseOffset, Side side)
    : n_(n), actingRank_(actingRank), offset_(coarseOffset), side_(side) {
  if (actingRank > n) throw DimensionMismatch("acting rank exceeds the fine rank");
}

int GradedModel::coarseDegree(const FineDegree& v) const {
  return std::accumulate(v.begin(), v.end(), 0) + offset_;
}

void GradedModel::checkIndex(std::size_t i, const FineDegree& v) const {
  if (v.size() != n_) throw DimensionMismatch("fine degree has wrong length");
  if (i >= actingRank_) throw DimensionMismatch("operator index outside the acting Weyl algebra");
}

std::vector<std::string> GradedModel::basis(const FineDegree& v) const {
  if (v.size() != n_) throw DimensionMismatch("fine degree has wrong length");
  {
    std::lock_guard<std::mutex> lock(memoMutex_);
    auto it = memo_.find(v);
    if (it != memo_.end()) return it->second;
  }
  // computed outside the lock; concurrent computations agree, first insert wins
  auto labels = computeBasis(v);
  std::lock_guard<std::mutex> lock(memoMutex_);
  return memo_.try_emplace(v, std::move(labels)).first->second;
}

std::size_t GradedModel::dim(const FineDegree& v) const { return basis(v).size(); }

FineDegree plusUnit(FineDegree v, std::size_t i, int by) {
  v.at(i) += by;
  return v;
}

Matrix eulerMatrix(const GradedModel& m, const FineDegree& v) {
  const std::size_t d = m.dim(v);
  Matrix e(d, d);
  if (d == 0) return e;
  for (std::size_t i = 0; i < m.actingRank(); ++i) {
    if (m.side() == Side::Left) {
      const auto below = plusUnit(v, i, -1);
      e += m.actX(i, below) * m.actD(i, v);
    } else {
      const auto above = plusUnit(v, i, 1);
      e += m.actD(i, above) * m.actX(i, v);
    }
  }
  return e;
}

Matrix actElement(const GradedModel& m, const WeylElement& a, const FineDegree& v) {
  if (m.side() != Side::Left) throw Error("element action is defined here for left modules");
  if (a.n() != m.actingRank()) throw DimensionMismatch("element ring does not match the acting Weyl algebra");
  FineDegree target = v;
  if (!a.isZero()) {
    auto fd = a.fineDegree();
    if (!fd) throw InhomogeneousError("acting element is not fine-homogeneous");
    for (std::size_t i = 0; i < fd->size(); ++i) target[i] += (*fd)[i];
  }
  Matrix out(m.dim(target), m.dim(v));
  for (const auto& [mono, c] : a.terms()) {
    FineDegree cur = v;
    Matrix acc = Matrix::identity(m.dim(v));
    // x^alpha d^beta acts as d's first, then x's
    for (std::size_t i = 0; i < mono.n(); ++i) {
      for (unsigned k = 0; k < mono.d[i]; ++k) {
        acc = m.actD(i, cur) * acc;
        cur[i] -= 1;
      }
    }
    for (std::size_t i = 0; i < mono.n(); ++i) {
      for (unsigned k = 0; k < mono.x[i]; ++k) {
        acc = m.actX(i, cur) * acc;
        cur[i] += 1;
      }
    }
    out += acc * c;
  }
  return out;
}

namespace {

void enumerate(std::size_t i, FineDegree& v, int partial, const std::vector<int>& lo,
               const std::vector<int>& hi, int slo, int shi, std::vector<FineDegree>& out) {
  const std::size_t n = v.size();
  if (i == n) {
    if (partial >= slo && partial <= shi) out.push_back(v);
    return;
  }
  // reachable range of the remaining coordinates
  int restLo = 0, restHi = 0;
  for (std::size_t k = i + 1; k < n; ++k) {
    restLo += lo[k];
    restHi += hi[k];
  }
  for (int x = lo[i]; x <= hi[i]; ++x) {
    const int s = partial + x;
    if (s + restHi < slo) continue;
    if (s + restLo > shi) break;
    v[i] = x;
    enumerate(i + 1, v, s, lo, hi, slo, shi, out);
  }
}

}  // namespace

std::vector<FineDegree> cellsInWindow(const GradedModel& m, int lo, int hi, int radius) {
  return cellsInWindow(m.support(), m.coarseOffset(), lo, hi, radius);
}

std::vector<FineDegree> cellsInWindow(const SupportBounds& b, int offset, int lo, int hi, int radius) {
  const std::size_t n = b.lower.size();
  if (b.isEmpty() || lo > hi) return {};
  std::vector<int> l(n), h(n);
  for (std::size_t i = 0; i < n; ++i) {
    l[i] = b.lower[i] ? std::max(*b.lower[i], -radius) : -radius;
    h[i] = b.upper[i] ? std::min(*b.upper[i], radius) : radius;
    if (l[i] > h[i]) return {};
  }
  std::vector<FineDegree> out;
  FineDegree v(n, 0);
  enumerate(0, v, 0, l, h, lo - offset, hi - offset, out);
  return out;
}

int defaultRadius(const DegreeWindow& w) { return std::max(std::abs(w.lo), std::abs(w.hi)) + 2; }

CellPlan planCells(const SupportBounds& b, int offset, const DegreeWindow& w, int radius) {
  CellPlan plan;
  plan.radius = radius;
  for (int d = w.lo; d <= w.hi; ++d) plan.cells[d];
  plan.exact = cellsOfTotal(b, 0).has_value();
  if (plan.exact) {
    for (int d = w.lo; d <= w.hi; ++d) plan.cells[d] = *cellsOfTotal(b, d - offset);
  } else {
    for (auto& v : cellsInWindow(b, offset, w.lo, w.hi, radius)) {
      int d = offset;
      for (int x : v) d += x;
      plan.cells[d].push_back(std::move(v));
    }
  }
  return plan;
}

CellPlan planCells(const GradedModel& m, const DegreeWindow& w, int radius) {
  return planCells(m.support(), m.coarseOffset(), w, radius);
}

std::optional<std::vector<FineDegree>> cellsOfTotal(const SupportBounds& b, int target) {
  const std::size_t n = b.lower.size();
  if (b.isEmpty()) return std::vector<FineDegree>{};
  auto lo = b.lower;
  auto hi = b.upper;
  // tighten with the hyperplane constraint until stable
  for (std::size_t round = 0; round <= n; ++round) {
    for (std::size_t j = 0; j < n; ++j) {
      bool allLo = true, allHi = true;
      long long sumLo = 0, sumHi = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == j) continue;
        if (lo[k]) sumLo += *lo[k]; else allLo = false;
        if (hi[k]) sumHi += *hi[k]; else allHi = false;
      }
      if (allLo) {
        const int ub = static_cast<int>(target - sumLo);
        if (!hi[j] || ub < *hi[j]) hi[j] = ub;
      }
      if (allHi) {
        const int lb = static_cast<int>(target - sumHi);
        if (!lo[j] || lb > *lo[j]) lo[j] = lb;
      }
    }
  }
  std::size_t unboundedCount = 0;
  for (std::size_t j = 0; j < n; ++j)
    if (!lo[j] || !hi[j]) ++unboundedCount;
  if (unboundedCount > 0 && n > 1) return std::nullopt;
  if (n == 0) return target == 0 ? std::vector<FineDegree>{FineDegree{}} : std::vector<FineDegree>{};
  std::vector<int> l(n), h(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (!lo[j] || !hi[j]) {
      // n == 1: the single coordinate is fixed by the constraint
      l[j] = h[j] = target;
      if ((lo[j] && target < *lo[j]) || (hi[j] && target > *hi[j])) return std::vector<FineDegree>{};
    } else {
      l[j] = *lo[j];
      h[j] = *hi[j];
      if (l[j] > h[j]) return std::vector<FineDegree>{};
    }
  }
  std::vector<FineDegree> out;
  FineDegree v(n, 0);
  enumerate(0, v, 0, l, h, target, target, out);
  return out;
}

bool coarsePiecesFinite(const GradedModel& m) {
  // finiteness does not depend on the target once the bounds are fixed
  return cellsOfTotal(m.support(), 0).has_value();
}

std::size_t coarseDim(const GradedModel& m, int degree) {
  auto cells = cellsOfTotal(m.support(), degree - m.coarseOffset());
  if (!cells) throw InfiniteDimensionalPiece("coarse piece of degree " + std::to_string(degree) +
                                             " is infinite-dimensional; query fine degrees instead");
  std::size_t d = 0;
  for (const auto& v : *cells) d += m.dim(v);
  return d;
}

std::vector<std::string> coarseBasis(const GradedModel& m, int degree) {
  auto cells = cellsOfTotal(m.support(), degree - m.coarseOffset());
  if (!cells) throw InfiniteDimensionalPiece("coarse piece of degree " + std::to_string(degree) +
                                             " is infinite-dimensional; query fine degrees instead");
  std::vector<std::string> out;
  for (const auto& v : *cells) {
    auto b = m.basis(v);
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

}  // namespace weyl
