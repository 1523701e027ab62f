#include "weyl/resolution.hpp"

#include "weyl/error.hpp"

namespace weyl {

namespace {

std::optional<std::vector<std::vector<int>>> fineDegreesOf(
    const std::vector<FreeModuleElement>& rows, const std::vector<std::vector<int>>& ambient) {
  std::vector<std::vector<int>> out;
  for (const auto& r : rows) {
    auto d = moduleFineDegree(r, ambient);
    if (!d) return std::nullopt;
    out.push_back(std::move(*d));
  }
  return out;
}

}  // namespace

FreeResolution freeResolution(const GroebnerBasis& j, int shift, std::optional<std::vector<int>> fineShift,
                              std::optional<std::size_t> maxLength) {
  if (j.rank() != 1) throw Error("resolutions are built for cyclic modules A_n/J");
  const std::size_t n = j.n();
  FreeResolution res;
  res.n = n;
  res.shift = shift;
  res.fineShift = fineShift.value_or(std::vector<int>(n, 0));
  if (res.fineShift.size() != n) throw DimensionMismatch("fine shift has wrong length");
  res.presentation = j.idealGenerators();
  const std::size_t limit = maxLength.value_or(2 * n + 1);

  std::vector<int> f0Fine(n);
  for (std::size_t i = 0; i < n; ++i) f0Fine[i] = -res.fineShift[i];
  res.degrees.push_back({-shift});
  std::vector<std::vector<std::vector<int>>> fine{{f0Fine}};
  bool fineOk = true;

  std::vector<FreeModuleElement> rows = j.generators();
  while (!rows.empty()) {
    if (res.length() >= limit) {
      res.truncated = true;
      break;
    }
    const std::vector<int> ambient = res.degrees.back();
    std::vector<int> degs;
    for (const auto& r : rows) {
      auto d = moduleDegree(r, ambient);
      if (!d) throw InhomogeneousError("inhomogeneous differential in resolution");
      degs.push_back(*d);
    }
    if (fineOk) {
      auto f = fineDegreesOf(rows, fine.back());
      if (f) fine.push_back(std::move(*f));
      else fineOk = false;
    }
    res.differentials.push_back(rows);
    res.degrees.push_back(degs);
    rows = syzygies(rows, j.order(), ambient);
  }
  if (fineOk) res.fineDegrees = std::move(fine);
  return res;
}

FreeModuleElement applyDifferential(const FreeResolution& res, std::size_t k, const FreeModuleElement& v) {
  const auto& d = res.differential(k);
  if (v.rank() != d.size()) throw DimensionMismatch("vector rank does not match F_k");
  FreeModuleElement out(res.n, res.rank(k - 1));
  for (std::size_t l = 0; l < d.size(); ++l) {
    if (v[l].isZero()) continue;
    out += v[l] * d[l];
  }
  return out;
}

bool isComplex(const FreeResolution& res) {
  for (std::size_t k = 2; k <= res.length(); ++k) {
    for (const auto& row : res.differential(k))
      if (!applyDifferential(res, k - 1, row).isZero()) return false;
  }
  return true;
}

}  // namespace weyl
