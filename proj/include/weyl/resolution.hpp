#ifndef WEYL_RESOLUTION_HPP
#define WEYL_RESOLUTION_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "weyl/groebner.hpp"

namespace weyl {

/// Graded free resolution F_L -> ... -> F_0 -> (A_n/J)(s) -> 0.
/// differential(k), k >= 1, lists the images of the generators of F_k in F_{k-1}.
struct FreeResolution {
  std::size_t n = 0;
  int shift = 0;
  std::vector<int> fineShift;
  std::vector<WeylElement> presentation;  // Gröbner basis of J
  std::vector<std::vector<int>> degrees;
  // Empty when some stage is not homogeneous for the fine grading.
  std::vector<std::vector<std::vector<int>>> fineDegrees;
  std::vector<std::vector<FreeModuleElement>> differentials;
  bool truncated = false;

  std::size_t length() const { return degrees.size() - 1; }
  std::size_t rank(std::size_t k) const { return k < degrees.size() ? degrees[k].size() : 0; }
  bool hasFineDegrees() const { return !fineDegrees.empty(); }
  const std::vector<FreeModuleElement>& differential(std::size_t k) const { return differentials.at(k - 1); }
};

/// Resolution of (A_n/J)(shift); fineShift (default zero) sets the fine
/// degree of the cyclic generator to -fineShift.
FreeResolution freeResolution(const GroebnerBasis& j, int shift = 0,
                              std::optional<std::vector<int>> fineShift = std::nullopt,
                              std::optional<std::size_t> maxLength = std::nullopt);

/// d_{k} after d_{k+1} vanishes at every stage.
bool isComplex(const FreeResolution& res);

/// Image of a row vector (element of F_k) under the differential into F_{k-1}.
FreeModuleElement applyDifferential(const FreeResolution& res, std::size_t k, const FreeModuleElement& v);

}  // namespace weyl

#endif
