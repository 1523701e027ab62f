#ifndef WEYL_EULERIAN_HPP
#define WEYL_EULERIAN_HPP

#include <map>
#include <optional>

#include "weyl/model.hpp"
#include "weyl/parallel.hpp"

namespace weyl {

struct EulerianReport {
  DegreeWindow window;
  unsigned bound = 0;
  int radius = 0;
  bool exactPieces = true;  // false: infinite coarse pieces were sampled on the box
  std::size_t cellsChecked = 0;
  // nilpotency order of (E - d) on M_d, nullopt = not nilpotent within bound
  std::map<int, std::optional<unsigned>> perDegree;
  std::optional<unsigned> uniformBound;

  bool passed() const { return uniformBound.has_value(); }
};

/// Window-verified generalized Eulerian check: (E_k - d)^a on every piece M_d.
EulerianReport checkGeneralizedEulerian(const GradedModel& m, DegreeWindow window, unsigned bound = 10,
                                        std::optional<int> radius = std::nullopt,
                                        ExecPolicy policy = ExecPolicy::Parallel);

}  // namespace weyl

#endif
