#include "weyl/eulerian.hpp"

#include <algorithm>

namespace weyl {

EulerianReport checkGeneralizedEulerian(const GradedModel& m, DegreeWindow window, unsigned bound,
                                        std::optional<int> radius, ExecPolicy policy) {
  EulerianReport r;
  r.window = window;
  r.bound = bound;
  r.radius = radius.value_or(defaultRadius(window));
  auto plan = planCells(m, window, r.radius);
  r.exactPieces = plan.exact;
  auto& byDegree = plan.cells;

  std::vector<std::pair<int, FineDegree>> cells;
  for (auto& [d, vs] : byDegree)
    for (auto& v : vs) cells.emplace_back(d, v);
  std::vector<std::optional<unsigned>> orders(cells.size());
  parallelFor(policy, cells.size(), [&](std::size_t k) {
    const auto& [d, v] = cells[k];
    Matrix e = eulerMatrix(m, v);
    e -= Matrix::scalar(e.rows(), d);
    orders[k] = nilpotencyOrder(e, bound);
  });

  for (const auto& [d, vs] : byDegree) r.perDegree[d] = 1u;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    auto& slot = r.perDegree[cells[k].first];
    if (!slot) continue;
    if (!orders[k]) slot.reset();
    else slot = std::max(*slot, *orders[k]);
  }
  r.cellsChecked = cells.size();
  std::optional<unsigned> uniform = 1u;
  for (const auto& [d, o] : r.perDegree) {
    if (!o) {
      uniform.reset();
      break;
    }
    uniform = std::max(*uniform, *o);
  }
  r.uniformBound = uniform;
  return r;
}

}  // namespace weyl
