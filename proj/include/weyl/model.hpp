#ifndef WEYL_MODEL_HPP
#define WEYL_MODEL_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "weyl/element.hpp"
#include "weyl/matrix.hpp"

namespace weyl {

/// Fine Z^n-degree; x_i has fine degree e_i and d_i has -e_i. The coarse
/// degree of a fine cell v is |v| + coarseOffset.
using FineDegree = std::vector<int>;

/// Per-coordinate bounds containing the fine support; nullopt is unbounded.
struct SupportBounds {
  std::vector<std::optional<int>> lower;
  std::vector<std::optional<int>> upper;

  static SupportBounds unbounded(std::size_t n);
  static SupportBounds none(std::size_t n);
  bool contains(const FineDegree& v) const;
  bool isEmpty() const;
};

enum class Side { Left, Right };

/// A graded module presented per fine degree by a finite basis and exact
/// matrices for x_i (M_v -> M_{v+e_i}) and d_i (M_v -> M_{v-e_i}).
/// For right modules the matrices give m.x_i and m.d_i.
class GradedModel {
 public:
  GradedModel(std::size_t n, std::size_t actingRank, int coarseOffset, Side side);
  virtual ~GradedModel() = default;
  GradedModel(const GradedModel&) = delete;
  GradedModel& operator=(const GradedModel&) = delete;

  std::size_t n() const { return n_; }
  /// A_k acts through x_1..x_k, d_1..d_k.
  std::size_t actingRank() const { return actingRank_; }
  int coarseOffset() const { return offset_; }
  Side side() const { return side_; }
  int coarseDegree(const FineDegree& v) const;

  std::size_t dim(const FineDegree& v) const;
  std::vector<std::string> basis(const FineDegree& v) const;

  virtual Matrix actX(std::size_t i, const FineDegree& v) const = 0;
  virtual Matrix actD(std::size_t i, const FineDegree& v) const = 0;
  virtual SupportBounds support() const = 0;
  virtual nlohmann::json descriptor() const = 0;

 protected:
  virtual std::vector<std::string> computeBasis(const FineDegree& v) const = 0;
  void checkIndex(std::size_t i, const FineDegree& v) const;

 private:
  std::size_t n_;
  std::size_t actingRank_;
  int offset_;
  Side side_;
  mutable std::mutex memoMutex_;
  mutable std::map<FineDegree, std::vector<std::string>> memo_;
};

using ModelPtr = std::shared_ptr<const GradedModel>;

FineDegree plusUnit(FineDegree v, std::size_t i, int by = 1);

/// Matrix of E_k = sum_{i<k} x_i d_i on M_v (k = acting rank). For right
/// modules this is the right action m.E_k.
Matrix eulerMatrix(const GradedModel& m, const FineDegree& v);

/// Matrix of a fine-homogeneous element acting on M_v (left modules).
Matrix actElement(const GradedModel& m, const WeylElement& a, const FineDegree& v);

/// All fine cells v with coarse degree in [lo, hi], |v_i| <= radius, inside the
/// model's support bounds; sorted.
std::vector<FineDegree> cellsInWindow(const GradedModel& m, int lo, int hi, int radius);
std::vector<FineDegree> cellsInWindow(const SupportBounds& b, int offset, int lo, int hi, int radius);

/// Enumerates v inside the bounds with |v| = target, or nullopt when the set is infinite.
std::optional<std::vector<FineDegree>> cellsOfTotal(const SupportBounds& b, int target);

struct DegreeWindow {
  int lo = 0;
  int hi = 0;
};

/// Default half-width of the fine box used when coarse pieces are infinite.
int defaultRadius(const DegreeWindow& w);

/// Fine cells making up each coarse degree of a window for a fine support with
/// coarse degree |v| + offset.
struct CellPlan {
  std::map<int, std::vector<FineDegree>> cells;
  bool exact = true;  // false: infinite coarse pieces sampled on the box |v_i| <= radius
  int radius = 0;
};
CellPlan planCells(const SupportBounds& b, int offset, const DegreeWindow& w, int radius);
CellPlan planCells(const GradedModel& m, const DegreeWindow& w, int radius);

/// Whether every coarse piece is finite-dimensional (the fine support meets
/// each hyperplane |v| = c in a finite set).
bool coarsePiecesFinite(const GradedModel& m);

/// Coarse piece queries; throw InfiniteDimensionalPiece when the piece is infinite.
std::size_t coarseDim(const GradedModel& m, int degree);
std::vector<std::string> coarseBasis(const GradedModel& m, int degree);

}  // namespace weyl

#endif
