#ifndef WEYL_HOMOLOGY_HPP
#define WEYL_HOMOLOGY_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "weyl/model.hpp"
#include "weyl/models.hpp"
#include "weyl/parallel.hpp"
#include "weyl/resolution.hpp"

namespace weyl {

struct KoszulOperator {
  KoszulOp kind;
  std::size_t index;  // 0-based variable
};

/// The n operators d_1..d_n (de Rham complex).
std::vector<KoszulOperator> derhamOperators(std::size_t n);

struct HomologyOptions {
  std::optional<int> radius;  // fine box when coarse pieces are infinite
  ExecPolicy policy = ExecPolicy::Parallel;
  bool euler = true;          // carry E through the complex and test nilpotency
  unsigned eulerBound = 10;
};

/// Per-degree dimensions of a derived invariant over a window. Every fine
/// cell is computed exactly; when coarse pieces are infinite the cells are
/// those inside the box |v_i| <= radius.
struct HomologyTable {
  std::string invariant;
  DegreeWindow window;
  std::vector<int> indices;
  bool exactPieces = true;
  int radius = 0;
  std::size_t cellsEvaluated = 0;
  std::map<std::pair<int, int>, std::size_t> dims;  // (index, degree) -> dim
  // Induced (E - degree) nilpotency order per nonzero entry; nullopt when
  // not nilpotent within the bound. Empty when no E-action is carried.
  std::map<std::pair<int, int>, std::optional<unsigned>> eulerOrders;

  std::size_t dim(int index, int degree) const;
  /// Max Euler order over the table, or nullopt when some entry fails.
  std::optional<unsigned> eulerUniformBound() const;
  bool eulerCompatible() const;
};

/// Cohomology H^i of the Koszul complex of ops on M, for every i in `indices`.
/// Operators must pairwise commute (x_i with d_i is rejected) and lie in the
/// acting range of M.
HomologyTable koszulHomology(const ModelPtr& m, const std::vector<KoszulOperator>& ops,
                             const std::vector<int>& indices, DegreeWindow window,
                             const HomologyOptions& opts = {});

/// Tor^{A_n}_nu(R^r, M) = H^{n-nu}(d, M).
HomologyTable torAgainstRr(const ModelPtr& m, const std::vector<int>& nus, DegreeWindow window,
                           const HomologyOptions& opts = {});

/// Ext^nu_{A_n}(M, N) from a free resolution of M with fine degrees, evaluated on N.
HomologyTable extOverAn(const FreeResolution& res, const ModelPtr& n, const std::vector<int>& nus,
                        DegreeWindow window, const HomologyOptions& opts = {});

/// Tor^R_nu(M, N) over R = K[x_1..x_n] via the Koszul complex of x_j (x) 1 - 1 (x) x_j on
/// M (x)_K N. Throws InfiniteDimensionalPiece when a tensor piece is infinite.
HomologyTable torOverR(const ModelPtr& m, const ModelPtr& n, const std::vector<int>& nus,
                       DegreeWindow window, const HomologyOptions& opts = {});

/// Graded Ext^nu_R(M, L) via the Koszul complex of x_j o - o x_j on Hom_K(M, L).
HomologyTable extOverR(const ModelPtr& m, const ModelPtr& l, const std::vector<int>& nus,
                       DegreeWindow window, const HomologyOptions& opts = {});

struct ConcentrationReport {
  std::string invariant;
  std::vector<int> indices;
  DegreeWindow window;
  std::map<std::pair<int, int>, std::size_t> table;
  int expectedDegree = 0;
  bool concentrated = true;
  bool vacuous = false;
  std::optional<std::tuple<int, int, std::size_t>> counterexample;  // (index, degree, dim)

  std::string verdict() const;
};

ConcentrationReport concentration(const HomologyTable& t, int expectedDegree);

}  // namespace weyl

#endif
