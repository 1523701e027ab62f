#ifndef WEYL_MODELS_HPP
#define WEYL_MODELS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "weyl/groebner.hpp"
#include "weyl/model.hpp"

namespace weyl {

/// Squarefree monomial given by its support (0-based variable indices).
using SquarefreeMonomial = std::vector<std::size_t>;

/// R = K[x_1..x_n], fine piece x^v for v >= 0.
ModelPtr polynomialModel(std::size_t n);

/// R localized at prod_{i in S} x_i (0-based S). Fine pieces are always
/// one-dimensional; coarse pieces are finite only for n = 1.
ModelPtr localizationModel(std::size_t n, const std::vector<std::size_t>& s);

/// H^i_I(R) for the squarefree monomial ideal I with the given generators,
/// computed per fine degree from the Cech complex.
ModelPtr cechLocalCohomologyModel(std::size_t n, const std::vector<SquarefreeMonomial>& generators,
                                  std::size_t i);

/// (A_n/J)(shift) with the cyclic generator in fine degree -fineShift
/// (default zero). J must be fine-homogeneous; pieces must be finite.
ModelPtr presentationModel(const GroebnerBasis& j, int shift,
                           std::optional<std::vector<int>> fineShift = std::nullopt);

/// M(s): M(s)_d = M_{s+d}.
ModelPtr shift(const ModelPtr& m, int s);

/// Graded Matlis dual, (M^v)_v = (M_{-v})^*, with d acting through tau(d) = -d.
ModelPtr matlisDual(const ModelPtr& m);

/// Right module m * a = tau(a) m.
ModelPtr transposeModel(const ModelPtr& m);

enum class KoszulOp { X, D };
enum class KoszulPart { Kernel, Cokernel };

/// Kernel or cokernel of x_k or d_k (k = acting rank) as a module over the
/// smaller Weyl algebra, labelled so that E_{k-1} matches the degree:
/// ker x_k and coker d_k sit one degree up.
ModelPtr koszulPiece(const ModelPtr& m, KoszulOp op, KoszulPart part);

/// Builds a model from its JSON descriptor {constructor, args, shift, of}.
ModelPtr modelFromDescriptor(const nlohmann::json& d);

/// Parses "x1*x2, x3" into squarefree generators; rejects non-squarefree input.
std::vector<SquarefreeMonomial> parseMonomialIdeal(const std::string& text, std::size_t n);
std::string formatMonomialIdeal(const std::vector<SquarefreeMonomial>& gens);

/// Every squarefree monomial ideal in n variables, as a minimal generating
/// antichain (includes the zero ideal {} and the unit ideal {{}}).
std::vector<std::vector<SquarefreeMonomial>> squarefreeMonomialIdeals(std::size_t n);

struct CatalogPresentation {
  std::size_t n;
  std::vector<std::size_t> subset;        // S
  std::vector<WeylElement> generators;    // x_j (j in S), d_k (k not in S)
  int shift;                              // |S|
  std::vector<int> fineShift;             // indicator of S
  std::vector<SquarefreeMonomial> ideal;  // (x_S) as Cech data
  std::size_t cohomologicalIndex;         // |S|
};

/// H^{|S|}_{(x_S)}(R) = (A_n / A_n(x_S, d_{S^c}))(|S|) for every S in [n].
std::vector<CatalogPresentation> catalogPresentations(std::size_t n);
ModelPtr presentationModel(const CatalogPresentation& p);

/// H^i_I(R) for every squarefree monomial ideal I in n variables and 0 <= i <= n.
std::vector<ModelPtr> catalogLocalCohomology(std::size_t n);

}  // namespace weyl

#endif
