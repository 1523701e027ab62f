#include "weyl/models.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "weyl/element_io.hpp"
#include "weyl/error.hpp"

namespace weyl {

namespace {

std::string laurentLabel(const FineDegree& v) {
  std::ostringstream os;
  os << "x^(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

nlohmann::json makeDescriptor(const std::string& ctor, nlohmann::json args) {
  return nlohmann::json{{"constructor", ctor}, {"args", std::move(args)}, {"shift", 0}};
}

nlohmann::json wrapDescriptor(const std::string& ctor, const GradedModel& inner, nlohmann::json args = nlohmann::json::object()) {
  return nlohmann::json{{"constructor", ctor}, {"args", std::move(args)}, {"of", inner.descriptor()}, {"shift", 0}};
}

// R with the variables in `inverted` inverted: one Laurent monomial per fine degree.
class LaurentModel final : public GradedModel {
 public:
  LaurentModel(std::size_t n, std::vector<bool> inverted)
      : GradedModel(n, n, 0, Side::Left), inverted_(std::move(inverted)) {}

  Matrix actX(std::size_t i, const FineDegree& v) const override {
    checkIndex(i, v);
    Matrix m(dim(plusUnit(v, i)), dim(v));
    if (m.rows() == 1 && m.cols() == 1) m(0, 0) = 1;
    return m;
  }

  Matrix actD(std::size_t i, const FineDegree& v) const override {
    checkIndex(i, v);
    Matrix m(dim(plusUnit(v, i, -1)), dim(v));
    if (m.rows() == 1 && m.cols() == 1) m(0, 0) = v[i];
    return m;
  }

  SupportBounds support() const override {
    auto b = SupportBounds::unbounded(n());
    for (std::size_t i = 0; i < n(); ++i)
      if (!inverted_[i]) b.lower[i] = 0;
    return b;
  }

  nlohmann::json descriptor() const override {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n(); ++i)
      if (inverted_[i]) s.push_back(i + 1);
    if (s.empty()) return makeDescriptor("polynomial", {{"n", n()}});
    return makeDescriptor("localization", {{"n", n()}, {"S", s}});
  }

 protected:
  std::vector<std::string> computeBasis(const FineDegree& v) const override {
    if (!support().contains(v)) return {};
    return {laurentLabel(v)};
  }

 private:
  std::vector<bool> inverted_;
};

// Cech cohomology per sign pattern N = {j : v_j < 0}. The Cech component of a
// generator subset T contains x^v iff N lies inside the union of supports of T.
class CechModel final : public GradedModel {
 public:
  CechModel(std::size_t n, std::vector<SquarefreeMonomial> gens, std::size_t i)
      : GradedModel(n, n, 0, Side::Left), gens_(std::move(gens)), index_(i) {
    if (n > 20) throw Error("Cech model supports at most 20 variables");
    if (gens_.size() > 16) throw Error("Cech model supports at most 16 generators");
    for (const auto& g : gens_) {
      std::uint32_t mask = 0;
      for (auto j : g) {
        if (j >= n) throw DimensionMismatch("ideal generator uses a variable beyond n");
        mask |= 1u << j;
      }
      masks_.push_back(mask);
    }
    bounds_ = computeBounds();
  }

  Matrix actX(std::size_t j, const FineDegree& v) const override {
    checkIndex(j, v);
    const auto w = plusUnit(v, j);
    const auto& src = pattern(maskOf(v));
    const auto& dst = pattern(maskOf(w));
    if (src.h.dim() == 0 || dst.h.dim() == 0) return Matrix(dst.h.dim(), src.h.dim());
    if (maskOf(v) == maskOf(w)) return Matrix::identity(src.h.dim());
    // the inclusion of Cech components induces the map
    Matrix t(dst.level.size(), src.level.size());
    for (std::size_t c = 0; c < src.level.size(); ++c) {
      auto it = std::find(dst.level.begin(), dst.level.end(), src.level[c]);
      t(static_cast<std::size_t>(it - dst.level.begin()), c) = 1;
    }
    return src.h.induced(t, dst.h);
  }

  Matrix actD(std::size_t j, const FineDegree& v) const override {
    checkIndex(j, v);
    const auto w = plusUnit(v, j, -1);
    const std::size_t ds = dim(v), dt = dim(w);
    if (v[j] == 0 || ds == 0 || dt == 0) return Matrix(dt, ds);
    return Matrix::scalar(ds, v[j]);
  }

  SupportBounds support() const override { return bounds_; }

  nlohmann::json descriptor() const override {
    return makeDescriptor("cech", {{"n", n()}, {"ideal", formatMonomialIdeal(gens_)}, {"i", index_}});
  }

 protected:
  std::vector<std::string> computeBasis(const FineDegree& v) const override {
    const std::size_t d = pattern(maskOf(v)).h.dim();
    std::vector<std::string> out;
    for (std::size_t k = 0; k < d; ++k)
      out.push_back("H" + std::to_string(index_) + "[" + laurentLabel(v) + "]#" + std::to_string(k));
    return out;
  }

 private:
  struct Pattern {
    std::vector<std::uint32_t> level;  // generator subsets at cohomological index i
    Subquotient h;
  };

  std::uint32_t maskOf(const FineDegree& v) const {
    std::uint32_t m = 0;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] < 0) m |= 1u << j;
    return m;
  }

  std::vector<std::uint32_t> components(std::uint32_t neg, std::size_t p) const {
    std::vector<std::uint32_t> out;
    const std::size_t m = masks_.size();
    for (std::uint32_t t = 0; t < (1u << m); ++t) {
      if (static_cast<std::size_t>(std::popcount(t)) != p) continue;
      std::uint32_t uni = 0;
      for (std::size_t k = 0; k < m; ++k)
        if (t & (1u << k)) uni |= masks_[k];
      if ((neg & ~uni) == 0) out.push_back(t);
    }
    return out;
  }

  // Cech differential C^p -> C^{p+1} restricted to the given component lists.
  Matrix differential(const std::vector<std::uint32_t>& from, const std::vector<std::uint32_t>& to) const {
    Matrix d(to.size(), from.size());
    for (std::size_t c = 0; c < from.size(); ++c) {
      const std::uint32_t t = from[c];
      for (std::size_t g = 0; g < masks_.size(); ++g) {
        if (t & (1u << g)) continue;
        auto it = std::find(to.begin(), to.end(), t | (1u << g));
        if (it == to.end()) continue;
        const int below = std::popcount(t & ((1u << g) - 1));
        d(static_cast<std::size_t>(it - to.begin()), c) = (below % 2 == 0) ? 1 : -1;
      }
    }
    return d;
  }

  const Pattern& pattern(std::uint32_t neg) const {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = patterns_.find(neg);
      if (it != patterns_.end()) return *it->second;
    }
    auto p = std::make_unique<Pattern>();
    p->level = components(neg, index_);
    const auto next = components(neg, index_ + 1);
    Matrix out = differential(p->level, next);
    Matrix in;
    if (index_ > 0) in = differential(components(neg, index_ - 1), p->level);
    p->h = Subquotient::compute(p->level.size(), out, in);
    std::lock_guard<std::mutex> lock(mutex_);
    return *patterns_.try_emplace(neg, std::move(p)).first->second;
  }

  SupportBounds computeBounds() const {
    const std::size_t n = this->n();
    std::vector<bool> canNeg(n, false), canNonneg(n, false);
    bool any = false;
    for (std::uint32_t neg = 0; neg < (1u << n); ++neg) {
      if (pattern(neg).h.dim() == 0) continue;
      any = true;
      for (std::size_t j = 0; j < n; ++j) {
        if (neg & (1u << j)) canNeg[j] = true;
        else canNonneg[j] = true;
      }
    }
    if (!any) return SupportBounds::none(n);
    auto b = SupportBounds::unbounded(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (!canNeg[j]) b.lower[j] = 0;
      if (!canNonneg[j]) b.upper[j] = -1;
    }
    return b;
  }

  std::vector<SquarefreeMonomial> gens_;
  std::vector<std::uint32_t> masks_;
  std::size_t index_;
  SupportBounds bounds_;
  mutable std::mutex mutex_;
  mutable std::map<std::uint32_t, std::unique_ptr<Pattern>> patterns_;
};

// Standard monomials of a fine-homogeneous left ideal in each fine degree.
class PresentationModel final : public GradedModel {
 public:
  PresentationModel(GroebnerBasis j, int shift, std::vector<int> sigma)
      : GradedModel(j.n(), j.n(), total(sigma) - shift, Side::Left),
        gb_(std::move(j)), shift_(shift), sigma_(std::move(sigma)) {
    if (gb_.rank() != 1) throw Error("presentations are cyclic: A_n/J");
    for (const auto& g : gb_.idealGenerators())
      if (!g.fineDegree()) throw InhomogeneousError("presentation ideal is not homogeneous for the fine grading");
    for (const auto& [comp, mono] : gb_.leadingTerms()) leads_.push_back(mono);
  }

  Matrix actX(std::size_t i, const FineDegree& v) const override {
    checkIndex(i, v);
    return act(WeylElement::x(n(), i), v, plusUnit(v, i));
  }

  Matrix actD(std::size_t i, const FineDegree& v) const override {
    checkIndex(i, v);
    return act(WeylElement::d(n(), i), v, plusUnit(v, i, -1));
  }

  SupportBounds support() const override {
    auto b = SupportBounds::unbounded(n());
    for (const auto& l : leads_) {
      if (l.totalExponent() == 0) return SupportBounds::none(n());
      for (std::size_t j = 0; j < n(); ++j) {
        const bool pureX = l.x[j] == l.totalExponent();
        const bool pureD = l.d[j] == l.totalExponent();
        if (pureX) {
          const int ub = static_cast<int>(l.x[j]) - 1 - sigma_[j];
          if (!b.upper[j] || ub < *b.upper[j]) b.upper[j] = ub;
        }
        if (pureD) {
          const int lb = -(static_cast<int>(l.d[j]) - 1) - sigma_[j];
          if (!b.lower[j] || lb > *b.lower[j]) b.lower[j] = lb;
        }
      }
    }
    return b;
  }

  nlohmann::json descriptor() const override {
    std::string gens;
    for (const auto& g : gb_.idealGenerators()) gens += (gens.empty() ? "" : ", ") + toString(g);
    auto d = makeDescriptor("presentation", {{"n", n()}, {"gens", gens}, {"order", gb_.order().name()},
                                             {"fineShift", sigma_}});
    d["shift"] = shift_;
    return d;
  }

 protected:
  std::vector<std::string> computeBasis(const FineDegree& v) const override {
    std::vector<std::string> out;
    for (const auto& m : cell(v).monos) out.push_back(toString(m));
    return out;
  }

 private:
  struct Cell {
    std::vector<Monomial> monos;
    std::map<Monomial, std::size_t> index;
  };

  static int total(const std::vector<int>& v) {
    int s = 0;
    for (int x : v) s += x;
    return s;
  }

  const Cell& cell(const FineDegree& v) const {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = cells_.find(v);
      if (it != cells_.end()) return *it->second;
    }
    auto c = std::make_unique<Cell>();
    c->monos = standardMonomials(v);
    for (std::size_t k = 0; k < c->monos.size(); ++k) c->index.emplace(c->monos[k], k);
    std::lock_guard<std::mutex> lock(mutex_);
    return *cells_.try_emplace(v, std::move(c)).first->second;
  }

  // Monomials x^a d^b with a - b = v + sigma are x^{u+ + t} d^{u- + t}; the
  // divisible ones form the monomial ideal generated by one t per leading term.
  std::vector<Monomial> standardMonomials(const FineDegree& v) const {
    const std::size_t n = this->n();
    std::vector<int> up(n), um(n);
    for (std::size_t j = 0; j < n; ++j) {
      const int u = v[j] + sigma_[j];
      up[j] = std::max(u, 0);
      um[j] = std::max(-u, 0);
    }
    std::vector<std::vector<int>> ts;
    for (const auto& l : leads_) {
      std::vector<int> t(n);
      for (std::size_t j = 0; j < n; ++j)
        t[j] = std::max({0, static_cast<int>(l.x[j]) - up[j], static_cast<int>(l.d[j]) - um[j]});
      ts.push_back(std::move(t));
    }
    std::vector<std::optional<int>> cap(n);
    for (const auto& t : ts) {
      std::size_t support = 0, where = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (t[j] > 0) {
          ++support;
          where = j;
        }
      if (support == 0) return {};
      if (support == 1 && (!cap[where] || t[where] < *cap[where])) cap[where] = t[where];
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (!cap[j]) {
        std::ostringstream os;
        os << "A_n/J has an infinite-dimensional piece at fine degree " << laurentLabel(v)
           << " (standard monomials do not stabilize in direction " << j + 1 << ")";
        throw InfiniteDimensionalPiece(os.str());
      }
    }
    std::vector<Monomial> out;
    std::vector<int> t(n, 0);
    while (true) {
      bool standard = true;
      for (const auto& l : ts) {
        bool divisible = true;
        for (std::size_t j = 0; j < n && divisible; ++j) divisible = t[j] >= l[j];
        if (divisible) {
          standard = false;
          break;
        }
      }
      if (standard) {
        Monomial m = Monomial::one(n);
        for (std::size_t j = 0; j < n; ++j) {
          m.x[j] = static_cast<std::uint32_t>(up[j] + t[j]);
          m.d[j] = static_cast<std::uint32_t>(um[j] + t[j]);
        }
        out.push_back(m);
      }
      std::size_t j = 0;
      for (; j < n; ++j) {
        if (++t[j] < *cap[j]) break;
        t[j] = 0;
      }
      if (j == n) break;
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  Matrix act(const WeylElement& op, const FineDegree& v, const FineDegree& w) const {
    const Cell& src = cell(v);
    const Cell& dst = cell(w);
    Matrix m(dst.monos.size(), src.monos.size());
    for (std::size_t c = 0; c < src.monos.size(); ++c) {
      const WeylElement image = normalForm(op * WeylElement::monomial(src.monos[c]), gb_);
      for (const auto& [mono, coeff] : image.terms()) {
        auto it = dst.index.find(mono);
        if (it == dst.index.end()) throw Error("normal form left the standard monomials of its degree");
        m(it->second, c) = coeff;
      }
    }
    return m;
  }

  GroebnerBasis gb_;
  int shift_;
  std::vector<int> sigma_;
  std::vector<Monomial> leads_;
  mutable std::mutex mutex_;
  mutable std::map<FineDegree, std::unique_ptr<Cell>> cells_;
};

class ShiftModel final : public GradedModel {
 public:
  ShiftModel(ModelPtr inner, int s)
      : GradedModel(inner->n(), inner->actingRank(), inner->coarseOffset() - s, inner->side()),
        inner_(std::move(inner)), s_(s) {}

  const ModelPtr& inner() const { return inner_; }
  int amount() const { return s_; }

  Matrix actX(std::size_t i, const FineDegree& v) const override { return inner_->actX(i, v); }
  Matrix actD(std::size_t i, const FineDegree& v) const override { return inner_->actD(i, v); }
  SupportBounds support() const override { return inner_->support(); }
  nlohmann::json descriptor() const override {
    auto d = inner_->descriptor();
    d["shift"] = d.value("shift", 0) + s_;
    return d;
  }

 protected:
  std::vector<std::string> computeBasis(const FineDegree& v) const override { return inner_->basis(v); }

 private:
  ModelPtr inner_;
  int s_;
};

FineDegree negated(const FineDegree& v) {
  FineDegree w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = -v[i];
  return w;
}

class DualModel final : public GradedModel {
 public:
  explicit DualModel(ModelPtr inner)
      : GradedModel(inner->n(), inner->actingRank(), -inner->coarseOffset(), Side::Left), inner_(std::move(inner)) {
    if (inner_->side() != Side::Left) throw Error("Matlis dual is taken of left modules");
  }

  // (x phi)(m) = phi(x m)
  Matrix actX(std::size_t i, const FineDegree& v) const override {
    checkIndex(i, v);
    return inner_->actX(i, negated(plusUnit(v, i))).transposed();
  }

  // (d phi)(m) = phi(tau(d) m) = -phi(d m)
  Matrix actD(std::size_t i, const FineDegree& v) const override {
    checkIndex(i, v);
    Matrix m = inner_->actD(i, negated(plusUnit(v, i, -1))).transposed();
    m *= -1;
    return m;
  }

  SupportBounds support() const override {
    auto b = inner_->support();
    SupportBounds out = SupportBounds::unbounded(n());
    for (std::size_t i = 0; i < n(); ++i) {
      if (b.upper[i]) out.lower[i] = -*b.upper[i];
      if (b.lower[i]) out.upper[i] = -*b.lower[i];
    }
    return out;
  }

  nlohmann::json descriptor() const override { return wrapDescriptor("dual", *inner_); }

 protected:
  std::vector<std::string> computeBasis(const FineDegree& v) const override {
    auto b = inner_->basis(negated(v));
    for (auto& l : b) l = "dual(" + l + ")";
    return b;
  }

 private:
  ModelPtr inner_;
};

class TransposeModel final : public GradedModel {
 public:
  explicit TransposeModel(ModelPtr inner)
      : GradedModel(inner->n(), inner->actingRank(), inner->coarseOffset(),
                    inner->side() == Side::Left ? Side::Right : Side::Left),
        inner_(std::move(inner)) {}

  const ModelPtr& inner() const { return inner_; }

  // m * x = tau(x) m = x m, m * d = tau(d) m = -d m
  Matrix actX(std::size_t i, const FineDegree& v) const override { return inner_->actX(i, v); }
  Matrix actD(std::size_t i, const FineDegree& v) const override {
    Matrix m = inner_->actD(i, v);
    m *= -1;
    return m;
  }
  SupportBounds support() const override { return inner_->support(); }
  nlohmann::json descriptor() const override { return wrapDescriptor("transpose", *inner_); }

 protected:
  std::vector<std::string> computeBasis(const FineDegree& v) const override { return inner_->basis(v); }

 private:
  ModelPtr inner_;
};

class KoszulPieceModel final : public GradedModel {
 public:
  KoszulPieceModel(ModelPtr inner, KoszulOp op, KoszulPart part)
      : GradedModel(inner->n(), checkedRank(*inner) - 1, inner->coarseOffset() + labelShift(op, part), Side::Left),
        inner_(std::move(inner)), op_(op), part_(part), k_(inner_->actingRank() - 1) {}

  Matrix actX(std::size_t i, const FineDegree& v) const override {
    checkIndex(i, v);
    const auto w = plusUnit(v, i);
    return piece(v).induced(inner_->actX(i, v), piece(w));
  }

  Matrix actD(std::size_t i, const FineDegree& v) const override {
    checkIndex(i, v);
    const auto w = plusUnit(v, i, -1);
    return piece(v).induced(inner_->actD(i, v), piece(w));
  }

  SupportBounds support() const override { return inner_->support(); }

  nlohmann::json descriptor() const override {
    return wrapDescriptor("koszul", *inner_,
                          {{"op", op_ == KoszulOp::X ? "x" : "d"},
                           {"part", part_ == KoszulPart::Kernel ? "kernel" : "cokernel"}});
  }

 protected:
  std::vector<std::string> computeBasis(const FineDegree& v) const override {
    const std::size_t d = piece(v).dim();
    std::vector<std::string> out;
    const std::string tag = std::string(part_ == KoszulPart::Kernel ? "ker" : "coker") +
                            (op_ == KoszulOp::X ? "_x" : "_d") + std::to_string(k_ + 1);
    for (std::size_t j = 0; j < d; ++j) out.push_back(tag + "[" + laurentLabel(v) + "]#" + std::to_string(j));
    return out;
  }

 private:
  static std::size_t checkedRank(const GradedModel& m) {
    if (m.actingRank() == 0) throw Error("no operator left to take Koszul homology of");
    if (m.side() != Side::Left) throw Error("Koszul pieces are taken of left modules");
    return m.actingRank();
  }

  static int labelShift(KoszulOp op, KoszulPart part) {
    return (op == KoszulOp::X) == (part == KoszulPart::Kernel) ? 1 : 0;
  }

  const Subquotient& piece(const FineDegree& v) const {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = pieces_.find(v);
      if (it != pieces_.end()) return it->second;
    }
    const std::size_t d = inner_->dim(v);
    Subquotient s;
    if (part_ == KoszulPart::Kernel) {
      Matrix out = op_ == KoszulOp::X ? inner_->actX(k_, v) : inner_->actD(k_, v);
      s = Subquotient::compute(d, out, Matrix());
    } else {
      Matrix in = op_ == KoszulOp::X ? inner_->actX(k_, plusUnit(v, k_, -1)) : inner_->actD(k_, plusUnit(v, k_, 1));
      s = Subquotient::compute(d, Matrix(), in);
    }
    std::lock_guard<std::mutex> lock(mutex_);
    return pieces_.try_emplace(v, std::move(s)).first->second;
  }

  ModelPtr inner_;
  KoszulOp op_;
  KoszulPart part_;
  std::size_t k_;
  mutable std::mutex mutex_;
  mutable std::map<FineDegree, Subquotient> pieces_;
};

}  // namespace

ModelPtr polynomialModel(std::size_t n) {
  if (n == 0) throw Error("polynomial model needs n >= 1");
  return std::make_shared<LaurentModel>(n, std::vector<bool>(n, false));
}

ModelPtr localizationModel(std::size_t n, const std::vector<std::size_t>& s) {
  if (n == 0) throw Error("localization model needs n >= 1");
  if (s.empty()) throw Error("localization needs a nonempty set of inverted variables");
  std::vector<bool> inv(n, false);
  for (auto j : s) {
    if (j >= n) throw DimensionMismatch("inverted variable beyond n");
    inv[j] = true;
  }
  return std::make_shared<LaurentModel>(n, std::move(inv));
}

ModelPtr cechLocalCohomologyModel(std::size_t n, const std::vector<SquarefreeMonomial>& generators,
                                  std::size_t i) {
  if (n == 0) throw Error("Cech model needs n >= 1");
  if (i > n) throw Error("cohomological index exceeds n");
  for (const auto& g : generators) {
    auto sorted = g;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error("ideal generator is not squarefree; take the radical first");
  }
  return std::make_shared<CechModel>(n, generators, i);
}

ModelPtr presentationModel(const GroebnerBasis& j, int shift, std::optional<std::vector<int>> fineShift) {
  auto sigma = fineShift.value_or(std::vector<int>(j.n(), 0));
  if (sigma.size() != j.n()) throw DimensionMismatch("fine shift has wrong length");
  return std::make_shared<PresentationModel>(j, shift, std::move(sigma));
}

ModelPtr shift(const ModelPtr& m, int s) {
  if (s == 0) return m;
  if (auto* sh = dynamic_cast<const ShiftModel*>(m.get())) return shift(sh->inner(), sh->amount() + s);
  return std::make_shared<ShiftModel>(m, s);
}

ModelPtr matlisDual(const ModelPtr& m) { return std::make_shared<DualModel>(m); }

ModelPtr transposeModel(const ModelPtr& m) {
  if (auto* t = dynamic_cast<const TransposeModel*>(m.get())) return t->inner();
  return std::make_shared<TransposeModel>(m);
}

ModelPtr koszulPiece(const ModelPtr& m, KoszulOp op, KoszulPart part) {
  return std::make_shared<KoszulPieceModel>(m, op, part);
}

std::vector<SquarefreeMonomial> parseMonomialIdeal(const std::string& text, std::size_t n) {
  std::vector<SquarefreeMonomial> out;
  if (text.find_first_not_of(" \t") == std::string::npos) return out;
  for (const auto& g : parseElementList(text, n)) {
    if (g.isZero()) continue;
    if (g.terms().size() != 1) throw Error("ideal generators must be monomials");
    const auto& [m, c] = *g.terms().begin();
    if (total(m.d) != 0) throw Error("ideal generators must be polynomials in x");
    SquarefreeMonomial s;
    for (std::size_t j = 0; j < n; ++j) {
      if (m.x[j] > 1) throw Error("ideal generator is not squarefree; take the radical first");
      if (m.x[j] == 1) s.push_back(j);
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::string formatMonomialIdeal(const std::vector<SquarefreeMonomial>& gens) {
  if (gens.empty()) return "0";
  std::string out;
  for (const auto& g : gens) {
    if (!out.empty()) out += ", ";
    if (g.empty()) {
      out += "1";
      continue;
    }
    for (std::size_t k = 0; k < g.size(); ++k) out += (k ? "*x" : "x") + std::to_string(g[k] + 1);
  }
  return out;
}

std::vector<std::vector<SquarefreeMonomial>> squarefreeMonomialIdeals(std::size_t n) {
  if (n > 4) throw Error("ideal catalog is enumerated for n <= 4");
  const std::size_t subsets = 1u << n;
  std::vector<std::vector<SquarefreeMonomial>> out;
  for (std::uint64_t family = 0; family < (1ull << subsets); ++family) {
    bool antichain = true;
    for (std::size_t a = 0; a < subsets && antichain; ++a) {
      if (!(family >> a & 1)) continue;
      for (std::size_t b = 0; b < subsets && antichain; ++b)
        if (a != b && (family >> b & 1) && (a & b) == a) antichain = false;
    }
    if (!antichain) continue;
    std::vector<SquarefreeMonomial> ideal;
    for (std::size_t a = 0; a < subsets; ++a) {
      if (!(family >> a & 1)) continue;
      SquarefreeMonomial s;
      for (std::size_t j = 0; j < n; ++j)
        if (a >> j & 1) s.push_back(j);
      ideal.push_back(std::move(s));
    }
    out.push_back(std::move(ideal));
  }
  return out;
}

std::vector<CatalogPresentation> catalogPresentations(std::size_t n) {
  std::vector<CatalogPresentation> out;
  for (std::size_t mask = 0; mask < (1u << n); ++mask) {
    CatalogPresentation p;
    p.n = n;
    p.fineShift.assign(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (mask >> j & 1) {
        p.subset.push_back(j);
        p.generators.push_back(WeylElement::x(n, j));
        p.ideal.push_back({j});
        p.fineShift[j] = 1;
      } else {
        p.generators.push_back(WeylElement::d(n, j));
      }
    }
    p.shift = static_cast<int>(p.subset.size());
    p.cohomologicalIndex = p.subset.size();
    out.push_back(std::move(p));
  }
  return out;
}

ModelPtr modelFromDescriptor(const nlohmann::json& d) {
  if (!d.is_object() || !d.contains("constructor")) throw Error("model descriptor needs a constructor");
  const std::string ctor = d.at("constructor").get<std::string>();
  const nlohmann::json args = d.value("args", nlohmann::json::object());
  const int s = d.value("shift", 0);
  ModelPtr m;
  auto indexList = [](const nlohmann::json& a) {
    std::vector<std::size_t> out;
    for (const auto& x : a) {
      const int k = x.get<int>();
      if (k < 1) throw Error("variable indices in descriptors are 1-based");
      out.push_back(static_cast<std::size_t>(k - 1));
    }
    return out;
  };
  if (ctor == "polynomial") {
    m = polynomialModel(args.at("n").get<std::size_t>());
  } else if (ctor == "localization") {
    m = localizationModel(args.at("n").get<std::size_t>(), indexList(args.at("S")));
  } else if (ctor == "cech") {
    const auto n = args.at("n").get<std::size_t>();
    std::vector<SquarefreeMonomial> gens;
    const auto& ideal = args.at("ideal");
    if (ideal.is_string()) {
      const auto text = ideal.get<std::string>();
      if (text != "0") gens = parseMonomialIdeal(text, n);
    } else {
      for (const auto& g : ideal) gens.push_back(indexList(g));
    }
    m = cechLocalCohomologyModel(n, gens, args.at("i").get<std::size_t>());
  } else if (ctor == "presentation") {
    const auto n = args.at("n").get<std::size_t>();
    const TermOrder order = TermOrder::parse(args.value("order", std::string("degrevlex")));
    auto gb = buchberger(parseElementList(args.at("gens").get<std::string>(), n), order);
    std::optional<std::vector<int>> sigma;
    if (args.contains("fineShift")) sigma = args.at("fineShift").get<std::vector<int>>();
    return presentationModel(gb, s, sigma);
  } else if (ctor == "dual") {
    m = matlisDual(modelFromDescriptor(d.at("of")));
  } else if (ctor == "transpose") {
    m = transposeModel(modelFromDescriptor(d.at("of")));
  } else if (ctor == "koszul") {
    const auto op = args.at("op").get<std::string>();
    const auto part = args.at("part").get<std::string>();
    if ((op != "x" && op != "d") || (part != "kernel" && part != "cokernel"))
      throw Error("koszul descriptor needs op in {x,d} and part in {kernel,cokernel}");
    m = koszulPiece(modelFromDescriptor(d.at("of")), op == "x" ? KoszulOp::X : KoszulOp::D,
                    part == "kernel" ? KoszulPart::Kernel : KoszulPart::Cokernel);
  } else {
    throw Error("unknown model constructor '" + ctor + "'");
  }
  return shift(m, s);
}

ModelPtr presentationModel(const CatalogPresentation& p) {
  return presentationModel(buchberger(p.generators), p.shift, p.fineShift);
}

std::vector<ModelPtr> catalogLocalCohomology(std::size_t n) {
  std::vector<ModelPtr> out;
  for (const auto& ideal : squarefreeMonomialIdeals(n))
    for (std::size_t i = 0; i <= n; ++i) out.push_back(cechLocalCohomologyModel(n, ideal, i));
  return out;
}

}  // namespace weyl
