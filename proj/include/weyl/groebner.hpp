#ifndef WEYL_GROEBNER_HPP
#define WEYL_GROEBNER_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "weyl/element.hpp"

namespace weyl {

enum class OrderKind { Degrevlex, Deglex };

/// Degree-compatible monomial order on the concatenated exponent vector
/// (x_1..x_n, d_1..d_n), with x_1 > ... > x_n > d_1 > ... > d_n.
class TermOrder {
 public:
  explicit TermOrder(OrderKind kind = OrderKind::Degrevlex) : kind_(kind) {}
  static TermOrder parse(const std::string& name);

  OrderKind kind() const { return kind_; }
  std::string name() const;
  /// <0, 0, >0 as a is smaller, equal, larger than b.
  int compare(const Monomial& a, const Monomial& b) const;

  friend bool operator==(const TermOrder&, const TermOrder&) = default;

 private:
  OrderKind kind_;
};

/// Element of the free left module A_n^rank; component 0 dominates in the
/// position-over-term module order.
class FreeModuleElement {
 public:
  FreeModuleElement() = default;
  FreeModuleElement(std::size_t n, std::size_t rank) : n_(n), comps_(rank, WeylElement(n)) {}
  explicit FreeModuleElement(std::vector<WeylElement> comps);
  static FreeModuleElement unit(std::size_t n, std::size_t rank, std::size_t k);

  std::size_t n() const { return n_; }
  std::size_t rank() const { return comps_.size(); }
  const WeylElement& operator[](std::size_t k) const { return comps_[k]; }
  WeylElement& operator[](std::size_t k) { return comps_[k]; }
  const std::vector<WeylElement>& components() const { return comps_; }
  bool isZero() const;

  FreeModuleElement& operator+=(const FreeModuleElement& o);
  FreeModuleElement& operator-=(const FreeModuleElement& o);
  friend FreeModuleElement operator+(FreeModuleElement a, const FreeModuleElement& b) { return a += b; }
  friend FreeModuleElement operator-(FreeModuleElement a, const FreeModuleElement& b) { return a -= b; }
  /// Left scalar action a * (v_0, ..., v_r) = (a v_0, ..., a v_r).
  friend FreeModuleElement operator*(const WeylElement& a, const FreeModuleElement& v);
  friend bool operator==(const FreeModuleElement&, const FreeModuleElement&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<WeylElement> comps_;
};

/// Degree of a module element whose component k sits on a generator of
/// degree genDegrees[k]; nullopt when inhomogeneous. Zero has no degree.
std::optional<int> moduleDegree(const FreeModuleElement& v, const std::vector<int>& genDegrees);
std::optional<std::vector<int>> moduleFineDegree(const FreeModuleElement& v,
                                                 const std::vector<std::vector<int>>& genDegrees);

class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(std::size_t n, std::size_t rank, TermOrder order,
                std::vector<FreeModuleElement> generators, bool reduced)
      : n_(n), rank_(rank), order_(order), gens_(std::move(generators)), reduced_(reduced) {}

  std::size_t n() const { return n_; }
  std::size_t rank() const { return rank_; }
  const TermOrder& order() const { return order_; }
  const std::vector<FreeModuleElement>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool reduced() const { return reduced_; }

  /// Generators of a left ideal (rank 1).
  std::vector<WeylElement> idealGenerators() const;
  /// Leading monomials (component, monomial) of the generators.
  std::vector<std::pair<std::size_t, Monomial>> leadingTerms() const;

 private:
  std::size_t n_ = 0;
  std::size_t rank_ = 1;
  TermOrder order_;
  std::vector<FreeModuleElement> gens_;
  bool reduced_ = false;
};

/// Leading (component, monomial, coefficient) under the position-over-term order.
struct LeadingTerm {
  std::size_t component;
  Monomial mono;
  Rational coeff;
};
std::optional<LeadingTerm> leadingTerm(const FreeModuleElement& v, const TermOrder& order);
std::optional<LeadingTerm> leadingTerm(const WeylElement& v, const TermOrder& order);

FreeModuleElement normalForm(const FreeModuleElement& f, const GroebnerBasis& g);
WeylElement normalForm(const WeylElement& f, const GroebnerBasis& g);

/// Reduced left Gröbner basis. genDegrees gives the degree of each free
/// generator (all zero when empty); inhomogeneous input is rejected.
GroebnerBasis buchberger(const std::vector<FreeModuleElement>& generators, const TermOrder& order,
                         const std::vector<int>& genDegrees = {});
GroebnerBasis buchberger(const std::vector<WeylElement>& generators,
                         const TermOrder& order = TermOrder());

bool isMember(const WeylElement& f, const GroebnerBasis& j);

/// Smallest a <= aMax with (E_n - generatorDegree)^a in J. With the default
/// generatorDegree 0 this is the cyclic-module criterion for A_n/J; a
/// present value certifies (A_n/J)(-generatorDegree) strongly generalized
/// Eulerian. Absence means unknown beyond the bound.
std::optional<unsigned> eulerianIndex(const GroebnerBasis& j, unsigned aMax = 10,
                                      int generatorDegree = 0);

/// Generators of the left syzygy module of (g_1, ..., g_m) in A^rank. Each
/// syzygy is an element of A^m.
std::vector<FreeModuleElement> syzygies(const std::vector<FreeModuleElement>& gens,
                                        const TermOrder& order,
                                        const std::vector<int>& genDegrees = {});
std::vector<FreeModuleElement> syzygies(const GroebnerBasis& g,
                                        const std::vector<int>& genDegrees = {});

}  // namespace weyl

#endif
