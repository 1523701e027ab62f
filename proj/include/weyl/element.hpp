#ifndef WEYL_ELEMENT_HPP
#define WEYL_ELEMENT_HPP

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace weyl {

using Rational = mpq_class;

/// Exponent vector of length n.
using MultiIndex = std::vector<std::uint32_t>;

unsigned total(const MultiIndex& a);

/// x^xExp d^dExp, always read in normal order (all X left of all d).
struct Monomial {
  MultiIndex x;
  MultiIndex d;

  Monomial() = default;
  Monomial(MultiIndex xExp, MultiIndex dExp) : x(std::move(xExp)), d(std::move(dExp)) {}
  static Monomial one(std::size_t n) { return Monomial(MultiIndex(n, 0), MultiIndex(n, 0)); }

  std::size_t n() const { return x.size(); }
  int degree() const { return static_cast<int>(total(x)) - static_cast<int>(total(d)); }
  unsigned totalExponent() const { return total(x) + total(d); }
  /// Z^n-degree: x-exponents minus d-exponents.
  std::vector<int> fineDegree() const;

  bool divides(const Monomial& other) const;
  Monomial operator+(const Monomial& other) const;
  Monomial operator-(const Monomial& other) const;  // requires divides
  Monomial lcm(const Monomial& other) const;

  auto operator<=>(const Monomial&) const = default;
};

struct WeylTerm {
  Rational coeff;
  Monomial mono;
};

/// Element of A_n(Q) as a canonical normal-ordered sum of terms.
class WeylElement {
 public:
  using TermMap = std::map<Monomial, Rational>;

  explicit WeylElement(std::size_t n = 0) : n_(n) {}

  static WeylElement constant(std::size_t n, const Rational& c);
  static WeylElement monomial(const Monomial& m, const Rational& c = 1);
  static WeylElement x(std::size_t n, std::size_t i);
  static WeylElement d(std::size_t n, std::size_t i);
  /// E_n = sum x_i d_i.
  static WeylElement euler(std::size_t n);

  std::size_t n() const { return n_; }
  bool isZero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  std::vector<WeylTerm> termList() const;

  /// Common degree of all terms, nullopt when inhomogeneous. Throws on zero.
  std::optional<int> degree() const;
  /// Common Z^n-degree of all terms, nullopt when not fine-homogeneous.
  std::optional<std::vector<int>> fineDegree() const;

  void addTerm(const Monomial& m, const Rational& c);

  WeylElement operator-() const;
  WeylElement& operator+=(const WeylElement& o);
  WeylElement& operator-=(const WeylElement& o);
  WeylElement& operator*=(const Rational& c);
  friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
  friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
  friend WeylElement operator*(WeylElement a, const Rational& c) { return a *= c; }
  friend WeylElement operator*(const Rational& c, WeylElement a) { return a *= c; }
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t n_;
  TermMap terms_;
};

WeylElement add(const WeylElement& a, const WeylElement& b);
WeylElement mul(const WeylElement& a, const WeylElement& b);
WeylElement power(const WeylElement& a, unsigned k);
WeylElement eulerOperator(std::size_t n);

/// Tagged result of degreeOf: a degree or the inhomogeneous marker.
struct Degree {
  std::optional<int> value;
  bool homogeneous() const { return value.has_value(); }
};
Degree degreeOf(const WeylElement& a);

/// Standard transposition: x^a d^b -> (-1)^|b| d^b x^a, re-normal-ordered.
WeylElement transpose(const WeylElement& a);

/// Product of two normal-ordered monomials, accumulated into out with factor c.
void accumulateProduct(const Monomial& a, const Monomial& b, const Rational& c,
                       WeylElement::TermMap& out);

}  // namespace weyl

#endif
