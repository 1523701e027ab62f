#include "weyl/element.hpp"

#include <algorithm>
#include <numeric>

#include "weyl/error.hpp"

namespace weyl {

unsigned total(const MultiIndex& a) { return std::accumulate(a.begin(), a.end(), 0u); }

std::vector<int> Monomial::fineDegree() const {
  std::vector<int> v(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) v[i] = static_cast<int>(x[i]) - static_cast<int>(d[i]);
  return v;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > other.x[i] || d[i] > other.d[i]) return false;
  }
  return true;
}

Monomial Monomial::operator+(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < x.size(); ++i) {
    r.x[i] += other.x[i];
    r.d[i] += other.d[i];
  }
  return r;
}

Monomial Monomial::operator-(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < x.size(); ++i) {
    r.x[i] -= other.x[i];
    r.d[i] -= other.d[i];
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < x.size(); ++i) {
    r.x[i] = std::max(x[i], other.x[i]);
    r.d[i] = std::max(d[i], other.d[i]);
  }
  return r;
}

WeylElement WeylElement::constant(std::size_t n, const Rational& c) {
  WeylElement e(n);
  e.addTerm(Monomial::one(n), c);
  return e;
}

WeylElement WeylElement::monomial(const Monomial& m, const Rational& c) {
  WeylElement e(m.n());
  e.addTerm(m, c);
  return e;
}

WeylElement WeylElement::x(std::size_t n, std::size_t i) {
  Monomial m = Monomial::one(n);
  m.x.at(i) = 1;
  return monomial(m);
}

WeylElement WeylElement::d(std::size_t n, std::size_t i) {
  Monomial m = Monomial::one(n);
  m.d.at(i) = 1;
  return monomial(m);
}

WeylElement WeylElement::euler(std::size_t n) {
  WeylElement e(n);
  for (std::size_t i = 0; i < n; ++i) {
    Monomial m = Monomial::one(n);
    m.x[i] = 1;
    m.d[i] = 1;
    e.addTerm(m, 1);
  }
  return e;
}

std::vector<WeylTerm> WeylElement::termList() const {
  std::vector<WeylTerm> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) out.push_back({c, m});
  return out;
}

std::optional<int> WeylElement::degree() const {
  if (terms_.empty()) throw Error("degree of the zero element is undefined");
  const int first = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_) {
    if (m.degree() != first) return std::nullopt;
  }
  return first;
}

std::optional<std::vector<int>> WeylElement::fineDegree() const {
  if (terms_.empty()) throw Error("degree of the zero element is undefined");
  auto first = terms_.begin()->first.fineDegree();
  for (const auto& [m, c] : terms_) {
    if (m.fineDegree() != first) return std::nullopt;
  }
  return first;
}

void WeylElement::addTerm(const Monomial& m, const Rational& c) {
  if (m.n() != n_) throw DimensionMismatch("monomial has wrong number of variables");
  Rational cc = c;
  cc.canonicalize();
  if (cc == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, cc);
  if (!inserted) {
    it->second += cc;
    if (it->second == 0) terms_.erase(it);
  }
}

WeylElement WeylElement::operator-() const {
  WeylElement r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

WeylElement& WeylElement::operator+=(const WeylElement& o) {
  if (o.n_ != n_) throw DimensionMismatch("adding elements of different ambient n");
  for (const auto& [m, c] : o.terms_) addTerm(m, c);
  return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& o) {
  if (o.n_ != n_) throw DimensionMismatch("subtracting elements of different ambient n");
  for (const auto& [m, c] : o.terms_) addTerm(m, -c);
  return *this;
}

WeylElement& WeylElement::operator*=(const Rational& scalar) {
  Rational c = scalar;
  c.canonicalize();
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

namespace {

// C(b,k) * a(a-1)...(a-k+1): coefficient of x^{a-k} d^{b-k} in d^b x^a.
std::vector<mpz_class> reorderCoefficients(unsigned b, unsigned a) {
  const unsigned top = std::min(a, b);
  std::vector<mpz_class> out(top + 1);
  mpz_class binom = 1;
  mpz_class falling = 1;
  for (unsigned k = 0; k <= top; ++k) {
    out[k] = binom * falling;
    binom = binom * (b - k) / (k + 1);
    falling *= (a - k);
  }
  return out;
}

}  // namespace

void accumulateProduct(const Monomial& a, const Monomial& b, const Rational& c,
                       WeylElement::TermMap& out) {
  const std::size_t n = a.n();
  std::vector<std::vector<mpz_class>> coeffs(n);
  for (std::size_t i = 0; i < n; ++i) coeffs[i] = reorderCoefficients(a.d[i], b.x[i]);

  std::vector<unsigned> k(n, 0);
  Monomial m = a + b;
  while (true) {
    Rational coeff = c;
    for (std::size_t i = 0; i < n; ++i) coeff *= coeffs[i][k[i]];
    auto [it, inserted] = out.try_emplace(m, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) out.erase(it);
    }
    // odometer over k_i in [0, min(a.d_i, b.x_i)]
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (k[i] + 1 < coeffs[i].size()) {
        ++k[i];
        --m.x[i];
        --m.d[i];
        break;
      }
      m.x[i] += k[i];
      m.d[i] += k[i];
      k[i] = 0;
    }
    if (i == n) break;
  }
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  if (a.n_ != b.n_) throw DimensionMismatch("multiplying elements of different ambient n");
  WeylElement r(a.n_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) accumulateProduct(ma, mb, ca * cb, r.terms_);
  }
  return r;
}

WeylElement add(const WeylElement& a, const WeylElement& b) { return a + b; }
WeylElement mul(const WeylElement& a, const WeylElement& b) { return a * b; }

WeylElement power(const WeylElement& a, unsigned k) {
  WeylElement result = WeylElement::constant(a.n(), 1);
  WeylElement base = a;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

WeylElement eulerOperator(std::size_t n) {
  if (n == 0) throw Error("the Euler operator needs n >= 1");
  return WeylElement::euler(n);
}

Degree degreeOf(const WeylElement& a) { return Degree{a.degree()}; }

WeylElement transpose(const WeylElement& a) {
  const std::size_t n = a.n();
  WeylElement r(n);
  WeylElement::TermMap acc;
  for (const auto& [m, c] : a.terms()) {
    // d^b x^a as a product of the pure-d and pure-x monomials
    Monomial dPart(MultiIndex(n, 0), m.d);
    Monomial xPart(m.x, MultiIndex(n, 0));
    const Rational sign = (total(m.d) % 2 == 0) ? Rational(1) : Rational(-1);
    accumulateProduct(dPart, xPart, sign * c, acc);
  }
  for (const auto& [m, c] : acc) r.addTerm(m, c);
  return r;
}

}  // namespace weyl
