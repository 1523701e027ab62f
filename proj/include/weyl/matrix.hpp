#ifndef WEYL_MATRIX_HPP
#define WEYL_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "weyl/element.hpp"

namespace weyl {

/// Dense exact matrix over Q, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix scalar(std::size_t n, const Rational& c);
  /// Columns given as vectors of equal length `rows`.
  static Matrix fromColumns(std::size_t rows, const std::vector<std::vector<Rational>>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rational> column(std::size_t c) const;
  std::vector<Rational> apply(const std::vector<Rational>& v) const;

  Matrix transposed() const;
  bool isZero() const;
  Rational trace() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& c);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rational& c) { return a *= c; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  /// Block placement helper: this(r0.., c0..) = block.
  void setBlock(std::size_t r0, std::size_t c0, const Matrix& block);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct Echelon {
  Matrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Kronecker product a (x) b.
Matrix kronecker(const Matrix& a, const Matrix& b);

Echelon rowEchelon(Matrix a);
std::size_t rank(const Matrix& a);
/// Columns form a basis of {v : a v = 0}.
Matrix kernelBasis(const Matrix& a);
/// Some x with a x = b, or nullopt.
std::optional<std::vector<Rational>> solve(const Matrix& a, const std::vector<Rational>& b);
Matrix inverse(const Matrix& a);

/// Smallest a >= 1 with m^a = 0, searched up to `bound`; nullopt otherwise.
/// A 0x0 matrix reports 1.
std::optional<unsigned> nilpotencyOrder(const Matrix& m, unsigned bound);

/// Coefficients c_0..c_n of det(t I - m), c_n = 1.
std::vector<Rational> characteristicPolynomial(const Matrix& m);

/// H = ker(outgoing) / im(incoming) for a middle space of dimension `dim`,
/// with a chosen basis of lifts and exact coordinates modulo the image.
class Subquotient {
 public:
  Subquotient() = default;
  /// outgoing: dim -> W (rows may be 0), incoming: U -> dim (cols may be 0).
  static Subquotient compute(std::size_t dim, const Matrix& outgoing, const Matrix& incoming);

  std::size_t ambientDim() const { return ambient_; }
  std::size_t dim() const { return lifts_.size(); }
  const std::vector<std::vector<Rational>>& lifts() const { return lifts_; }

  /// Coordinates of a cocycle v in the chosen basis, modulo the image.
  std::vector<Rational> coordinates(const std::vector<Rational>& v) const;

  /// Matrix of the map induced on subquotients by a chain-level map
  /// t: ambient -> target.ambient.
  Matrix induced(const Matrix& t, const Subquotient& target) const;

 private:
  std::size_t ambient_ = 0;
  std::size_t imageRank_ = 0;
  std::vector<std::vector<Rational>> lifts_;
  std::vector<std::size_t> pivotRows_;  // rows of [image | lifts] forming an invertible block
  Matrix blockInverse_;
};

}  // namespace weyl

#endif
