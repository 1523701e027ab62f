#include "weyl/matrix.hpp"

#include <utility>

#include "weyl/error.hpp"

namespace weyl {

Matrix Matrix::identity(std::size_t n) { return scalar(n, 1); }

Matrix Matrix::scalar(std::size_t n, const Rational& c) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

Matrix Matrix::fromColumns(std::size_t rows, const std::vector<std::vector<Rational>>& columns) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw DimensionMismatch("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

std::vector<Rational> Matrix::column(std::size_t c) const {
  std::vector<Rational> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<Rational> Matrix::apply(const std::vector<Rational>& v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rational& a = (*this)(r, c);
      if (a != 0 && v[c] != 0) acc += a * v[c];
    }
    out[r] = acc;
  }
  return out;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::isZero() const {
  for (const auto& v : data_)
    if (v != 0) return false;
  return true;
}

Rational Matrix::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionMismatch("matrix difference shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& c) {
  for (auto& v : data_) v *= c;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& bkj = b(k, j);
        if (bkj != 0) out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

void Matrix::setBlock(std::size_t r0, std::size_t c0, const Matrix& block) {
  if (r0 + block.rows_ > rows_ || c0 + block.cols_ > cols_)
    throw DimensionMismatch("block does not fit");
  for (std::size_t r = 0; r < block.rows_; ++r)
    for (std::size_t c = 0; c < block.cols_; ++c) (*this)(r0 + r, c0 + c) = block(r, c);
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) k(i * b.rows() + r, j * b.cols() + c) = a(i, j) * b(r, c);
    }
  return k;
}

Echelon rowEchelon(Matrix a) {
  Echelon e;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && a(pivot, col) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(pivot, c), a(row, c));
    }
    const Rational inv = 1 / a(row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      const Rational f = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) {
        if (a(row, c) != 0) a(r, c) -= f * a(row, c);
      }
    }
    e.pivots.push_back(col);
    ++row;
  }
  e.reduced = std::move(a);
  return e;
}

std::size_t rank(const Matrix& a) {
  if (a.empty()) return 0;
  // eliminate along the shorter side
  if (a.rows() > a.cols()) return rowEchelon(a.transposed()).pivots.size();
  return rowEchelon(a).pivots.size();
}

Matrix kernelBasis(const Matrix& a) {
  const std::size_t n = a.cols();
  if (a.rows() == 0) return Matrix::identity(n);
  Echelon e = rowEchelon(a);
  std::vector<bool> isPivot(n, false);
  for (auto p : e.pivots) isPivot[p] = true;
  std::vector<std::vector<Rational>> cols;
  for (std::size_t free = 0; free < n; ++free) {
    if (isPivot[free]) continue;
    std::vector<Rational> v(n);
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    cols.push_back(std::move(v));
  }
  return Matrix::fromColumns(n, cols);
}

std::optional<std::vector<Rational>> solve(const Matrix& a, const std::vector<Rational>& b) {
  if (b.size() != a.rows()) throw DimensionMismatch("right-hand side length mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  aug.setBlock(0, 0, a);
  for (std::size_t r = 0; r < a.rows(); ++r) aug(r, a.cols()) = b[r];
  Echelon e = rowEchelon(aug);
  std::vector<Rational> x(a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == a.cols()) return std::nullopt;
    x[e.pivots[r]] = e.reduced(r, a.cols());
  }
  return x;
}

Matrix inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix aug(n, 2 * n);
  aug.setBlock(0, 0, a);
  aug.setBlock(0, n, Matrix::identity(n));
  Echelon e = rowEchelon(aug);
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) throw Error("matrix is singular");
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

std::optional<unsigned> nilpotencyOrder(const Matrix& m, unsigned bound) {
  if (m.rows() != m.cols()) throw DimensionMismatch("nilpotency of a non-square matrix");
  if (m.rows() == 0 || m.isZero()) return 1;
  Matrix p = m;
  // m nilpotent implies m^dim = 0
  const unsigned limit = std::min<unsigned>(bound, static_cast<unsigned>(m.rows()));
  for (unsigned a = 2; a <= limit; ++a) {
    p = p * m;
    if (p.isZero()) return a;
  }
  return std::nullopt;
}

std::vector<Rational> characteristicPolynomial(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("characteristic polynomial of non-square");
  const std::size_t n = m.rows();
  // Faddeev-LeVerrier
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Matrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk + Matrix::scalar(n, c[n - k + 1]);
    c[n - k] = -(m * mk).trace() / static_cast<long>(k);
  }
  return c;
}

namespace {

// Incremental fully-reduced echelon basis of a growing subspace.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t dim) : dim_(dim) {}

  // Adds v if independent; returns whether it was added.
  bool add(const std::vector<Rational>& v) {
    std::vector<Rational> r = v;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Rational f = r[pivots_[k]];
      if (f == 0) continue;
      for (std::size_t c = 0; c < dim_; ++c)
        if (rows_[k][c] != 0) r[c] -= f * rows_[k][c];
    }
    std::size_t p = 0;
    while (p < dim_ && r[p] == 0) ++p;
    if (p == dim_) return false;
    const Rational inv = 1 / r[p];
    for (auto& x : r) x *= inv;
    for (auto& row : rows_) {
      const Rational f = row[p];
      if (f == 0) continue;
      for (std::size_t c = 0; c < dim_; ++c)
        if (r[c] != 0) row[c] -= f * r[c];
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
  }

 private:
  std::size_t dim_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace

Subquotient Subquotient::compute(std::size_t dim, const Matrix& outgoing, const Matrix& incoming) {
  if (outgoing.cols() != dim && !(outgoing.rows() == 0 && outgoing.cols() == 0))
    throw DimensionMismatch("outgoing map has wrong source dimension");
  if (incoming.rows() != dim && !(incoming.rows() == 0 && incoming.cols() == 0))
    throw DimensionMismatch("incoming map has wrong target dimension");
  Subquotient s;
  s.ambient_ = dim;
  if (dim == 0) return s;

  SpanBuilder span(dim);
  std::vector<std::vector<Rational>> imageBasis;
  for (std::size_t c = 0; c < incoming.cols(); ++c) {
    auto v = incoming.column(c);
    if (span.add(v)) imageBasis.push_back(std::move(v));
  }
  const Matrix ker = outgoing.rows() == 0 ? Matrix::identity(dim) : kernelBasis(outgoing);
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    auto v = ker.column(c);
    if (span.add(v)) s.lifts_.push_back(std::move(v));
  }
  s.imageRank_ = imageBasis.size();
  if (s.lifts_.empty()) return s;

  std::vector<std::vector<Rational>> all = imageBasis;
  all.insert(all.end(), s.lifts_.begin(), s.lifts_.end());
  const Matrix basis = Matrix::fromColumns(dim, all);
  Echelon e = rowEchelon(basis.transposed());
  s.pivotRows_ = e.pivots;
  Matrix block(all.size(), all.size());
  for (std::size_t r = 0; r < all.size(); ++r)
    for (std::size_t c = 0; c < all.size(); ++c) block(r, c) = basis(s.pivotRows_[r], c);
  s.blockInverse_ = inverse(block);
  return s;
}

std::vector<Rational> Subquotient::coordinates(const std::vector<Rational>& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector has wrong ambient dimension");
  std::vector<Rational> out(lifts_.size());
  if (lifts_.empty()) return out;
  std::vector<Rational> restricted(pivotRows_.size());
  for (std::size_t k = 0; k < pivotRows_.size(); ++k) restricted[k] = v[pivotRows_[k]];
  auto full = blockInverse_.apply(restricted);
  for (std::size_t k = 0; k < lifts_.size(); ++k) out[k] = full[imageRank_ + k];
  return out;
}

Matrix Subquotient::induced(const Matrix& t, const Subquotient& target) const {
  Matrix out(target.dim(), dim());
  if (dim() == 0 || target.dim() == 0) return out;
  for (std::size_t c = 0; c < lifts_.size(); ++c) {
    auto image = target.coordinates(t.apply(lifts_[c]));
    for (std::size_t r = 0; r < image.size(); ++r) out(r, c) = image[r];
  }
  return out;
}

}  // namespace weyl
