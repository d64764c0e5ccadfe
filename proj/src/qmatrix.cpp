#include "hccourant/qmatrix.hpp"

#include "hccourant/errors.hpp"

namespace hcc {

QMatrix::QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows, std::size_t cols) {
  QMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

QVector QMatrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return QVector(s.begin(), s.end());
}

QVector QMatrix::column_vector(std::size_t c) const {
  QVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void QMatrix::append_row(std::span<const Rational> v) {
  if (v.size() != cols_) throw InputError("append_row: length mismatch");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

QMatrix QMatrix::operator*(const QMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw InputError("matrix product: shape mismatch");
  QMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Rational& b = rhs(k, j);
        if (sgn(b) != 0) out(i, j) += a * b;
      }
    }
  }
  return out;
}

QMatrix QMatrix::operator+(const QMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InputError("matrix sum: shape mismatch");
  QMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

QMatrix QMatrix::operator-(const QMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InputError("matrix difference: shape mismatch");
  QMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

QMatrix QMatrix::scaled(const Rational& c) const {
  QMatrix out = *this;
  for (auto& x : out.data_) x *= c;
  return out;
}

QVector QMatrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw InputError("matrix apply: length mismatch");
  QVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (sgn(v[c]) != 0 && sgn((*this)(r, c)) != 0) acc += (*this)(r, c) * v[c];
    }
    out[r] = acc;
  }
  return out;
}

QVector QMatrix::left_apply(std::span<const Rational> c) const {
  if (c.size() != rows_) throw InputError("matrix left_apply: length mismatch");
  QVector out(cols_);
  for (std::size_t r = 0; r < rows_; ++r) axpy(c[r], row(r), out);
  return out;
}

QMatrix QMatrix::select_columns(std::span<const std::size_t> cols) const {
  QMatrix out(rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < cols.size(); ++j) out(r, j) = (*this)(r, cols[j]);
  return out;
}

QMatrix QMatrix::vstack(const QMatrix& other) const {
  if (cols_ != other.cols_) throw InputError("vstack: column mismatch");
  QMatrix out = *this;
  out.data_.insert(out.data_.end(), other.data_.begin(), other.data_.end());
  out.rows_ += other.rows_;
  return out;
}

bool QMatrix::is_zero() const { return hcc::is_zero(data_); }

std::size_t QMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& x : data_) n += sgn(x) != 0;
  return n;
}

}  // namespace hcc
