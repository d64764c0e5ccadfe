#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hccourant/rational.hpp"

namespace hcc {

/// Dense row-major matrix of exact rationals. Row vectors are the
/// convention for spans: a subspace is the row space of a QMatrix.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);

  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<QVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  QVector row_vector(std::size_t r) const;
  QVector column_vector(std::size_t c) const;

  void append_row(std::span<const Rational> v);

  QMatrix transpose() const;
  QMatrix operator*(const QMatrix& rhs) const;
  QMatrix operator+(const QMatrix& rhs) const;
  QMatrix operator-(const QMatrix& rhs) const;
  QMatrix scaled(const Rational& c) const;

  /// M v for a column vector v.
  QVector apply(std::span<const Rational> v) const;
  /// c M for a row vector c.
  QVector left_apply(std::span<const Rational> c) const;

  QMatrix select_columns(std::span<const std::size_t> cols) const;
  /// Rows stacked: [this; other].
  QMatrix vstack(const QMatrix& other) const;

  bool is_zero() const;
  std::size_t nonzeros() const;

  bool operator==(const QMatrix& other) const = default;

  const std::vector<Rational>& data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace hcc
