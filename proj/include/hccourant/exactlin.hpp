#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hccourant/qmatrix.hpp"

namespace hcc {

/// Matrices with more entries than this are row-reduced on the sparse path.
/// Both paths return the same canonical RREF.
struct LinalgConfig {
  std::size_t sparse_threshold = 1'000'000;
};

LinalgConfig& linalg_config();

struct RrefResult {
  QMatrix reduced;                  // same shape as the input, zero rows last
  std::vector<std::size_t> pivots;  // ascending
  std::size_t rank = 0;
};

RrefResult rref(const QMatrix& m);
RrefResult rref_dense(const QMatrix& m);
RrefResult rref_sparse(const QMatrix& m);

std::size_t rank(const QMatrix& m);

/// Rows form the canonical basis of {x : M x = 0}: one row per free column
/// in ascending order, with that free variable set to 1.
QMatrix nullspace(const QMatrix& m);

/// Nonzero rows of the RREF: the canonical basis of the row space.
QMatrix row_basis(const QMatrix& m);

/// Coefficients c with c S = v, or nullopt when v is outside rowspan(S).
std::optional<QVector> membership(std::span<const Rational> v, const QMatrix& s);

bool in_rowspan(std::span<const Rational> v, const QMatrix& s);
bool rowspan_contains(const QMatrix& space, const QMatrix& sub);
bool same_rowspan(const QMatrix& a, const QMatrix& b);

/// Inverse of a square matrix; throws InputError when singular.
QMatrix inverse(const QMatrix& m);

/// Incremental row echelon basis over the rationals. Rows are kept with a
/// leading 1 in their pivot column; adding a vector reduces it first.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t cols);

  /// Reduces v against the current rows. Returns true and stores the
  /// remainder if it is nonzero.
  bool add(std::span<const Rational> v);
  bool contains(std::span<const Rational> v) const;
  QVector residual(std::span<const Rational> v) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  /// Canonical RREF of the accumulated span.
  QMatrix reduced_basis() const;

 private:
  struct Row {
    std::size_t pivot;
    std::vector<std::pair<std::size_t, Rational>> entries;  // sorted, entries[0] is pivot with value 1
  };
  void reduce_dense(std::vector<Rational>& work) const;

  std::size_t cols_;
  std::vector<Row> rows_;
  std::vector<long> pivot_row_;  // column -> index into rows_ or -1
};

/// Coset representatives for rowspan(space) / rowspan(subspace) and the
/// coordinate map onto them.
class QuotientBasis {
 public:
  QuotientBasis() = default;
  /// Throws InputError if rowspan(subspace) is not inside rowspan(space).
  QuotientBasis(const QMatrix& space, const QMatrix& subspace);

  std::size_t dim() const { return reps_.rows(); }
  std::size_t ambient() const { return ambient_; }
  const QMatrix& reps() const { return reps_; }
  const QMatrix& subspace_basis() const { return sub_; }

  /// Coordinates over reps modulo the subspace. v must lie in rowspan(space);
  /// the result is unspecified otherwise.
  QVector reduce(std::span<const Rational> v) const;
  /// As reduce, but throws InvariantError when v is outside rowspan(space).
  QVector reduce_checked(std::span<const Rational> v) const;
  /// True when v lies in rowspan(space).
  bool contains(std::span<const Rational> v) const;
  /// Full coordinates over [subspace basis; reps].
  QVector coordinates(std::span<const Rational> v) const;
  /// coords . reps
  QVector lift(std::span<const Rational> coords) const;

 private:
  std::size_t ambient_ = 0;
  QMatrix sub_;
  QMatrix reps_;
  QMatrix combined_;                  // [sub_; reps_]
  std::vector<std::size_t> pivots_;   // pivot columns of combined_
  QMatrix solve_;                     // combined_[:, pivots_]^{-1}
};

}  // namespace hcc
