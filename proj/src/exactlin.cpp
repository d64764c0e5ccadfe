#include "hccourant/exactlin.hpp"

#include <algorithm>
#include <numeric>

#include "hccourant/errors.hpp"

namespace hcc {

LinalgConfig& linalg_config() {
  static LinalgConfig config;
  return config;
}

RrefResult rref_dense(const QMatrix& m) {
  RrefResult out{m, {}, 0};
  QMatrix& r = out.reduced;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < r.cols() && lead < r.rows(); ++c) {
    std::size_t p = lead;
    while (p < r.rows() && sgn(r(p, c)) == 0) ++p;
    if (p == r.rows()) continue;
    if (p != lead) {
      for (std::size_t j = c; j < r.cols(); ++j) swap(r(p, j), r(lead, j));
    }
    const Rational inv = 1 / r(lead, c);
    for (std::size_t j = c; j < r.cols(); ++j) {
      if (sgn(r(lead, j)) != 0) r(lead, j) *= inv;
    }
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == lead || sgn(r(i, c)) == 0) continue;
      const Rational f = r(i, c);
      for (std::size_t j = c; j < r.cols(); ++j) {
        if (sgn(r(lead, j)) != 0) r(i, j) -= f * r(lead, j);
      }
    }
    out.pivots.push_back(c);
    ++lead;
  }
  out.rank = out.pivots.size();
  return out;
}

RrefResult rref_sparse(const QMatrix& m) {
  EchelonBasis basis(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) basis.add(m.row(i));
  QMatrix reduced = basis.reduced_basis();
  RrefResult out{QMatrix(m.rows(), m.cols()), {}, reduced.rows()};
  for (std::size_t i = 0; i < reduced.rows(); ++i) {
    std::size_t c = 0;
    while (sgn(reduced(i, c)) == 0) ++c;
    out.pivots.push_back(c);
    for (std::size_t j = 0; j < m.cols(); ++j) out.reduced(i, j) = reduced(i, j);
  }
  return out;
}

RrefResult rref(const QMatrix& m) {
  if (m.rows() * m.cols() > linalg_config().sparse_threshold) return rref_sparse(m);
  return rref_dense(m);
}

std::size_t rank(const QMatrix& m) { return rref(m).rank; }

QMatrix nullspace(const QMatrix& m) {
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  QMatrix basis(0, m.cols());
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    QVector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.reduced(i, f);
    basis.append_row(v);
  }
  return basis;
}

QMatrix row_basis(const QMatrix& m) {
  const RrefResult r = rref(m);
  QMatrix basis(0, m.cols());
  for (std::size_t i = 0; i < r.rank; ++i) basis.append_row(r.reduced.row(i));
  return basis;
}

std::optional<QVector> membership(std::span<const Rational> v, const QMatrix& s) {
  if (v.size() != s.cols()) throw InputError("membership: vector length does not match subspace columns");
  const std::size_t k = s.rows();
  QMatrix aug(s.cols(), k + 1);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < s.cols(); ++j) aug(j, i) = s(i, j);
  for (std::size_t j = 0; j < s.cols(); ++j) aug(j, k) = v[j];
  const RrefResult r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == k) return std::nullopt;
  QVector c(k);
  for (std::size_t i = 0; i < r.rank; ++i) c[r.pivots[i]] = r.reduced(i, k);
  return c;
}

bool in_rowspan(std::span<const Rational> v, const QMatrix& s) {
  EchelonBasis basis(s.cols());
  for (std::size_t i = 0; i < s.rows(); ++i) basis.add(s.row(i));
  return basis.contains(v);
}

bool rowspan_contains(const QMatrix& space, const QMatrix& sub) {
  if (space.cols() != sub.cols()) throw InputError("rowspan_contains: column mismatch");
  EchelonBasis basis(space.cols());
  for (std::size_t i = 0; i < space.rows(); ++i) basis.add(space.row(i));
  for (std::size_t i = 0; i < sub.rows(); ++i) {
    if (!basis.contains(sub.row(i))) return false;
  }
  return true;
}

bool same_rowspan(const QMatrix& a, const QMatrix& b) {
  return rowspan_contains(a, b) && rowspan_contains(b, a);
}

QMatrix inverse(const QMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("inverse: matrix is not square");
  const std::size_t n = m.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const RrefResult r = rref_dense(aug);
  if (r.rank < n || (n > 0 && r.pivots[n - 1] != n - 1)) throw InputError("inverse: matrix is singular");
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  return inv;
}

// EchelonBasis

EchelonBasis::EchelonBasis(std::size_t cols) : cols_(cols), pivot_row_(cols, -1) {}

void EchelonBasis::reduce_dense(std::vector<Rational>& work) const {
  for (std::size_t c = 0; c < cols_; ++c) {
    if (sgn(work[c]) == 0 || pivot_row_[c] < 0) continue;
    const Rational f = work[c];
    for (const auto& [j, val] : rows_[static_cast<std::size_t>(pivot_row_[c])].entries) work[j] -= f * val;
  }
}

QVector EchelonBasis::residual(std::span<const Rational> v) const {
  if (v.size() != cols_) throw InputError("EchelonBasis: length mismatch");
  QVector work(v.begin(), v.end());
  reduce_dense(work);
  return work;
}

bool EchelonBasis::contains(std::span<const Rational> v) const { return is_zero(residual(v)); }

bool EchelonBasis::add(std::span<const Rational> v) {
  QVector work = residual(v);
  std::size_t lead = 0;
  while (lead < cols_ && sgn(work[lead]) == 0) ++lead;
  if (lead == cols_) return false;
  const Rational inv = 1 / work[lead];
  Row row{lead, {}};
  for (std::size_t j = lead; j < cols_; ++j) {
    if (sgn(work[j]) != 0) row.entries.emplace_back(j, work[j] * inv);
  }
  pivot_row_[lead] = static_cast<long>(rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

QMatrix EchelonBasis::reduced_basis() const {
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return rows_[a].pivot < rows_[b].pivot; });
  QMatrix r(rows_.size(), cols_);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const auto& [j, val] : rows_[order[i]].entries) r(i, j) = val;
  }
  for (std::size_t i = r.rows(); i-- > 0;) {
    const std::size_t p = rows_[order[i]].pivot;
    for (std::size_t k = 0; k < i; ++k) {
      if (sgn(r(k, p)) == 0) continue;
      const Rational f = r(k, p);
      for (std::size_t j = p; j < cols_; ++j) {
        if (sgn(r(i, j)) != 0) r(k, j) -= f * r(i, j);
      }
    }
  }
  return r;
}

// QuotientBasis

QuotientBasis::QuotientBasis(const QMatrix& space, const QMatrix& subspace) : ambient_(space.cols()) {
  if (space.cols() != subspace.cols()) throw InputError("quotient_basis: column mismatch");
  if (!rowspan_contains(space, subspace)) throw InputError("quotient_basis: subspace is not contained in space");
  sub_ = row_basis(subspace);
  const QMatrix space_basis = row_basis(space);
  EchelonBasis echelon(ambient_);
  for (std::size_t i = 0; i < sub_.rows(); ++i) echelon.add(sub_.row(i));
  reps_ = QMatrix(0, ambient_);
  for (std::size_t i = 0; i < space_basis.rows(); ++i) {
    if (echelon.add(space_basis.row(i))) reps_.append_row(space_basis.row(i));
  }
  combined_ = sub_.vstack(reps_);
  pivots_ = rref(combined_).pivots;
  solve_ = inverse(combined_.select_columns(pivots_));
}

QVector QuotientBasis::coordinates(std::span<const Rational> v) const {
  if (v.size() != ambient_) throw InputError("quotient reduce: length mismatch");
  QVector picked(pivots_.size());
  for (std::size_t i = 0; i < pivots_.size(); ++i) picked[i] = v[pivots_[i]];
  return solve_.left_apply(picked);
}

QVector QuotientBasis::reduce(std::span<const Rational> v) const {
  const QVector full = coordinates(v);
  return QVector(full.begin() + static_cast<long>(sub_.rows()), full.end());
}

QVector QuotientBasis::reduce_checked(std::span<const Rational> v) const {
  const QVector full = coordinates(v);
  const QVector back = combined_.left_apply(full);
  if (!std::equal(back.begin(), back.end(), v.begin())) {
    throw InvariantError("quotient reduce: vector lies outside the ambient space");
  }
  return QVector(full.begin() + static_cast<long>(sub_.rows()), full.end());
}

bool QuotientBasis::contains(std::span<const Rational> v) const {
  const QVector back = combined_.left_apply(coordinates(v));
  return std::equal(back.begin(), back.end(), v.begin());
}

QVector QuotientBasis::lift(std::span<const Rational> coords) const { return reps_.left_apply(coords); }

}  // namespace hcc
