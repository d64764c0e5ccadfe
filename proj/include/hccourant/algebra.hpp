#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hccourant/qmatrix.hpp"

namespace hcc {

/// Sparse term of a structure constant: coefficient of basis element `index`.
struct Term {
  std::size_t index;
  Rational coeff;
};

/// Raw structure-constant data before validation.
struct AlgebraData {
  std::string name;
  std::vector<std::string> basis;
  std::vector<std::vector<QVector>> structure;  // structure[i][j] = coords of e_i e_j
  QVector unit;
};

struct StructureReport {
  bool associative = false;
  bool unital = false;
  std::string detail;  // first failing triple or unit law, empty when valid
  bool valid() const { return associative && unital; }
};

/// Exact associativity and unit-law check over all basis triples.
StructureReport check_structure(const AlgebraData& data);

/// Finite-dimensional unital associative algebra over Q, given by structure
/// constants on a fixed basis e_0..e_{d-1}.
class FiniteAlgebra {
 public:
  /// Throws InputError when shapes are inconsistent or the table fails
  /// associativity or the unit laws.
  explicit FiniteAlgebra(AlgebraData data);

  std::size_t dim() const { return basis_.size(); }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& basis_names() const { return basis_; }
  const QVector& unit() const { return unit_; }

  const QVector& product(std::size_t i, std::size_t j) const { return structure_[i * dim() + j]; }
  std::span<const Term> product_terms(std::size_t i, std::size_t j) const { return terms_[i * dim() + j]; }

  QVector multiply(std::span<const Rational> a, std::span<const Rational> b) const;
  QVector commutator(std::span<const Rational> a, std::span<const Rational> b) const;
  bool is_commutative() const { return commutative_; }

  /// Left and right multiplication operators as d x d matrices acting on
  /// column coordinate vectors.
  QMatrix left_multiplication(std::span<const Rational> a) const;
  QMatrix right_multiplication(std::span<const Rational> a) const;

  AlgebraData data() const;

 private:
  std::string name_;
  std::vector<std::string> basis_;
  std::vector<QVector> structure_;
  std::vector<std::vector<Term>> terms_;
  QVector unit_;
  bool commutative_ = false;
};

using AlgebraPtr = std::shared_ptr<const FiniteAlgebra>;

AlgebraPtr make_algebra(AlgebraData data);

struct AlgebraElement {
  AlgebraPtr algebra;
  QVector coords;
};

AlgebraElement element(const AlgebraPtr& algebra, QVector coords);

/// Throws InputError when the operands belong to different algebras.
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);

/// Basis of Z(A) = {z : z e_i = e_i z for all i}, canonical RREF rows.
QMatrix center(const FiniteAlgebra& a);

/// Basis of [A,A] = span{e_i e_j - e_j e_i}, canonical RREF rows.
QMatrix commutator_subspace(const FiniteAlgebra& a);

/// M_r(A) with basis E_pq(e_i) at index (p*r + q)*d + i.
AlgebraPtr matrix_algebra(const FiniteAlgebra& a, std::size_t r);

/// Index of E_pq(e_i) in matrix_algebra(a, r).
inline std::size_t matrix_unit_index(std::size_t d, std::size_t r, std::size_t p, std::size_t q, std::size_t i) {
  return (p * r + q) * d + i;
}

AlgebraPtr opposite_algebra(const FiniteAlgebra& a);

/// The field Q itself, dimension 1.
AlgebraPtr rationals();

/// V[1] = V + Q.1 with v_i v_j = 0, basis (1, v_1, ..., v_n).
AlgebraPtr build_v1(std::size_t n);

/// Q[x]/(x^n), basis 1, x, ..., x^{n-1}.
AlgebraPtr truncated_poly(std::size_t n);

/// Upper-triangular n x n matrices, basis E_pq for p <= q in row-major order.
AlgebraPtr upper_triangular(std::size_t n);

/// The bundled corpus, in a fixed order, keyed by short identifiers
/// ("q", "dual2", "trunc3", "v1_1", "v1_2", "v1_3", "m2q", "ut2").
std::vector<std::pair<std::string, AlgebraPtr>> bundled_algebras();
AlgebraPtr bundled_algebra(const std::string& id);

}  // namespace hcc
