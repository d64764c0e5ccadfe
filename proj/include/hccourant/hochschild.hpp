#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hccourant/algebra.hpp"
#include "hccourant/exactlin.hpp"

namespace hcc {

/// Bounds on the d^{n+1}-sized chain spaces. Homology in degree n needs
/// C_{n+1}, so the guard is keyed on the homology degree.
struct Guard {
  std::size_t max_degree = 2;
  std::size_t max_dim = 16;          // degrees <= 2
  std::size_t max_dim_degree3 = 6;   // degree 3
  std::size_t max_omni_dim = 4;      // dim V in the V[1] model

  /// Raises every dimension bound to at least n.
  Guard raised(std::size_t n) const {
    Guard g = *this;
    g.max_dim = std::max(g.max_dim, n);
    g.max_dim_degree3 = std::max(g.max_dim_degree3, n);
    g.max_omni_dim = std::max(g.max_omni_dim, n);
    return g;
  }

  Guard with_degree3() const {
    Guard g = *this;
    g.max_degree = std::max<std::size_t>(g.max_degree, 3);
    return g;
  }
};

/// Throws GuardError naming the override flag when (A, degree) is outside the guard.
void check_guard(const FiniteAlgebra& a, std::size_t degree, const Guard& guard);

/// A Hochschild n-chain in C_n(A,A) = A (x) A^{(x)n}. Coordinates are indexed
/// lexicographically by (i_0, ..., i_n), i_0 most significant.
struct Chain {
  std::size_t degree = 0;
  QVector coords;

  bool operator==(const Chain&) const = default;
};

std::size_t chain_dim(std::size_t d, std::size_t degree);
std::size_t tensor_index(std::size_t d, std::span<const std::size_t> digits);
std::vector<std::size_t> tensor_digits(std::size_t d, std::size_t degree, std::size_t index);

Chain zero_chain(const FiniteAlgebra& a, std::size_t degree);
Chain basis_chain(const FiniteAlgebra& a, std::span<const std::size_t> digits);
/// a_0 (x) a_1 (x) ... (x) a_n for algebra elements given by coordinates.
Chain tensor_chain(const FiniteAlgebra& a, const std::vector<QVector>& factors);

Chain operator+(const Chain& x, const Chain& y);
Chain operator-(const Chain& x, const Chain& y);
Chain operator*(const Rational& c, const Chain& x);

/// Hochschild boundary b = sum_i P_i. Throws InputError at degree 0.
Chain boundary_b(const FiniteAlgebra& a, const Chain& c);
/// Matrix of b: C_n -> C_{n-1}.
QMatrix boundary_matrix(const FiniteAlgebra& a, std::size_t degree);

/// Connes' operator B: C_n -> C_{n+1} in the explicit form
/// sum_i (-1)^{ni} (1 (x) a_i..a_n (x) a_0..a_{i-1} + a_i (x) 1 (x) a_{i+1}..a_n (x) a_0..a_{i-1}).
Chain connes_B(const FiniteAlgebra& a, const Chain& c);

/// h_{a'}(a_0 (x) ... ) = a' a_0 (x) ...; also the Z(A)-action on chains.
Chain left_multiply_chain(const FiniteAlgebra& a, std::span<const Rational> factor, const Chain& c);

// Cochains of degree 1. A linear map X : A -> A is stored as a d x d matrix
// with X(e_j) in column j; flattened row-major, entry (r, j) at r*d + j.

QMatrix cochain_from_vector(std::size_t d, std::span<const Rational> v);
QVector cochain_to_vector(const QMatrix& x);

/// d x d^2 defect table: column a*d + b holds a X(b) - X(ab) + X(a) b.
QMatrix coboundary_beta(const FiniteAlgebra& a, const QMatrix& f);
bool is_derivation(const FiniteAlgebra& a, const QMatrix& x);
/// [a, .] as a d x d matrix.
QMatrix inner_derivation(const FiniteAlgebra& a, std::span<const Rational> elem);
QMatrix commutator(const QMatrix& x, const QMatrix& y);

/// L_X(a_0 (x) ... (x) a_n) = sum_i a_0 (x) .. X(a_i) .. (x) a_n. X must be a derivation.
Chain lie_derivative(const FiniteAlgebra& a, const QMatrix& x, const Chain& c);
/// i_X(a_0 (x) ... (x) a_n) = (-1)^{n+1} X(a_n) a_0 (x) ... (x) a_{n-1}. Degree >= 1, X a derivation.
Chain interior_product(const FiniteAlgebra& a, const QMatrix& x, const Chain& c);

// Same operators without the derivation precondition check. Used on inputs
// already known to be derivations, and by the identity checks which apply
// them to arbitrary linear maps.
Chain apply_lie(const FiniteAlgebra& a, const QMatrix& x, const Chain& c);
Chain apply_interior(const FiniteAlgebra& a, const QMatrix& x, const Chain& c);

/// A computed H_n(A,A) or H^1(A,A): cycles modulo boundaries with canonical
/// class representatives from QuotientBasis.
class HomologyPresentation {
 public:
  HomologyPresentation() = default;
  HomologyPresentation(std::size_t degree, const QMatrix& cycles, const QMatrix& boundaries);

  std::size_t degree() const { return degree_; }
  std::size_t ambient_dim() const { return cycles_.cols(); }
  std::size_t dim() const { return quotient_.dim(); }

  const QMatrix& cycle_basis() const { return cycles_; }
  const QMatrix& boundary_basis() const { return quotient_.subspace_basis(); }
  const QMatrix& class_reps() const { return quotient_.reps(); }

  /// Class coordinates of a cycle (unchecked).
  QVector reduce(std::span<const Rational> cycle) const { return quotient_.reduce(cycle); }
  /// Throws InvariantError when the argument is not a cycle.
  QVector reduce_checked(std::span<const Rational> cycle) const { return quotient_.reduce_checked(cycle); }
  bool is_cycle(std::span<const Rational> v) const;
  bool is_boundary(std::span<const Rational> v) const;

  QVector representative(std::span<const Rational> class_coords) const { return quotient_.lift(class_coords); }
  QVector representative(std::size_t k) const { return quotient_.reps().row_vector(k); }

 private:
  std::size_t degree_ = 0;
  QMatrix cycles_;
  QuotientBasis quotient_;
};

/// H_n(A,A). n = 0 uses all of C_0 as cycles.
HomologyPresentation homology(const FiniteAlgebra& a, std::size_t degree, const Guard& guard = {});

/// H^1(A,A) = Der(A) / {[a, .]} on flattened cochains.
HomologyPresentation cohomology_h1(const FiniteAlgebra& a);

/// The low-degree data every E(A) computation needs.
struct LowDegree {
  AlgebraPtr algebra;
  QMatrix center;            // basis of Z(A)
  HomologyPresentation h0;   // A/[A,A]
  HomologyPresentation h1;   // H_1(A,A)
  HomologyPresentation coh1; // H^1(A,A)

  QMatrix derivation_rep(std::span<const Rational> class_coords) const;
  Chain h1_rep(std::span<const Rational> class_coords) const;
};

LowDegree low_degree(const AlgebraPtr& a, const Guard& guard = {});

/// <X, alpha> = class of i_X alpha in H_0. Arguments are class coordinates.
QVector pairing(const LowDegree& ld, std::span<const Rational> x, std::span<const Rational> alpha);

/// Exact inclusion checks that L_X and i_X preserve cycles and boundaries in
/// degree n, that inner derivations act by zero on H_n, and that B carries
/// cycles and boundaries of degree n-1 to cycles and boundaries of degree n.
struct DescentReport {
  std::size_t degree = 0;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

DescentReport verify_descent(const FiniteAlgebra& a, std::size_t degree, const Guard& guard = {});

}  // namespace hcc
