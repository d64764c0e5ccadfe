#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hccourant/hochschild.hpp"

namespace hcc {

/// An element (X, alpha) of E(A) = H^1(A,A) + H_1(A,A) in class coordinates.
struct EElement {
  QVector x;
  QVector alpha;

  bool operator==(const EElement&) const = default;
};

EElement operator+(const EElement& a, const EElement& b);
EElement operator-(const EElement& a, const EElement& b);
EElement operator*(const Rational& c, const EElement& a);

/// Bilinear data of a finite-dimensional bracket space in a fixed basis:
/// bracket structure constants, H_0-valued form values, and the matrices of
/// multiplication by each basis element of Z(A).
struct StructureTables {
  std::size_t dim = 0;
  std::size_t value_dim = 0;                // dim H_0
  std::vector<QVector> bracket;             // bracket[p*dim + q] = [[b_p, b_q]]
  std::vector<QVector> form;                // form[p*dim + q] = (b_p, b_q)
  std::vector<QMatrix> center_action;       // row p of matrix k: z_k . b_p

  QVector bracket_of(std::span<const Rational> u, std::span<const Rational> v) const;
  QVector form_of(std::span<const Rational> u, std::span<const Rational> v) const;
  QVector center_multiply(std::size_t k, std::span<const Rational> u) const;
};

/// E(A) with its Courant bracket, H_0-valued form, anchor and D map.
class ESpace {
 public:
  /// Computes H_0, H_1, H^1 and Z(A), verifies that B descends to H_0 -> H_1
  /// and that derivations preserve [A,A], and tabulates the bracket on the
  /// class basis. Throws InvariantError if a descent check fails.
  explicit ESpace(AlgebraPtr a, const Guard& guard = {});

  const FiniteAlgebra& algebra() const { return *ld_.algebra; }
  const AlgebraPtr& algebra_ptr() const { return ld_.algebra; }
  const LowDegree& presentations() const { return ld_; }

  std::size_t h1_dim() const { return ld_.coh1.dim(); }   // H^1
  std::size_t h_1_dim() const { return ld_.h1.dim(); }    // H_1
  std::size_t h0_dim() const { return ld_.h0.dim(); }
  std::size_t dim() const { return h1_dim() + h_1_dim(); }

  QVector flatten(const EElement& e) const;
  EElement split(std::span<const Rational> v) const;
  EElement basis_element(std::size_t k) const { return split(unit_vector(dim(), k)); }

  const StructureTables& tables() const { return tables_; }

 private:
  LowDegree ld_;
  StructureTables tables_;
};

using ESpacePtr = std::shared_ptr<const ESpace>;

ESpacePtr make_espace(AlgebraPtr a, const Guard& guard = {});

/// [[(X1,a1),(X2,a2)]] = ([X1,X2], L_X1 a2 - L_X2 a1 + B<X2,a1>), evaluated on
/// class representatives and reduced with exact membership checks.
EElement courant_bracket(const ESpace& e, const EElement& e1, const EElement& e2);

/// [[e1,e2]] - 1/2 D(e1,e2).
EElement skew_bracket(const ESpace& e, const EElement& e1, const EElement& e2);

/// (e1,e2) = <X2,a1> + <X1,a2> in H_0 class coordinates.
QVector bilinear_form(const ESpace& e, const EElement& e1, const EElement& e2);

QVector rho(const ESpace& e, const EElement& el);

/// D(h) = (0, class of B(h)) for h in H_0 class coordinates.
EElement d_map(const ESpace& e, std::span<const Rational> h0_class);

/// X(z) for an H^1 class X and z in Z(A) (algebra coordinates). Throws
/// InputError if z is not central, InvariantError if X(z) is not central.
QVector center_action(const ESpace& e, std::span<const Rational> x, std::span<const Rational> z);

/// z . (X, alpha) = (zX, z alpha) for central z.
EElement center_multiply(const ESpace& e, std::span<const Rational> z, const EElement& el);

/// Action of a derivation class on H_0 = A/[A,A].
QVector h0_action(const ESpace& e, std::span<const Rational> x, std::span<const Rational> h0_class);

/// Radical of the form: basis rows in E coordinates.
QMatrix kernel_J(const ESpace& e);

/// eps(A) = E(A)/J with the induced bracket and nondegenerate form.
class EpsilonSpace {
 public:
  /// Verifies that J is a two-sided ideal and that the induced form is
  /// nondegenerate; throws InvariantError otherwise.
  explicit EpsilonSpace(ESpacePtr e);

  const ESpace& espace() const { return *e_; }
  const ESpacePtr& espace_ptr() const { return e_; }
  std::size_t dim() const { return quotient_.dim(); }
  const QMatrix& kernel() const { return j_; }
  const QMatrix& reps() const { return quotient_.reps(); }

  /// E coordinates -> eps coordinates.
  QVector project(std::span<const Rational> e_coords) const { return quotient_.reduce(e_coords); }
  /// eps coordinates -> the canonical representative in E coordinates.
  QVector lift(std::span<const Rational> eps_coords) const { return quotient_.lift(eps_coords); }

  const StructureTables& tables() const { return tables_; }

  /// The anchor is well defined on eps(A) only for commutative A.
  bool has_anchor() const { return e_->algebra().is_commutative(); }
  QVector rho(std::span<const Rational> eps_coords) const;

 private:
  ESpacePtr e_;
  QMatrix j_;
  QuotientBasis quotient_;
  StructureTables tables_;
};

/// Per-triple check of the Courant algebroid identities: Leibniz, anchor
/// morphism, anchor Leibniz rule, invariance of the form, 2[[e,e]] = D(e,e).
struct AxiomReport {
  std::size_t checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
  void merge(const AxiomReport& other);
};

/// z must be central (algebra coordinates).
AxiomReport check_axioms(const ESpace& e, const EElement& e1, const EElement& e2, const EElement& e3,
                         std::span<const Rational> z);

/// Kernel ideal and nondegeneracy report without throwing.
struct KernelReport {
  std::size_t dim_e = 0;
  std::size_t dim_j = 0;
  bool left_ideal = true;   // [[J, E]] in J
  bool right_ideal = true;  // [[E, J]] in J
  bool in_radical = true;
  bool nondegenerate = true;
  bool ok() const { return left_ideal && right_ideal && in_radical && nondegenerate; }
};

KernelReport verify_kernel(const ESpace& e);

}  // namespace hcc
