#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hccourant/courant.hpp"

namespace hcc {

enum class Ambient { E, Epsilon };

const char* ambient_name(Ambient a);

/// A Q-subspace of E(A) or eps(A), stored as a canonical RREF basis.
struct Submodule {
  Ambient ambient = Ambient::Epsilon;
  QMatrix basis;

  std::size_t dim() const { return basis.rows(); }
};

Submodule make_submodule(Ambient ambient, const QMatrix& spanning);

/// Structure tables of the ambient space named by L.
const StructureTables& ambient_tables(const EpsilonSpace& eps, Ambient ambient);

bool is_isotropic(const StructureTables& t, const QMatrix& l);
/// L-perp = {e : (e, l) = 0 for all l in L}, as a basis.
QMatrix orthogonal(const StructureTables& t, const QMatrix& l);
bool is_maximally_isotropic(const StructureTables& t, const QMatrix& l);

struct Counterexample {
  std::size_t i = 0;
  std::size_t j = 0;
  QVector value;  // [[l_i, l_j]] in ambient coordinates
};

std::optional<Counterexample> closure_failure(const StructureTables& t, const QMatrix& l);
bool is_bracket_closed(const StructureTables& t, const QMatrix& l);
bool is_center_stable(const StructureTables& t, const QMatrix& l);

struct DiracVerdict {
  Ambient ambient = Ambient::Epsilon;
  std::size_t dim = 0;
  bool isotropic = false;
  bool maximal = false;
  bool closed = false;
  bool dirac = false;
  bool z_stable = false;
  std::optional<Counterexample> counterexample;
};

/// Full verdict on arbitrary tables. On E(A) the maximality flag refers to
/// the possibly degenerate pre-quotient form.
DiracVerdict evaluate_submodule(const StructureTables& t, const Submodule& l);

/// Dirac verdict on eps(A). Throws InputError when eps(A) = 0 or when L
/// does not live in eps(A).
DiracVerdict is_dirac(const EpsilonSpace& eps, const Submodule& l);

/// {e_i, e_j} = entries[i*d + j] in algebra coordinates.
struct BracketTable {
  AlgebraPtr algebra;
  std::vector<QVector> entries;

  std::size_t dim() const { return algebra->dim(); }
  const QVector& at(std::size_t i, std::size_t j) const { return entries[i * dim() + j]; }
  QVector apply(std::span<const Rational> a, std::span<const Rational> b) const;
};

BracketTable zero_table(const AlgebraPtr& a);
/// Table from a flat vector of length d^3, index (i*d + j)*d + k.
BracketTable table_from_vector(const AlgebraPtr& a, std::span<const Rational> v);
QVector table_to_vector(const BracketTable& t);

/// Empty string when the biderivation law holds on all basis triples,
/// otherwise a description of the first violation.
std::string biderivation_violation(const BracketTable& t);
bool is_biderivation(const BracketTable& t);
bool is_skew(const BracketTable& t);
bool satisfies_jacobi(const BracketTable& t);
/// Skew and Jacobi on basis triples: the direct oracle.
bool is_poisson(const BracketTable& t);

/// Basis of all biderivations, as rows in the flat layout of table_from_vector.
QMatrix biderivation_space(const FiniteAlgebra& a);

/// Derivation a{b, .} summed over the chain a (x) b terms of a degree-1 chain.
QMatrix hamiltonian(const BracketTable& t, const Chain& c);

struct PoissonGraph {
  QMatrix in_e;        // L_pi in E(A) coordinates
  Submodule in_eps;    // p(L_pi)
};

/// Throws InputError for noncommutative A or a non-biderivation table, and
/// InvariantError if the hamiltonian map does not kill boundaries.
PoissonGraph poisson_graph(const EpsilonSpace& eps, const BracketTable& t);

/// Closed and alternating H_2 classes.
struct TwoFormCheck {
  bool closed = false;
  bool alternating = false;
  std::string reason;
  bool ok() const { return closed && alternating; }
};

/// Homology presentations shared by the two-form routines.
struct TwoFormContext {
  ESpacePtr e;
  HomologyPresentation h2;
  HomologyPresentation h3;
};

TwoFormContext two_form_context(const ESpacePtr& e, const Guard& guard = {});
TwoFormCheck check_two_form(const TwoFormContext& ctx, std::span<const Rational> omega);
/// All closed alternating omega: the conditions are linear in omega.
QMatrix closed_two_forms(const TwoFormContext& ctx);

struct TwoFormGraph {
  QMatrix in_e;
  Submodule in_eps;
  DiracVerdict verdict;
};

/// L_omega = span (X_k, i_{X_k} omega). Throws InputError naming the violated
/// condition when omega is not closed and alternating, or when eps(A) = 0.
TwoFormGraph two_form_graph(const EpsilonSpace& eps, const TwoFormContext& ctx, std::span<const Rational> omega);

struct TwoFormSearch {
  std::size_t grid_points = 0;
  std::size_t random_points = 0;
  std::size_t solution_dim = 0;        // dimension of the exact solution space
  std::optional<QVector> witness;      // first nonzero grid or random hit
};

/// Nonzero points of {-1,0,1}^dim H_2 by increasing support, up to
/// grid_limit points, then random draws. Stops at the first witness.
TwoFormSearch search_two_forms(const TwoFormContext& ctx, std::mt19937_64& rng, std::size_t grid_limit = 6561,
                               std::size_t random_draws = 200);

struct AlgebroidReport {
  std::size_t checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Anchor and Leibniz rules on p^{-1}(L) against central z, and the Lie
/// identities of the bracket restricted to L.
AlgebroidReport lie_algebroid_check(const EpsilonSpace& eps, const Submodule& l, std::mt19937_64& rng,
                                    std::size_t random_centrals = 3);

/// p^{-1}(L) = lift(L) + J in E(A) coordinates.
QMatrix preimage(const EpsilonSpace& eps, const Submodule& l);
/// Projection of E-coordinate rows to an eps submodule.
Submodule project_submodule(const EpsilonSpace& eps, const QMatrix& rows_in_e);

/// The H^1 summand of E(A) as rows in E coordinates.
QMatrix h1_summand(const ESpace& e);
/// The H_1 summand of E(A) as rows in E coordinates.
QMatrix h_1_summand(const ESpace& e);

}  // namespace hcc
