#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "hccourant/omni.hpp"

namespace hcc {

/// One named family of exact checks.
struct Tally {
  explicit Tally(std::string n, bool is_asserted = true) : name(std::move(n)), asserted(is_asserted) {}

  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  bool asserted = true;       // false: observational only
  std::string first_failure;

  void record(bool ok, const std::string& what);
  bool ok() const { return !asserted || failures == 0; }
};

struct TallyReport {
  std::vector<Tally> tallies;
  bool ok() const;
  const Tally* find(const std::string& name) const;
};

/// b o b = 0 as matrix products C_{n+1} -> C_{n-1}, n = 1 .. max_degree.
TallyReport boundary_squares(const FiniteAlgebra& a, std::size_t max_degree, const Guard& guard = {});

/// Cartan identities and the h_{a'} homotopy on random chains of degree 1, 2,
/// L_X = B i_X + i_X B on H_1 classes, and the same identity on H_2 recorded without
/// being asserted. The homotopy is checked both with the sign (-1)^{n+1} and
/// with the sign -1.
TallyReport operator_identities(const AlgebraPtr& a, std::mt19937_64& rng, std::size_t draws, const Guard& guard = {});

/// The Courant identities on all class-basis triples and on random triples with random
/// central z, and skew symmetry of the skew bracket.
TallyReport courant_axioms(const ESpace& e, std::mt19937_64& rng, std::size_t draws);

struct NamedTable {
  std::string name;
  BracketTable table;
};

/// Well-known Lie brackets on V of dimension n (n = 2 or 3).
std::vector<std::pair<std::string, MuTable>> structured_lie_brackets(std::size_t n);
/// The non-Jacobi witness {v1,v2} = v3, {v3,v1} = v1 (skew completed), n = 3.
MuTable non_jacobi_mu();
/// {v1,v2} = v3, {v2,v3} = v1, {v3,v1} = 0 (skew completed), n = 3.
MuTable cyclic_pair_mu();
MuTable so3_mu();
MuTable conjugate_mu(const MuTable& mu, const QMatrix& g);

/// Random biderivation tables: general, skew-symmetrized, and (for V[1])
/// random conjugates and multiples of structured Lie brackets, followed by
/// structured witnesses.
std::vector<NamedTable> poisson_corpus(const AlgebraPtr& a, std::mt19937_64& rng, std::size_t random_count);
/// Random mu tables on V of dimension n in the same mix.
std::vector<std::pair<std::string, MuTable>> mu_corpus(std::size_t n, std::mt19937_64& rng, std::size_t random_count);

struct PoissonSweep {
  std::size_t tables = 0;
  std::size_t poisson = 0;
  std::size_t disagreements = 0;
  std::size_t skew_not_isotropic = 0;   // skew tables whose graph is not isotropic
  std::size_t preimage_mismatch = 0;    // p^{-1}(p(L_pi)) != L_pi
  std::vector<std::string> disagreeing;
};

PoissonSweep poisson_sweep(const EpsilonSpace& eps, const std::vector<NamedTable>& corpus);

struct TwoFormOutcome {
  std::size_t h2_dim = 0;
  TwoFormSearch search;
  bool zero_form_dirac = false;
  bool witness_dirac = false;           // meaningful when search.witness is set
  std::size_t basis_checked = 0;        // exact solution basis elements checked
  std::size_t basis_dirac = 0;
};

/// omega = 0, the bounded search, and each vector of the exact solution basis.
TwoFormOutcome two_form_outcome(const EpsilonSpace& eps, std::mt19937_64& rng, const Guard& guard = {});

}  // namespace hcc
