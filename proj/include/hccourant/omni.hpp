#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "hccourant/dirac.hpp"

namespace hcc {

/// (xi, v) in gl(V) + V.
struct OmniElement {
  QMatrix xi;
  QVector v;

  bool operator==(const OmniElement&) const = default;
};

/// Basis of gl(V) + V: index a*n + b is the matrix unit sending v_b to v_a,
/// index n^2 + k is v_k.
OmniElement omni_basis_element(std::size_t n, std::size_t index);
QVector omni_flatten(const OmniElement& e);
OmniElement omni_split(std::size_t n, std::span<const Rational> v);

/// ([xi1, xi2], xi1 v2)
OmniElement weinstein_bracket(const OmniElement& a, const OmniElement& b);
/// 1/2 (xi2 v1 + xi1 v2)
QVector omni_pairing(const OmniElement& a, const OmniElement& b);

struct OmniDimReport {
  std::size_t n = 0;
  std::size_t h1 = 0, h_1 = 0, e = 0;                  // computed
  std::size_t h1_expected = 0, h_1_expected = 0, e_expected = 0;
  bool ok() const { return h1 == h1_expected && h_1 == h_1_expected && e == e_expected; }
};

/// Throws GuardError above guard.max_omni_dim.
OmniDimReport verify_omni_dims(std::size_t n, const Guard& guard = {});

/// eps(V[1]) with the explicit map gl(V) + V -> eps(V[1]).
struct OmniModel {
  std::size_t n = 0;
  ESpacePtr e;
  std::shared_ptr<const EpsilonSpace> eps;
  QMatrix phi;  // row k: image of omni basis element k in eps coordinates
};

OmniModel build_omni_model(std::size_t n, const Guard& guard = {});

struct OmniIsoReport {
  std::size_t n = 0;
  std::size_t dim_e = 0;
  std::size_t dim_j = 0;
  std::size_t dim_eps = 0;
  bool kernel_dim = false;        // dim J = n(n-1)/2
  bool kernel_generators = false; // J spanned by the classes (0, v_i (x) v_j)
  bool bijective = false;
  bool bracket_matches = false;
  bool form_matches = false;
  Rational form_scalar = 2;       // eps form = scalar * omni pairing
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

OmniIsoReport verify_omni_isomorphism(const OmniModel& m);

/// mu[i*n + j] = mu(v_i, v_j) in V coordinates.
struct MuTable {
  std::size_t n = 0;
  std::vector<QVector> entries;
  const QVector& at(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
};

MuTable zero_mu(std::size_t n);
/// Skew and Jacobi on V.
bool is_lie_bracket(const MuTable& mu);
/// The biderivation {v_i, v_j} = mu(v_i, v_j), {1, .} = 0 on V[1].
BracketTable mu_to_table(const AlgebraPtr& v1, const MuTable& mu);

struct DStructureResult {
  Submodule graph;          // image of L_mu in eps(V[1])
  DiracVerdict verdict;
  bool lie = false;         // direct oracle
  bool agrees() const { return verdict.dirac == lie; }
};

DStructureResult d_structure_check(const OmniModel& m, const MuTable& mu);

}  // namespace hcc
