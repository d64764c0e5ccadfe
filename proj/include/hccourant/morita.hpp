#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hccourant/dirac.hpp"

namespace hcc {

/// Entrywise extension of a derivation of A to M_r(A).
QMatrix cotr(const FiniteAlgebra& a, std::size_t r, const QMatrix& x);
/// Corner embedding E11 on every tensor factor.
Chain inc(const FiniteAlgebra& a, std::size_t r, const Chain& c);

/// Class-level maps between E(A) and E(M_r(A)).
struct MoritaMaps {
  std::size_t r = 2;
  ESpacePtr source;
  ESpacePtr target;
  std::shared_ptr<const EpsilonSpace> eps_source;
  std::shared_ptr<const EpsilonSpace> eps_target;
  QMatrix t;      // H^1 classes, row k = T(X_k)
  QMatrix i;      // H_1 classes, row k = I(alpha_k)
  QMatrix phi;    // H_0 classes induced by inc
  QMatrix e_map;  // block diagonal T + I on E coordinates
  QMatrix eps_map;
};

/// Throws GuardError when M_r(A) exceeds the dimension guard.
MoritaMaps build_morita(const AlgebraPtr& a, std::size_t r, const Guard& guard = {});

struct MoritaReport {
  std::size_t r = 2;
  std::size_t dim_e_source = 0, dim_e_target = 0;
  std::size_t dim_eps_source = 0, dim_eps_target = 0;
  bool t_bijective = false;
  bool i_bijective = false;
  bool phi_bijective = false;
  bool phi_is_trace_inverse = false;
  bool interior_preserved = false;      // i_{T X} I = I i_X on classes
  bool b_commutes = false;              // B I = I B on H_0 classes
  bool chain_homotopy = false;          // exact chain-level correction
  bool lie_and_b_identities = false;    // I B i_X = B i_{TX} I, i_{TX} B I = I i_X B
  bool bracket_preserved = false;
  bool form_preserved = false;
  bool kernel_mapped = false;           // T + I sends J into J
  bool eps_bijective = false;
  bool eps_bracket_preserved = false;
  bool eps_form_preserved = false;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

MoritaReport verify_morita(const MoritaMaps& m);

/// (B I - I B)(a) + b(u (x) m (x) f) - b(1 (x) 1 (x) m) + b(f (x) f (x) m) with
/// u = 1 - E11(1), m = E11(a), f = E11(1); returns the chain, zero when the
/// identity holds.
Chain morita_homotopy_defect(const FiniteAlgebra& a, std::size_t r, std::span<const Rational> elem);

struct TransportResult {
  Submodule image;
  DiracVerdict verdict;
};

TransportResult transport_dirac(const MoritaMaps& m, const Submodule& l);

struct OppositeReport {
  std::size_t dim_e = 0;
  bool dims_match = false;
  bool bracket_preserved = false;
  bool form_preserved = false;
  bool ok() const { return dims_match && bracket_preserved && form_preserved; }
};

/// E(A) against E(A^op) under the identity on derivations and chains.
OppositeReport verify_opposite(const AlgebraPtr& a, const Guard& guard = {});

}  // namespace hcc
