#include <random>

#include <gtest/gtest.h>

#include "hccourant/errors.hpp"
#include "hccourant/omni.hpp"
#include "hccourant/random.hpp"
#include "hccourant/verify.hpp"
#include "helpers.hpp"

using namespace hcc;
using testing_helpers::qv;

namespace {

OmniElement xi_part(std::size_t n, const QMatrix& x) { return {x, zeros(n)}; }
OmniElement v_part(std::size_t n, const QVector& v) { return {QMatrix(n, n), v}; }

}  // namespace

TEST(Weinstein, Formula) {
  const std::size_t n = 2;
  const QMatrix id = QMatrix::identity(n);
  EXPECT_EQ(weinstein_bracket(xi_part(n, id), xi_part(n, id)), v_part(n, zeros(n)));
  const QMatrix x = QMatrix::from_rows({qv({"1", "2"}), qv({"0", "-1"})}, 2);
  const QVector v = qv({"3", "1"});
  EXPECT_EQ(weinstein_bracket(xi_part(n, x), v_part(n, v)), v_part(n, x.apply(v)));
  EXPECT_EQ(omni_pairing(xi_part(n, x), v_part(n, v)), scale(Rational(1, 2), x.apply(v)));
}

TEST(Weinstein, Leibniz) {
  std::mt19937_64 rng(2);
  for (std::size_t n = 1; n <= 3; ++n)
    for (int t = 0; t < 30; ++t) {
      const std::size_t m = n * n + n;
      const OmniElement a = omni_split(n, random_vector(rng, m)), b = omni_split(n, random_vector(rng, m)),
                        c = omni_split(n, random_vector(rng, m));
      const OmniElement lhs = weinstein_bracket(a, weinstein_bracket(b, c));
      const OmniElement r1 = weinstein_bracket(weinstein_bracket(a, b), c), r2 = weinstein_bracket(b, weinstein_bracket(a, c));
      EXPECT_EQ(omni_flatten(lhs), add(omni_flatten(r1), omni_flatten(r2)));
    }
}

TEST(Weinstein, PairingNondegenerate) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const std::size_t m = n * n + n;
    // constraints: (e, b_k) = 0 for every basis element b_k, linear in e
    QMatrix rows(0, m);
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t comp = 0; comp < n; ++comp) {
        QVector r = zeros(m);
        for (std::size_t p = 0; p < m; ++p) r[p] = omni_pairing(omni_basis_element(n, p), omni_basis_element(n, k))[comp];
        rows.append_row(r);
      }
    EXPECT_EQ(nullspace(rows).rows(), 0u) << n;
  }
}

TEST(OmniDims, Dimensions) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const OmniDimReport r = verify_omni_dims(n);
    EXPECT_EQ(r.h1, n * n);
    EXPECT_EQ(r.h_1, n + n * (n - 1) / 2);
    EXPECT_EQ(r.e, n * n + n + n * (n - 1) / 2);
  }
  EXPECT_EQ(verify_omni_dims(2).e, 7u);
  EXPECT_EQ(verify_omni_dims(3).e, 15u);
  EXPECT_THROW(verify_omni_dims(5), GuardError);
}

TEST(OmniIso, Holds) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const OmniIsoReport r = verify_omni_isomorphism(build_omni_model(n));
    EXPECT_EQ(r.dim_j, n * (n - 1) / 2);
    EXPECT_EQ(r.dim_eps, n * n + n);
    EXPECT_EQ(r.form_scalar, 2);
    EXPECT_TRUE(r.ok()) << (r.failures.empty() ? "" : r.failures.front());
  }
}

TEST(OmniIso, GeneratorBracket) {
  // [[(xi1, dv1), (xi2, dv2)]] corresponds to ([xi1, xi2], xi1 v2)
  const OmniModel m = build_omni_model(2);
  const StructureTables& t = m.eps->tables();
  const QVector a = omni_flatten({QMatrix::from_rows({qv({"0", "1"}), qv({"0", "0"})}, 2), qv({"1", "0"})});
  const QVector b = omni_flatten({QMatrix::from_rows({qv({"1", "0"}), qv({"0", "0"})}, 2), qv({"0", "1"})});
  const QVector lhs = t.bracket_of(m.phi.left_apply(a), m.phi.left_apply(b));
  const QVector rhs = m.phi.left_apply(omni_flatten(weinstein_bracket(omni_split(2, a), omni_split(2, b))));
  EXPECT_EQ(lhs, rhs);
}

TEST(DStructure, Verdicts) {
  const OmniModel m3 = build_omni_model(3);
  const DStructureResult zero = d_structure_check(m3, zero_mu(3));
  EXPECT_TRUE(zero.lie);
  EXPECT_TRUE(zero.verdict.dirac);
  const DStructureResult so3 = d_structure_check(m3, so3_mu());
  EXPECT_TRUE(so3.verdict.dirac);
  EXPECT_TRUE(so3.agrees());

  MuTable nonskew = zero_mu(2);
  nonskew.entries[0] = qv({"1", "0"});  // mu(v1, v1) = v1
  const DStructureResult ns = d_structure_check(build_omni_model(2), nonskew);
  EXPECT_FALSE(ns.lie);
  EXPECT_FALSE(ns.verdict.isotropic);
  EXPECT_FALSE(ns.verdict.dirac);

  const DStructureResult bad = d_structure_check(m3, non_jacobi_mu());
  EXPECT_FALSE(bad.verdict.dirac);
  EXPECT_TRUE(bad.agrees());
}
