#include <random>

#include <gtest/gtest.h>

#include "hccourant/errors.hpp"
#include "hccourant/morita.hpp"
#include "hccourant/omni.hpp"
#include "hccourant/random.hpp"
#include "hccourant/verify.hpp"
#include "helpers.hpp"

using namespace hcc;
using testing_helpers::qv;

namespace {

QVector corner(std::size_t d, std::size_t r, std::span<const Rational> a) {
  QVector out = zeros(r * r * d);
  for (std::size_t i = 0; i < d; ++i) out[matrix_unit_index(d, r, 0, 0, i)] = a[i];
  return out;
}

}  // namespace

TEST(Cotr, CornerEntry) {
  const AlgebraPtr a = build_v1(2);
  QMatrix x(3, 3);
  x(1, 2) = 1;
  x(2, 2) = -2;
  const QMatrix cx = cotr(*a, 2, x);
  for (std::size_t k = 0; k < 3; ++k) {
    const QVector ak = unit_vector(3, k);
    EXPECT_EQ(cx.apply(corner(3, 2, ak)), corner(3, 2, x.apply(ak)));
  }
  EXPECT_TRUE(is_derivation(*matrix_algebra(*a, 2), cx));
}

TEST(Inc, DegreeOne) {
  const AlgebraPtr a = truncated_poly(2);
  const AlgebraPtr m = matrix_algebra(*a, 2);
  const QVector a0 = qv({"1", "2"}), a1 = qv({"-1", "1"});
  EXPECT_EQ(inc(*a, 2, tensor_chain(*a, {a0, a1})), tensor_chain(*m, {corner(2, 2, a0), corner(2, 2, a1)}));
}

TEST(Inc, CommutesWithBOnHomology) {
  const AlgebraPtr a = build_v1(2);
  const AlgebraPtr m = matrix_algebra(*a, 2);
  const HomologyPresentation h1 = homology(*m, 1);
  for (std::size_t k = 0; k < 3; ++k) {
    const Chain c{0, unit_vector(3, k)};
    const Chain lhs = inc(*a, 2, connes_B(*a, c));
    const Chain rhs = connes_B(*m, inc(*a, 2, c));
    EXPECT_EQ(h1.reduce(lhs.coords), h1.reduce(rhs.coords));
  }
}

TEST(Morita, HomotopyDefectVanishes) {
  std::mt19937_64 rng(4);
  for (const char* id : {"dual2", "v1_2", "ut2", "q"}) {
    const AlgebraPtr a = bundled_algebra(id);
    for (int t = 0; t < 5; ++t) EXPECT_TRUE(is_zero(morita_homotopy_defect(*a, 2, random_vector(rng, a->dim())).coords)) << id;
  }
}

TEST(Morita, DualNumbers) {
  const MoritaMaps m = build_morita(truncated_poly(2), 2);
  const MoritaReport r = verify_morita(m);
  EXPECT_EQ(r.dim_eps_source, 2u);
  EXPECT_EQ(r.dim_eps_target, 2u);
  EXPECT_TRUE(r.ok()) << (r.failures.empty() ? "" : r.failures.front());
}

TEST(Morita, V1) {
  const MoritaMaps m = build_morita(build_v1(2), 2);
  const MoritaReport r = verify_morita(m);
  EXPECT_EQ(r.dim_eps_target, 6u);
  EXPECT_TRUE(r.bracket_preserved);
  EXPECT_TRUE(r.form_preserved);
  EXPECT_TRUE(r.ok()) << (r.failures.empty() ? "" : r.failures.front());

  const TransportResult gl = transport_dirac(m, project_submodule(*m.eps_source, h1_summand(*m.source)));
  EXPECT_TRUE(gl.verdict.dirac);
  EXPECT_EQ(gl.image.basis, project_submodule(*m.eps_target, h1_summand(*m.target)).basis);
}

TEST(Morita, TransportPoissonGraph) {
  // {v1, v2} = v1 is a Lie bracket on a 2-dim V
  MuTable mu = zero_mu(2);
  mu.entries[0 * 2 + 1] = qv({"1", "0"});
  mu.entries[1 * 2 + 0] = qv({"-1", "0"});
  ASSERT_TRUE(is_lie_bracket(mu));
  const MoritaMaps m = build_morita(build_v1(2), 2);
  const Submodule l = poisson_graph(*m.eps_source, mu_to_table(m.source->algebra_ptr(), mu)).in_eps;
  ASSERT_TRUE(is_dirac(*m.eps_source, l).dirac);
  EXPECT_TRUE(transport_dirac(m, l).verdict.dirac);
}

TEST(Morita, TransportSo3Graph) {
  const MoritaMaps m = build_morita(build_v1(3), 2);
  const Submodule l = poisson_graph(*m.eps_source, mu_to_table(m.source->algebra_ptr(), so3_mu())).in_eps;
  EXPECT_TRUE(transport_dirac(m, l).verdict.dirac);
}

TEST(Morita, GuardOnLargeTarget) {
  EXPECT_THROW(build_morita(truncated_poly(3), 3), GuardError);
}

TEST(Morita, MatrixRationalsDims) {
  const AlgebraPtr q = rationals();
  const AlgebraPtr m = matrix_algebra(*q, 2);
  EXPECT_EQ(homology(*m, 0).dim(), homology(*q, 0).dim());
  EXPECT_EQ(homology(*m, 1).dim(), homology(*q, 1).dim());
  EXPECT_EQ(homology(*m, 0).dim(), 1u);
  EXPECT_EQ(homology(*m, 1).dim(), 0u);
}

TEST(Opposite, Bundled) {
  for (const char* id : {"ut2", "m2q", "dual2", "v1_2"}) {
    const OppositeReport r = verify_opposite(bundled_algebra(id));
    EXPECT_TRUE(r.ok()) << id;
  }
  const OppositeReport big = verify_opposite(matrix_algebra(*truncated_poly(2), 2));
  EXPECT_EQ(big.dim_e, 2u);
  EXPECT_TRUE(big.ok());
}
