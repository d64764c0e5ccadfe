#include <random>

#include <gtest/gtest.h>

#include "hccourant/dirac.hpp"
#include "hccourant/errors.hpp"
#include "hccourant/exactlin.hpp"
#include "hccourant/omni.hpp"
#include "hccourant/verify.hpp"
#include "helpers.hpp"

using namespace hcc;
using testing_helpers::qv;

namespace {

struct Eps {
  ESpacePtr e;
  EpsilonSpace eps;
  explicit Eps(AlgebraPtr a) : e(make_espace(std::move(a))), eps(e) {}

  Submodule gl() const { return project_submodule(eps, h1_summand(*e)); }
  Submodule v() const { return project_submodule(eps, h_1_summand(*e)); }
  const StructureTables& t() const { return eps.tables(); }
};

BracketTable mu_table(const MuTable& mu) { return mu_to_table(build_v1(mu.n), mu); }

}  // namespace

TEST(Isotropic, Cases) {
  const Eps s(build_v1(2));
  EXPECT_TRUE(is_isotropic(s.t(), QMatrix(0, 6)));
  EXPECT_FALSE(is_isotropic(s.t(), QMatrix::identity(6)));
  EXPECT_TRUE(is_isotropic(s.t(), s.v().basis));
  EXPECT_TRUE(is_isotropic(s.t(), s.gl().basis));
}

TEST(Maximal, Cases) {
  const Eps s(build_v1(2));
  EXPECT_TRUE(is_maximally_isotropic(s.t(), s.gl().basis));
  EXPECT_TRUE(is_maximally_isotropic(s.t(), s.v().basis));

  const Eps d(truncated_poly(2));
  const Submodule line = d.gl();
  ASSERT_EQ(line.dim(), 1u);
  EXPECT_TRUE(is_maximally_isotropic(d.t(), line.basis));
  // a line inside the 2-dim maximal isotropic V summand of eps(V[1]), n = 2
  const QMatrix one_line = QMatrix::from_rows({s.v().basis.row_vector(0)}, 6);
  EXPECT_TRUE(is_isotropic(s.t(), one_line));
  EXPECT_FALSE(is_maximally_isotropic(s.t(), one_line));
  EXPECT_GT(orthogonal(s.t(), one_line).rows(), 1u);
}

TEST(Closed, Cases) {
  const Eps s(build_v1(3));
  EXPECT_TRUE(is_bracket_closed(s.t(), QMatrix(0, 12)));
  EXPECT_TRUE(is_bracket_closed(s.t(), s.gl().basis));
  const PoissonGraph g = poisson_graph(s.eps, mu_table(non_jacobi_mu()));
  const auto cx = closure_failure(s.t(), g.in_eps.basis);
  ASSERT_TRUE(cx.has_value());
  EXPECT_FALSE(in_rowspan(cx->value, g.in_eps.basis));
}

TEST(Dirac, Summands) {
  const Eps s(build_v1(2));
  EXPECT_TRUE(is_dirac(s.eps, s.gl()).dirac);
  EXPECT_TRUE(is_dirac(s.eps, s.v()).dirac);
  EXPECT_TRUE(is_dirac(s.eps, s.gl()).z_stable);
}

TEST(Dirac, DegenerateRejected) {
  const Eps q(rationals());
  EXPECT_THROW(is_dirac(q.eps, make_submodule(Ambient::Epsilon, QMatrix(0, 0))), InputError);
}

TEST(Dirac, So3Graph) {
  const Eps s(build_v1(3));
  const DiracVerdict v = is_dirac(s.eps, poisson_graph(s.eps, mu_table(so3_mu())).in_eps);
  EXPECT_TRUE(v.dirac);
  EXPECT_FALSE(v.counterexample.has_value());
}

TEST(PoissonGraph, ZeroTableGivesH1Summand) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const Eps s(build_v1(n));
    EXPECT_EQ(poisson_graph(s.eps, zero_table(s.e->algebra_ptr())).in_eps.basis, s.v().basis) << n;
  }
}

TEST(PoissonGraph, So3MatchesOmniGraph) {
  const Eps s(build_v1(3));
  const Submodule lp = poisson_graph(s.eps, mu_table(so3_mu())).in_eps;
  const DStructureResult d = d_structure_check(build_omni_model(3), so3_mu());
  EXPECT_EQ(lp.basis, d.graph.basis);
}

TEST(PoissonGraph, DualNumbers) {
  const Eps s(truncated_poly(2));
  EXPECT_EQ(biderivation_space(s.e->algebra()).rows(), 1u);
  const PoissonGraph g = poisson_graph(s.eps, zero_table(s.e->algebra_ptr()));
  const AlgebraPtr a = s.e->algebra_ptr();
  const QVector one_x = s.e->presentations().h1.reduce(tensor_chain(*a, {a->unit(), qv({"0", "1"})}).coords);
  const QVector row = s.e->flatten(EElement{zeros(1), one_x});
  EXPECT_TRUE(same_rowspan(g.in_e, QMatrix::from_rows({row}, 2)));
}

TEST(PoissonGraph, Preconditions) {
  const Eps u(matrix_algebra(*truncated_poly(2), 2));
  EXPECT_THROW(poisson_graph(u.eps, zero_table(u.e->algebra_ptr())), InputError);
  const Eps s(build_v1(2));
  BracketTable bad = zero_table(s.e->algebra_ptr());
  bad.entries[0 * 3 + 1] = qv({"1", "0", "0"});  // {1, v1} = 1
  EXPECT_FALSE(is_biderivation(bad));
  EXPECT_THROW(poisson_graph(s.eps, bad), InputError);
}

TEST(Poisson, Oracle) {
  const AlgebraPtr v3 = build_v1(3);
  EXPECT_TRUE(is_poisson(zero_table(v3)));
  EXPECT_TRUE(is_poisson(mu_table(so3_mu())));
  EXPECT_FALSE(is_poisson(mu_table(non_jacobi_mu())));
  EXPECT_TRUE(is_skew(mu_table(non_jacobi_mu())));
}

// {v1,v2} = v3, {v2,v3} = v1, {v3,v1} = 0: every term of the Jacobi sum on
// (v1,v2,v3) is a bracket of a vector with itself or with 0, so it is Lie.
TEST(Poisson, CyclicPairTableIsLie) {
  const BracketTable t = mu_table(cyclic_pair_mu());
  EXPECT_EQ(t.at(1, 2), qv({"0", "0", "0", "1"}));
  EXPECT_EQ(t.at(2, 3), qv({"0", "1", "0", "0"}));
  EXPECT_TRUE(is_zero(t.at(3, 1)));
  EXPECT_TRUE(satisfies_jacobi(t));
  const Eps s(build_v1(3));
  EXPECT_TRUE(is_dirac(s.eps, poisson_graph(s.eps, t).in_eps).dirac);
}

TEST(TwoForm, ZeroFormIsH1Summand) {
  for (const char* id : {"dual2", "trunc3", "v1_1", "v1_2", "v1_3"}) {
    const Eps s(bundled_algebra(id));
    const TwoFormContext ctx = two_form_context(s.e);
    const TwoFormGraph g = two_form_graph(s.eps, ctx, zeros(ctx.h2.dim()));
    EXPECT_EQ(g.in_eps.basis, s.gl().basis) << id;
    EXPECT_TRUE(g.verdict.dirac) << id;
  }
}

TEST(TwoForm, RejectsInvalidOmega) {
  const Eps s(build_v1(2));
  const TwoFormContext ctx = two_form_context(s.e);
  const QMatrix closed = closed_two_forms(ctx);
  std::size_t rejected = 0;
  for (std::size_t k = 0; k < ctx.h2.dim(); ++k) {
    const QVector w = unit_vector(ctx.h2.dim(), k);
    if (check_two_form(ctx, w).ok()) continue;
    EXPECT_FALSE(in_rowspan(w, closed));
    EXPECT_THROW(two_form_graph(s.eps, ctx, w), InputError);
    ++rejected;
  }
  EXPECT_GT(rejected, 0u);
}

TEST(TwoForm, SearchWitnessIsDirac) {
  const Eps s(build_v1(3));
  const TwoFormContext ctx = two_form_context(s.e);
  std::mt19937_64 rng(5);
  const TwoFormSearch r = search_two_forms(ctx, rng);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_TRUE(check_two_form(ctx, *r.witness).ok());
  EXPECT_TRUE(two_form_graph(s.eps, ctx, *r.witness).verdict.dirac);
}

TEST(Algebroid, So3) {
  const Eps s(build_v1(3));
  std::mt19937_64 rng(9);
  EXPECT_TRUE(lie_algebroid_check(s.eps, poisson_graph(s.eps, mu_table(so3_mu())).in_eps, rng).ok());
}
