#include <random>

#include <gtest/gtest.h>

#include "hccourant/verify.hpp"
#include "helpers.hpp"

using namespace hcc;
using testing_helpers::qv;

TEST(Verify, BoundarySquares) {
  for (const auto& [id, a] : bundled_algebras()) EXPECT_TRUE(boundary_squares(*a, 3).ok()) << id;
}

TEST(Verify, OperatorIdentities) {
  for (const auto& [id, a] : bundled_algebras()) {
    std::mt19937_64 rng(1);
    const TallyReport r = operator_identities(a, rng, 10);
    for (const char* name : {"cartan_lie", "cartan_interior", "homotopy_sign_minus_one", "lie_equals_Bi_plus_iB_H1"}) {
      const Tally* t = r.find(name);
      ASSERT_NE(t, nullptr) << name;
      if (std::string(name) != "lie_equals_Bi_plus_iB_H1") EXPECT_GT(t->cases, 0u);
      EXPECT_EQ(t->failures, 0u) << id << " " << name << ": " << t->first_failure;
    }
    if (a->is_commutative()) EXPECT_EQ(r.find("homotopy_stated_sign")->failures, 0u) << id;
  }
}

// (h b - b h)(a0 (x) a1) = a1 a' a0 - a' a1 a0 = -[a', a1] a0 = -i_{[a',.]}(a0 (x) a1)
TEST(Verify, HomotopySignAtDegreeOne) {
  const AlgebraPtr m = matrix_algebra(*rationals(), 2);
  const QVector ap = qv({"0", "1", "0", "0"});
  const Chain c = tensor_chain(*m, {qv({"1", "0", "0", "0"}), qv({"0", "0", "1", "0"})});
  const Chain lhs = left_multiply_chain(*m, ap, boundary_b(*m, c)) - boundary_b(*m, left_multiply_chain(*m, ap, c));
  const Chain i = apply_interior(*m, inner_derivation(*m, ap), c);
  EXPECT_FALSE(is_zero(i.coords));
  EXPECT_EQ(lhs, Rational(-1) * i);
}

TEST(Verify, CourantAxiomsRandom) {
  for (const char* id : {"dual2", "v1_2", "trunc3"}) {
    std::mt19937_64 rng(3);
    EXPECT_TRUE(courant_axioms(*make_espace(bundled_algebra(id)), rng, 20).ok()) << id;
  }
}

TEST(Verify, PoissonSweepAgrees) {
  std::mt19937_64 rng(8);
  const AlgebraPtr a = build_v1(2);
  const EpsilonSpace eps(make_espace(a));
  const PoissonSweep s = poisson_sweep(eps, poisson_corpus(a, rng, 40));
  EXPECT_GT(s.tables, 40u);
  EXPECT_GT(s.poisson, 0u);
  EXPECT_LT(s.poisson, s.tables);
  EXPECT_EQ(s.disagreements, 0u);
  EXPECT_EQ(s.skew_not_isotropic, 0u);
  EXPECT_EQ(s.preimage_mismatch, 0u);
}

TEST(Verify, CorpusIsSeeded) {
  std::mt19937_64 r1(6), r2(6);
  const auto c1 = mu_corpus(3, r1, 10), c2 = mu_corpus(3, r2, 10);
  ASSERT_EQ(c1.size(), c2.size());
  for (std::size_t k = 0; k < c1.size(); ++k) EXPECT_EQ(c1[k].second.entries, c2[k].second.entries);
}
