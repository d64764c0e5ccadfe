#include "hccourant/suite.hpp"

namespace hcc {

std::mt19937_64 case_rng(std::uint64_t seed, const std::string& case_id) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : case_id) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
  return std::mt19937_64(seq);
}

namespace {

bool all_ok(const Json& j) {
  if (j.is_object()) {
    if (auto it = j.find("ok"); it != j.end() && it->is_boolean() && !it->get<bool>()) return false;
    for (const auto& v : j) if (!all_ok(v)) return false;
  } else if (j.is_array()) {
    for (const auto& v : j) if (!all_ok(v)) return false;
  }
  return true;
}

Json algebra_case(const std::string& id, const AlgebraPtr& a, const SuiteOptions& o) {
  Json c = {{"id", id}, {"name", a->name()}, {"dim", a->dim()}, {"commutative", a->is_commutative()}};
  const ESpacePtr e = make_espace(a);
  const EpsilonSpace eps(e);
  const LowDegree& ld = e->presentations();
  c["dims"] = {{"Z", ld.center.rows()},
               {"H0", ld.h0.dim()},
               {"H1", ld.h1.dim()},
               {"H2", homology(*a, 2).dim()},
               {"Der", ld.coh1.cycle_basis().rows()},
               {"H1_cohomology", ld.coh1.dim()},
               {"E", e->dim()},
               {"J", eps.kernel().rows()},
               {"eps", eps.dim()}};

  const TallyReport bb = boundary_squares(*a, 3);
  c["b_squared"] = {{"tallies", tally_json(bb)}, {"ok", bb.ok()}};

  auto rng = case_rng(o.seed, id + "/identities");
  const TallyReport ids = operator_identities(a, rng, o.identity_draws);
  c["identities"] = {{"draws", o.identity_draws}, {"tallies", tally_json(ids)}, {"ok", ids.ok()}};

  if (e->dim() > 0) {
    rng = case_rng(o.seed, id + "/axioms");
    const TallyReport ax = courant_axioms(*e, rng, o.axiom_draws);
    c["axioms"] = {{"draws", o.axiom_draws}, {"tallies", tally_json(ax)}, {"ok", ax.ok()}};
    const KernelReport kr = verify_kernel(*e);
    c["kernel"] = kernel_json(kr);
    c["kernel"]["ok"] = kr.ok();
  }
  if (eps.dim() == 0) {
    c["epsilon"] = "degenerate: eps(A) = 0";
    return c;
  }
  const Submodule h1 = project_submodule(eps, h1_summand(*e));
  const DiracVerdict hv = is_dirac(eps, h1);
  rng = case_rng(o.seed, id + "/algebroid");
  const AlgebroidReport ar = lie_algebroid_check(eps, h1, rng);
  c["h1_summand"] = {{"verdict", verdict_json(hv)},
                     {"algebroid_checks", ar.checks},
                     {"algebroid_failures", ar.failures.size()},
                     {"ok", hv.dirac && ar.ok()}};
  rng = case_rng(o.seed, id + "/two_forms");
  const TwoFormOutcome tf = two_form_outcome(eps, rng);
  c["two_forms"] = two_form_json(tf);
  c["two_forms"]["ok"] = tf.zero_form_dirac && (!tf.search.witness || tf.witness_dirac) && tf.basis_dirac == tf.basis_checked;
  if (a->is_commutative()) {
    rng = case_rng(o.seed, id + "/poisson");
    const PoissonSweep s = poisson_sweep(eps, poisson_corpus(a, rng, o.poisson_tables));
    c["poisson"] = poisson_sweep_json(s);
    c["poisson"]["seed"] = o.seed;
    c["poisson"]["ok"] = s.disagreements == 0 && s.skew_not_isotropic == 0 && s.preimage_mismatch == 0;
  }
  return c;
}

Json omni_case(std::size_t n, const SuiteOptions& o) {
  Json c = {{"n", n}};
  const OmniDimReport dims = verify_omni_dims(n);
  c["dimensions"] = omni_dims_json(dims);
  const OmniModel m = build_omni_model(n);
  const OmniIsoReport iso = verify_omni_isomorphism(m);
  c["isomorphism_check"] = omni_isomorphism_json(iso);
  c["isomorphism_check"]["ok"] = iso.ok();
  if (n >= 2) {
    auto rng = case_rng(o.seed, "omni/" + std::to_string(n));
    std::size_t tables = 0, lie = 0, disagree = 0;
    for (const auto& [name, mu] : mu_corpus(n, rng, o.mu_tables)) {
      const DStructureResult r = d_structure_check(m, mu);
      ++tables;
      if (r.lie) ++lie;
      if (!r.agrees()) ++disagree;
    }
    c["d_structures"] = {{"tables", tables}, {"lie", lie}, {"disagreements", disagree}, {"ok", disagree == 0}};
  }
  return c;
}

Json morita_case(const std::string& id, const SuiteOptions&) {
  const MoritaMaps m = build_morita(bundled_algebra(id), 2);
  const MoritaReport r = verify_morita(m);
  Json c = {{"id", id}, {"report", morita_json(r)}};
  bool ok = r.ok();
  if (m.eps_source->dim() > 0) {
    const TransportResult t = transport_dirac(m, project_submodule(*m.eps_source, h1_summand(*m.source)));
    c["transport_h1_summand"] = verdict_json(t.verdict);
    ok = ok && t.verdict.dirac;
    if (m.source->algebra().is_commutative()) {
      const PoissonGraph g = poisson_graph(*m.eps_source, zero_table(m.source->algebra_ptr()));
      const TransportResult z = transport_dirac(m, g.in_eps);
      c["transport_zero_bracket_graph"] = verdict_json(z.verdict);
      ok = ok && z.verdict.dirac;
    }
  }
  c["ok"] = ok;
  return c;
}

}  // namespace

Json run_suite(const SuiteOptions& o) {
  Json report = {{"schema", "hccourant/1"}, {"command", "suite"}, {"seed", o.seed}};
  auto algebras = bundled_algebras();
  std::sort(algebras.begin(), algebras.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  report["algebras"] = Json::array();
  for (const auto& [id, a] : algebras) report["algebras"].push_back(algebra_case(id, a, o));
  report["omni"] = Json::array();
  for (std::size_t n = 1; n <= 3; ++n) report["omni"].push_back(omni_case(n, o));
  report["morita"] = Json::array();
  for (const char* id : {"dual2", "q", "v1_2"}) report["morita"].push_back(morita_case(id, o));
  const AlgebraPtr m2q = matrix_algebra(*rationals(), 2);
  const std::size_t h0 = homology(*m2q, 0).dim(), h1 = homology(*m2q, 1).dim();
  report["matrix_rationals"] = {{"H0", h0}, {"H1", h1}, {"ok", h0 == 1 && h1 == 0}};
  report["opposite"] = Json::array();
  std::vector<std::pair<std::string, AlgebraPtr>> opposite_cases;
  for (const char* id : {"m2q", "ut2", "dual2", "v1_2"}) opposite_cases.emplace_back(id, bundled_algebra(id));
  opposite_cases.emplace_back("m2_dual2", matrix_algebra(*truncated_poly(2), 2));
  for (const auto& [id, a] : opposite_cases) {
    const OppositeReport r = verify_opposite(a);
    report["opposite"].push_back({{"id", id}, {"dim_E", r.dim_e}, {"ok", r.ok()}});
  }
  report["status"] = all_ok(report) ? "pass" : "fail";
  return report;
}

}  // namespace hcc
