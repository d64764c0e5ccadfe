#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <algorithm>
#include <string>

#include <CLI11.hpp>

#include "hccourant/errors.hpp"
#include "hccourant/omni.hpp"
#include "hccourant/suite.hpp"

using namespace hcc;

namespace {

struct Options {
  std::string algebra;
  std::string bracket;
  std::string submodule;
  std::string omega;
  std::string mu;
  std::string transport;
  std::string out;
  std::string format = "text";
  std::optional<std::size_t> degree;
  std::optional<std::size_t> guard;
  std::size_t r = 2;
  std::size_t dim = 2;
  std::uint64_t seed = 42;
};

/// Thrown after a report is complete to request exit code 1.
struct VerdictFalse {};

Guard make_guard(const Options& o) {
  Guard g;
  if (o.degree) g.max_degree = std::max(g.max_degree, *o.degree);
  if (o.guard) g = g.raised(*o.guard);
  return g;
}

AlgebraPtr load_algebra(const Options& o) {
  if (o.algebra.empty()) throw InputError("--algebra is required");
  return make_algebra(load_algebra_data(o.algebra));
}

Json file_json(const std::string& path) { return read_json_file(path); }

void verdict(Json& report, bool ok) {
  report["status"] = ok ? "ok" : "false";
  if (!ok) throw VerdictFalse{};
}

void cmd_validate(const Options& o, Json& rep) {
  const AlgebraData data = load_algebra_data(o.algebra);
  const StructureReport s = check_structure(data);
  rep["name"] = data.name;
  rep["dimension"] = data.basis.size();
  rep["associative"] = s.associative;
  rep["unital"] = s.unital;
  if (!s.detail.empty()) rep["detail"] = s.detail;
  if (s.valid()) rep["commutative"] = make_algebra(data)->is_commutative();
  verdict(rep, s.valid());
}

void cmd_homology(const Options& o, Json& rep) {
  const AlgebraPtr a = load_algebra(o);
  const Guard g = make_guard(o);
  const std::size_t top = o.degree.value_or(2);
  rep["algebra"] = a->name();
  rep["groups"] = Json::array();
  for (std::size_t n = 0; n <= top; ++n) rep["groups"].push_back(presentation_json(*a, homology(*a, n, g)));
}

void cmd_cohomology(const Options& o, Json& rep) {
  const AlgebraPtr a = load_algebra(o);
  const HomologyPresentation h = cohomology_h1(*a);
  rep["algebra"] = a->name();
  rep["dim_center"] = center(*a).rows();
  rep["dim_derivations"] = h.cycle_basis().rows();
  rep["dim_inner"] = h.boundary_basis().rows();
  rep["dim_H1"] = h.dim();
  Json reps = Json::array();
  for (std::size_t k = 0; k < h.dim(); ++k) reps.push_back(matrix_json(cochain_from_vector(a->dim(), h.representative(k))));
  rep["representatives"] = reps;
}

Json espace_json(const ESpace& e) {
  const LowDegree& ld = e.presentations();
  Json j = {{"dim_H1_cohomology", e.h1_dim()}, {"dim_H1_homology", e.h_1_dim()}, {"dim_H0", e.h0_dim()}, {"dim_E", e.dim()}};
  Json xs = Json::array();
  for (std::size_t k = 0; k < e.h1_dim(); ++k) xs.push_back(matrix_json(ld.derivation_rep(unit_vector(e.h1_dim(), k))));
  j["X_representatives"] = xs;
  j["alpha_presentation"] = presentation_json(e.algebra(), ld.h1);
  j["H0_presentation"] = presentation_json(e.algebra(), ld.h0);
  return j;
}

Json tables_json(const StructureTables& t) {
  Json br = Json::array(), fm = Json::array();
  for (std::size_t p = 0; p < t.dim; ++p)
    for (std::size_t q = 0; q < t.dim; ++q) {
      if (!is_zero(t.bracket[p * t.dim + q])) br.push_back(Json::array({p, q, vector_json(t.bracket[p * t.dim + q])}));
      if (!is_zero(t.form[p * t.dim + q])) fm.push_back(Json::array({p, q, vector_json(t.form[p * t.dim + q])}));
    }
  return {{"bracket", br}, {"form", fm}};
}

void cmd_courant(const Options& o, Json& rep) {
  const ESpacePtr e = make_espace(load_algebra(o), make_guard(o));
  rep["espace"] = espace_json(*e);
  rep["tables"] = tables_json(e->tables());
  auto rng = case_rng(o.seed, "courant");
  const TallyReport ax = courant_axioms(*e, rng, 100);
  rep["axioms"] = tally_json(ax);
  verdict(rep, ax.ok());
}

void cmd_kernel(const Options& o, Json& rep) {
  const ESpacePtr e = make_espace(load_algebra(o), make_guard(o));
  const KernelReport k = verify_kernel(*e);
  rep["kernel"] = kernel_json(k);
  rep["J_basis"] = matrix_json(kernel_J(*e));
  verdict(rep, k.ok());
}

void cmd_epsilon(const Options& o, Json& rep) {
  const ESpacePtr e = make_espace(load_algebra(o), make_guard(o));
  const EpsilonSpace eps(e);
  rep["dim_E"] = e->dim();
  rep["dim_J"] = eps.kernel().rows();
  rep["dim_eps"] = eps.dim();
  rep["degenerate"] = eps.dim() == 0;
  rep["representatives"] = matrix_json(eps.reps());
  rep["tables"] = tables_json(eps.tables());
  rep["has_anchor"] = eps.has_anchor();
}

void cmd_dirac(const Options& o, Json& rep) {
  const AlgebraPtr a = load_algebra(o);
  const ESpacePtr e = make_espace(a, make_guard(o));
  const EpsilonSpace eps(e);
  Submodule l;
  if (!o.bracket.empty()) {
    const BracketTable t = parse_bracket_table(file_json(o.bracket), a);
    const PoissonGraph g = poisson_graph(eps, t);
    rep["source"] = "poisson graph";
    rep["is_poisson"] = is_poisson(t);
    l = g.in_eps;
  } else if (!o.submodule.empty()) {
    l = parse_submodule(file_json(o.submodule), e->dim(), eps.dim());
    rep["source"] = "submodule";
    if (l.ambient == Ambient::E) {
      rep["pre_quotient"] = verdict_json(evaluate_submodule(e->tables(), l));
      l = project_submodule(eps, l.basis);
    }
  } else {
    throw InputError("dirac-check needs --bracket or --submodule");
  }
  const DiracVerdict v = is_dirac(eps, l);
  rep["submodule"] = submodule_json(l);
  rep["verdict"] = verdict_json(v);
  verdict(rep, v.dirac);
}

void cmd_poisson(const Options& o, Json& rep) {
  const AlgebraPtr a = load_algebra(o);
  if (o.bracket.empty()) throw InputError("poisson-graph needs --bracket");
  const ESpacePtr e = make_espace(a, make_guard(o));
  const EpsilonSpace eps(e);
  const BracketTable t = parse_bracket_table(file_json(o.bracket), a);
  const PoissonGraph g = poisson_graph(eps, t);
  const DiracVerdict v = is_dirac(eps, g.in_eps);
  rep["L_pi_in_E"] = matrix_json(g.in_e);
  rep["p_L_pi"] = submodule_json(g.in_eps);
  rep["skew"] = is_skew(t);
  rep["jacobi"] = satisfies_jacobi(t);
  rep["is_poisson"] = is_poisson(t);
  rep["verdict"] = verdict_json(v);
  rep["agrees"] = v.dirac == is_poisson(t);
  verdict(rep, v.dirac);
}

void cmd_two_form(const Options& o, Json& rep) {
  const Guard g = make_guard(o);
  const ESpacePtr e = make_espace(load_algebra(o), g);
  const EpsilonSpace eps(e);
  const TwoFormContext ctx = two_form_context(e, g);
  rep["dim_H2"] = ctx.h2.dim();
  rep["H2_presentation"] = presentation_json(e->algebra(), ctx.h2);
  if (!o.omega.empty()) {
    const QVector w = parse_omega(file_json(o.omega), ctx.h2.dim());
    const TwoFormGraph gr = two_form_graph(eps, ctx, w);
    rep["L_omega_in_E"] = matrix_json(gr.in_e);
    rep["p_L_omega"] = submodule_json(gr.in_eps);
    rep["verdict"] = verdict_json(gr.verdict);
    verdict(rep, gr.verdict.dirac);
    return;
  }
  auto rng = case_rng(o.seed, "two-form");
  const TwoFormOutcome out = two_form_outcome(eps, rng, g);
  rep["search"] = two_form_json(out);
  rep["closed_alternating_basis"] = matrix_json(closed_two_forms(ctx));
  verdict(rep, out.zero_form_dirac && (!out.search.witness || out.witness_dirac) && out.basis_dirac == out.basis_checked);
}

void cmd_morita(const Options& o, Json& rep) {
  const MoritaMaps m = build_morita(load_algebra(o), o.r, make_guard(o));
  const MoritaReport r = verify_morita(m);
  rep["report"] = morita_json(r);
  rep["T"] = matrix_json(m.t);
  rep["I"] = matrix_json(m.i);
  rep["phi"] = matrix_json(m.phi);
  rep["eps_map"] = matrix_json(m.eps_map);
  bool ok = r.ok();
  if (!o.transport.empty()) {
    const Submodule l = parse_submodule(file_json(o.transport), m.source->dim(), m.eps_source->dim());
    if (l.ambient != Ambient::Epsilon) throw InputError("--transport expects an epsilon submodule");
    const TransportResult t = transport_dirac(m, l);
    rep["source_verdict"] = verdict_json(is_dirac(*m.eps_source, l));
    rep["transported"] = submodule_json(t.image);
    rep["transported_verdict"] = verdict_json(t.verdict);
    ok = ok && t.verdict.dirac;
  }
  verdict(rep, ok);
}

void cmd_omni(const Options& o, Json& rep) {
  const Guard g = make_guard(o);
  const OmniDimReport dims = verify_omni_dims(o.dim, g);
  const OmniModel m = build_omni_model(o.dim, g);
  const OmniIsoReport iso = verify_omni_isomorphism(m);
  rep["dimensions"] = omni_dims_json(dims);
  rep["isomorphism_check"] = omni_isomorphism_json(iso);
  rep["dim_E"] = iso.dim_e;
  rep["dim_J"] = iso.dim_j;
  Json corr = Json::array();
  for (std::size_t k = 0; k < m.phi.rows(); ++k) {
    const std::size_t n = o.dim;
    const std::string label = k < n * n ? "xi " + std::to_string(k / n + 1) + "," + std::to_string(k % n + 1)
                                        : "v" + std::to_string(k - n * n + 1);
    corr.push_back({{"omni", label}, {"eps", vector_json(m.phi.row_vector(k))}});
  }
  rep["isomorphism"] = corr;
  bool ok = dims.ok() && iso.ok();
  if (!o.mu.empty()) {
    const DStructureResult d = d_structure_check(m, parse_mu(file_json(o.mu), o.dim));
    rep["d_structure"] = {{"graph", submodule_json(d.graph)}, {"verdict", verdict_json(d.verdict)}, {"lie", d.lie}, {"agrees", d.agrees()}};
    ok = ok && d.verdict.dirac && d.agrees();
  }
  verdict(rep, ok);
}

void cmd_suite(const Options& o, Json& rep) {
  SuiteOptions so;
  so.seed = o.seed;
  rep = run_suite(so);
  if (rep["status"] != "pass") throw VerdictFalse{};
}

void emit(const Options& o, const Json& rep) {
  const std::string text = o.format == "json" ? render_json(rep) : render_text(rep);
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    f << text;
    if (!f) std::cerr << "hccourant: cannot write " << o.out << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Courant brackets on finite-dimensional algebras"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* s) {
    s->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    s->add_option("--out", o.out, "write the report to a file");
    s->add_option("--seed", o.seed, "seed for randomized checks");
    s->add_option("--guard", o.guard, "raise every dimension guard to at least N");
    s->add_option("--degree", o.degree, "homology degree (raises the degree guard)");
    return s;
  };
  using Handler = void (*)(const Options&, Json&);
  std::vector<std::pair<CLI::App*, Handler>> subs;
  auto sub = [&](const char* name, const char* help, Handler h) {
    CLI::App* s = common(app.add_subcommand(name, help));
    subs.emplace_back(s, h);
    return s;
  };

  auto* validate = sub("validate", "check associativity and unit laws", cmd_validate);
  validate->add_option("file", o.algebra, "algebra file");
  validate->add_option("--algebra", o.algebra, "algebra file");
  sub("homology", "Hochschild homology H_0..H_n", cmd_homology)->add_option("--algebra", o.algebra)->required();
  sub("cohomology", "center, derivations and H^1", cmd_cohomology)->add_option("--algebra", o.algebra)->required();
  sub("courant", "E(A) with bracket and form tables", cmd_courant)->add_option("--algebra", o.algebra)->required();
  sub("kernel", "kernel J of the form", cmd_kernel)->add_option("--algebra", o.algebra)->required();
  sub("epsilon", "the quotient eps(A)", cmd_epsilon)->add_option("--algebra", o.algebra)->required();
  auto* dirac = sub("dirac-check", "Dirac verdict for a submodule or Poisson graph", cmd_dirac);
  dirac->add_option("--algebra", o.algebra)->required();
  dirac->add_option("--bracket", o.bracket, "bracket table file");
  dirac->add_option("--submodule", o.submodule, "submodule file");
  auto* poisson = sub("poisson-graph", "graph of a biderivation", cmd_poisson);
  poisson->add_option("--algebra", o.algebra)->required();
  poisson->add_option("--bracket", o.bracket, "bracket table file")->required();
  auto* two = sub("two-form", "graphs of closed 2-forms", cmd_two_form);
  two->add_option("--algebra", o.algebra)->required();
  two->add_option("--omega", o.omega, "omega file in H_2 class coordinates");
  auto* morita = sub("morita", "E(A) against E(M_r(A))", cmd_morita);
  morita->add_option("--algebra", o.algebra)->required();
  morita->add_option("--r", o.r, "matrix size");
  morita->add_option("--transport", o.transport, "epsilon submodule to transport");
  auto* omni = sub("omni", "eps(V[1]) against gl(V) + V", cmd_omni);
  omni->add_option("--dim", o.dim, "dim V");
  omni->add_option("--mu", o.mu, "mu table file");
  sub("suite", "all verification families", cmd_suite);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (app.exit(e) == 0) return 0;
    std::string command;
    for (auto& [s, handler] : subs)
      if (s->parsed()) command = s->get_name();
    emit(o, {{"schema", "hccourant/1"}, {"command", command}, {"seed", o.seed}, {"status", "error"}, {"error", e.what()}});
    return 2;
  }

  for (auto& [s, handler] : subs) {
    if (!s->parsed()) continue;
    Json rep = {{"schema", "hccourant/1"}, {"command", s->get_name()}, {"seed", o.seed}};
    int code = 0;
    try {
      handler(o, rep);
      if (!rep.contains("status")) rep["status"] = "ok";
    } catch (const VerdictFalse&) {
      code = 1;
    } catch (const InvariantError& e) {
      rep["status"] = "invariant_failure";
      rep["error"] = e.what();
      code = 1;
    } catch (const GuardError& e) {
      rep["status"] = "error";
      rep["error"] = e.what();
      code = 2;
    } catch (const InputError& e) {
      rep["status"] = "error";
      rep["error"] = e.what();
      code = 2;
    }
    if (code == 2) std::cerr << "hccourant: " << rep["error"].get<std::string>() << "\n";
    emit(o, rep);
    return code;
  }
  return 2;
}
