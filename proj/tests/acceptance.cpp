// One PASS/FAIL line per acceptance criterion. Checks are exact; the only
// tolerances are the wall-clock limits below.
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hccourant/errors.hpp"
#include "hccourant/omni.hpp"
#include "hccourant/suite.hpp"

using namespace hcc;

namespace {

constexpr std::uint64_t kSeed = 42;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<Outcome()> run;
};

std::string cli_path;

bool has_eps(const AlgebraPtr& a) { return EpsilonSpace(make_espace(a)).dim() > 0; }

Outcome boundary() {
  Outcome o;
  for (const auto& [id, a] : bundled_algebras()) {
    const TallyReport r = boundary_squares(*a, 3);
    o.require(r.ok(), id + ": " + r.tallies.front().first_failure);
  }
  return o;
}

Outcome identities() {
  Outcome o;
  for (const auto& [id, a] : bundled_algebras()) {
    auto rng = case_rng(kSeed, "acceptance-identities-" + id);
    const TallyReport r = operator_identities(a, rng, 50);
    for (const Tally& t : r.tallies) {
      if (!t.asserted) continue;
      o.require(t.failures == 0, id + " " + t.name + " " + std::to_string(t.failures) + "/" + std::to_string(t.cases));
    }
  }
  return o;
}

Outcome axioms() {
  Outcome o;
  for (const auto& [id, a] : bundled_algebras()) {
    const ESpacePtr e = make_espace(a);
    if (e->dim() == 0) continue;
    auto rng = case_rng(kSeed, "acceptance-axioms-" + id);
    const TallyReport r = courant_axioms(*e, rng, 100);
    for (const Tally& t : r.tallies) o.require(t.ok(), id + " " + t.name + ": " + t.first_failure);
  }
  return o;
}

Outcome kernel() {
  Outcome o;
  for (const auto& [id, a] : bundled_algebras()) {
    if (!has_eps(a)) continue;
    const KernelReport r = verify_kernel(*make_espace(a));
    o.require(r.left_ideal && r.right_ideal, id + " J not an ideal");
    o.require(r.nondegenerate, id + " induced form degenerate");
  }
  return o;
}

Outcome dimensions() {
  Outcome o;
  for (std::size_t n = 1; n <= 3; ++n) {
    const OmniDimReport r = verify_omni_dims(n);
    const std::size_t c2 = n * (n - 1) / 2;
    o.require(r.h1 == n * n && r.h_1 == n + c2 && r.e == n * n + n + c2, "E dims at n=" + std::to_string(n));
    o.require(kernel_J(*make_espace(build_v1(n))).rows() == c2, "dim J at n=" + std::to_string(n));
  }
  return o;
}

Outcome main_theorem() {
  Outcome o;
  for (std::size_t n = 2; n <= 3; ++n) {
    const OmniIsoReport r = verify_omni_isomorphism(build_omni_model(n));
    o.require(r.bijective && r.bracket_matches && r.form_matches && r.form_scalar == 2,
              "n=" + std::to_string(n) + (r.failures.empty() ? "" : ": " + r.failures.front()));
  }
  return o;
}

Outcome poisson() {
  Outcome o;
  for (const char* id : {"v1_2", "v1_3", "trunc3"}) {
    const AlgebraPtr a = bundled_algebra(id);
    auto rng = case_rng(kSeed, std::string("acceptance-poisson-") + id);
    const std::vector<NamedTable> corpus = poisson_corpus(a, rng, 200);
    const PoissonSweep s = poisson_sweep(EpsilonSpace(make_espace(a)), corpus);
    o.require(s.tables >= 200, std::string(id) + " corpus too small");
    o.require(s.disagreements == 0, std::string(id) + " " + std::to_string(s.disagreements) + " disagreements");
    auto contains = [&](const BracketTable& w) {
      for (const NamedTable& t : corpus)
        if (t.table.entries == w.entries) return true;
      return false;
    };
    o.require(contains(zero_table(a)), std::string(id) + " lacks the zero table");
    if (a->dim() == 4)
      o.require(contains(mu_to_table(a, so3_mu())) && contains(mu_to_table(a, non_jacobi_mu())),
                std::string(id) + " lacks structured witnesses");
  }
  return o;
}

Outcome morita() {
  Outcome o;
  for (const char* id : {"dual2", "v1_2"}) {
    const MoritaMaps m = build_morita(bundled_algebra(id), 2);
    const MoritaReport r = verify_morita(m);
    o.require(r.eps_bijective && r.eps_bracket_preserved && r.eps_form_preserved && r.phi_bijective,
              std::string(id) + (r.failures.empty() ? "" : ": " + r.failures.front()));
    const Submodule l = project_submodule(*m.eps_source, h1_summand(*m.source));
    o.require(is_dirac(*m.eps_source, l).dirac && transport_dirac(m, l).verdict.dirac,
              std::string(id) + " transported structure not Dirac");
  }
  return o;
}

Outcome matrix_rationals() {
  Outcome o;
  const AlgebraPtr q = rationals();
  const AlgebraPtr m2 = matrix_algebra(*q, 2);
  const std::size_t h0 = homology(*m2, 0).dim(), h1 = homology(*m2, 1).dim();
  o.require(h0 == 1 && h1 == 0, "direct ranks of M2(Q)");
  o.require(homology(*q, 0).dim() == h0 && homology(*q, 1).dim() == h1, "disagrees with Q");
  const MoritaReport r = verify_morita(build_morita(q, 2));
  o.require(r.phi_bijective && r.i_bijective, "inc not bijective on H_0/H_1");
  return o;
}

Outcome two_forms() {
  Outcome o;
  std::ostringstream found;
  for (const auto& [id, a] : bundled_algebras()) {
    const EpsilonSpace eps(make_espace(a));
    if (eps.dim() == 0) continue;
    auto rng = case_rng(kSeed, "acceptance-two-form-" + id);
    const TwoFormOutcome t = two_form_outcome(eps, rng);
    o.require(t.zero_form_dirac, id + " omega=0 not Dirac");
    if (t.search.witness) o.require(t.witness_dirac, id + " witness not Dirac");
    found << " " << id << "=" << (t.search.witness ? "witness" : "none found");
  }
  if (o.pass) o.detail = "search:" + found.str();
  return o;
}

std::string capture(const std::string& cmd, int& code) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) {
    code = -1;
    return out;
  }
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  const int status = pclose(p);
  code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

Outcome reproducible() {
  Outcome o;
  if (cli_path.empty()) {
    o.require(false, "no --cli given");
    return o;
  }
  const std::string cmd = cli_path + " suite --seed 42 --format json";
  int c1 = 0, c2 = 0;
  const std::string a = capture(cmd, c1), b = capture(cmd, c2);
  o.require(c1 == 0 || c1 == 1, "suite exit code " + std::to_string(c1));
  o.require(!a.empty() && a == b, "reports differ");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "run a single criterion");
  app.add_option("--cli", cli_path, "path to the hccourant binary");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> all = {
      {1, "b o b = 0, degrees 1-3", 10, boundary},
      {2, "Cartan, homotopy and L_X = B i_X + i_X B identities", 60, identities},
      {3, "Courant axioms on bases and random triples", 60, axioms},
      {4, "kernel ideal and nondegenerate quotient form", 60, kernel},
      {5, "V[1] dimension counts", 60, dimensions},
      {6, "eps(V[1]) = gl(V) + V", 60, main_theorem},
      {7, "Poisson iff Dirac", 300, poisson},
      {8, "Morita invariance and transport", 600, morita},
      {9, "H_0, H_1 of M2(Q) against Q", 60, matrix_rationals},
      {10, "closed 2-form graphs", 60, two_forms},
      {11, "suite reproducibility", 60, reproducible},
  };

  bool ok = true;
  for (const Criterion& c : all) {
    if (only != 0 && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.require(secs < c.limit_s, "over time limit");
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs/%.0fs", secs, c.limit_s);
    std::cout << "criterion " << c.id << ": " << (out.pass ? "PASS" : "FAIL") << "  " << c.name << "  [" << timing << "]";
    if (!out.detail.empty()) std::cout << "  " << out.detail;
    std::cout << "\n";
    ok = ok && out.pass;
  }
  return ok ? 0 : 1;
}
