#include "hccourant/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hccourant/errors.hpp"

namespace hcc {

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError(path + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
  }
}

AlgebraData load_algebra_data(const std::string& path) {
  if (std::filesystem::exists(path)) {
    const Json j = read_json_file(path);
    try {
      return parse_algebra(j);
    } catch (const InputError& e) {
      throw InputError(path + ": " + e.what());
    }
  }
  std::string id = std::filesystem::path(path).filename().string();
  if (id.size() > 5 && id.ends_with(".json")) id.resize(id.size() - 5);
  for (const auto& [name, a] : bundled_algebras())
    if (name == id) return a->data();
  throw InputError("cannot open " + path + " (not a file or bundled algebra id)");
}

Json rational_json(const Rational& r) { return format_rational(r); }

Json vector_json(std::span<const Rational> v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(format_rational(x));
  return out;
}

Json matrix_json(const QMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_json(m.row(i)));
  return out;
}

Json chain_json(std::size_t d, const Chain& c) {
  Json out = Json::array();
  for (std::size_t idx = 0; idx < c.coords.size(); ++idx) {
    if (sgn(c.coords[idx]) == 0) continue;
    out.push_back(Json::array({tensor_digits(d, c.degree, idx), format_rational(c.coords[idx])}));
  }
  return out;
}

Json element_json(const EElement& e) { return {{"X", vector_json(e.x)}, {"alpha", vector_json(e.alpha)}}; }

Rational parse_rational_field(const Json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw InputError(where + ": expected a rational string \"p/q\"");
}

QVector parse_vector(const Json& j, std::size_t expected, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array");
  if (j.size() != expected)
    throw InputError(where + ": expected " + std::to_string(expected) + " entries, found " + std::to_string(j.size()));
  QVector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(parse_rational_field(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(where + ": missing field \"" + key + "\"");
  return *it;
}

std::size_t index_field(const Json& j, std::size_t bound, const std::string& where) {
  if (!j.is_number_integer() || j.get<long>() < 0 || static_cast<std::size_t>(j.get<long>()) >= bound)
    throw InputError(where + ": index must be an integer in [0, " + std::to_string(bound) + ")");
  return static_cast<std::size_t>(j.get<long>());
}

/// [[i, j, [...]], ...] into a dense n x n grid of length-len vectors.
std::vector<QVector> parse_triples(const Json& j, std::size_t n, std::size_t len, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array of [i, j, vector] triples");
  std::vector<QVector> out(n * n, QVector(len));
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string at = where + "[" + std::to_string(k) + "]";
    const Json& t = j[k];
    if (!t.is_array() || t.size() != 3) throw InputError(at + ": expected [i, j, vector]");
    const std::size_t p = index_field(t[0], n, at + "[0]");
    const std::size_t q = index_field(t[1], n, at + "[1]");
    out[p * n + q] = add(out[p * n + q], parse_vector(t[2], len, at + "[2]"));
  }
  return out;
}

Json triples_json(const std::vector<QVector>& grid, std::size_t n) {
  Json out = Json::array();
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      if (!is_zero(grid[p * n + q])) out.push_back(Json::array({p, q, vector_json(grid[p * n + q])}));
  return out;
}

}  // namespace

AlgebraData parse_algebra(const Json& j) {
  AlgebraData data;
  const Json& name = field(j, "name", "algebra");
  if (!name.is_string()) throw InputError("algebra.name: expected a string");
  data.name = name.get<std::string>();
  const Json& dim = field(j, "dimension", "algebra");
  if (!dim.is_number_integer() || dim.get<long>() < 1) throw InputError("algebra.dimension: expected a positive integer");
  const auto d = static_cast<std::size_t>(dim.get<long>());
  const Json& basis = field(j, "basis", "algebra");
  if (!basis.is_array() || basis.size() != d) throw InputError("algebra.basis: expected " + std::to_string(d) + " names");
  for (std::size_t i = 0; i < d; ++i) {
    if (!basis[i].is_string()) throw InputError("algebra.basis[" + std::to_string(i) + "]: expected a string");
    data.basis.push_back(basis[i].get<std::string>());
  }
  data.unit = parse_vector(field(j, "unit", "algebra"), d, "algebra.unit");
  const std::vector<QVector> grid = parse_triples(field(j, "structure", "algebra"), d, d, "algebra.structure");
  data.structure.assign(d, std::vector<QVector>(d));
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q) data.structure[p][q] = grid[p * d + q];
  return data;
}

Json algebra_json(const FiniteAlgebra& a) {
  const std::size_t d = a.dim();
  std::vector<QVector> grid;
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q) grid.push_back(a.product(p, q));
  return {{"name", a.name()},
          {"dimension", d},
          {"basis", a.basis_names()},
          {"unit", vector_json(a.unit())},
          {"structure", triples_json(grid, d)}};
}

BracketTable parse_bracket_table(const Json& j, const AlgebraPtr& a) {
  auto it = j.is_object() ? j.find("algebra") : j.end();
  if (it != j.end() && (!it->is_string() || it->get<std::string>() != a->name()))
    throw InputError("bracket.algebra: table is for \"" + (it->is_string() ? it->get<std::string>() : std::string("?")) +
                     "\", not \"" + a->name() + "\"");
  return {a, parse_triples(field(j, "entries", "bracket"), a->dim(), a->dim(), "bracket.entries")};
}

Json bracket_table_json(const BracketTable& t) {
  return {{"algebra", t.algebra->name()}, {"entries", triples_json(t.entries, t.dim())}};
}

Submodule parse_submodule(const Json& j, std::size_t dim_e, std::size_t dim_eps) {
  const Json& amb = field(j, "ambient", "submodule");
  if (!amb.is_string() || (amb != "E" && amb != "epsilon"))
    throw InputError("submodule.ambient: expected \"E\" or \"epsilon\"");
  const Ambient ambient = amb == "E" ? Ambient::E : Ambient::Epsilon;
  const std::size_t n = ambient == Ambient::E ? dim_e : dim_eps;
  const Json& vecs = field(j, "vectors", "submodule");
  if (!vecs.is_array()) throw InputError("submodule.vectors: expected an array");
  QMatrix m(0, n);
  for (std::size_t k = 0; k < vecs.size(); ++k) m.append_row(parse_vector(vecs[k], n, "submodule.vectors[" + std::to_string(k) + "]"));
  return make_submodule(ambient, m);
}

Json submodule_json(const Submodule& s) {
  return {{"ambient", ambient_name(s.ambient)}, {"dim", s.dim()}, {"vectors", matrix_json(s.basis)}};
}

QVector parse_omega(const Json& j, std::size_t h2_dim) { return parse_vector(field(j, "omega", "omega"), h2_dim, "omega.omega"); }

MuTable parse_mu(const Json& j, std::size_t n) {
  const Json& dim = field(j, "dim", "mu");
  if (!dim.is_number_integer() || dim.get<long>() != static_cast<long>(n))
    throw InputError("mu.dim: expected " + std::to_string(n));
  return {n, parse_triples(field(j, "entries", "mu"), n, n, "mu.entries")};
}

Json mu_json(const MuTable& mu) { return {{"dim", mu.n}, {"entries", triples_json(mu.entries, mu.n)}}; }

Json presentation_json(const FiniteAlgebra& a, const HomologyPresentation& h) {
  Json reps = Json::array();
  for (std::size_t k = 0; k < h.dim(); ++k) reps.push_back(chain_json(a.dim(), {h.degree(), h.representative(k)}));
  return {{"degree", h.degree()}, {"dim", h.dim()}, {"representatives", reps}};
}

Json verdict_json(const DiracVerdict& v) {
  Json j = {{"ambient", ambient_name(v.ambient)},
            {"dim", v.dim},
            {"isotropic", v.isotropic},
            {"maximal", v.maximal},
            {"closed", v.closed},
            {"dirac", v.dirac},
            {"z_stable", v.z_stable}};
  if (v.ambient == Ambient::E) j["pre_quotient"] = true;
  if (v.counterexample)
    j["counterexample"] = {{"pair", {v.counterexample->i, v.counterexample->j}}, {"bracket", vector_json(v.counterexample->value)}};
  return j;
}

Json tally_json(const TallyReport& r) {
  Json out = Json::array();
  for (const auto& t : r.tallies) {
    Json j = {{"name", t.name}, {"cases", t.cases}, {"failures", t.failures}, {"asserted", t.asserted}};
    if (t.failures) j["first_failure"] = t.first_failure;
    out.push_back(j);
  }
  return out;
}

Json kernel_json(const KernelReport& r) {
  return {{"dim_E", r.dim_e},       {"dim_J", r.dim_j},           {"left_ideal", r.left_ideal},
          {"right_ideal", r.right_ideal}, {"in_radical", r.in_radical}, {"nondegenerate", r.nondegenerate}};
}

Json morita_json(const MoritaReport& r) {
  return {{"r", r.r},
          {"dim_E", {r.dim_e_source, r.dim_e_target}},
          {"dim_eps", {r.dim_eps_source, r.dim_eps_target}},
          {"T_bijective", r.t_bijective},
          {"I_bijective", r.i_bijective},
          {"phi_bijective", r.phi_bijective},
          {"phi_inverse_is_trace", r.phi_is_trace_inverse},
          {"interior_preserved", r.interior_preserved},
          {"B_commutes_with_I", r.b_commutes},
          {"chain_homotopy_exact", r.chain_homotopy},
          {"B_interior_identities", r.lie_and_b_identities},
          {"bracket_preserved", r.bracket_preserved},
          {"form_preserved", r.form_preserved},
          {"kernel_mapped", r.kernel_mapped},
          {"eps_bijective", r.eps_bijective},
          {"eps_bracket_preserved", r.eps_bracket_preserved},
          {"eps_form_preserved", r.eps_form_preserved},
          {"failures", r.failures}};
}

Json omni_isomorphism_json(const OmniIsoReport& r) {
  return {{"n", r.n},
          {"dim_E", r.dim_e},
          {"dim_J", r.dim_j},
          {"dim_eps", r.dim_eps},
          {"kernel_dim", r.kernel_dim},
          {"kernel_generators", r.kernel_generators},
          {"bijective", r.bijective},
          {"bracket_matches", r.bracket_matches},
          {"form_matches", r.form_matches},
          {"form_scalar", format_rational(r.form_scalar)},
          {"failures", r.failures}};
}

Json omni_dims_json(const OmniDimReport& r) {
  return {{"n", r.n},
          {"dim_H1_cohomology", r.h1},
          {"dim_H1_homology", r.h_1},
          {"dim_E", r.e},
          {"expected", {r.h1_expected, r.h_1_expected, r.e_expected}},
          {"ok", r.ok()}};
}

Json poisson_sweep_json(const PoissonSweep& s) {
  return {{"tables", s.tables},
          {"poisson", s.poisson},
          {"disagreements", s.disagreements},
          {"skew_not_maximally_isotropic", s.skew_not_isotropic},
          {"preimage_mismatch", s.preimage_mismatch},
          {"disagreeing", s.disagreeing}};
}

Json two_form_json(const TwoFormOutcome& o) {
  Json j = {{"dim_H2", o.h2_dim},
            {"zero_form_dirac", o.zero_form_dirac},
            {"grid_points", o.search.grid_points},
            {"random_points", o.search.random_points},
            {"solution_dim", o.search.solution_dim},
            {"solution_basis_checked", o.basis_checked},
            {"solution_basis_dirac", o.basis_dirac}};
  if (o.search.witness) {
    j["witness"] = vector_json(*o.search.witness);
    j["witness_dirac"] = o.witness_dirac;
  } else {
    j["witness"] = "none found";
  }
  return j;
}

namespace {

void render(const Json& j, const std::string& indent, std::ostringstream& os) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    const std::string key = j.is_object() ? it.key() : "-";
    const bool scalar_array = v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_primitive(); });
    if (v.is_primitive() || scalar_array || v.empty()) {
      os << indent << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    } else {
      os << indent << key << ":\n";
      render(v, indent + "  ", os);
    }
  }
}

bool object_free(const Json& j) {
  if (j.is_object()) return false;
  return !j.is_array() || std::all_of(j.begin(), j.end(), object_free);
}

void pretty(const Json& j, const std::string& indent, std::ostringstream& os) {
  const std::string line = j.dump();
  const bool scalars = j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
  if (j.is_primitive() || j.empty() || scalars || (object_free(j) && line.size() <= 96)) {
    os << line;
    return;
  }
  const std::string inner = indent + "  ";
  os << (j.is_object() ? "{\n" : "[\n");
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it != j.begin()) os << ",\n";
    os << inner;
    if (j.is_object()) os << Json(it.key()).dump() << ": ";
    pretty(it.value(), inner, os);
  }
  os << "\n" << indent << (j.is_object() ? "}" : "]");
}

}  // namespace

std::string render_json(const Json& j) {
  std::ostringstream os;
  pretty(j, "", os);
  os << "\n";
  return os.str();
}

std::string render_text(const Json& j) {
  std::ostringstream os;
  render(j, "", os);
  return os.str();
}

}  // namespace hcc
