#pragma once

#include <string>

#include <json.hpp>

#include "hccourant/morita.hpp"
#include "hccourant/verify.hpp"

namespace hcc {

using Json = nlohmann::ordered_json;

/// Parses a file, reporting syntax errors with line and column.
Json read_json_file(const std::string& path);
/// Loads path as JSON, or a bundled algebra when path names one ("v1_2" or
/// "v1_2.json") and no such file exists.
AlgebraData load_algebra_data(const std::string& path);

Json rational_json(const Rational& r);
Json vector_json(std::span<const Rational> v);
Json matrix_json(const QMatrix& m);
/// Sparse [[[i0..in], "p/q"], ...] in lexicographic index order.
Json chain_json(std::size_t d, const Chain& c);
Json element_json(const EElement& e);

Rational parse_rational_field(const Json& j, const std::string& where);
QVector parse_vector(const Json& j, std::size_t expected, const std::string& where);

AlgebraData parse_algebra(const Json& j);
Json algebra_json(const FiniteAlgebra& a);

/// {"algebra": name, "entries": [[i, j, [...]], ...]}; the name must match
/// the algebra when present.
BracketTable parse_bracket_table(const Json& j, const AlgebraPtr& a);
Json bracket_table_json(const BracketTable& t);

/// {"ambient": "E" | "epsilon", "vectors": [[...], ...]}
Submodule parse_submodule(const Json& j, std::size_t dim_e, std::size_t dim_eps);
Json submodule_json(const Submodule& s);

/// {"omega": [...]} in H_2 class coordinates.
QVector parse_omega(const Json& j, std::size_t h2_dim);

/// {"dim": n, "entries": [[i, j, [...]], ...]} with V indices 0..n-1.
MuTable parse_mu(const Json& j, std::size_t n);
Json mu_json(const MuTable& mu);

Json presentation_json(const FiniteAlgebra& a, const HomologyPresentation& h);
Json verdict_json(const DiracVerdict& v);
Json tally_json(const TallyReport& r);
Json kernel_json(const KernelReport& r);
Json morita_json(const MoritaReport& r);
Json omni_isomorphism_json(const OmniIsoReport& r);
Json omni_dims_json(const OmniDimReport& r);
Json poisson_sweep_json(const PoissonSweep& s);
Json two_form_json(const TwoFormOutcome& o);

/// Indented JSON with scalar arrays kept on one line.
std::string render_json(const Json& j);

/// Indented "key: value" lines.
std::string render_text(const Json& j);

}  // namespace hcc
