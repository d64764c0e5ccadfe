#include "hccourant/algebra.hpp"

#include <sstream>

#include "hccourant/errors.hpp"
#include "hccourant/exactlin.hpp"

namespace hcc {

namespace {

void check_shapes(const AlgebraData& data) {
  const std::size_t d = data.basis.size();
  if (d == 0) throw InputError("algebra \"" + data.name + "\": dimension must be at least 1");
  if (data.unit.size() != d) throw InputError("algebra \"" + data.name + "\": unit has wrong length");
  if (data.structure.size() != d) throw InputError("algebra \"" + data.name + "\": structure table has wrong row count");
  for (const auto& row : data.structure) {
    if (row.size() != d) throw InputError("algebra \"" + data.name + "\": structure table has wrong column count");
    for (const auto& v : row) {
      if (v.size() != d) throw InputError("algebra \"" + data.name + "\": structure constant has wrong length");
    }
  }
}

QVector mul(const AlgebraData& data, std::span<const Rational> a, std::span<const Rational> b) {
  const std::size_t d = data.basis.size();
  QVector out(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (sgn(b[j]) == 0) continue;
      axpy(a[i] * b[j], data.structure[i][j], out);
    }
  }
  return out;
}

std::string name_of(const AlgebraData& data, std::size_t i) { return data.basis[i]; }

}  // namespace

StructureReport check_structure(const AlgebraData& data) {
  check_shapes(data);
  const std::size_t d = data.basis.size();
  StructureReport report{true, true, {}};
  for (std::size_t i = 0; i < d && report.associative; ++i) {
    for (std::size_t j = 0; j < d && report.associative; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        const QVector lhs = mul(data, data.structure[i][j], unit_vector(d, k));
        const QVector rhs = mul(data, unit_vector(d, i), data.structure[j][k]);
        if (lhs != rhs) {
          report.associative = false;
          std::ostringstream os;
          os << "associativity fails on (" << name_of(data, i) << ", " << name_of(data, j) << ", "
             << name_of(data, k) << ")";
          report.detail = os.str();
          break;
        }
      }
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    const QVector e = unit_vector(d, i);
    if (mul(data, data.unit, e) != e || mul(data, e, data.unit) != e) {
      report.unital = false;
      if (report.detail.empty()) report.detail = "unit law fails on " + name_of(data, i);
      break;
    }
  }
  return report;
}

FiniteAlgebra::FiniteAlgebra(AlgebraData data) {
  const StructureReport report = check_structure(data);
  if (!report.valid()) throw InputError("algebra \"" + data.name + "\": " + report.detail);
  name_ = std::move(data.name);
  basis_ = std::move(data.basis);
  unit_ = std::move(data.unit);
  const std::size_t d = basis_.size();
  structure_.reserve(d * d);
  terms_.resize(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const QVector& v = data.structure[i][j];
      for (std::size_t k = 0; k < d; ++k) {
        if (sgn(v[k]) != 0) terms_[i * d + j].push_back({k, v[k]});
      }
      structure_.push_back(v);
    }
  }
  commutative_ = true;
  for (std::size_t i = 0; i < d && commutative_; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (structure_[i * d + j] != structure_[j * d + i]) {
        commutative_ = false;
        break;
      }
}

QVector FiniteAlgebra::multiply(std::span<const Rational> a, std::span<const Rational> b) const {
  const std::size_t d = dim();
  if (a.size() != d || b.size() != d) throw InputError("multiply: element length does not match algebra dimension");
  QVector out(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (sgn(b[j]) == 0) continue;
      const Rational c = a[i] * b[j];
      for (const auto& t : product_terms(i, j)) out[t.index] += c * t.coeff;
    }
  }
  return out;
}

QVector FiniteAlgebra::commutator(std::span<const Rational> a, std::span<const Rational> b) const {
  return sub(multiply(a, b), multiply(b, a));
}

QMatrix FiniteAlgebra::left_multiplication(std::span<const Rational> a) const {
  const std::size_t d = dim();
  QMatrix m(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    const QVector col = multiply(a, unit_vector(d, j));
    for (std::size_t r = 0; r < d; ++r) m(r, j) = col[r];
  }
  return m;
}

QMatrix FiniteAlgebra::right_multiplication(std::span<const Rational> a) const {
  const std::size_t d = dim();
  QMatrix m(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    const QVector col = multiply(unit_vector(d, j), a);
    for (std::size_t r = 0; r < d; ++r) m(r, j) = col[r];
  }
  return m;
}

AlgebraData FiniteAlgebra::data() const {
  const std::size_t d = dim();
  AlgebraData out{name_, basis_, std::vector<std::vector<QVector>>(d, std::vector<QVector>(d)), unit_};
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) out.structure[i][j] = product(i, j);
  return out;
}

AlgebraPtr make_algebra(AlgebraData data) { return std::make_shared<const FiniteAlgebra>(std::move(data)); }

AlgebraElement element(const AlgebraPtr& algebra, QVector coords) {
  if (coords.size() != algebra->dim()) throw InputError("element: length does not match algebra dimension");
  return {algebra, std::move(coords)};
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.algebra != b.algebra) throw InputError("multiply: elements belong to different algebras");
  return {a.algebra, a.algebra->multiply(a.coords, b.coords)};
}

QMatrix center(const FiniteAlgebra& a) {
  // Unknown z; conditions (z e_i - e_i z)_k = 0 for all i, k.
  const std::size_t d = a.dim();
  QMatrix conditions(d * d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t m = 0; m < d; ++m) {
      const QVector c = a.commutator(unit_vector(d, m), unit_vector(d, i));
      for (std::size_t k = 0; k < d; ++k) conditions(i * d + k, m) = c[k];
    }
  }
  return row_basis(nullspace(conditions));
}

QMatrix commutator_subspace(const FiniteAlgebra& a) {
  const std::size_t d = a.dim();
  EchelonBasis basis(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) basis.add(a.commutator(unit_vector(d, i), unit_vector(d, j)));
  return basis.reduced_basis();
}

AlgebraPtr matrix_algebra(const FiniteAlgebra& a, std::size_t r) {
  if (r == 0) throw InputError("matrix_algebra: r must be at least 1");
  const std::size_t d = a.dim();
  const std::size_t n = r * r * d;
  AlgebraData data;
  data.name = "M" + std::to_string(r) + "(" + a.name() + ")";
  data.basis.resize(n);
  data.structure.assign(n, std::vector<QVector>(n, QVector(n)));
  data.unit.assign(n, Rational(0));
  for (std::size_t p = 0; p < r; ++p)
    for (std::size_t q = 0; q < r; ++q)
      for (std::size_t i = 0; i < d; ++i)
        data.basis[matrix_unit_index(d, r, p, q, i)] =
            "E" + std::to_string(p + 1) + std::to_string(q + 1) + "(" + a.basis_names()[i] + ")";
  // E_pq(e_i) E_st(e_j) = delta_qs E_pt(e_i e_j)
  for (std::size_t p = 0; p < r; ++p)
    for (std::size_t q = 0; q < r; ++q)
      for (std::size_t t = 0; t < r; ++t)
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j) {
            auto& out = data.structure[matrix_unit_index(d, r, p, q, i)][matrix_unit_index(d, r, q, t, j)];
            for (const auto& term : a.product_terms(i, j)) out[matrix_unit_index(d, r, p, t, term.index)] = term.coeff;
          }
  for (std::size_t p = 0; p < r; ++p)
    for (std::size_t i = 0; i < d; ++i) data.unit[matrix_unit_index(d, r, p, p, i)] = a.unit()[i];
  return make_algebra(std::move(data));
}

AlgebraPtr opposite_algebra(const FiniteAlgebra& a) {
  AlgebraData data = a.data();
  const std::size_t d = a.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) data.structure[i][j] = a.product(j, i);
  data.name = a.name() + "^op";
  return make_algebra(std::move(data));
}

AlgebraPtr rationals() {
  return make_algebra({"Q", {"1"}, {{QVector{Rational(1)}}}, QVector{Rational(1)}});
}

AlgebraPtr build_v1(std::size_t n) {
  if (n == 0) throw InputError("build_v1: dim V must be at least 1");
  const std::size_t d = n + 1;
  AlgebraData data;
  data.name = "V[1] n=" + std::to_string(n);
  data.basis.push_back("1");
  for (std::size_t i = 1; i <= n; ++i) data.basis.push_back("v" + std::to_string(i));
  data.structure.assign(d, std::vector<QVector>(d, QVector(d)));
  for (std::size_t i = 0; i < d; ++i) {
    data.structure[0][i] = unit_vector(d, i);
    data.structure[i][0] = unit_vector(d, i);
  }
  data.unit = unit_vector(d, 0);
  return make_algebra(std::move(data));
}

AlgebraPtr truncated_poly(std::size_t n) {
  if (n < 2) throw InputError("truncated_poly: n must be at least 2");
  AlgebraData data;
  data.name = "Q[x]/(x^" + std::to_string(n) + ")";
  for (std::size_t i = 0; i < n; ++i) data.basis.push_back(i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i));
  data.structure.assign(n, std::vector<QVector>(n, QVector(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j + i < n; ++j) data.structure[i][j] = unit_vector(n, i + j);
  data.unit = unit_vector(n, 0);
  return make_algebra(std::move(data));
}

AlgebraPtr upper_triangular(std::size_t n) {
  if (n == 0) throw InputError("upper_triangular: n must be at least 1");
  std::vector<std::pair<std::size_t, std::size_t>> units;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p; q < n; ++q) units.emplace_back(p, q);
  const std::size_t d = units.size();
  AlgebraData data;
  data.name = "UT" + std::to_string(n) + "(Q)";
  for (auto [p, q] : units) data.basis.push_back("E" + std::to_string(p + 1) + std::to_string(q + 1));
  data.structure.assign(d, std::vector<QVector>(d, QVector(d)));
  data.unit.assign(d, Rational(0));
  for (std::size_t a = 0; a < d; ++a) {
    if (units[a].first == units[a].second) data.unit[a] = 1;
    for (std::size_t b = 0; b < d; ++b) {
      if (units[a].second != units[b].first) continue;
      for (std::size_t c = 0; c < d; ++c)
        if (units[c] == std::pair{units[a].first, units[b].second}) data.structure[a][b] = unit_vector(d, c);
    }
  }
  return make_algebra(std::move(data));
}

std::vector<std::pair<std::string, AlgebraPtr>> bundled_algebras() {
  return {
      {"q", rationals()},
      {"dual2", truncated_poly(2)},
      {"trunc3", truncated_poly(3)},
      {"v1_1", build_v1(1)},
      {"v1_2", build_v1(2)},
      {"v1_3", build_v1(3)},
      {"m2q", matrix_algebra(*rationals(), 2)},
      {"ut2", upper_triangular(2)},
  };
}

AlgebraPtr bundled_algebra(const std::string& id) {
  for (auto& [key, alg] : bundled_algebras()) {
    if (key == id) return alg;
  }
  throw InputError("unknown bundled algebra \"" + id + "\"");
}

}  // namespace hcc
