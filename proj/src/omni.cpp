#include "hccourant/omni.hpp"

#include "hccourant/errors.hpp"

namespace hcc {

OmniElement omni_basis_element(std::size_t n, std::size_t index) {
  if (index >= n * n + n) throw InputError("omni basis index out of range");
  OmniElement e{QMatrix(n, n), QVector(n)};
  if (index < n * n)
    e.xi(index / n, index % n) = 1;
  else
    e.v[index - n * n] = 1;
  return e;
}

QVector omni_flatten(const OmniElement& e) {
  const std::size_t n = e.v.size();
  if (e.xi.rows() != n || e.xi.cols() != n) throw InputError("omni element has mismatched shapes");
  QVector out(e.xi.data().begin(), e.xi.data().end());
  out.insert(out.end(), e.v.begin(), e.v.end());
  return out;
}

OmniElement omni_split(std::size_t n, std::span<const Rational> v) {
  if (v.size() != n * n + n) throw InputError("omni vector has the wrong length");
  OmniElement e{QMatrix(n, n), QVector(v.begin() + static_cast<long>(n * n), v.end())};
  for (std::size_t i = 0; i < n * n; ++i) e.xi(i / n, i % n) = v[i];
  return e;
}

namespace {

void check_shapes(const OmniElement& a, const OmniElement& b) {
  const std::size_t n = a.v.size();
  if (b.v.size() != n || a.xi.rows() != n || a.xi.cols() != n || b.xi.rows() != n || b.xi.cols() != n)
    throw InputError("omni elements have mismatched shapes");
}

}  // namespace

OmniElement weinstein_bracket(const OmniElement& a, const OmniElement& b) {
  check_shapes(a, b);
  return {a.xi * b.xi - b.xi * a.xi, a.xi.apply(b.v)};
}

QVector omni_pairing(const OmniElement& a, const OmniElement& b) {
  check_shapes(a, b);
  return scale(Rational(1, 2), add(b.xi.apply(a.v), a.xi.apply(b.v)));
}

OmniDimReport verify_omni_dims(std::size_t n, const Guard& guard) {
  if (n == 0 || n > guard.max_omni_dim)
    throw GuardError("dim V = " + std::to_string(n) + " is outside the omni guard (override with --guard)");
  const LowDegree ld = low_degree(build_v1(n), guard);
  OmniDimReport r;
  r.n = n;
  r.h1 = ld.coh1.dim();
  r.h_1 = ld.h1.dim();
  r.e = r.h1 + r.h_1;
  r.h1_expected = n * n;
  r.h_1_expected = n + n * (n - 1) / 2;
  r.e_expected = r.h1_expected + r.h_1_expected;
  return r;
}

OmniModel build_omni_model(std::size_t n, const Guard& guard) {
  if (n == 0 || n > guard.max_omni_dim)
    throw GuardError("dim V = " + std::to_string(n) + " is outside the omni guard (override with --guard)");
  OmniModel m;
  m.n = n;
  const AlgebraPtr a = build_v1(n);
  m.e = make_espace(a, guard);
  m.eps = std::make_shared<const EpsilonSpace>(m.e);
  const LowDegree& ld = m.e->presentations();
  const std::size_t d = n + 1;
  m.phi = QMatrix(0, m.eps->dim());
  for (std::size_t p = 0; p < n * n; ++p) {
    QMatrix x(d, d);
    x(p / n + 1, p % n + 1) = 1;
    const QVector xc = ld.coh1.reduce_checked(cochain_to_vector(x));
    m.phi.append_row(m.eps->project(m.e->flatten({xc, QVector(m.e->h_1_dim())})));
  }
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t digits[] = {0, k + 1};
    const QVector alpha = ld.h1.reduce_checked(basis_chain(*a, digits).coords);
    m.phi.append_row(m.eps->project(m.e->flatten({QVector(m.e->h1_dim()), alpha})));
  }
  return m;
}

OmniIsoReport verify_omni_isomorphism(const OmniModel& m) {
  OmniIsoReport r;
  auto expect = [&](bool& flag, bool cond, const char* what) {
    flag = cond;
    if (!cond) r.failures.emplace_back(what);
  };
  const std::size_t n = m.n;
  const ESpace& e = *m.e;
  const EpsilonSpace& eps = *m.eps;
  const LowDegree& ld = e.presentations();
  r.n = n;
  r.dim_e = e.dim();
  r.dim_j = eps.kernel().rows();
  r.dim_eps = eps.dim();
  expect(r.kernel_dim, r.dim_j == n * (n - 1) / 2, "dim J differs from n(n-1)/2");

  QMatrix gens(0, e.dim());
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      const std::size_t digits[] = {i, j};
      const QVector alpha = ld.h1.reduce_checked(basis_chain(e.algebra(), digits).coords);
      gens.append_row(e.flatten({QVector(e.h1_dim()), alpha}));
    }
  }
  expect(r.kernel_generators, same_rowspan(gens, eps.kernel()), "J is not spanned by the classes of v_i (x) v_j");

  expect(r.bijective, m.phi.rows() == m.phi.cols() && rank(m.phi) == m.phi.rows(),
         "gl(V) + V -> eps(V[1]) is not a bijection");

  const StructureTables& t = eps.tables();
  const std::size_t dim = n * n + n;
  bool bracket = r.bijective;
  bool form = r.bijective;
  for (std::size_t p = 0; p < dim && r.bijective; ++p) {
    const OmniElement bp = omni_basis_element(n, p);
    for (std::size_t q = 0; q < dim; ++q) {
      const OmniElement bq = omni_basis_element(n, q);
      const QVector lhs = t.bracket_of(m.phi.row(p), m.phi.row(q));
      bracket = bracket && lhs == m.phi.left_apply(omni_flatten(weinstein_bracket(bp, bq)));
      const QVector pv = scale(r.form_scalar, omni_pairing(bp, bq));
      QVector in_a(n + 1);
      std::copy(pv.begin(), pv.end(), in_a.begin() + 1);
      form = form && t.form_of(m.phi.row(p), m.phi.row(q)) == ld.h0.reduce(in_a);
    }
  }
  expect(r.bracket_matches, bracket, "induced bracket differs from the Weinstein bracket");
  expect(r.form_matches, form, "induced form differs from 2 x omni pairing");
  return r;
}

MuTable zero_mu(std::size_t n) { return {n, std::vector<QVector>(n * n, QVector(n))}; }

bool is_lie_bracket(const MuTable& mu) {
  const std::size_t n = mu.n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!is_zero(add(mu.at(i, j), mu.at(j, i)))) return false;
  auto br = [&](std::span<const Rational> x, std::size_t k) {
    QVector out(n);
    for (std::size_t i = 0; i < n; ++i)
      if (sgn(x[i]) != 0) axpy(x[i], mu.at(i, k), out);
    return out;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        // [[v_i,v_j],v_k] + [[v_j,v_k],v_i] + [[v_k,v_i],v_j]
        const QVector s = add(add(br(mu.at(i, j), k), br(mu.at(j, k), i)), br(mu.at(k, i), j));
        if (!is_zero(s)) return false;
      }
  return true;
}

BracketTable mu_to_table(const AlgebraPtr& v1, const MuTable& mu) {
  const std::size_t n = mu.n;
  if (v1->dim() != n + 1) throw InputError("mu table does not match dim V");
  BracketTable t = zero_table(v1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      std::copy(mu.at(i, j).begin(), mu.at(i, j).end(), t.entries[(i + 1) * (n + 1) + j + 1].begin() + 1);
  return t;
}

DStructureResult d_structure_check(const OmniModel& m, const MuTable& mu) {
  const std::size_t n = m.n;
  if (mu.n != n || mu.entries.size() != n * n) throw InputError("mu table does not match dim V");
  for (const auto& v : mu.entries)
    if (v.size() != n) throw InputError("mu table entry has the wrong length");
  QMatrix rows(0, m.eps->dim());
  for (std::size_t k = 0; k < n; ++k) {
    OmniElement g{QMatrix(n, n), unit_vector(n, k)};
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t a = 0; a < n; ++a) g.xi(a, j) = mu.at(k, j)[a];
    rows.append_row(m.phi.left_apply(omni_flatten(g)));
  }
  DStructureResult r;
  r.graph = make_submodule(Ambient::Epsilon, rows);
  r.verdict = is_dirac(*m.eps, r.graph);
  r.lie = is_lie_bracket(mu);
  return r;
}

}  // namespace hcc
