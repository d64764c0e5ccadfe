#include "hccourant/courant.hpp"

#include <sstream>

#include "hccourant/errors.hpp"

namespace hcc {

EElement operator+(const EElement& a, const EElement& b) { return {add(a.x, b.x), add(a.alpha, b.alpha)}; }
EElement operator-(const EElement& a, const EElement& b) { return {sub(a.x, b.x), sub(a.alpha, b.alpha)}; }
EElement operator*(const Rational& c, const EElement& a) { return {scale(c, a.x), scale(c, a.alpha)}; }

QVector StructureTables::bracket_of(std::span<const Rational> u, std::span<const Rational> v) const {
  QVector out(dim);
  for (std::size_t p = 0; p < dim; ++p) {
    if (sgn(u[p]) == 0) continue;
    for (std::size_t q = 0; q < dim; ++q) {
      if (sgn(v[q]) == 0) continue;
      axpy(u[p] * v[q], bracket[p * dim + q], out);
    }
  }
  return out;
}

QVector StructureTables::form_of(std::span<const Rational> u, std::span<const Rational> v) const {
  QVector out(value_dim);
  for (std::size_t p = 0; p < dim; ++p) {
    if (sgn(u[p]) == 0) continue;
    for (std::size_t q = 0; q < dim; ++q) {
      if (sgn(v[q]) == 0) continue;
      axpy(u[p] * v[q], form[p * dim + q], out);
    }
  }
  return out;
}

QVector StructureTables::center_multiply(std::size_t k, std::span<const Rational> u) const {
  return center_action.at(k).left_apply(u);
}

namespace {

void check_element(const ESpace& e, const EElement& el) {
  if (el.x.size() != e.h1_dim() || el.alpha.size() != e.h_1_dim())
    throw InputError("E(A) element has coordinates of the wrong length");
}

}  // namespace

ESpace::ESpace(AlgebraPtr a, const Guard& guard) : ld_(low_degree(a, guard)) {
  const FiniteAlgebra& alg = *ld_.algebra;
  const std::size_t d = alg.dim();
  // B : H_0 -> H_1 descends: commutators go to boundaries.
  for (std::size_t k = 0; k < ld_.h0.boundary_basis().rows(); ++k) {
    const Chain bw = connes_B(alg, {0, ld_.h0.boundary_basis().row_vector(k)});
    if (!ld_.h1.is_boundary(bw.coords)) throw InvariantError("D map: B of a commutator is not a boundary");
  }
  // Derivations preserve [A,A], so they act on H_0.
  for (std::size_t g = 0; g < ld_.coh1.cycle_basis().rows(); ++g) {
    const QMatrix x = cochain_from_vector(d, ld_.coh1.cycle_basis().row(g));
    for (std::size_t k = 0; k < ld_.h0.boundary_basis().rows(); ++k) {
      if (!ld_.h0.is_boundary(x.apply(ld_.h0.boundary_basis().row(k))))
        throw InvariantError("a derivation does not preserve the commutator subspace");
    }
  }

  const std::size_t n = dim();
  tables_.dim = n;
  tables_.value_dim = h0_dim();
  tables_.bracket.reserve(n * n);
  tables_.form.reserve(n * n);
  for (std::size_t p = 0; p < n; ++p) {
    const EElement bp = basis_element(p);
    for (std::size_t q = 0; q < n; ++q) {
      const EElement bq = basis_element(q);
      tables_.bracket.push_back(flatten(courant_bracket(*this, bp, bq)));
      tables_.form.push_back(bilinear_form(*this, bp, bq));
    }
  }
  for (std::size_t k = 0; k < ld_.center.rows(); ++k) {
    QMatrix m(0, n);
    for (std::size_t p = 0; p < n; ++p) m.append_row(flatten(center_multiply(*this, ld_.center.row(k), basis_element(p))));
    tables_.center_action.push_back(std::move(m));
  }
}

QVector ESpace::flatten(const EElement& e) const {
  check_element(*this, e);
  return concat(e.x, e.alpha);
}

EElement ESpace::split(std::span<const Rational> v) const {
  if (v.size() != dim()) throw InputError("E(A) vector has the wrong length");
  return {QVector(v.begin(), v.begin() + static_cast<long>(h1_dim())),
          QVector(v.begin() + static_cast<long>(h1_dim()), v.end())};
}

ESpacePtr make_espace(AlgebraPtr a, const Guard& guard) { return std::make_shared<const ESpace>(std::move(a), guard); }

EElement courant_bracket(const ESpace& e, const EElement& e1, const EElement& e2) {
  check_element(e, e1);
  check_element(e, e2);
  const LowDegree& ld = e.presentations();
  const FiniteAlgebra& a = e.algebra();
  const QMatrix x1 = ld.derivation_rep(e1.x);
  const QMatrix x2 = ld.derivation_rep(e2.x);
  const Chain a1 = ld.h1_rep(e1.alpha);
  const Chain a2 = ld.h1_rep(e2.alpha);
  const QVector x = ld.coh1.reduce_checked(cochain_to_vector(commutator(x1, x2)));
  const Chain chain = apply_lie(a, x1, a2) - apply_lie(a, x2, a1) + connes_B(a, apply_interior(a, x2, a1));
  return {x, ld.h1.reduce_checked(chain.coords)};
}

QVector bilinear_form(const ESpace& e, const EElement& e1, const EElement& e2) {
  check_element(e, e1);
  check_element(e, e2);
  const LowDegree& ld = e.presentations();
  return add(pairing(ld, e2.x, e1.alpha), pairing(ld, e1.x, e2.alpha));
}

EElement skew_bracket(const ESpace& e, const EElement& e1, const EElement& e2) {
  return courant_bracket(e, e1, e2) - Rational(1, 2) * d_map(e, bilinear_form(e, e1, e2));
}

QVector rho(const ESpace& e, const EElement& el) {
  check_element(e, el);
  return el.x;
}

EElement d_map(const ESpace& e, std::span<const Rational> h0_class) {
  const LowDegree& ld = e.presentations();
  if (h0_class.size() != ld.h0.dim()) throw InputError("D map: H_0 class has the wrong length");
  const Chain rep{0, ld.h0.representative(h0_class)};
  return {QVector(e.h1_dim()), ld.h1.reduce_checked(connes_B(e.algebra(), rep).coords)};
}

namespace {

void require_central(const ESpace& e, std::span<const Rational> z) {
  if (z.size() != e.algebra().dim()) throw InputError("central element has the wrong length");
  if (!in_rowspan(z, e.presentations().center)) throw InputError("element is not in the center of A");
}

}  // namespace

QVector center_action(const ESpace& e, std::span<const Rational> x, std::span<const Rational> z) {
  require_central(e, z);
  if (x.size() != e.h1_dim()) throw InputError("H^1 class has the wrong length");
  QVector out = e.presentations().derivation_rep(x).apply(z);
  if (!in_rowspan(out, e.presentations().center)) throw InvariantError("X(z) is not central");
  return out;
}

EElement center_multiply(const ESpace& e, std::span<const Rational> z, const EElement& el) {
  check_element(e, el);
  require_central(e, z);
  const LowDegree& ld = e.presentations();
  const FiniteAlgebra& a = e.algebra();
  const QMatrix zx = a.left_multiplication(z) * ld.derivation_rep(el.x);
  const Chain za = left_multiply_chain(a, z, ld.h1_rep(el.alpha));
  return {ld.coh1.reduce_checked(cochain_to_vector(zx)), ld.h1.reduce_checked(za.coords)};
}

QVector h0_action(const ESpace& e, std::span<const Rational> x, std::span<const Rational> h0_class) {
  const LowDegree& ld = e.presentations();
  if (x.size() != e.h1_dim() || h0_class.size() != ld.h0.dim()) throw InputError("h0_action: length mismatch");
  return ld.h0.reduce(ld.derivation_rep(x).apply(ld.h0.representative(h0_class)));
}

namespace {

/// Row p holds all form values (b_p, b_q)_h, column q*value_dim + h.
QMatrix form_matrix(const StructureTables& t, const QMatrix& rows_in_basis) {
  QMatrix m(rows_in_basis.rows(), t.dim * t.value_dim);
  for (std::size_t r = 0; r < rows_in_basis.rows(); ++r) {
    for (std::size_t q = 0; q < t.dim; ++q) {
      const QVector v = t.form_of(rows_in_basis.row(r), unit_vector(t.dim, q));
      for (std::size_t h = 0; h < t.value_dim; ++h) m(r, q * t.value_dim + h) = v[h];
    }
  }
  return m;
}

}  // namespace

QMatrix kernel_J(const ESpace& e) {
  const StructureTables& t = e.tables();
  return nullspace(form_matrix(t, QMatrix::identity(t.dim)).transpose());
}

KernelReport verify_kernel(const ESpace& e) {
  const StructureTables& t = e.tables();
  const QMatrix j = kernel_J(e);
  KernelReport report;
  report.dim_e = t.dim;
  report.dim_j = j.rows();
  EchelonBasis span(t.dim);
  for (std::size_t k = 0; k < j.rows(); ++k) span.add(j.row(k));
  for (std::size_t k = 0; k < j.rows(); ++k) {
    for (std::size_t p = 0; p < t.dim; ++p) {
      const QVector bp = unit_vector(t.dim, p);
      if (!span.contains(t.bracket_of(j.row(k), bp))) report.left_ideal = false;
      if (!span.contains(t.bracket_of(bp, j.row(k)))) report.right_ideal = false;
      if (!is_zero(t.form_of(j.row(k), bp))) report.in_radical = false;
    }
  }
  const QuotientBasis q(QMatrix::identity(t.dim), j);
  report.nondegenerate = rank(form_matrix(t, q.reps())) == q.dim();
  return report;
}

EpsilonSpace::EpsilonSpace(ESpacePtr e) : e_(std::move(e)) {
  const KernelReport report = verify_kernel(*e_);
  if (!report.left_ideal || !report.right_ideal) throw InvariantError("kernel J is not a two-sided ideal");
  if (!report.nondegenerate) throw InvariantError("induced form on eps(A) is degenerate");
  const StructureTables& t = e_->tables();
  j_ = kernel_J(*e_);
  quotient_ = QuotientBasis(QMatrix::identity(t.dim), j_);
  if (has_anchor()) {
    for (std::size_t k = 0; k < j_.rows(); ++k)
      for (std::size_t i = 0; i < e_->h1_dim(); ++i)
        if (sgn(j_(k, i)) != 0) throw InvariantError("kernel J has a nonzero H^1 component for commutative A");
  }
  const std::size_t n = dim();
  tables_.dim = n;
  tables_.value_dim = t.value_dim;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      tables_.bracket.push_back(project(t.bracket_of(reps().row(p), reps().row(q))));
      tables_.form.push_back(t.form_of(reps().row(p), reps().row(q)));
    }
  }
  for (std::size_t k = 0; k < t.center_action.size(); ++k) {
    QMatrix m(0, n);
    for (std::size_t p = 0; p < n; ++p) m.append_row(project(t.center_multiply(k, reps().row(p))));
    tables_.center_action.push_back(std::move(m));
  }
}

QVector EpsilonSpace::rho(std::span<const Rational> eps_coords) const {
  if (!has_anchor()) throw InputError("the anchor is not defined on eps(A) for noncommutative A");
  return e_->split(lift(eps_coords)).x;
}

void AxiomReport::merge(const AxiomReport& other) {
  checks += other.checks;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

AxiomReport check_axioms(const ESpace& e, const EElement& e1, const EElement& e2, const EElement& e3,
                         std::span<const Rational> z) {
  AxiomReport r;
  auto expect = [&](bool cond, const char* what) {
    ++r.checks;
    if (!cond) r.failures.emplace_back(what);
  };
  auto br = [&](const EElement& u, const EElement& v) { return courant_bracket(e, u, v); };
  auto form = [&](const EElement& u, const EElement& v) { return bilinear_form(e, u, v); };

  const EElement b12 = br(e1, e2);
  const EElement b13 = br(e1, e3);
  const EElement b23 = br(e2, e3);
  expect(br(e1, b23) == br(b12, e3) + br(e2, b13), "Leibniz identity");

  const LowDegree& ld = e.presentations();
  const QVector lie = ld.coh1.reduce(cochain_to_vector(commutator(ld.derivation_rep(e1.x), ld.derivation_rep(e2.x))));
  expect(rho(e, b12) == lie, "anchor is a bracket morphism");

  const QVector xz = center_action(e, e1.x, z);
  expect(br(e1, center_multiply(e, z, e2)) == center_multiply(e, z, b12) + center_multiply(e, xz, e2),
         "anchor Leibniz rule");

  expect(Rational(2) * br(e1, e1) == d_map(e, form(e1, e1)), "2[[e,e]] = D(e,e)");

  const QVector lhs = h0_action(e, e1.x, form(e2, e3));
  expect(lhs == add(form(b12, e3), form(e2, b13)), "invariance of the form");
  return r;
}

}  // namespace hcc
