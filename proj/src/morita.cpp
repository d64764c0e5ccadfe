#include "hccourant/morita.hpp"

#include "hccourant/errors.hpp"

namespace hcc {

QMatrix cotr(const FiniteAlgebra& a, std::size_t r, const QMatrix& x) {
  const std::size_t d = a.dim();
  if (x.rows() != d || x.cols() != d) throw InputError("cotr: derivation has the wrong shape");
  QMatrix out(r * r * d, r * r * d);
  for (std::size_t p = 0; p < r; ++p)
    for (std::size_t q = 0; q < r; ++q)
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t i = 0; i < d; ++i)
          out(matrix_unit_index(d, r, p, q, k), matrix_unit_index(d, r, p, q, i)) = x(k, i);
  return out;
}

Chain inc(const FiniteAlgebra& a, std::size_t r, const Chain& c) {
  const std::size_t d = a.dim();
  const std::size_t md = r * r * d;
  if (c.coords.size() != chain_dim(d, c.degree)) throw InputError("inc: chain has the wrong length");
  Chain out{c.degree, QVector(chain_dim(md, c.degree))};
  std::vector<std::size_t> digits(c.degree + 1);
  for (std::size_t idx = 0; idx < c.coords.size(); ++idx) {
    if (sgn(c.coords[idx]) == 0) continue;
    const auto t = tensor_digits(d, c.degree, idx);
    for (std::size_t j = 0; j <= c.degree; ++j) digits[j] = matrix_unit_index(d, r, 0, 0, t[j]);
    out.coords[tensor_index(md, digits)] = c.coords[idx];
  }
  return out;
}

namespace {

QMatrix block_diagonal(const QMatrix& x, const QMatrix& y) {
  QMatrix m(x.rows() + y.rows(), x.cols() + y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) m(i, j) = x(i, j);
  for (std::size_t i = 0; i < y.rows(); ++i)
    for (std::size_t j = 0; j < y.cols(); ++j) m(x.rows() + i, x.cols() + j) = y(i, j);
  return m;
}

bool bijective(const QMatrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

}  // namespace

MoritaMaps build_morita(const AlgebraPtr& a, std::size_t r, const Guard& guard) {
  if (r < 1) throw InputError("matrix size r must be at least 1");
  const std::size_t d = a->dim();
  if (r * r * d > guard.max_dim)
    throw GuardError("M_r(A) has dimension " + std::to_string(r * r * d) + " above the guard; raise --guard");
  MoritaMaps m;
  m.r = r;
  m.source = make_espace(a, guard);
  m.target = make_espace(matrix_algebra(*a, r), guard);
  m.eps_source = std::make_shared<const EpsilonSpace>(m.source);
  m.eps_target = std::make_shared<const EpsilonSpace>(m.target);
  const LowDegree& s = m.source->presentations();
  const LowDegree& t = m.target->presentations();
  const FiniteAlgebra& ma = m.target->algebra();

  m.t = QMatrix(0, m.target->h1_dim());
  for (std::size_t k = 0; k < m.source->h1_dim(); ++k) {
    const QMatrix tx = cotr(*a, r, s.derivation_rep(unit_vector(m.source->h1_dim(), k)));
    if (!is_derivation(ma, tx)) throw InvariantError("cotr of a derivation is not a derivation");
    m.t.append_row(t.coh1.reduce_checked(cochain_to_vector(tx)));
  }
  m.i = QMatrix(0, m.target->h_1_dim());
  for (std::size_t k = 0; k < m.source->h_1_dim(); ++k)
    m.i.append_row(t.h1.reduce_checked(inc(*a, r, {1, s.h1.representative(k)}).coords));
  m.phi = QMatrix(0, t.h0.dim());
  for (std::size_t k = 0; k < s.h0.dim(); ++k) m.phi.append_row(t.h0.reduce(inc(*a, r, {0, s.h0.representative(k)}).coords));
  m.e_map = block_diagonal(m.t, m.i);

  m.eps_map = QMatrix(0, m.eps_target->dim());
  for (std::size_t k = 0; k < m.eps_source->dim(); ++k)
    m.eps_map.append_row(m.eps_target->project(m.e_map.left_apply(m.eps_source->lift(unit_vector(m.eps_source->dim(), k)))));
  return m;
}

Chain morita_homotopy_defect(const FiniteAlgebra& a, std::size_t r, std::span<const Rational> elem) {
  const AlgebraPtr mp = matrix_algebra(a, r);
  const FiniteAlgebra& ma = *mp;
  const std::size_t d = a.dim();
  auto corner = [&](std::span<const Rational> x) {
    QVector v(ma.dim());
    for (std::size_t i = 0; i < d; ++i) v[matrix_unit_index(d, r, 0, 0, i)] = x[i];
    return v;
  };
  const QVector f = corner(a.unit());
  const QVector m = corner(elem);
  const QVector one = ma.unit();
  const QVector u = sub(one, f);
  const Chain bi = connes_B(ma, inc(a, r, {0, QVector(elem.begin(), elem.end())}));
  const Chain ib = inc(a, r, connes_B(a, {0, QVector(elem.begin(), elem.end())}));
  return bi - ib + boundary_b(ma, tensor_chain(ma, {u, m, f})) - boundary_b(ma, tensor_chain(ma, {one, one, m})) +
         boundary_b(ma, tensor_chain(ma, {f, f, m}));
}

MoritaReport verify_morita(const MoritaMaps& m) {
  MoritaReport rep;
  auto expect = [&](bool& flag, bool cond, const char* what) {
    flag = cond;
    if (!cond) rep.failures.emplace_back(what);
  };
  const ESpace& se = *m.source;
  const ESpace& te = *m.target;
  const LowDegree& s = se.presentations();
  const LowDegree& t = te.presentations();
  const FiniteAlgebra& a = se.algebra();
  const FiniteAlgebra& ma = te.algebra();
  rep.r = m.r;
  rep.dim_e_source = se.dim();
  rep.dim_e_target = te.dim();
  rep.dim_eps_source = m.eps_source->dim();
  rep.dim_eps_target = m.eps_target->dim();

  expect(rep.t_bijective, bijective(m.t), "T is not a bijection on H^1");
  expect(rep.i_bijective, bijective(m.i), "I is not a bijection on H_1");
  expect(rep.phi_bijective, bijective(m.phi), "inc does not induce a bijection on H_0");

  // Trace M_r(A) -> A on a class representative, against phi^{-1}.
  bool trace_ok = rep.phi_bijective;
  if (trace_ok) {
    const QMatrix phi_inv = inverse(m.phi);
    for (std::size_t k = 0; k < t.h0.dim() && trace_ok; ++k) {
      const QVector rep_k = t.h0.representative(k);
      QVector tr(a.dim());
      for (std::size_t p = 0; p < m.r; ++p)
        for (std::size_t i = 0; i < a.dim(); ++i) tr[i] += rep_k[matrix_unit_index(a.dim(), m.r, p, p, i)];
      trace_ok = s.h0.reduce(tr) == phi_inv.row_vector(k);
    }
  }
  expect(rep.phi_is_trace_inverse, trace_ok, "phi^{-1} differs from the trace map on H_0");

  bool interior = true;
  bool lie_b = true;
  for (std::size_t k = 0; k < se.h1_dim(); ++k) {
    const QVector xk = unit_vector(se.h1_dim(), k);
    const QMatrix x = s.derivation_rep(xk);
    const QMatrix tx = cotr(a, m.r, x);
    for (std::size_t l = 0; l < se.h_1_dim(); ++l) {
      const Chain alpha{1, s.h1.representative(l)};
      const Chain ia = inc(a, m.r, alpha);
      const QVector lhs = t.h0.reduce(apply_interior(ma, tx, ia).coords);
      const QVector rhs = m.phi.left_apply(s.h0.reduce(apply_interior(a, x, alpha).coords));
      interior = interior && lhs == rhs;
      const QVector ibi = t.h1.reduce_checked(inc(a, m.r, connes_B(a, apply_interior(a, x, alpha))).coords);
      const QVector bti = t.h1.reduce_checked(connes_B(ma, apply_interior(ma, tx, ia)).coords);
      const QVector tbi = t.h1.reduce_checked(apply_interior(ma, tx, connes_B(ma, ia)).coords);
      const QVector ixb = t.h1.reduce_checked(inc(a, m.r, apply_interior(a, x, connes_B(a, alpha))).coords);
      lie_b = lie_b && ibi == bti && tbi == ixb;
    }
  }
  expect(rep.interior_preserved, interior, "i_{T(X)} I differs from I i_X on classes");
  expect(rep.lie_and_b_identities, lie_b, "I B i_X or i_{T(X)} B I identity fails on classes");

  bool bcomm = true;
  bool homotopy = true;
  for (std::size_t k = 0; k < a.dim(); ++k) {
    const QVector ak = unit_vector(a.dim(), k);
    const QVector lhs = t.h1.reduce_checked(connes_B(ma, inc(a, m.r, {0, ak})).coords);
    const QVector rhs = t.h1.reduce_checked(inc(a, m.r, connes_B(a, {0, ak})).coords);
    bcomm = bcomm && lhs == rhs;
    homotopy = homotopy && is_zero(morita_homotopy_defect(a, m.r, ak).coords);
  }
  expect(rep.b_commutes, bcomm, "B I differs from I B on H_0 classes");
  expect(rep.chain_homotopy, homotopy, "chain homotopy correction does not reproduce B I - I B");

  const StructureTables& st = se.tables();
  const StructureTables& tt = te.tables();
  bool bracket = rep.t_bijective && rep.i_bijective;
  bool form = bracket;
  for (std::size_t p = 0; p < st.dim && bracket; ++p) {
    for (std::size_t q = 0; q < st.dim; ++q) {
      const QVector mp = m.e_map.row_vector(p);
      const QVector mq = m.e_map.row_vector(q);
      bracket = bracket && m.e_map.left_apply(st.bracket[p * st.dim + q]) == tt.bracket_of(mp, mq);
      form = form && m.phi.left_apply(st.form[p * st.dim + q]) == tt.form_of(mp, mq);
    }
  }
  expect(rep.bracket_preserved, bracket, "T + I does not preserve the Courant bracket");
  expect(rep.form_preserved, form, "T + I does not preserve the form up to phi");

  bool kernel = true;
  const QMatrix& js = m.eps_source->kernel();
  for (std::size_t k = 0; k < js.rows(); ++k) {
    const QVector img = m.e_map.left_apply(js.row(k));
    kernel = kernel && is_zero(m.eps_target->project(img));
  }
  expect(rep.kernel_mapped, kernel, "T + I does not map J(A) into J(M_r(A))");

  expect(rep.eps_bijective, bijective(m.eps_map), "induced map on eps is not a bijection");
  const StructureTables& se_t = m.eps_source->tables();
  const StructureTables& te_t = m.eps_target->tables();
  bool eb = rep.eps_bijective;
  bool ef = eb;
  for (std::size_t p = 0; p < se_t.dim && eb; ++p) {
    for (std::size_t q = 0; q < se_t.dim; ++q) {
      const QVector mp = m.eps_map.row_vector(p);
      const QVector mq = m.eps_map.row_vector(q);
      eb = eb && m.eps_map.left_apply(se_t.bracket[p * se_t.dim + q]) == te_t.bracket_of(mp, mq);
      ef = ef && m.phi.left_apply(se_t.form[p * se_t.dim + q]) == te_t.form_of(mp, mq);
    }
  }
  expect(rep.eps_bracket_preserved, eb, "induced map on eps does not preserve the bracket");
  expect(rep.eps_form_preserved, ef, "induced map on eps does not preserve the form up to phi");
  return rep;
}

TransportResult transport_dirac(const MoritaMaps& m, const Submodule& l) {
  if (l.ambient != Ambient::Epsilon || l.basis.cols() != m.eps_source->dim())
    throw InputError("transport expects a submodule of eps(A)");
  QMatrix img(0, m.eps_target->dim());
  for (std::size_t k = 0; k < l.basis.rows(); ++k) img.append_row(m.eps_map.left_apply(l.basis.row(k)));
  TransportResult r;
  r.image = make_submodule(Ambient::Epsilon, img);
  r.verdict = is_dirac(*m.eps_target, r.image);
  return r;
}

OppositeReport verify_opposite(const AlgebraPtr& a, const Guard& guard) {
  const ESpacePtr e = make_espace(a, guard);
  const ESpacePtr eo = make_espace(opposite_algebra(*a), guard);
  OppositeReport rep;
  rep.dim_e = e->dim();
  rep.dims_match = e->h1_dim() == eo->h1_dim() && e->h_1_dim() == eo->h_1_dim() && e->h0_dim() == eo->h0_dim();
  if (!rep.dims_match) return rep;
  const LowDegree& s = e->presentations();
  const LowDegree& t = eo->presentations();
  QMatrix tm(0, eo->h1_dim());
  for (std::size_t k = 0; k < e->h1_dim(); ++k)
    tm.append_row(t.coh1.reduce_checked(cochain_to_vector(s.derivation_rep(unit_vector(e->h1_dim(), k)))));
  QMatrix im(0, eo->h_1_dim());
  for (std::size_t k = 0; k < e->h_1_dim(); ++k) im.append_row(t.h1.reduce_checked(s.h1.representative(k)));
  QMatrix phi(0, eo->h0_dim());
  for (std::size_t k = 0; k < e->h0_dim(); ++k) phi.append_row(t.h0.reduce(s.h0.representative(k)));
  const QMatrix map = block_diagonal(tm, im);
  const StructureTables& st = e->tables();
  const StructureTables& tt = eo->tables();
  rep.bracket_preserved = bijective(map) && bijective(phi);
  rep.form_preserved = rep.bracket_preserved;
  for (std::size_t p = 0; p < st.dim; ++p) {
    for (std::size_t q = 0; q < st.dim; ++q) {
      const QVector mp = map.row_vector(p);
      const QVector mq = map.row_vector(q);
      if (map.left_apply(st.bracket[p * st.dim + q]) != tt.bracket_of(mp, mq)) rep.bracket_preserved = false;
      if (phi.left_apply(st.form[p * st.dim + q]) != tt.form_of(mp, mq)) rep.form_preserved = false;
    }
  }
  return rep;
}

}  // namespace hcc
