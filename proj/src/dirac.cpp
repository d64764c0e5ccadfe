#include "hccourant/dirac.hpp"

#include <sstream>

#include "hccourant/errors.hpp"
#include "hccourant/random.hpp"

namespace hcc {

const char* ambient_name(Ambient a) { return a == Ambient::E ? "E" : "epsilon"; }

Submodule make_submodule(Ambient ambient, const QMatrix& spanning) { return {ambient, row_basis(spanning)}; }

const StructureTables& ambient_tables(const EpsilonSpace& eps, Ambient ambient) {
  return ambient == Ambient::E ? eps.espace().tables() : eps.tables();
}

bool is_isotropic(const StructureTables& t, const QMatrix& l) {
  for (std::size_t i = 0; i < l.rows(); ++i)
    for (std::size_t j = i; j < l.rows(); ++j)
      if (!is_zero(t.form_of(l.row(i), l.row(j)))) return false;
  return true;
}

QMatrix orthogonal(const StructureTables& t, const QMatrix& l) {
  if (l.rows() == 0) return QMatrix::identity(t.dim);
  // Column (i, h) of c holds the h-th H_0 coordinate of (b_p, l_i).
  QMatrix c(t.dim, l.rows() * t.value_dim);
  for (std::size_t p = 0; p < t.dim; ++p) {
    const QVector bp = unit_vector(t.dim, p);
    for (std::size_t i = 0; i < l.rows(); ++i) {
      const QVector v = t.form_of(bp, l.row(i));
      for (std::size_t h = 0; h < t.value_dim; ++h) c(p, i * t.value_dim + h) = v[h];
    }
  }
  return nullspace(c.transpose());
}

bool is_maximally_isotropic(const StructureTables& t, const QMatrix& l) {
  return same_rowspan(l, orthogonal(t, l));
}

std::optional<Counterexample> closure_failure(const StructureTables& t, const QMatrix& l) {
  EchelonBasis span(t.dim);
  for (std::size_t i = 0; i < l.rows(); ++i) span.add(l.row(i));
  for (std::size_t i = 0; i < l.rows(); ++i) {
    for (std::size_t j = 0; j < l.rows(); ++j) {
      QVector v = t.bracket_of(l.row(i), l.row(j));
      if (!span.contains(v)) return Counterexample{i, j, std::move(v)};
    }
  }
  return std::nullopt;
}

bool is_bracket_closed(const StructureTables& t, const QMatrix& l) { return !closure_failure(t, l).has_value(); }

bool is_center_stable(const StructureTables& t, const QMatrix& l) {
  EchelonBasis span(t.dim);
  for (std::size_t i = 0; i < l.rows(); ++i) span.add(l.row(i));
  for (std::size_t k = 0; k < t.center_action.size(); ++k)
    for (std::size_t i = 0; i < l.rows(); ++i)
      if (!span.contains(t.center_multiply(k, l.row(i)))) return false;
  return true;
}

DiracVerdict evaluate_submodule(const StructureTables& t, const Submodule& l) {
  if (l.basis.cols() != t.dim) throw InputError("submodule vectors do not match the ambient dimension");
  DiracVerdict v;
  v.ambient = l.ambient;
  v.dim = l.dim();
  v.isotropic = is_isotropic(t, l.basis);
  v.maximal = v.isotropic && is_maximally_isotropic(t, l.basis);
  v.counterexample = closure_failure(t, l.basis);
  v.closed = !v.counterexample.has_value();
  v.dirac = v.maximal && v.closed;
  v.z_stable = is_center_stable(t, l.basis);
  return v;
}

DiracVerdict is_dirac(const EpsilonSpace& eps, const Submodule& l) {
  if (eps.dim() == 0) throw InputError("eps(A) = 0: Dirac structures are not defined in the degenerate case");
  if (l.ambient != Ambient::Epsilon) throw InputError("is_dirac expects a submodule of eps(A)");
  return evaluate_submodule(eps.tables(), l);
}

QVector BracketTable::apply(std::span<const Rational> a, std::span<const Rational> b) const {
  const std::size_t d = dim();
  QVector out(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (sgn(b[j]) == 0) continue;
      axpy(a[i] * b[j], at(i, j), out);
    }
  }
  return out;
}

BracketTable zero_table(const AlgebraPtr& a) {
  return {a, std::vector<QVector>(a->dim() * a->dim(), QVector(a->dim()))};
}

BracketTable table_from_vector(const AlgebraPtr& a, std::span<const Rational> v) {
  const std::size_t d = a->dim();
  if (v.size() != d * d * d) throw InputError("bracket table vector has the wrong length");
  BracketTable t{a, {}};
  for (std::size_t p = 0; p < d * d; ++p) t.entries.emplace_back(v.begin() + static_cast<long>(p * d), v.begin() + static_cast<long>((p + 1) * d));
  return t;
}

QVector table_to_vector(const BracketTable& t) {
  QVector v;
  for (const auto& e : t.entries) v.insert(v.end(), e.begin(), e.end());
  return v;
}

std::string biderivation_violation(const BracketTable& t) {
  const FiniteAlgebra& a = *t.algebra;
  const std::size_t d = a.dim();
  if (t.entries.size() != d * d) return "table does not have d*d entries";
  for (const auto& e : t.entries)
    if (e.size() != d) return "table entry has the wrong length";
  for (std::size_t i = 0; i < d; ++i) {
    const QVector ei = unit_vector(d, i);
    for (std::size_t j = 0; j < d; ++j) {
      const QVector ej = unit_vector(d, j);
      for (std::size_t k = 0; k < d; ++k) {
        const QVector ek = unit_vector(d, k);
        const QVector jk = a.multiply(ej, ek);
        // {e_i, e_j e_k} = {e_i, e_j} e_k + e_j {e_i, e_k}
        QVector lhs = t.apply(ei, jk);
        QVector rhs = add(a.multiply(t.at(i, j), ek), a.multiply(ej, t.at(i, k)));
        if (lhs != rhs) {
          std::ostringstream os;
          os << "second-slot Leibniz rule fails at (" << i << "," << j << "," << k << ")";
          return os.str();
        }
        // {e_j e_k, e_i} = {e_j, e_i} e_k + e_j {e_k, e_i}
        lhs = t.apply(jk, ei);
        rhs = add(a.multiply(t.at(j, i), ek), a.multiply(ej, t.at(k, i)));
        if (lhs != rhs) {
          std::ostringstream os;
          os << "first-slot Leibniz rule fails at (" << i << "," << j << "," << k << ")";
          return os.str();
        }
      }
    }
  }
  return {};
}

bool is_biderivation(const BracketTable& t) { return biderivation_violation(t).empty(); }

bool is_skew(const BracketTable& t) {
  const std::size_t d = t.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j)
      if (add(t.at(i, j), t.at(j, i)) != QVector(d)) return false;
  return true;
}

bool satisfies_jacobi(const BracketTable& t) {
  const std::size_t d = t.dim();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        QVector s = t.apply(t.at(i, j), unit_vector(d, k));
        s = add(s, t.apply(t.at(j, k), unit_vector(d, i)));
        s = add(s, t.apply(t.at(k, i), unit_vector(d, j)));
        if (!is_zero(s)) return false;
      }
    }
  }
  return true;
}

bool is_poisson(const BracketTable& t) { return is_skew(t) && satisfies_jacobi(t); }

QMatrix biderivation_space(const FiniteAlgebra& a) {
  const std::size_t d = a.dim();
  const std::size_t unknowns = d * d * d;
  auto var = [d](std::size_t i, std::size_t j, std::size_t m) { return (i * d + j) * d + m; };
  QMatrix c(0, unknowns);
  QVector row(unknowns);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        for (int side = 0; side < 2; ++side) {
          // Output coordinate m of the identity; each term is linear in the unknowns.
          for (std::size_t m = 0; m < d; ++m) {
            std::fill(row.begin(), row.end(), Rational(0));
            for (const Term& jk : a.product_terms(j, k)) {
              // {e_i, e_j e_k} or {e_j e_k, e_i}
              row[side == 0 ? var(i, jk.index, m) : var(jk.index, i, m)] += jk.coeff;
            }
            for (std::size_t s = 0; s < d; ++s) {
              // {e_i,e_j}_s e_s e_k  (or {e_j,e_i}_s)
              for (const Term& sk : a.product_terms(s, k))
                if (sk.index == m) row[side == 0 ? var(i, j, s) : var(j, i, s)] -= sk.coeff;
              // e_j {e_i,e_k}_s e_s  (or {e_k,e_i}_s)
              for (const Term& js : a.product_terms(j, s))
                if (js.index == m) row[side == 0 ? var(i, k, s) : var(k, i, s)] -= js.coeff;
            }
            if (!is_zero(row)) c.append_row(row);
          }
        }
      }
    }
  }
  if (c.rows() == 0) return QMatrix::identity(unknowns);
  return nullspace(c);
}

QMatrix hamiltonian(const BracketTable& t, const Chain& c) {
  const FiniteAlgebra& a = *t.algebra;
  const std::size_t d = a.dim();
  if (c.degree != 1 || c.coords.size() != d * d) throw InputError("hamiltonian expects a degree-1 chain");
  QMatrix h(d, d);
  for (std::size_t p = 0; p < d; ++p) {
    for (std::size_t q = 0; q < d; ++q) {
      const Rational& coeff = c.coords[p * d + q];
      if (sgn(coeff) == 0) continue;
      const QVector ep = unit_vector(d, p);
      for (std::size_t j = 0; j < d; ++j) {
        const QVector col = a.multiply(ep, t.at(q, j));
        for (std::size_t i = 0; i < d; ++i) h(i, j) += coeff * col[i];
      }
    }
  }
  return h;
}

QMatrix h1_summand(const ESpace& e) {
  QMatrix m(0, e.dim());
  for (std::size_t k = 0; k < e.h1_dim(); ++k) m.append_row(unit_vector(e.dim(), k));
  return m;
}

QMatrix h_1_summand(const ESpace& e) {
  QMatrix m(0, e.dim());
  for (std::size_t k = 0; k < e.h_1_dim(); ++k) m.append_row(unit_vector(e.dim(), e.h1_dim() + k));
  return m;
}

Submodule project_submodule(const EpsilonSpace& eps, const QMatrix& rows_in_e) {
  QMatrix m(0, eps.dim());
  for (std::size_t k = 0; k < rows_in_e.rows(); ++k) m.append_row(eps.project(rows_in_e.row(k)));
  return make_submodule(Ambient::Epsilon, m);
}

QMatrix preimage(const EpsilonSpace& eps, const Submodule& l) {
  if (l.ambient != Ambient::Epsilon) throw InputError("preimage expects a submodule of eps(A)");
  QMatrix m = eps.kernel();
  if (m.rows() == 0) m = QMatrix(0, eps.espace().dim());
  for (std::size_t k = 0; k < l.basis.rows(); ++k) m.append_row(eps.lift(l.basis.row(k)));
  return row_basis(m);
}

PoissonGraph poisson_graph(const EpsilonSpace& eps, const BracketTable& t) {
  const ESpace& e = eps.espace();
  const FiniteAlgebra& a = e.algebra();
  if (!a.is_commutative()) throw InputError("poisson graphs require a commutative algebra");
  if (t.algebra->dim() != a.dim()) throw InputError("bracket table does not match the algebra dimension");
  const std::string bad = biderivation_violation(t);
  if (!bad.empty()) throw InputError("bracket table is not a biderivation: " + bad);
  const LowDegree& ld = e.presentations();
  for (std::size_t k = 0; k < ld.h1.boundary_basis().rows(); ++k) {
    const QMatrix h = hamiltonian(t, {1, ld.h1.boundary_basis().row_vector(k)});
    if (!h.is_zero()) throw InvariantError("hamiltonian map does not vanish on boundaries");
  }
  PoissonGraph g;
  g.in_e = QMatrix(0, e.dim());
  for (std::size_t k = 0; k < e.h_1_dim(); ++k) {
    const QMatrix h = hamiltonian(t, {1, ld.h1.representative(k)});
    if (!is_derivation(a, h)) throw InvariantError("hamiltonian image is not a derivation");
    QVector alpha = unit_vector(e.h_1_dim(), k);
    g.in_e.append_row(e.flatten({ld.coh1.reduce_checked(cochain_to_vector(h)), alpha}));
  }
  g.in_eps = project_submodule(eps, g.in_e);
  return g;
}

TwoFormContext two_form_context(const ESpacePtr& e, const Guard& guard) {
  const FiniteAlgebra& a = e->algebra();
  return {e, homology(a, 2, guard), homology(a, 3, guard.with_degree3())};
}

namespace {

/// Row k: H_3 class of B(rep_k), then H_0 classes of the symmetrized double
/// interior i_X i_Y + i_Y i_X over derivation pairs.
QMatrix two_form_conditions(const TwoFormContext& ctx) {
  const ESpace& e = *ctx.e;
  const FiniteAlgebra& a = e.algebra();
  const LowDegree& ld = e.presentations();
  const std::size_t n1 = e.h1_dim();
  std::vector<QMatrix> x;
  for (std::size_t k = 0; k < n1; ++k) x.push_back(ld.derivation_rep(unit_vector(n1, k)));
  const std::size_t pairs = n1 * (n1 + 1) / 2;
  QMatrix c(ctx.h2.dim(), ctx.h3.dim() + pairs * ld.h0.dim());
  for (std::size_t k = 0; k < ctx.h2.dim(); ++k) {
    const Chain w{2, ctx.h2.representative(k)};
    const QVector bw = ctx.h3.reduce_checked(connes_B(a, w).coords);
    for (std::size_t m = 0; m < bw.size(); ++m) c(k, m) = bw[m];
    std::size_t col = ctx.h3.dim();
    for (std::size_t p = 0; p < n1; ++p) {
      for (std::size_t q = p; q < n1; ++q) {
        const Chain s = apply_interior(a, x[p], apply_interior(a, x[q], w)) +
                        apply_interior(a, x[q], apply_interior(a, x[p], w));
        const QVector h = ld.h0.reduce(s.coords);
        for (std::size_t m = 0; m < h.size(); ++m) c(k, col + m) = h[m];
        col += ld.h0.dim();
      }
    }
  }
  return c;
}

}  // namespace

TwoFormCheck check_two_form(const TwoFormContext& ctx, std::span<const Rational> omega) {
  const ESpace& e = *ctx.e;
  const FiniteAlgebra& a = e.algebra();
  const LowDegree& ld = e.presentations();
  if (omega.size() != ctx.h2.dim()) throw InputError("omega has the wrong number of H_2 coordinates");
  TwoFormCheck r;
  const Chain w{2, ctx.h2.representative(omega)};
  r.closed = ctx.h3.is_boundary(connes_B(a, w).coords);
  r.alternating = true;
  for (std::size_t p = 0; p < e.h1_dim() && r.alternating; ++p) {
    const QMatrix xp = ld.derivation_rep(unit_vector(e.h1_dim(), p));
    for (std::size_t q = p; q < e.h1_dim(); ++q) {
      const QMatrix xq = ld.derivation_rep(unit_vector(e.h1_dim(), q));
      const Chain s = apply_interior(a, xp, apply_interior(a, xq, w)) + apply_interior(a, xq, apply_interior(a, xp, w));
      if (!is_zero(ld.h0.reduce(s.coords))) {
        r.alternating = false;
        std::ostringstream os;
        os << "i_X i_Y omega + i_Y i_X omega is nonzero in H_0 for derivation classes " << p << ", " << q;
        r.reason = os.str();
        break;
      }
    }
  }
  if (!r.closed) r.reason = "B(omega) is not a boundary";
  return r;
}

QMatrix closed_two_forms(const TwoFormContext& ctx) {
  if (ctx.h2.dim() == 0) return QMatrix(0, 0);
  return nullspace(two_form_conditions(ctx).transpose());
}

TwoFormGraph two_form_graph(const EpsilonSpace& eps, const TwoFormContext& ctx, std::span<const Rational> omega) {
  if (eps.dim() == 0) throw InputError("eps(A) = 0: Dirac structures are not defined in the degenerate case");
  const TwoFormCheck check = check_two_form(ctx, omega);
  if (!check.ok()) throw InputError("omega rejected: " + check.reason);
  const ESpace& e = eps.espace();
  const LowDegree& ld = e.presentations();
  const Chain w{2, ctx.h2.representative(omega)};
  TwoFormGraph g;
  g.in_e = QMatrix(0, e.dim());
  for (std::size_t k = 0; k < e.h1_dim(); ++k) {
    const QVector x = unit_vector(e.h1_dim(), k);
    const Chain ixw = apply_interior(e.algebra(), ld.derivation_rep(x), w);
    g.in_e.append_row(e.flatten({x, ld.h1.reduce_checked(ixw.coords)}));
  }
  g.in_eps = project_submodule(eps, g.in_e);
  g.verdict = is_dirac(eps, g.in_eps);
  return g;
}

TwoFormSearch search_two_forms(const TwoFormContext& ctx, std::mt19937_64& rng, std::size_t grid_limit,
                               std::size_t random_draws) {
  TwoFormSearch s;
  const std::size_t k = ctx.h2.dim();
  s.solution_dim = closed_two_forms(ctx).rows();
  if (k == 0) return s;
  const QMatrix c = two_form_conditions(ctx);
  auto consider = [&](const QVector& w) {
    if (s.witness || is_zero(w)) return;
    if (!is_zero(c.left_apply(w))) return;
    if (check_two_form(ctx, w).ok()) s.witness = w;
  };
  // Grid {-1,0,1}^k by increasing support size, positions and signs in
  // lexicographic order.
  QVector w(k);
  std::vector<std::size_t> pos;
  for (std::size_t weight = 1; weight <= k && s.grid_points < grid_limit && !s.witness; ++weight) {
    pos.resize(weight);
    for (std::size_t i = 0; i < weight; ++i) pos[i] = i;
    for (;;) {
      for (std::size_t signs = 0; signs < (std::size_t{1} << weight) && s.grid_points < grid_limit && !s.witness;
           ++signs) {
        std::fill(w.begin(), w.end(), Rational(0));
        for (std::size_t i = 0; i < weight; ++i) w[pos[i]] = (signs >> i) & 1 ? -1 : 1;
        consider(w);
        ++s.grid_points;
      }
      if (s.grid_points >= grid_limit || s.witness) break;
      std::size_t i = weight;
      while (i > 0 && pos[i - 1] == k - weight + i - 1) --i;
      if (i == 0) break;
      ++pos[i - 1];
      for (std::size_t j = i; j < weight; ++j) pos[j] = pos[j - 1] + 1;
    }
  }
  for (std::size_t r = 0; r < random_draws && !s.witness; ++r, ++s.random_points) consider(random_vector(rng, k));
  return s;
}

AlgebroidReport lie_algebroid_check(const EpsilonSpace& eps, const Submodule& l, std::mt19937_64& rng,
                                    std::size_t random_centrals) {
  AlgebroidReport r;
  auto expect = [&](bool cond, const std::string& what) {
    ++r.checks;
    if (!cond) r.failures.push_back(what);
  };
  const ESpace& e = eps.espace();
  const StructureTables& et = e.tables();
  const StructureTables& t = eps.tables();
  const QMatrix& zb = e.presentations().center;

  std::vector<QVector> zs;
  for (std::size_t k = 0; k < zb.rows(); ++k) zs.push_back(zb.row_vector(k));
  for (std::size_t k = 0; k < random_centrals && zb.rows() > 0; ++k) zs.push_back(random_combination(rng, zb));

  const QMatrix pre = preimage(eps, l);
  auto sigma = [&](std::span<const Rational> u, std::span<const Rational> z) {
    return center_action(e, e.split(u).x, z);
  };
  for (std::size_t i = 0; i < pre.rows(); ++i) {
    for (std::size_t j = 0; j < pre.rows(); ++j) {
      const QVector bij = et.bracket_of(pre.row(i), pre.row(j));
      for (const QVector& z : zs) {
        const QVector lhs = sigma(bij, z);
        const QVector rhs = sub(sigma(pre.row(i), sigma(pre.row(j), z)), sigma(pre.row(j), sigma(pre.row(i), z)));
        expect(lhs == rhs, "anchor is not a bracket morphism on p^-1(L)");
        const EElement lj = e.split(pre.row(j));
        const QVector zl = e.flatten(courant_bracket(e, e.split(pre.row(i)), center_multiply(e, z, lj)));
        const QVector expected = add(e.flatten(center_multiply(e, z, e.split(bij))),
                                     e.flatten(center_multiply(e, sigma(pre.row(i), z), lj)));
        expect(zl == expected, "anchor Leibniz rule fails on p^-1(L)");
      }
    }
  }
  const QMatrix& b = l.basis;
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.rows(); ++j) {
      expect(is_zero(add(t.bracket_of(b.row(i), b.row(j)), t.bracket_of(b.row(j), b.row(i)))),
             "bracket on L is not skew");
      for (std::size_t k = 0; k < b.rows(); ++k) {
        QVector s = t.bracket_of(b.row(i), t.bracket_of(b.row(j), b.row(k)));
        s = add(s, t.bracket_of(b.row(j), t.bracket_of(b.row(k), b.row(i))));
        s = add(s, t.bracket_of(b.row(k), t.bracket_of(b.row(i), b.row(j))));
        expect(is_zero(s), "bracket on L fails the Jacobi identity");
      }
    }
  }
  return r;
}

}  // namespace hcc
