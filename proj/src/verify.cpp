#include "hccourant/verify.hpp"

#include <cstdio>

#include "hccourant/errors.hpp"
#include "hccourant/random.hpp"

namespace hcc {

void Tally::record(bool ok, const std::string& what) {
  ++cases;
  if (!ok) {
    if (failures == 0) first_failure = what;
    ++failures;
  }
}

bool TallyReport::ok() const {
  for (const auto& t : tallies)
    if (!t.ok()) return false;
  return true;
}

const Tally* TallyReport::find(const std::string& name) const {
  for (const auto& t : tallies)
    if (t.name == name) return &t;
  return nullptr;
}

namespace {

std::string numbered(const std::string& prefix, std::size_t k) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04zu", k);
  return prefix + "-" + buf;
}

}  // namespace

TallyReport boundary_squares(const FiniteAlgebra& a, std::size_t max_degree, const Guard& guard) {
  TallyReport r;
  Tally t("b_squared_zero");
  const Guard g = max_degree >= 3 ? guard.with_degree3() : guard;
  for (std::size_t n = 1; n <= max_degree; ++n) {
    check_guard(a, n, g);
    const QMatrix bb = boundary_matrix(a, n) * boundary_matrix(a, n + 1);
    t.record(bb.is_zero(), "b o b != 0 from degree " + std::to_string(n + 1));
  }
  r.tallies.push_back(std::move(t));
  return r;
}

TallyReport operator_identities(const AlgebraPtr& ap, std::mt19937_64& rng, std::size_t draws, const Guard& guard) {
  const FiniteAlgebra& a = *ap;
  const std::size_t d = a.dim();
  const LowDegree ld = low_degree(ap, guard);
  const HomologyPresentation h2 = homology(a, 2, guard);
  const QMatrix& der = ld.coh1.cycle_basis();
  Tally cartan1("cartan_lie");
  Tally cartan2("cartan_interior");
  Tally homotopy("homotopy_stated_sign");
  Tally homotopy_neg("homotopy_sign_minus_one");
  Tally lie_h1("lie_equals_Bi_plus_iB_H1");
  Tally lie_h2("lie_equals_Bi_plus_iB_H2", false);

  auto random_derivation = [&]() { return cochain_from_vector(d, random_combination(rng, der)); };
  for (std::size_t k = 0; k < draws; ++k) {
    const QMatrix x = random_derivation();
    const QMatrix y = random_derivation();
    const QVector ap_elem = random_vector(rng, d);
    const QMatrix inner = inner_derivation(a, ap_elem);
    const QMatrix xy = commutator(x, y);
    for (std::size_t n = 0; n <= 2; ++n) {
      const Chain c{n, random_vector(rng, chain_dim(d, n))};
      const std::string at = " (draw " + std::to_string(k) + ", degree " + std::to_string(n) + ")";
      cartan1.record(apply_lie(a, xy, c) == apply_lie(a, x, apply_lie(a, y, c)) - apply_lie(a, y, apply_lie(a, x, c)),
                     "L_[X,Y] != [L_X, L_Y]" + at);
      if (n == 0) continue;
      cartan2.record(apply_interior(a, xy, c) ==
                         apply_lie(a, x, apply_interior(a, y, c)) - apply_interior(a, y, apply_lie(a, x, c)),
                     "i_[X,Y] != L_X i_Y - i_Y L_X" + at);
      const Chain lhs = left_multiply_chain(a, ap_elem, boundary_b(a, c)) - boundary_b(a, left_multiply_chain(a, ap_elem, c));
      const Chain ia = apply_interior(a, inner, c);
      const Rational stated = (n + 1) % 2 == 0 ? 1 : -1;
      homotopy.record(lhs == stated * ia, "h b - b h != (-1)^{n+1} i_[a',.]" + at);
      homotopy_neg.record(lhs == Rational(-1) * ia, "h b - b h != -i_[a',.]" + at);
    }
    if (ld.h1.dim() > 0) {
      const Chain alpha{1, ld.h1.representative(random_vector(rng, ld.h1.dim()))};
      const QVector lhs = ld.h1.reduce_checked(apply_lie(a, x, alpha).coords);
      const Chain rhs = connes_B(a, apply_interior(a, x, alpha)) + apply_interior(a, x, connes_B(a, alpha));
      lie_h1.record(lhs == ld.h1.reduce_checked(rhs.coords), "L_X != B i_X + i_X B on H_1 (draw " + std::to_string(k) + ")");
    }
    if (h2.dim() > 0) {
      const Chain w{2, h2.representative(random_vector(rng, h2.dim()))};
      const QVector lhs = h2.reduce_checked(apply_lie(a, x, w).coords);
      const Chain rhs = connes_B(a, apply_interior(a, x, w)) + apply_interior(a, x, connes_B(a, w));
      lie_h2.record(h2.is_cycle(rhs.coords) && lhs == h2.reduce(rhs.coords),
                     "L_X != B i_X + i_X B on H_2 (draw " + std::to_string(k) + ")");
    }
  }
  TallyReport r;
  r.tallies = {cartan1, cartan2, homotopy, homotopy_neg, lie_h1, lie_h2};
  return r;
}

TallyReport courant_axioms(const ESpace& e, std::mt19937_64& rng, std::size_t draws) {
  Tally basis("axioms_basis_triples");
  Tally random("axioms_random_triples");
  Tally skew("skew_bracket_antisymmetric");
  const QMatrix& zb = e.presentations().center;
  const std::size_t n = e.dim();
  auto run = [&](Tally& t, const EElement& e1, const EElement& e2, const EElement& e3, const std::string& at) {
    const AxiomReport r = check_axioms(e, e1, e2, e3, random_combination(rng, zb));
    t.record(r.ok(), r.ok() ? std::string() : r.failures.front() + at);
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        run(basis, e.basis_element(i), e.basis_element(j), e.basis_element(k),
            " at basis (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")");
  if (n > 0) {
    for (std::size_t k = 0; k < draws; ++k) {
      const EElement e1 = e.split(random_vector(rng, n));
      const EElement e2 = e.split(random_vector(rng, n));
      const EElement e3 = e.split(random_vector(rng, n));
      run(random, e1, e2, e3, " at draw " + std::to_string(k));
      skew.record(skew_bracket(e, e1, e2) == Rational(-1) * skew_bracket(e, e2, e1),
                  "skew bracket not antisymmetric at draw " + std::to_string(k));
    }
  }
  TallyReport r;
  r.tallies = {basis, random, skew};
  return r;
}

namespace {

void set_skew(MuTable& mu, std::size_t i, std::size_t j, std::size_t k, const Rational& c) {
  mu.entries[i * mu.n + j][k] += c;
  mu.entries[j * mu.n + i][k] -= c;
}

}  // namespace

MuTable so3_mu() {
  MuTable mu = zero_mu(3);
  set_skew(mu, 0, 1, 2, 1);
  set_skew(mu, 1, 2, 0, 1);
  set_skew(mu, 2, 0, 1, 1);
  return mu;
}

MuTable non_jacobi_mu() {
  MuTable mu = zero_mu(3);
  set_skew(mu, 0, 1, 2, 1);
  set_skew(mu, 2, 0, 0, 1);
  return mu;
}

MuTable cyclic_pair_mu() {
  MuTable mu = zero_mu(3);
  set_skew(mu, 0, 1, 2, 1);
  set_skew(mu, 1, 2, 0, 1);
  return mu;
}

std::vector<std::pair<std::string, MuTable>> structured_lie_brackets(std::size_t n) {
  std::vector<std::pair<std::string, MuTable>> out;
  out.emplace_back("abelian", zero_mu(n));
  if (n == 2) {
    MuTable aff = zero_mu(2);
    set_skew(aff, 0, 1, 1, 1);
    out.emplace_back("affine", aff);
  } else if (n == 3) {
    MuTable heis = zero_mu(3);
    set_skew(heis, 0, 1, 2, 1);
    out.emplace_back("heisenberg", heis);
    out.emplace_back("so3", so3_mu());
    MuTable sl2 = zero_mu(3);  // v1 = h, v2 = e, v3 = f
    set_skew(sl2, 0, 1, 1, 2);
    set_skew(sl2, 0, 2, 2, -2);
    set_skew(sl2, 1, 2, 0, 1);
    out.emplace_back("sl2", sl2);
    MuTable r3 = zero_mu(3);
    set_skew(r3, 2, 0, 0, 1);
    set_skew(r3, 2, 1, 1, 1);
    out.emplace_back("r3", r3);
    out.emplace_back("cyclic_pair", cyclic_pair_mu());
  }
  return out;
}

MuTable conjugate_mu(const MuTable& mu, const QMatrix& g) {
  const std::size_t n = mu.n;
  const QMatrix gi = inverse(g);
  MuTable out = zero_mu(n);
  // mu'(x, y) = g mu(g^-1 x, g^-1 y) on basis vectors
  for (std::size_t i = 0; i < n; ++i) {
    const QVector xi = gi.column_vector(i);
    for (std::size_t j = 0; j < n; ++j) {
      const QVector yj = gi.column_vector(j);
      QVector m(n);
      for (std::size_t p = 0; p < n; ++p) {
        if (sgn(xi[p]) == 0) continue;
        for (std::size_t q = 0; q < n; ++q)
          if (sgn(yj[q]) != 0) axpy(xi[p] * yj[q], mu.at(p, q), m);
      }
      out.entries[i * n + j] = g.apply(m);
    }
  }
  return out;
}

std::vector<std::pair<std::string, MuTable>> mu_corpus(std::size_t n, std::mt19937_64& rng, std::size_t random_count) {
  std::vector<std::pair<std::string, MuTable>> out;
  const auto lie = structured_lie_brackets(n);
  for (std::size_t k = 0; k < random_count; ++k) {
    MuTable mu = zero_mu(n);
    switch (k % 4) {
      case 0:
        for (auto& v : mu.entries) v = random_vector(rng, n);
        out.emplace_back(numbered("general", k), std::move(mu));
        break;
      case 1:
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t m = 0; m < n; ++m) set_skew(mu, i, j, m, random_rational(rng));
        out.emplace_back(numbered("skew", k), std::move(mu));
        break;
      case 2: {
        const auto& base = lie[rng() % lie.size()].second;
        MuTable c = conjugate_mu(base, random_invertible(rng, n));
        const Rational s = random_rational(rng);
        for (auto& v : c.entries) v = scale(s, v);
        out.emplace_back(numbered("lie-conjugate", k), std::move(c));
        break;
      }
      default: {
        // Sum of two conjugated Lie brackets: skew, usually not Jacobi.
        const MuTable p = conjugate_mu(lie[rng() % lie.size()].second, random_invertible(rng, n));
        const MuTable q = conjugate_mu(lie[rng() % lie.size()].second, random_invertible(rng, n));
        for (std::size_t i = 0; i < n * n; ++i) mu.entries[i] = add(p.entries[i], q.entries[i]);
        out.emplace_back(numbered("lie-sum", k), std::move(mu));
        break;
      }
    }
  }
  for (const auto& [name, mu] : lie) out.emplace_back("structured-" + name, mu);
  if (n == 3) out.emplace_back("structured-non-jacobi", non_jacobi_mu());
  MuTable diag = zero_mu(n);
  diag.entries[0][0] = 1;
  out.emplace_back("structured-non-skew", diag);
  return out;
}

std::vector<NamedTable> poisson_corpus(const AlgebraPtr& a, std::mt19937_64& rng, std::size_t random_count) {
  std::vector<NamedTable> out;
  const std::size_t d = a->dim();
  const bool v1 = d >= 2 && a->name() == "V[1] n=" + std::to_string(d - 1);
  if (v1) {
    for (auto& [name, mu] : mu_corpus(d - 1, rng, random_count)) out.push_back({name, mu_to_table(a, mu)});
    return out;
  }
  const QMatrix basis = biderivation_space(*a);
  for (std::size_t k = 0; k < random_count; ++k) {
    BracketTable t = table_from_vector(a, random_combination(rng, basis));
    if (k % 2 == 1) {
      BracketTable s = t;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) s.entries[i * d + j] = scale(Rational(1, 2), sub(t.at(i, j), t.at(j, i)));
      out.push_back({numbered("skew", k), std::move(s)});
    } else {
      out.push_back({numbered("general", k), std::move(t)});
    }
  }
  out.push_back({"structured-zero", zero_table(a)});
  return out;
}

PoissonSweep poisson_sweep(const EpsilonSpace& eps, const std::vector<NamedTable>& corpus) {
  PoissonSweep s;
  const StructureTables& et = eps.espace().tables();
  for (const auto& nt : corpus) {
    const PoissonGraph g = poisson_graph(eps, nt.table);
    const bool dirac = is_dirac(eps, g.in_eps).dirac;
    const bool poisson = is_poisson(nt.table);
    ++s.tables;
    if (poisson) ++s.poisson;
    if (dirac != poisson) {
      ++s.disagreements;
      s.disagreeing.push_back(nt.name);
    }
    if (is_skew(nt.table)) {
      const bool iso_e = is_isotropic(et, g.in_e) && is_maximally_isotropic(et, g.in_e);
      const bool iso_eps = is_isotropic(eps.tables(), g.in_eps.basis) && is_maximally_isotropic(eps.tables(), g.in_eps.basis);
      if (!iso_e || !iso_eps) ++s.skew_not_isotropic;
    }
    if (!same_rowspan(preimage(eps, g.in_eps), g.in_e)) ++s.preimage_mismatch;
  }
  return s;
}

TwoFormOutcome two_form_outcome(const EpsilonSpace& eps, std::mt19937_64& rng, const Guard& guard) {
  TwoFormOutcome o;
  const TwoFormContext ctx = two_form_context(eps.espace_ptr(), guard);
  o.h2_dim = ctx.h2.dim();
  o.zero_form_dirac = two_form_graph(eps, ctx, QVector(ctx.h2.dim())).verdict.dirac;
  o.search = search_two_forms(ctx, rng);
  if (o.search.witness) o.witness_dirac = two_form_graph(eps, ctx, *o.search.witness).verdict.dirac;
  const QMatrix basis = closed_two_forms(ctx);
  for (std::size_t k = 0; k < basis.rows(); ++k) {
    ++o.basis_checked;
    if (two_form_graph(eps, ctx, basis.row(k)).verdict.dirac) ++o.basis_dirac;
  }
  return o;
}

}  // namespace hcc
