#include "hccourant/hochschild.hpp"

#include <sstream>

#include "hccourant/errors.hpp"

namespace hcc {

void check_guard(const FiniteAlgebra& a, std::size_t degree, const Guard& guard) {
  if (degree > guard.max_degree) {
    throw GuardError("homology degree " + std::to_string(degree) + " exceeds the degree guard " +
                     std::to_string(guard.max_degree) + " (override with --degree)");
  }
  const std::size_t limit = degree >= 3 ? guard.max_dim_degree3 : guard.max_dim;
  if (a.dim() > limit) {
    throw GuardError("algebra dimension " + std::to_string(a.dim()) + " exceeds the guard " + std::to_string(limit) +
                     " for homology degree " + std::to_string(degree) + " (override with --guard)");
  }
}

std::size_t chain_dim(std::size_t d, std::size_t degree) {
  std::size_t n = 1;
  for (std::size_t i = 0; i <= degree; ++i) n *= d;
  return n;
}

std::size_t tensor_index(std::size_t d, std::span<const std::size_t> digits) {
  std::size_t idx = 0;
  for (auto t : digits) idx = idx * d + t;
  return idx;
}

std::vector<std::size_t> tensor_digits(std::size_t d, std::size_t degree, std::size_t index) {
  std::vector<std::size_t> t(degree + 1);
  for (std::size_t i = degree + 1; i-- > 0;) {
    t[i] = index % d;
    index /= d;
  }
  return t;
}

namespace {

void check_chain(const FiniteAlgebra& a, const Chain& c) {
  if (c.coords.size() != chain_dim(a.dim(), c.degree)) {
    throw InputError("chain of degree " + std::to_string(c.degree) + " has " + std::to_string(c.coords.size()) +
                     " coordinates, expected " + std::to_string(chain_dim(a.dim(), c.degree)));
  }
}

void check_cochain(const FiniteAlgebra& a, const QMatrix& x) {
  if (x.rows() != a.dim() || x.cols() != a.dim()) throw InputError("cochain must be a d x d matrix");
}

/// Visits the nonzero coordinates of c with their digit expansion.
template <typename F>
void for_each_term(const FiniteAlgebra& a, const Chain& c, F&& f) {
  const std::size_t d = a.dim();
  std::vector<std::size_t> t(c.degree + 1);
  for (std::size_t idx = 0; idx < c.coords.size(); ++idx) {
    if (sgn(c.coords[idx]) == 0) continue;
    std::size_t rest = idx;
    for (std::size_t i = c.degree + 1; i-- > 0;) {
      t[i] = rest % d;
      rest /= d;
    }
    f(t, c.coords[idx]);
  }
}

/// Sparse columns of a cochain: column j lists (r, X(r, j)) with X(r, j) != 0.
std::vector<std::vector<Term>> sparse_columns(const QMatrix& x) {
  std::vector<std::vector<Term>> cols(x.cols());
  for (std::size_t j = 0; j < x.cols(); ++j)
    for (std::size_t r = 0; r < x.rows(); ++r)
      if (sgn(x(r, j)) != 0) cols[j].push_back({r, x(r, j)});
  return cols;
}

Rational sign(std::size_t k) { return k % 2 == 0 ? Rational(1) : Rational(-1); }

}  // namespace

Chain zero_chain(const FiniteAlgebra& a, std::size_t degree) { return {degree, QVector(chain_dim(a.dim(), degree))}; }

Chain basis_chain(const FiniteAlgebra& a, std::span<const std::size_t> digits) {
  if (digits.empty()) throw InputError("basis_chain: need at least one tensor factor");
  for (auto t : digits)
    if (t >= a.dim()) throw InputError("basis_chain: basis index out of range");
  Chain c = zero_chain(a, digits.size() - 1);
  c.coords[tensor_index(a.dim(), digits)] = 1;
  return c;
}

Chain tensor_chain(const FiniteAlgebra& a, const std::vector<QVector>& factors) {
  if (factors.empty()) throw InputError("tensor_chain: need at least one tensor factor");
  const std::size_t d = a.dim();
  QVector acc{Rational(1)};
  for (const auto& f : factors) {
    if (f.size() != d) throw InputError("tensor_chain: factor length does not match algebra dimension");
    QVector next(acc.size() * d);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      if (sgn(acc[i]) == 0) continue;
      for (std::size_t j = 0; j < d; ++j)
        if (sgn(f[j]) != 0) next[i * d + j] = acc[i] * f[j];
    }
    acc = std::move(next);
  }
  return {factors.size() - 1, std::move(acc)};
}

Chain operator+(const Chain& x, const Chain& y) {
  if (x.degree != y.degree || x.coords.size() != y.coords.size()) throw InputError("chain sum: degree mismatch");
  return {x.degree, add(x.coords, y.coords)};
}

Chain operator-(const Chain& x, const Chain& y) {
  if (x.degree != y.degree || x.coords.size() != y.coords.size()) throw InputError("chain difference: degree mismatch");
  return {x.degree, sub(x.coords, y.coords)};
}

Chain operator*(const Rational& c, const Chain& x) { return {x.degree, scale(c, x.coords)}; }

Chain boundary_b(const FiniteAlgebra& a, const Chain& c) {
  check_chain(a, c);
  if (c.degree == 0) throw InputError("boundary_b: degree 0 chains have no boundary");
  const std::size_t d = a.dim();
  const std::size_t n = c.degree;
  Chain out = zero_chain(a, n - 1);
  std::vector<std::size_t> u(n);
  for_each_term(a, c, [&](const std::vector<std::size_t>& t, const Rational& coef) {
    for (std::size_t i = 0; i < n; ++i) {
      const Rational s = sign(i) * coef;
      for (const auto& term : a.product_terms(t[i], t[i + 1])) {
        std::size_t w = 0;
        for (std::size_t j = 0; j < i; ++j) u[w++] = t[j];
        u[w++] = term.index;
        for (std::size_t j = i + 2; j <= n; ++j) u[w++] = t[j];
        out.coords[tensor_index(d, u)] += s * term.coeff;
      }
    }
    const Rational s = sign(n) * coef;
    for (const auto& term : a.product_terms(t[n], t[0])) {
      u[0] = term.index;
      for (std::size_t j = 1; j < n; ++j) u[j] = t[j];
      out.coords[tensor_index(d, u)] += s * term.coeff;
    }
  });
  return out;
}

QMatrix boundary_matrix(const FiniteAlgebra& a, std::size_t degree) {
  if (degree == 0) throw InputError("boundary_matrix: degree 0 chains have no boundary");
  const std::size_t d = a.dim();
  QMatrix m(chain_dim(d, degree - 1), chain_dim(d, degree));
  for (std::size_t col = 0; col < m.cols(); ++col) {
    Chain e = zero_chain(a, degree);
    e.coords[col] = 1;
    const Chain img = boundary_b(a, e);
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (sgn(img.coords[r]) != 0) m(r, col) = img.coords[r];
  }
  return m;
}

Chain connes_B(const FiniteAlgebra& a, const Chain& c) {
  check_chain(a, c);
  const std::size_t d = a.dim();
  const std::size_t n = c.degree;
  Chain out = zero_chain(a, n + 1);
  std::vector<Term> unit_terms;
  for (std::size_t k = 0; k < d; ++k)
    if (sgn(a.unit()[k]) != 0) unit_terms.push_back({k, a.unit()[k]});
  std::vector<std::size_t> u(n + 2);
  for_each_term(a, c, [&](const std::vector<std::size_t>& t, const Rational& coef) {
    for (std::size_t i = 0; i <= n; ++i) {
      const Rational s = sign(n * i) * coef;
      // cyclic order a_i .. a_n a_0 .. a_{i-1}
      for (const auto& one : unit_terms) {
        u[0] = one.index;
        for (std::size_t j = 0; j <= n; ++j) u[j + 1] = t[(i + j) % (n + 1)];
        out.coords[tensor_index(d, u)] += s * one.coeff;
        u[0] = t[i];
        u[1] = one.index;
        for (std::size_t j = 1; j <= n; ++j) u[j + 1] = t[(i + j) % (n + 1)];
        out.coords[tensor_index(d, u)] += s * one.coeff;
      }
    }
  });
  return out;
}

Chain left_multiply_chain(const FiniteAlgebra& a, std::span<const Rational> factor, const Chain& c) {
  check_chain(a, c);
  if (factor.size() != a.dim()) throw InputError("left_multiply_chain: factor length mismatch");
  const std::size_t d = a.dim();
  Chain out = zero_chain(a, c.degree);
  std::vector<std::size_t> u(c.degree + 1);
  for_each_term(a, c, [&](const std::vector<std::size_t>& t, const Rational& coef) {
    for (std::size_t m = 0; m < d; ++m) {
      if (sgn(factor[m]) == 0) continue;
      for (const auto& term : a.product_terms(m, t[0])) {
        u = t;
        u[0] = term.index;
        out.coords[tensor_index(d, u)] += coef * factor[m] * term.coeff;
      }
    }
  });
  return out;
}

QMatrix cochain_from_vector(std::size_t d, std::span<const Rational> v) {
  if (v.size() != d * d) throw InputError("cochain_from_vector: need d^2 coordinates");
  QMatrix x(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t j = 0; j < d; ++j) x(r, j) = v[r * d + j];
  return x;
}

QVector cochain_to_vector(const QMatrix& x) { return x.data(); }

QMatrix coboundary_beta(const FiniteAlgebra& a, const QMatrix& f) {
  check_cochain(a, f);
  const std::size_t d = a.dim();
  QMatrix out(d, d * d);
  for (std::size_t i = 0; i < d; ++i) {
    const QVector ei = unit_vector(d, i);
    const QVector fi = f.column_vector(i);
    for (std::size_t j = 0; j < d; ++j) {
      const QVector ej = unit_vector(d, j);
      QVector v = a.multiply(ei, f.column_vector(j));
      axpy(-1, f.apply(a.product(i, j)), v);
      axpy(1, a.multiply(fi, ej), v);
      for (std::size_t k = 0; k < d; ++k) out(k, i * d + j) = v[k];
    }
  }
  return out;
}

bool is_derivation(const FiniteAlgebra& a, const QMatrix& x) { return coboundary_beta(a, x).is_zero(); }

QMatrix inner_derivation(const FiniteAlgebra& a, std::span<const Rational> elem) {
  return a.left_multiplication(elem) - a.right_multiplication(elem);
}

QMatrix commutator(const QMatrix& x, const QMatrix& y) { return x * y - y * x; }

Chain apply_lie(const FiniteAlgebra& a, const QMatrix& x, const Chain& c) {
  check_chain(a, c);
  check_cochain(a, x);
  const std::size_t d = a.dim();
  const auto cols = sparse_columns(x);
  Chain out = zero_chain(a, c.degree);
  std::vector<std::size_t> u(c.degree + 1);
  for_each_term(a, c, [&](const std::vector<std::size_t>& t, const Rational& coef) {
    for (std::size_t i = 0; i <= c.degree; ++i) {
      u = t;
      for (const auto& term : cols[t[i]]) {
        u[i] = term.index;
        out.coords[tensor_index(d, u)] += coef * term.coeff;
      }
    }
  });
  return out;
}

Chain apply_interior(const FiniteAlgebra& a, const QMatrix& x, const Chain& c) {
  check_chain(a, c);
  check_cochain(a, x);
  if (c.degree == 0) throw InputError("interior_product: undefined on degree 0 chains");
  const std::size_t d = a.dim();
  const std::size_t n = c.degree;
  const auto cols = sparse_columns(x);
  Chain out = zero_chain(a, n - 1);
  std::vector<std::size_t> u(n);
  const Rational s = sign(n + 1);
  for_each_term(a, c, [&](const std::vector<std::size_t>& t, const Rational& coef) {
    for (const auto& xr : cols[t[n]]) {
      for (const auto& term : a.product_terms(xr.index, t[0])) {
        u[0] = term.index;
        for (std::size_t j = 1; j < n; ++j) u[j] = t[j];
        out.coords[tensor_index(d, u)] += s * coef * xr.coeff * term.coeff;
      }
    }
  });
  return out;
}

Chain lie_derivative(const FiniteAlgebra& a, const QMatrix& x, const Chain& c) {
  check_cochain(a, x);
  if (!is_derivation(a, x)) throw InputError("lie_derivative: X is not a derivation");
  return apply_lie(a, x, c);
}

Chain interior_product(const FiniteAlgebra& a, const QMatrix& x, const Chain& c) {
  check_cochain(a, x);
  if (!is_derivation(a, x)) throw InputError("interior_product: X is not a derivation");
  return apply_interior(a, x, c);
}

// HomologyPresentation

HomologyPresentation::HomologyPresentation(std::size_t degree, const QMatrix& cycles, const QMatrix& boundaries)
    : degree_(degree), cycles_(row_basis(cycles)), quotient_(cycles_, boundaries) {}

bool HomologyPresentation::is_cycle(std::span<const Rational> v) const { return quotient_.contains(v); }

bool HomologyPresentation::is_boundary(std::span<const Rational> v) const {
  return quotient_.contains(v) && is_zero(quotient_.reduce(v));
}

HomologyPresentation homology(const FiniteAlgebra& a, std::size_t degree, const Guard& guard) {
  check_guard(a, degree, guard);
  const std::size_t d = a.dim();
  const QMatrix cycles = degree == 0 ? QMatrix::identity(d) : nullspace(boundary_matrix(a, degree));
  EchelonBasis image(chain_dim(d, degree));
  const std::size_t sources = chain_dim(d, degree + 1);
  for (std::size_t col = 0; col < sources; ++col) {
    Chain e = zero_chain(a, degree + 1);
    e.coords[col] = 1;
    image.add(boundary_b(a, e).coords);
  }
  return HomologyPresentation(degree, cycles, image.reduced_basis());
}

HomologyPresentation cohomology_h1(const FiniteAlgebra& a) {
  const std::size_t d = a.dim();
  // Row ((i*d + j)*d + k): k-th coordinate of e_i X(e_j) - X(e_i e_j) + X(e_i) e_j.
  QMatrix conditions(d * d * d, d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const std::size_t base = (i * d + j) * d;
      for (std::size_t r = 0; r < d; ++r) {
        for (const auto& t : a.product_terms(i, r)) conditions(base + t.index, r * d + j) += t.coeff;
        for (const auto& t : a.product_terms(r, j)) conditions(base + t.index, r * d + i) += t.coeff;
      }
      for (const auto& t : a.product_terms(i, j))
        for (std::size_t k = 0; k < d; ++k) conditions(base + k, k * d + t.index) -= t.coeff;
    }
  }
  const QMatrix der = nullspace(conditions);
  QMatrix inner(0, d * d);
  for (std::size_t i = 0; i < d; ++i) inner.append_row(cochain_to_vector(inner_derivation(a, unit_vector(d, i))));
  return HomologyPresentation(1, der, inner);
}

QMatrix LowDegree::derivation_rep(std::span<const Rational> class_coords) const {
  return cochain_from_vector(algebra->dim(), coh1.representative(class_coords));
}

Chain LowDegree::h1_rep(std::span<const Rational> class_coords) const { return {1, h1.representative(class_coords)}; }

LowDegree low_degree(const AlgebraPtr& a, const Guard& guard) {
  return {a, center(*a), homology(*a, 0, guard), homology(*a, 1, guard), cohomology_h1(*a)};
}

QVector pairing(const LowDegree& ld, std::span<const Rational> x, std::span<const Rational> alpha) {
  if (x.size() != ld.coh1.dim() || alpha.size() != ld.h1.dim()) throw InputError("pairing: class coordinate length mismatch");
  const Chain rep = ld.h1_rep(alpha);
  return ld.h0.reduce(apply_interior(*ld.algebra, ld.derivation_rep(x), rep).coords);
}

DescentReport verify_descent(const FiniteAlgebra& a, std::size_t degree, const Guard& guard) {
  if (degree == 0) throw InputError("verify_descent: degree must be at least 1");
  const std::size_t d = a.dim();
  DescentReport report{degree, 0, {}};
  const HomologyPresentation hn = homology(a, degree, guard);
  const HomologyPresentation hm = homology(a, degree - 1, guard);
  const HomologyPresentation der = cohomology_h1(a);

  auto fail = [&](const std::string& what, std::size_t gen, std::size_t elem) {
    std::ostringstream os;
    os << what << " (generator " << gen << ", basis element " << elem << ")";
    report.failures.push_back(os.str());
  };

  std::vector<QMatrix> generators;
  for (std::size_t k = 0; k < der.cycle_basis().rows(); ++k)
    generators.push_back(cochain_from_vector(d, der.cycle_basis().row(k)));
  const std::size_t n_der = generators.size();
  for (std::size_t i = 0; i < d; ++i) generators.push_back(inner_derivation(a, unit_vector(d, i)));

  for (std::size_t g = 0; g < generators.size(); ++g) {
    const QMatrix& x = generators[g];
    const bool inner = g >= n_der;
    for (std::size_t k = 0; k < hn.cycle_basis().rows(); ++k) {
      const Chain z{degree, hn.cycle_basis().row_vector(k)};
      const Chain lz = apply_lie(a, x, z);
      const Chain iz = apply_interior(a, x, z);
      report.checks += 2;
      if (!hn.is_cycle(lz.coords)) fail("L_X maps a cycle to a non-cycle", g, k);
      if (!hm.is_cycle(iz.coords)) fail("i_X maps a cycle to a non-cycle", g, k);
      if (inner) {
        report.checks += 2;
        if (!hn.is_boundary(lz.coords)) fail("L_[a,.] is nonzero on homology", g, k);
        if (!hm.is_boundary(iz.coords)) fail("i_[a,.] is nonzero on homology", g, k);
      }
    }
    for (std::size_t k = 0; k < hn.boundary_basis().rows(); ++k) {
      const Chain w{degree, hn.boundary_basis().row_vector(k)};
      report.checks += 2;
      if (!hn.is_boundary(apply_lie(a, x, w).coords)) fail("L_X maps a boundary to a non-boundary", g, k);
      if (!hm.is_boundary(apply_interior(a, x, w).coords)) fail("i_X maps a boundary to a non-boundary", g, k);
    }
  }
  for (std::size_t k = 0; k < hm.cycle_basis().rows(); ++k) {
    ++report.checks;
    if (!hn.is_cycle(connes_B(a, {degree - 1, hm.cycle_basis().row_vector(k)}).coords))
      fail("B maps a cycle to a non-cycle", 0, k);
  }
  for (std::size_t k = 0; k < hm.boundary_basis().rows(); ++k) {
    ++report.checks;
    if (!hn.is_boundary(connes_B(a, {degree - 1, hm.boundary_basis().row_vector(k)}).coords))
      fail("B maps a boundary to a non-boundary", 0, k);
  }
  return report;
}

}  // namespace hcc
