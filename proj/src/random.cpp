#include "hccourant/random.hpp"

#include "hccourant/exactlin.hpp"

namespace hcc {

namespace {

long uniform(std::mt19937_64& rng, long lo, long hi) {
  // Modulo mapping keeps the stream identical across standard libraries.
  const auto span = static_cast<unsigned long long>(hi - lo + 1);
  return lo + static_cast<long>(rng() % span);
}

}  // namespace

Rational random_rational(std::mt19937_64& rng) {
  const long p = uniform(rng, -3, 3);
  const long q = uniform(rng, 1, 3);
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Rational random_small(std::mt19937_64& rng) { return Rational(uniform(rng, -1, 1)); }

QVector random_vector(std::mt19937_64& rng, std::size_t n) {
  QVector v(n);
  for (auto& x : v) x = random_rational(rng);
  return v;
}

QVector random_combination(std::mt19937_64& rng, const QMatrix& basis) {
  QVector v(basis.cols());
  for (std::size_t k = 0; k < basis.rows(); ++k) axpy(random_rational(rng), basis.row(k), v);
  return v;
}

QMatrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = random_small(rng) + (i == j ? Rational(1) : Rational(0));
    if (rank(m) == n) return m;
  }
}

}  // namespace hcc
