#pragma once

#include <cstddef>
#include <random>

#include "hccourant/qmatrix.hpp"
#include "hccourant/rational.hpp"

namespace hcc {

/// p/q with p in [-3, 3] and q in [1, 3].
Rational random_rational(std::mt19937_64& rng);
/// Entries in {-1, 0, 1}.
Rational random_small(std::mt19937_64& rng);
QVector random_vector(std::mt19937_64& rng, std::size_t n);
/// Random combination of the rows of basis (zero vector when basis is empty).
QVector random_combination(std::mt19937_64& rng, const QMatrix& basis);
/// Random invertible n x n matrix with small entries.
QMatrix random_invertible(std::mt19937_64& rng, std::size_t n);

}  // namespace hcc
