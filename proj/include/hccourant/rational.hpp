#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hcc {

/// Exact rational number. gmpxx keeps the value in lowest terms with a
/// positive denominator after every arithmetic operation.
using Rational = mpq_class;

using QVector = std::vector<Rational>;

/// Parses "p/q", "p", or "-p/q". Throws InputError on malformed text or q = 0.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form, or "p" when q = 1.
std::string format_rational(const Rational& value);

QVector zeros(std::size_t n);
QVector unit_vector(std::size_t n, std::size_t k);

bool is_zero(std::span<const Rational> v);

/// y += c * x
void axpy(const Rational& c, std::span<const Rational> x, std::span<Rational> y);

QVector add(std::span<const Rational> a, std::span<const Rational> b);
QVector sub(std::span<const Rational> a, std::span<const Rational> b);
QVector scale(const Rational& c, std::span<const Rational> a);
QVector concat(std::span<const Rational> a, std::span<const Rational> b);

std::vector<std::string> format_vector(std::span<const Rational> v);
QVector parse_vector(const std::vector<std::string>& text);

}  // namespace hcc
