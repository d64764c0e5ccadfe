#include "hccourant/rational.hpp"

#include <cctype>
#include <string>

#include "hccourant/errors.hpp"

namespace hcc {

namespace {

bool valid_integer(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string strip_plus(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return std::string(s);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+') {
    throw InputError("malformed rational \"" + std::string(text) + "\"");
  }
  mpz_class p(strip_plus(num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw InputError("zero denominator in \"" + std::string(text) + "\"");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

QVector zeros(std::size_t n) { return QVector(n); }

QVector unit_vector(std::size_t n, std::size_t k) {
  QVector v(n);
  v.at(k) = 1;
  return v;
}

bool is_zero(std::span<const Rational> v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

void axpy(const Rational& c, std::span<const Rational> x, std::span<Rational> y) {
  if (sgn(c) == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) != 0) y[i] += c * x[i];
  }
}

QVector add(std::span<const Rational> a, std::span<const Rational> b) {
  QVector r(a.begin(), a.end());
  axpy(1, b, r);
  return r;
}

QVector sub(std::span<const Rational> a, std::span<const Rational> b) {
  QVector r(a.begin(), a.end());
  axpy(-1, b, r);
  return r;
}

QVector scale(const Rational& c, std::span<const Rational> a) {
  QVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

QVector concat(std::span<const Rational> a, std::span<const Rational> b) {
  QVector r(a.begin(), a.end());
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

std::vector<std::string> format_vector(std::span<const Rational> v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(format_rational(x));
  return out;
}

QVector parse_vector(const std::vector<std::string>& text) {
  QVector v;
  v.reserve(text.size());
  for (const auto& s : text) v.push_back(parse_rational(s));
  return v;
}

}  // namespace hcc
