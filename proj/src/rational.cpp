#include "hypal/rational.hpp"

#include <stdexcept>

namespace hypal {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw std::invalid_argument("not a rational: \"" + std::string(text) + "\"");
  Integer p{std::string(num)};
  Integer q{std::string(den)};
  if (q == 0) throw std::invalid_argument("zero denominator: \"" + std::string(text) + "\"");
  Rational r(p, q);
  return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& r) {
  Integer p = numerator(r);
  Integer q = denominator(r);
  if (q == 1) return p.str();
  return p.str() + "/" + q.str();
}

}  // namespace hypal
