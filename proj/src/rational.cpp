#include "horo/rational.hpp"

#include <cctype>

#include "horo/errors.hpp"

namespace horo {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

std::string to_string(const Integer& value) { return value.get_str(); }

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer integer_from(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!is_integer_literal(num))
    throw ParseError("bad rational literal '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rational(integer_from(num));
  const auto den = text.substr(slash + 1);
  if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+')
    throw ParseError("bad rational literal '" + std::string(text) + "'");
  const Integer d = integer_from(den);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return make_rational(integer_from(num), d);
}

}  // namespace horo
