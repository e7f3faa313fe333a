#include "asymlat/rational.hpp"

#include <cctype>

namespace asymlat {

namespace {

bool valid_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!valid_integer_token(text))
      throw std::invalid_argument("malformed rational: " + text);
    return Rational(mpz_class(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!valid_integer_token(num) || !valid_integer_token(den) || den[0] == '-')
    throw std::invalid_argument("malformed rational: " + text);
  mpz_class d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + text);
  Rational r(mpz_class(num), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const ExtendedScalar& s) {
  return s.is_neg_infinity() ? "-inf" : to_string(s.finite());
}

ExtendedScalar parse_extended(const std::string& text) {
  if (text == "-inf") return ExtendedScalar::neg_infinity();
  return ExtendedScalar(parse_rational(text));
}

}  // namespace asymlat
