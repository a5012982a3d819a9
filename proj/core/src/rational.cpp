#include "qsymkit/rational.hpp"

#include <cctype>

#include "qsymkit/errors.hpp"

namespace qsym {

namespace {

bool valid_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den))
    throw ParseError("invalid rational: '" + text + "'");
  const mpz_class numerator(num), denominator(den);
  if (denominator == 0) throw ParseError("zero denominator in rational: '" + text + "'");
  Rational q{numerator, denominator};
  q.canonicalize();
  return q;
}

std::string rational_text(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace qsym
