#include "adjlab/rational.hpp"

#include <cctype>

#include "adjlab/errors.hpp"

namespace adjlab {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

Integer parse_integer(std::string_view digits, std::size_t offset) {
  if (digits.empty()) throw ParseError("expected digits", offset);
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(digits[i]))) {
      throw ParseError("unexpected character '" + std::string(1, digits[i]) + "'", offset + i);
    }
  }
  return Integer(std::string(digits), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::size_t offset = 0;
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    offset = 1;
  }
  std::string_view body = text.substr(offset);
  const auto slash = body.find('/');
  Rational q;
  if (slash == std::string_view::npos) {
    q = Rational(parse_integer(body, offset));
  } else {
    Integer num = parse_integer(body.substr(0, slash), offset);
    Integer den = parse_integer(body.substr(slash + 1), offset + slash + 1);
    if (den == 0) throw ParseError("zero denominator", offset + slash + 1);
    q = Rational(num, den);
    q.canonicalize();
  }
  return negative ? Rational(-q) : q;
}

std::string arithmetic_backend() { return std::string("gmp-") + gmp_version; }

}  // namespace adjlab
