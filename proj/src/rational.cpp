#include "chow/rational.hpp"

#include <charconv>
#include <ostream>

namespace chow {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  value_ = Rep(num);
  value_ /= Rep(den);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

std::int64_t Rational::to_int64() const {
  if (!is_integer()) throw std::domain_error("Rational: not an integer: " + to_string(*this));
  const BigInt n = numerator();
  if (n > BigInt(INT64_MAX) || n < BigInt(INT64_MIN))
    throw std::overflow_error("Rational: integer out of range");
  return n.convert_to<std::int64_t>();
}

std::string to_string(const Rational& r) {
  std::string out = r.numerator().str();
  if (!r.is_integer()) {
    out += '/';
    out += r.denominator().str();
  }
  return out;
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::size_t start = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) start = 1;
  if (start == text.size()) throw InputError("malformed rational: \"" + std::string(whole) + "\"");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9')
      throw InputError("malformed rational: \"" + std::string(whole) + "\"");
  }
  BigInt value(std::string(text.substr(start)));
  return text[0] == '-' ? BigInt(-value) : value;
}

} // namespace

Rational parse_rational(std::string_view text) {
  const auto first = text.find_first_not_of(" \t");
  text = first == std::string_view::npos ? std::string_view{} : text.substr(first, text.find_last_not_of(" \t") - first + 1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  const BigInt num = parse_integer(text.substr(0, slash), text);
  const BigInt den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw InputError("rational with zero denominator: \"" + std::string(text) + "\"");
  return Rational(num) / Rational(den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << to_string(r); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

} // namespace chow
