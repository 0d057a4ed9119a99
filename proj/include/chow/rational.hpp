#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <Eigen/Core>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace chow {

/// Thrown for malformed user input (bad partitions, shape mismatch, bad JSON fields).
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an exact linear system has no unique solution.
class SolverError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always in lowest terms with positive denominator.
class Rational {
public:
  using Rep = boost::multiprecision::cpp_rational;

  Rational() = default;
  Rational(std::int64_t value) : value_(value) {} // NOLINT: implicit from integers is intended
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(Rep value) : value_(std::move(value)) {}
  explicit Rational(const BigInt& value) : value_(value) {}

  [[nodiscard]] BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  [[nodiscard]] BigInt denominator() const { return boost::multiprecision::denominator(value_); }
  [[nodiscard]] bool is_zero() const { return value_.is_zero(); }
  [[nodiscard]] bool is_integer() const { return denominator() == 1; }
  [[nodiscard]] int sign() const { return value_.sign(); }
  [[nodiscard]] const Rep& rep() const { return value_; }

  /// Integer value; throws if not integral or out of range.
  [[nodiscard]] std::int64_t to_int64() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(Rep(-value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
  Rep value_;
};

/// Canonical text form: "p/q" in lowest terms with q > 0, or "p" when q == 1.
std::string to_string(const Rational& r);

/// Parses "p", "-p", "p/q"; throws InputError on anything else or q == 0.
Rational parse_rational(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational abs(const Rational& r);

} // namespace chow

namespace Eigen {

template <>
struct NumTraits<chow::Rational> : GenericNumTraits<chow::Rational> {
  using Real = chow::Rational;
  using NonInteger = chow::Rational;
  using Literal = chow::Rational;
  using Nested = chow::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };
  static constexpr int digits10() { return 0; }
  static chow::Rational epsilon() { return chow::Rational(0); }
  static chow::Rational dummy_precision() { return chow::Rational(0); }
};

} // namespace Eigen
