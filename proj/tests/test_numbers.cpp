#include <doctest.h>

#include "chow/polynomial.hpp"
#include "chow/scalar.hpp"

#include <random>

using namespace chow;

TEST_CASE("rational canonical form and parsing") {
  CHECK(to_string(Rational(6, -4)) == "-3/2");
  CHECK(to_string(Rational(8, 4)) == "2");
  CHECK(to_string(Rational(0, 7)) == "0");
  CHECK(parse_rational("-10/4") == Rational(-5, 2));
  CHECK(parse_rational(" 7 ") == Rational(7));
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("x"), InputError);
  CHECK_THROWS_AS(parse_rational("1/2/3"), InputError);
  CHECK_THROWS(Rational(1) / Rational(0));
  CHECK(Rational(-3, 2).sign() == -1);
  CHECK(Rational(9, 3).to_int64() == 3);
}

TEST_CASE("rational field laws on random samples") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 30);
  for (int i = 0; i < 200; ++i) {
    const Rational x(num(rng), den(rng)), y(num(rng), den(rng)), z(num(rng), den(rng));
    CHECK((x + y) * z == x * z + y * z);
    CHECK(x - x == Rational(0));
    if (!y.is_zero()) CHECK((x / y) * y == x);
    CHECK(parse_rational(to_string(x)) == x);
  }
}

TEST_CASE("polynomial arithmetic") {
  const Polynomial a = Polynomial::variable();
  const Polynomial p = a * a - Rational(1);
  CHECK(p.degree() == 2);
  CHECK(p.evaluate(Rational(3)) == Rational(8));
  CHECK(to_string(p) == "a^2 - 1");
  CHECK(to_string(Polynomial()) == "0");
  auto [q, r] = divmod(p, a - Rational(1));
  CHECK(q == a + Rational(1));
  CHECK(r.is_zero());
  CHECK(p.compose(a + Rational(1)) == a * a + a * Rational(2));
  CHECK((p - p).is_zero());
  CHECK(divide_exact(p, a + Rational(1)) == a - Rational(1));
  CHECK_THROWS_AS(divide_exact(p, a), SolverError);
  CHECK(binomial(a, 2) == (a * a - a) / Rational(2));
  CHECK(binomial(Rational(5), 2) == Rational(10));
  CHECK(binomial(Rational(5), -1) == Rational(0));
}

TEST_CASE("factorization over Q recovers the polynomial") {
  const Polynomial a = Polynomial::variable();
  const Polynomial p = (a - Rational(2)) * (a - Rational(2)) * (a - Rational(4, 5)) * a * Rational(-5, 216);
  const auto f = factor_over_rationals(p);
  REQUIRE_FALSE(f.identically_zero);
  CHECK(f.leading == Rational(-5, 216));
  REQUIRE(f.roots.size() == 3);
  CHECK(f.roots[0] == std::pair<Rational, int>(Rational(0), 1));
  CHECK(f.roots[1] == std::pair<Rational, int>(Rational(4, 5), 1));
  CHECK(f.roots[2] == std::pair<Rational, int>(Rational(2), 2));
  CHECK(expand(f) == p);

  const auto irreducible = factor_over_rationals(a * a + Rational(1));
  CHECK(irreducible.roots.empty());
  CHECK(irreducible.residual == a * a + Rational(1));
  CHECK(factor_over_rationals(Polynomial()).identically_zero);

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  for (int i = 0; i < 30; ++i) {
    Polynomial q(Rational(num(rng) == 0 ? 1 : num(rng)));
    for (int j = 0; j < 3; ++j) q = q * (a - Rational(num(rng), den(rng)));
    q = q * (a * a + Rational(2));
    CHECK(expand(factor_over_rationals(q)) == q);
  }
}
