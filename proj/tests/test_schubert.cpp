#include <doctest.h>

#include "oracles.hpp"

using namespace chow;
using namespace oracle;

namespace {

void check_oracle(int k, int n) {
  const GrassmannianShape shape(k, n);
  const auto all = partitions_in_box(shape);
  for (const auto& lam : all)
    for (const auto& mu : all) {
      const auto lib = lr_multiply(SchubertElement::schubert_class(shape, lam), SchubertElement::schubert_class(shape, mu));
      CAPTURE(to_string(lam));
      CAPTURE(to_string(mu));
      CHECK(as_vec(lib) == oracle_product(pad(lam, k), pad(mu, k), k, n - k));
    }
}

SchubertElement s(const GrassmannianShape& g, std::vector<int> parts) {
  return SchubertElement::schubert_class(g, Partition(std::move(parts)));
}

} // namespace

TEST_CASE("partitions and boxes") {
  const GrassmannianShape g(2, 5);
  CHECK(g.dimension() == 6);
  CHECK(partitions_in_box(g).size() == 10);
  CHECK(partitions_in_box(g, 3).size() == 2);
  CHECK(Partition({2, 1, 0}).parts() == std::vector<int>{2, 1});
  CHECK(Partition({2, 1}).complement(g) == Partition({2, 1}));
  CHECK(Partition({1}).complement(g) == Partition({3, 2}));
  CHECK_THROWS_AS(Partition({1, 2}), InputError);
  CHECK_THROWS_AS(Partition({-1}), InputError);
  CHECK_THROWS_AS(GrassmannianShape(0, 3), InputError);
  CHECK_THROWS_AS(GrassmannianShape(4, 3), InputError);
  CHECK_THROWS_AS(s(g, {4}), InputError);
}

TEST_CASE("lr_multiply agrees with the Giambelli-Pieri oracle on G(2;5)") { check_oracle(2, 5); }
TEST_CASE("lr_multiply agrees with the Giambelli-Pieri oracle on G(3;6)") { check_oracle(3, 6); }
TEST_CASE("lr_multiply agrees with the Giambelli-Pieri oracle on G(2;6) and G(3;7)") {
  check_oracle(2, 6);
  check_oracle(3, 7);
}

TEST_CASE("known products") {
  const GrassmannianShape g(2, 4);
  CHECK(lr_multiply(s(g, {1}), s(g, {1})) == s(g, {2}) + s(g, {1, 1}));
  auto p = SchubertElement::identity(g);
  for (int i = 0; i < 4; ++i) p = lr_multiply(p, s(g, {1}));
  CHECK(p == s(g, {2, 2}) * Rational(2));
  CHECK(lr_coefficient(Partition({2, 1}), Partition({2, 1}), Partition({3, 2, 1})) == 2);
  CHECK(lr_coefficient(Partition({1}), Partition({1}), Partition({3})) == 0);
}

TEST_CASE("ring laws and duality") {
  for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 6}}) {
    const GrassmannianShape g(k, n);
    const auto all = partitions_in_box(g);
    for (const auto& lam : all) {
      const auto x = SchubertElement::schubert_class(g, lam);
      CHECK(lr_multiply(x, SchubertElement::identity(g)) == x);
      for (const auto& mu : all) {
        const auto y = SchubertElement::schubert_class(g, mu);
        CHECK(lr_multiply(x, y) == lr_multiply(y, x));
        CHECK(poincare_pair(x, y) == Rational(mu == lam.complement(g) ? 1 : 0));
      }
    }
    for (const auto& lam : all)
      for (int p = 0; p <= n - k; ++p)
        CHECK(pieri_multiply(SchubertElement::schubert_class(g, lam), p) ==
              lr_multiply(SchubertElement::schubert_class(g, lam), s(g, {p})));
  }
  const GrassmannianShape g(3, 6);
  const auto x = s(g, {2, 1}), y = s(g, {1, 1}), z = s(g, {2});
  CHECK(lr_multiply(lr_multiply(x, y), z) == lr_multiply(x, lr_multiply(y, z)));
  CHECK_THROWS_AS(pieri_multiply(x, 4), InputError);
}

TEST_CASE("named classes") {
  const GrassmannianShape g(2, 4);
  CHECK(named_class(g, NamedClass::V) == s(g, {1}));
  CHECK(named_class(g, NamedClass::W1) == s(g, {2}));
  CHECK(named_class(g, NamedClass::W2) == s(g, {1, 1}));
  CHECK(parse_named_class("P_alpha") == NamedClass::PAlpha);
  CHECK_THROWS_AS(parse_named_class("P_gamma"), InputError);
  CHECK(lr_multiply(named_class(g, NamedClass::V), named_class(g, NamedClass::V)) ==
        named_class(g, NamedClass::W1) + named_class(g, NamedClass::W2));
  CHECK_THROWS_AS(named_class(GrassmannianShape(1, 4), NamedClass::PAlpha), InputError);

  // W_i . P_j = delta_ij on every shape with room for both planes.
  for (int n = 4; n <= 8; ++n)
    for (int k = 2; n - k >= 2; ++k) {
      const GrassmannianShape h(k, n);
      CAPTURE(to_string(h));
      const NamedClass W[2] = {NamedClass::W1, NamedClass::W2};
      const NamedClass P[2] = {NamedClass::PAlpha, NamedClass::PBeta};
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          CHECK(poincare_pair(named_class(h, W[i]), named_class(h, P[j])) == Rational(i == j ? 1 : 0));
    }
}
