#include <doctest.h>

#include "chow/riemann_roch.hpp"

using namespace chow;
using Q = PresentedElement<Rational>;

namespace {

Q q(std::string_view m, Rational c = Rational(1)) { return Q::monomial(q_ring(), m, c); }

} // namespace

TEST_CASE("A(Q): basis, point class and relations") {
  const auto& ring = q_ring();
  CHECK(ring->graded_dimensions() == std::vector<std::size_t>{1, 2, 3, 2, 1});
  CHECK(ring->format_monomial(*ring->point()) == "R^2*H^2");
  CHECK(q("H^2") * q("H^2") == q("R^2*H^2", 2));
  CHECK(q("R*H^3") == q("R^2*H^2", 2));
  CHECK(q("R^4").is_zero());
  CHECK(q("R^3*H").is_zero());
  CHECK((q("H^4") - q("R*H^3")).integrate() == Rational(0));
  CHECK(q("R^2*H^2").integrate() == Rational(1));
  CHECK(q("H^3") == q("R*H^2", 2) - q("R^2*H", 2));
  // Everything above the top degree vanishes.
  CHECK(q("H^5").is_zero());
  CHECK(q("R").integrate() == Rational(0));
}

TEST_CASE("plane classes come from the pairing solver") {
  const auto& Pa = alpha_plane_class_q();
  const auto& Pb = beta_plane_class_q();
  CHECK(Pa == q("R^2") - q("R*H") + q("H^2"));
  CHECK(Pb == q("R*H") - q("R^2"));
  CHECK((Pa * Pb).is_zero());
  CHECK(q("R^2") * Pa == q("R^2*H^2"));
  CHECK((q("R^2") * Pb).is_zero());
  CHECK((Pa * Pa).integrate() == Rational(1));
  CHECK((Pb * Pb).integrate() == Rational(1));
  for (const auto& [test, value] : std::vector<std::pair<Q, Rational>>{{q("R^2"), 1}, {q("R*H"), 1}, {q("H^2"), 1}})
    CHECK((test * Pa).integrate() == value);
}

TEST_CASE("pairing solver errors") {
  const auto& ring = q_ring();
  // Two constraints on a three-dimensional degree: underdetermined.
  CHECK_THROWS_AS(solve_class_by_pairing(ring, 2, {{q("R^2"), 1}, {q("R*H"), 1}}), SolverError);
  // R^2 pairs to zero against R^2; asking for 1 is inconsistent.
  CHECK_THROWS_AS(solve_class_by_pairing(ring, 2, {{q("R^2"), 1}, {q("R*H"), 1}, {q("H^2"), 1}, {q("R^2") * Rational(2), 1}}),
                  SolverError);
}

TEST_CASE("parsing and formatting monomials") {
  const auto& ring = q_ring();
  CHECK(ring->parse_monomial("R^2*H") == Exponents{2, 1});
  CHECK(ring->parse_monomial("1") == Exponents{0, 0});
  CHECK(ring->format_monomial({1, 2}) == "R*H^2");
  CHECK_THROWS_AS(ring->parse_monomial("X"), InputError);
  CHECK_THROWS_AS(ring->parse_monomial("R^-1"), InputError);
  CHECK(to_string(q("R*H", -2) + q("R")) == "R - 2*R*H");
}

TEST_CASE("presentation validation") {
  RingPresentation::Spec nonconfluent;
  nonconfluent.generators = {{"x", 1}, {"y", 1}};
  // x^2 -> y^2 and y^2 -> x^2 loop; x*y -> x^2 vs y^2 gives a conflict.
  nonconfluent.rules = {{{2, 0}, {{{0, 2}, Rational(1)}}}, {{0, 2}, {{{2, 0}, Rational(1)}}}};
  nonconfluent.top_degree = 2;
  CHECK_THROWS_AS(RingPresentation::create(nonconfluent), InputError);

  RingPresentation::Spec critical;
  critical.generators = {{"x", 1}, {"y", 1}};
  // x^2 -> y^2, x*y -> y^2: x^2*y reduces to y^3 and to x*y^2 -> y^3; consistent, but y^2*x -> y^3 too.
  critical.rules = {{{2, 0}, {{{0, 2}, Rational(1)}}}, {{1, 1}, {{{0, 2}, Rational(2)}}}};
  critical.top_degree = 3;
  // x^2 y: via rule 1 -> y^3; via rule 2 -> 2 x y^2 -> 4 y^3.
  CHECK_THROWS_AS(RingPresentation::create(critical), InputError);

  RingPresentation::Spec bad_point;
  bad_point.generators = {{"h", 1}};
  bad_point.rules = {{{3}, {}}};
  bad_point.top_degree = 2;
  bad_point.point = Exponents{1};
  CHECK_THROWS_AS(RingPresentation::create(bad_point), InputError);
}

TEST_CASE("truncated polynomial rings and pullback") {
  const auto ring = truncated_polynomial_ring({"x", "y"}, 3);
  CHECK(ring->graded_dimensions() == std::vector<std::size_t>{1, 2, 3, 4});
  const auto x = Q::generator(ring, "x");
  CHECK((x * x * x * x).is_zero());
  CHECK_THROWS_AS(x.integrate(), InputError);

  const auto h = Q::generator(projective_plane_ring(), "h");
  CHECK(pullback(h * h, q_ring()) == q("R^2"));
  CHECK_THROWS_AS(x + Q::generator(truncated_polynomial_ring({"x", "y"}, 3), "x"), InputError);
}

TEST_CASE("projective bundle over a point is projective space") {
  const auto point = truncated_polynomial_ring({}, 0);
  const auto trivial = Q::constant(point, 1);
  const auto P3 = projective_bundle_ring(point, 4, trivial, "H");
  CHECK(P3->graded_dimensions() == std::vector<std::size_t>{1, 1, 1, 1});
  CHECK(Q::monomial(P3, "H^3").integrate() == Rational(1));
  CHECK(Q::monomial(P3, "H^4").is_zero());
}
