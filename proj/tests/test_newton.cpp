#include "torsem/newton.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace torsem;

namespace {

RatVec qv(std::vector<long> xs) {
    RatVec v(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) v[i] = xs[i];
    return v;
}

}  // namespace

TEST_CASE("vertices of a support with an interior and a redundant point") {
    auto p = polyhedron_from_support({qv({0, 3}), qv({2, 0}), qv({1, 1}), qv({2, 2})},
                                     Cone::positive_quadrant(2));
    // (2,2) = (1,1) + (1,1) is absorbed by the recession cone
    CHECK(p.vertices == std::vector<RatVec>{qv({0, 3}), qv({1, 1}), qv({2, 0})});
}

TEST_CASE("a point on the segment between two others is not a vertex") {
    auto p = polyhedron_from_support({qv({0, 2}), qv({1, 1}), qv({2, 0})},
                                     Cone::positive_quadrant(2));
    CHECK(p.vertices == std::vector<RatVec>{qv({0, 2}), qv({2, 0})});
}

TEST_CASE("empty support and non-pointed recession are rejected") {
    CHECK_THROWS_AS(polyhedron_from_support({}, Cone::positive_quadrant(2)), DomainError);
    auto half = Cone::from_generators(2, {qv({1, 0}), qv({-1, 0}), qv({0, 1})});
    CHECK_THROWS_AS(polyhedron_from_support({qv({1, 1})}, half), DomainError);
}

TEST_CASE("face in a direction collects all minimizing support points") {
    auto p = polyhedron_from_support({qv({0, 2}), qv({1, 1}), qv({2, 0}), qv({3, 3})},
                                     Cone::positive_quadrant(2));
    CHECK(face_of(p, qv({1, 1})) == std::vector<RatVec>{qv({0, 2}), qv({1, 1}), qv({2, 0})});
    CHECK(face_of(p, qv({1, 2})) == std::vector<RatVec>{qv({2, 0})});
    CHECK(face_of(p, RatVec({Rational(1), Rational(0)})) == std::vector<RatVec>{qv({0, 2})});
    CHECK_THROWS_AS(face_of(p, qv({-1, 1})), DomainError);
}

TEST_CASE("dual diagram of a two-term support subdivides the quadrant") {
    auto sigma = Cone::positive_quadrant(2);
    auto p = polyhedron_from_support({qv({3, 0}), qv({0, 2})}, dual_cone(sigma));
    auto fan = dual_newton_diagram(p, sigma);
    REQUIRE(is_valid_fan(fan, sigma));
    CHECK(fan.cones.size() == 6);  // origin, 3 edges, 2 maximal cones
    CHECK(maximal_cones(fan, 2).size() == 2);
    auto exc = exceptional_edges(fan, sigma);
    CHECK(exc == std::vector<RatVec>{qv({2, 3})});
}

TEST_CASE("a single vertex induces the trivial subdivision with no interior edge") {
    auto sigma = Cone::positive_quadrant(2);
    auto p = polyhedron_from_support({qv({2, 1})}, dual_cone(sigma));
    auto fan = dual_newton_diagram(p, sigma);
    REQUIRE(is_valid_fan(fan, sigma));
    CHECK(fan.cones.size() == 4);
    CHECK(exceptional_edges(fan, sigma).empty());
}

TEST_CASE("in one variable the ray itself is the exceptional edge") {
    auto sigma = Cone::positive_quadrant(1);
    auto p = polyhedron_from_support({RatVec({Rational(3)})}, dual_cone(sigma));
    auto fan = dual_newton_diagram(p, sigma);
    REQUIRE(is_valid_fan(fan, sigma));
    // relint of the unique ray lies in relint of sigma = sigma itself
    auto exc = exceptional_edges(fan, sigma);
    CHECK(exc == std::vector<RatVec>{RatVec({Rational(1)})});
}

TEST_CASE("dual diagram of the Lipman example has one interior edge at (1,1)") {
    // vertices (2,0) and (0,2), edge direction forces weight (1,1)
    auto sigma = Cone::positive_quadrant(2);
    auto p = polyhedron_from_support({qv({2, 0}), qv({1, 1}), qv({0, 2})}, dual_cone(sigma));
    CHECK(p.vertices == std::vector<RatVec>{qv({0, 2}), qv({2, 0})});
    auto fan = dual_newton_diagram(p, sigma);
    auto exc = exceptional_edges(fan, sigma);
    CHECK(exc == std::vector<RatVec>{qv({1, 1})});
}

TEST_CASE("dual diagram rejects mismatched recession data") {
    auto sigma = Cone::from_generators(2, {qv({1, 0}), qv({1, 2})});
    auto p = polyhedron_from_support({qv({1, 0})}, Cone::positive_quadrant(2));
    CHECK_THROWS_AS(dual_newton_diagram(p, sigma), DomainError);
}

TEST_CASE("escape bound: single interior point leaves an unbounded region") {
    auto b = escape_bound({qv({1, 1})});
    CHECK(b.unbounded);
}

TEST_CASE("escape bound: axis points box the region") {
    auto b = escape_bound({qv({2, 0}), qv({0, 3})});
    CHECK(!b.unbounded);
    CHECK(!b.empty);
    CHECK(b.value == 5);
}

TEST_CASE("escape bound: origin kills the region") {
    auto b = escape_bound({qv({0, 0}), qv({5, 7})});
    CHECK(b.empty);
}

TEST_CASE("escape bound ignores dominated points") {
    auto a = escape_bound({qv({2, 0}), qv({0, 3})});
    auto b = escape_bound({qv({2, 0}), qv({0, 3}), qv({2, 3}), qv({7, 1})});
    CHECK(a.value == b.value);
}

TEST_CASE("escape bound in three variables") {
    // region is the open unit box, so total order stays below 3
    auto b = escape_bound({qv({1, 0, 0}), qv({0, 1, 0}), qv({0, 0, 1})});
    CHECK(!b.unbounded);
    CHECK(b.value == 3);
}
