#include "torsem/series.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace torsem;

namespace {

RatVec e(std::vector<Rational> xs) { return RatVec(std::move(xs)); }

Series sparse(std::size_t dim, std::vector<std::pair<RatVec, Cyclo>> ts,
              std::optional<Rational> trunc = std::nullopt) {
    std::map<RatVec, Cyclo> m;
    for (auto& [u, c] : ts) m.emplace(u, c);
    return Series::make(dim, std::move(m), std::move(trunc));
}

const Rational half = Rational(1, 2);

}  // namespace

TEST_CASE("exact ring arithmetic") {
    auto x = Series::monomial(1, e({1}));
    auto one = Series::constant(1, Cyclo(1L));
    auto p = (one + x) * (one - x);
    CHECK(p == sparse(1, {{e({0}), Cyclo(1L)}, {e({2}), Cyclo(-1L)}}));
    CHECK((p - p).is_zero());
}

TEST_CASE("multiplication respects truncation orders") {
    auto a = sparse(1, {{e({0}), Cyclo(1L)}, {e({1}), Cyclo(1L)}}, Rational(2));
    auto b = sparse(1, {{e({0}), Cyclo(1L)}, {e({1}), Cyclo(-1L)}});
    auto p = a * b;
    REQUIRE(p.trunc().has_value());
    CHECK(*p.trunc() == 2);
    CHECK(p.terms() == sparse(1, {{e({0}), Cyclo(1L)}}, Rational(2)).terms());
}

TEST_CASE("multiplying by a high-order factor shifts the truncation") {
    auto x3 = Series::monomial(1, e({3}));
    auto b = sparse(1, {{e({0}), Cyclo(1L)}}, Rational(2));
    auto p = x3 * b;
    REQUIRE(p.trunc().has_value());
    CHECK(*p.trunc() == 5);
    CHECK(p.terms().size() == 1);
}

TEST_CASE("truncation drops stored terms at or beyond the order") {
    auto s = sparse(2, {{e({1, 0}), Cyclo(1L)}, {e({2, 1}), Cyclo(1L)}}, Rational(3));
    CHECK(s.terms().size() == 1);
    auto t = truncate(sparse(2, {{e({1, 0}), Cyclo(1L)}, {e({2, 1}), Cyclo(1L)}}), Rational(2));
    CHECK(t.terms().size() == 1);
    REQUIRE(t.trunc().has_value());
    CHECK(*t.trunc() == 2);
}

TEST_CASE("newton polyhedron of an exact series") {
    auto phi = sparse(2, {{e({3, 0}), Cyclo(1L)},
                          {e({1, 1}), Cyclo(1L)},
                          {e({0, 2}), Cyclo(1L)}});
    auto np = newton_polyhedron(phi);
    CHECK(np.vertices == std::vector<RatVec>{e({0, 2}), e({1, 1}), e({3, 0})});
}

TEST_CASE("newton polyhedron under truncation: certified or refused") {
    std::vector<std::pair<RatVec, Cyclo>> ts{{e({3, 0}), Cyclo(1L)},
                                             {e({1, 1}), Cyclo(1L)},
                                             {e({0, 2}), Cyclo(1L)}};
    // escape region reaches total order 4, so trunc 7/2 is not enough
    CHECK_THROWS_AS(newton_polyhedron(sparse(2, ts, Rational(7, 2))), DomainError);
    auto np = newton_polyhedron(sparse(2, ts, Rational(4)));
    CHECK(np.vertices == std::vector<RatVec>{e({0, 2}), e({1, 1}), e({3, 0})});
}

TEST_CASE("newton polyhedron error codes") {
    try {
        newton_polyhedron(Series::zero(2));
        FAIL("expected ZeroSeries");
    } catch (const DomainError& err) {
        CHECK(err.code() == "ZeroSeries");
    }
    try {
        newton_polyhedron(sparse(2, {}, Rational(1)));
        FAIL("expected TruncationTooCoarse");
    } catch (const DomainError& err) {
        CHECK(err.code() == "TruncationTooCoarse");
    }
}

TEST_CASE("symbolic restriction picks the face terms") {
    auto phi = sparse(2, {{e({3, 0}), Cyclo(2L)},
                          {e({1, 1}), Cyclo(1L)},
                          {e({0, 2}), Cyclo(-1L)}});
    auto f11 = symbolic_restriction(phi, e({1, 1}));
    CHECK(f11 == sparse(2, {{e({1, 1}), Cyclo(1L)}, {e({0, 2}), Cyclo(-1L)}}));
    auto f23 = symbolic_restriction(phi, e({2, 3}));
    CHECK(f23 == sparse(2, {{e({1, 1}), Cyclo(1L)}}));
    auto f12 = symbolic_restriction(phi, e({1, 2}));
    CHECK(f12 == sparse(2, {{e({3, 0}), Cyclo(2L)}, {e({1, 1}), Cyclo(1L)}}));
    CHECK(f11.is_exact());
}

TEST_CASE("symbolic restriction guards its weight and truncation") {
    auto phi = sparse(2, {{e({1, 1}), Cyclo(1L)}}, Rational(3));
    CHECK_THROWS_AS(symbolic_restriction(phi, e({1, 0})), DomainError);
    // frontier = min(eta) * trunc = 3 > 2: certified
    CHECK(symbolic_restriction(phi, e({1, 1})).terms().size() == 1);
    // weight (1/3,1) gives frontier 1 <= value 7/6: refused
    auto skew = sparse(2, {{e({2, half}), Cyclo(1L)}}, Rational(3));
    CHECK_THROWS_AS(symbolic_restriction(skew, e({Rational(1, 3), Rational(1)})), DomainError);
}

TEST_CASE("monomial times unit detection") {
    // X1^2 X2 (1 + X1 + X2^3), exact
    auto yes = sparse(2, {{e({2, 1}), Cyclo(1L)},
                          {e({3, 1}), Cyclo(1L)},
                          {e({2, 4}), Cyclo(1L)}});
    auto u = monomial_times_unit(yes);
    REQUIRE(u.has_value());
    CHECK(*u == e({2, 1}));

    auto no = sparse(2, {{e({1, 0}), Cyclo(1L)}, {e({0, 1}), Cyclo(1L)}});
    CHECK(!monomial_times_unit(no).has_value());
    // the "no" answer survives truncation
    auto no_trunc = sparse(2, {{e({1, 0}), Cyclo(1L)}, {e({0, 1}), Cyclo(1L)}}, Rational(5));
    CHECK(!monomial_times_unit(no_trunc).has_value());
}

TEST_CASE("monomial times unit under truncation") {
    // nonzero candidate monomial in two variables can always hide a rogue term
    auto t = sparse(2, {{e({2, 1}), Cyclo(1L)}}, Rational(100));
    CHECK_THROWS_AS(monomial_times_unit(t), DomainError);
    // unit series: candidate 0 dominates everything
    auto unit = sparse(2, {{e({0, 0}), Cyclo(1L)}}, Rational(2));
    auto u = monomial_times_unit(unit);
    REQUIRE(u.has_value());
    CHECK(u->is_zero());
    // one variable: the interval below the candidate is bounded
    auto d1 = sparse(1, {{e({3}), Cyclo(1L)}, {e({5}), Cyclo(1L)}}, Rational(6));
    auto v = monomial_times_unit(d1);
    REQUIRE(v.has_value());
    CHECK(*v == e({3}));
    auto d1bad = sparse(1, {{e({3}), Cyclo(1L)}}, Rational(2));
    CHECK_THROWS_AS(monomial_times_unit(d1bad), DomainError);
}

TEST_CASE("conjugates of a one-variable half-integral series") {
    auto zeta = Series::monomial(1, e({Rational(3, 2)}));
    auto orbit = conjugates(zeta);
    REQUIRE(orbit.size() == 2);
    CHECK(orbit[0] == zeta);
    CHECK(orbit[1] == sparse(1, {{e({Rational(3, 2)}), Cyclo(-1L)}}));
}

TEST_CASE("conjugates dedupe to the lattice index") {
    // single term X1^(1/2) X2^(1/2): four substitutions, two distinct images
    auto s = Series::monomial(2, e({half, half}));
    CHECK(conjugates(s).size() == 2);

    // X1^(1/2) + X1^(1/2) X2^(1/2): all four substitutions distinct
    auto lip = sparse(2, {{e({half, Rational(0)}), Cyclo(1L)}, {e({half, half}), Cyclo(1L)}});
    auto orbit = conjugates(lip);
    CHECK(orbit.size() == 4);
    for (const auto& c : orbit) CHECK(c.terms().size() == 2);
}

TEST_CASE("conjugates of an integral series are trivial") {
    auto s = sparse(2, {{e({1, 0}), Cyclo(1L)}, {e({2, 3}), Cyclo(5L)}});
    CHECK(conjugates(s).size() == 1);
}

TEST_CASE("series denominator tracks the support") {
    auto s = sparse(2, {{e({half, Rational(1, 3)}), Cyclo(1L)}});
    CHECK(s.denominator() == 6);
    CHECK(Series::zero(2).denominator() == 1);
}

TEST_CASE("make rejects malformed data") {
    std::map<RatVec, Cyclo> neg;
    neg.emplace(e({Rational(-1), Rational(0)}), Cyclo(1L));
    CHECK_THROWS_AS(Series::make(2, std::move(neg), std::nullopt), ParseError);
    CHECK_THROWS_AS(Series::make(1, {}, Rational(0)), ParseError);
}
