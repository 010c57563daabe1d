#include "torsem/cyclotomic.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace torsem;

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<Integer>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<Integer>{1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<Integer>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<Integer>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<Integer>{1, 0, -1, 0, 1});
    CHECK(totient(1) == 1);
    CHECK(totient(12) == 4);
    CHECK(totient(30) == 8);
}

TEST_CASE("roots of unity satisfy their minimal polynomials") {
    auto z3 = Cyclo::root_of_unity(3, 1);
    CHECK((z3 * z3 + z3 + Cyclo(1L)).is_zero());
    auto z5 = Cyclo::root_of_unity(5, 1);
    Cyclo s(1L);
    for (int k = 1; k < 5; ++k) s = s + Cyclo::root_of_unity(5, k);
    CHECK(s.is_rational());
    CHECK(s.rational_value() == 0);
}

TEST_CASE("rational values collapse to level one") {
    CHECK(Cyclo::root_of_unity(2, 1).is_rational());
    CHECK(Cyclo::root_of_unity(2, 1).rational_value() == -1);
    auto z8 = Cyclo::root_of_unity(8, 1);
    auto one = z8 * Cyclo::root_of_unity(8, 7);
    CHECK(one.is_rational());
    CHECK(one.rational_value() == 1);
}

TEST_CASE("cross level equality through the compositum") {
    auto z8sq = Cyclo::root_of_unity(8, 1) * Cyclo::root_of_unity(8, 1);
    CHECK(z8sq == Cyclo::root_of_unity(4, 1));
    CHECK(Cyclo::root_of_unity(6, 1) ==
          Cyclo::root_of_unity(2, 1) * Cyclo::root_of_unity(3, 2));
    CHECK(!(Cyclo::root_of_unity(3, 1) == Cyclo::root_of_unity(3, 2)));
}

TEST_CASE("field arithmetic") {
    auto i = Cyclo::root_of_unity(4, 1);
    auto p = (i + Cyclo(1L)) * (i - Cyclo(1L));
    CHECK(p.is_rational());
    CHECK(p.rational_value() == -2);
    // x^4 reduces against Phi_5 = x^4+x^3+x^2+x+1
    auto z5_4 = Cyclo::root_of_unity(5, 4);
    std::vector<Rational> expect{-1, -1, -1, -1};
    CHECK(z5_4.coords() == expect);
    CHECK(z5_4.level() == 5);
}

TEST_CASE("mixed level sums stay exact") {
    auto x = Cyclo::root_of_unity(3, 1) + Cyclo(Rational(1, 2));
    auto y = x - Cyclo(Rational(1, 2));
    CHECK(y == Cyclo::root_of_unity(3, 1));
}
