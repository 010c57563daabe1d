#include "torsem/grading.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

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

QuasiOrdinaryBranch cusp_branch() {
    return QuasiOrdinaryBranch::make(Series::monomial(1, e({Rational(3, 2)})));
}

QuasiOrdinaryBranch surface_branch() {
    return QuasiOrdinaryBranch::make(
        sparse(2, {{e({half, 0}), Cyclo(1L)}, {e({half, half}), Cyclo(1L)}}));
}

QuasiOrdinaryBranch cylinder_branch() {  // zeta = X1 X2^{1/2}
    return QuasiOrdinaryBranch::make(Series::monomial(2, e({1, half})));
}

bool code_is(const DomainError& err, const char* code) { return err.code() == code; }

}  // namespace

TEST_CASE("valuation is the minimal weight of the support") {
    auto phi = sparse(2, {{e({2, 1}), Cyclo(1L)}, {e({1, 3}), Cyclo(1L)}});
    CHECK(divisorial_valuation(phi, e({1, 1})) == 3);
    CHECK(divisorial_valuation(Series::monomial(2, e({2, 3})), e({1, 2})) == 8);
    // a unit has order zero
    auto unit = sparse(2, {{e({0, 0}), Cyclo(1L)}, {e({1, 0}), Cyclo(1L)}});
    CHECK(divisorial_valuation(unit, e({1, 1})) == 0);
    CHECK_THROWS_AS(divisorial_valuation(Series::zero(2), e({1, 1})), DomainError);
}

TEST_CASE("fractional minimal weight is rejected") {
    try {
        divisorial_valuation(Series::monomial(2, e({half, 0})), e({1, 1}));
        FAIL("expected NonIntegralValue");
    } catch (const DomainError& err) {
        CHECK(code_is(err, "NonIntegralValue"));
    }
}

TEST_CASE("valuation tolerates a tie with the truncation frontier") {
    // stored minimum 3 equals the frontier min(n_i) * T = 1 * 3: the value is
    // certified, the face is not
    auto phi = sparse(2, {{e({1, 1}), Cyclo(1L)}}, Rational(3));
    CHECK(divisorial_valuation(phi, e({2, 1})) == 3);
    CHECK_THROWS_AS(leading_form(phi, e({2, 1})), DomainError);
    // strictly below the frontier both are certified
    auto psi = sparse(1, {{e({2}), Cyclo(1L)}}, Rational(5));
    CHECK(divisorial_valuation(psi, e({1})) == 2);
    CHECK(leading_form(psi, e({1})) == Series::monomial(1, e({2})));
}

TEST_CASE("leading forms select the minimizing face") {
    auto phi = sparse(2, {{e({2, 1}), Cyclo(1L)}, {e({1, 3}), Cyclo(1L)}, {e({2, 2}), Cyclo(1L)}});
    CHECK(leading_form(phi, e({1, 1})) == Series::monomial(2, e({2, 1})));
    auto two = sparse(2, {{e({2, 1}), Cyclo(1L)}, {e({1, 3}), Cyclo(1L)}});
    CHECK(leading_form(two, e({2, 1})) == two);
    CHECK(leading_form(Series::monomial(2, e({1, 2})), e({1, 1})) ==
          Series::monomial(2, e({1, 2})));
}

TEST_CASE("valuation axioms hold on random pairs") {
    Rng rng(123);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t d = static_cast<std::size_t>(rng.next(1, 3));
        auto random_series = [&]() {
            std::map<RatVec, Cyclo> t;
            long nterms = rng.next(1, 5);
            for (long i = 0; i < nterms; ++i) {
                RatVec u(d);
                for (std::size_t j = 0; j < d; ++j) u[j] = Rational(rng.next(0, 4));
                t[u] = Cyclo(rng.next_nonzero(3));
            }
            return Series::make(d, std::move(t), Rational(30));
        };
        RatVec n(d);
        for (std::size_t j = 0; j < d; ++j) n[j] = Rational(rng.next(1, 3));
        Series phi = random_series(), psi = random_series();
        if (phi.terms().empty() || psi.terms().empty()) continue;
        long long vp = divisorial_valuation(phi, n), vq = divisorial_valuation(psi, n);
        CHECK(divisorial_valuation(phi * psi, n) == vp + vq);
        Series sum = phi + psi;
        if (!sum.terms().empty())
            CHECK(divisorial_valuation(sum, n) >= std::min(vp, vq));
    }
}

TEST_CASE("blow-up fans of the catalogued semigroups") {
    auto quadrant = AffineSemigroup::from_generators(2, {e({1, 0}), e({0, 1})});
    CHECK(blowup_fan(quadrant).weights == std::vector<RatVec>{e({1, 1})});

    auto g23 = AffineSemigroup::from_generators(1, {e({2}), e({3})});
    CHECK(blowup_fan(g23).weights == std::vector<RatVec>{e({1})});

    auto staircase = AffineSemigroup::from_generators(2, {e({1, 0}), e({1, 1}), e({1, 2})});
    CHECK(blowup_fan(staircase).weights == std::vector<RatVec>{e({1, 0})});

    // index-two sublattice: the weight is primitive in the finer dual lattice
    auto checker = AffineSemigroup::from_generators(2, {e({2, 0}), e({1, 1}), e({0, 2})});
    CHECK(blowup_fan(checker).weights == std::vector<RatVec>{e({half, half})});
}

TEST_CASE("blow-up weights of the branch semigroups") {
    CHECK(blowup_fan(cusp_branch().data().gamma_semigroup).weights ==
          std::vector<RatVec>{e({2})});
    CHECK(blowup_fan(surface_branch().data().gamma_semigroup).weights ==
          std::vector<RatVec>{e({2, 2})});
    CHECK(blowup_fan(cylinder_branch().data().gamma_semigroup).weights ==
          std::vector<RatVec>{e({1, 2})});
}

TEST_CASE("toric report on the quadrant") {
    auto s = AffineSemigroup::from_generators(2, {e({1, 0}), e({0, 1})});
    auto rep = verify_toric_graded_iso(s, e({1, 1}), 3, 10);
    CHECK(rep.passed);
    CHECK(rep.dims_semigroup == std::vector<long long>{1, 2, 3, 4});
    CHECK(rep.dims_filtration == rep.dims_semigroup);
    CHECK(rep.counterexample.empty());
}

TEST_CASE("toric report on the numerical semigroup") {
    auto s = AffineSemigroup::from_generators(1, {e({2}), e({3})});
    auto rep = verify_toric_graded_iso(s, e({1}), 7, 10);
    CHECK(rep.passed);
    CHECK(rep.dims_semigroup == std::vector<long long>{1, 0, 1, 1, 1, 1, 1, 1});
}

TEST_CASE("toric report with a fractional weight of integral values") {
    auto s = AffineSemigroup::from_generators(2, {e({2, 0}), e({1, 1}), e({0, 2})});
    auto rep = verify_toric_graded_iso(s, e({half, half}), 4, 10);
    CHECK(rep.passed);
    CHECK(rep.dims_semigroup == std::vector<long long>{1, 3, 5, 7, 9});
}

TEST_CASE("toric report rejects boundary and fractional weights") {
    auto s = AffineSemigroup::from_generators(2, {e({1, 0}), e({1, 2})});
    try {
        verify_toric_graded_iso(s, e({0, 1}), 3, 5);
        FAIL("expected BoundaryWeight");
    } catch (const DomainError& err) {
        CHECK(code_is(err, "BoundaryWeight"));
    }
    auto quadrant = AffineSemigroup::from_generators(2, {e({1, 0}), e({0, 1})});
    try {
        verify_toric_graded_iso(quadrant, e({half, 1}), 3, 5);
        FAIL("expected NonIntegralWeight");
    } catch (const DomainError& err) {
        CHECK(code_is(err, "NonIntegralWeight"));
    }
}

TEST_CASE("quasi-ordinary report on the cusp") {
    auto rep = verify_qo_graded_iso(cusp_branch(), e({2}), 7, 10);
    CHECK(rep.passed);
    CHECK(rep.dims_semigroup == std::vector<long long>{1, 0, 1, 1, 1, 1, 1, 1});
    CHECK(rep.dims_filtration == rep.dims_semigroup);
}

TEST_CASE("quasi-ordinary report on the surface branch") {
    auto z = surface_branch();
    auto rep = verify_qo_graded_iso(z, e({2, 2}), 6, 15);
    CHECK(rep.passed);
    // witnesses re-validate: each leads with a single term at its generator
    for (const auto& [u, phi] : rep.witnesses) {
        auto lf = leading_form(phi, rep.weight);
        REQUIRE(lf.terms().size() == 1);
        CHECK(lf.terms().begin()->first == u);
    }
    // the semigroup side of the same data agrees grade by grade
    auto toric = verify_toric_graded_iso(z.data().gamma_semigroup, e({2, 2}), 6, 15);
    CHECK(toric.passed);
    CHECK(toric.dims_semigroup == rep.dims_semigroup);
    CHECK(toric.dims_filtration == rep.dims_filtration);
}

TEST_CASE("quasi-ordinary report on a smooth branch") {
    auto z = QuasiOrdinaryBranch::make(
        sparse(1, {{e({1}), Cyclo(1L)}, {e({2}), Cyclo(1L)}}));
    auto rep = verify_qo_graded_iso(z, e({1}), 3, 5);
    CHECK(rep.passed);
    CHECK(rep.dims_semigroup == std::vector<long long>{1, 1, 1, 1});
}

TEST_CASE("quasi-ordinary report validates the weight") {
    try {
        verify_qo_graded_iso(cusp_branch(), e({1}), 5, 5);
        FAIL("expected WeightNotInDualLattice");
    } catch (const DomainError& err) {
        CHECK(code_is(err, "WeightNotInDualLattice"));
    }
    try {
        verify_qo_graded_iso(surface_branch(), e({2, 0}), 5, 5);
        FAIL("expected BoundaryWeight");
    } catch (const DomainError& err) {
        CHECK(code_is(err, "BoundaryWeight"));
    }
}

TEST_CASE("dims agree for every exceptional weight of the catalogued branches") {
    for (const auto& z : {cusp_branch(), surface_branch(), cylinder_branch()}) {
        for (const auto& n : blowup_fan(z.data().gamma_semigroup).weights) {
            auto qo = verify_qo_graded_iso(z, n, 6, 10);
            auto toric = verify_toric_graded_iso(z.data().gamma_semigroup, n, 6, 10);
            CHECK(qo.passed);
            CHECK(toric.passed);
            CHECK(qo.dims_semigroup == toric.dims_semigroup);
        }
    }
}

TEST_CASE("invariance of the branch semigroup under inversion") {
    auto inverse = QuasiOrdinaryBranch::make(Series::monomial(1, e({Rational(2, 3)})));
    auto iso = invariance_check(cusp_branch(), inverse);
    REQUIRE(iso.has_value());
    // both scale to the numerical semigroup generated by 2 and 3
    auto scaled = [](const QuasiOrdinaryBranch& z) {
        std::vector<Rational> vals;
        Rational m(z.data().gamma_semigroup.denominator());
        for (const auto& g : minimal_generators(z.data().gamma_semigroup))
            vals.push_back(g[0] * m);
        std::sort(vals.begin(), vals.end());
        return vals;
    };
    CHECK(scaled(cusp_branch()) == std::vector<Rational>{2, 3});
    CHECK(scaled(inverse) == std::vector<Rational>{2, 3});
}

TEST_CASE("invariance under coordinate swap") {
    auto swapped = QuasiOrdinaryBranch::make(
        sparse(2, {{e({0, half}), Cyclo(1L)}, {e({half, half}), Cyclo(1L)}}));
    CHECK(invariance_check(surface_branch(), swapped).has_value());
}

TEST_CASE("distinct branch semigroups are told apart") {
    auto diagonal = QuasiOrdinaryBranch::make(Series::monomial(2, e({half, half})));
    auto padded_cusp = QuasiOrdinaryBranch::make(Series::monomial(2, e({Rational(3, 2), 0})));
    CHECK_FALSE(invariance_check(diagonal, padded_cusp).has_value());
    // a unit multiple leaves the semigroup untouched
    auto unit_diag = QuasiOrdinaryBranch::make(
        sparse(2, {{e({half, half}), Cyclo(1L)}, {e({Rational(3, 2), half}), Cyclo(1L)}}));
    CHECK(unit_diag.data().gamma_semigroup == diagonal.data().gamma_semigroup);
    CHECK(invariance_check(unit_diag, diagonal).has_value());
}
