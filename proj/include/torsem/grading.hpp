#pragma once

// Divisorial valuations attached to interior weight vectors, leading forms,
// the blow-up fan with its exceptional weights, and the executable
// graded-ring checks: the toric report, the quasi-ordinary report, and the
// semigroup invariance comparison.

#include "torsem/qo.hpp"
#include "torsem/random.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace torsem {

// Order of vanishing along the exceptional divisor indexed by the interior
// weight n: the minimum of <n, u> over the support. A fractional minimum
// signals a weight outside the dual lattice of the ambient monomial lattice.
inline long long divisorial_valuation(const Series& phi, const RatVec& n) {
    Rational v = detail::weighted_min(phi, n, /*strict_frontier=*/false, "divisorial_valuation");
    if (!is_integer(v))
        throw DomainError("NonIntegralValue", "divisorial_valuation: minimal weight " +
                                                  to_string(v) + " is not an integer");
    return num(v).convert_to<long long>();
}

// Image of phi in the graded piece of its valuation: the sub-sum over the
// face of the Newton polyhedron picked out by n.
inline Series leading_form(const Series& phi, const RatVec& n) {
    return symbolic_restriction(phi, n);
}

// Fan of the normalized blow-up of the toric germ at its closed orbit: the
// dual subdivision induced by the polyhedron spanned by the nonzero
// saturation elements. The weights are the interior edge generators rescaled
// to primitive vectors of the dual of the semigroup group; they index the
// exceptional components and are the canonical valuation weights.
struct BlowupFan {
    Fan fan;
    Cone sigma;                   // the subdivided cone, dual to cone(s)
    std::vector<RatVec> weights;  // primitive in the dual lattice, interior to sigma
};

inline BlowupFan blowup_fan(const AffineSemigroup& s) {
    detail::require_vertex(s, "blowup_fan");
    AffineSemigroup sat = saturation(s);
    if (sat.generators().empty())
        throw DomainError("EmptySupport", "blowup_fan: the semigroup is trivial");
    Polyhedron p = polyhedron_from_support(sat.generators(), s.cone());
    Cone sigma = dual_cone(s.cone());
    Fan fan = dual_newton_diagram(p, sigma);
    Sublattice dual = dual_lattice(s.group());
    BlowupFan out{std::move(fan), std::move(sigma), {}};
    for (const auto& e : exceptional_edges(out.fan, out.sigma))
        out.weights.push_back(primitive_in_lattice(e, dual));
    return out;
}

// Outcome of one graded-ring verification. dims_semigroup counts semigroup
// elements per grade; dims_filtration counts the distinct leading exponents
// realized by the canonical spanning family. The verdict also covers
// leading-form shape and leading-form multiplicativity on sampled pairs.
struct GradedReport {
    RatVec weight;
    long long max_grade = 0;
    std::vector<long long> dims_semigroup;
    std::vector<long long> dims_filtration;
    long long samples = 0;
    bool leading_forms_ok = false;
    bool multiplicativity_ok = false;
    bool dims_match = false;
    bool passed = false;
    std::string counterexample;  // first failing check, empty when passed
    std::string caveat;
    std::vector<std::pair<RatVec, Series>> witnesses;  // generator -> realizing element
};

namespace detail {

// Nonzero integer combination of up to three pool monomials.
inline Series random_combination(const std::vector<RatVec>& pool, std::size_t dim, Rng& rng) {
    while (true) {
        Series s = Series::zero(dim);
        long parts = rng.next(1, 3);
        for (long i = 0; i < parts; ++i) {
            const RatVec& u =
                pool[static_cast<std::size_t>(rng.next(0, static_cast<long>(pool.size()) - 1))];
            s = s + Cyclo(rng.next_nonzero(3)) * Series::monomial(dim, u);
        }
        if (!s.is_zero()) return s;
    }
}

inline bool check_multiplicative(const Series& phi, const Series& psi, const RatVec& n,
                                 std::string& counterexample) {
    Series lhs = leading_form(phi * psi, n);
    Series rhs = leading_form(phi, n) * leading_form(psi, n);
    if (lhs == rhs) return true;
    if (counterexample.empty())
        counterexample = "leading form of a product differs from the product of leading forms";
    return false;
}

}  // namespace detail

// Checks that the valuation filtration of the semigroup algebra matches the
// weight grading of the semigroup itself: every monomial is its own leading
// form, leading forms multiply on sampled pairs, and both dimension counts
// agree grade by grade up to max_grade.
inline GradedReport verify_toric_graded_iso(const AffineSemigroup& s, const RatVec& n,
                                            long long max_grade, long long samples,
                                            std::uint64_t seed = kDefaultSeed) {
    detail::require_vertex(s, "verify_toric_graded_iso");
    if (n.dim() != s.dim())
        throw DomainError("RankMismatch", "verify_toric_graded_iso: weight has wrong dimension");
    if (max_grade < 0) throw ParseError("verify_toric_graded_iso: negative grade bound");
    for (const auto& b : s.group().basis())
        if (!is_integer(dot(n, b)))
            throw DomainError("NonIntegralWeight",
                              "verify_toric_graded_iso: weight is not integral on the group "
                              "of the semigroup");

    GradedReport rep;
    rep.weight = n;
    rep.max_grade = max_grade;
    rep.samples = samples;
    rep.caveat = "filtration dimensions count the distinct leading exponents realized by the "
                 "canonical monomial family at each grade";
    rep.dims_semigroup = graded_dims(s, n, max_grade);  // validates positivity on generators

    std::size_t d = s.dim();
    auto elems = detail::elements_up_to(s, n, Rational(max_grade));
    std::vector<std::set<RatVec>> realized(static_cast<std::size_t>(max_grade) + 1);
    rep.leading_forms_ok = true;
    for (const auto& u : elems) {
        Series xu = Series::monomial(d, u);
        long long k = divisorial_valuation(xu, n);
        if (leading_form(xu, n) == xu) {
            realized[static_cast<std::size_t>(k)].insert(u);
        } else {
            rep.leading_forms_ok = false;
            if (rep.counterexample.empty())
                rep.counterexample =
                    "monomial at " + to_string(u) + " does not realize its own leading form";
        }
    }
    for (const auto& grade : realized)
        rep.dims_filtration.push_back(static_cast<long long>(grade.size()));

    for (const auto& g : minimal_generators(s))
        rep.witnesses.emplace_back(g, Series::monomial(d, g));

    Rng rng(seed);
    std::vector<RatVec> pool(elems.begin(), elems.end());
    rep.multiplicativity_ok = true;
    for (long long t = 0; t < samples; ++t) {
        Series phi = detail::random_combination(pool, d, rng);
        Series psi = detail::random_combination(pool, d, rng);
        if (!detail::check_multiplicative(phi, psi, n, rep.counterexample))
            rep.multiplicativity_ok = false;
    }

    rep.dims_match = rep.dims_filtration == rep.dims_semigroup;
    if (!rep.dims_match && rep.counterexample.empty())
        rep.counterexample = "semigroup and filtration dimension vectors disagree";
    rep.passed = rep.leading_forms_ok && rep.multiplicativity_ok && rep.dims_match;
    return rep;
}

// The quasi-ordinary counterpart: the spanning family is X^a times products
// of semiroot values with exponents below the tower indices. Checks that
// each semiroot leads with a single term at its gamma, that leading forms
// multiply on sampled family pairs, and that the realized leading exponents
// match the semigroup grading.
inline GradedReport verify_qo_graded_iso(const QuasiOrdinaryBranch& zeta, const RatVec& n,
                                         long long max_grade, long long samples,
                                         std::uint64_t seed = kDefaultSeed) {
    const CharacteristicData& data = zeta.data();
    std::size_t d = zeta.dim(), g = data.exponents.size();
    if (n.dim() != d)
        throw DomainError("RankMismatch", "verify_qo_graded_iso: weight has wrong dimension");
    if (max_grade < 0) throw ParseError("verify_qo_graded_iso: negative grade bound");
    for (std::size_t i = 0; i < d; ++i)
        if (n[i] <= 0)
            throw DomainError("BoundaryWeight",
                              "verify_qo_graded_iso: weight must be interior to the positive "
                              "quadrant");
    if (!dual_lattice(data.lattices.back()).contains(n))
        throw DomainError("WeightNotInDualLattice",
                          "verify_qo_graded_iso: weight does not pair integrally with the top "
                          "lattice of the tower");

    GradedReport rep;
    rep.weight = n;
    rep.max_grade = max_grade;
    rep.samples = samples;
    rep.caveat = "filtration dimensions count the distinct leading exponents realized by the "
                 "monomial-times-semiroot family; grade-by-grade agreement up to the bound is "
                 "finite evidence, not a proof for the full local algebra";
    rep.dims_semigroup = graded_dims(data.gamma_semigroup, n, max_grade);

    std::vector<Series> q;
    for (std::size_t j = 1; j <= g; ++j) q.push_back(semiroot_value(zeta, j));

    rep.leading_forms_ok = true;
    auto flag_form_failure = [&](const std::string& what) {
        rep.leading_forms_ok = false;
        if (rep.counterexample.empty()) rep.counterexample = what;
    };
    for (std::size_t j = 0; j < g; ++j) {
        Series lf = leading_form(q[j], n);
        if (lf.terms().size() != 1 || !(lf.terms().begin()->first == data.gammas[j]))
            flag_form_failure("semiroot value " + std::to_string(j + 1) +
                              " does not lead with a single term at its gamma");
    }

    for (std::size_t i = 0; i < d; ++i) {
        RatVec e(d);
        e[i] = 1;
        rep.witnesses.emplace_back(e, Series::monomial(d, e));
    }
    for (std::size_t j = 0; j < g; ++j) rep.witnesses.emplace_back(data.gammas[j], q[j]);

    std::vector<std::vector<Series>> qpow(g);
    for (std::size_t j = 0; j < g; ++j) {
        qpow[j].push_back(Series::constant(d, Cyclo(1L)));
        for (Integer b = 1; b < data.indices[j]; ++b) qpow[j].push_back(qpow[j].back() * q[j]);
    }

    std::vector<std::set<RatVec>> realized(static_cast<std::size_t>(max_grade) + 1);
    std::vector<Series> family;
    std::vector<std::size_t> b(g, 0);
    while (true) {
        Series base = Series::constant(d, Cyclo(1L));
        for (std::size_t j = 0; j < g; ++j) base = base * qpow[j][b[j]];
        long long base_grade = divisorial_valuation(base, n);
        if (base_grade <= max_grade) {
            RatVec a(d);
            std::function<void(std::size_t, const Rational&)> walk = [&](std::size_t i,
                                                                         const Rational& left) {
                if (i == d) {
                    Series phi = Series::monomial(d, a) * base;
                    long long k = divisorial_valuation(phi, n);
                    Series lf = leading_form(phi, n);
                    if (lf.terms().size() != 1)
                        flag_form_failure("a family element has a non-monomial leading form");
                    else if (k <= max_grade)
                        realized[static_cast<std::size_t>(k)].insert(lf.terms().begin()->first);
                    family.push_back(std::move(phi));
                    return;
                }
                for (Rational v = 0; v * n[i] <= left; v += 1) {
                    a[i] = v;
                    walk(i + 1, left - v * n[i]);
                }
                a[i] = 0;
            };
            walk(0, Rational(max_grade - base_grade));
        }
        std::size_t j = g;
        while (j > 0 && Integer(b[j - 1]) == data.indices[j - 1] - 1) b[--j] = 0;
        if (j == 0) break;
        ++b[j - 1];
    }
    for (const auto& grade : realized)
        rep.dims_filtration.push_back(static_cast<long long>(grade.size()));

    Rng rng(seed);
    rep.multiplicativity_ok = true;
    for (long long t = 0; t < samples; ++t) {
        const Series& phi =
            family[static_cast<std::size_t>(rng.next(0, static_cast<long>(family.size()) - 1))];
        const Series& psi =
            family[static_cast<std::size_t>(rng.next(0, static_cast<long>(family.size()) - 1))];
        if (!detail::check_multiplicative(phi, psi, n, rep.counterexample))
            rep.multiplicativity_ok = false;
    }

    rep.dims_match = rep.dims_filtration == rep.dims_semigroup;
    if (!rep.dims_match && rep.counterexample.empty())
        rep.counterexample = "semigroup and filtration dimension vectors disagree";
    rep.passed = rep.leading_forms_ok && rep.multiplicativity_ok && rep.dims_match;
    return rep;
}

// Abstract isomorphism of the two branch semigroups: the invariance witness.
// nullopt is a certified "not isomorphic"; the witness matrix matches the
// semigroups in their intrinsic group coordinates.
inline std::optional<SemigroupIso> invariance_check(const QuasiOrdinaryBranch& a,
                                                    const QuasiOrdinaryBranch& b,
                                                    std::uint64_t budget = 200000) {
    return are_isomorphic(a.data().gamma_semigroup, b.data().gamma_semigroup, budget);
}

}  // namespace torsem
