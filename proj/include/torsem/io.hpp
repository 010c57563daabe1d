#pragma once

// JSON wire format for everything the command-line driver reads or writes.
//
//   rational      "p/q" string, "p" when integral; bare JSON integers accepted
//   vector        array of rationals
//   cyclotomic    {"level": L, "coords": [rational, ...]} in the power basis
//                 of Q(zeta_L); a bare rational is accepted on input
//   series        {"dim": d, "m": denominator, "trunc": rational?, "terms":
//                 [{"u": vector, "c": cyclotomic}, ...]}; "dim" may be omitted
//                 when a term fixes it, "trunc" is absent for exact series
//   polynomial    {"dim": d, "coefficients": [series, ...]} listing c_0..c_{n-1}
//                 of the monic Y^n + c_{n-1} Y^{n-1} + ... + c_0
//   semigroup     {"m": denominator, "generators": [vector, ...]}
//   sublattice    {"dim": d, "basis": [vector, ...]}
//   cone          array of primitive integer rays
//   fan           {"cones": [cone, ...]}
//
// Readers throw ParseError with a short reason; writers cannot fail. Written
// documents are canonical: minimal denominators, sorted terms, fixed key
// order, so equal values serialize to identical bytes.

#include "torsem/cyclotomic.hpp"
#include "torsem/errors.hpp"
#include "torsem/grading.hpp"
#include "torsem/lattice.hpp"
#include "torsem/newton.hpp"
#include "torsem/numeric.hpp"
#include "torsem/qo.hpp"
#include "torsem/semigroup.hpp"
#include "torsem/series.hpp"
#include "torsem/vec.hpp"

#include "json.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace torsem {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------- reading --

inline Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) {
        if (auto q = parse_rational(j.get<std::string>())) return *q;
    }
    throw ParseError("expected a rational \"p/q\", got " + j.dump());
}

inline RatVec ratvec_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("expected an array of rationals, got " + j.dump());
    std::vector<Rational> xs;
    xs.reserve(j.size());
    for (const auto& e : j) xs.push_back(rational_from_json(e));
    return RatVec(std::move(xs));
}

inline std::vector<RatVec> ratmat_from_json(const Json& j, std::size_t dim) {
    if (!j.is_array()) throw ParseError("expected an array of vectors, got " + j.dump());
    std::vector<RatVec> rows;
    for (const auto& e : j) {
        RatVec v = ratvec_from_json(e);
        if (v.dim() != dim)
            throw ParseError("vector has " + std::to_string(v.dim()) + " coordinates, expected " +
                             std::to_string(dim));
        rows.push_back(std::move(v));
    }
    return rows;
}

inline Cyclo cyclo_from_json(const Json& j) {
    if (j.is_number_integer() || j.is_string()) return Cyclo(rational_from_json(j));
    if (!j.is_object() || !j.contains("level") || !j.contains("coords"))
        throw ParseError("cyclotomic number needs \"level\" and \"coords\"");
    if (!j["level"].is_number_integer() || j["level"].get<long long>() < 1)
        throw ParseError("cyclotomic level must be a positive integer");
    auto level = j["level"].get<unsigned long>();
    if (level > 128) throw ParseError("cyclotomic level too large (limit 128)");
    if (!j["coords"].is_array()) throw ParseError("cyclotomic \"coords\" must be an array");
    std::vector<Rational> poly;
    for (const auto& e : j["coords"]) poly.push_back(rational_from_json(e));
    return Cyclo::from_polynomial(level, std::move(poly));
}

// Checks u in (1/m) Z^d for the declared m; the stored series keeps the
// minimal denominator regardless, so "m" only constrains, never rescales.
inline Series series_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw ParseError("series needs a \"terms\" array");
    std::optional<std::size_t> dim;
    if (j.contains("dim")) {
        if (!j["dim"].is_number_integer() || j["dim"].get<long long>() < 1)
            throw ParseError("series \"dim\" must be a positive integer");
        dim = j["dim"].get<std::size_t>();
    }
    std::optional<Integer> declared_m;
    if (j.contains("m")) {
        if (!j["m"].is_number_integer() || j["m"].get<long long>() < 1)
            throw ParseError("series \"m\" must be a positive integer");
        declared_m = Integer(j["m"].get<long long>());
    }
    std::map<RatVec, Cyclo> terms;
    for (const auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("u") || !t.contains("c"))
            throw ParseError("series term needs \"u\" and \"c\"");
        RatVec u = ratvec_from_json(t["u"]);
        if (!dim) dim = u.dim();
        if (declared_m)
            for (std::size_t i = 0; i < u.dim(); ++i)
                if (!is_integer(u[i] * Rational(*declared_m)))
                    throw ParseError("exponent " + to_string(u[i]) +
                                     " is not in (1/m)Z for the declared m");
        Cyclo c = cyclo_from_json(t["c"]);
        auto [it, fresh] = terms.emplace(std::move(u), std::move(c));
        if (!fresh) throw ParseError("series has a repeated exponent");
    }
    if (!dim) throw ParseError("series with no terms needs an explicit \"dim\"");
    std::optional<Rational> trunc;
    if (j.contains("trunc") && !j["trunc"].is_null()) trunc = rational_from_json(j["trunc"]);
    return Series::make(*dim, std::move(terms), std::move(trunc));
}

inline WeierstrassPolynomial weierstrass_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("coefficients"))
        throw ParseError("polynomial needs \"dim\" and \"coefficients\"");
    if (!j["dim"].is_number_integer() || j["dim"].get<long long>() < 1)
        throw ParseError("polynomial \"dim\" must be a positive integer");
    auto dim = j["dim"].get<std::size_t>();
    if (!j["coefficients"].is_array()) throw ParseError("polynomial \"coefficients\" must be an array");
    std::vector<Series> coeffs;
    for (const auto& e : j["coefficients"]) {
        Json patched = e;
        if (!patched.contains("dim")) patched["dim"] = dim;
        coeffs.push_back(series_from_json(patched));
    }
    return WeierstrassPolynomial::make(dim, std::move(coeffs));
}

inline AffineSemigroup semigroup_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("generators") || !j["generators"].is_array())
        throw ParseError("semigroup needs a \"generators\" array");
    std::optional<std::size_t> dim;
    if (j.contains("dim")) {
        if (!j["dim"].is_number_integer() || j["dim"].get<long long>() < 1)
            throw ParseError("semigroup \"dim\" must be a positive integer");
        dim = j["dim"].get<std::size_t>();
    }
    std::optional<Integer> declared_m;
    if (j.contains("m")) {
        if (!j["m"].is_number_integer() || j["m"].get<long long>() < 1)
            throw ParseError("semigroup \"m\" must be a positive integer");
        declared_m = Integer(j["m"].get<long long>());
    }
    RatMat gens;
    for (const auto& e : j["generators"]) {
        RatVec g = ratvec_from_json(e);
        if (!dim) dim = g.dim();
        if (g.dim() != *dim) throw ParseError("semigroup generators have mixed dimensions");
        if (declared_m)
            for (std::size_t i = 0; i < g.dim(); ++i)
                if (!is_integer(g[i] * Rational(*declared_m)))
                    throw ParseError("generator coordinate " + to_string(g[i]) +
                                     " is not in (1/m)Z for the declared m");
        gens.push_back(std::move(g));
    }
    if (!dim) throw ParseError("semigroup with no generators needs an explicit \"dim\"");
    return AffineSemigroup::from_generators(*dim, std::move(gens));
}

struct SupportInput {
    std::vector<RatVec> points;
    Cone recession;
};

// Either a bare array of exponent vectors, or {"points": [...], "recession":
// [ray, ...]}; recession defaults to the positive orthant.
inline SupportInput support_from_json(const Json& j) {
    Json pts = j;
    std::optional<Json> rec;
    if (j.is_object()) {
        if (!j.contains("points")) throw ParseError("support object needs \"points\"");
        pts = j["points"];
        if (j.contains("recession")) rec = j["recession"];
    }
    if (!pts.is_array() || pts.empty()) throw ParseError("support needs a nonempty point array");
    std::vector<RatVec> points;
    for (const auto& e : pts) points.push_back(ratvec_from_json(e));
    std::size_t dim = points[0].dim();
    for (const auto& p : points)
        if (p.dim() != dim) throw ParseError("support points have mixed dimensions");
    Cone recession = rec ? Cone::from_generators(dim, ratmat_from_json(*rec, dim))
                         : Cone::positive_quadrant(dim);
    return SupportInput{std::move(points), std::move(recession)};
}

// Comma-separated rationals, e.g. "1,1" or "3/2,-1"; used for --weight.
inline RatVec ratvec_from_text(const std::string& text) {
    std::vector<Rational> xs;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto q = parse_rational(tok);
        if (!q) throw ParseError("bad rational '" + tok + "' in vector '" + text + "'");
        xs.push_back(*q);
    }
    if (xs.empty()) throw ParseError("empty vector '" + text + "'");
    return RatVec(std::move(xs));
}

// ---------------------------------------------------------------- writing --

inline Json json_of(const Rational& q) { return to_string(q); }
inline Json json_of(const Integer& n) { return to_string(n); }

inline Json json_of(const RatVec& v) {
    Json a = Json::array();
    for (const auto& x : v.coords()) a.push_back(to_string(x));
    return a;
}

inline Json json_of(const std::vector<RatVec>& rows) {
    Json a = Json::array();
    for (const auto& r : rows) a.push_back(json_of(r));
    return a;
}

inline Json json_of(const Cyclo& c) {
    Json coords = Json::array();
    for (const auto& x : c.coords()) coords.push_back(to_string(x));
    return Json{{"level", c.level()}, {"coords", std::move(coords)}};
}

inline Json json_of(const Series& s) {
    Json terms = Json::array();
    for (const auto& [u, c] : s.terms()) terms.push_back(Json{{"u", json_of(u)}, {"c", json_of(c)}});
    Json j{{"dim", s.dim()}, {"m", s.denominator().convert_to<long long>()}};
    if (!s.is_exact()) j["trunc"] = to_string(*s.trunc());
    j["terms"] = std::move(terms);
    return j;
}

inline Json json_of(const WeierstrassPolynomial& f) {
    Json coeffs = Json::array();
    for (const auto& c : f.coefficients()) coeffs.push_back(json_of(c));
    return Json{{"dim", f.dim()}, {"coefficients", std::move(coeffs)}};
}

inline Json json_of(const AffineSemigroup& s) {
    return Json{{"dim", s.dim()},
                {"m", s.denominator().convert_to<long long>()},
                {"generators", json_of(s.generators())}};
}

inline Json json_of(const Sublattice& l) {
    return Json{{"dim", l.dim()}, {"basis", json_of(l.basis())}};
}

// Rays of a cone as primitive integer vectors (they are stored that way).
inline Json json_of(const Cone& c) {
    Json rays = Json::array();
    for (const auto& r : c.rays()) {
        Json ray = Json::array();
        for (const auto& x : r.coords()) ray.push_back(num(x).convert_to<long long>());
        rays.push_back(std::move(ray));
    }
    return rays;
}

inline Json json_of(const Fan& f) {
    Json cones = Json::array();
    for (const auto& c : f.cones) cones.push_back(json_of(c));
    return Json{{"cones", std::move(cones)}};
}

inline Json json_of(const Polyhedron& p) {
    return Json{{"vertices", json_of(p.vertices)}, {"recession", json_of(p.recession)}};
}

inline Json json_of(const BlowupFan& b) {
    return Json{{"fan", json_of(b.fan)}, {"sigma", json_of(b.sigma)}, {"weights", json_of(b.weights)}};
}

inline Json json_of(const CharacteristicData& d) {
    Json indices = Json::array();
    Integer degree = 1;
    for (const auto& n : d.indices) {
        indices.push_back(to_string(n));
        degree *= n;
    }
    Json lattices = Json::array();
    for (const auto& l : d.lattices) lattices.push_back(json_of(l));
    return Json{{"exponents", json_of(d.exponents)}, {"indices", std::move(indices)},
                {"gammas", json_of(d.gammas)},       {"degree", to_string(degree)},
                {"lattices", std::move(lattices)},   {"semigroup", json_of(d.gamma_semigroup)}};
}

inline Json json_of(const SemigroupIso& w) {
    Json m = Json::array();
    for (const auto& row : w.matrix) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(x.convert_to<long long>());
        m.push_back(std::move(r));
    }
    return Json{{"matrix", std::move(m)},
                {"basis_a", json_of(w.basis_a)},
                {"basis_b", json_of(w.basis_b)},
                {"nodes", w.nodes}};
}

inline Json json_of(const GradedReport& r) {
    Json witnesses = Json::array();
    for (const auto& [u, elt] : r.witnesses)
        witnesses.push_back(Json{{"u", json_of(u)}, {"element", json_of(elt)}});
    Json j{{"weight", json_of(r.weight)},
           {"max_grade", r.max_grade},
           {"dims_semigroup", r.dims_semigroup},
           {"dims_filtration", r.dims_filtration},
           {"samples", r.samples},
           {"leading_forms_ok", r.leading_forms_ok},
           {"multiplicativity_ok", r.multiplicativity_ok},
           {"dims_match", r.dims_match},
           {"passed", r.passed},
           {"witnesses", std::move(witnesses)}};
    if (!r.counterexample.empty()) j["counterexample"] = r.counterexample;
    if (!r.caveat.empty()) j["caveat"] = r.caveat;
    return j;
}

}  // namespace torsem
