// torsem command-line driver: one subcommand per library operation, JSON in,
// JSON out. Results go to standard output with an "errors" array (empty on
// success); diagnostics go to standard error. Exit codes: 0 success, 2 domain
// error (well-formed input outside an operation's domain), 3 parse error.

#include "torsem/torsem.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using torsem::Json;

struct Opts {
    std::string series, poly, branch, semigroup, support, a, b;
    std::string weight, trunc;
    long long upto = 0;
    long long samples = 50;
    std::uint64_t seed = torsem::kDefaultSeed;
};

Json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw torsem::ParseError("cannot open '" + path + "'");
    Json j = Json::parse(in, nullptr, false);
    if (j.is_discarded()) throw torsem::ParseError("'" + path + "' is not valid JSON");
    return j;
}

torsem::Series load_series(const Opts& o, const std::string& path) {
    torsem::Series s = torsem::series_from_json(read_json(path));
    if (!o.trunc.empty()) {
        auto t = torsem::parse_rational(o.trunc);
        if (!t || *t <= 0) throw torsem::ParseError("--trunc must be a positive rational");
        s = torsem::truncate(s, *t);
    }
    return s;
}

// A series stored with a truncation order is taken at the caller's word: the
// branch machinery trusts that enough terms are present to pin down the
// characteristic exponents. Exact input gets the full validation.
torsem::QuasiOrdinaryBranch load_branch(const Opts& o, const std::string& path) {
    torsem::Series z = load_series(o, path);
    return torsem::QuasiOrdinaryBranch::make(z, !z.is_exact());
}

Json run_valuation(const Opts& o) {
    torsem::Series s = load_series(o, o.series);
    torsem::RatVec n = torsem::ratvec_from_text(o.weight);
    return Json{{"valuation", torsem::divisorial_valuation(s, n)}};
}

Json run_restrict(const Opts& o) {
    torsem::Series s = load_series(o, o.series);
    torsem::RatVec n = torsem::ratvec_from_text(o.weight);
    torsem::Series lf = torsem::leading_form(s, n);
    return Json{{"valuation", torsem::divisorial_valuation(s, n)},
                {"restriction", torsem::json_of(lf)}};
}

Json run_newton(const Opts& o) {
    if (o.series.empty() == o.support.empty())
        throw torsem::ParseError("newton needs exactly one of --series or --support");
    torsem::Polyhedron p;
    if (!o.series.empty()) {
        p = torsem::newton_polyhedron(load_series(o, o.series));
    } else {
        torsem::SupportInput si = torsem::support_from_json(read_json(o.support));
        p = torsem::polyhedron_from_support(si.points, si.recession);
    }
    torsem::Fan fan = torsem::dual_newton_diagram(p, torsem::dual_cone(p.recession));
    Json out = torsem::json_of(p);
    out["dual_fan"] = torsem::json_of(fan);
    return out;
}

Json run_blowup_fan(const Opts& o) {
    torsem::AffineSemigroup s = torsem::semigroup_from_json(read_json(o.semigroup));
    return torsem::json_of(torsem::blowup_fan(s));
}

Json run_qo_check(const Opts& o) {
    torsem::WeierstrassPolynomial f = torsem::weierstrass_from_json(read_json(o.poly));
    auto delta = torsem::is_quasi_ordinary(f);
    Json out{{"quasi_ordinary", delta.has_value()}};
    if (delta) out["delta"] = torsem::json_of(*delta);
    return out;
}

Json run_qo_invariants(const Opts& o) {
    torsem::QuasiOrdinaryBranch br = load_branch(o, o.branch);
    Json out{{"dim", br.dim()}, {"m", br.denominator().convert_to<long long>()}};
    Json data = torsem::json_of(br.data());
    for (auto& [k, v] : data.items()) out[k] = v;
    return out;
}

Json run_semiroot(const Opts& o) {
    torsem::QuasiOrdinaryBranch br = load_branch(o, o.branch);
    Json roots = Json::array();
    for (std::size_t j = 1; j <= br.tower_length(); ++j)
        roots.push_back(torsem::json_of(torsem::semiroot_value(br, j)));
    return Json{{"semiroots", std::move(roots)}};
}

Json run_mingens(const Opts& o) {
    torsem::AffineSemigroup s = torsem::semigroup_from_json(read_json(o.semigroup));
    return Json{{"generators", torsem::json_of(torsem::minimal_generators(s))}};
}

Json run_saturate(const Opts& o) {
    torsem::AffineSemigroup s = torsem::semigroup_from_json(read_json(o.semigroup));
    return torsem::json_of(torsem::saturation(s));
}

Json run_dims(const Opts& o) {
    torsem::AffineSemigroup s = torsem::semigroup_from_json(read_json(o.semigroup));
    torsem::RatVec n = torsem::ratvec_from_text(o.weight);
    return Json{{"dims", torsem::graded_dims(s, n, o.upto)}};
}

Json iso_result(const std::optional<torsem::SemigroupIso>& w) {
    Json out{{"isomorphic", w.has_value()}};
    if (w) out["witness"] = torsem::json_of(*w);
    return out;
}

Json run_semigroup_iso(const Opts& o) {
    torsem::AffineSemigroup a = torsem::semigroup_from_json(read_json(o.a));
    torsem::AffineSemigroup b = torsem::semigroup_from_json(read_json(o.b));
    return iso_result(torsem::are_isomorphic(a, b));
}

Json run_verify_toric(const Opts& o) {
    torsem::AffineSemigroup s = torsem::semigroup_from_json(read_json(o.semigroup));
    torsem::RatVec n = torsem::ratvec_from_text(o.weight);
    return torsem::json_of(torsem::verify_toric_graded_iso(s, n, o.upto, o.samples, o.seed));
}

Json run_verify_qo(const Opts& o) {
    torsem::QuasiOrdinaryBranch br = load_branch(o, o.branch);
    torsem::RatVec n = torsem::ratvec_from_text(o.weight);
    return torsem::json_of(torsem::verify_qo_graded_iso(br, n, o.upto, o.samples, o.seed));
}

Json run_invariance(const Opts& o) {
    torsem::QuasiOrdinaryBranch a = load_branch(o, o.a);
    torsem::QuasiOrdinaryBranch b = load_branch(o, o.b);
    return iso_result(torsem::invariance_check(a, b));
}

int emit(const Json& result) {
    Json out = result;
    out["errors"] = Json::array();
    std::cout << out.dump(2) << "\n";
    return 0;
}

int emit_error(const std::string& code, const std::string& message, int status) {
    Json out{{"errors", Json::array({Json{{"code", code}, {"message", message}}})}};
    std::cout << out.dump(2) << "\n";
    std::cerr << code << ": " << message << "\n";
    return status;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"toric and semigroup invariants of quasi-ordinary singularities"};
    app.require_subcommand(1);
    Opts o;

    auto add = [&](const std::string& name, const std::string& desc) {
        CLI::App* sub = app.add_subcommand(name, desc);
        return sub;
    };
    auto weight_opt = [&](CLI::App* sub) {
        sub->add_option("--weight", o.weight, "comma-separated rational weight vector")->required();
    };
    auto upto_opt = [&](CLI::App* sub) {
        sub->add_option("--upto", o.upto, "largest grade to compute")
            ->required()
            ->check(CLI::NonNegativeNumber);
    };
    auto sampling_opts = [&](CLI::App* sub) {
        sub->add_option("--samples", o.samples, "random product pairs to test (default 50)")
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--seed", o.seed, "random seed (fixed default for reproducibility)");
    };
    auto trunc_opt = [&](CLI::App* sub) {
        sub->add_option("--trunc", o.trunc, "truncate the input series at this total order");
    };

    CLI::App* valuation = add("valuation", "order of a series along a divisorial valuation");
    valuation->add_option("--series", o.series)->required();
    weight_opt(valuation);
    trunc_opt(valuation);

    CLI::App* restrict_ = add("restrict", "leading form of a series for a weight");
    restrict_->add_option("--series", o.series)->required();
    weight_opt(restrict_);
    trunc_opt(restrict_);

    CLI::App* newton = add("newton", "Newton polyhedron and its dual subdivision");
    newton->add_option("--series", o.series);
    newton->add_option("--support", o.support, "JSON support: array of exponent vectors");
    trunc_opt(newton);

    CLI::App* blowup = add("blowup-fan", "normalized blow-up fan of a semigroup with weights");
    blowup->add_option("--semigroup", o.semigroup)->required();

    CLI::App* qocheck = add("qo-check", "test a Weierstrass polynomial for quasi-ordinarity");
    qocheck->add_option("--poly", o.poly)->required();

    CLI::App* qoinv = add("qo-invariants", "characteristic data of a quasi-ordinary branch");
    qoinv->add_option("--branch", o.branch)->required();
    trunc_opt(qoinv);

    CLI::App* semiroot = add("semiroot", "evaluated semiroots q_j(zeta) of a branch");
    semiroot->add_option("--branch", o.branch)->required();
    trunc_opt(semiroot);

    CLI::App* mingens = add("semigroup-mingens", "minimal generating set");
    mingens->add_option("--semigroup", o.semigroup)->required();

    CLI::App* saturate = add("semigroup-saturate", "saturation inside the ambient group");
    saturate->add_option("--semigroup", o.semigroup)->required();

    CLI::App* dims = add("semigroup-dims", "graded dimension counts for a weight");
    dims->add_option("--semigroup", o.semigroup)->required();
    weight_opt(dims);
    upto_opt(dims);

    CLI::App* sgiso = add("semigroup-iso", "search for a semigroup isomorphism");
    sgiso->add_option("--a", o.a)->required();
    sgiso->add_option("--b", o.b)->required();

    CLI::App* vtoric = add("verify-toric", "graded-ring check for a toric germ");
    vtoric->add_option("--semigroup", o.semigroup)->required();
    weight_opt(vtoric);
    upto_opt(vtoric);
    sampling_opts(vtoric);

    CLI::App* vqo = add("verify-qo", "graded-ring check for a quasi-ordinary branch");
    vqo->add_option("--branch", o.branch)->required();
    weight_opt(vqo);
    upto_opt(vqo);
    sampling_opts(vqo);
    trunc_opt(vqo);

    CLI::App* invariance = add("invariance", "compare branch semigroups up to isomorphism");
    invariance->add_option("--a", o.a)->required();
    invariance->add_option("--b", o.b)->required();
    trunc_opt(invariance);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return emit_error("ParseError", e.what(), 3);
    }

    try {
        if (valuation->parsed()) return emit(run_valuation(o));
        if (restrict_->parsed()) return emit(run_restrict(o));
        if (newton->parsed()) return emit(run_newton(o));
        if (blowup->parsed()) return emit(run_blowup_fan(o));
        if (qocheck->parsed()) return emit(run_qo_check(o));
        if (qoinv->parsed()) return emit(run_qo_invariants(o));
        if (semiroot->parsed()) return emit(run_semiroot(o));
        if (mingens->parsed()) return emit(run_mingens(o));
        if (saturate->parsed()) return emit(run_saturate(o));
        if (dims->parsed()) return emit(run_dims(o));
        if (sgiso->parsed()) return emit(run_semigroup_iso(o));
        if (vtoric->parsed()) return emit(run_verify_toric(o));
        if (vqo->parsed()) return emit(run_verify_qo(o));
        if (invariance->parsed()) return emit(run_invariance(o));
        return emit_error("ParseError", "no subcommand", 3);
    } catch (const torsem::ParseError& e) {
        return emit_error("ParseError", e.what(), 3);
    } catch (const torsem::DomainError& e) {
        return emit_error(e.code(), e.what(), 2);
    } catch (const std::exception& e) {
        return emit_error("Internal", e.what(), 1);
    }
}
