// Command-line front end: print the constants table, run verification
// suites, reshape reports for plotting, dump sample fields.
//
// Exit codes: 0 all checks passed, 1 at least one check failed,
// 2 configuration error (bad flags, invalid grid, out-of-range dimension).

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cliff/cliff.hpp"

namespace {

cliff::OmegaVariant parse_omega(const std::string& s) {
    if (s == "paper") return cliff::OmegaVariant::paper;
    if (s == "sphere") return cliff::OmegaVariant::sphere;
    throw cliff::config_error("omega must be 'paper' or 'sphere', got '" + s + "'");
}

cliff::Family parse_family(const std::string& s) {
    using cliff::Family;
    static const std::map<std::string, Family> names = {
        {"scalar_blobs", Family::scalar_blobs},
        {"multivector_blobs", Family::multivector_blobs},
        {"bump", Family::bump},
        {"bandlimited", Family::bandlimited},
        {"anisotropic", Family::anisotropic},
        {"profile_constant", Family::profile_constant},
        {"nonneg_scalar", Family::nonneg_scalar},
        {"nonneg_multivector", Family::nonneg_multivector},
    };
    auto it = names.find(s);
    if (it == names.end()) throw cliff::config_error("unknown field family '" + s + "'");
    return it->second;
}

// "check=value" pairs from repeated --tol flags.
std::map<std::string, double> parse_tols(const std::vector<std::string>& kvs) {
    std::map<std::string, double> out;
    for (const auto& kv : kvs) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw cliff::config_error("--tol wants check=value, got '" + kv + "'");
        std::string key = kv.substr(0, eq);
        if (cliff::default_tolerances().find(key) == cliff::default_tolerances().end())
            throw cliff::config_error("--tol names unknown check '" + key + "'");
        try {
            out[key] = std::stod(kv.substr(eq + 1));
        } catch (const std::exception&) {
            throw cliff::config_error("--tol value for '" + key + "' is not a number");
        }
    }
    return out;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path);
    if (!os) throw cliff::config_error("cannot open output file '" + path + "'");
    return os;
}

struct ConstantsOpts {
    int n = 3, m = 3;
    bool complex_field = false;
    std::string omega = "paper";
    bool as_json = false;
    std::string out;
};

int run_constants(const ConstantsOpts& o) {
    cliff::Field fld = o.complex_field ? cliff::Field::cplx : cliff::Field::real;
    cliff::OmegaVariant om = parse_omega(o.omega);

    // K and the surface measure exist for every admissible (n, m); the
    // Sobolev block needs n >= 3. Below that, print what exists and signal
    // a configuration error.
    if (o.n < 3) {
        std::cout << "n = " << o.n << "  m = " << o.m << "  field = "
                  << (fld == cliff::Field::real ? "real" : "complex") << "\n";
        std::cout << "K_m            = " << cliff::detail::fmt_double(cliff::kn_constant(o.m, fld))
                  << "\n";
        if (o.n >= 1)
            std::cout << "omega_n (" << o.omega
                      << ") = " << cliff::detail::fmt_double(cliff::omega_n(o.n, om)) << "\n";
        std::cerr << "constants: Sobolev/HLS/Gaussian entries need n >= 3\n";
        return 2;
    }

    cliff::ConstantsTable t = cliff::build_constants(o.n, o.m, fld, om);
    std::ostringstream body;
    if (o.as_json) {
        cliff::write_constants_json(body, t);
        body << "\n";
    } else {
        auto fd = [](double v) { return cliff::detail::fmt_double(v); };
        body << "n = " << t.n << "  m = " << t.m << "  field = "
             << (t.field == cliff::Field::real ? "real" : "complex")
             << "  omega_variant = " << cliff::omega_variant_name(t.omega_variant) << "\n";
        body << "omega_n        = " << fd(t.omega) << "\n";
        body << "K_m            = " << fd(t.K) << "\n";
        body << "C1_plancherel  = " << fd(t.C1_plancherel) << "\n";
        body << "C1_young       = " << fd(t.C1_young) << "\n";
        body << "C1_min         = " << fd(t.C1_min) << "\n";
        body << "gaussian_k     = " << fd(t.gaussian_k) << "\n";
        for (const auto& h : t.hls)
            body << "HLS lambda = " << fd(h.lambda) << " ["
                 << (h.mode == cliff::HlsMode::diagonal ? "diagonal" : "l2") << "]  C = "
                 << fd(h.value) << "  (p = " << fd(h.p) << ", q = " << fd(h.q) << ")\n";
        for (const auto& f : t.fundamental)
            body << "fundamental l = " << f.l << "  c_l = " << fd(f.c_l)
                 << "  C_l = " << fd(f.C_l) << "\n";
    }
    if (o.out.empty()) {
        std::cout << body.str();
    } else {
        auto os = open_out(o.out);
        os << body.str();
    }
    return 0;
}

struct VerifyOpts {
    int n = 3, m = 3, N = 48;
    double L = 10.0;
    bool complex_field = false;
    std::string omega = "paper";
    std::string suite = "all";
    std::uint64_t seed = 42;
    int cases = 50;
    std::vector<std::string> tols;
    std::string out, csv;
    bool quiet = false;
};

int run_verify(const VerifyOpts& o) {
    cliff::RunConfig cfg;
    cfg.grid = cliff::GridSpec(o.n, o.N, o.L);
    cfg.m = o.m;
    cfg.field = o.complex_field ? cliff::Field::cplx : cliff::Field::real;
    cfg.seed = o.seed;
    cfg.cases = o.cases;
    cfg.omega = parse_omega(o.omega);
    cfg.suite = o.suite;
    cfg.tol_overrides = parse_tols(o.tols);
    if (cfg.suite != "all") {
        bool known = false;
        for (const auto& s : cliff::suite_names()) known = known || s == cfg.suite;
        if (!known) throw cliff::config_error("unknown suite: " + cfg.suite);
    }

    cliff::VerificationReport rep = cliff::run_suite(cfg);

    if (o.out.empty()) {
        cliff::write_report_json(std::cout, rep);
    } else {
        auto os = open_out(o.out);
        cliff::write_report_json(os, rep);
    }
    if (!o.csv.empty()) {
        auto os = open_out(o.csv);
        cliff::write_report_csv(os, rep);
    }
    if (!o.quiet) {
        std::cerr << "suite=" << cfg.suite << " checks=" << rep.checks
                  << " passed=" << rep.passed << " failed=" << rep.failed
                  << " min_margin=" << cliff::detail::fmt_double(rep.min_margin)
                  << " wall_ms=" << cliff::detail::fmt_double(rep.wall_ms) << "\n";
        for (const auto& r : rep.results)
            if (!r.pass)
                std::cerr << "FAIL " << r.check_id << "[" << r.case_id
                          << "] ratio=" << cliff::detail::fmt_double(r.ratio)
                          << " tol=" << cliff::detail::fmt_double(r.tolerance) << "\n";
    }
    return rep.all_pass() ? 0 : 1;
}

struct PlotOpts {
    std::string in, out;
};

int run_plotdata(const PlotOpts& o) {
    std::ifstream is(o.in);
    if (!is) throw cliff::config_error("cannot open report '" + o.in + "'");
    nlohmann::json j;
    try {
        is >> j;
    } catch (const std::exception& e) {
        throw cliff::config_error(std::string("report is not valid JSON: ") + e.what());
    }
    if (!j.contains("results") || !j["results"].is_array())
        throw cliff::config_error("report has no results array");

    // Tightest margins first so the rows most worth plotting lead the file.
    std::vector<nlohmann::json> rows(j["results"].begin(), j["results"].end());
    std::stable_sort(rows.begin(), rows.end(), [](const nlohmann::json& a,
                                                  const nlohmann::json& b) {
        return a.value("margin", 0.0) < b.value("margin", 0.0);
    });

    std::ostringstream body;
    body << "check_id,case_id,family,lhs,rhs,ratio,margin,pass\n";
    for (const auto& r : rows) {
        body << r.value("check_id", std::string{}) << "," << r.value("case_id", 0) << ","
             << r.value("family", std::string{}) << ","
             << cliff::detail::fmt_double(r.value("lhs", 0.0)) << ","
             << cliff::detail::fmt_double(r.value("rhs", 0.0)) << ","
             << cliff::detail::fmt_double(r.value("ratio", 0.0)) << ","
             << cliff::detail::fmt_double(r.value("margin", 0.0)) << ","
             << (r.value("pass", false) ? "1" : "0") << "\n";
    }
    if (o.out.empty()) {
        std::cout << body.str();
    } else {
        auto os = open_out(o.out);
        os << body.str();
    }
    return 0;
}

struct DumpOpts {
    int n = 3, m = 3, N = 24;
    double L = 10.0;
    bool complex_field = false;
    std::string family = "bump";
    std::uint64_t seed = 7;
    std::string out;
};

int run_dumpfield(const DumpOpts& o) {
    cliff::GridSpec g(o.n, o.N, o.L);
    cliff::AlgebraSignature sig(o.m, o.complex_field ? cliff::Field::cplx : cliff::Field::real);
    cliff::CliffordField f = cliff::make_field(parse_family(o.family), g, sig, o.seed);

    // Only blades that actually carry data become columns.
    std::vector<unsigned> live;
    for (unsigned b = 0; b < sig.dim(); ++b) {
        double peak = 0.0;
        const cliff::cplx* src = f.comp(b);
        for (std::size_t c = 0; c < f.cells(); ++c) peak = std::max(peak, std::norm(src[c]));
        if (peak > 1e-28) live.push_back(b);
    }

    std::ostringstream body;
    for (int k = 0; k < g.n; ++k) body << "x" << k << ",";
    body << "abs";
    for (unsigned b : live) body << ",c" << b << "_re,c" << b << "_im";
    body << "\n";
    cliff::CellWalker w(g);
    for (std::size_t c = 0; c < f.cells(); ++c, w.advance()) {
        for (int k = 0; k < g.n; ++k) body << cliff::detail::fmt_double(w.x[k]) << ",";
        body << cliff::detail::fmt_double(std::sqrt(f.coeff_norm_sq(c)));
        for (unsigned b : live)
            body << "," << cliff::detail::fmt_double(f.comp(b)[c].real()) << ","
                 << cliff::detail::fmt_double(f.comp(b)[c].imag());
        body << "\n";
    }
    if (o.out.empty()) {
        std::cout << body.str();
    } else {
        auto os = open_out(o.out);
        os << body.str();
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dirac-operator verification toolkit for Clifford-valued fields"};
    app.require_subcommand(1);

    ConstantsOpts co;
    CLI::App* c = app.add_subcommand("constants", "print the explicit-constants table");
    c->add_option("--n", co.n, "spatial dimension");
    c->add_option("--m", co.m, "algebra generators");
    c->add_flag("--complex", co.complex_field, "complexified algebra");
    c->add_option("--omega", co.omega, "surface normalizer: paper|sphere");
    c->add_flag("--json", co.as_json, "emit JSON instead of text");
    c->add_option("--out", co.out, "write to file instead of stdout");

    VerifyOpts vo;
    CLI::App* v = app.add_subcommand("verify", "run a verification suite");
    v->add_option("--suite", vo.suite, "suite name or 'all'");
    v->add_option("--n", vo.n, "spatial dimension");
    v->add_option("--m", vo.m, "algebra generators");
    v->add_flag("--complex", vo.complex_field, "complexified algebra");
    v->add_option("--grid", vo.N, "cells per axis");
    v->add_option("--extent", vo.L, "half-width of the box");
    v->add_option("--seed", vo.seed, "run seed");
    v->add_option("--cases", vo.cases, "cases per check family");
    v->add_option("--omega", vo.omega, "surface normalizer: paper|sphere");
    v->add_option("--tol", vo.tols, "tolerance override check=value")->take_all();
    v->add_option("--out", vo.out, "report JSON path (default stdout)");
    v->add_option("--csv", vo.csv, "also write flat CSV here");
    v->add_flag("--quiet", vo.quiet, "suppress the stderr summary");

    PlotOpts po;
    CLI::App* p = app.add_subcommand("plotdata", "flatten a report JSON into plot CSV");
    p->add_option("--in", po.in, "report JSON path")->required();
    p->add_option("--out", po.out, "CSV path (default stdout)");

    DumpOpts dofl;
    CLI::App* d = app.add_subcommand("dumpfield", "sample a field family to CSV");
    d->add_option("--family", dofl.family, "field family name");
    d->add_option("--n", dofl.n, "spatial dimension");
    d->add_option("--m", dofl.m, "algebra generators");
    d->add_flag("--complex", dofl.complex_field, "complexified algebra");
    d->add_option("--grid", dofl.N, "cells per axis");
    d->add_option("--extent", dofl.L, "half-width of the box");
    d->add_option("--seed", dofl.seed, "draw seed");
    d->add_option("--out", dofl.out, "CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*c) return run_constants(co);
        if (*v) return run_verify(vo);
        if (*p) return run_plotdata(po);
        if (*d) return run_dumpfield(dofl);
    } catch (const cliff::config_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cliff::algebra_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
