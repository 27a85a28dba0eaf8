#pragma once

// One CheckResult per verified instance of an inequality or identity.
//
// Ratio semantics: a check passes when ratio <= 1 + tolerance, where
//   ratio mode:       ratio = lhs / rhs          (inequalities lhs <= rhs)
//   difference mode:  ratio = 1 + (lhs - rhs) / max(1, |lhs|, |rhs|)
// Difference mode serves statements whose sides can vanish or go negative
// (entropies, Gaussian moments); margin = 1 - ratio in both modes, so the
// summary's min_margin reads the same way everywhere.

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "constants.hpp"
#include "grid.hpp"
#include "kernels.hpp"
#include "random.hpp"
#include "spectral.hpp"

namespace cliff {

struct CheckResult {
    std::string check_id;
    int case_id = 0;
    std::string family;
    double lhs = 0.0, rhs = 0.0, ratio = 0.0, tolerance = 0.0, margin = 0.0;
    bool pass = false;
    int n = 0, N = 0;
    double L = 0.0;
    std::vector<std::pair<std::string, double>> params;
    std::vector<std::string> flags;
    double wall_ms = 0.0;

    CheckResult& with(const std::string& key, double v) {
        params.emplace_back(key, v);
        return *this;
    }
    CheckResult& flag(const std::string& f) {
        flags.push_back(f);
        return *this;
    }
    CheckResult& on(const GridSpec& g) {
        n = g.n;
        N = g.N;
        L = g.L;
        return *this;
    }
};

inline CheckResult ratio_check(const std::string& id, int case_id, double lhs, double rhs,
                               double tol) {
    CheckResult r;
    r.check_id = id;
    r.case_id = case_id;
    r.lhs = lhs;
    r.rhs = rhs;
    r.tolerance = tol;
    if (rhs == 0.0)
        r.ratio = (lhs == 0.0) ? 1.0 : std::numeric_limits<double>::infinity();
    else
        r.ratio = lhs / rhs;
    r.margin = 1.0 - r.ratio;
    r.pass = std::isfinite(r.ratio) && r.ratio <= 1.0 + tol;
    return r;
}

inline CheckResult difference_check(const std::string& id, int case_id, double lhs, double rhs,
                                    double tol) {
    CheckResult r;
    r.check_id = id;
    r.case_id = case_id;
    r.lhs = lhs;
    r.rhs = rhs;
    r.tolerance = tol;
    double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
    r.ratio = 1.0 + (lhs - rhs) / scale;
    r.margin = 1.0 - r.ratio;
    r.pass = std::isfinite(r.ratio) && r.ratio <= 1.0 + tol;
    r.flags.push_back("difference");
    return r;
}

// Pointwise geometric product of two sampled fields.
inline CliffordField pointwise_product(const CliffordField& f, const CliffordField& g) {
    if (!(f.grid == g.grid) || !(f.sig == g.sig))
        throw config_error("pointwise product needs matching grid and signature");
    CliffordField out(f.grid, f.sig);
    const unsigned dim = static_cast<unsigned>(f.sig.dim());
    for (unsigned a = 0; a < dim; ++a) {
        const cplx* fa = f.comp(a);
        bool live = false;
        for (std::size_t c = 0; c < f.cells() && !live; ++c) live = fa[c] != cplx{0.0, 0.0};
        if (!live) continue;
        for (unsigned b = 0; b < dim; ++b) {
            auto [blade, sign] = blade_mul(a, b);
            const double s = static_cast<double>(sign);
            const cplx* gb = g.comp(b);
            cplx* dst = out.comp(blade);
            for (std::size_t c = 0; c < f.cells(); ++c) dst[c] += s * fa[c] * gb[c];
        }
    }
    return out;
}

// ||f g||_r <= K_m ||f||_p ||g||_q with 1/r = 1/p + 1/q; the module constant
// K_m is the smallest bound for |ab| <= K|a||b| in the value algebra.
inline CheckResult check_module_holder(const CliffordField& f, const CliffordField& g, double p,
                                       double q, double tol, int case_id) {
    double r_exp = 1.0 / (1.0 / p + 1.0 / q);
    double lhs = lp_norm(pointwise_product(f, g), r_exp);
    double K = kn_constant(f.sig.m, f.sig.field);
    double rhs = K * lp_norm(f, p) * lp_norm(g, q);
    return ratio_check("module_holder", case_id, lhs, rhs, tol)
        .on(f.grid)
        .with("p", p)
        .with("q", q)
        .with("r", r_exp)
        .with("K", K);
}

// |<f, |x|^{-lambda} * g>| <= C ||f||_p ||g||_q with the explicit diagonal or
// L^2-endpoint constant.
inline CheckResult check_hls_riesz(const CliffordField& f, const CliffordField& g, double lambda,
                                   HlsMode mode, double tol, int case_id) {
    HlsConstant hc = hls_constant(f.grid.n, f.sig.m, f.sig.field, lambda, mode);
    CliffordField conv = convolve(g, KernelSpec::riesz(lambda));
    double lhs = norm(inner_product_clifford(f, conv));
    double rhs = hc.value * lp_norm(f, hc.p) * lp_norm(g, hc.q);
    CheckResult r = ratio_check(mode == HlsMode::diagonal ? "hls_riesz_diag" : "hls_riesz_l2",
                                case_id, lhs, rhs, tol)
                        .on(f.grid)
                        .with("lambda", lambda)
                        .with("p", hc.p)
                        .with("q", hc.q)
                        .with("C", hc.value);
    // truncated convolution is only trustworthy for decayed inputs; warn, not fail
    if (outer_shell_decay_ratio(g) > 1e-8) r.flag("truncation_warning");
    return r;
}

// Same pairing against the Cauchy kernel xbar/|x|^n (modulus |x|^{1-n}), so
// the lambda = n-1 constants apply verbatim.
inline CheckResult check_hls_cauchy(const CliffordField& f, const CliffordField& g, HlsMode mode,
                                    double tol, int case_id) {
    const int n = f.grid.n;
    HlsConstant hc = hls_constant(n, f.sig.m, f.sig.field, n - 1.0, mode);
    // raw kernel = omega * (normalized fundamental solution)
    KernelSpec spec = KernelSpec::cauchy(OmegaVariant::paper, +1);
    CliffordField conv = convolve(g, spec);
    double lhs = omega_n(n, OmegaVariant::paper) * norm(inner_product_clifford(f, conv));
    double rhs = hc.value * lp_norm(f, hc.p) * lp_norm(g, hc.q);
    CheckResult r = ratio_check(mode == HlsMode::diagonal ? "hls_cauchy_diag" : "hls_cauchy_l2",
                                case_id, lhs, rhs, tol)
                        .on(f.grid)
                        .with("lambda", n - 1.0)
                        .with("p", hc.p)
                        .with("q", hc.q)
                        .with("C", hc.value);
    if (outer_shell_decay_ratio(g) > 1e-8) r.flag("truncation_warning");
    return r;
}

// <Df, g>_0 = <f, Dg>_0: D is self-adjoint for this pairing (both sides are
// computed spectrally, so agreement is at roundoff level).
inline CheckResult check_dirac_selfadjoint(const CliffordField& f, const CliffordField& g,
                                           double tol, int case_id) {
    cplx a = inner_product_scalar(dirac_apply(f), g);
    cplx b = inner_product_scalar(f, dirac_apply(g));
    double scale = std::max({1.0, std::abs(a), std::abs(b)});
    double lhs = std::abs(a - b) / scale;
    return ratio_check("dirac_selfadjoint", case_id, lhs, tol, tol).on(f.grid);
}

// ||Df||_2 = ||grad f||_2 (Plancherel; |xi c| = |xi||c| for vectors xi).
inline CheckResult check_dirac_plancherel(const CliffordField& f, double tol, int case_id) {
    double lhs = lp_norm(dirac_apply(f), 2.0);
    double rhs = std::sqrt(gradient_l2_norm_sq(f));
    double scale = std::max({1.0, lhs, rhs});
    return ratio_check("dirac_plancherel", case_id, std::abs(lhs - rhs) / scale, tol, tol)
        .on(f.grid)
        .with("dirac_l2", lhs);
}

// ||f||_{2n/(n-2)} <= C1 ||Df||_2 for the requested constant route.
inline CheckResult check_sobolev_l2(const CliffordField& f, C1Variant variant, OmegaVariant om,
                                    double tol, int case_id) {
    const int n = f.grid.n;
    double c1 = sobolev_c1(n, f.sig.m, f.sig.field, variant, om);
    double lhs = lp_norm(f, 2.0 * n / (n - 2.0));
    double rhs = c1 * lp_norm(dirac_apply(f), 2.0);
    const char* id = variant == C1Variant::plancherel ? "sobolev_l2_plancherel"
                     : variant == C1Variant::young    ? "sobolev_l2_young"
                                                      : "sobolev_l2";
    return ratio_check(id, case_id, lhs, rhs, tol).on(f.grid).with("C1", c1).with(
        "q", 2.0 * n / (n - 2.0));
}

// All three C1 routes against the same field, sharing one Dirac application.
inline std::vector<CheckResult> check_sobolev_l2_all(const CliffordField& f, OmegaVariant om,
                                                     double tol_pl, double tol_yg, double tol_min,
                                                     int case_id) {
    const int n = f.grid.n;
    double q = 2.0 * n / (n - 2.0);
    double lhs = lp_norm(f, q);
    double dn = lp_norm(dirac_apply(f), 2.0);
    std::vector<CheckResult> out;
    const std::tuple<C1Variant, const char*, double> routes[] = {
        {C1Variant::plancherel, "sobolev_l2_plancherel", tol_pl},
        {C1Variant::young, "sobolev_l2_young", tol_yg},
        {C1Variant::min, "sobolev_l2", tol_min},
    };
    for (auto [v, id, tol] : routes) {
        double c1 = sobolev_c1(n, f.sig.m, f.sig.field, v, om);
        out.push_back(
            ratio_check(id, case_id, lhs, c1 * dn, tol).on(f.grid).with("C1", c1).with("q", q));
    }
    return out;
}

// ||f||_{pn/(n-pl)} <= C_l ||D^l f||_p, 1 < p < n/l.
inline CheckResult check_sobolev_lp(const CliffordField& f, int l, double p, OmegaVariant om,
                                    double tol, int case_id) {
    const int n = f.grid.n;
    if (!(p > 1.0 && p * l < n)) throw config_error("sobolev_lp needs 1 < p < n/l");
    double cl = sobolev_cl(l, n, om);
    double r_exp = p * n / (n - p * l);
    double lhs = lp_norm(f, r_exp);
    double rhs = cl * lp_norm(dirac_power(f, l), p);
    return ratio_check("sobolev_lp", case_id, lhs, rhs, tol)
        .on(f.grid)
        .with("l", l)
        .with("p", p)
        .with("r", r_exp)
        .with("C_l", cl);
}

// Entropy interpolation: for 1 < p < q,
//   entropy_p(u, p) <= (pq/(q-p)) log(||u||_q / ||u||_p).
inline CheckResult check_log_holder(const CliffordField& f, double p, double q, double tol,
                                    int case_id) {
    double lhs = entropy_p(f, p, Measure::lebesgue());
    double rhs = (p * q / (q - p)) * std::log(lp_norm(f, q) / lp_norm(f, p));
    return difference_check("log_holder", case_id, lhs, rhs, tol)
        .on(f.grid)
        .with("p", p)
        .with("q", q);
}

// Flat logarithmic Sobolev inequality:
//   int (|u|^2/||u||^2) log(|u|/||u||_2) <= (n/2) log(C1 ||Du||_2 / ||u||_2).
inline CheckResult check_log_sobolev(const CliffordField& f, OmegaVariant om, double tol,
                                     int case_id) {
    const int n = f.grid.n;
    double c1 = sobolev_c1(n, f.sig.m, f.sig.field, C1Variant::min, om);
    double lhs = entropy(f);
    double rhs = 0.5 * n * std::log(c1 * lp_norm(dirac_apply(f), 2.0) / lp_norm(f, 2.0));
    return difference_check("log_sobolev", case_id, lhs, rhs, tol).on(f.grid).with("C1", c1);
}

// Nash: ||u||_2^{1+2/n} <= C1 ||u||_1^{2/n} ||Du||_2.
inline CheckResult check_nash(const CliffordField& f, OmegaVariant om, double tol, int case_id) {
    const int n = f.grid.n;
    double c1 = sobolev_c1(n, f.sig.m, f.sig.field, C1Variant::min, om);
    double lhs = std::pow(lp_norm(f, 2.0), 1.0 + 2.0 / n);
    double rhs = c1 * std::pow(lp_norm(f, 1.0), 2.0 / n) * lp_norm(dirac_apply(f), 2.0);
    return ratio_check("nash", case_id, lhs, rhs, tol).on(f.grid).with("C1", c1);
}

// Heat flow with componentwise nonnegative data f0, one evolution per call:
//   heat_l2_decay:    ||f(t)||_2 <= (16/(n C1^2) ||f0||_1^{-4/n} t + ||f0||_2^{-4/n})^{-n/4}
//   heat_l1_upper:    ||f(t)||_1 <= 2^{m/2} ||f0||_1
//   heat_l1_lower:    2^{-m/2} ||f0||_1 <= ||f(t)||_1
//   heat_l2_monotone: ||f(t)||_2 <= ||f0||_2
inline std::vector<CheckResult> check_heat_family(const CliffordField& f0, double t,
                                                  OmegaVariant om, double tol_decay,
                                                  double tol_l1, int case_id) {
    const int n = f0.grid.n;
    double c1 = sobolev_c1(n, f0.sig.m, f0.sig.field, C1Variant::min, om);
    CliffordField ht = heat_evolve(f0, t);
    double l1_0 = lp_norm(f0, 1.0), l2_0 = lp_norm(f0, 2.0);
    double l1_t = lp_norm(ht, 1.0), l2_t = lp_norm(ht, 2.0);
    double half = std::exp2(0.5 * f0.sig.m);
    std::vector<CheckResult> out;
    out.push_back(ratio_check("heat_l2_decay", case_id, l2_t,
                              heat_decay_bound(t, l1_0, l2_0, n, c1), tol_decay)
                      .on(f0.grid)
                      .with("t", t)
                      .with("C1", c1));
    out.push_back(
        ratio_check("heat_l1_upper", case_id, l1_t, half * l1_0, tol_l1).on(f0.grid).with("t", t));
    out.push_back(ratio_check("heat_l1_lower", case_id, l1_0 / half, l1_t, tol_l1)
                      .on(f0.grid)
                      .with("t", t));
    out.push_back(
        ratio_check("heat_l2_monotone", case_id, l2_t, l2_0, tol_l1).on(f0.grid).with("t", t));
    return out;
}

// Gaussian logarithmic Sobolev inequality for d mu = k e^{-|x|^2/2} dx with
// k = (C1 sqrt(n e)/2)^n: for ||u||_mu = 1,
//   int |u|^2 log|u| dmu <= int |Du|^2 dmu.
inline CheckResult check_gauss_lsi(const CliffordField& f, OmegaVariant om, double tol,
                                   int case_id) {
    const int n = f.grid.n;
    double k = gaussian_normalizer(n, f.sig.m, f.sig.field, om);
    Measure mu = Measure::gaussian(k);
    double nf = lp_norm(f, 2.0, mu);
    if (nf == 0.0) throw singular_error("gauss_lsi of the zero field");
    double lhs = entropy(f, mu);
    double dn = lp_norm(dirac_apply(f), 2.0, mu);
    double rhs = (dn / nf) * (dn / nf);
    return difference_check("gauss_lsi", case_id, lhs, rhs, tol).on(f.grid).with("k", k);
}

// Gaussian Poincare family: for ||v||_mu = 1 and q >= 1,
//   int |v|^2 dmu - (int |v|^{2/q} dmu)^q <= 2(q-1) int |Dv|^2 dmu.
// At q = 1 both sides vanish identically; the moment code path is shared so
// the cancellation is exact in floating point as well.
inline CheckResult check_poincare(const CliffordField& f, double q, OmegaVariant om, double tol,
                                  int case_id) {
    if (!(q >= 1.0)) throw config_error("poincare needs q >= 1");
    const int n = f.grid.n;
    double k = gaussian_normalizer(n, f.sig.m, f.sig.field, om);
    Measure mu = Measure::gaussian(k);
    double nf = lp_norm(f, 2.0, mu);
    if (nf == 0.0) throw singular_error("poincare of the zero field");
    CliffordField vn = f;
    const double inv = 1.0 / nf;
    for (auto& c : vn.data) c *= inv;
    double m2 = field_moment(vn, 2.0, mu);
    double mq = field_moment(vn, 2.0 / q, mu);
    double lhs = m2 - std::pow(mq, q);
    double dn = lp_norm(dirac_apply(vn), 2.0, mu);
    double rhs = 2.0 * (q - 1.0) * dn * dn;
    return difference_check("poincare", case_id, lhs, rhs, tol).on(f.grid).with("q", q).with(
        "k", k);
}

// Re <x v, D v> = -n/2 for normalized profile-times-constant fields; pass
// iff the absolute deviation stays within tol.
inline CheckResult check_radial_identity(const CliffordField& v, double tol, int case_id) {
    double lhs = radial_identity_check(v);
    double rhs = -0.5 * v.grid.n;
    return difference_check("radial_identity", case_id, std::abs(lhs - rhs), 0.0, tol)
        .on(v.grid)
        .with("value", lhs);
}

// D(Tg) = g under exactly one kernel convention; expect_fail marks the
// combinations that are supposed to miss, flipping the pass criterion.
inline CheckResult check_teodorescu_inversion(const CliffordField& g, OmegaVariant om, int sign,
                                              double tol, bool expect_fail, int case_id) {
    double defect = teodorescu_inversion_defect(g, om, sign);
    CheckResult r = ratio_check("teodorescu_inversion", case_id, defect, tol, tol).on(g.grid);
    r.with("omega_variant", om == OmegaVariant::sphere ? 1.0 : 0.0).with("sign", sign);
    if (expect_fail) {
        r.pass = !r.pass;
        r.margin = -r.margin;
        r.flag("expected_failure");
    }
    return r;
}

// Max pointwise defect of both differentiation recursions at order pair
// (2j, 2j+1), against 4th-order finite differences.
inline CheckResult check_kernel_recursion(int j, int n, std::uint64_t seed, double tol,
                                          int case_id, int npts = 6) {
    SplitMix64 rng(seed);
    std::vector<std::vector<double>> pts;
    for (int i = 0; i < npts; ++i) pts.push_back(random_point_shell(rng, n, 0.6, 3.0));
    double err = kernel_recursion_check(j, n, pts);
    CheckResult r = ratio_check("kernel_recursion", case_id, err, tol, tol);
    r.n = n;
    return r.with("j", j);
}

// Discrete weak-L^{n/(n-l)} norm of the sampled order-l kernel against the
// closed form (omega_vol/n)^{(n-l)/n} |c_l| / omega_kernel, both under the
// geometric sphere normalization.
inline CheckResult check_kernel_weak_norm(const GridSpec& g, int l, double tol, int case_id) {
    const int n = g.n;
    if (!(l >= 1 && l < n)) throw config_error("kernel weak norm needs 1 <= l < n");
    AlgebraSignature sig(n, Field::real);
    CliffordField kf = kernel_field(g, sig, KernelSpec::fundamental(l, OmegaVariant::sphere, +1));
    double q = double(n) / (n - l);
    double om = omega_n(n, OmegaVariant::sphere);
    // level sets under a 12-cell radius can't resolve the r^{-(n-l)} volume
    // scaling; the sup over them sits a factor ~2 high at every N
    auto min_cells = static_cast<std::size_t>(om / n * std::pow(12.0, n));
    double lhs = weak_lq_norm(kf, q, min_cells);
    double rhs = std::pow(om / n, (n - double(l)) / n) *
                 std::abs(fundamental_coefficient(l, n)) / om;
    double scale = std::max({1.0, lhs, rhs});
    return ratio_check("kernel_weak_norm", case_id, std::abs(lhs - rhs) / scale, tol, tol)
        .on(g)
        .with("l", l)
        .with("q", q)
        .with("closed_form", rhs)
        .with("measured", lhs);
}

}  // namespace cliff
