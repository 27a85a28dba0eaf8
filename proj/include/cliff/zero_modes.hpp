#pragma once
// Polynomially decaying Dirac null fields and their weighted-integral probes.
//
// Model family on R^n, valued in the complex algebra with m = n+1 generators:
//
//     psi(x) = (1 + r^2)^{-a} (1 + x) u0,    r = |x|,  a > n/2,
//
// with a constant multivector u0. Left multiplication by a paravector s + x
// scales coefficient modulus by sqrt(s^2 + r^2) exactly, so both |psi| and
// |D psi| have closed forms:
//
//     |psi|   = (1 + r^2)^{1/2 - a} |u0|
//     D psi   = (1 + r^2)^{-a-1} [ ((2a - n) r^2 - n) - 2a x ] u0
//     |D psi| = (1 + r^2)^{-a-1} sqrt(s^2 + 4 a^2 r^2),  s = (2a - n) r^2 - n.
//
// The grid checks compare sampled data against these, then drive the weighted
// tail integrals  int_{|x|>1} |psi|^k |x|^{2k - alpha} dx  whose convergence
// boundary is what the threshold table records.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "checks.hpp"
#include "constants.hpp"
#include "grid.hpp"
#include "random.hpp"
#include "spectral.hpp"

namespace cliff {

struct ZeroMode {
    CliffordField psi;
    double a = 0.0;
    Multivector u0;
};

// |psi(x)| per unit |u0|.
inline double mode_envelope(double a, double r2) { return std::pow(1.0 + r2, 0.5 - a); }

// |D psi(x)| per unit |u0|.
inline double mode_dirac_envelope(double a, int n, double r2) {
    double s = (2.0 * a - n) * r2 - n;
    return std::pow(1.0 + r2, -a - 1.0) * std::sqrt(s * s + 4.0 * a * a * r2);
}

inline ZeroMode synthesize_mode(const GridSpec& g, double a, std::uint64_t seed) {
    if (!(a > 0.5 * g.n)) throw config_error("mode exponent needs a > n/2");
    AlgebraSignature sig(g.n + 1, Field::cplx);
    SplitMix64 rng(seed);
    Multivector u0 = random_multivector(sig, rng);
    u0 *= cplx{1.0 / norm(u0), 0.0};

    // psi = env(r) (u0 + sum_j x_j e_j u0); precompute the blade images of u0.
    std::vector<Multivector> eju0;
    for (int j = 0; j < g.n; ++j) {
        std::vector<double> e(static_cast<std::size_t>(g.n), 0.0);
        e[static_cast<std::size_t>(j)] = 1.0;
        eju0.push_back(geometric_product(vector_mv(sig, e), u0));
    }

    ZeroMode zm;
    zm.a = a;
    zm.u0 = u0;
    zm.psi = CliffordField(g, sig);
    CellWalker w(g);
    for (std::size_t c = 0; c < zm.psi.cells(); ++c, w.advance()) {
        double env = std::pow(1.0 + w.radius_sq(), -a);
        for (unsigned b = 0; b < sig.dim(); ++b) {
            cplx v = u0[b];
            for (int j = 0; j < g.n; ++j) v += w.x[j] * eju0[static_cast<std::size_t>(j)][b];
            zm.psi.comp(b)[c] = env * v;
        }
    }
    return zm;
}

// D psi sampled from the closed form above (no spectral differentiation).
inline CliffordField mode_dirac_closed_form(const ZeroMode& zm) {
    const GridSpec& g = zm.psi.grid;
    const AlgebraSignature& sig = zm.psi.sig;
    const double a = zm.a;
    std::vector<Multivector> eju0;
    for (int j = 0; j < g.n; ++j) {
        std::vector<double> e(static_cast<std::size_t>(g.n), 0.0);
        e[static_cast<std::size_t>(j)] = 1.0;
        eju0.push_back(geometric_product(vector_mv(sig, e), zm.u0));
    }
    CliffordField out(g, sig);
    CellWalker w(g);
    for (std::size_t c = 0; c < out.cells(); ++c, w.advance()) {
        double r2 = w.radius_sq();
        double env = std::pow(1.0 + r2, -a - 1.0);
        double s = (2.0 * a - g.n) * r2 - g.n;
        for (unsigned b = 0; b < sig.dim(); ++b) {
            cplx v = s * zm.u0[b];
            for (int j = 0; j < g.n; ++j)
                v -= 2.0 * a * w.x[j] * eju0[static_cast<std::size_t>(j)][b];
            out.comp(b)[c] = env * v;
        }
    }
    return out;
}

// Sampled modulus against the closed-form envelope, worst cell relative to
// the peak value.
inline CheckResult zm_envelope_check(const ZeroMode& zm, double tol, int case_id) {
    double u = norm(zm.u0);
    double worst = 0.0, peak = 0.0;
    CellWalker w(zm.psi.grid);
    for (std::size_t c = 0; c < zm.psi.cells(); ++c, w.advance()) {
        double want = mode_envelope(zm.a, w.radius_sq()) * u;
        double have = std::sqrt(zm.psi.coeff_norm_sq(c));
        worst = std::max(worst, std::abs(have - want));
        peak = std::max(peak, want);
    }
    return ratio_check("zm_envelope", case_id, worst / peak, tol, tol)
        .on(zm.psi.grid)
        .with("a", zm.a);
}

// Spectral Dirac against the closed form, L^2 over the interior half-box
// (|x|_inf <= L/2); the truncation to a torus pollutes only the outer shell.
inline CheckResult zm_dirac_consistency(const ZeroMode& zm, const CliffordField& closed,
                                        double tol, int case_id) {
    const GridSpec& g = zm.psi.grid;
    CliffordField spectral = dirac_apply(zm.psi);
    const double edge = 0.5 * g.L;
    KahanSum err, ref;
    CellWalker w(g);
    for (std::size_t c = 0; c < spectral.cells(); ++c, w.advance()) {
        bool interior = true;
        for (int k = 0; k < g.n; ++k)
            if (std::abs(w.x[k]) > edge) interior = false;
        if (!interior) continue;
        double d = 0.0;
        for (unsigned b = 0; b < spectral.sig.dim(); ++b)
            d += std::norm(spectral.comp(b)[c] - closed.comp(b)[c]);
        err.add(d);
        ref.add(closed.coeff_norm_sq(c));
    }
    double rel = std::sqrt(err.value() / ref.value());
    return ratio_check("zm_dirac_consistency", case_id, rel, tol, tol)
        .on(g)
        .with("a", zm.a);
}

// sup_r <x> |D psi| / |psi| <= (2a - n) + n + a = 3a: the mode solves a
// Dirac equation with a potential decaying like 1/<x>. The sup is over a
// dense radius sample, not just grid shells.
inline CheckResult zm_potential_decay(double a, int n, double tol, int case_id) {
    double sup = 0.0;
    for (int i = 0; i <= 4000; ++i) {
        double r = 40.0 * i / 4000.0;
        double r2 = r * r;
        double q = std::sqrt(1.0 + r2) * mode_dirac_envelope(a, n, r2) / mode_envelope(a, r2);
        sup = std::max(sup, q);
    }
    return ratio_check("zm_potential_decay", case_id, sup, 3.0 * a, tol)
        .with("a", a)
        .with("n", static_cast<double>(n));
}

// D(|x| psi) assembled pointwise from the product rule: for the scalar
// weight |x|, D(|x| psi) = |x| D psi + (x/|x|) psi, and left multiplication
// by the unit vector x/|x| preserves coefficient modulus. The spectral route
// is useless here (|x| has a kink at the origin), so both chain checks below
// run on this closed form.
inline CliffordField mode_weighted_dirac(const ZeroMode& zm, const CliffordField& dpsi) {
    const GridSpec& g = zm.psi.grid;
    const AlgebraSignature& sig = zm.psi.sig;
    const unsigned d = static_cast<unsigned>(sig.dim());
    CliffordField out(g, sig);
    CellWalker w(g);
    for (std::size_t c = 0; c < out.cells(); ++c, w.advance()) {
        double r = std::sqrt(w.radius_sq());
        for (unsigned b = 0; b < d; ++b) out.comp(b)[c] = r * dpsi.comp(b)[c];
        for (int j = 0; j < g.n; ++j) {
            double xj = w.x[j] / r;
            for (unsigned b = 0; b < d; ++b) {
                auto [blade, sign] = blade_mul(1u << j, b);
                out.comp(blade)[c] += (sign * xj) * zm.psi.comp(b)[c];
            }
        }
    }
    return out;
}

// Weighted chain on the synthesized mode: with w = |x| psi,
//   zm_chain_sobolev:  ||w||_{2n/(n-2)} <= C1 ||D w||_2
//   zm_chain_leibniz:  ||D w||_2 <= || |x| D psi ||_2 + ||psi||_2
// (|D|x|| = 1, so the commutator term is bounded by ||psi||_2; the Leibniz
// bound holds cell by cell, which keeps its discrete margin nonnegative).
inline CheckResult zm_chain_sobolev(const ZeroMode& zm, const CliffordField& dpsi,
                                    OmegaVariant om, double tol, int case_id) {
    const int n = zm.psi.grid.n;
    CliffordField w = scalar_weight_multiply(zm.psi, [n](const double* x) {
        double r2 = 0.0;
        for (int k = 0; k < n; ++k) r2 += x[k] * x[k];
        return std::sqrt(r2);
    });
    double c1 = sobolev_c1(n, zm.psi.sig.m, zm.psi.sig.field, C1Variant::min, om);
    double lhs = lp_norm(w, 2.0 * n / (n - 2.0));
    double rhs = c1 * lp_norm(mode_weighted_dirac(zm, dpsi), 2.0);
    return ratio_check("zm_chain_sobolev", case_id, lhs, rhs, tol)
        .on(zm.psi.grid)
        .with("a", zm.a)
        .with("C1", c1);
}

inline CheckResult zm_chain_leibniz(const ZeroMode& zm, const CliffordField& dpsi, double tol,
                                    int case_id) {
    const int n = zm.psi.grid.n;
    auto radius = [n](const double* x) {
        double r2 = 0.0;
        for (int k = 0; k < n; ++k) r2 += x[k] * x[k];
        return std::sqrt(r2);
    };
    double lhs = lp_norm(mode_weighted_dirac(zm, dpsi), 2.0);
    double rhs = lp_norm(scalar_weight_multiply(dpsi, radius), 2.0) + lp_norm(zm.psi, 2.0);
    return ratio_check("zm_chain_leibniz", case_id, lhs, rhs, tol)
        .on(zm.psi.grid)
        .with("a", zm.a);
}

// Holder split of the weighted tail integral over the annulus 1 < |x| < L/2:
//   sum (|psi| r)^k r^{k-alpha} h^n
//     <= (sum (|psi| r)^q h^n)^{k/q} (sum r^{(k-alpha) q/(q-k)} h^n)^{(q-k)/q}
// with q = 2n/(n-2), the pairing that reduces the tail to the weighted
// Sobolev norm. Discrete Holder on finite sums, so any measurable violation
// is a bug, not discretization. |psi| enters through the exact envelope.
inline CheckResult zm_holder_split(const GridSpec& g, double a, double k, double alpha,
                                   double tol, int case_id) {
    if (g.n < 3) throw config_error("holder split needs dimension n >= 3");
    const double q = 2.0 * g.n / (g.n - 2.0);
    if (!(k >= 1.0 && k < q)) throw config_error("holder split needs 1 <= k < 2n/(n-2)");
    const double R = 0.5 * g.L;
    if (!(R > 1.5)) throw config_error("holder split needs extent L > 3");
    KahanSum lhs_acc, pow_q, pow_dual;
    const double vol = g.cell_volume();
    CellWalker w(g);
    for (std::size_t c = 0; c < g.cells(); ++c, w.advance()) {
        double r2 = w.radius_sq();
        if (r2 <= 1.0 || r2 >= R * R) continue;
        double r = std::sqrt(r2);
        double er = mode_envelope(a, r2) * r;
        lhs_acc.add(std::pow(er, k) * std::pow(r, k - alpha) * vol);
        pow_q.add(std::pow(er, q) * vol);
        pow_dual.add(std::pow(r, (k - alpha) * q / (q - k)) * vol);
    }
    double lhs = lhs_acc.value();
    double rhs = std::pow(pow_q.value(), k / q) * std::pow(pow_dual.value(), (q - k) / q);
    return ratio_check("zm_holder_split", case_id, lhs, rhs, tol)
        .on(g)
        .with("a", a)
        .with("k", k)
        .with("alpha", alpha);
}

// Tail integral int_{|x|>1} |psi|^k |x|^{2k - alpha} dx accumulated over
// sqrt(2)-spaced shells, walked with the scalar envelope (no field storage).
// The trailing increment ratio approaches 2^{e/2} with
// e = n + k (1 - 2a) + (2k - alpha); stall and convergence are read off it.
struct ShellScan {
    std::vector<double> radii;       // shell boundaries, sqrt(2)-spaced from 1
    std::vector<double> increments;  // weighted mass per shell
    double tail_ratio = 0.0;         // geometric mean of the last three ratios
    bool converged = false;          // tail_ratio <= 0.98
    bool stalled = false;            // tail_ratio >= 0.995
};

inline ShellScan weighted_shell_scan(const GridSpec& g, double a, double k, double alpha) {
    ShellScan scan;
    for (int i = 0; std::exp2(0.5 * i) <= g.L * (1.0 + 1e-12); ++i)
        scan.radii.push_back(std::exp2(0.5 * i));
    if (scan.radii.size() < 5) throw config_error("shell scan needs extent L >= 4");

    std::vector<KahanSum> acc(scan.radii.size() - 1);
    const double vol = g.cell_volume();
    CellWalker w(g);
    for (std::size_t c = 0; c < g.cells(); ++c, w.advance()) {
        double r2 = w.radius_sq();
        double r = std::sqrt(r2);
        if (r < scan.radii.front() || r >= scan.radii.back()) continue;
        auto it = std::upper_bound(scan.radii.begin(), scan.radii.end(), r);
        std::size_t bin = static_cast<std::size_t>(it - scan.radii.begin()) - 1;
        double wgt = std::pow(1.0 + r2, k * (0.5 - a)) * std::pow(r2, 0.5 * (2.0 * k - alpha));
        acc[bin].add(wgt * vol);
    }
    for (auto& s : acc) scan.increments.push_back(s.value());

    std::size_t last = scan.increments.size() - 1;
    scan.tail_ratio = std::cbrt(scan.increments[last] / scan.increments[last - 3]);
    scan.converged = scan.tail_ratio <= 0.98;
    scan.stalled = scan.tail_ratio >= 0.995;
    return scan;
}

// Convergence probe: shells must decay geometrically.
inline CheckResult zm_integral_check(const char* check_id, const GridSpec& g, double a, double k,
                                     double alpha, int case_id) {
    ShellScan scan = weighted_shell_scan(g, a, k, alpha);
    return ratio_check(check_id, case_id, scan.tail_ratio, 0.98, 0.0)
        .on(g)
        .with("a", a)
        .with("k", k)
        .with("alpha", alpha);
}

// Stall probe: below the threshold the shell increments refuse to decay.
// The check passes when the scan stalls, and carries a flag saying so.
inline CheckResult zm_integral_stall_check(const GridSpec& g, double a, double k, double alpha,
                                           int case_id) {
    ShellScan scan = weighted_shell_scan(g, a, k, alpha);
    return ratio_check("zm_integral_stall", case_id, 0.995, scan.tail_ratio, 0.0)
        .on(g)
        .with("a", a)
        .with("k", k)
        .with("alpha", alpha)
        .with("tail_ratio", scan.tail_ratio)
        .flag("expected_stall");
}

// alpha_new(k) < alpha_prior(k) strictly on the window where the prior bound
// is stated.
inline CheckResult zm_threshold_improvement(double k, int case_id) {
    ZeroModeThresholds th = zero_mode_thresholds(k);
    CheckResult r = ratio_check("zm_threshold_improved", case_id, th.alpha_new, th.alpha_prior,
                                0.0)
                        .with("k", k);
    if (!th.prior_applicable) {
        r.pass = false;
        r.flag("prior_not_applicable");
    }
    return r;
}

}  // namespace cliff
