#pragma once

// Explicit constants for the Dirac-Sobolev inequality family: module product
// constants K, the surface normalization omega_n (two printed conventions,
// selectable), sharp HLS constants, the two L2 Sobolev constants and their
// minimum, fundamental-solution coefficients c_l with their L^p Sobolev
// constants C_l, the Gaussian log-Sobolev normalizer, the Nash-derived heat
// decay bound, and the zero-mode exponent thresholds.

#include <cmath>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "gamma.hpp"
#include "grid.hpp"

namespace cliff {

inline constexpr double pi_v = 3.14159265358979323846;

enum class OmegaVariant { paper, sphere };

inline const char* omega_variant_name(OmegaVariant v) {
    return v == OmegaVariant::paper ? "paper" : "sphere";
}

// paper: Gamma(n/2)/pi^{n/2};  sphere: the unit-sphere area 2 pi^{n/2}/Gamma(n/2).
inline double omega_n(int n, OmegaVariant v = OmegaVariant::paper) {
    if (n < 2) throw config_error("omega_n needs n >= 2");
    double g = gamma_fn(0.5 * n);
    double pp = std::pow(pi_v, 0.5 * n);
    return v == OmegaVariant::paper ? g / pp : 2.0 * pp / g;
}

enum class HlsMode { diagonal, l2 };

struct HlsConstant {
    double value;
    double p, q;
    double lambda;
    HlsMode mode;
};

// |<f, |x|^{-lambda} * g>_0| <= C ||f||_p ||g||_q.
// diagonal: p = q = 2n/(2n-lambda), 0 < lambda < n.
// l2 mode:  q = 2, p = 2n/(3n-2 lambda), n < 2 lambda < 2n, with the extra
//           factor (Gamma(lambda-n/2)/Gamma(3n/2-lambda))^{1/2}.
inline HlsConstant hls_constant(int n, int m, Field field, double lambda, HlsMode mode) {
    if (n < 1) throw config_error("hls_constant needs n >= 1");
    // range checks first: lambda = n would reach a gamma pole below
    if (mode == HlsMode::diagonal && !(lambda > 0.0 && lambda < n))
        throw config_error("diagonal HLS needs 0 < lambda < n");
    if (mode == HlsMode::l2 && !(2.0 * lambda > n && 2.0 * lambda < 2.0 * n))
        throw config_error("l2-mode HLS needs n < 2 lambda < 2n");
    const double K = kn_constant(m, field);
    double base = K * std::pow(pi_v, 0.5 * lambda) *
                  gamma_ratio(0.5 * (n - lambda), n - 0.5 * lambda) *
                  std::pow(gamma_ratio(0.5 * n, static_cast<double>(n)), -1.0 + lambda / n);
    if (mode == HlsMode::diagonal) {
        double p = 2.0 * n / (2.0 * n - lambda);
        return {base, p, p, lambda, mode};
    }
    double extra = std::sqrt(gamma_ratio(lambda - 0.5 * n, 1.5 * n - lambda));
    double p = 2.0 * n / (3.0 * n - 2.0 * lambda);
    return {base * extra, p, 2.0, lambda, mode};
}

enum class C1Variant { plancherel, young, min };

// ||u||_{2n/(n-2)} <= C1 ||Du||_2. Two routes with different constants;
// `min` picks the smaller (the one the downstream corollaries use).
inline double sobolev_c1(int n, int m, Field field, C1Variant v,
                         OmegaVariant om = OmegaVariant::paper) {
    if (n < 3) throw config_error("sobolev_c1 needs n >= 3");
    auto plancherel = [&] {
        double K = kn_constant(m, field);
        return std::sqrt(2.0) * std::pow(K, 1.5) / std::sqrt(double(n) * (n - 2)) *
               std::pow(pi_v, 0.5 * (n - 1)) * gamma_pow(double(n), 1.0 / n) /
               gamma_pow(0.5 * n, 1.0 + 1.0 / n);
    };
    auto young = [&] {
        return std::pow(double(n), (1.0 - n) / n) * std::pow(omega_n(n, om), -1.0 / n);
    };
    switch (v) {
        case C1Variant::plancherel: return plancherel();
        case C1Variant::young: return young();
        default: return std::min(plancherel(), young());
    }
}

// c_l: coefficient of the fundamental solution of D^l.
//   c_1 = 1
//   c_{2j}   = 1 / (2^{j-1} (j-1)! prod_{h=1..j} (2h-n))
//   c_{2j+1} = 1 / (2^j j! prod_{h=1..j} (2h-n))
// Throws when some factor 2h - n vanishes (even n <= l).
inline double fundamental_coefficient(int l, int n) {
    if (l < 1) throw config_error("fundamental_coefficient needs l >= 1");
    if (n < 1) throw config_error("fundamental_coefficient needs n >= 1");
    if (l == 1) return 1.0;
    const int j = l / 2;  // even l = 2j, odd l = 2j+1
    double denom = 1.0;
    for (int h = 1; h <= j; ++h) {
        int f = 2 * h - n;
        if (f == 0)
            throw config_error("fundamental_coefficient: factor 2h-n vanishes at h=" +
                               std::to_string(h));
        denom *= f;
    }
    double fact = 1.0;
    if (l % 2 == 0) {
        for (int i = 2; i <= j - 1; ++i) fact *= i;
        denom *= std::pow(2.0, j - 1) * fact;
    } else {
        for (int i = 2; i <= j; ++i) fact *= i;
        denom *= std::pow(2.0, j) * fact;
    }
    return 1.0 / denom;
}

// C_l = |c_l| n^{(l-n)/n} omega_n^{-l/n}, the weak-norm of the order-l
// fundamental solution (the modulus of c_l is what that computation uses).
inline double sobolev_cl(int l, int n, OmegaVariant om = OmegaVariant::paper) {
    if (!(l >= 1 && l < n)) throw config_error("sobolev_cl needs 1 <= l < n");
    return std::abs(fundamental_coefficient(l, n)) * std::pow(double(n), (l - double(n)) / n) *
           std::pow(omega_n(n, om), -double(l) / n);
}

// k = (C1 sqrt(n e) / 2)^n with C1 the smaller Sobolev constant; normalizes
// the Gaussian measure k e^{-|x|^2/2} dx of the log-Sobolev inequality.
inline double gaussian_normalizer(int n, int m, Field field,
                                  OmegaVariant om = OmegaVariant::paper) {
    double c1 = sobolev_c1(n, m, field, C1Variant::min, om);
    return std::pow(0.5 * c1 * std::sqrt(n * std::exp(1.0)), n);
}

// ||f(t)||_2 <= (16/(n C1^2) ||f0||_1^{-4/n} t + ||f0||_2^{-4/n})^{-n/4}.
inline double heat_decay_bound(double t, double l1_norm, double l2_norm, int n, double c1) {
    if (!(t >= 0.0)) throw config_error("heat_decay_bound needs t >= 0");
    if (!(l1_norm > 0.0 && l2_norm > 0.0))
        throw config_error("heat_decay_bound needs positive initial norms");
    double a = 16.0 / (n * c1 * c1) * std::pow(l1_norm, -4.0 / n) * t;
    double b = std::pow(l2_norm, -4.0 / n);
    return std::pow(a + b, -0.25 * n);
}

struct ZeroModeThresholds {
    double k;
    double alpha_new;     // 3 + k/2
    double alpha_prior;   // 6 - 11k/10
    bool prior_applicable;  // prior bound stated for k in [1, 4/3)
    bool improved;          // new threshold strictly below prior, where applicable
};

inline ZeroModeThresholds zero_mode_thresholds(double k) {
    if (!(k > 0.0 && k < 6.0)) throw config_error("zero_mode_thresholds needs 0 < k < 6");
    ZeroModeThresholds z;
    z.k = k;
    z.alpha_new = 3.0 + 0.5 * k;
    z.alpha_prior = 6.0 - 1.1 * k;
    z.prior_applicable = (k >= 1.0 && k < 4.0 / 3.0);
    z.improved = z.prior_applicable && z.alpha_new < z.alpha_prior;
    return z;
}

struct ConstantsTable {
    int n, m;
    Field field;
    OmegaVariant omega_variant;
    double omega;
    double K;
    double C1_plancherel, C1_young, C1_min;
    double gaussian_k;
    std::vector<HlsConstant> hls;        // diagonal lambda in {1, n/2}; l2 lambda = 3n/4
    struct FundamentalRow {
        int l;
        double c_l, C_l;
    };
    std::vector<FundamentalRow> fundamental;  // l = 1 .. min(4, n-1)
};

inline ConstantsTable build_constants(int n, int m, Field field,
                                      OmegaVariant om = OmegaVariant::paper) {
    if (n < 3) throw config_error("Sobolev constants need n >= 3");
    ConstantsTable t;
    t.n = n;
    t.m = m;
    t.field = field;
    t.omega_variant = om;
    t.omega = omega_n(n, om);
    t.K = kn_constant(m, field);
    t.C1_plancherel = sobolev_c1(n, m, field, C1Variant::plancherel, om);
    t.C1_young = sobolev_c1(n, m, field, C1Variant::young, om);
    t.C1_min = std::min(t.C1_plancherel, t.C1_young);
    t.gaussian_k = gaussian_normalizer(n, m, field, om);
    t.hls.push_back(hls_constant(n, m, field, 1.0, HlsMode::diagonal));
    t.hls.push_back(hls_constant(n, m, field, 0.5 * n, HlsMode::diagonal));
    t.hls.push_back(hls_constant(n, m, field, 0.75 * n, HlsMode::l2));
    for (int l = 1; l < n && l <= 4; ++l)
        t.fundamental.push_back({l, fundamental_coefficient(l, n), sobolev_cl(l, n, om)});
    return t;
}

}  // namespace cliff
