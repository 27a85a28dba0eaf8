#pragma once

// Frozen reference values for the test suite.
//
// Every number below was produced by an independent high-precision
// evaluation (mpmath, 60 digits) of the closed forms the library claims
// to implement, then correctly rounded to the nearest double (the
// literals are shortest round-trip decimals of those doubles). Tests
// compare the library against these literals instead of re-deriving
// them, so a bug in a shared helper cannot silently cancel on both
// sides.

namespace oracle {

// Clifford-algebra norm constants K_n, n = 1..16. Exact values are
// 2^(e/4) with an even integer e, so each is a power of two or a power
// of two times sqrt(2); the doubles below are exact up to the one
// rounding in sqrt(2).
inline constexpr double kn_real[16] = {
    1.0,
    1.0,
    1.4142135623730951,
    1.4142135623730951,
    2.0,
    2.8284271247461903,
    4.0,
    4.0,
    4.0,
    4.0,
    5.656854249492381,
    5.656854249492381,
    8.0,
    11.313708498984761,
    16.0,
    16.0,
};
inline constexpr double kn_cplx[16] = {
    1.4142135623730951,
    1.4142135623730951,
    2.0,
    2.0,
    2.8284271247461903,
    2.8284271247461903,
    4.0,
    4.0,
    5.656854249492381,
    5.656854249492381,
    8.0,
    8.0,
    11.313708498984761,
    11.313708498984761,
    16.0,
    16.0,
};

// Normalization constants: "paper" variant Gamma(n/2)/pi^{n/2} and the
// geometric sphere area 2 pi^{n/2}/Gamma(n/2).
inline constexpr double omega_paper_n3 = 0.15915494309189535;
inline constexpr double omega_paper_n4 = 0.10132118364233778;
inline constexpr double omega_paper_n5 = 0.07599088773175333;
inline constexpr double omega_sphere_n3 = 12.566370614359172;
inline constexpr double omega_sphere_n4 = 19.739208802178716;
inline constexpr double omega_sphere_n5 = 26.318945069571622;

// Gamma function spot values used by the constants module tests.
inline constexpr double gamma_half = 1.772453850905516;
inline constexpr double gamma_3half = 0.886226925452758;
inline constexpr double gamma_5half = 1.329340388179137;
inline constexpr double gamma_4 = 6.0;
inline constexpr double gamma_7p3 = 1271.4236336639092;
inline constexpr double gamma_p1 = 9.513507698668732;

// Hardy-Littlewood-Sobolev constants, diagonal exponent pair
// p = q = 2n/(2n - lambda) and the L2 off-diagonal pair. All at the
// real algebra's K (m = n).
inline constexpr double hls_diag_n3_lam1 = 3.244221049177575;
inline constexpr double hls_diag_n3_lam15 = 5.422163742681466;
inline constexpr double hls_diag_n3_lam2 = 10.329235009059001;
inline constexpr double hls_l2_n3_lam225 = 16.24570152667881;
inline constexpr double hls_l2_n3_lam2 = 11.927173226006241;
inline constexpr double hls_diag_n4_lam2 = 5.441398092702654;

// First-order Sobolev constant C_1: Plancherel route and Young route.
inline constexpr double c1_plancherel_n3_m3_real = 6.384988963097005;
inline constexpr double c1_plancherel_n3_m4_cplx = 10.738228661005605;
inline constexpr double c1_young_n3_paper = 0.8871133596609792;
inline constexpr double c1_young_n3_sphere = 0.20678349696646667;
inline constexpr double c1_young_n5_paper = 0.46203161425547273;

// Fundamental-solution series coefficients c_l at n = 3 (l = 1..4)
// and one deeper spot check.
inline constexpr double cl_n3[4] = {1.0, -1.0, -0.5, -0.5};
inline constexpr double c4_n5 = 0.16666666666666666;

// Weak-norm constants C_l = |c_l| n^{(l-n)/n} omega^{-l/n}, paper omega.
inline constexpr double cl_weak_n3_l1 = 0.8871133596609792;
inline constexpr double cl_weak_n3_l2 = 2.3609103386669696;

// Closed-form weak L^{n/(n-l)} norms of the sphere-normalized kernels,
// (omega_s/n)^{(n-l)/n} |c_l| / omega_s at n = 3.
inline constexpr double weak_norm_sphere_n3_l1 = 0.20678349696646667;
inline constexpr double weak_norm_sphere_n3_l2 = 0.1282782438530422;

// Normalizer k for the Gaussian log-Sobolev weight at n = m = 3,
// k = (0.5 C1 sqrt(n e))^n with the smaller C1 route.
inline constexpr double gaussian_k_n3 = 2.0322211966186563;

// Entropy of u = exp(-r^2/2) on R^3 against Lebesgue measure after
// normalizing to unit L2 mass: -3/4 - (3/4) ln(pi).
inline constexpr double entropy_gauss_n3 = -1.6085474143870502;

// Heat L2 decay envelope at t=1, l1=2, l2=1.5, n=3, smaller-C1 route.
inline constexpr double heat_bound_t1 = 0.4110588331628283;

// Dimension at which the Plancherel route first beats the Young route
// for C_1 (real algebra, m = n sweep).
inline constexpr int c1_crossover_n = 33;

} // namespace oracle
