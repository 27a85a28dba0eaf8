#pragma once

// Uniform cell-centered grids on [-L,L)^n and Clifford-valued sampled fields.
// Cell centers x_i = -L + (i + 1/2) h with h = 2L/N, so no cell sits on the
// origin. All reductions use Neumaier-compensated sums in a fixed traversal
// order (row-major, axis 0 slowest) so repeated runs are byte-identical.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "algebra.hpp"

namespace cliff {

struct config_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

namespace detail {
inline bool smooth_235(int v) {
    for (int p : {2, 3, 5})
        while (v % p == 0) v /= p;
    return v == 1;
}
}  // namespace detail

struct GridSpec {
    int n = 3;    // spatial dimension
    int N = 48;   // cells per axis; even, >= 8, prime factors in {2,3,5}
    double L = 10.0;

    GridSpec() = default;
    GridSpec(int n_, int N_, double L_) : n(n_), N(N_), L(L_) {
        if (n < 1 || n > 6)
            throw config_error("grid dimension must be in [1,6], got n=" + std::to_string(n));
        if (N < 8 || N % 2 != 0 || !detail::smooth_235(N))
            throw config_error("grid size must be even, >= 8, with prime factors in {2,3,5}; got N=" +
                               std::to_string(N));
        if (!(L > 0.0)) throw config_error("grid extent L must be positive");
    }

    double h() const { return 2.0 * L / N; }
    std::size_t cells() const {
        std::size_t c = 1;
        for (int k = 0; k < n; ++k) c *= static_cast<std::size_t>(N);
        return c;
    }
    double cell_volume() const { return std::pow(h(), n); }
    double center(int i) const { return -L + (i + 0.5) * h(); }
    bool operator==(const GridSpec&) const = default;
};

// Walks cells in index order, keeping integer coordinates and the physical
// center up to date without re-decoding.
struct CellWalker {
    const GridSpec& g;
    std::array<int, 6> idx{};
    std::array<double, 6> x{};

    explicit CellWalker(const GridSpec& grid) : g(grid) {
        for (int k = 0; k < g.n; ++k) {
            idx[k] = 0;
            x[k] = g.center(0);
        }
    }
    void advance() {
        for (int k = g.n - 1; k >= 0; --k) {
            if (++idx[k] < g.N) {
                x[k] = g.center(idx[k]);
                return;
            }
            idx[k] = 0;
            x[k] = g.center(0);
        }
    }
    double radius_sq() const {
        double s = 0.0;
        for (int k = 0; k < g.n; ++k) s += x[k] * x[k];
        return s;
    }
};

struct KahanSum {
    double s = 0.0, comp = 0.0;
    void add(double v) {
        double t = s + v;
        if (std::abs(s) >= std::abs(v))
            comp += (s - t) + v;
        else
            comp += (v - t) + s;
        s = t;
    }
    double value() const { return s + comp; }
};

struct Measure {
    enum class Kind { lebesgue, gaussian } kind = Kind::lebesgue;
    double k = 1.0;  // gaussian density k e^{-|x|^2/2}

    static Measure lebesgue() { return {Kind::lebesgue, 1.0}; }
    static Measure gaussian(double k_) { return {Kind::gaussian, k_}; }
    // density relative to the cell volume quadrature weight
    double density(double radius_sq) const {
        return kind == Kind::lebesgue ? 1.0 : k * std::exp(-0.5 * radius_sq);
    }
};

// Sampled Clifford-valued field. Storage is component-major: the coefficient
// of blade b over all cells occupies data[b*cells .. (b+1)*cells).
struct CliffordField {
    GridSpec grid;
    AlgebraSignature sig;
    std::vector<cplx> data;

    CliffordField() = default;
    CliffordField(const GridSpec& g, const AlgebraSignature& s) : grid(g), sig(s) {
        const std::size_t want = g.cells() * s.dim();
        // guard before touching memory; 2^27 coefficients = 2 GiB
        if (want > (std::size_t{1} << 27))
            throw config_error("field too large: " + std::to_string(want) + " coefficients");
        data.assign(want, cplx{0.0, 0.0});
    }

    std::size_t cells() const { return grid.cells(); }
    cplx* comp(unsigned blade) { return data.data() + blade * cells(); }
    const cplx* comp(unsigned blade) const { return data.data() + blade * cells(); }

    Multivector at(std::size_t cell) const {
        Multivector v(sig);
        for (unsigned b = 0; b < sig.dim(); ++b) v[b] = comp(b)[cell];
        return v;
    }
    void set(std::size_t cell, const Multivector& v) {
        for (unsigned b = 0; b < sig.dim(); ++b) comp(b)[cell] = v[b];
    }
    double coeff_norm_sq(std::size_t cell) const {
        double s = 0.0;
        for (unsigned b = 0; b < sig.dim(); ++b) s += std::norm(comp(b)[cell]);
        return s;
    }
    void zero_imaginary() {
        for (auto& v : data) v = cplx{v.real(), 0.0};
    }
};

inline CliffordField sample_field(const GridSpec& g, const AlgebraSignature& sig,
                                  const std::function<Multivector(const double*)>& fn) {
    CliffordField f(g, sig);
    CellWalker w(g);
    for (std::size_t c = 0; c < f.cells(); ++c, w.advance()) {
        Multivector v = fn(w.x.data());
        for (unsigned b = 0; b < sig.dim(); ++b) f.comp(b)[c] = v[b];
    }
    return f;
}

// ||  |x|^w f  ||_p with the given measure. p >= 1 finite.
inline double lp_norm(const CliffordField& f, double p, const Measure& mu = Measure::lebesgue(),
                      double weight_exponent = 0.0) {
    if (!(p >= 1.0)) throw config_error("lp_norm needs p >= 1");
    const double vol = f.grid.cell_volume();
    KahanSum acc;
    CellWalker w(f.grid);
    for (std::size_t c = 0; c < f.cells(); ++c, w.advance()) {
        double r2 = w.radius_sq();
        double a = std::sqrt(f.coeff_norm_sq(c));
        if (weight_exponent != 0.0) a *= std::pow(r2, 0.5 * weight_exponent);
        if (a == 0.0) continue;
        acc.add(std::pow(a, p) * mu.density(r2) * vol);
    }
    return std::pow(acc.value(), 1.0 / p);
}

// Discrete weak-L^q quasinorm: max over sampled levels s of
// s * (h^n #{|f| >= s})^{1/q}. On an indicator of k cells this equals
// (k h^n)^{1/q} exactly; Chebyshev gives weak <= strong on the samples.
// min_count > 1 restricts the sup to superlevel sets of at least that many
// cells. Near a sampled singularity the few innermost cells carry an O(1)
// volume-quantization error that no refinement removes, so comparisons with
// continuum weak norms should skip thresholds their level sets can't resolve.
inline double weak_lq_norm(const CliffordField& f, double q, std::size_t min_count = 1) {
    if (!(q >= 1.0)) throw config_error("weak_lq_norm needs q >= 1");
    std::vector<double> mags(f.cells());
    for (std::size_t c = 0; c < f.cells(); ++c) mags[c] = std::sqrt(f.coeff_norm_sq(c));
    std::sort(mags.begin(), mags.end(), std::greater<double>());
    const double vol = f.grid.cell_volume();
    double best = 0.0;
    for (std::size_t i = 0; i < mags.size(); ++i) {
        if (i + 1 < min_count) continue;
        if (i + 1 < mags.size() && mags[i + 1] == mags[i]) continue;  // last of each run
        double s = mags[i];
        if (s == 0.0) break;
        // cells with |f| >= s are exactly the first i+1 entries
        double v = s * std::pow(vol * static_cast<double>(i + 1), 1.0 / q);
        best = std::max(best, v);
    }
    return best;
}

// Clifford-valued pairing <f,g> = sum conj(f(x)) g(x) dmu.
inline Multivector inner_product_clifford(const CliffordField& f, const CliffordField& g,
                                          const Measure& mu = Measure::lebesgue()) {
    if (!(f.grid == g.grid) || !(f.sig == g.sig))
        throw config_error("inner product needs matching grid and signature");
    const double vol = f.grid.cell_volume();
    const unsigned dim = static_cast<unsigned>(f.sig.dim());
    const bool cc = f.sig.field == Field::cplx;
    // accumulate per output blade with compensation on both parts
    std::vector<KahanSum> re(dim), im(dim);
    std::vector<double> w(f.cells());
    {
        CellWalker wk(f.grid);
        for (std::size_t c = 0; c < f.cells(); ++c, wk.advance())
            w[c] = mu.density(wk.radius_sq()) * vol;
    }
    for (unsigned a = 0; a < dim; ++a) {
        const int csign = conjugation_sign(a);
        const cplx* fa = f.comp(a);
        for (unsigned b = 0; b < dim; ++b) {
            auto [blade, psign] = blade_mul(a, b);
            const double s = static_cast<double>(csign * psign);
            const cplx* gb = g.comp(b);
            KahanSum sre, sim;
            for (std::size_t c = 0; c < f.cells(); ++c) {
                cplx fv = cc ? std::conj(fa[c]) : fa[c];
                cplx t = s * fv * gb[c] * w[c];
                sre.add(t.real());
                sim.add(t.imag());
            }
            re[blade].add(sre.value());
            im[blade].add(sim.value());
        }
    }
    Multivector out(f.sig);
    for (unsigned b = 0; b < dim; ++b) out[b] = cplx{re[b].value(), im[b].value()};
    return out;
}

// Grade-0 part of the pairing. Blade-diagonal: [conj(e_a) e_b]_0 = delta_ab.
inline cplx inner_product_scalar(const CliffordField& f, const CliffordField& g,
                                 const Measure& mu = Measure::lebesgue()) {
    if (!(f.grid == g.grid) || !(f.sig == g.sig))
        throw config_error("inner product needs matching grid and signature");
    const double vol = f.grid.cell_volume();
    const bool cc = f.sig.field == Field::cplx;
    KahanSum sre, sim;
    std::vector<double> w(f.cells());
    {
        CellWalker wk(f.grid);
        for (std::size_t c = 0; c < f.cells(); ++c, wk.advance())
            w[c] = mu.density(wk.radius_sq()) * vol;
    }
    for (unsigned b = 0; b < f.sig.dim(); ++b) {
        const cplx* fb = f.comp(b);
        const cplx* gb = g.comp(b);
        for (std::size_t c = 0; c < f.cells(); ++c) {
            cplx fv = cc ? std::conj(fb[c]) : fb[c];
            cplx t = fv * gb[c] * w[c];
            sre.add(t.real());
            sim.add(t.imag());
        }
    }
    return {sre.value(), sim.value()};
}

// Generalized p-entropy: sum (|u|^p/||u||_p^p) log(|u|^p/||u||_p^p) dmu,
// with 0 log 0 = 0. The p = 2 half-log variant below is the one appearing in
// the log-Sobolev statement.
inline double entropy_p(const CliffordField& u, double p, const Measure& mu) {
    const double np = lp_norm(u, p, mu);
    if (np == 0.0) throw singular_error("entropy of the zero field");
    const double vol = u.grid.cell_volume();
    KahanSum acc;
    CellWalker w(u.grid);
    for (std::size_t c = 0; c < u.cells(); ++c, w.advance()) {
        double a = std::sqrt(u.coeff_norm_sq(c));
        if (a == 0.0) continue;
        double t = std::pow(a / np, p);
        // subnormal tails can underflow the power; the t log t limit is 0
        if (t == 0.0) continue;
        acc.add(t * std::log(t) * mu.density(w.radius_sq()) * vol);
    }
    return acc.value();
}

// sum (|u|^2/||u||_2^2) log(|u|/||u||_2) dmu = entropy_p(u, 2)/2.
inline double entropy(const CliffordField& u, const Measure& mu = Measure::lebesgue()) {
    return 0.5 * entropy_p(u, 2.0, mu);
}

// Raw moment integral |f|^s dmu, any s > 0 (unlike lp_norm, no root and the
// exponent may drop below 1).
inline double field_moment(const CliffordField& f, double s, const Measure& mu) {
    if (!(s > 0.0)) throw config_error("field_moment needs s > 0");
    const double vol = f.grid.cell_volume();
    KahanSum acc;
    CellWalker w(f.grid);
    for (std::size_t c = 0; c < f.cells(); ++c, w.advance()) {
        double a2 = f.coeff_norm_sq(c);
        if (a2 == 0.0) continue;
        acc.add(std::pow(a2, 0.5 * s) * mu.density(w.radius_sq()) * vol);
    }
    return acc.value();
}

// Pointwise left multiplication by the coordinate vector: (x f)(x).
inline CliffordField coordinate_left_multiply(const CliffordField& f) {
    if (f.sig.m < f.grid.n)
        throw config_error("coordinate multiplication needs m >= n");
    CliffordField out(f.grid, f.sig);
    const unsigned dim = static_cast<unsigned>(f.sig.dim());
    for (int j = 0; j < f.grid.n; ++j) {
        const unsigned ej = 1u << j;
        for (unsigned b = 0; b < dim; ++b) {
            auto [blade, sign] = blade_mul(ej, b);
            const cplx* src = f.comp(b);
            cplx* dst = out.comp(blade);
            CellWalker w(f.grid);
            for (std::size_t c = 0; c < f.cells(); ++c, w.advance())
                dst[c] += static_cast<double>(sign) * w.x[j] * src[c];
        }
    }
    return out;
}

// Pointwise scalar weight: (w(x) f)(x) for a radial-coordinate weight.
inline CliffordField scalar_weight_multiply(const CliffordField& f,
                                            const std::function<double(const double*)>& wf) {
    CliffordField out(f.grid, f.sig);
    std::vector<double> w(f.cells());
    {
        CellWalker wk(f.grid);
        for (std::size_t c = 0; c < f.cells(); ++c, wk.advance()) w[c] = wf(wk.x.data());
    }
    for (unsigned b = 0; b < f.sig.dim(); ++b) {
        const cplx* src = f.comp(b);
        cplx* dst = out.comp(b);
        for (std::size_t c = 0; c < f.cells(); ++c) dst[c] = w[c] * src[c];
    }
    return out;
}

// Largest |f| over the outer 10% shell (in the sup-metric) relative to the
// global max; convolution inputs should decay below 1e-8 here.
inline double outer_shell_decay_ratio(const CliffordField& f) {
    const double edge = 0.9 * f.grid.L;
    double peak = 0.0, shell = 0.0;
    CellWalker w(f.grid);
    for (std::size_t c = 0; c < f.cells(); ++c, w.advance()) {
        double a = f.coeff_norm_sq(c);
        peak = std::max(peak, a);
        bool outer = false;
        for (int k = 0; k < f.grid.n; ++k)
            if (std::abs(w.x[k]) >= edge) outer = true;
        if (outer) shell = std::max(shell, a);
    }
    if (peak == 0.0) return 0.0;
    return std::sqrt(shell / peak);
}

}  // namespace cliff
