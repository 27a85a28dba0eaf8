#pragma once

// Fourier-multiplier realizations of the Dirac operator D = sum_j e_j d_j and
// its relatives on periodic sampled fields. Frequencies are xi_k = (pi/L) k
// with k in {-N/2, ..., N/2-1} per axis, except that the unpaired Nyquist bin
// is treated as zero frequency throughout. D has symbol i xi (Clifford left
// multiplication by the frequency vector), so D^2 has symbol |xi|^2 = the
// symbol of -Laplace, and e^{tD^2} is realized by exp(-|xi|^2 t).
// For real algebras the imaginary residue of a round trip is discarded.

#include <cmath>
#include <vector>

#include "algebra.hpp"
#include "constants.hpp"
#include "fft.hpp"
#include "grid.hpp"

namespace cliff {

struct SpectralPlan {
    GridSpec grid;
    std::vector<double> freq;  // xi per axis index, shared by all axes
    std::vector<int> dims;

    explicit SpectralPlan(const GridSpec& g) : grid(g), freq(g.N), dims(g.n, g.N) {
        for (int i = 0; i < g.N; ++i) {
            int k = (i < g.N / 2) ? i : i - g.N;
            freq[i] = pi_v / g.L * k;
        }
        // The N/2 bin has no conjugate partner, so an odd multiplier there
        // would make derivatives of real data complex and D.D would drift
        // from the -Laplace symbol. Project it out of every operator alike.
        if (g.N % 2 == 0) freq[g.N / 2] = 0.0;
    }
    // Identically-zero components transform to themselves, so both passes
    // skip them; with sparse blade content that saves most of the FFTs.
    void forward(CliffordField& f) const {
        for (unsigned b = 0; b < f.sig.dim(); ++b) {
            cplx* d = f.comp(b);
            if (component_live(d, f.cells())) Fft::transform(d, dims, FFTW_FORWARD);
        }
    }
    void backward(CliffordField& f) const {
        for (unsigned b = 0; b < f.sig.dim(); ++b) {
            cplx* d = f.comp(b);
            if (component_live(d, f.cells())) Fft::transform(d, dims, FFTW_BACKWARD);
        }
        if (f.sig.field == Field::real) f.zero_imaginary();
    }

    static bool component_live(const cplx* d, std::size_t cells) {
        for (std::size_t c = 0; c < cells; ++c)
            if (d[c] != cplx{0.0, 0.0}) return true;
        return false;
    }
};

namespace detail {

// out_C += sum_j sign(e_j e_B) (i xi_j)^parity |xi|^{2j2} fhat_B, the spectral
// assembly shared by dirac_apply (j2=0, odd) and dirac_power.
inline CliffordField dirac_symbol_apply(const SpectralPlan& plan, const CliffordField& fhat,
                                        int power) {
    const GridSpec& g = plan.grid;
    const int scalar_pow = (power % 2 == 0) ? power : power - 1;
    CliffordField out(g, fhat.sig);
    const unsigned dim = static_cast<unsigned>(fhat.sig.dim());

    std::vector<double> scalar_mult(g.cells(), 1.0);
    if (scalar_pow > 0) {
        CellWalker w(g);
        for (std::size_t c = 0; c < g.cells(); ++c, w.advance()) {
            double x2 = 0.0;
            for (int j = 0; j < g.n; ++j) {
                double xi = plan.freq[w.idx[j]];
                x2 += xi * xi;
            }
            scalar_mult[c] = std::pow(x2, 0.5 * scalar_pow);
        }
    }

    if (power % 2 == 0) {
        for (unsigned b = 0; b < dim; ++b) {
            const cplx* src = fhat.comp(b);
            cplx* dst = out.comp(b);
            for (std::size_t c = 0; c < g.cells(); ++c) dst[c] = scalar_mult[c] * src[c];
        }
        return out;
    }
    for (unsigned ccomp = 0; ccomp < dim; ++ccomp) {
        cplx* dst = out.comp(ccomp);
        for (int j = 0; j < g.n; ++j) {
            const unsigned ej = 1u << j;
            const unsigned b = ccomp ^ ej;
            const double s = static_cast<double>(blade_sign(ej, b));
            const cplx* src = fhat.comp(b);
            CellWalker w(g);
            for (std::size_t c = 0; c < g.cells(); ++c, w.advance()) {
                double xi = plan.freq[w.idx[j]];
                dst[c] += cplx{0.0, s * xi * scalar_mult[c]} * src[c];
            }
        }
    }
    return out;
}

}  // namespace detail

// Df = sum_j e_j d_j f.
inline CliffordField dirac_apply(const CliffordField& f) {
    if (f.sig.m < f.grid.n) throw config_error("dirac_apply needs m >= n");
    SpectralPlan plan(f.grid);
    CliffordField fhat = f;
    plan.forward(fhat);
    CliffordField out = detail::dirac_symbol_apply(plan, fhat, 1);
    plan.backward(out);
    return out;
}

// D^l f in a single spectral pass; the symbol (i xi)^l is composed as
// |xi|^{l-1} (i xi) for odd l and |xi|^l for even l.
inline CliffordField dirac_power(const CliffordField& f, int l) {
    if (l < 1) throw config_error("dirac_power needs l >= 1");
    if (l % 2 == 1 && f.sig.m < f.grid.n) throw config_error("dirac_power needs m >= n");
    SpectralPlan plan(f.grid);
    CliffordField fhat = f;
    plan.forward(fhat);
    CliffordField out = detail::dirac_symbol_apply(plan, fhat, l);
    plan.backward(out);
    return out;
}

// Componentwise d/dx_axis.
inline CliffordField partial_derivative(const CliffordField& f, int axis) {
    if (axis < 0 || axis >= f.grid.n) throw config_error("partial_derivative: bad axis");
    SpectralPlan plan(f.grid);
    CliffordField out = f;
    plan.forward(out);
    for (unsigned b = 0; b < f.sig.dim(); ++b) {
        cplx* d = out.comp(b);
        CellWalker w(f.grid);
        for (std::size_t c = 0; c < f.cells(); ++c, w.advance())
            d[c] *= cplx{0.0, plan.freq[w.idx[axis]]};
    }
    plan.backward(out);
    return out;
}

// Componentwise Laplacian, assembled axis by axis as sum_j (i xi_j)^2.
inline CliffordField laplacian_apply(const CliffordField& f) {
    SpectralPlan plan(f.grid);
    CliffordField out = f;
    plan.forward(out);
    std::vector<double> mult(f.cells(), 0.0);
    {
        CellWalker w(f.grid);
        for (std::size_t c = 0; c < f.cells(); ++c, w.advance()) {
            double s = 0.0;
            for (int j = 0; j < f.grid.n; ++j) {
                double xi = plan.freq[w.idx[j]];
                s -= xi * xi;
            }
            mult[c] = s;
        }
    }
    for (unsigned b = 0; b < f.sig.dim(); ++b) {
        cplx* d = out.comp(b);
        for (std::size_t c = 0; c < f.cells(); ++c) d[c] *= mult[c];
    }
    plan.backward(out);
    return out;
}

// Heat semigroup exp(-|xi|^2 t) per component; t = 0 returns the field as is.
inline CliffordField heat_evolve(const CliffordField& f, double t) {
    if (!(t >= 0.0)) throw config_error("heat_evolve needs t >= 0");
    if (t == 0.0) return f;
    SpectralPlan plan(f.grid);
    CliffordField out = f;
    plan.forward(out);
    std::vector<double> mult(f.cells());
    {
        CellWalker w(f.grid);
        for (std::size_t c = 0; c < f.cells(); ++c, w.advance()) {
            double x2 = 0.0;
            for (int j = 0; j < f.grid.n; ++j) {
                double xi = plan.freq[w.idx[j]];
                x2 += xi * xi;
            }
            mult[c] = std::exp(-x2 * t);
        }
    }
    for (unsigned b = 0; b < f.sig.dim(); ++b) {
        cplx* d = out.comp(b);
        for (std::size_t c = 0; c < f.cells(); ++c) d[c] *= mult[c];
    }
    plan.backward(out);
    return out;
}

// ||grad f||_2^2 = sum_j ||d_j f||_2^2 evaluated in one spectral pass:
// by the discrete Plancherel identity this equals (h^n / N_tot) sum over
// modes of |xi|^2 |fhat|^2, with fhat the unnormalized forward transform.
inline double gradient_l2_norm_sq(const CliffordField& f) {
    SpectralPlan plan(f.grid);
    CliffordField fhat = f;
    plan.forward(fhat);
    std::vector<double> xi2(f.cells());
    {
        CellWalker w(f.grid);
        for (std::size_t c = 0; c < f.cells(); ++c, w.advance()) {
            double s = 0.0;
            for (int j = 0; j < f.grid.n; ++j) {
                double xi = plan.freq[w.idx[j]];
                s += xi * xi;
            }
            xi2[c] = s;
        }
    }
    KahanSum acc;
    for (unsigned b = 0; b < f.sig.dim(); ++b) {
        const cplx* d = fhat.comp(b);
        if (!SpectralPlan::component_live(d, f.cells())) continue;
        for (std::size_t c = 0; c < f.cells(); ++c) acc.add(xi2[c] * std::norm(d[c]));
    }
    return acc.value() * f.grid.cell_volume() / static_cast<double>(f.cells());
}

}  // namespace cliff
