#pragma once

// Singular convolution kernels and their discrete transforms.
//
// fundamental(l): k_l(x) = sign * (c_l / omega) xbar^l / |x|^n, the
//   fundamental solution of D^l. Even powers of a vector are scalars
//   (xbar^2 = -|x|^2), so k_l is scalar-valued for even l and vector-valued
//   for odd l; l = 1 is the Cauchy kernel inverted by D.
// riesz(lambda): the scalar kernel |x|^{-lambda}, 0 < lambda < n.
//
// Convolutions are linear (zero-padded to twice the grid), with the
// displacement-zero cell replaced by the equal-volume-ball average of the
// radial factor for scalar kernels and by 0 for odd (vector) kernels, whose
// cell integral vanishes by symmetry. The kernel's (omega, sign) convention
// is carried explicitly; the shipped default is the pair the D(Tg) = g check
// singles out.

#include <cmath>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "constants.hpp"
#include "fft.hpp"
#include "grid.hpp"
#include "spectral.hpp"

namespace cliff {

struct KernelSpec {
    enum class Kind { fundamental, riesz } kind = Kind::fundamental;
    int l = 1;            // fundamental order
    double lambda = 1.0;  // riesz exponent
    OmegaVariant omega = OmegaVariant::sphere;
    int sign = +1;

    static KernelSpec cauchy(OmegaVariant om = OmegaVariant::sphere, int s = +1) {
        return {Kind::fundamental, 1, 0.0, om, s};
    }
    static KernelSpec fundamental(int l, OmegaVariant om = OmegaVariant::sphere, int s = +1) {
        return {Kind::fundamental, l, 0.0, om, s};
    }
    static KernelSpec riesz(double lam) { return {Kind::riesz, 0, lam, OmegaVariant::sphere, +1}; }

    bool vector_valued() const { return kind == Kind::fundamental && l % 2 == 1; }
    std::string cache_tag(const GridSpec& g) const {
        return std::to_string(static_cast<int>(kind)) + ":" + std::to_string(l) + ":" +
               std::to_string(lambda) + ":" + std::to_string(static_cast<int>(omega)) + ":" +
               std::to_string(sign) + ":" + std::to_string(g.n) + ":" + std::to_string(g.N) +
               ":" + std::to_string(g.L);
    }
};

namespace detail {

// scalar kernels: value(r); vector kernels: coefficient of x_a e_a is value(r)*x_a.
struct KernelRadial {
    double prefactor;   // sign * c_l / omega (or 1 for riesz)
    double exponent;    // value(r) = prefactor * r^exponent
    double singular;    // displacement-zero cell value (scalar kernels)
    bool vector;
};

inline KernelRadial kernel_radial(const KernelSpec& spec, int n, double h) {
    KernelRadial kr{};
    const double omega_sphere = omega_n(n, OmegaVariant::sphere);
    const double r_c = h * std::pow(n / omega_sphere, 1.0 / n);  // |B_{r_c}| = h^n
    if (spec.kind == KernelSpec::Kind::riesz) {
        if (!(spec.lambda > 0.0 && spec.lambda < n))
            throw config_error("riesz kernel needs 0 < lambda < n");
        kr.prefactor = 1.0;
        kr.exponent = -spec.lambda;
        kr.singular = (n / (n - spec.lambda)) * std::pow(r_c, -spec.lambda);
        kr.vector = false;
        return kr;
    }
    const int l = spec.l;
    if (l < 1) throw config_error("fundamental kernel needs l >= 1");
    const int j = l / 2;
    const double c_l = fundamental_coefficient(l, n);
    const double om = omega_n(n, spec.omega);
    if (l % 2 == 0) {
        // xbar^{2j} = (-1)^j |x|^{2j}
        kr.prefactor = spec.sign * (c_l / om) * ((j % 2 == 0) ? 1.0 : -1.0);
        kr.exponent = 2.0 * j - n;
        double lam = n - l;  // radial factor r^{-lam}
        kr.singular = kr.prefactor * (lam < n ? (n / (n - lam)) * std::pow(r_c, -lam) : 0.0);
        kr.vector = false;
    } else {
        // xbar^{2j+1} = (-1)^{j+1} |x|^{2j} x
        kr.prefactor = spec.sign * (c_l / om) * ((j % 2 == 0) ? -1.0 : 1.0);
        kr.exponent = 2.0 * j - n;  // multiplies the coordinate x_a
        kr.singular = 0.0;
        kr.vector = true;
    }
    return kr;
}

}  // namespace detail

// Samples the kernel at the cell centers of the given grid (no center sits at
// the origin). Vector kernels need m >= n.
inline CliffordField kernel_field(const GridSpec& g, const AlgebraSignature& sig,
                                  const KernelSpec& spec) {
    detail::KernelRadial kr = detail::kernel_radial(spec, g.n, g.h());
    if (kr.vector && sig.m < g.n) throw config_error("vector kernel needs m >= n");
    CliffordField f(g, sig);
    CellWalker w(g);
    for (std::size_t c = 0; c < f.cells(); ++c, w.advance()) {
        double r2 = w.radius_sq();
        double radial = kr.prefactor * std::pow(r2, 0.5 * kr.exponent);
        if (!kr.vector) {
            f.comp(0)[c] = radial;
        } else {
            for (int a = 0; a < g.n; ++a) f.comp(1u << a)[c] = radial * w.x[a];
        }
    }
    return f;
}

namespace detail {

// FFT of the kernel on the doubled (displacement) lattice, h^n folded in.
// Component b = 0 for scalar kernels, b in {e_a} for vector kernels.
inline const std::vector<std::vector<cplx>>& padded_kernel_fft(const GridSpec& g,
                                                               const KernelSpec& spec) {
    static std::map<std::string, std::vector<std::vector<cplx>>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(spec.cache_tag(g));
    if (it != cache.end()) return it->second;

    const int n = g.n, N = g.N, P = 2 * g.N;
    const double h = g.h();
    KernelRadial kr = kernel_radial(spec, n, h);
    std::size_t pc = 1;
    for (int k = 0; k < n; ++k) pc *= static_cast<std::size_t>(P);
    const double voln = g.cell_volume();

    const int ncomp = kr.vector ? n : 1;
    std::vector<std::vector<cplx>> comps(ncomp, std::vector<cplx>(pc, cplx{0.0, 0.0}));

    std::vector<int> idx(n, 0);
    std::vector<double> xd(n, 0.0);
    for (std::size_t c = 0; c < pc; ++c) {
        double r2 = 0.0;
        bool origin = true;
        for (int k = 0; k < n; ++k) {
            int d = (idx[k] < N) ? idx[k] : idx[k] - P;
            xd[k] = d * h;
            r2 += xd[k] * xd[k];
            if (d != 0) origin = false;
        }
        if (origin) {
            if (!kr.vector) comps[0][c] = kr.singular * voln;
        } else {
            double radial = kr.prefactor * std::pow(r2, 0.5 * kr.exponent) * voln;
            if (!kr.vector)
                comps[0][c] = radial;
            else
                for (int a = 0; a < n; ++a) comps[a][c] = radial * xd[a];
        }
        for (int k = n - 1; k >= 0; --k) {
            if (++idx[k] < P) break;
            idx[k] = 0;
        }
    }
    std::vector<int> dims(n, P);
    for (auto& comp : comps) Fft::transform(comp.data(), dims, FFTW_FORWARD);
    return cache.emplace(spec.cache_tag(g), std::move(comps)).first->second;
}

// Shared padded-convolution core; optionally applies the Dirac symbol on the
// padded torus before cropping (the discrete composition D o T in one pass,
// free of any crop-seam artifacts).
inline CliffordField convolve_impl(const CliffordField& f, const KernelSpec& spec,
                                   bool then_dirac) {
    const GridSpec& g = f.grid;
    detail::KernelRadial kr = detail::kernel_radial(spec, g.n, g.h());
    if ((kr.vector || then_dirac) && f.sig.m < g.n)
        throw config_error("vector kernel convolution needs m >= n");
    const auto& khat = padded_kernel_fft(g, spec);

    const int n = g.n, N = g.N, P = 2 * N;
    std::size_t pc = 1;
    for (int k = 0; k < n; ++k) pc *= static_cast<std::size_t>(P);
    std::vector<int> pdims(n, P);
    const unsigned dim = static_cast<unsigned>(f.sig.dim());

    // zero-padded forward transforms of the live field components
    std::vector<char> live(dim, 0);
    for (unsigned b = 0; b < dim; ++b) {
        const cplx* src = f.comp(b);
        for (std::size_t c = 0; c < f.cells(); ++c)
            if (src[c] != cplx{0.0, 0.0}) {
                live[b] = 1;
                break;
            }
    }
    std::vector<std::vector<cplx>> fhat(dim);
    {
        std::vector<int> idx(n, 0);
        for (unsigned b = 0; b < dim; ++b)
            if (live[b]) fhat[b].assign(pc, cplx{0.0, 0.0});
        for (std::size_t c = 0; c < f.cells(); ++c) {
            std::size_t pcell = 0;
            for (int k = 0; k < n; ++k) pcell = pcell * P + idx[k];
            for (unsigned b = 0; b < dim; ++b)
                if (live[b]) fhat[b][pcell] = f.comp(b)[c];
            for (int k = n - 1; k >= 0; --k) {
                if (++idx[k] < N) break;
                idx[k] = 0;
            }
        }
        for (unsigned b = 0; b < dim; ++b)
            if (live[b]) Fft::transform(fhat[b].data(), pdims, FFTW_FORWARD);
    }

    GridSpec padded(g.n, P, 2.0 * g.L);  // same h, doubled period
    SpectralPlan pplan(padded);

    CliffordField out(g, f.sig);
    std::vector<cplx> acc(pc);
    std::vector<cplx> daccum;
    // Assemble each output component C = A ^ B from kernel comps A, field comps B.
    std::vector<unsigned> kblades;
    if (kr.vector)
        for (int a = 0; a < n; ++a) kblades.push_back(1u << a);
    else
        kblades.push_back(0u);

    std::vector<std::vector<cplx>> prod(dim);  // spectral output per component
    std::vector<char> plive(dim, 0);
    for (std::size_t ai = 0; ai < kblades.size(); ++ai) {
        unsigned A = kblades[ai];
        const std::vector<cplx>& ka = khat[kr.vector ? (unsigned)ai : 0u];
        for (unsigned B = 0; B < dim; ++B) {
            if (!live[B]) continue;
            auto [C, s] = blade_mul(A, B);
            const double sd = static_cast<double>(s);
            const cplx* fb = fhat[B].data();
            if (!plive[C]) {
                prod[C].assign(pc, cplx{0.0, 0.0});
                plive[C] = 1;
            }
            cplx* dst = prod[C].data();
            for (std::size_t c = 0; c < pc; ++c) dst[c] += sd * ka[c] * fb[c];
        }
    }
    fhat.clear();
    fhat.shrink_to_fit();

    if (then_dirac) {
        // left-multiply by i xi on the padded torus
        std::vector<std::vector<cplx>> dprod(dim);
        std::vector<char> dlive(dim, 0);
        for (unsigned C = 0; C < dim; ++C) {
            for (int j = 0; j < n; ++j) {
                const unsigned ej = 1u << j;
                const unsigned B = C ^ ej;
                if (!plive[B]) continue;
                const double s = static_cast<double>(blade_sign(ej, B));
                const cplx* src = prod[B].data();
                if (!dlive[C]) {
                    dprod[C].assign(pc, cplx{0.0, 0.0});
                    dlive[C] = 1;
                }
                cplx* dst = dprod[C].data();
                CellWalker w(padded);
                for (std::size_t c = 0; c < pc; ++c, w.advance())
                    dst[c] += cplx{0.0, s * pplan.freq[w.idx[j]]} * src[c];
            }
        }
        prod = std::move(dprod);
        plive = std::move(dlive);
    }

    for (unsigned C = 0; C < dim; ++C) {
        if (!plive[C]) continue;
        Fft::transform(prod[C].data(), pdims, FFTW_BACKWARD);
        // crop to the original box
        std::vector<int> idx(n, 0);
        for (std::size_t c = 0; c < g.cells(); ++c) {
            std::size_t pcell = 0;
            for (int k = 0; k < n; ++k) pcell = pcell * P + idx[k];
            out.comp(C)[c] = prod[C][pcell];
            for (int k = n - 1; k >= 0; --k) {
                if (++idx[k] < N) break;
                idx[k] = 0;
            }
        }
        prod[C].clear();
        prod[C].shrink_to_fit();
    }
    if (f.sig.field == Field::real) out.zero_imaginary();
    return out;
}

}  // namespace detail

// (k * f)(x) = sum_y k(x-y) f(y) h^n, kernel on the left.
inline CliffordField convolve(const CliffordField& f, const KernelSpec& spec) {
    return detail::convolve_impl(f, spec, false);
}

// Teodorescu transform: convolution against the Cauchy kernel.
inline CliffordField teodorescu(const CliffordField& f,
                                const KernelSpec& spec = KernelSpec::cauchy()) {
    if (spec.kind != KernelSpec::Kind::fundamental || spec.l != 1)
        throw config_error("teodorescu needs the order-1 fundamental kernel");
    return detail::convolve_impl(f, spec, false);
}

// D(Tf) composed on the padded torus (the inversion check's code path).
inline CliffordField dirac_of_convolution(const CliffordField& f, const KernelSpec& spec) {
    return detail::convolve_impl(f, spec, true);
}

// Relative inversion defect ||D(Tg) - g||_2 / ||g||_2 under the given kernel
// convention. Exactly one (omega, sign) pair should make this small.
inline double teodorescu_inversion_defect(const CliffordField& g, OmegaVariant om, int sign) {
    KernelSpec spec = KernelSpec::cauchy(om, sign);
    CliffordField dtg = dirac_of_convolution(g, spec);
    double gn = lp_norm(g, 2.0);
    if (gn == 0.0) throw singular_error("inversion defect of the zero field");
    CliffordField diff = dtg;
    for (std::size_t i = 0; i < diff.data.size(); ++i) diff.data[i] -= g.data[i];
    return lp_norm(diff, 2.0) / gn;
}

// Pointwise recursion checks for V_l(x) = xbar^l / |x|^n with l = 2j, 2j+1:
//   D V_{2j}   = (2j-n) xbar^{2j-1} / |x|^n   (xbar^{-1} = vector inverse)
//   D V_{2j+1} = 2j     xbar^{2j}   / |x|^n
// differentiated by 4th-order central differences, step 1e-4; returns the max
// error relative to the natural scale |x|^{l-1-n}.
inline double kernel_recursion_check(int j, int n, const std::vector<std::vector<double>>& points) {
    if (j < 0 || n < 3) throw config_error("kernel_recursion_check needs j >= 0, n >= 3");
    AlgebraSignature sig(n, Field::real);
    const double step = 1e-4;

    auto xbar_pow = [&](const std::vector<double>& x, int l) {
        Multivector xb = vector_mv(sig, x);
        xb *= cplx{-1.0, 0.0};
        if (l == -1) return vector_inverse(xb);
        Multivector acc = scalar_mv(sig, 1.0);
        for (int i = 0; i < l; ++i) acc = acc * xb;
        return acc;
    };
    auto V = [&](const std::vector<double>& x, int l) {
        double r2 = 0.0;
        for (double v : x) r2 += v * v;
        Multivector m = xbar_pow(x, l);
        m *= cplx{std::pow(r2, -0.5 * n), 0.0};
        return m;
    };
    auto fd_dirac = [&](const std::vector<double>& x, int l) {
        Multivector out(sig);
        for (int a = 0; a < n; ++a) {
            std::vector<double> xp = x;
            auto eval = [&](double off) {
                xp[a] = x[a] + off;
                return V(xp, l);
            };
            Multivector d = (-1.0) * eval(2 * step) + 8.0 * eval(step) + (-8.0) * eval(-step) +
                            1.0 * eval(-2 * step);
            d *= cplx{1.0 / (12.0 * step), 0.0};
            Multivector ea(sig);
            ea[1u << a] = 1.0;
            out += ea * d;
        }
        return out;
    };

    double worst = 0.0;
    for (const auto& pt : points) {
        if (static_cast<int>(pt.size()) != n)
            throw config_error("sample point dimension mismatch");
        double r2 = 0.0;
        for (double v : pt) r2 += v * v;
        if (r2 < 0.25) throw config_error("sample points must satisfy |x| >= 0.5");
        for (int parity = 0; parity <= 1; ++parity) {
            const int l = 2 * j + parity;
            Multivector lhs = fd_dirac(pt, l);
            Multivector rhs(sig);
            if (parity == 0) {
                rhs = xbar_pow(pt, 2 * j - 1);
                rhs *= cplx{(2.0 * j - n) * std::pow(r2, -0.5 * n), 0.0};
            } else if (j > 0) {
                rhs = xbar_pow(pt, 2 * j);
                rhs *= cplx{2.0 * j * std::pow(r2, -0.5 * n), 0.0};
            }
            double scale = std::pow(r2, 0.5 * (l - 1 - n));
            double err = norm(lhs - rhs) / scale;
            worst = std::max(worst, err);
        }
    }
    return worst;
}

// Re <x v, D v> over the grid for v normalized in L^2; equals -n/2 for fields
// of the form (scalar profile) x (constant multivector).
inline double radial_identity_check(const CliffordField& v) {
    double nv = lp_norm(v, 2.0);
    if (nv == 0.0) throw singular_error("radial identity of the zero field");
    CliffordField vn = v;
    const double inv = 1.0 / nv;
    for (auto& c : vn.data) c *= inv;
    CliffordField xv = coordinate_left_multiply(vn);
    CliffordField dv = dirac_apply(vn);
    return inner_product_scalar(xv, dv).real();
}

}  // namespace cliff
