#pragma once

// Clifford algebras R_{0,m} and their complexifications C_m.
// Blades are bitmasks over the m generators, e_i^2 = -1, e_i e_j = -e_j e_i.
// Coefficients are stored as std::complex<double>; real algebras keep the
// imaginary parts at zero and |a| below means the coefficient 2-norm.

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cliff {

using cplx = std::complex<double>;

enum class Field { real, cplx };

struct algebra_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct singular_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AlgebraSignature {
    int m = 3;
    Field field = Field::real;

    AlgebraSignature() = default;
    AlgebraSignature(int m_, Field f) : m(m_), field(f) {
        if (m < 1 || m > 12)
            throw algebra_error("algebra signature needs 1 <= m <= 12, got m=" + std::to_string(m));
    }
    std::size_t dim() const { return std::size_t{1} << m; }
    bool operator==(const AlgebraSignature&) const = default;
};

// Sign of e_A e_B in R_{0,m}: transposition count to interleave the two
// ascending generator lists, then one -1 per annihilated common generator.
inline int blade_sign(unsigned a, unsigned b) {
    int swaps = 0;
    for (unsigned at = a >> 1; at; at >>= 1) swaps += std::popcount(at & b);
    swaps += std::popcount(a & b);
    return (swaps & 1) ? -1 : 1;
}

struct BladeProduct {
    unsigned blade;
    int sign;
};

inline BladeProduct blade_mul(unsigned a, unsigned b) {
    return {a ^ b, blade_sign(a, b)};
}

struct Multivector {
    AlgebraSignature sig;
    std::vector<cplx> c;  // indexed by blade bitmask, size 2^m

    Multivector() : sig(), c(sig.dim(), cplx{0.0, 0.0}) {}
    explicit Multivector(AlgebraSignature s) : sig(s), c(s.dim(), cplx{0.0, 0.0}) {}

    cplx& operator[](unsigned blade) { return c[blade]; }
    const cplx& operator[](unsigned blade) const { return c[blade]; }

    Multivector& operator+=(const Multivector& o) {
        require_same(o);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
        return *this;
    }
    Multivector& operator-=(const Multivector& o) {
        require_same(o);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
        return *this;
    }
    Multivector& operator*=(cplx s) {
        for (auto& x : c) x *= s;
        return *this;
    }
    void require_same(const Multivector& o) const {
        if (!(sig == o.sig)) throw algebra_error("mismatched algebra signatures");
    }
};

inline Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
inline Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
inline Multivector operator*(cplx s, Multivector a) { return a *= s; }

inline Multivector scalar_mv(AlgebraSignature sig, cplx v) {
    Multivector a(sig);
    a[0] = v;
    return a;
}

// Vector x = sum x_j e_j from coordinates (pads/truncates to m generators).
inline Multivector vector_mv(AlgebraSignature sig, const std::vector<double>& x) {
    if (static_cast<int>(x.size()) > sig.m)
        throw algebra_error("vector has more coordinates than generators");
    Multivector a(sig);
    for (std::size_t j = 0; j < x.size(); ++j) a[1u << j] = x[j];
    return a;
}

inline Multivector geometric_product(const Multivector& a, const Multivector& b) {
    a.require_same(b);
    Multivector out(a.sig);
    const std::size_t d = a.c.size();
    for (unsigned i = 0; i < d; ++i) {
        if (a.c[i] == cplx{0.0, 0.0}) continue;
        for (unsigned j = 0; j < d; ++j) {
            if (b.c[j] == cplx{0.0, 0.0}) continue;
            auto [blade, sign] = blade_mul(i, j);
            out.c[blade] += static_cast<double>(sign) * a.c[i] * b.c[j];
        }
    }
    return out;
}

inline Multivector operator*(const Multivector& a, const Multivector& b) {
    return geometric_product(a, b);
}

// Conjugation: a_A e_A -> conj(a_A) (-1)^{k(k+1)/2} e_A on grade-k blades.
// For complex algebras the coefficient is conjugated too; then [a conj(a)]_0
// = |a|^2 in both cases.
inline int conjugation_sign(unsigned blade) {
    switch (std::popcount(blade) & 3) {
        case 0:
        case 3: return 1;
        default: return -1;
    }
}

inline Multivector conjugate(const Multivector& a) {
    Multivector out(a.sig);
    const bool cc = a.sig.field == Field::cplx;
    for (unsigned i = 0; i < a.c.size(); ++i) {
        cplx v = cc ? std::conj(a.c[i]) : a.c[i];
        out.c[i] = static_cast<double>(conjugation_sign(i)) * v;
    }
    return out;
}

inline Multivector grade_project(const Multivector& a, int k) {
    Multivector out(a.sig);
    for (unsigned i = 0; i < a.c.size(); ++i)
        if (std::popcount(i) == k) out.c[i] = a.c[i];
    return out;
}

inline bool is_grade(const Multivector& a, int k, double tol = 0.0) {
    for (unsigned i = 0; i < a.c.size(); ++i)
        if (std::popcount(i) != k && std::abs(a.c[i]) > tol) return false;
    return true;
}

inline double norm_sq(const Multivector& a) {
    double s = 0.0;
    for (const auto& v : a.c) s += std::norm(v);
    return s;
}

inline double norm(const Multivector& a) { return std::sqrt(norm_sq(a)); }

// Inverse of a nonzero vector: x^{-1} = conj(x)/|x|^2 = -x/|x|^2.
inline Multivector vector_inverse(const Multivector& x) {
    if (!is_grade(x, 1))
        throw algebra_error("vector_inverse needs a pure grade-1 argument");
    double n2 = norm_sq(x);
    if (n2 == 0.0) throw singular_error("vector_inverse of the zero vector");
    Multivector out = x;
    out *= cplx{-1.0 / n2, 0.0};
    return out;
}

// Smallest K with |ab| <= K |a| |b| over R_{0,n} (mod-8 table) or C_n
// (parity table). Keyed by the value algebra's generator count.
inline double kn_constant(int n, Field field) {
    if (n < 1) throw algebra_error("kn_constant needs n >= 1");
    int e;
    if (field == Field::cplx) {
        e = (n % 2 == 0) ? n : n + 1;
    } else {
        switch (n % 8) {
            case 0:
            case 6: e = n; break;
            case 2:
            case 4: e = n - 2; break;
            case 7: e = n + 1; break;
            default: e = n - 1; break;  // 1, 3, 5
        }
    }
    return std::exp2(0.25 * e);
}

} // namespace cliff
