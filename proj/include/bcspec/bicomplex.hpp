#pragma once

#include <cmath>
#include <complex>
#include <ostream>

#include "bcspec/errors.hpp"

namespace bcspec {

using Complex = std::complex<double>;

inline bool is_finite(const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Idempotent coordinates of a bicomplex number: Z = beta1*e1 + beta2*e2.
struct IdempotentPair {
    Complex beta1;
    Complex beta2;
};

/// A bicomplex number Z = z1 + z2*j, z1 and z2 complex in the unit i,
/// with j a second imaginary unit (j^2 = -1) commuting with i.
class BiComplex {
public:
    BiComplex() : z1_(0.0), z2_(0.0) {}

    BiComplex(const Complex& z1, const Complex& z2) : z1_(z1), z2_(z2) {
        if (!is_finite(z1_) || !is_finite(z2_))
            throw NonFinite("BiComplex components must be finite");
    }

    BiComplex(double re) : BiComplex(Complex(re, 0.0), Complex(0.0, 0.0)) {}
    BiComplex(const Complex& z1) : BiComplex(z1, Complex(0.0, 0.0)) {}

    const Complex& z1() const { return z1_; }
    const Complex& z2() const { return z2_; }

    static BiComplex zero() { return BiComplex(); }
    static BiComplex one() { return BiComplex(1.0); }
    static BiComplex i() { return BiComplex(Complex(0.0, 1.0), 0.0); }
    static BiComplex j() { return BiComplex(Complex(0.0, 0.0), 1.0); }
    // k = i*j, the hyperbolic unit: k^2 = +1.
    static BiComplex k() { return BiComplex(Complex(0.0, 0.0), Complex(0.0, 1.0)); }
    static BiComplex e1() { return BiComplex(Complex(0.5, 0.0), Complex(0.0, 0.5)); }
    static BiComplex e2() { return BiComplex(Complex(0.5, 0.0), Complex(0.0, -0.5)); }

    friend BiComplex operator+(const BiComplex& a, const BiComplex& b) {
        return BiComplex(a.z1_ + b.z1_, a.z2_ + b.z2_);
    }
    friend BiComplex operator-(const BiComplex& a, const BiComplex& b) {
        return BiComplex(a.z1_ - b.z1_, a.z2_ - b.z2_);
    }
    friend BiComplex operator-(const BiComplex& a) {
        return BiComplex(-a.z1_, -a.z2_);
    }
    // (a1 + a2 j)(b1 + b2 j) = (a1 b1 - a2 b2) + (a1 b2 + a2 b1) j
    friend BiComplex operator*(const BiComplex& a, const BiComplex& b) {
        return BiComplex(a.z1_ * b.z1_ - a.z2_ * b.z2_,
                         a.z1_ * b.z2_ + a.z2_ * b.z1_);
    }
    friend BiComplex operator*(double s, const BiComplex& a) {
        return BiComplex(s * a.z1_, s * a.z2_);
    }
    friend BiComplex operator*(const BiComplex& a, double s) { return s * a; }

    BiComplex& operator+=(const BiComplex& b) { return *this = *this + b; }
    BiComplex& operator-=(const BiComplex& b) { return *this = *this - b; }
    BiComplex& operator*=(const BiComplex& b) { return *this = *this * b; }

    friend bool operator==(const BiComplex& a, const BiComplex& b) {
        return a.z1_ == b.z1_ && a.z2_ == b.z2_;
    }
    friend bool operator!=(const BiComplex& a, const BiComplex& b) { return !(a == b); }

private:
    Complex z1_;
    Complex z2_;
};

enum class Conjugation { bar, dagger, star };

/// bar-conjugation: conjugate both complex components.
inline BiComplex bar(const BiComplex& Z) {
    return BiComplex(std::conj(Z.z1()), std::conj(Z.z2()));
}

/// dagger-conjugation: negate the j component.
inline BiComplex dagger(const BiComplex& Z) {
    return BiComplex(Z.z1(), -Z.z2());
}

/// star-conjugation: bar and dagger composed (in either order).
inline BiComplex star(const BiComplex& Z) {
    return BiComplex(std::conj(Z.z1()), -std::conj(Z.z2()));
}

inline BiComplex conjugate(const BiComplex& Z, Conjugation kind) {
    switch (kind) {
        case Conjugation::bar: return bar(Z);
        case Conjugation::dagger: return dagger(Z);
        case Conjugation::star: return star(Z);
    }
    throw Error("unknown conjugation kind");
}

/// beta1 = z1 - i z2, beta2 = z1 + i z2.
inline IdempotentPair to_idempotent(const BiComplex& Z) {
    const Complex iu(0.0, 1.0);
    return IdempotentPair{Z.z1() - iu * Z.z2(), Z.z1() + iu * Z.z2()};
}

/// Inverse of to_idempotent: Z = beta1*e1 + beta2*e2.
inline BiComplex from_idempotent(const IdempotentPair& p) {
    const Complex iu(0.0, 1.0);
    return BiComplex(0.5 * (p.beta1 + p.beta2), 0.5 * iu * (p.beta1 - p.beta2));
}

inline double euclid_norm(const BiComplex& Z) {
    return std::sqrt(std::norm(Z.z1()) + std::norm(Z.z2()));
}

/// A hyperbolic number h = h1 + k*h2 with real h1, h2. The e-basis
/// coordinates are a1 = h1 + h2 and a2 = h1 - h2, so h = a1*e1 + a2*e2.
class Hyperbolic {
public:
    Hyperbolic() : h1_(0.0), h2_(0.0) {}

    Hyperbolic(double h1, double h2) : h1_(h1), h2_(h2) {
        if (!std::isfinite(h1_) || !std::isfinite(h2_))
            throw NonFinite("Hyperbolic components must be finite");
    }

    static Hyperbolic from_components(double a1, double a2) {
        return Hyperbolic(0.5 * (a1 + a2), 0.5 * (a1 - a2));
    }

    double h1() const { return h1_; }
    double h2() const { return h2_; }
    double a1() const { return h1_ + h2_; }
    double a2() const { return h1_ - h2_; }

    bool in_d_plus() const { return a1() >= 0.0 && a2() >= 0.0; }

    BiComplex to_bicomplex() const {
        return BiComplex(Complex(h1_, 0.0), Complex(0.0, h2_));
    }

    friend Hyperbolic operator+(const Hyperbolic& a, const Hyperbolic& b) {
        return Hyperbolic(a.h1_ + b.h1_, a.h2_ + b.h2_);
    }
    friend Hyperbolic operator-(const Hyperbolic& a, const Hyperbolic& b) {
        return Hyperbolic(a.h1_ - b.h1_, a.h2_ - b.h2_);
    }
    // (h1 + k g1)(h2 + k g2) with k^2 = +1; componentwise in the e-basis.
    friend Hyperbolic operator*(const Hyperbolic& a, const Hyperbolic& b) {
        return Hyperbolic(a.h1_ * b.h1_ + a.h2_ * b.h2_,
                          a.h1_ * b.h2_ + a.h2_ * b.h1_);
    }

    friend bool operator==(const Hyperbolic& a, const Hyperbolic& b) {
        return a.h1_ == b.h1_ && a.h2_ == b.h2_;
    }
    friend bool operator!=(const Hyperbolic& a, const Hyperbolic& b) { return !(a == b); }

private:
    double h1_;
    double h2_;
};

/// Hyperbolic-valued norm |Z|_k = |beta1| e1 + |beta2| e2. Always in D+,
/// zero only at Z = 0, and multiplicative: |Z W|_k = |Z|_k |W|_k.
inline Hyperbolic hyper_norm(const BiComplex& Z) {
    const IdempotentPair p = to_idempotent(Z);
    return Hyperbolic::from_components(std::abs(p.beta1), std::abs(p.beta2));
}

/// Inverse via the idempotent coordinates. A beta component within
/// tau_zero * max(1, |Z|) of zero makes Z a zero divisor (or zero).
inline BiComplex invert(const BiComplex& Z, double tau_zero = 1e-12) {
    const IdempotentPair p = to_idempotent(Z);
    const double thr = tau_zero * std::max(1.0, euclid_norm(Z));
    const bool b1_zero = std::abs(p.beta1) <= thr;
    const bool b2_zero = std::abs(p.beta2) <= thr;
    if (b1_zero && b2_zero) throw ZeroInput("cannot invert zero");
    if (b1_zero || b2_zero)
        throw ZeroDivisor("cannot invert a zero divisor (one idempotent component vanishes)");
    return from_idempotent(IdempotentPair{1.0 / p.beta1, 1.0 / p.beta2});
}

enum class Ordering { less_or_equal, greater_or_equal, equal, incomparable };

/// Partial order induced by D+: a <= b iff b - a has both e-basis
/// components nonnegative.
inline Ordering d_plus_compare(const Hyperbolic& a, const Hyperbolic& b) {
    const Hyperbolic d = b - a;
    const bool le = d.a1() >= 0.0 && d.a2() >= 0.0;
    const bool ge = d.a1() <= 0.0 && d.a2() <= 0.0;
    if (le && ge) return Ordering::equal;
    if (le) return Ordering::less_or_equal;
    if (ge) return Ordering::greater_or_equal;
    return Ordering::incomparable;
}

inline std::ostream& operator<<(std::ostream& os, const BiComplex& Z) {
    os << Z.z1().real();
    if (Z.z1().imag() >= 0.0) os << "+";
    os << Z.z1().imag() << "i + (" << Z.z2().real();
    if (Z.z2().imag() >= 0.0) os << "+";
    os << Z.z2().imag() << "i)j";
    return os;
}

inline std::ostream& operator<<(std::ostream& os, const Hyperbolic& h) {
    os << h.h1();
    if (h.h2() >= 0.0) os << "+";
    os << h.h2() << "k";
    return os;
}

}  // namespace bcspec
