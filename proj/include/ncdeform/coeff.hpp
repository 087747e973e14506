#pragma once

#include <cmath>
#include <complex>

#include "ncdeform/rational.hpp"

namespace ncdeform {

inline constexpr double kTwoPi = 6.28318530717958647692528676655900577;

/// Monomial coefficient.
///
/// Exact form: (re + i·im) · e^{2πi·turns} · (2π)^two_pi_pow with rational
/// re, im, turns. Whole quarter turns fold into the Gaussian part, so the
/// residual phase always lies in [0, 1/4) and values like i or −1 stay
/// exact. Products of exact coefficients stay exact; sums stay exact when
/// the phase/power tags agree and otherwise drop to a plain complex double.
/// The (2π)^k factor carries the constants of the infinitesimal action.
class Coeff {
public:
    Coeff() = default;  // exact zero

    static Coeff zero() { return {}; }
    static Coeff one() { return integer(1); }
    static Coeff integer(long long n) { return gaussian(Rational(n), Rational(0)); }
    static Coeff imaginary_unit() { return gaussian(Rational(0), Rational(1)); }

    static Coeff gaussian(const Rational& re, const Rational& im) {
        Coeff c;
        c.re_ = re;
        c.im_ = im;
        c.canonicalize();
        return c;
    }

    static Coeff from_complex(std::complex<double> v) {
        Coeff c;
        c.exact_ = false;
        c.approx_ = v;
        return c;
    }

    /// e^{2πi·t}; exact root of unity when t is exact.
    static Coeff unit_phase(const RealParam& t) {
        if (t.exact()) {
            Coeff c;
            c.re_ = Rational(1);
            c.turns_ = t.rational();
            c.canonicalize();
            return c;
        }
        double a = kTwoPi * t.value();
        return from_complex({std::cos(a), std::sin(a)});
    }

    bool is_exact() const { return exact_; }
    bool is_exact_zero() const { return exact_ && re_.is_zero() && im_.is_zero(); }
    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }
    const Rational& turns() const { return turns_; }
    int two_pi_pow() const { return two_pi_pow_; }

    std::complex<double> value() const {
        if (!exact_) return approx_;
        std::complex<double> v(re_.to_double(), im_.to_double());
        if (!turns_.is_zero()) {
            double a = kTwoPi * turns_.to_double();
            v *= std::complex<double>(std::cos(a), std::sin(a));
        }
        if (two_pi_pow_ != 0) v *= std::pow(kTwoPi, two_pi_pow_);
        return v;
    }

    double modulus() const {
        if (!exact_) return std::abs(approx_);
        if (is_exact_zero()) return 0.0;
        double m = std::hypot(re_.to_double(), im_.to_double());
        if (two_pi_pow_ != 0) m *= std::pow(kTwoPi, two_pi_pow_);
        return m;
    }

    friend Coeff operator*(const Coeff& a, const Coeff& b) {
        if (a.exact_ && b.exact_) {
            Coeff r;
            r.re_ = a.re_ * b.re_ - a.im_ * b.im_;
            r.im_ = a.re_ * b.im_ + a.im_ * b.re_;
            r.turns_ = a.turns_ + b.turns_;
            r.two_pi_pow_ = a.two_pi_pow_ + b.two_pi_pow_;
            r.canonicalize();
            return r;
        }
        return from_complex(a.value() * b.value());
    }

    friend Coeff operator+(const Coeff& a, const Coeff& b) {
        if (a.is_exact_zero()) return b;
        if (b.is_exact_zero()) return a;
        if (a.exact_ && b.exact_ && a.turns_ == b.turns_ && a.two_pi_pow_ == b.two_pi_pow_) {
            Coeff r;
            r.re_ = a.re_ + b.re_;
            r.im_ = a.im_ + b.im_;
            r.turns_ = a.turns_;
            r.two_pi_pow_ = a.two_pi_pow_;
            r.canonicalize();
            return r;
        }
        return from_complex(a.value() + b.value());
    }

    Coeff operator-() const {
        if (!exact_) return from_complex(-approx_);
        Coeff r = *this;
        r.re_ = -r.re_;
        r.im_ = -r.im_;
        r.canonicalize();
        return r;
    }

    friend Coeff operator-(const Coeff& a, const Coeff& b) { return a + (-b); }

    Coeff conjugated() const {
        if (!exact_) return from_complex(std::conj(approx_));
        Coeff r;
        r.re_ = re_;
        r.im_ = -im_;
        r.turns_ = -turns_;
        r.two_pi_pow_ = two_pi_pow_;
        r.canonicalize();
        return r;
    }

    Coeff scaled_by_int(long long n) const {
        if (!exact_) return from_complex(approx_ * double(n));
        Coeff r = *this;
        r.re_ = r.re_ * Rational(n);
        r.im_ = r.im_ * Rational(n);
        r.canonicalize();
        return r;
    }

    Coeff scaled_by_rational(const Rational& q) const {
        if (!exact_) return from_complex(approx_ * q.to_double());
        Coeff r = *this;
        r.re_ = r.re_ * q;
        r.im_ = r.im_ * q;
        r.canonicalize();
        return r;
    }

    /// Multiply by (2π)^k.
    Coeff scaled_by_two_pi_pow(int k) const {
        if (!exact_) return from_complex(approx_ * std::pow(kTwoPi, k));
        if (is_exact_zero()) return *this;
        Coeff r = *this;
        r.two_pi_pow_ += k;
        return r;
    }

    Coeff inverted() const {
        if (exact_) {
            Rational d = re_ * re_ + im_ * im_;
            if (d.is_zero()) throw DomainError("coefficient: inverse of zero");
            Coeff r;
            r.re_ = re_ / d;
            r.im_ = -im_ / d;
            r.turns_ = -turns_;
            r.two_pi_pow_ = -two_pi_pow_;
            r.canonicalize();
            return r;
        }
        if (approx_ == std::complex<double>(0.0, 0.0))
            throw DomainError("coefficient: inverse of zero");
        return from_complex(1.0 / approx_);
    }

    Coeff pow_int(long long k) const {
        if (k == 0) return one();
        Coeff base = k < 0 ? inverted() : *this;
        unsigned long long m = k < 0 ? 0ULL - (unsigned long long)k : (unsigned long long)k;
        Coeff acc = one();
        while (m != 0) {
            if (m & 1ULL) acc = acc * base;
            m >>= 1;
            if (m != 0) base = base * base;
        }
        return acc;
    }

    /// Representational equality: exact coefficients compare by exact parts,
    /// floating ones by value; an exact and a floating one never compare equal.
    friend bool operator==(const Coeff& a, const Coeff& b) {
        if (a.exact_ && b.exact_)
            return a.re_ == b.re_ && a.im_ == b.im_ && a.turns_ == b.turns_ &&
                   a.two_pi_pow_ == b.two_pi_pow_;
        if (!a.exact_ && !b.exact_) return a.approx_ == b.approx_;
        return false;
    }

private:
    void canonicalize() {
        if (re_.is_zero() && im_.is_zero()) {
            turns_ = Rational(0);
            two_pi_pow_ = 0;
            return;
        }
        Rational t = turns_.mod1();
        long long quarters = (long long)((__int128)4 * t.num() / t.den());
        if (quarters != 0) {
            t = t - Rational(quarters, 4);
            switch (quarters & 3) {
                case 1: {
                    Rational r = re_;
                    re_ = -im_;
                    im_ = r;
                    break;
                }
                case 2:
                    re_ = -re_;
                    im_ = -im_;
                    break;
                case 3: {
                    Rational r = re_;
                    re_ = im_;
                    im_ = -r;
                    break;
                }
            }
        }
        turns_ = t;
    }

    bool exact_ = true;
    Rational re_{0}, im_{0}, turns_{0};
    int two_pi_pow_ = 0;
    std::complex<double> approx_{0.0, 0.0};
};

}  // namespace ncdeform
