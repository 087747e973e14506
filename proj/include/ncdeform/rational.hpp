#pragma once

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ncdeform/errors.hpp"

namespace ncdeform {

/// Exact fraction, always reduced, denominator > 0.
/// Arithmetic runs through 128-bit intermediates; a reduced result that no
/// longer fits in 64 bits throws std::overflow_error instead of wrapping.
class Rational {
public:
    constexpr Rational() = default;
    Rational(long long n) : num_(n) {}
    Rational(long long n, long long d) { *this = make(n, d); }

    long long num() const { return num_; }
    long long den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw DomainError("rational: division by zero");
        return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }

    /// Floored remainder mod 1, in [0, 1).
    Rational mod1() const {
        long long r = num_ % den_;
        if (r < 0) r += den_;
        Rational out;
        out.num_ = r;
        out.den_ = (r == 0) ? 1 : den_;
        return out;
    }

    double to_double() const { return double(num_) / double(den_); }

    std::string str() const {
        return is_integer() ? std::to_string(num_)
                            : std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Accepts "p" and "p/q".
    static std::optional<Rational> parse(std::string_view s) {
        if (!s.empty() && s.front() == '+') s.remove_prefix(1);
        auto slash = s.find('/');
        if (slash != std::string_view::npos) {
            auto n = read_ll(s.substr(0, slash));
            auto d = read_ll(s.substr(slash + 1));
            if (!n || !d || *d == 0) return std::nullopt;
            return Rational(*n, *d);
        }
        auto n = read_ll(s);
        if (!n) return std::nullopt;
        return Rational(*n);
    }

private:
    using i128 = __int128;

    static Rational make(i128 n, i128 d) {
        if (d == 0) throw DomainError("rational: zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        i128 a = n < 0 ? -n : n;
        i128 b = d;
        while (b != 0) {
            i128 t = a % b;
            a = b;
            b = t;
        }
        if (a > 1) {
            n /= a;
            d /= a;
        }
        constexpr i128 kMax = std::numeric_limits<long long>::max();
        if (n > kMax || n < -kMax - 1 || d > kMax) throw std::overflow_error("rational: overflow");
        Rational r;
        r.num_ = (long long)n;
        r.den_ = (long long)d;
        return r;
    }

    static std::optional<long long> read_ll(std::string_view t) {
        if (t.empty()) return std::nullopt;
        long long v = 0;
        auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (ec != std::errc() || p != t.data() + t.size()) return std::nullopt;
        return v;
    }

    long long num_ = 0;
    long long den_ = 1;
};

/// Real-valued parameter that knows whether it is an exact fraction.
/// Exactness propagates through arithmetic only when every operand is exact.
class RealParam {
public:
    RealParam() = default;  // exact zero
    RealParam(const Rational& r) : exact_(r), value_(r.to_double()) {}

    static RealParam from_double(double v) {
        RealParam p;
        p.exact_.reset();
        p.value_ = v;
        return p;
    }

    /// "p" and "p/q" parse exact; decimal and exponent forms parse floating.
    static std::optional<RealParam> parse(std::string_view s) {
        if (auto r = Rational::parse(s)) return RealParam(*r);
        if (s.empty()) return std::nullopt;
        std::string_view t = s;
        if (t.front() == '+') t.remove_prefix(1);
        double v = 0;
        auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (ec != std::errc() || p != t.data() + t.size()) return std::nullopt;
        return from_double(v);
    }

    bool exact() const { return exact_.has_value(); }
    const Rational& rational() const {
        if (!exact_) throw DomainError("parameter is not exact");
        return *exact_;
    }
    double value() const { return value_; }
    bool is_zero() const { return exact_ ? exact_->is_zero() : value_ == 0.0; }

    RealParam negated() const { return exact_ ? RealParam(-*exact_) : from_double(-value_); }

    friend RealParam operator*(const RealParam& a, long long k) {
        return a.exact_ ? RealParam(*a.exact_ * Rational(k)) : from_double(a.value_ * double(k));
    }
    friend RealParam operator+(const RealParam& a, const RealParam& b) {
        if (a.exact_ && b.exact_) return RealParam(*a.exact_ + *b.exact_);
        return from_double(a.value_ + b.value_);
    }
    friend RealParam operator*(const RealParam& a, const RealParam& b) {
        if (a.exact_ && b.exact_) return RealParam(*a.exact_ * *b.exact_);
        return from_double(a.value_ * b.value_);
    }
    friend bool operator==(const RealParam& a, const RealParam& b) {
        if (a.exact_ && b.exact_) return *a.exact_ == *b.exact_;
        return a.value_ == b.value_;
    }

    std::string str() const {
        if (exact_) return exact_->str();
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", value_);
        return buf;
    }

private:
    std::optional<Rational> exact_{Rational(0)};
    double value_ = 0.0;
};

}  // namespace ncdeform
