#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>

#include "secant/errors.hpp"

namespace secant {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational in canonical form: denominator > 0 and
/// gcd(|numerator|, denominator) = 1, re-established after every operation.
/// Zero is stored as 0/1.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}
    Rat(BigInt n) : num_(std::move(n)), den_(1) {}
    Rat(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }
    Rat(long long num, long long den) : num_(num), den_(den) { normalize(); }

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rat operator-() const { return Rat(raw(), -num_, den_); }

    Rat& operator+=(const Rat& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rat& operator-=(const Rat& o) {
        num_ = num_ * o.den_ - o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rat& operator*=(const Rat& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rat& operator/=(const Rat& o) {
        if (o.num_ == 0) throw DivisionByZero("Rat: division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        // Cross-multiplication; denominators are positive.
        const BigInt l = a.num_ * b.den_;
        const BigInt r = b.num_ * a.den_;
        return l < r ? std::strong_ordering::less
                     : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    Rat abs() const { return num_ < 0 ? -*this : *this; }

    Rat reciprocal() const {
        if (num_ == 0) throw DivisionByZero("Rat: reciprocal of zero");
        return Rat(num_ < 0 ? -den_ : den_, boost::multiprecision::abs(num_));
    }

    Rat pow(unsigned e) const {
        Rat r(1), b = *this;
        for (; e; e >>= 1) {
            if (e & 1) r *= b;
            if (e > 1) b *= b;
        }
        return r;
    }

    /// "p/q", or just "p" for integers.
    std::string to_string() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

    /// Parses "p" or "p/q" with optional leading sign.
    static Rat from_string(const std::string& text);

private:
    struct raw {}; // tag: components already canonical
    Rat(raw, BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {}

    void normalize() {
        if (den_ == 0) throw DivisionByZero("Rat: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(num_), den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_; // > 0
};

inline Rat Rat::from_string(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(BigInt(text));
        return Rat(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    } catch (const std::runtime_error&) {
        throw InvalidArgument("Rat: cannot parse '" + text + "'");
    }
}

} // namespace secant
