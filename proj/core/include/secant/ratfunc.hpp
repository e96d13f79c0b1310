#pragma once

#include <string>

#include "secant/poly.hpp"
#include "secant/rat.hpp"

namespace secant {

/// Rational function in the indeterminate d over Q, kept canonical:
/// gcd(numerator, denominator) = 1 and the denominator is monic (its sign
/// and scale are absorbed into the numerator). Equality is structural.
class RatFuncD {
public:
    RatFuncD() : num_(), den_(Rat(1)) {}
    RatFuncD(long long n) : num_(Rat(n)), den_(Rat(1)) {}
    RatFuncD(Rat r) : num_(std::move(r)), den_(Rat(1)) {}
    RatFuncD(Poly<Rat> numerator) : num_(std::move(numerator)), den_(Rat(1)) {}
    RatFuncD(Poly<Rat> numerator, Poly<Rat> denominator);

    /// The indeterminate d itself.
    static RatFuncD variable() { return RatFuncD(Poly<Rat>::variable()); }

    const Poly<Rat>& numerator() const { return num_; }
    const Poly<Rat>& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.degree() == 0 && num_.leading().is_one() && den_.degree() == 0; }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    /// For constants, the underlying rational; throws otherwise.
    Rat constant_value() const;

    RatFuncD operator-() const;

    friend RatFuncD operator+(const RatFuncD& a, const RatFuncD& b);
    friend RatFuncD operator-(const RatFuncD& a, const RatFuncD& b);
    friend RatFuncD operator*(const RatFuncD& a, const RatFuncD& b);
    friend RatFuncD operator/(const RatFuncD& a, const RatFuncD& b);

    RatFuncD& operator+=(const RatFuncD& o) { return *this = *this + o; }
    RatFuncD& operator-=(const RatFuncD& o) { return *this = *this - o; }
    RatFuncD& operator*=(const RatFuncD& o) { return *this = *this * o; }
    RatFuncD& operator/=(const RatFuncD& o) { return *this = *this / o; }

    friend bool operator==(const RatFuncD& a, const RatFuncD& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RatFuncD pow(unsigned e) const;

    /// Exact substitution d := n. Throws PoleError when the denominator
    /// vanishes at n.
    Rat eval(const Rat& n) const;
    Rat eval_int(long long n) const { return eval(Rat(n)); }

    /// Limit as d -> +infinity: 0 when deg num < deg den, the ratio of
    /// leading coefficients when degrees agree; throws DomainError when
    /// the limit is infinite.
    Rat limit_at_infinity() const;

    /// Display form: numerator and denominator cleared to coprime
    /// integer-coefficient polynomials, denominator leading coefficient
    /// positive, descending powers. E.g. "(d + 2)/(2*d)".
    std::string to_string(const std::string& var = "d") const;

    /// The display form split into its two integer-coefficient halves.
    std::pair<std::string, std::string> display_fraction(const std::string& var = "d") const;

private:
    void normalize();

    Poly<Rat> num_;
    Poly<Rat> den_; // monic, nonzero
};

} // namespace secant
