#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "secant/errors.hpp"
#include "secant/rat.hpp"

namespace secant {

/// Dense univariate polynomial over a field K, stored low-degree first
/// with no trailing zero coefficients. The zero polynomial has an empty
/// coefficient vector and degree() == -1.
template <class K>
class Poly {
public:
    Poly() = default;
    Poly(K constant) {
        if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
    }
    explicit Poly(std::vector<K> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<K> coeffs) : coeffs_(coeffs) { trim(); }

    static Poly variable() { return Poly(std::vector<K>{K(0), K(1)}); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    const K& operator[](std::size_t i) const { return coeffs_[i]; }
    const std::vector<K>& coefficients() const { return coeffs_; }

    /// Coefficient of x^i, zero-padded beyond the degree.
    K coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : K(0); }

    const K& leading() const {
        if (is_zero()) throw InvalidArgument("Poly: leading coefficient of zero");
        return coeffs_.back();
    }

    K constant_term() const { return coeffs_.empty() ? K(0) : coeffs_.front(); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<K> c(std::max(a.coeffs_.size(), b.coeffs_.size()), K(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<K> c(a.coeffs_.size() + b.coeffs_.size() - 1, K(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Poly(std::move(c));
    }
    friend Poly operator*(const K& s, Poly p) {
        for (auto& c : p.coeffs_) c = s * c;
        p.trim();
        return p;
    }
    friend Poly operator*(const Poly& p, const K& s) { return s * p; }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    K eval(const K& x) const {
        K acc(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    Poly derivative() const {
        if (coeffs_.size() <= 1) return Poly();
        std::vector<K> c(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * K(static_cast<long long>(i));
        return Poly(std::move(c));
    }

    /// Antiderivative with zero constant term.
    Poly antiderivative() const {
        if (is_zero()) return Poly();
        std::vector<K> c(coeffs_.size() + 1, K(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            c[i + 1] = coeffs_[i] / K(static_cast<long long>(i + 1));
        return Poly(std::move(c));
    }

    Poly pow(unsigned e) const {
        Poly r = Poly(K(1)), b = *this;
        for (; e; e >>= 1) {
            if (e & 1) r *= b;
            if (e > 1) b *= b;
        }
        return r;
    }

    /// Euclidean division: returns (quotient, remainder) with
    /// deg(remainder) < deg(divisor).
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw DivisionByZero("Poly: division by zero polynomial");
        Poly q, r = a;
        const int db = b.degree();
        const K lb = b.leading();
        while (!r.is_zero() && r.degree() >= db) {
            const int shift = r.degree() - db;
            const K factor = r.leading() / lb;
            std::vector<K> t(static_cast<std::size_t>(shift) + 1, K(0));
            t.back() = factor;
            Poly term(std::move(t));
            q += term;
            r -= term * b;
        }
        return {q, r};
    }

    Poly monic() const {
        if (is_zero()) return *this;
        const K inv = K(1) / leading();
        return inv * *this;
    }

    std::string to_string(const std::string& var) const;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<K> coeffs_;
};

/// Monic gcd via the Euclidean algorithm.
template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// ---- Rat-specific helpers (used by printing and Sturm analysis) ----

/// Least common multiple of the coefficient denominators.
inline BigInt denominator_lcm(const Poly<Rat>& p) {
    BigInt l = 1;
    for (const auto& c : p.coefficients())
        l = boost::multiprecision::lcm(l, c.denominator());
    return l;
}

/// Gcd of the coefficient numerators of an integer-coefficient polynomial.
inline BigInt integer_content(const Poly<Rat>& p) {
    BigInt g = 0;
    for (const auto& c : p.coefficients())
        g = boost::multiprecision::gcd(g, boost::multiprecision::abs(c.numerator()));
    return g;
}

std::string poly_to_string_rat(const Poly<Rat>& p, const std::string& var);

template <>
inline std::string Poly<Rat>::to_string(const std::string& var) const {
    return poly_to_string_rat(*this, var);
}

} // namespace secant
