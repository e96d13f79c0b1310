#include "secant/ratfunc.hpp"

namespace secant {

std::string poly_to_string_rat(const Poly<Rat>& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        const Rat c = p.coeff(static_cast<std::size_t>(i));
        if (c.is_zero()) continue;
        const bool first = out.empty();
        const Rat a = c.abs();
        if (first) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        const bool unit = a.is_one();
        if (i == 0) {
            out += a.to_string();
        } else {
            if (!unit) out += a.to_string() + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

RatFuncD::RatFuncD(Poly<Rat> numerator, Poly<Rat> denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    normalize();
}

void RatFuncD::normalize() {
    if (den_.is_zero()) throw DivisionByZero("RatFuncD: zero denominator");
    if (num_.is_zero()) {
        den_ = Poly<Rat>(Rat(1));
        return;
    }
    const Poly<Rat> g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = divmod(num_, g).first;
        den_ = divmod(den_, g).first;
    }
    const Rat inv = Rat(1) / den_.leading();
    num_ = inv * num_;
    den_ = inv * den_;
}

Rat RatFuncD::constant_value() const {
    if (!is_constant()) throw InvalidArgument("RatFuncD: not a constant");
    return num_.constant_term() / den_.constant_term();
}

RatFuncD RatFuncD::operator-() const {
    RatFuncD r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFuncD operator+(const RatFuncD& a, const RatFuncD& b) {
    return RatFuncD(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFuncD operator-(const RatFuncD& a, const RatFuncD& b) {
    return RatFuncD(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFuncD operator*(const RatFuncD& a, const RatFuncD& b) {
    return RatFuncD(a.num_ * b.num_, a.den_ * b.den_);
}

RatFuncD operator/(const RatFuncD& a, const RatFuncD& b) {
    if (b.is_zero()) throw DivisionByZero("RatFuncD: division by zero rational function");
    return RatFuncD(a.num_ * b.den_, a.den_ * b.num_);
}

RatFuncD RatFuncD::pow(unsigned e) const {
    RatFuncD r(1), b = *this;
    for (; e; e >>= 1) {
        if (e & 1) r *= b;
        if (e > 1) b *= b;
    }
    return r;
}

Rat RatFuncD::eval(const Rat& n) const {
    const Rat q = den_.eval(n);
    if (q.is_zero())
        throw PoleError("RatFuncD: pole at d = " + n.to_string());
    return num_.eval(n) / q;
}

Rat RatFuncD::limit_at_infinity() const {
    if (is_zero()) return Rat(0);
    if (num_.degree() > den_.degree())
        throw DomainError("RatFuncD: infinite limit at d -> infinity");
    if (num_.degree() < den_.degree()) return Rat(0);
    return num_.leading() / den_.leading();
}

std::pair<std::string, std::string> RatFuncD::display_fraction(const std::string& var) const {
    // Scale both halves by the common denominator lcm, then strip the
    // shared integer content. The denominator stays positive because the
    // stored denominator is monic.
    const BigInt l = boost::multiprecision::lcm(denominator_lcm(num_), denominator_lcm(den_));
    Poly<Rat> p = Rat(l) * num_;
    Poly<Rat> q = Rat(l) * den_;
    BigInt g = boost::multiprecision::gcd(integer_content(p), integer_content(q));
    if (g > 1) {
        const Rat inv = Rat(BigInt(1), g);
        p = inv * p;
        q = inv * q;
    }
    return {p.to_string(var), q.to_string(var)};
}

std::string RatFuncD::to_string(const std::string& var) const {
    auto [p, q] = display_fraction(var);
    if (q == "1") return p;
    const bool pp = p.find(' ') != std::string::npos;
    const bool qp = q.find_first_of(" *^") != std::string::npos;
    std::string out = pp ? "(" + p + ")" : p;
    out += "/";
    out += qp ? "(" + q + ")" : q;
    return out;
}

} // namespace secant
