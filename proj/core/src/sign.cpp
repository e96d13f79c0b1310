#include "secant/sign.hpp"

#include <vector>

namespace secant {

namespace {

// Sign variations in a sequence, zeros skipped.
int variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

std::vector<Poly<Rat>> sturm_chain(const Poly<Rat>& p) {
    std::vector<Poly<Rat>> chain;
    chain.push_back(p);
    chain.push_back(p.derivative());
    while (!chain.back().is_zero()) {
        const auto& a = chain[chain.size() - 2];
        const auto& b = chain.back();
        chain.push_back(-divmod(a, b).second);
    }
    chain.pop_back();
    return chain;
}

} // namespace

int count_roots_above(const Poly<Rat>& p, const Rat& a) {
    if (p.is_zero()) throw InvalidArgument("count_roots_above: zero polynomial");
    if (p.degree() == 0) return 0;
    // Squarefree part, so the classical variation count applies directly.
    const Poly<Rat> g = poly_gcd(p, p.derivative());
    const Poly<Rat> sf = g.degree() > 0 ? divmod(p, g).first : p;
    if (sf.degree() == 0) return 0;

    const auto chain = sturm_chain(sf);
    std::vector<int> at_a, at_inf;
    at_a.reserve(chain.size());
    at_inf.reserve(chain.size());
    for (const auto& q : chain) {
        at_a.push_back(q.eval(a).sign());
        at_inf.push_back(q.is_zero() ? 0 : q.leading().sign());
    }
    return variations(at_a) - variations(at_inf);
}

DomainSign sign_on(const Rat& value, const Rat&) {
    const int s = value.sign();
    if (s == 0) return DomainSign::IdenticallyZero;
    return s > 0 ? DomainSign::Positive : DomainSign::Negative;
}

DomainSign sign_on(const RatFuncD& f, const Rat& lower) {
    if (f.is_zero()) return DomainSign::IdenticallyZero;

    const Poly<Rat>& num = f.numerator();
    const Poly<Rat>& den = f.denominator();
    if (!den.eval(lower).is_zero() && count_roots_above(den, lower) == 0) {
        // no poles on the half-line
    } else {
        return DomainSign::Indefinite;
    }
    if (count_roots_above(num, lower) > 0) return DomainSign::Indefinite;

    // Constant interior sign; lower + 1 is interior and cannot be a root.
    const Rat probe = lower + Rat(1);
    const int interior = (num.eval(probe) / den.eval(probe)).sign();

    DomainSign verdict;
    if (num.eval(lower).is_zero())
        verdict = interior > 0 ? DomainSign::PositiveZeroAtLower : DomainSign::NegativeZeroAtLower;
    else
        verdict = interior > 0 ? DomainSign::Positive : DomainSign::Negative;

    // Redundant sampling cross-check of the root-isolation verdict.
    for (long long off : {0LL, 1LL, 3LL, 17LL, 1000LL}) {
        const Rat x = lower + Rat(off);
        const int s = f.eval(x).sign();
        const bool ok = (s == interior) || (s == 0 && off == 0 && num.eval(lower).is_zero());
        if (!ok)
            throw std::logic_error("sign_on: sample disagrees with root isolation");
    }
    return verdict;
}

bool is_positive_on(const RatFuncD& f, const Rat& lower) {
    return sign_on(f, lower) == DomainSign::Positive;
}

bool is_nonnegative_on(const RatFuncD& f, const Rat& lower) {
    switch (sign_on(f, lower)) {
    case DomainSign::IdenticallyZero:
    case DomainSign::Positive:
    case DomainSign::PositiveZeroAtLower:
        return true;
    default:
        return false;
    }
}

int compare_on(const RatFuncD& a, const RatFuncD& b, const Rat& lower) {
    switch (sign_on(a - b, lower)) {
    case DomainSign::IdenticallyZero:
        return 0;
    case DomainSign::Positive:
    case DomainSign::PositiveZeroAtLower:
        return 1;
    case DomainSign::Negative:
    case DomainSign::NegativeZeroAtLower:
        return -1;
    default:
        throw IndefiniteSign("compare_on: (" + (a - b).to_string() +
                             ") has no constant sign on [" + lower.to_string() + ", inf)");
    }
}

int compare_on(const Rat& a, const Rat& b, const Rat&) {
    return a == b ? 0 : (a < b ? -1 : 1);
}

} // namespace secant
