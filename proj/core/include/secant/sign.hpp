#pragma once

#include <string>

#include "secant/poly.hpp"
#include "secant/rat.hpp"
#include "secant/ratfunc.hpp"

namespace secant {

/// Sign of a scalar on the closed half-line [lower, +infinity).
/// "Interior" below means the open ray (lower, +infinity).
enum class DomainSign {
    IdenticallyZero,
    Positive,              // > 0 on the whole half-line
    PositiveZeroAtLower,   // > 0 interior, = 0 at lower
    Negative,
    NegativeZeroAtLower,
    Indefinite,            // sign changes, interior zeros, or a pole
};

/// Number of distinct real roots of p in the open interval (a, +infinity),
/// by Sturm's theorem on the squarefree part.
int count_roots_above(const Poly<Rat>& p, const Rat& a);

/// Exact sign classification of f on [lower, +infinity). Decided by root
/// isolation on the numerator and denominator, with evaluation at a few
/// integer sample points as a redundant cross-check.
DomainSign sign_on(const RatFuncD& f, const Rat& lower);

/// Rat overload: the domain is irrelevant, the sign is the sign.
DomainSign sign_on(const Rat& value, const Rat& lower);

bool is_positive_on(const RatFuncD& f, const Rat& lower);
bool is_nonnegative_on(const RatFuncD& f, const Rat& lower);
inline bool is_positive_on(const Rat& v, const Rat&) { return v.sign() > 0; }
inline bool is_nonnegative_on(const Rat& v, const Rat&) { return v.sign() >= 0; }

/// Strict order of a and b as functions on [lower, +infinity):
/// -1 if a < b somewhere and a <= b everywhere, 0 if equal, +1 symmetric.
/// Throws IndefiniteSign when the difference changes sign on the domain.
int compare_on(const RatFuncD& a, const RatFuncD& b, const Rat& lower);
int compare_on(const Rat& a, const Rat& b, const Rat& lower);

} // namespace secant
