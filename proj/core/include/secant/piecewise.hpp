#pragma once

#include <algorithm>
#include <vector>

#include "secant/poly.hpp"
#include "secant/rat.hpp"

namespace secant {

/// Piecewise polynomial on [x0, xm): strictly increasing rational
/// breakpoints x0 < ... < xm, piece i valid on the closed-open interval
/// [x_i, x_{i+1}). Coefficients live in the scalar field K; breakpoints
/// are always plain rationals.
template <class K>
class PiecewisePoly {
public:
    PiecewisePoly(std::vector<Rat> breakpoints, std::vector<Poly<K>> pieces)
        : breaks_(std::move(breakpoints)), pieces_(std::move(pieces)) {
        if (breaks_.size() < 2 || pieces_.size() + 1 != breaks_.size())
            throw InvalidArgument("PiecewisePoly: need m >= 1 pieces and m+1 breakpoints");
        for (std::size_t i = 0; i + 1 < breaks_.size(); ++i)
            if (!(breaks_[i] < breaks_[i + 1]))
                throw InvalidArgument("PiecewisePoly: breakpoints must be strictly increasing");
    }

    /// Single piece p on [from, to).
    static PiecewisePoly single(Poly<K> p, Rat from, Rat to) {
        return PiecewisePoly({std::move(from), std::move(to)}, {std::move(p)});
    }

    const std::vector<Rat>& breakpoints() const { return breaks_; }
    const std::vector<Poly<K>>& pieces() const { return pieces_; }
    const Rat& domain_min() const { return breaks_.front(); }
    const Rat& domain_max() const { return breaks_.back(); }

    K eval(const Rat& x) const {
        if (x < domain_min() || !(x < domain_max()))
            throw DomainError("PiecewisePoly: evaluation outside [x0, xm)");
        return pieces_[piece_index(x)].eval(K(x));
    }

    /// Exact integral over [from, to], summed piece by piece.
    K integrate(const Rat& from, const Rat& to) const {
        if (from < domain_min() || to > domain_max())
            throw DomainError("PiecewisePoly: integration bounds outside [x0, xm]");
        if (to < from)
            throw DomainError("PiecewisePoly: reversed integration bounds");
        K total(0);
        for (std::size_t i = 0; i < pieces_.size(); ++i) {
            const Rat lo = std::max(from, breaks_[i]);
            const Rat hi = std::min(to, breaks_[i + 1]);
            if (!(lo < hi)) continue;
            const Poly<K> anti = pieces_[i].antiderivative();
            total += anti.eval(K(hi)) - anti.eval(K(lo));
        }
        return total;
    }

    K integrate_all() const { return integrate(domain_min(), domain_max()); }

    /// Infimum of {x : v vanishes identically on [x, xm)}: the right edge
    /// of the support. Requires the function to reach zero at the end of
    /// its domain; otherwise no vanishing tail exists.
    Rat vanishing_threshold() const {
        std::size_t j = pieces_.size();
        while (j > 0 && pieces_[j - 1].is_zero()) --j;
        if (j == pieces_.size()) {
            // No identically-zero tail: accept only a function whose last
            // piece runs out to zero at xm.
            if (!pieces_.back().eval(K(domain_max())).is_zero())
                throw DomainError("PiecewisePoly: function never vanishes on its domain");
        }
        return breaks_[j];
    }

    PiecewisePoly scaled(const K& c) const {
        std::vector<Poly<K>> p;
        p.reserve(pieces_.size());
        for (const auto& q : pieces_) p.push_back(c * q);
        return PiecewisePoly(breaks_, std::move(p));
    }

    /// Pointwise sum; the result lives on the intersection of the domains,
    /// with breakpoints merged.
    friend PiecewisePoly operator+(const PiecewisePoly& a, const PiecewisePoly& b) {
        const Rat lo = std::max(a.domain_min(), b.domain_min());
        const Rat hi = std::min(a.domain_max(), b.domain_max());
        if (!(lo < hi))
            throw DomainError("PiecewisePoly: disjoint domains in pointwise sum");
        std::vector<Rat> cuts;
        for (const auto& x : a.breaks_)
            if (!(x < lo) && !(hi < x)) cuts.push_back(x);
        for (const auto& x : b.breaks_)
            if (!(x < lo) && !(hi < x)) cuts.push_back(x);
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
        std::vector<Poly<K>> p;
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
            p.push_back(a.pieces_[a.piece_index(cuts[i])] + b.pieces_[b.piece_index(cuts[i])]);
        return PiecewisePoly(std::move(cuts), std::move(p));
    }

private:
    std::size_t piece_index(const Rat& x) const {
        // last i with breaks_[i] <= x (and x < xm guaranteed by callers)
        std::size_t i = pieces_.size() - 1;
        while (i > 0 && x < breaks_[i]) --i;
        return i;
    }

    std::vector<Rat> breaks_;
    std::vector<Poly<K>> pieces_;
};

} // namespace secant
