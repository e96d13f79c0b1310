#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "secant/rat.hpp"

namespace secant {

/// Sparse multivariate polynomial with Rat coefficients over a fixed,
/// ordered variable list. Monomials are exponent vectors; no zero
/// coefficients are stored, so equality is structural.
class MVPoly {
public:
    using Exponents = std::vector<unsigned>;

    explicit MVPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MVPoly constant(std::vector<std::string> vars, Rat c);
    static MVPoly var(std::vector<std::string> vars, const std::string& name);

    const std::vector<std::string>& variables() const { return vars_; }
    const std::map<Exponents, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    std::size_t var_index(const std::string& name) const;

    MVPoly operator-() const;
    friend MVPoly operator+(const MVPoly& a, const MVPoly& b);
    friend MVPoly operator-(const MVPoly& a, const MVPoly& b);
    friend MVPoly operator*(const MVPoly& a, const MVPoly& b);
    friend MVPoly operator*(const Rat& s, MVPoly p);
    MVPoly& operator+=(const MVPoly& o) { return *this = *this + o; }
    MVPoly& operator-=(const MVPoly& o) { return *this = *this - o; }
    MVPoly& operator*=(const MVPoly& o) { return *this = *this * o; }

    friend bool operator==(const MVPoly& a, const MVPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    MVPoly pow(unsigned e) const;

    /// Adds c * x^exponents.
    void add_term(Exponents e, Rat c);

    Rat eval(const std::vector<Rat>& point) const;

    /// Substitutes images[i] for variable i; the images share a common
    /// variable list, which becomes the result's list.
    MVPoly substitute(const std::vector<MVPoly>& images) const;

    /// Exact quotient f / g, or nullopt (with the stuck remainder in
    /// *remainder when given) if g does not divide f. Lexicographic
    /// leading-term division; for true multiples it always succeeds.
    std::optional<MVPoly> divide_exact(const MVPoly& g, MVPoly* remainder = nullptr) const;

    std::string to_string() const;

private:
    void check_same_vars(const MVPoly& o) const;

    std::vector<std::string> vars_;
    std::map<Exponents, Rat> terms_;
};

/// Polynomial map between affine coordinate spaces: one component
/// polynomial (in the source variables) per target variable.
struct PolyMap {
    std::vector<std::string> source_vars;
    std::vector<std::string> target_vars;
    std::vector<MVPoly> components;

    PolyMap(std::vector<std::string> source, std::vector<std::string> target,
            std::vector<MVPoly> comps);

    static PolyMap identity(const std::vector<std::string>& vars);

    bool is_identity() const;

    /// Pullback of a polynomial on the target space: substitutes the
    /// components into p.
    MVPoly pullback(const MVPoly& p) const;
};

/// Composition f after g; g's target variables must equal f's source
/// variables.
PolyMap compose(const PolyMap& f, const PolyMap& g);

/// Declares finv as the inverse of f, verifying both compositions reduce
/// to the identity variable-for-variable. Throws InvalidArgument if not.
void verify_inverse_pair(const PolyMap& f, const PolyMap& finv);

} // namespace secant
