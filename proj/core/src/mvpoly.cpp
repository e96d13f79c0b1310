#include "secant/mvpoly.hpp"

#include <algorithm>

namespace secant {

MVPoly MVPoly::constant(std::vector<std::string> vars, Rat c) {
    MVPoly p(std::move(vars));
    p.add_term(Exponents(p.vars_.size(), 0), std::move(c));
    return p;
}

MVPoly MVPoly::var(std::vector<std::string> vars, const std::string& name) {
    MVPoly p(std::move(vars));
    Exponents e(p.vars_.size(), 0);
    e[p.var_index(name)] = 1;
    p.add_term(std::move(e), Rat(1));
    return p;
}

std::size_t MVPoly::var_index(const std::string& name) const {
    const auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end())
        throw InvalidArgument("MVPoly: unknown variable '" + name + "'");
    return static_cast<std::size_t>(it - vars_.begin());
}

void MVPoly::check_same_vars(const MVPoly& o) const {
    if (vars_ != o.vars_)
        throw InvalidArgument("MVPoly: variable-list mismatch");
}

void MVPoly::add_term(Exponents e, Rat c) {
    if (e.size() != vars_.size())
        throw InvalidArgument("MVPoly: exponent vector has wrong length");
    if (c.is_zero()) return;
    const auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(std::move(e), std::move(c));
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MVPoly MVPoly::operator-() const {
    MVPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MVPoly operator+(const MVPoly& a, const MVPoly& b) {
    a.check_same_vars(b);
    MVPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

MVPoly operator-(const MVPoly& a, const MVPoly& b) { return a + (-b); }

MVPoly operator*(const MVPoly& a, const MVPoly& b) {
    a.check_same_vars(b);
    MVPoly r(a.vars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            MVPoly::Exponents e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(std::move(e), ca * cb);
        }
    return r;
}

MVPoly operator*(const Rat& s, MVPoly p) {
    if (s.is_zero()) return MVPoly(p.vars_);
    for (auto& [e, c] : p.terms_) c *= s;
    return p;
}

MVPoly MVPoly::pow(unsigned e) const {
    MVPoly r = MVPoly::constant(vars_, Rat(1)), b = *this;
    for (; e; e >>= 1) {
        if (e & 1) r *= b;
        if (e > 1) b *= b;
    }
    return r;
}

Rat MVPoly::eval(const std::vector<Rat>& point) const {
    if (point.size() != vars_.size())
        throw InvalidArgument("MVPoly: evaluation point has wrong arity");
    Rat total(0);
    for (const auto& [e, c] : terms_) {
        Rat m = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) m *= point[i].pow(e[i]);
        total += m;
    }
    return total;
}

MVPoly MVPoly::substitute(const std::vector<MVPoly>& images) const {
    if (images.size() != vars_.size())
        throw InvalidArgument("MVPoly: substitution needs one image per variable");
    for (const auto& im : images)
        if (im.variables() != images.front().variables())
            throw InvalidArgument("MVPoly: substitution images disagree on variables");
    MVPoly total(images.front().variables());
    for (const auto& [e, c] : terms_) {
        MVPoly m = MVPoly::constant(total.vars_, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) m *= images[i].pow(e[i]);
        total += m;
    }
    return total;
}

std::optional<MVPoly> MVPoly::divide_exact(const MVPoly& g, MVPoly* remainder) const {
    check_same_vars(g);
    if (g.is_zero()) throw DivisionByZero("MVPoly: division by zero polynomial");
    MVPoly q(vars_), r = *this;
    const auto& glead = *g.terms_.rbegin(); // lex-leading term
    while (!r.is_zero()) {
        const auto& rlead = *r.terms_.rbegin();
        Exponents e(rlead.first.size());
        bool divides = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (rlead.first[i] < glead.first[i]) {
                divides = false;
                break;
            }
            e[i] = rlead.first[i] - glead.first[i];
        }
        if (!divides) {
            if (remainder) *remainder = r;
            return std::nullopt;
        }
        MVPoly t(vars_);
        t.add_term(std::move(e), rlead.second / glead.second);
        q += t;
        r -= t * g;
    }
    if (remainder) *remainder = MVPoly(vars_);
    return q;
}

std::string MVPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    // Highest lex term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        const bool first = out.empty();
        if (first) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        const Rat a = c.abs();
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            out += a.to_string();
        } else {
            if (!a.is_one()) out += a.to_string() + "*";
            out += mono;
        }
    }
    return out;
}

PolyMap::PolyMap(std::vector<std::string> source, std::vector<std::string> target,
                 std::vector<MVPoly> comps)
    : source_vars(std::move(source)), target_vars(std::move(target)),
      components(std::move(comps)) {
    if (components.size() != target_vars.size())
        throw InvalidArgument("PolyMap: need one component per target variable");
    for (const auto& c : components)
        if (c.variables() != source_vars)
            throw InvalidArgument("PolyMap: component over wrong variable list");
}

PolyMap PolyMap::identity(const std::vector<std::string>& vars) {
    std::vector<MVPoly> comps;
    comps.reserve(vars.size());
    for (const auto& v : vars) comps.push_back(MVPoly::var(vars, v));
    return PolyMap(vars, vars, std::move(comps));
}

bool PolyMap::is_identity() const {
    if (source_vars != target_vars) return false;
    for (std::size_t i = 0; i < components.size(); ++i)
        if (!(components[i] == MVPoly::var(source_vars, source_vars[i]))) return false;
    return true;
}

MVPoly PolyMap::pullback(const MVPoly& p) const {
    if (p.variables() != target_vars)
        throw InvalidArgument("PolyMap: pullback input over wrong variable list");
    return p.substitute(components);
}

PolyMap compose(const PolyMap& f, const PolyMap& g) {
    if (g.target_vars != f.source_vars)
        throw InvalidArgument("compose: target variables of g must equal source variables of f");
    std::vector<MVPoly> comps;
    comps.reserve(f.components.size());
    for (const auto& c : f.components) comps.push_back(c.substitute(g.components));
    return PolyMap(g.source_vars, f.target_vars, std::move(comps));
}

void verify_inverse_pair(const PolyMap& f, const PolyMap& finv) {
    if (!compose(f, finv).is_identity() || !compose(finv, f).is_identity())
        throw InvalidArgument("verify_inverse_pair: compositions are not the identity");
}

} // namespace secant
