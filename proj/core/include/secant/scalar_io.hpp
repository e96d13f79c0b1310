#pragma once

#include <string>
#include <utility>

#include "secant/rat.hpp"
#include "secant/ratfunc.hpp"

namespace secant {

inline std::string to_display(const Rat& v) { return v.to_string(); }
inline std::string to_display(const RatFuncD& v) { return v.to_string(); }

/// (numerator, denominator) as text, for the flat CSV schema.
inline std::pair<std::string, std::string> display_pair(const Rat& v) {
    return {v.numerator().str(), v.denominator().str()};
}
inline std::pair<std::string, std::string> display_pair(const RatFuncD& v) {
    return v.display_fraction();
}

} // namespace secant
