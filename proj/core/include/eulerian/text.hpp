#pragma once

#include <string>
#include <string_view>

#include "eulerian/series.hpp"

namespace eulerian {

/// Lossless, canonical text form. Terms in ascending graded-lex order,
/// explicit '^' powers, unit coefficients implied: "1-λ", "1+4t+t^2".
/// Non-integer coefficients use an explicit '*': "3/2*t^2".
std::string to_string(const Rational& r);
std::string to_string(const MPoly& p);
/// Polynomials render bare; proper quotients as "(num)/(den)".
std::string to_string(const RatFun& f);

/// Inverses of the renderers above (also accept "lambda" for λ).
Rational parse_rational(std::string_view s);
MPoly parse_mpoly(std::string_view s);
RatFun parse_ratfun(std::string_view s);

}  // namespace eulerian
