#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace gla {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Renders a rational as "p" or "p/q" (q > 0, lowest terms).
inline std::string rat_to_string(const Rat& r)
{
    std::string s = numerator(r).str();
    if (denominator(r) != 1)
        s += "/" + denominator(r).str();
    return s;
}

/// Parses the output of rat_to_string.
inline Rat rat_from_string(const std::string& s)
{
    auto slash = s.find('/');
    if (slash == std::string::npos)
        return Rat(Int(s));
    Int p(s.substr(0, slash));
    Int q(s.substr(slash + 1));
    if (q == 0)
        throw std::invalid_argument("rational with zero denominator: " + s);
    return Rat(p, q);
}

} // namespace gla
