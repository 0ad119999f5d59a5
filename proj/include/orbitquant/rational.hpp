#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace orbitquant {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline double to_double(const Rat& r) { return r.template convert_to<double>(); }

inline Rat rat_factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return Rat(f);
}

// Parse "p/q" or "p" (optionally signed). Throws std::invalid_argument.
inline Rat parse_rational(const std::string& s) {
    auto bad = [&] { throw std::invalid_argument("bad rational literal: '" + s + "'"); };
    if (s.empty()) bad();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(BigInt(s));
        BigInt p(s.substr(0, slash)), q(s.substr(slash + 1));
        if (q == 0) bad();
        return Rat(p, q);
    } catch (const std::runtime_error&) {
        bad();
    }
    return Rat(0); // unreachable
}

inline std::string rat_to_string(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

} // namespace orbitquant
