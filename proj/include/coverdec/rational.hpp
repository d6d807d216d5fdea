#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/integer/common_factor_rt.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace coverdec {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

/// Largest integer <= r.
inline Int rat_floor(const Rat& r) {
    Int q = rat_num(r) / rat_den(r);
    if (rat_num(r) < 0 && q * rat_den(r) != rat_num(r)) --q;
    return q;
}

inline Int rat_ceil(const Rat& r) { return -rat_floor(-r); }

inline int sign(const Rat& r) { return r.sign(); }
inline int sign(const Int& v) { return v.sign(); }

/// Integer square root, rounded down. Requires v >= 0.
inline Int isqrt_floor(const Int& v) {
    if (v < 0) throw std::invalid_argument("isqrt of negative value");
    return boost::multiprecision::sqrt(v);
}

/// Rational lower bound on sqrt(r), exact when r is a perfect rational square.
/// `bits` controls the precision of the dyadic approximation.
inline Rat sqrt_lower_bound(const Rat& r, unsigned bits = 24) {
    if (r < 0) throw std::invalid_argument("sqrt of negative rational");
    if (r == 0) return Rat(0);
    Int n = rat_num(r), d = rat_den(r);
    Int sn = isqrt_floor(n), sd = isqrt_floor(d);
    if (sn * sn == n && sd * sd == d) return Rat(sn, sd);
    // floor(2^bits * sqrt(n/d)) / 2^bits
    Int scale = Int(1) << (2 * bits);
    Int root = isqrt_floor(n * scale / d);
    return Rat(root, Int(1) << bits);
}

/// Rational upper bound on sqrt(r), exact for perfect squares.
inline Rat sqrt_upper_bound(const Rat& r, unsigned bits = 24) {
    Rat lo = sqrt_lower_bound(r, bits);
    if (lo * lo == r) return lo;
    return lo + Rat(1, Int(1) << bits);
}

/// Parses "n", "-n" or "n/d" with nonzero d; result in lowest terms.
inline Rat parse_rat(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(text));
        Int n(text.substr(0, slash));
        Int d(text.substr(slash + 1));
        if (d == 0) throw std::invalid_argument("zero denominator");
        return Rat(n, d);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational: " + text);
    }
}

/// Lowest-terms serialization: "n" when integral, else "n/d" with d > 0.
inline std::string format_rat(const Rat& r) {
    if (rat_den(r) == 1) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

} // namespace coverdec
