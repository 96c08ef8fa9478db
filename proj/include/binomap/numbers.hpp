#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace binomap {

// All combinatorial and lattice decisions are made over exact integers and
// rationals; floating point only enters at particular-solution values.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_pow(Int base, std::uint64_t e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// base^e for nonzero base, e may be negative
inline Rat rat_pow(const Rat& base, std::int64_t e) {
    if (base == 0) throw std::domain_error("rat_pow: zero base");
    std::uint64_t a = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
    Rat r(int_pow(boost::multiprecision::numerator(base), a),
          int_pow(boost::multiprecision::denominator(base), a));
    if (e < 0) r = Rat(1) / r;
    return r;
}

// quotient rounded toward -inf; b > 0
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

inline std::int64_t to_i64(const Int& v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("integer too large for 64-bit conversion");
    return v.convert_to<std::int64_t>();
}

inline double to_double(const Rat& v) { return v.convert_to<double>(); }

}  // namespace binomap
