#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace wreathstab {

// Exact arithmetic used throughout. Every count is arbitrary precision from
// the start; no machine-word fast path.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Thrown when a computation would exceed a configured enumeration cap.
// Callers may retry with a larger cap; the library never silently truncates.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

inline BigInt factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

// Rationals print as "p" when integral, "p/q" otherwise (boost's default).
inline std::string to_string(const BigRat& v) { return v.str(); }

inline bool is_integer(const BigRat& v) { return denominator(v) == 1; }

}  // namespace wreathstab
