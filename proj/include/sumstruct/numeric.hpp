#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace sumstruct {

// Counts of representations grow super-polynomially, so the public API is
// arbitrary precision throughout.  Dense tables keep a uint64 fast path
// internally (see RhoEngine) and fall back to Count on overflow.
using Count = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// floor(x^(1/k)) for x >= 0, k >= 1, by Newton iteration on integers.
Count iroot_floor(const Count& x, unsigned k);

Count factorial(long long n);
Count binomial(long long n, long long k);

Count rat_floor(const Rat& q);
Count rat_ceil(const Rat& q);
Rat rat_pow(const Rat& base, unsigned e);

double to_double(const Rat& q);
double to_double(const Count& c);

// natural log of a positive big integer, usable far beyond double range
double log_big(const Count& x);

std::string rat_to_string(const Rat& q); // "p/q", or "p" when integral

long long checked_ll(const Count& c, const char* what);

inline long long ceil_div(long long num, long long den) {
    return num / den + (num % den != 0 ? 1 : 0); // nonnegative operands
}

} // namespace sumstruct
