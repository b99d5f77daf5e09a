#include "sumstruct/numeric.hpp"

#include "sumstruct/errors.hpp"

#include <cmath>
#include <limits>

namespace sumstruct {

Count iroot_floor(const Count& x, unsigned k) {
    if (x < 0)
        throw InvalidInput("iroot_floor: negative radicand");
    if (k == 0)
        throw InvalidInput("iroot_floor: zeroth root");
    if (k == 1 || x <= 1)
        return x;
    unsigned bits = boost::multiprecision::msb(x) + 1;
    Count r = Count(1) << ((bits + k - 1) / k); // overestimate
    while (true) {
        Count rk1 = boost::multiprecision::pow(r, k - 1);
        Count next = ((k - 1) * r + x / rk1) / k;
        if (next >= r)
            break;
        r = next;
    }
    while (boost::multiprecision::pow(r, k) > x)
        --r;
    while (boost::multiprecision::pow(r + 1, k) <= x)
        ++r;
    return r;
}

Count factorial(long long n) {
    if (n < 0)
        throw InvalidInput("factorial: negative argument");
    Count r = 1;
    for (long long i = 2; i <= n; ++i)
        r *= i;
    return r;
}

Count binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    Count r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i; // exact at every step
    }
    return r;
}

Count rat_floor(const Rat& q) {
    Count num = boost::multiprecision::numerator(q);
    Count den = boost::multiprecision::denominator(q);
    Count d = num / den;
    if (num < 0 && num % den != 0)
        --d;
    return d;
}

Count rat_ceil(const Rat& q) {
    Count num = boost::multiprecision::numerator(q);
    Count den = boost::multiprecision::denominator(q);
    Count d = num / den;
    if (num > 0 && num % den != 0)
        ++d;
    return d;
}

Rat rat_pow(const Rat& base, unsigned e) {
    Rat r = 1;
    Rat b = base;
    while (e) {
        if (e & 1)
            r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

double to_double(const Rat& q) { return q.convert_to<double>(); }
double to_double(const Count& c) { return c.convert_to<double>(); }

double log_big(const Count& x) {
    if (x <= 0)
        throw InvalidInput("log_big: nonpositive argument");
    unsigned bits = boost::multiprecision::msb(x);
    if (bits <= 900)
        return std::log(x.convert_to<double>());
    unsigned shift = bits - 64;
    double mant = (x >> shift).convert_to<double>();
    return std::log(mant) + shift * 0.6931471805599453;
}

std::string rat_to_string(const Rat& q) {
    Count num = boost::multiprecision::numerator(q);
    Count den = boost::multiprecision::denominator(q);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

long long checked_ll(const Count& c, const char* what) {
    if (c > std::numeric_limits<long long>::max() || c < std::numeric_limits<long long>::min())
        throw ResourceLimit(std::string(what) + ": value exceeds 64-bit range");
    return c.convert_to<long long>();
}

} // namespace sumstruct
