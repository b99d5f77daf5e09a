#include "sumstruct/threeset.hpp"

#include "sumstruct/errors.hpp"
#include "sumstruct/frobenius.hpp"
#include "sumstruct/structure.hpp"

#include <numeric>

namespace sumstruct {

namespace {

// x with a*x == gcd(a, mod) (mod mod), by extended gcd
long long mod_inverse(long long a, long long mod) {
    if (mod == 1)
        return 0;
    long long r0 = mod, r1 = a % mod, s0 = 0, s1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        long long r2 = r0 - q * r1;
        long long s2 = s0 - q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if (r0 != 1)
        throw InvalidInput("mod_inverse: arguments not coprime");
    return ((s0 % mod) + mod) % mod;
}

Rat frac(const Count& num, long long den) {
    Count r = num % den;
    if (r < 0)
        r += den;
    return Rat(r, den);
}

} // namespace

ThreeSet::ThreeSet(long long a, long long m) : a_(a), m_(m) {
    if (!(0 < a && a < m))
        throw InvalidInput("ThreeSet: requires 0 < a < m");
    if (std::gcd(a, m) != 1)
        throw InvalidInput("ThreeSet: requires gcd(a, m) = 1");
    a_inv_ = mod_inverse(a_, m_);
    m_inv_ = mod_inverse(m_, a_);
}

IntegerSet ThreeSet::as_set() const { return IntegerSet({0, a_, m_}); }

Count ThreeSet::rho_closed(long long n) const {
    if (n < 0)
        return 0;
    Rat value = Rat(n, a_ * m_) - frac(Count(n) * a_inv_, m_) - frac(Count(n) * m_inv_, a_) + 1;
    Count num = boost::multiprecision::numerator(value);
    Count den = boost::multiprecision::denominator(value);
    if (den != 1 || num < 0)
        throw InternalError("rho_closed: formula did not produce a nonnegative integer");
    return num;
}

long long ThreeSet::frobenius_t_closed(long long t) const {
    if (t < 1)
        throw InvalidInput("frobenius_t_closed: t must be >= 1");
    long long v = checked_ll(Count(t) * a_ * m_ - a_ - m_, "frobenius_t_closed");
    return v < 0 ? 0 : v;
}

Count ThreeSet::exceptional_size_closed(long long t) const {
    if (t < 1)
        throw InvalidInput("exceptional_size_closed: t must be >= 1");
    return Count(t - 1) * a_ * m_ + Count(a_ - 1) * (m_ - 1) / 2;
}

bool ThreeSet::shift_identity_check(long long t) const {
    IntegerSet A = as_set();
    ExceptionalSet et = exceptional_set(A, t);
    ExceptionalSet e1 = exceptional_set(A, 1);
    long long offset = (t - 1) * a_ * m_;
    std::vector<long long> expected;
    for (long long n = 0; n < offset; ++n)
        expected.push_back(n);
    for (long long e : e1.members)
        expected.push_back(offset + e);
    return et.members == expected;
}

bool ThreeSet::always_structured_check(long long t, long long h_max) const {
    if (h_max < 1)
        throw InvalidInput("always_structured_check: h_max must be >= 1");
    IntegerSet A = as_set();
    ExceptionalSet ea = exceptional_set(A, t);
    ExceptionalSet eb = exceptional_set(A.reflect(), t);
    return detail::unstructured_h_list(A, t, h_max, ea, eb).empty();
}

} // namespace sumstruct
