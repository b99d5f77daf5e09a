#pragma once

#include "sumstruct/core.hpp"
#include "sumstruct/numeric.hpp"

namespace sumstruct {

// Closed forms for A = {0, a, m} with gcd(a, m) = 1.  These are the
// independent oracle against which the general scanning machinery is tested.
class ThreeSet {
  public:
    ThreeSet(long long a, long long m);

    long long a() const { return a_; }
    long long m() const { return m_; }
    long long a_inv() const { return a_inv_; } // inverse of a mod m
    long long m_inv() const { return m_inv_; } // inverse of m mod a

    IntegerSet as_set() const;

    // n/(am) - {n*a_inv/m} - {n*m_inv/a} + 1, evaluated in exact rationals;
    // always a nonnegative integer, equal to the unbounded-parts count
    Count rho_closed(long long n) const;

    // t*a*m - a - m, clamped to 0 when the exceptional set is empty
    // (a = 1, t = 1 is the only such case)
    long long frobenius_t_closed(long long t) const;

    // (t-1)*a*m + (a-1)(m-1)/2
    Count exceptional_size_closed(long long t) const;

    // E_t = [0, (t-1)am - 1] u ((t-1)am + E_1), checked by enumeration
    bool shift_identity_check(long long t) const;

    // (h{0,a,m})^(t) matches the structured shape for every h in [1, h_max]
    bool always_structured_check(long long t, long long h_max) const;

  private:
    long long a_;
    long long m_;
    long long a_inv_;
    long long m_inv_;
};

} // namespace sumstruct
