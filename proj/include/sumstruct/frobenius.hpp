#pragma once

#include "sumstruct/core.hpp"
#include "sumstruct/numeric.hpp"

#include <json.hpp>

#include <vector>

namespace sumstruct {

// E_t(A): the nonnegative integers with fewer than t representations over A,
// together with its maximum (0 when empty).
struct ExceptionalSet {
    IntegerSet set;
    long long t;
    std::vector<long long> members; // sorted
    long long frobenius_t;          // max member, 0 if empty

    bool contains(long long n) const;
    nlohmann::ordered_json to_json() const;
};

// Upward scan with the m-consecutive-pass window rule: once m consecutive
// values all have at least t representations, every larger value does too
// (adding copies of m never loses representations).  The scan is hard-capped
// at the analytic upper bracket plus m; exceeding it raises InternalError.
ExceptionalSet exceptional_set(const IntegerSet& A, long long t);

long long frobenius_t(const IntegerSet& A, long long t);

// Conservative two-sided enclosure of Fr_t(A) for ell >= 1: the ell-th root
// in the leading term is evaluated with directed rounding (lower rounded
// down, upper rounded up), so lower < Fr_t(A) <= upper is preserved for
// t >= 2; at t = 1 the leading term vanishes and only the upper side is
// meaningful.
std::pair<Rat, Rat> frobenius_brackets(const IntegerSet& A, long long t);

} // namespace sumstruct
