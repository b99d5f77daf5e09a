#pragma once

#include "sumstruct/core.hpp"
#include "sumstruct/frobenius.hpp"
#include "sumstruct/numeric.hpp"

#include <json.hpp>

#include <vector>

namespace sumstruct {

// (hA)^(t): the n in [0, h*m] with at least t representations in h parts
std::vector<long long> t_sumset(const IntegerSet& A, long long h, long long t);

// [0, h*m] minus E_t(A) minus (h*m - E_t(m-A)); the candidate shape that a
// structured sumset must equal
std::vector<long long> structured_rhs(const IntegerSet& A, long long h, long long t);

struct StructureReport {
    IntegerSet set;
    long long h;
    long long t;
    std::vector<long long> lhs; // (hA)^(t)
    std::vector<long long> rhs;
    bool structured;
    std::vector<long long> witnesses; // rhs \ lhs (lhs is always contained)

    nlohmann::ordered_json to_json(int witness_limit) const;
};

StructureReport is_structured(const IntegerSet& A, long long h, long long t);

struct HtResult {
    long long ht_exact;
    long long cap;                  // bound_mt1, the scan ceiling
    std::vector<long long> failing; // unstructured h in [1, cap]

    nlohmann::ordered_json to_json() const;
};

// Smallest h* such that every h in [h*, cap] is structured, with
// cap = bound_mt1(A, t); past the cap structure is guaranteed, so this is
// the exact threshold.  Scans the whole range: structure need not be
// monotone in h below the cap.
HtResult ht_exact(const IntegerSet& A, long long t);

// floor((Fr_t(A)+m)/a1) + floor((Fr_t(m-A)+m)/(m-a_ell))
long long bound_mt1(const IntegerSet& A, long long t);

struct Mt2Bound {
    double c; // the simplified-constant estimate
    long long bound;
};

// c = (1+4/ell)*e/t^(1/ell) + (1+2/ell)*(1+ln(4*ell)/ell)/min(a1, m-a_ell);
// bound = ceil(c * (1/e) * m * ell * t^(1/ell)); c <= 3e whenever ell >= 4
Mt2Bound bound_mt2(const IntegerSet& A, long long t);

// sum_{i=2}^{ell+1} (t*a_i - 1) - 1
long long bound_yz(const IntegerSet& A, long long t);

// (H+, H-) = (ceil((Fr_t(A)+m)/a1), ceil((Fr_t(m-A)+m)/(m-a_ell)))
std::pair<long long, long long> h_plus_minus(const IntegerSet& A, long long t);

// at h = bound_mt1, the sumset contains a run of >= m consecutive integers
bool long_interval_check(const IntegerSet& A, long long t);

struct BoundsReport {
    IntegerSet set;
    long long t;
    long long mt1;
    double mt2_constant;
    long long mt2;
    long long yang_zhou;
    long long h_plus;
    long long h_minus;
    long long interval_threshold; // smallest h with h*m > Fr_t(A)+Fr_t(m-A)+1
    bool long_interval_at_mt1;    // an m-run exists in the sumset at h = mt1

    nlohmann::ordered_json to_json() const;
};

BoundsReport bounds_report(const IntegerSet& A, long long t);

std::string compare_bounds_csv_header();
std::string compare_bounds_csv_row(const IntegerSet& A, long long t);

namespace detail {
// all unstructured h in [1, hmax], given precomputed exceptional sets
std::vector<long long> unstructured_h_list(const IntegerSet& A, long long t, long long hmax,
                                           const ExceptionalSet& ea, const ExceptionalSet& eb);
} // namespace detail

} // namespace sumstruct
