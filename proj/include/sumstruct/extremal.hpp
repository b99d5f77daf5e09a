#pragma once

#include "sumstruct/core.hpp"
#include "sumstruct/numeric.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace sumstruct {

// The family {0, 1, m-ell+1, ..., m} with t = C(ell+R, R) and
// g = (R+1)(m-ell+1) - 1, which keeps the structure threshold high.
struct ExtremalInstance {
    long long m;
    long long ell;
    long long R;
    IntegerSet set;
    Count t;
    long long g;
};

// valid ranges: m >= 5, 2 <= ell <= m/2, 0 <= R <= (m-ell)/(ell-1)
ExtremalInstance extremal_build(long long m, long long ell, long long R);

struct ExtremalReport {
    ExtremalInstance instance;
    bool exceptional_in_range; // E_t(A) u E_t(m-A) lies in [0, m*R - 1]
    bool rho_g_equals_t;       // rho_A(g) = t
    bool frobenius_in_range;   // g - m <= Fr_t(A) <= m*R - 1
    bool unstructured_at_2R1;  // structure fails at h = 2R + 1
    bool ht_at_least_g;        // exact threshold >= g
    bool ht_within_cap;        // exact threshold <= the floor-sum bound
    long long frobenius;
    long long ht;
    long long cap;
    bool ok() const;

    nlohmann::ordered_json to_json() const;
};

ExtremalReport extremal_verify(const ExtremalInstance& inst);

// Finite-m evidence for the growth rate of the threshold: with
// ell = floor(m^(1/2.01)) and R = floor(sqrt(m)), reports
// g / ((1/e) * m * ell * t^(1/ell)) and the two-sided enclosure of R.
struct AsymptoticRecord {
    long long m;
    long long ell;
    long long R;
    std::string t_decimal;
    long long g;
    double ratio;
    bool r_lower_ok; // ell! * t <= (R + ell)^ell
    bool r_upper_ok; // (R + ell)^ell <= ell^ell * t
    bool ok;
    std::string reason; // set when the induced parameters fall out of range

    nlohmann::ordered_json to_json() const;
};

AsymptoticRecord asymptotic_report(long long m);

} // namespace sumstruct
