#include "sumstruct/frobenius.hpp"

#include "sumstruct/config.hpp"
#include "sumstruct/denumerant.hpp"
#include "sumstruct/errors.hpp"

#include <algorithm>

namespace sumstruct {

bool ExceptionalSet::contains(long long n) const {
    return std::binary_search(members.begin(), members.end(), n);
}

nlohmann::ordered_json ExceptionalSet::to_json() const {
    nlohmann::ordered_json j;
    j["set"] = set.to_string();
    j["t"] = t;
    j["frobenius_t"] = frobenius_t;
    j["members"] = members;
    return j;
}

namespace {

// integer upper bound for the analytic bracket
// (a1...a_{ell+1})^(1/ell) * (ell!)^(1/ell) * (t-1)^(1/ell) + (a1-1)*sum
long long scan_cap(const IntegerSet& A, long long t) {
    long long ell = A.ell();
    long long S = 0;
    for (std::size_t j = 2; j < A.size(); ++j)
        S += A.element(j);
    Count radicand = factorial(ell) * (t - 1);
    for (std::size_t j = 1; j < A.size(); ++j)
        radicand *= A.element(j);
    Count lead = iroot_floor(radicand, static_cast<unsigned>(ell)) + 1;
    return checked_ll(lead + (A.a1() - 1) * S, "exceptional_set cap");
}

} // namespace

ExceptionalSet exceptional_set(const IntegerSet& A, long long t) {
    if (t < 1)
        throw InvalidInput("exceptional_set: t must be >= 1");
    if (A.ell() == 0) { // A = {0,1}: every n has exactly one representation
        if (t == 1)
            return {A, t, {}, 0};
        throw Unsupported("exceptional set of {0,1} is all of Z>=0 for t >= 2");
    }
    long long m = A.m();
    long long cap = scan_cap(A, t) + m;
    RhoEngine engine = RhoEngine::for_totals(A, cap);
    std::vector<Count> totals = engine.total_row();

    std::vector<long long> members;
    long long run = 0;
    long long n = 0;
    for (; n <= cap; ++n) {
        if (totals[n] >= t) {
            if (++run == m)
                break;
        } else {
            run = 0;
            members.push_back(n);
        }
    }
    if (run < m)
        throw InternalError("exceptional_set: window rule did not close below the bracket cap");
    long long fr = members.empty() ? 0 : members.back();
    return {A, t, std::move(members), fr};
}

long long frobenius_t(const IntegerSet& A, long long t) { return exceptional_set(A, t).frobenius_t; }

std::pair<Rat, Rat> frobenius_brackets(const IntegerSet& A, long long t) {
    if (t < 1)
        throw InvalidInput("frobenius_brackets: t must be >= 1");
    if (A.ell() == 0)
        throw Unsupported("frobenius_brackets: undefined for {0,1}");
    unsigned ell = static_cast<unsigned>(A.ell());
    long long S = 0;
    for (std::size_t j = 2; j < A.size(); ++j)
        S += A.element(j);
    Count radicand = factorial(ell) * (t - 1);
    for (std::size_t j = 1; j < A.size(); ++j)
        radicand *= A.element(j);
    // 12 decimal digits of the ell-th root, rounded both ways
    const Count scale = boost::multiprecision::pow(Count(10), 12);
    Count scaled = radicand * boost::multiprecision::pow(scale, ell);
    Count root_lo = iroot_floor(scaled, ell);
    Rat lower = Rat(root_lo, scale) - S - 2;
    Rat upper = Rat(root_lo + 1, scale) + (A.a1() - 1) * S;
    return {lower, upper};
}

} // namespace sumstruct
