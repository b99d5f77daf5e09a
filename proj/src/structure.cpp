#include "sumstruct/structure.hpp"

#include "sumstruct/config.hpp"
#include "sumstruct/denumerant.hpp"
#include "sumstruct/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace sumstruct {

namespace {

// membership mask of [0, hm] \ (E_t(A) u (hm - E_t(m-A)))
std::vector<char> rhs_mask(long long hm, const ExceptionalSet& ea, const ExceptionalSet& eb) {
    std::vector<char> mask(hm + 1, 1);
    for (long long e : ea.members) {
        if (e > hm)
            break;
        mask[e] = 0;
    }
    for (long long e : eb.members) {
        if (e > hm)
            break;
        mask[hm - e] = 0;
    }
    return mask;
}

void check_hm_cap(long long h, long long m) {
    if (h > config().max_hm / m) // division form: h*m may not fit
        throw ResourceLimit("h*m exceeds cap " + std::to_string(config().max_hm));
}

} // namespace

std::vector<long long> t_sumset(const IntegerSet& A, long long h, long long t) {
    if (h < 0)
        throw InvalidInput("t_sumset: negative h");
    if (t < 1)
        throw InvalidInput("t_sumset: t must be >= 1");
    check_hm_cap(h, A.m());
    long long hm = h * A.m();
    RhoEngine engine(A, h, hm);
    RhoScanner scan(engine);
    while (scan.h() < h)
        scan.advance();
    std::vector<long long> out;
    for (long long n = 0; n <= hm; ++n)
        if (scan.at_least(n, t))
            out.push_back(n);
    return out;
}

std::vector<long long> structured_rhs(const IntegerSet& A, long long h, long long t) {
    if (h < 0)
        throw InvalidInput("structured_rhs: negative h");
    check_hm_cap(h, A.m());
    ExceptionalSet ea = exceptional_set(A, t);
    ExceptionalSet eb = exceptional_set(A.reflect(), t);
    long long hm = h * A.m();
    std::vector<char> mask = rhs_mask(hm, ea, eb);
    std::vector<long long> out;
    for (long long n = 0; n <= hm; ++n)
        if (mask[n])
            out.push_back(n);
    return out;
}

StructureReport is_structured(const IntegerSet& A, long long h, long long t) {
    if (h < 0)
        throw InvalidInput("is_structured: negative h");
    if (t < 1)
        throw InvalidInput("is_structured: t must be >= 1");
    check_hm_cap(h, A.m());
    ExceptionalSet ea = exceptional_set(A, t);
    ExceptionalSet eb = exceptional_set(A.reflect(), t);
    long long hm = h * A.m();
    std::vector<char> mask = rhs_mask(hm, ea, eb);

    RhoEngine engine(A, h, hm);
    RhoScanner scan(engine);
    while (scan.h() < h)
        scan.advance();

    StructureReport rep{A, h, t, {}, {}, true, {}};
    for (long long n = 0; n <= hm; ++n) {
        bool in_lhs = scan.at_least(n, t);
        bool in_rhs = mask[n] != 0;
        if (in_lhs)
            rep.lhs.push_back(n);
        if (in_rhs)
            rep.rhs.push_back(n);
        if (in_lhs && !in_rhs)
            throw InternalError("t_sumset escaped the structured shape at n = " +
                                std::to_string(n));
        if (in_rhs && !in_lhs)
            rep.witnesses.push_back(n);
    }
    rep.structured = rep.witnesses.empty();
    return rep;
}

nlohmann::ordered_json StructureReport::to_json(int witness_limit) const {
    nlohmann::ordered_json j;
    j["set"] = set.to_string();
    j["h"] = h;
    j["t"] = t;
    j["structured"] = structured;
    j["lhs"] = lhs;
    j["rhs"] = rhs;
    auto trunc = witnesses;
    if (witness_limit >= 0 && static_cast<long long>(trunc.size()) > witness_limit)
        trunc.resize(witness_limit);
    j["witnesses"] = trunc;
    j["witness_total"] = witnesses.size();
    return j;
}

namespace detail {

std::vector<long long> unstructured_h_list(const IntegerSet& A, long long t, long long hmax,
                                           const ExceptionalSet& ea, const ExceptionalSet& eb) {
    check_hm_cap(hmax, A.m());
    RhoEngine engine(A, hmax, hmax * A.m());
    RhoScanner scan(engine);
    std::vector<long long> failing;
    for (long long h = 1; h <= hmax; ++h) {
        scan.advance();
        long long hm = h * A.m();
        std::vector<char> mask = rhs_mask(hm, ea, eb);
        for (long long n = 0; n <= hm; ++n) {
            bool in_lhs = scan.at_least(n, t);
            if (in_lhs && !mask[n])
                throw InternalError("t_sumset escaped the structured shape at h = " +
                                    std::to_string(h));
            if (!in_lhs && mask[n]) {
                failing.push_back(h);
                break;
            }
        }
    }
    return failing;
}

} // namespace detail

static long long mt1_from(const ExceptionalSet& ea, const ExceptionalSet& eb) {
    const IntegerSet& A = ea.set;
    return (ea.frobenius_t + A.m()) / A.a1() + (eb.frobenius_t + A.m()) / (A.m() - A.a_ell());
}

HtResult ht_exact(const IntegerSet& A, long long t) {
    ExceptionalSet ea = exceptional_set(A, t);
    ExceptionalSet eb = exceptional_set(A.reflect(), t);
    long long cap = mt1_from(ea, eb);
    HtResult res{1, cap, detail::unstructured_h_list(A, t, cap, ea, eb)};
    if (!res.failing.empty()) {
        if (res.failing.back() == cap)
            throw InternalError("unstructured sumset at the guaranteed bound h = " +
                                std::to_string(cap));
        res.ht_exact = res.failing.back() + 1;
    }
    return res;
}

nlohmann::ordered_json HtResult::to_json() const {
    nlohmann::ordered_json j;
    j["ht_exact"] = ht_exact;
    j["cap_mt1"] = cap;
    j["failing_h"] = failing;
    return j;
}

long long bound_mt1(const IntegerSet& A, long long t) {
    ExceptionalSet ea = exceptional_set(A, t);
    ExceptionalSet eb = exceptional_set(A.reflect(), t);
    return mt1_from(ea, eb);
}

Mt2Bound bound_mt2(const IntegerSet& A, long long t) {
    if (t < 1)
        throw InvalidInput("bound_mt2: t must be >= 1");
    if (A.ell() == 0)
        throw Unsupported("bound_mt2: needs at least one interior element");
    double ell = static_cast<double>(A.ell());
    double t_root = std::pow(static_cast<double>(t), 1.0 / ell);
    double mn = static_cast<double>(std::min(A.a1(), A.m() - A.a_ell()));
    double e = std::exp(1.0);
    double c = (1.0 + 4.0 / ell) * e / t_root +
               (1.0 + 2.0 / ell) * (1.0 + std::log(4.0 * ell) / ell) / mn;
    if (A.ell() >= 4 && c > 3.0 * e)
        throw InternalError("bound_mt2: constant exceeded 3e at ell >= 4");
    double raw = c * (1.0 / e) * static_cast<double>(A.m()) * ell * t_root;
    return {c, static_cast<long long>(std::ceil(raw))};
}

long long bound_yz(const IntegerSet& A, long long t) {
    if (t < 1)
        throw InvalidInput("bound_yz: t must be >= 1");
    Count s = 0;
    for (std::size_t j = 2; j < A.size(); ++j)
        s += Count(t) * A.element(j) - 1;
    return checked_ll(s - 1, "bound_yz");
}

std::pair<long long, long long> h_plus_minus(const IntegerSet& A, long long t) {
    ExceptionalSet ea = exceptional_set(A, t);
    ExceptionalSet eb = exceptional_set(A.reflect(), t);
    long long hp = ceil_div(ea.frobenius_t + A.m(), A.a1());
    long long hn = ceil_div(eb.frobenius_t + A.m(), A.m() - A.a_ell());
    if (A.m() >= 2) { // the guarantees below need a1 <= m-1, which {0,1} lacks
        if (hp < 2 || hn < 2 || hp + hn - 2 < std::max(hp, hn))
            throw InternalError("h_plus_minus: H+ + H- - 2 >= max(H+, H-) failed");
    }
    return {hp, hn};
}

bool long_interval_check(const IntegerSet& A, long long t) {
    long long h = bound_mt1(A, t);
    std::vector<long long> s = t_sumset(A, h, t);
    long long run = 1, best = s.empty() ? 0 : 1;
    for (std::size_t i = 1; i < s.size(); ++i) {
        run = (s[i] == s[i - 1] + 1) ? run + 1 : 1;
        best = std::max(best, run);
    }
    return best >= A.m();
}

BoundsReport bounds_report(const IntegerSet& A, long long t) {
    ExceptionalSet ea = exceptional_set(A, t);
    ExceptionalSet eb = exceptional_set(A.reflect(), t);
    BoundsReport rep{A, t, 0, 0.0, 0, 0, 0, 0, 0, false};
    rep.mt1 = mt1_from(ea, eb);
    Mt2Bound mt2 = bound_mt2(A, t);
    rep.mt2_constant = mt2.c;
    rep.mt2 = mt2.bound;
    rep.yang_zhou = bound_yz(A, t);
    auto [hp, hn] = h_plus_minus(A, t);
    rep.h_plus = hp;
    rep.h_minus = hn;
    rep.interval_threshold = (ea.frobenius_t + eb.frobenius_t + 1) / A.m() + 1;
    rep.long_interval_at_mt1 = long_interval_check(A, t);
    return rep;
}

nlohmann::ordered_json BoundsReport::to_json() const {
    nlohmann::ordered_json j;
    j["set"] = set.to_string();
    j["t"] = t;
    j["mt1"] = mt1;
    j["mt2_constant"] = mt2_constant;
    j["mt2"] = mt2;
    j["yang_zhou"] = yang_zhou;
    j["h_plus"] = h_plus;
    j["h_minus"] = h_minus;
    j["interval_threshold"] = interval_threshold;
    j["long_interval_at_mt1"] = long_interval_at_mt1;
    return j;
}

std::string compare_bounds_csv_header() { return "set,t,ht_exact,mt1,mt2,yz"; }

std::string compare_bounds_csv_row(const IntegerSet& A, long long t) {
    HtResult ht = ht_exact(A, t);
    Mt2Bound mt2 = bound_mt2(A, t);
    std::ostringstream os;
    os << '"' << A.to_string() << "\"," << t << ',' << ht.ht_exact << ',' << ht.cap << ','
       << mt2.bound << ',' << bound_yz(A, t);
    return os.str();
}

} // namespace sumstruct
