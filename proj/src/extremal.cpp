#include "sumstruct/extremal.hpp"

#include "sumstruct/config.hpp"
#include "sumstruct/denumerant.hpp"
#include "sumstruct/errors.hpp"
#include "sumstruct/frobenius.hpp"
#include "sumstruct/structure.hpp"

#include <cmath>

namespace sumstruct {

ExtremalInstance extremal_build(long long m, long long ell, long long R) {
    if (m < 5)
        throw InvalidInput("extremal_build: requires m >= 5");
    if (ell < 2 || 2 * ell > m)
        throw InvalidInput("extremal_build: requires 2 <= ell <= m/2");
    if (R < 0 || R * (ell - 1) > m - ell)
        throw InvalidInput("extremal_build: requires 0 <= R <= (m-ell)/(ell-1)");
    std::vector<long long> elems{0, 1};
    for (long long v = m - ell + 1; v <= m; ++v)
        elems.push_back(v);
    ExtremalInstance inst{m, ell, R, IntegerSet(std::move(elems)), binomial(ell + R, R),
                          (R + 1) * (m - ell + 1) - 1};
    if (static_cast<long long>(inst.set.size()) != ell + 2)
        throw InternalError("extremal_build: wrong set size");
    if (inst.g / m != R)
        throw InternalError("extremal_build: floor(g/m) != R");
    return inst;
}

ExtremalReport extremal_verify(const ExtremalInstance& inst) {
    if (inst.t > config().max_t)
        throw ResourceLimit("extremal_verify: t = " + inst.t.str() + " exceeds cap " +
                            std::to_string(config().max_t));
    long long t = checked_ll(inst.t, "extremal t");
    const IntegerSet& A = inst.set;

    ExtremalReport rep{inst, false, false, false, false, false, false, 0, 0, 0};

    ExceptionalSet ea = exceptional_set(A, t);
    ExceptionalSet eb = exceptional_set(A.reflect(), t);
    long long range_top = inst.m * inst.R - 1;
    rep.exceptional_in_range =
        (ea.members.empty() || ea.members.back() <= range_top) &&
        (eb.members.empty() || eb.members.back() <= range_top);

    rep.rho_g_equals_t = rho_total(A, inst.g) == inst.t;

    rep.frobenius = ea.frobenius_t;
    // R = 0 forces t = 1 and an empty exceptional set (1 is an element);
    // the interval [g-m, m*R-1] is then vacuous and emptiness is the claim
    rep.frobenius_in_range = ea.members.empty()
                                 ? inst.R == 0
                                 : inst.g - inst.m <= rep.frobenius && rep.frobenius <= range_top;

    long long H = 2 * inst.R + 1;
    rep.unstructured_at_2R1 = !detail::unstructured_h_list(A, t, H, ea, eb).empty() &&
                              !is_structured(A, H, t).structured;

    HtResult ht = ht_exact(A, t);
    rep.ht = ht.ht_exact;
    rep.cap = ht.cap;
    rep.ht_at_least_g = ht.ht_exact >= inst.g;
    rep.ht_within_cap = ht.ht_exact <= ht.cap;
    return rep;
}

bool ExtremalReport::ok() const {
    return exceptional_in_range && rho_g_equals_t && frobenius_in_range && unstructured_at_2R1 &&
           ht_at_least_g && ht_within_cap;
}

nlohmann::ordered_json ExtremalReport::to_json() const {
    nlohmann::ordered_json j;
    j["m"] = instance.m;
    j["ell"] = instance.ell;
    j["R"] = instance.R;
    j["set"] = instance.set.to_string();
    j["t"] = instance.t.str();
    j["g"] = instance.g;
    j["frobenius_t"] = frobenius;
    j["ht_exact"] = ht;
    j["cap_mt1"] = cap;
    j["checks"] = {{"exceptional_in_range", exceptional_in_range},
                   {"rho_g_equals_t", rho_g_equals_t},
                   {"frobenius_in_range", frobenius_in_range},
                   {"unstructured_at_2R1", unstructured_at_2R1},
                   {"ht_at_least_g", ht_at_least_g},
                   {"ht_within_cap", ht_within_cap}};
    j["ok"] = ok();
    return j;
}

AsymptoticRecord asymptotic_report(long long m) {
    if (m < 5)
        throw InvalidInput("asymptotic_report: requires m >= 5");
    long long ell = static_cast<long long>(
        std::floor(std::exp(std::log(static_cast<double>(m)) / 2.01)));
    long long R = static_cast<long long>(std::floor(std::sqrt(static_cast<double>(m))));
    AsymptoticRecord rec{m, ell, R, "", 0, 0.0, false, false, true, ""};
    if (ell < 2 || 2 * ell > m) {
        rec.ok = false;
        rec.reason = "induced ell out of range";
        return rec;
    }
    if (R < 0 || R * (ell - 1) > m - ell) {
        rec.ok = false;
        rec.reason = "induced R out of range";
        return rec;
    }
    Count t = binomial(ell + R, R);
    rec.t_decimal = t.str();
    rec.g = (R + 1) * (m - ell + 1) - 1;
    double t_root = std::exp(log_big(t) / static_cast<double>(ell));
    rec.ratio = static_cast<double>(rec.g) /
                (std::exp(-1.0) * static_cast<double>(m) * static_cast<double>(ell) * t_root);
    Count lhs = boost::multiprecision::pow(Count(R + ell), static_cast<unsigned>(ell));
    rec.r_lower_ok = factorial(ell) * t <= lhs;
    rec.r_upper_ok = lhs <= boost::multiprecision::pow(Count(ell), static_cast<unsigned>(ell)) * t;
    return rec;
}

nlohmann::ordered_json AsymptoticRecord::to_json() const {
    nlohmann::ordered_json j;
    j["m"] = m;
    j["ell"] = ell;
    j["R"] = R;
    j["ok"] = ok;
    if (!ok) {
        j["reason"] = reason;
        return j;
    }
    j["t"] = t_decimal;
    j["g"] = g;
    j["ratio"] = ratio;
    j["r_lower_ok"] = r_lower_ok;
    j["r_upper_ok"] = r_upper_ok;
    return j;
}

} // namespace sumstruct
