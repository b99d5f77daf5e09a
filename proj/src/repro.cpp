#include "sumstruct/repro.hpp"

#include "sumstruct/core.hpp"
#include "sumstruct/denumerant.hpp"
#include "sumstruct/errors.hpp"
#include "sumstruct/extremal.hpp"
#include "sumstruct/frobenius.hpp"
#include "sumstruct/lattice.hpp"
#include "sumstruct/structure.hpp"
#include "sumstruct/threeset.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>
#include <vector>

namespace sumstruct {

namespace {

struct Entry {
    std::string id;
    std::function<std::string()> run;
};

std::string list_str(const std::vector<long long>& v) { return format_int_list(v); }

std::string points_str(const std::vector<Point>& pts) {
    std::ostringstream os;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i)
            os << ' ';
        os << '(' << format_point(pts[i]) << ')';
    }
    return os.str();
}

IntegerSet S(std::initializer_list<long long> v) { return IntegerSet(std::vector<long long>(v)); }

LatticePointSet L(std::initializer_list<Point> v) {
    return LatticePointSet(std::vector<Point>(v));
}

std::string caught(const std::function<void()>& f) {
    try {
        f();
        return "no-error";
    } catch (const InvalidInput&) {
        return "error:invalid-input";
    } catch (const Unsupported&) {
        return "error:unsupported";
    } catch (const ResourceLimit&) {
        return "error:resource-limit";
    }
}

std::vector<Entry> corpus() {
    std::vector<Entry> es;
    auto add = [&](std::string id, std::function<std::string()> f) {
        es.push_back({std::move(id), std::move(f)});
    };

    // core
    add("core.normalize.identity", [] {
        auto [A, rec] = IntegerSet::normalize({0, 3, 5});
        return A.to_string() + " shift=" + std::to_string(rec.shift) +
               " scale=" + std::to_string(rec.scale);
    });
    add("core.normalize.affine", [] {
        auto [A, rec] = IntegerSet::normalize({3, 6, 9, 15});
        return A.to_string() + " shift=" + std::to_string(rec.shift) +
               " scale=" + std::to_string(rec.scale);
    });
    add("core.normalize.degenerate", [] { return caught([] { IntegerSet::normalize({5}); }); });
    add("core.reflect.035", [] { return S({0, 3, 5}).reflect().to_string(); });
    add("core.reflect.symmetric", [] { return S({0, 1, 6, 7}).reflect().to_string(); });
    add("core.reflect.involution", [] {
        IntegerSet A = S({0, 2, 3, 7});
        return A.reflect().reflect() == A ? "identity" : "broken";
    });

    // denumerant
    add("rho.h2.n8", [] { return rho_h(S({0, 3, 5}), 2, 8).str(); });
    add("rho.n0", [] { return rho_h(S({0, 2, 3, 7}), 4, 0).str(); });
    add("rho.h3.n15", [] { return rho_h(S({0, 3, 5}), 3, 15).str(); });
    add("rho.h5.n15", [] { return rho_h(S({0, 3, 5}), 5, 15).str(); });
    add("rho_total.frobenius_gap", [] { return rho_total(S({0, 3, 5}), 7).str(); });
    add("rho_total.zero", [] { return rho_total(S({0, 4, 9}), 0).str(); });
    add("rho_total.n15", [] { return rho_total(S({0, 3, 5}), 15).str(); });
    add("rho_batch.unit", [] {
        RhoTable t = rho_batch(S({0, 1}), 3);
        std::ostringstream os;
        for (const Count& c : t.values)
            os << c.str();
        return os.str();
    });
    add("rho_batch.h0", [] {
        RhoTable t = rho_batch(S({0, 3, 5}), 0);
        return std::to_string(t.values.size()) + " values, first " + t.values[0].str();
    });
    add("rho_batch.h2.support", [] {
        RhoTable t = rho_batch(S({0, 3, 5}), 2);
        std::vector<long long> nz;
        for (std::size_t n = 0; n < t.values.size(); ++n)
            if (t.values[n] > 0)
                nz.push_back(static_cast<long long>(n));
        return list_str(nz);
    });
    add("snn.0357.n4", [] { return snn_count(S({0, 3, 5, 7}), 4).str(); });
    add("snn.three_element", [] { return snn_count(S({0, 4, 7}), 9).str(); });
    add("snn.04679.n11", [] { return snn_count(S({0, 4, 6, 7, 9}), 11).str(); });
    add("simplex.23_6", [] {
        Simplex s{{2, 3}, Rat(6)};
        return simplex_count(s).str() + " vol=" + rat_to_string(simplex_volume(s)) + " upper=" +
               rat_to_string(simplex_volume({{2, 3}, Rat(6 + 5)}));
    });
    add("simplex.origin", [] {
        Simplex s{{1, 1, 1}, Rat(0)};
        return simplex_count(s).str() + " vol=" + rat_to_string(simplex_volume(s));
    });
    add("simplex.11_2", [] {
        Simplex s{{1, 1}, Rat(2)};
        return simplex_count(s).str() + " vol=" + rat_to_string(simplex_volume(s));
    });
    add("brackets.035.n25", [] {
        auto [lo, hi] = rho_brackets(S({0, 3, 5}), 25);
        return rat_to_string(lo) + " " + rat_to_string(hi);
    });
    add("brackets.035.n10", [] {
        auto [lo, hi] = rho_brackets(S({0, 3, 5}), 10);
        return rat_to_string(lo) + " " + rat_to_string(hi);
    });
    add("brackets.023.n5", [] {
        auto [lo, hi] = rho_brackets(S({0, 2, 3}), 5);
        return rat_to_string(lo) + " " + rat_to_string(hi);
    });
    add("growth.035.k0", [] { return growth_check(S({0, 3, 5}), 15, 0) ? "true" : "false"; });
    add("growth.035.k15", [] { return growth_check(S({0, 3, 5}), 15, 15) ? "true" : "false"; });
    add("growth.023.k0", [] { return growth_check(S({0, 2, 3}), 6, 0) ? "true" : "false"; });

    // frobenius
    add("exceptional.035.t1", [] {
        ExceptionalSet e = exceptional_set(S({0, 3, 5}), 1);
        return list_str(e.members) + " Fr=" + std::to_string(e.frobenius_t);
    });
    add("exceptional.unit.t1", [] {
        ExceptionalSet e = exceptional_set(S({0, 1, 4}), 1);
        return (e.members.empty() ? std::string("empty") : list_str(e.members)) +
               " Fr=" + std::to_string(e.frobenius_t);
    });
    add("exceptional.035.t2", [] {
        ExceptionalSet e = exceptional_set(S({0, 3, 5}), 2);
        return list_str(e.members) + " Fr=" + std::to_string(e.frobenius_t);
    });
    add("frobenius.035.t1", [] { return std::to_string(frobenius_t(S({0, 3, 5}), 1)); });
    add("frobenius.035.t2", [] { return std::to_string(frobenius_t(S({0, 3, 5}), 2)); });
    add("frobenius.0167.t6", [] { return std::to_string(frobenius_t(S({0, 1, 6, 7}), 6)); });
    add("frobenius_brackets.035.t2", [] {
        auto [lo, hi] = frobenius_brackets(S({0, 3, 5}), 2);
        long long fr = frobenius_t(S({0, 3, 5}), 2);
        return (lo < fr && Rat(fr) <= hi) ? "contained" : "violated";
    });
    add("frobenius_brackets.035.t1", [] {
        auto [lo, hi] = frobenius_brackets(S({0, 3, 5}), 1);
        (void)lo;
        return Rat(frobenius_t(S({0, 3, 5}), 1)) <= hi ? "upper-ok" : "violated";
    });
    add("frobenius_brackets.0167.t6", [] {
        auto [lo, hi] = frobenius_brackets(S({0, 1, 6, 7}), 6);
        long long fr = frobenius_t(S({0, 1, 6, 7}), 6);
        return (lo < fr && Rat(fr) <= hi) ? "contained" : "violated";
    });

    // structure
    add("sumset.035.h2.t1", [] { return list_str(t_sumset(S({0, 3, 5}), 2, 1)); });
    add("sumset.h0", [] { return list_str(t_sumset(S({0, 2, 5}), 0, 1)); });
    add("sumset.0167.h5.t6.has17", [] {
        auto s = t_sumset(S({0, 1, 6, 7}), 5, 6);
        return std::binary_search(s.begin(), s.end(), 17LL) ? "contains 17" : "excludes 17";
    });
    add("rhs.035.h2.t1", [] { return list_str(structured_rhs(S({0, 3, 5}), 2, 1)); });
    add("rhs.01.h4.t1", [] { return list_str(structured_rhs(S({0, 1}), 4, 1)); });
    add("rhs.0167.h5.t6.has17", [] {
        auto s = structured_rhs(S({0, 1, 6, 7}), 5, 6);
        return std::binary_search(s.begin(), s.end(), 17LL) ? "contains 17" : "excludes 17";
    });
    add("structured.threeset", [] {
        return is_structured(S({0, 4, 7}), 9, 3).structured ? "structured" : "unstructured";
    });
    add("structured.0167.h5.t6", [] {
        StructureReport r = is_structured(S({0, 1, 6, 7}), 5, 6);
        std::ostringstream os;
        os << (r.structured ? "structured" : "unstructured");
        if (!r.witnesses.empty())
            os << " witness=" << r.witnesses.front();
        return os.str();
    });
    add("structured.0167.at_mt1", [] {
        long long cap = bound_mt1(S({0, 1, 6, 7}), 6);
        return is_structured(S({0, 1, 6, 7}), cap, 6).structured ? "structured" : "unstructured";
    });
    add("ht.035.t3", [] { return std::to_string(ht_exact(S({0, 3, 5}), 3).ht_exact); });
    add("ht.0167.t6", [] { return std::to_string(ht_exact(S({0, 1, 6, 7}), 6).ht_exact); });
    add("ht.01.t1", [] { return std::to_string(ht_exact(S({0, 1}), 1).ht_exact); });
    add("mt1.035.t1", [] { return std::to_string(bound_mt1(S({0, 3, 5}), 1)); });
    add("mt1.035.t2", [] { return std::to_string(bound_mt1(S({0, 3, 5}), 2)); });
    add("mt1.01.t1", [] { return std::to_string(bound_mt1(S({0, 1}), 1)); });
    add("mt2.0167.t6", [] {
        Mt2Bound b = bound_mt2(S({0, 1, 6, 7}), 6);
        std::ostringstream os;
        os.precision(6);
        os << std::fixed << b.c << " bound=" << b.bound;
        return os.str();
    });
    add("yz.035.t2", [] { return std::to_string(bound_yz(S({0, 3, 5}), 2)); });
    add("yz.0167.t1", [] { return std::to_string(bound_yz(S({0, 1, 6, 7}), 1)); });
    add("hpm.035.t1", [] {
        auto [p, n] = h_plus_minus(S({0, 3, 5}), 1);
        return std::to_string(p) + "," + std::to_string(n);
    });
    add("hpm.035.t2", [] {
        auto [p, n] = h_plus_minus(S({0, 3, 5}), 2);
        return std::to_string(p) + "," + std::to_string(n);
    });
    add("interval.035.t1", [] { return long_interval_check(S({0, 3, 5}), 1) ? "true" : "false"; });
    add("interval.01.t1", [] { return long_interval_check(S({0, 1}), 1) ? "true" : "false"; });
    add("interval.0167.t6", [] {
        return long_interval_check(S({0, 1, 6, 7}), 6) ? "true" : "false";
    });

    // extremal family
    add("extremal.build.722", [] {
        ExtremalInstance i = extremal_build(7, 2, 2);
        return i.set.to_string() + " t=" + i.t.str() + " g=" + std::to_string(i.g);
    });
    add("extremal.build.520", [] {
        ExtremalInstance i = extremal_build(5, 2, 0);
        return i.set.to_string() + " t=" + i.t.str() + " g=" + std::to_string(i.g);
    });
    add("extremal.build.741", [] { return caught([] { extremal_build(7, 4, 1); }); });
    add("extremal.verify.722", [] {
        ExtremalReport r = extremal_verify(extremal_build(7, 2, 2));
        return std::string(r.ok() ? "ok" : "failed") + " rho_g=" +
               rho_total(r.instance.set, r.instance.g).str() + " ht=" + std::to_string(r.ht);
    });
    add("extremal.verify.923", [] {
        ExtremalReport r = extremal_verify(extremal_build(9, 2, 3));
        return std::string(r.ok() ? "ok" : "failed") + " t=" + r.instance.t.str() +
               " g=" + std::to_string(r.instance.g);
    });
    add("extremal.asymptotic.25", [] {
        AsymptoticRecord r = asymptotic_report(25);
        return "ell=" + std::to_string(r.ell) + " R=" + std::to_string(r.R) +
               (r.ok ? " ok" : " skipped");
    });
    add("extremal.asymptotic.9", [] {
        AsymptoticRecord r = asymptotic_report(9);
        return "ell=" + std::to_string(r.ell) + " R=" + std::to_string(r.R) +
               (r.ok ? " ok" : " skipped");
    });
    add("extremal.asymptotic.4", [] { return caught([] { asymptotic_report(4); }); });

    // three-element closed forms
    add("threeset.rho.3_5_15", [] { return ThreeSet(3, 5).rho_closed(15).str(); });
    add("threeset.rho.3_5_7", [] { return ThreeSet(3, 5).rho_closed(7).str(); });
    add("threeset.rho.zero", [] { return ThreeSet(4, 7).rho_closed(0).str(); });
    add("threeset.fr.3_5_1", [] { return std::to_string(ThreeSet(3, 5).frobenius_t_closed(1)); });
    add("threeset.fr.3_5_2", [] { return std::to_string(ThreeSet(3, 5).frobenius_t_closed(2)); });
    add("threeset.fr.2_3_1", [] { return std::to_string(ThreeSet(2, 3).frobenius_t_closed(1)); });
    add("threeset.size.3_5_1", [] { return ThreeSet(3, 5).exceptional_size_closed(1).str(); });
    add("threeset.size.3_5_2", [] { return ThreeSet(3, 5).exceptional_size_closed(2).str(); });
    add("threeset.size.2_3_1", [] { return ThreeSet(2, 3).exceptional_size_closed(1).str(); });
    add("threeset.shift.3_5_2", [] {
        return ThreeSet(3, 5).shift_identity_check(2) ? "true" : "false";
    });
    add("threeset.shift.3_5_1", [] {
        return ThreeSet(3, 5).shift_identity_check(1) ? "true" : "false";
    });
    add("threeset.shift.4_7_3", [] {
        return ThreeSet(4, 7).shift_identity_check(3) ? "true" : "false";
    });
    add("threeset.structured.3_5_t2", [] {
        return ThreeSet(3, 5).always_structured_check(2, 40) ? "true" : "false";
    });
    add("threeset.structured.4_7_t3", [] {
        return ThreeSet(4, 7).always_structured_check(3, 40) ? "true" : "false";
    });
    add("threeset.structured.2_3_t1", [] {
        return ThreeSet(2, 3).always_structured_check(1, 10) ? "true" : "false";
    });

    // lattice
    add("lattice.extremal.square", [] {
        return points_str(extremal_points(L({{0, 0}, {2, 0}, {0, 2}, {1, 1}})));
    });
    add("lattice.extremal.d1", [] {
        return points_str(extremal_points(LatticePointSet::from_integer_set(S({0, 3, 5}))));
    });
    add("lattice.extremal.triangle", [] {
        return points_str(extremal_points(L({{0, 0}, {1, 0}, {0, 1}})));
    });
    add("lattice.span.even", [] {
        return lattice_span(L({{0, 0}, {2, 0}, {0, 2}, {1, 1}})).index_in_Zd().str();
    });
    add("lattice.span.full", [] {
        return lattice_span(L({{0, 0}, {1, 0}, {0, 1}})).index_in_Zd().str();
    });
    add("lattice.span.d1", [] {
        return lattice_span(LatticePointSet::from_integer_set(S({0, 3, 5}))).index_in_Zd().str();
    });
    add("lattice.rho.triangle", [] {
        return rho_h_d(L({{0, 0}, {1, 0}, {0, 1}}), 2, {1, 1}).str();
    });
    add("lattice.rho.origin", [] {
        return rho_h_d(L({{0, 0}, {2, 0}, {0, 2}, {1, 1}}), 3, {0, 0}).str();
    });
    add("lattice.rho.even22", [] {
        return rho_h_d(L({{0, 0}, {2, 0}, {0, 2}, {1, 1}}), 2, {2, 2}).str();
    });
    add("lattice.rho_total.triangle21", [] {
        return rho_total_d(L({{0, 0}, {1, 0}, {0, 1}}), {2, 1}).str();
    });
    add("lattice.rho_total.outside", [] {
        return rho_total_d(L({{0, 0}, {1, 0}, {0, 1}}), {-1, 2}).str();
    });
    add("lattice.rho_total.even22", [] {
        return rho_total_d(L({{0, 0}, {2, 0}, {0, 2}, {1, 1}}), {2, 2}).str();
    });
    add("lattice.delta.d1", [] {
        DirectionStats s = delta_Delta(LatticePointSet::from_integer_set(S({0, 3, 5})));
        return s.proj_min.str() + "," + s.proj_max.str() + " ratio=" + rat_to_string(s.ratio);
    });
    add("lattice.delta.triangle", [] {
        return rat_to_string(delta_Delta(L({{0, 0}, {1, 0}, {0, 1}})).ratio);
    });
    add("lattice.delta.ray", [] {
        return rat_to_string(delta_Delta(L({{0, 0}, {1, 0}})).ratio);
    });
    add("lattice.sumset.triangle.h3", [] {
        auto pts = t_sumset_d(L({{0, 0}, {1, 0}, {0, 1}}), 3, 1);
        return std::to_string(pts.size()) + " points, structured=" +
               (is_structured_d(L({{0, 0}, {1, 0}, {0, 1}}), 3, 1).structured ? "yes" : "no");
    });
    add("lattice.sumset.h0", [] {
        return points_str(t_sumset_d(L({{0, 0}, {2, 0}, {0, 2}, {1, 1}}), 0, 1)) + " | " +
               points_str(structured_rhs_d(L({{0, 0}, {2, 0}, {0, 2}, {1, 1}}), 0, 1));
    });
    add("lattice.sumset.even.h4", [] {
        return is_structured_d(L({{0, 0}, {2, 0}, {0, 2}, {1, 1}}), 4, 1).structured
                   ? "structured"
                   : "unstructured";
    });
    add("lattice.index.triangle.t1", [] {
        EmpiricalIndex idx = empirical_structure_index(L({{0, 0}, {1, 0}, {0, 1}}), 1, 12);
        return idx.h_star ? "h*=" + std::to_string(*idx.h_star) : "none";
    });
    add("lattice.index.even.t1", [] {
        EmpiricalIndex idx = empirical_structure_index(L({{0, 0}, {2, 0}, {0, 2}, {1, 1}}), 1, 15);
        return idx.h_star ? "h*=" + std::to_string(*idx.h_star) : "none";
    });
    add("lattice.index.triangle.t3", [] {
        EmpiricalIndex idx = empirical_structure_index(L({{0, 0}, {1, 0}, {0, 1}}), 3, 15);
        return idx.h_star ? "h*=" + std::to_string(*idx.h_star) : "none";
    });
    add("lattice.zd_bound.d1", [] {
        IntegerSet A = S({0, 3, 5});
        long long t = 1;
        Rat phiA = Rat(frobenius_t(A, t) + A.m(), A.m());
        Rat phiB = Rat(frobenius_t(A.reflect(), t) + A.m(), A.m());
        LatticePointSet P = LatticePointSet::from_integer_set(A);
        long long b = zd_bound_formula(P, t, {{{0}, phiA}, {{5}, phiB}});
        return std::to_string(b);
    });
    add("lattice.zd_bound.triangle", [] {
        long long b = zd_bound_formula(L({{0, 0}, {1, 0}, {0, 1}}), 1,
                                       {{{0, 0}, Rat(1)}, {{1, 0}, Rat(1)}, {{0, 1}, Rat(1)}});
        return std::to_string(b);
    });
    add("lattice.zd_bound.missing_phi", [] {
        return caught([] {
            zd_bound_formula(L({{0, 0}, {1, 0}, {0, 1}}), 1, {{{0, 0}, Rat(1)}});
        });
    });
    add("lattice.caratheodory.triangle", [] {
        return caratheodory_cover_check(L({{0, 0}, {1, 0}, {0, 1}}), Rat(2), 10000) ? "true"
                                                                                    : "false";
    });
    add("lattice.caratheodory.even", [] {
        return caratheodory_cover_check(L({{0, 0}, {2, 0}, {0, 2}, {1, 1}}), Rat(3), 10000)
                   ? "true"
                   : "false";
    });
    add("lattice.caratheodory.pentagon", [] {
        return caratheodory_cover_check(
                   L({{0, 0}, {2, 0}, {3, 2}, {1, 4}, {-1, 2}}), Rat(2), 10000)
                   ? "true"
                   : "false";
    });
    add("lattice.poly.triangle", [] {
        PolyCheckRecord r = hull_size_poly_check(L({{0, 0}, {1, 0}, {0, 1}}), 1, 0, 10);
        std::ostringstream os;
        os << (r.tail_start ? "tail=" + std::to_string(*r.tail_start) : "inconclusive");
        os << " coeffs=";
        for (std::size_t i = 0; i < r.coefficients.size(); ++i)
            os << (i ? "," : "") << rat_to_string(r.coefficients[i]);
        return os.str();
    });
    add("lattice.poly.d1", [] {
        PolyCheckRecord r =
            hull_size_poly_check(LatticePointSet::from_integer_set(S({0, 3, 5})), 1, 0, 10);
        return r.tail_start ? "tail=" + std::to_string(*r.tail_start) : "inconclusive";
    });
    add("lattice.poly.short_range", [] {
        PolyCheckRecord r = hull_size_poly_check(L({{0, 0}, {1, 0}, {0, 1}}), 1, 0, 2);
        return r.tail_start ? "tail found" : "inconclusive";
    });

    return es;
}

} // namespace

std::string repro_corpus() {
    std::ostringstream os;
    for (const Entry& e : corpus()) {
        std::string result;
        try {
            result = e.run();
        } catch (const std::exception& ex) {
            result = std::string("unexpected-exception: ") + ex.what();
        }
        os << e.id << " = " << result << '\n';
    }
    return os.str();
}

bool repro_check(const std::string& golden_path, std::ostream& diag) {
    std::ifstream in(golden_path);
    if (!in)
        throw InvalidInput("repro: cannot open golden file '" + golden_path + "'");
    std::ostringstream want;
    want << in.rdbuf();
    std::string got = repro_corpus();
    if (got == want.str())
        return true;
    std::istringstream gs(got), ws(want.str());
    std::string gl, wl;
    long long line = 0;
    while (true) {
        bool g_ok = static_cast<bool>(std::getline(gs, gl));
        bool w_ok = static_cast<bool>(std::getline(ws, wl));
        ++line;
        if (!g_ok && !w_ok)
            break;
        if (gl != wl)
            diag << "line " << line << ":\n  golden: " << (w_ok ? wl : "<eof>")
                 << "\n  got:    " << (g_ok ? gl : "<eof>") << "\n";
        if (!g_ok || !w_ok)
            break;
    }
    return false;
}

void repro_write(const std::string& golden_path) {
    std::ofstream out(golden_path);
    if (!out)
        throw InvalidInput("repro: cannot write golden file '" + golden_path + "'");
    out << repro_corpus();
}

} // namespace sumstruct
