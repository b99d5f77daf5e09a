// Acceptance suite: one line per criterion, PASS/FAIL, exact checks only.
// Exit status is the number of failed criteria.

#include "oracle.hpp"
#include "sumstruct/config.hpp"
#include "sumstruct/denumerant.hpp"
#include "sumstruct/extremal.hpp"
#include "sumstruct/frobenius.hpp"
#include "sumstruct/lattice.hpp"
#include "sumstruct/structure.hpp"
#include "sumstruct/threeset.hpp"

#include <chrono>
#include <cstdio>
#include <numeric>
#include <random>
#include <set>

using namespace sumstruct;

namespace {

struct Criterion {
    int id;
    const char* name;
    bool ok = true;
    long long cases = 0;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        ++cases;
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

std::vector<Criterion> results;

void report(Criterion& c, double seconds) {
    std::printf("%s  %2d. %-52s (%lld checks, %.1fs)%s%s\n", c.ok ? "PASS" : "FAIL", c.id, c.name,
                c.cases, seconds, c.detail.empty() ? "" : " -- ", c.detail.c_str());
    results.push_back(c);
}

template <class F>
void run(int id, const char* name, F&& body) {
    Criterion c{id, name};
    auto start = std::chrono::steady_clock::now();
    body(c);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(c, secs);
}

// test-side volume oracle: iterated exact integration of the slab volume,
// independent of the closed-form product
Rat volume_by_integration(const std::vector<long long>& weights, const Rat& budget) {
    std::vector<Rat> poly{Rat(1)}; // polynomial in the remaining budget
    for (long long w : weights) {
        // integrate: (1/w) * antiderivative, zero constant term
        std::vector<Rat> next(poly.size() + 1, Rat(0));
        for (std::size_t i = 0; i < poly.size(); ++i)
            next[i + 1] = poly[i] / Rat(static_cast<long long>(i + 1)) / w;
        poly = std::move(next);
    }
    Rat value = 0, power = 1;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        value += poly[i] * power;
        power *= budget;
    }
    return value;
}

} // namespace

int main() {
    // 1. closed forms vs the scanning path, exact equality on the full grid
    run(1, "three-element closed form equals rho_total", [](Criterion& c) {
        for (long long m = 3; m <= 30; ++m)
            for (long long a = 2; a < m; ++a) {
                if (std::gcd(a, m) != 1)
                    continue;
                ThreeSet T(a, m);
                IntegerSet A = T.as_set();
                RhoEngine engine = RhoEngine::for_totals(A, 3 * a * m);
                std::vector<Count> totals = engine.total_row();
                for (long long n = 0; n <= 3 * a * m; ++n)
                    c.expect(T.rho_closed(n) == totals[n],
                             "mismatch at a=" + std::to_string(a) + " m=" + std::to_string(m) +
                                 " n=" + std::to_string(n));
                // spot-check the public single-value path as well
                c.expect(T.rho_closed(a * m) == rho_total(A, a * m), "rho_total path diverged");
            }
    });

    // 2. Frobenius-t closed form and exceptional-set size on the grid
    run(2, "Frobenius-t and |E_t| closed forms equal the scan", [](Criterion& c) {
        for (long long m = 2; m <= 20; ++m)
            for (long long a = 1; a < m; ++a) {
                if (std::gcd(a, m) != 1)
                    continue;
                ThreeSet T(a, m);
                IntegerSet A = T.as_set();
                for (long long t = 1; t <= 4; ++t) {
                    ExceptionalSet e = exceptional_set(A, t);
                    c.expect(T.frobenius_t_closed(t) == e.frobenius_t,
                             "Fr mismatch at a=" + std::to_string(a) + " m=" + std::to_string(m) +
                                 " t=" + std::to_string(t));
                    c.expect(T.exceptional_size_closed(t) == Count(e.members.size()),
                             "|E_t| mismatch at a=" + std::to_string(a) +
                                 " m=" + std::to_string(m) + " t=" + std::to_string(t));
                }
            }
    });

    // 3. three-element sets are structured at every h
    run(3, "|A|=3 structured for all h in [1,60], t in {1,2,3,5}", [](Criterion& c) {
        for (long long m = 2; m <= 15; ++m)
            for (long long a = 1; a < m; ++a) {
                if (std::gcd(a, m) != 1)
                    continue;
                IntegerSet A({0, a, m});
                for (long long t : {1LL, 2LL, 3LL, 5LL}) {
                    ExceptionalSet ea = exceptional_set(A, t);
                    ExceptionalSet eb = exceptional_set(A.reflect(), t);
                    auto failing = detail::unstructured_h_list(A, t, 60, ea, eb);
                    c.expect(failing.empty(), "unstructured at a=" + std::to_string(a) +
                                                  " m=" + std::to_string(m) +
                                                  " t=" + std::to_string(t));
                }
            }
    });

    // 4. analytic Frobenius brackets, conservative rounding, zero violations
    run(4, "Frobenius bracket encloses Fr_t on 100 random sets", [](Criterion& c) {
        oracle::SetGen gen(40404);
        std::mt19937_64 rng(11);
        for (int i = 0; i < 100; ++i) {
            IntegerSet A = gen.next(30, 1, 3);
            std::uniform_int_distribution<long long> td(2, 9);
            long long t = td(rng);
            auto [lo, hi] = frobenius_brackets(A, t);
            long long fr = frobenius_t(A, t);
            c.expect(lo < fr && Rat(fr) <= hi,
                     "violation at " + A.to_string() + " t=" + std::to_string(t));
            auto [lo1, hi1] = frobenius_brackets(A, 1);
            (void)lo1;
            c.expect(Rat(frobenius_t(A, 1)) <= hi1,
                     "t=1 upper violation at " + A.to_string());
        }
    });

    // 5. residue-class count is a1^(ell-1)
    run(5, "S(n) counts equal a1^(ell-1) on 50 random sets", [](Criterion& c) {
        oracle::SetGen gen(50505);
        for (int i = 0; i < 50; ++i) {
            IntegerSet A = gen.next(30, 1, 3);
            Count expected =
                boost::multiprecision::pow(Count(A.a1()), static_cast<unsigned>(A.ell() - 1));
            for (long long n = 0; n < A.a1(); ++n)
                c.expect(snn_count(A, n) == expected, "mismatch at " + A.to_string());
        }
    });

    // 6. stabilization and shift monotonicity
    run(6, "stabilization and shift monotonicity on 50 triples", [](Criterion& c) {
        oracle::SetGen gen(60606);
        std::mt19937_64 rng(13);
        for (int i = 0; i < 50; ++i) {
            IntegerSet A = gen.next(20, 1, 3);
            std::uniform_int_distribution<long long> nd(0, 60);
            std::uniform_int_distribution<long long> hd(0, 8);
            long long n = nd(rng), h = hd(rng);
            long long cap = (n + A.a1() - 1) / A.a1();
            Count total = rho_total(A, n);
            c.expect(rho_h(A, cap, n) == total, "stabilization failed at " + A.to_string());
            c.expect(rho_h(A, cap + 1 + h % 3, n) == total,
                     "post-cap value moved at " + A.to_string());
            for (long long a : A.elements())
                c.expect(rho_h(A, h, n) <= rho_h(A, h + 1, n + a),
                         "shift monotonicity failed at " + A.to_string());
        }
    });

    // 7. the extremal family instances
    run(7, "extremal family (7,2,2), (9,2,3), (11,3,2)", [](Criterion& c) {
        struct Want {
            long long m, ell, R, g;
        };
        for (Want w : {Want{7, 2, 2, 17}, Want{9, 2, 3, 31}, Want{11, 3, 2, 26}}) {
            ExtremalInstance inst = extremal_build(w.m, w.ell, w.R);
            c.expect(inst.g == w.g, "wrong g");
            c.expect(rho_total(inst.set, inst.g) == inst.t, "rho(g) != t");
            long long t = checked_ll(inst.t, "t");
            c.expect(!is_structured(inst.set, 2 * w.R + 1, t).structured,
                     "structured at 2R+1 for m=" + std::to_string(w.m));
            HtResult ht = ht_exact(inst.set, t);
            c.expect(ht.ht_exact >= w.g, "ht below g for m=" + std::to_string(w.m));
            c.expect(ht.ht_exact <= ht.cap, "ht above the bound");
        }
    });

    // 8. threshold bound soundness plus the window past the cap
    run(8, "ht_exact <= floor-sum bound; window past cap structured", [](Criterion& c) {
        oracle::SetGen gen(80808);
        std::mt19937_64 rng(17);
        for (int i = 0; i < 50; ++i) {
            IntegerSet A = gen.next(15, 1, 3);
            std::uniform_int_distribution<long long> td(1, 4);
            long long t = td(rng);
            ExceptionalSet ea = exceptional_set(A, t);
            ExceptionalSet eb = exceptional_set(A.reflect(), t);
            long long cap = (ea.frobenius_t + A.m()) / A.a1() +
                            (eb.frobenius_t + A.m()) / (A.m() - A.a_ell());
            auto failing = detail::unstructured_h_list(A, t, cap + 2 * A.m(), ea, eb);
            long long ht = 1;
            for (long long h : failing)
                if (h <= cap)
                    ht = h + 1;
            c.expect(ht <= cap, "threshold above the bound at " + A.to_string());
            for (long long h : failing)
                c.expect(h < cap, "unstructured h in [cap, cap+2m] at " + A.to_string() +
                                      " t=" + std::to_string(t));
        }
    });

    // 9. a run of at least m consecutive integers at the bound
    run(9, "m-length interval inside the sumset at h = bound", [](Criterion& c) {
        oracle::SetGen gen(80808); // same sample as criterion 8
        std::mt19937_64 rng(17);
        for (int i = 0; i < 50; ++i) {
            IntegerSet A = gen.next(15, 1, 3);
            std::uniform_int_distribution<long long> td(1, 4);
            long long t = td(rng);
            c.expect(long_interval_check(A, t), "no long interval at " + A.to_string());
        }
    });

    // 10. simplex lattice-point sandwich and the volume formula
    run(10, "simplex sandwich and volume formula on 100 instances", [](Criterion& c) {
        std::mt19937_64 rng(1010);
        for (int i = 0; i < 100; ++i) {
            std::uniform_int_distribution<int> dd(1, 3);
            int d = dd(rng);
            std::vector<long long> weights(d);
            std::uniform_int_distribution<long long> wd(1, 9);
            for (auto& w : weights)
                w = wd(rng);
            std::uniform_int_distribution<long long> rd(0, 120);
            Rat budget = Rat(rd(rng), 2); // halves cover rational budgets too
            Simplex s{weights, budget};
            Count points = simplex_count(s);
            Rat vol = simplex_volume(s);
            long long wsum = std::accumulate(weights.begin(), weights.end(), 0LL);
            Rat vol_upper = simplex_volume({weights, budget + wsum});
            c.expect(vol <= Rat(points) && Rat(points) <= vol_upper, "sandwich violated");
            c.expect(vol == volume_by_integration(weights, budget),
                     "volume formula != iterated integration");
        }
    });

    // 11. the plane examples: empirical threshold then equality up to 20,
    // span index, and the d=1 reduction
    run(11, "Z^2 structure scan, span index, d=1 reduction", [](Criterion& c) {
        LatticePointSet tri({{0, 0}, {1, 0}, {0, 1}});
        LatticePointSet even({{0, 0}, {2, 0}, {0, 2}, {1, 1}});
        for (const LatticePointSet& A : {tri, even})
            for (long long t : {1LL, 2LL, 3LL}) {
                EmpiricalIndex idx = empirical_structure_index(A, t, 20);
                c.expect(idx.h_star.has_value(), "no empirical threshold found");
                if (idx.h_star)
                    for (long long h = *idx.h_star; h <= 20; ++h)
                        c.expect(is_structured_d(A, h, t).structured,
                                 "mismatch past h* at t=" + std::to_string(t));
            }
        c.expect(lattice_span(even).index_in_Zd() == 2, "span index is not 2");

        IntegerSet A035({0, 3, 5});
        LatticePointSet P = LatticePointSet::from_integer_set(A035);
        for (long long h : {2LL, 5LL, 8LL})
            for (long long t : {1LL, 2LL}) {
                std::vector<long long> flat;
                for (const Point& p : t_sumset_d(P, h, t))
                    flat.push_back(p[0]);
                c.expect(flat == t_sumset(A035, h, t), "d=1 sumset reduction failed");
                flat.clear();
                for (const Point& p : structured_rhs_d(P, h, t))
                    flat.push_back(p[0]);
                c.expect(flat == structured_rhs(A035, h, t), "d=1 rhs reduction failed");
            }
        DirectionStats stats = delta_Delta(P);
        c.expect(stats.proj_min == 3 && stats.proj_max == 5, "d=1 projections wrong");
        c.expect(extremal_points(P) == std::vector<Point>{{0}, {5}}, "d=1 vertices wrong");
    });

    // 12. polynomial tail of the structured-size sequence
    run(12, "third differences vanish on a tail for both Z^2 sets", [](Criterion& c) {
        LatticePointSet tri({{0, 0}, {1, 0}, {0, 1}});
        LatticePointSet even({{0, 0}, {2, 0}, {0, 2}, {1, 1}});
        for (const LatticePointSet& A : {tri, even}) {
            PolyCheckRecord rec = hull_size_poly_check(A, 1, 0, 14);
            c.expect(rec.tail_start.has_value(), "no vanishing tail");
            if (rec.tail_start)
                c.expect(*rec.tail_start + 3 <= 14, "tail empty");
        }
    });

    int failed = 0;
    for (const Criterion& c : results)
        failed += c.ok ? 0 : 1;
    std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failed,
                results.size());
    return failed;
}
