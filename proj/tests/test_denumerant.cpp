#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "sumstruct/config.hpp"
#include "sumstruct/denumerant.hpp"
#include "sumstruct/errors.hpp"

#include <random>

using namespace sumstruct;

namespace {
IntegerSet S(std::initializer_list<long long> v) { return IntegerSet(std::vector<long long>(v)); }
} // namespace

TEST_CASE("rho_h worked values") {
    CHECK(rho_h(S({0, 3, 5}), 2, 8) == 1);
    CHECK(rho_h(S({0, 3, 5}), 7, 0) == 1);
    CHECK(rho_h(S({0, 9, 11}), 0, 0) == 1);
    CHECK(rho_h(S({0, 3, 5}), 3, 15) == 1);
    CHECK(rho_h(S({0, 3, 5}), 5, 15) == 2);
    CHECK(rho_h(S({0, 3, 5}), 2, 11) == 0); // out of range
    CHECK(rho_h(S({0, 3, 5}), 2, -3) == 0);
}

TEST_CASE("rho_h equals the brute-force oracle") {
    oracle::SetGen gen(1001);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 30; ++i) {
        IntegerSet A = gen.next(12, 1, 3);
        std::uniform_int_distribution<long long> hd(0, 7);
        long long h = hd(rng);
        for (long long n = 0; n <= h * A.m(); ++n)
            CHECK(rho_h(A, h, n) == oracle::brute_rho_h(A, h, n));
    }
}

TEST_CASE("rho_total worked values") {
    CHECK(rho_total(S({0, 3, 5}), 7) == 0); // the Sylvester gap 3*5-3-5
    CHECK(rho_total(S({0, 4, 9, 11}), 0) == 1);
    CHECK(rho_total(S({0, 3, 5}), 15) == 2);
}

TEST_CASE("rho_total equals the oracle and stabilizes at ceil(n/a1)") {
    oracle::SetGen gen(1002);
    std::mt19937_64 rng(6);
    for (int i = 0; i < 25; ++i) {
        IntegerSet A = gen.next(14, 1, 3);
        std::uniform_int_distribution<long long> nd(0, 40);
        long long n = nd(rng);
        Count expected = oracle::brute_rho_total(A, n);
        CHECK(rho_total(A, n) == expected);
        long long cap = (n + A.a1() - 1) / A.a1();
        CHECK(rho_h(A, cap, n) == expected);
        CHECK(rho_h(A, cap + 3, n) == expected);
    }
}

TEST_CASE("shift monotonicity: rho_h(A,h,n) <= rho_h(A,h+1,n+a)") {
    oracle::SetGen gen(1003);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20; ++i) {
        IntegerSet A = gen.next(10, 1, 3);
        std::uniform_int_distribution<long long> hd(0, 6);
        long long h = hd(rng);
        for (long long n = 0; n <= h * A.m(); ++n)
            for (long long a : A.elements())
                CHECK(rho_h(A, h, n) <= rho_h(A, h + 1, n + a));
    }
}

TEST_CASE("reflection duality: rho_h(A,h,n) = rho_h(m-A,h,hm-n)") {
    oracle::SetGen gen(1004);
    for (int i = 0; i < 15; ++i) {
        IntegerSet A = gen.next(12, 1, 3);
        IntegerSet R = A.reflect();
        long long h = 5;
        for (long long n = 0; n <= h * A.m(); ++n)
            CHECK(rho_h(A, h, n) == rho_h(R, h, h * A.m() - n));
    }
}

TEST_CASE("rho_batch worked tables") {
    RhoTable unit = rho_batch(S({0, 1}), 3);
    REQUIRE(unit.values.size() == 4);
    for (const Count& c : unit.values)
        CHECK(c == 1);

    RhoTable empty = rho_batch(S({0, 3, 5}), 0);
    REQUIRE(empty.values.size() == 1);
    CHECK(empty.values[0] == 1);

    RhoTable pairs = rho_batch(S({0, 3, 5}), 2);
    std::vector<long long> support;
    for (std::size_t n = 0; n < pairs.values.size(); ++n)
        if (pairs.values[n] > 0)
            support.push_back(static_cast<long long>(n));
    CHECK(support == std::vector<long long>{0, 3, 5, 6, 8, 10});
}

TEST_CASE("rho_batch invariants and serialization") {
    RhoTable t = rho_batch(S({0, 2, 7}), 4);
    CHECK(t.values[0] == 1);
    CHECK(t.values.back() >= 1);
    for (std::size_t n = 0; n < t.values.size(); ++n)
        CHECK(t.values[n] == rho_h(t.set, t.h, static_cast<long long>(n)));
    CHECK(t.to_csv().substr(0, 12) == "n,count\n0,1\n");
    auto j = t.to_json();
    CHECK(j["counts"].size() == t.values.size());
    CHECK(j["counts"][0] == "1");
}

TEST_CASE("rho_batch holds the resource cap") {
    RunConfig saved = config();
    config().max_hm = 100;
    CHECK_THROWS_AS(rho_batch(S({0, 3, 50}), 3), ResourceLimit);
    config() = saved;
}

TEST_CASE("snn_count worked values") {
    CHECK(snn_count(S({0, 3, 5, 7}), 4) == 3);
    CHECK(snn_count(S({0, 4, 7}), 9) == 1);  // three-element set: a1^0
    CHECK(snn_count(S({0, 4, 6, 7, 9}), 11) == 16);
}

TEST_CASE("snn_count is a1^(ell-1), constant in n") {
    oracle::SetGen gen(1005);
    for (int i = 0; i < 25; ++i) {
        IntegerSet A = gen.next(12, 1, 3);
        Count expected = boost::multiprecision::pow(Count(A.a1()),
                                                    static_cast<unsigned>(A.ell() - 1));
        for (long long n = 0; n < A.a1(); ++n)
            CHECK(snn_count(A, n) == expected);
    }
}

TEST_CASE("simplex worked values") {
    Simplex s1{{2, 3}, Rat(6)};
    CHECK(simplex_count(s1) == 7);
    CHECK(simplex_volume(s1) == Rat(3));
    CHECK(simplex_volume({{2, 3}, Rat(11)}) == Rat(121, 12));

    Simplex origin{{1, 1, 1, 1}, Rat(0)};
    CHECK(simplex_count(origin) == 1);
    CHECK(simplex_volume(origin) == Rat(0));

    Simplex s2{{1, 1}, Rat(2)};
    CHECK(simplex_count(s2) == 6);
    CHECK(simplex_volume(s2) == Rat(2));

    CHECK_THROWS_AS(simplex_count({{2, 0}, Rat(5)}), InvalidInput);
    CHECK_THROWS_AS(simplex_volume({{0}, Rat(1)}), InvalidInput);
}

TEST_CASE("rho_brackets worked values") {
    auto [lo1, hi1] = rho_brackets(S({0, 3, 5}), 25);
    CHECK(lo1 == Rat(1));
    CHECK(hi1 == Rat(31, 15));
    CHECK(lo1 <= Rat(rho_total(S({0, 3, 5}), 25)));
    CHECK(Rat(rho_total(S({0, 3, 5}), 25)) <= hi1);

    auto [lo2, hi2] = rho_brackets(S({0, 3, 5}), 10);
    CHECK(lo2 == Rat(0));
    CHECK(hi2 == Rat(16, 15));

    auto [lo3, hi3] = rho_brackets(S({0, 2, 3}), 5);
    CHECK(lo3 == Rat(1, 3));
    CHECK(hi3 == Rat(3, 2));

    CHECK_THROWS_AS(rho_brackets(S({0, 3, 5}), 9), InvalidInput); // below threshold
}

// The lower bracket is sound.  The upper bracket is returned exactly as the
// source formula states it, but that form overshoots reality at e.g.
// ({0,3,5}, n=15) where rho = 2 > 21/15; the derivable bound replaces
// (n+1+S) by (n+a1*S), and that corrected form is what we assert here.
TEST_CASE("rho_brackets: sound lower, corrected upper") {
    oracle::SetGen gen(1006);
    std::mt19937_64 rng(8);
    for (int i = 0; i < 20; ++i) {
        IntegerSet A = gen.next(12, 1, 3);
        long long S = 0;
        for (std::size_t j = 2; j < A.size(); ++j)
            S += A.element(j);
        long long base = (A.a1() - 1) * S;
        std::uniform_int_distribution<long long> nd(base, base + 30);
        long long n = nd(rng);
        auto [lo, hi] = rho_brackets(A, n);
        (void)hi;
        Rat rho = Rat(rho_total(A, n));
        CHECK(lo <= rho);
        Count denom = factorial(A.ell());
        for (std::size_t j = 1; j < A.size(); ++j)
            denom *= A.element(j);
        Rat corrected = rat_pow(Rat(n + A.a1() * S), static_cast<unsigned>(A.ell())) / Rat(denom);
        CHECK(rho <= corrected);
    }
    // the stated upper bound is genuinely exceeded here
    auto [lo15, hi15] = rho_brackets(IntegerSet({0, 3, 5}), 15);
    (void)lo15;
    CHECK(Rat(rho_total(IntegerSet({0, 3, 5}), 15)) > hi15);
}

TEST_CASE("growth_check worked values") {
    CHECK(growth_check(S({0, 3, 5}), 15, 0));
    CHECK(growth_check(S({0, 2, 3}), 6, 0));
    // the strict-factor claim fails here: rho(46) = 3 < (109/64)*rho(15),
    // by direct enumeration; the checker reports the computed truth
    CHECK_FALSE(growth_check(S({0, 3, 5}), 15, 15));
    CHECK_THROWS_AS(growth_check(S({0, 3, 5}), 14, 0), InvalidInput);
}

TEST_CASE("growth_check: k = 0 monotonicity always holds") {
    // the shift P = a1*S + 1 exceeds Fr(A), hence is representable, so
    // adding it never loses representations
    oracle::SetGen gen(1007);
    std::mt19937_64 rng(9);
    for (int i = 0; i < 12; ++i) {
        IntegerSet A = gen.next(10, 1, 2);
        long long S = 0;
        for (std::size_t j = 2; j < A.size(); ++j)
            S += A.element(j);
        long long base = A.a1() * S;
        std::uniform_int_distribution<long long> nd(base, base + 10);
        CHECK(growth_check(A, nd(rng), 0));
    }
}

TEST_CASE("growth_check agrees with its inequality computed from the oracle") {
    oracle::SetGen gen(1008);
    std::mt19937_64 rng(10);
    for (int i = 0; i < 10; ++i) {
        IntegerSet A = gen.next(8, 1, 2);
        long long S = 0;
        for (std::size_t j = 2; j < A.size(); ++j)
            S += A.element(j);
        long long n = A.a1() * S + (i % 4);
        long long k = i % 5;
        long long P = A.a1() * S + 1;
        Rat factor = 1 + Rat(k * A.ell()) / (Rat(n + 1) + Rat(P, A.a1()));
        bool expected =
            Rat(oracle::brute_rho_total(A, n + P + k)) >= factor * Rat(oracle::brute_rho_total(A, n));
        CHECK(growth_check(A, n, k) == expected);
    }
}

TEST_CASE("wide tables: cells beyond uint64, checked by conjugation") {
    // partitions of 1200 into at most 140 parts each <= 20 equal, by
    // conjugation, partitions into at most 20 parts each <= 140; both
    // tables overflow uint64 cells and rebuild wide
    std::vector<long long> small, large;
    for (long long v = 0; v <= 20; ++v)
        small.push_back(v);
    for (long long v = 0; v <= 140; ++v)
        large.push_back(v);
    RhoEngine a(IntegerSet(small), 140, 1300);
    RhoEngine b(IntegerSet(large), 20, 1300);
    CHECK(a.wide());
    Count lhs = a.cumulative(140, 1200);
    Count rhs = b.cumulative(20, 1200);
    CHECK(lhs == rhs);
    CHECK(lhs == Count("17498202225826087301724"));
}

TEST_CASE("uint64 overflow falls back to big integers") {
    // {0,1,2}: counts of n with many parts grow combinatorially; force a
    // tiny overflow threshold is not possible from outside, so use a set
    // and budget large enough to overflow 64 bits: C(400+2,2) ~ 8e4 per
    // cell is too small, so check wide() wiring on a table known to stay
    // narrow and the big path through rho_total on a large value instead.
    IntegerSet A = S({0, 1, 2, 3});
    Count v = rho_total(A, 2000); // ~2000^3/36 ~ 2e8, still narrow
    CHECK(v > 0);
    RhoEngine engine = RhoEngine::for_totals(A, 300);
    CHECK_FALSE(engine.wide());
    // cross-check one value against the bracket bounds
    auto [lo, hi] = rho_brackets(A, 2000);
    CHECK(lo <= Rat(v));
    CHECK(Rat(v) <= hi);
}
