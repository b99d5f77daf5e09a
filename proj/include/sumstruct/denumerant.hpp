#pragma once

#include "sumstruct/core.hpp"
#include "sumstruct/numeric.hpp"

#include <json.hpp>

#include <cstdint>
#include <vector>

namespace sumstruct {

// Exact-parts representation table for a normalized set.
//
// row j holds, for n in [0, min(j*m, ncap)], the number of tuples
// (k_1..k_{ell+1}) >= 0 over the nonzero elements with sum k_i = j and
// sum k_i * a_i = n.  Since 0 absorbs slack, the count with at most h
// parts is the column sum of rows 0..h.
//
// Cells are uint64 with checked additions; the whole table is rebuilt
// with big integers if any addition overflows.
class RhoEngine {
  public:
    RhoEngine(const IntegerSet& A, long long hmax, long long ncap);

    // hmax = ncap / a1 suffices for unbounded-parts counts: a tuple for n
    // has at most n / a1 parts, so larger tables add nothing.
    static RhoEngine for_totals(const IntegerSet& A, long long ncap);

    const IntegerSet& set() const { return set_; }
    long long hmax() const { return hmax_; }
    long long ncap() const { return ncap_; }
    bool wide() const { return wide_; }

    Count exact(long long j, long long n) const;      // exactly j parts
    Count cumulative(long long h, long long n) const; // at most h parts

    // unbounded-parts counts for every n <= ncap (column sums of all rows)
    std::vector<Count> total_row() const;

  private:
    long long row_len(long long j) const;
    void fill_narrow();
    void fill_wide();

    IntegerSet set_;
    long long hmax_;
    long long ncap_;
    bool wide_ = false;
    std::vector<std::vector<std::uint64_t>> rows64_;
    std::vector<std::vector<Count>> rows_big_;

    friend class RhoScanner;
};

// Streaming cumulative view over h = 0, 1, 2, ...; advance() folds in the
// next exact row.  Orders of magnitude cheaper than calling cumulative()
// per h inside a scan.
class RhoScanner {
  public:
    explicit RhoScanner(const RhoEngine& engine); // starts at h = 0
    long long h() const { return h_; }
    void advance();
    Count at(long long n) const;
    bool at_least(long long n, const Count& threshold) const;

  private:
    void upgrade();

    const RhoEngine& engine_;
    long long h_ = 0;
    bool wide_;
    std::vector<std::uint64_t> cum64_;
    std::vector<Count> cum_big_;
};

// number of tuples (k_1..k_{ell+1}) >= 0 with sum k_i a_i = n, sum k_i <= h
Count rho_h(const IntegerSet& A, long long h, long long n);

// unbounded-parts count; computed at the stabilization cap h = ceil(n/a1),
// beyond which no representation gains new parts
Count rho_total(const IntegerSet& A, long long n);

struct RhoTable {
    IntegerSet set;
    long long h;
    std::vector<Count> values; // index n in [0, h*m]

    std::string to_csv() const;
    nlohmann::ordered_json to_json() const;
};

RhoTable rho_batch(const IntegerSet& A, long long h);

// brute-force cardinality of {(mu_2..mu_{ell+1}) in [0,a1)^ell :
// sum a_j mu_j == n (mod a1)}; equals a1^(ell-1) for every n
Count snn_count(const IntegerSet& A, long long n);

// {x >= 0 : x_1 N_1 + ... + x_d N_d <= R}
struct Simplex {
    std::vector<long long> weights; // N_1..N_d, nonnegative
    Rat budget;                     // R >= 0
};

Count simplex_count(const Simplex& s); // lattice points, exact
Rat simplex_volume(const Simplex& s);  // R^d / (d! * N_1...N_d)

// two-sided bounds on rho_total(A, n), valid for
// n >= (a1 - 1) * (a_2 + ... + a_{ell+1})
std::pair<Rat, Rat> rho_brackets(const IntegerSet& A, long long n);

// checks rho_A(N) >= (1 + k*ell/(n + 1 + P/a1)) * rho_A(n) at
// N = n + P + k with P = a1*(a_2+...+a_{ell+1}) + 1; needs n >= a1*sum
bool growth_check(const IntegerSet& A, long long n, long long k);

} // namespace sumstruct
