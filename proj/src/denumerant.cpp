#include "sumstruct/denumerant.hpp"

#include "sumstruct/config.hpp"
#include "sumstruct/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace sumstruct {

namespace {

struct U64Overflow {};

inline void add_checked(std::uint64_t& x, std::uint64_t y) {
    if (__builtin_add_overflow(x, y, &x))
        throw U64Overflow{};
}

} // namespace

RhoEngine::RhoEngine(const IntegerSet& A, long long hmax, long long ncap)
    : set_(A), hmax_(hmax), ncap_(ncap) {
    if (hmax_ < 0 || ncap_ < 0)
        throw InvalidInput("RhoEngine: negative extent");
    const long long cap = config().max_table_entries;
    if (hmax_ >= cap || ncap_ >= cap)
        throw ResourceLimit("parts table extent exceeds the cell cap");
    long long entries = 0;
    for (long long j = 0; j <= hmax_; ++j) {
        entries += row_len(j) + 1;
        if (entries > cap)
            throw ResourceLimit("parts table would need more than " + std::to_string(cap) +
                                " cells");
    }
    try {
        fill_narrow();
    } catch (U64Overflow&) {
        wide_ = true;
        rows64_.clear();
        rows64_.shrink_to_fit();
        fill_wide();
    }
}

RhoEngine RhoEngine::for_totals(const IntegerSet& A, long long ncap) {
    if (ncap < 0)
        ncap = 0;
    return RhoEngine(A, ncap / A.a1(), ncap);
}

long long RhoEngine::row_len(long long j) const {
    if (j > ncap_ / set_.m()) // j*m may not fit in 64 bits
        return ncap_;
    return std::min(j * set_.m(), ncap_);
}

void RhoEngine::fill_narrow() {
    rows64_.assign(hmax_ + 1, {});
    for (long long j = 0; j <= hmax_; ++j)
        rows64_[j].assign(row_len(j) + 1, 0);
    rows64_[0][0] = 1;
    for (std::size_t e = 1; e < set_.size(); ++e) {
        long long a = set_.element(e);
        for (long long j = 1; j <= hmax_; ++j) {
            auto& cur = rows64_[j];
            const auto& prev = rows64_[j - 1];
            long long top = std::min(row_len(j), row_len(j - 1) + a);
            for (long long n = a; n <= top; ++n)
                add_checked(cur[n], prev[n - a]);
        }
    }
}

void RhoEngine::fill_wide() {
    rows_big_.assign(hmax_ + 1, {});
    for (long long j = 0; j <= hmax_; ++j)
        rows_big_[j].assign(row_len(j) + 1, Count(0));
    rows_big_[0][0] = 1;
    for (std::size_t e = 1; e < set_.size(); ++e) {
        long long a = set_.element(e);
        for (long long j = 1; j <= hmax_; ++j) {
            auto& cur = rows_big_[j];
            const auto& prev = rows_big_[j - 1];
            long long top = std::min(row_len(j), row_len(j - 1) + a);
            for (long long n = a; n <= top; ++n)
                cur[n] += prev[n - a];
        }
    }
}

Count RhoEngine::exact(long long j, long long n) const {
    if (j < 0 || j > hmax_ || n < 0 || n > row_len(j))
        return 0;
    if (n > ncap_)
        throw InternalError("RhoEngine: query beyond value cap");
    return wide_ ? rows_big_[j][n] : Count(rows64_[j][n]);
}

Count RhoEngine::cumulative(long long h, long long n) const {
    Count total = 0;
    long long top = std::min(h, hmax_);
    for (long long j = 0; j <= top; ++j)
        total += exact(j, n);
    return total;
}

std::vector<Count> RhoEngine::total_row() const {
    std::vector<Count> totals(ncap_ + 1, Count(0));
    for (long long j = 0; j <= hmax_; ++j) {
        long long len = row_len(j);
        for (long long n = 0; n <= len; ++n) {
            if (wide_)
                totals[n] += rows_big_[j][n];
            else if (rows64_[j][n])
                totals[n] += rows64_[j][n];
        }
    }
    return totals;
}

RhoScanner::RhoScanner(const RhoEngine& engine) : engine_(engine), wide_(engine.wide()) {
    if (wide_)
        cum_big_.assign(engine_.ncap() + 1, Count(0));
    else
        cum64_.assign(engine_.ncap() + 1, 0);
    if (wide_)
        cum_big_[0] = 1;
    else
        cum64_[0] = 1;
}

// the running sums can outgrow uint64 even when every table cell fits;
// rebuild this scanner's lane from the intact rows when that happens
void RhoScanner::upgrade() {
    wide_ = true;
    cum_big_.assign(engine_.ncap() + 1, Count(0));
    for (long long j = 0; j <= h_; ++j) {
        long long len = std::min(j * engine_.set().m(), engine_.ncap());
        for (long long n = 0; n <= len; ++n)
            cum_big_[n] += engine_.exact(j, n);
    }
    cum64_.clear();
    cum64_.shrink_to_fit();
}

void RhoScanner::advance() {
    ++h_;
    if (h_ > engine_.hmax())
        throw InternalError("RhoScanner advanced past the table");
    long long len = std::min(h_ * engine_.set().m(), engine_.ncap());
    if (!wide_) {
        const auto& row = engine_.rows64_[h_];
        try {
            for (long long n = 0; n <= len; ++n)
                add_checked(cum64_[n], row[n]);
            return;
        } catch (U64Overflow&) {
            --h_;
            upgrade();
            ++h_;
        }
    }
    for (long long n = 0; n <= len; ++n)
        cum_big_[n] += engine_.exact(h_, n);
}

Count RhoScanner::at(long long n) const {
    if (n < 0 || n > engine_.ncap())
        return 0;
    return wide_ ? cum_big_[n] : Count(cum64_[n]);
}

bool RhoScanner::at_least(long long n, const Count& threshold) const {
    if (n < 0 || n > engine_.ncap())
        return threshold <= 0;
    if (wide_)
        return cum_big_[n] >= threshold;
    if (threshold > std::numeric_limits<std::uint64_t>::max())
        return false;
    return cum64_[n] >= threshold.convert_to<std::uint64_t>();
}

Count rho_h(const IntegerSet& A, long long h, long long n) {
    if (h < 0)
        throw InvalidInput("rho_h: negative parts budget");
    if (n < 0)
        return 0;
    if (n >= 1 && h <= (n - 1) / A.m()) // n > h*m without overflow
        return 0;
    long long cap = std::min(h, n / A.a1());
    RhoEngine engine(A, cap, n);
    return engine.cumulative(cap, n);
}

Count rho_total(const IntegerSet& A, long long n) {
    if (n < 0)
        return 0;
    RhoEngine engine = RhoEngine::for_totals(A, n);
    return engine.cumulative(engine.hmax(), n);
}

RhoTable rho_batch(const IntegerSet& A, long long h) {
    if (h < 0)
        throw InvalidInput("rho_batch: negative parts budget");
    if (h > config().max_hm / A.m())
        throw ResourceLimit("rho_batch: h*m exceeds cap " + std::to_string(config().max_hm));
    long long hm = h * A.m();
    RhoEngine engine(A, h, hm);
    RhoScanner scan(engine);
    while (scan.h() < h)
        scan.advance();
    RhoTable table{A, h, {}};
    table.values.reserve(hm + 1);
    for (long long n = 0; n <= hm; ++n)
        table.values.push_back(scan.at(n));
    return table;
}

std::string RhoTable::to_csv() const {
    std::ostringstream os;
    os << "n,count\n";
    for (std::size_t n = 0; n < values.size(); ++n)
        os << n << ',' << values[n].str() << '\n';
    return os.str();
}

nlohmann::ordered_json RhoTable::to_json() const {
    nlohmann::ordered_json j;
    j["set"] = set.to_string();
    j["h"] = h;
    auto& counts = j["counts"] = nlohmann::ordered_json::array();
    for (const Count& c : values)
        counts.push_back(c.str());
    return j;
}

Count snn_count(const IntegerSet& A, long long n) {
    if (n < 0)
        throw InvalidInput("snn_count: negative n");
    long long ell = A.ell();
    long long a1 = A.a1();
    if (ell == 0)
        return n % a1 == 0 ? 1 : 0; // empty product
    double size = std::pow(static_cast<double>(a1), static_cast<double>(ell));
    if (size > static_cast<double>(config().max_enumeration))
        throw ResourceLimit("snn_count: a1^ell too large to enumerate");
    std::vector<long long> mu(ell, 0);
    long long target = n % a1;
    Count hits = 0;
    while (true) {
        long long s = 0;
        for (long long i = 0; i < ell; ++i)
            s += A.element(i + 2) * mu[i];
        if (s % a1 == target)
            ++hits;
        long long i = 0;
        for (; i < ell; ++i) {
            if (++mu[i] < a1)
                break;
            mu[i] = 0;
        }
        if (i == ell)
            break;
    }
    return hits;
}

namespace {

Count simplex_count_rec(const std::vector<long long>& w, std::size_t d, const Rat& budget) {
    if (budget < 0)
        return 0;
    if (d == 0)
        return 1;
    long long top = checked_ll(rat_floor(budget / w[d - 1]), "simplex_count");
    if (d == 1)
        return Count(top) + 1;
    Count total = 0;
    Rat rem = budget;
    for (long long x = 0; x <= top; ++x) {
        total += simplex_count_rec(w, d - 1, rem);
        rem -= w[d - 1];
    }
    return total;
}

void simplex_validate(const Simplex& s) {
    if (s.weights.empty())
        throw InvalidInput("simplex: needs at least one weight");
    for (long long w : s.weights)
        if (w <= 0)
            throw InvalidInput("simplex: zero weight makes the region unbounded");
    if (s.budget < 0)
        throw InvalidInput("simplex: negative budget");
    double est = 1.0;
    for (long long w : s.weights)
        est *= to_double(s.budget) / static_cast<double>(w) + 1.0;
    if (est > static_cast<double>(config().max_enumeration))
        throw ResourceLimit("simplex_count: too many lattice points to enumerate");
}

} // namespace

Count simplex_count(const Simplex& s) {
    simplex_validate(s);
    return simplex_count_rec(s.weights, s.weights.size(), s.budget);
}

Rat simplex_volume(const Simplex& s) {
    simplex_validate(s);
    unsigned d = static_cast<unsigned>(s.weights.size());
    Rat denom = Rat(factorial(d));
    for (long long w : s.weights)
        denom *= w;
    return rat_pow(s.budget, d) / denom;
}

static long long tail_sum(const IntegerSet& A) {
    long long s = 0;
    for (std::size_t j = 2; j < A.size(); ++j)
        s += A.element(j);
    return s;
}

std::pair<Rat, Rat> rho_brackets(const IntegerSet& A, long long n) {
    long long S = tail_sum(A);
    long long threshold = (A.a1() - 1) * S;
    if (n < threshold)
        throw InvalidInput("rho_brackets: requires n >= (a1-1)*(a_2+...+a_{ell+1}) = " +
                           std::to_string(threshold));
    unsigned ell = static_cast<unsigned>(A.ell());
    Count denom = factorial(ell);
    for (std::size_t j = 1; j < A.size(); ++j)
        denom *= A.element(j);
    Rat lower = rat_pow(Rat(n - threshold), ell) / Rat(denom);
    Rat upper = rat_pow(Rat(n + 1 + S), ell) / Rat(denom);
    return {lower, upper};
}

bool growth_check(const IntegerSet& A, long long n, long long k) {
    if (k < 0)
        throw InvalidInput("growth_check: negative k");
    long long S = tail_sum(A);
    if (n < A.a1() * S)
        throw InvalidInput("growth_check: requires n >= a1*(a_2+...+a_{ell+1}) = " +
                           std::to_string(A.a1() * S));
    long long P = A.a1() * S + 1;
    long long N = n + P + k;
    Rat factor = 1 + Rat(k * A.ell()) / (Rat(n + 1) + Rat(P, A.a1()));
    return Rat(rho_total(A, N)) >= factor * Rat(rho_total(A, n));
}

} // namespace sumstruct
