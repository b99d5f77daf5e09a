#include "sumstruct/lattice.hpp"

#include "sumstruct/config.hpp"
#include "sumstruct/errors.hpp"
#include "sumstruct/ratlp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>

namespace sumstruct {

namespace {

struct U64Overflow {};

inline void add_checked(std::uint64_t& x, std::uint64_t y) {
    if (__builtin_add_overflow(x, y, &x))
        throw U64Overflow{};
}

Count dot_cnt(const Point& a, const std::vector<long long>& u) {
    Count s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += Count(a[i]) * u[i];
    return s;
}

bool is_origin(const Point& p) {
    return std::all_of(p.begin(), p.end(), [](long long v) { return v == 0; });
}

// is p in lambda * H(pts)?  (exists c >= 0 with sum c = lambda, sum c_a a = p)
bool in_scaled_hull(const std::vector<Point>& pts, const Point& p, const Rat& lambda) {
    if (pts.empty())
        return false;
    std::size_t d = pts[0].size();
    std::vector<std::vector<Rat>> A(d + 1, std::vector<Rat>(pts.size()));
    std::vector<Rat> b(d + 1);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < pts.size(); ++j)
            A[i][j] = pts[j][i];
        b[i] = p[i];
    }
    for (std::size_t j = 0; j < pts.size(); ++j)
        A[d][j] = 1;
    b[d] = lambda;
    return ratlp::feasible(A, b);
}

// is p in the cone of pts?  (exists c >= 0 with sum c_a a = p)
bool in_cone(const std::vector<Point>& pts, const Point& p) {
    if (pts.empty())
        return is_origin(p);
    std::size_t d = pts[0].size();
    std::vector<std::vector<Rat>> A(d, std::vector<Rat>(pts.size()));
    std::vector<Rat> b(d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < pts.size(); ++j)
            A[i][j] = pts[j][i];
        b[i] = p[i];
    }
    return ratlp::feasible(A, b);
}

// integer direction u with <u, a> > 0 for every a, via the exact LP
//   max s  s.t.  <u, a> >= s,  u in [-1,1]^d,  s <= 1
std::optional<std::vector<long long>> validity_direction(const std::vector<Point>& nz, int d) {
    // columns: y+ (d), y- (d), s, slack per point, box slacks (2d), s-slack
    std::size_t np = nz.size();
    std::size_t cols = 2 * d + 1 + np + 2 * d + 1;
    std::size_t rows = np + 2 * d + 1;
    std::vector<std::vector<Rat>> A(rows, std::vector<Rat>(cols, Rat(0)));
    std::vector<Rat> b(rows, Rat(0));
    std::vector<Rat> c(cols, Rat(0));
    std::size_t s_col = 2 * d;
    for (std::size_t k = 0; k < np; ++k) {
        for (int i = 0; i < d; ++i) {
            A[k][i] = nz[k][i];
            A[k][d + i] = -nz[k][i];
        }
        A[k][s_col] = -1;
        A[k][2 * d + 1 + k] = -1; // <u,a> - s - slack = 0
    }
    for (int i = 0; i < d; ++i) {
        std::size_t r = np + i;
        A[r][i] = 1;
        A[r][2 * d + 1 + np + i] = 1;
        b[r] = 1;
        r = np + d + i;
        A[r][d + i] = 1;
        A[r][2 * d + 1 + np + d + i] = 1;
        b[r] = 1;
    }
    A[rows - 1][s_col] = 1;
    A[rows - 1][cols - 1] = 1;
    b[rows - 1] = 1;
    c[s_col] = -1; // maximize s

    ratlp::Solution sol = ratlp::solve({A, b, c});
    if (sol.status != ratlp::Status::Optimal)
        throw InternalError("validity_direction: bounded LP did not solve");
    if (sol.objective >= 0) // optimal s is zero: no strict direction
        return std::nullopt;

    std::vector<Rat> u(d);
    Count lcm = 1;
    for (int i = 0; i < d; ++i) {
        u[i] = sol.x[i] - sol.x[d + i];
        Count den = boost::multiprecision::denominator(u[i]);
        lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
    }
    std::vector<Count> w(d);
    Count g = 0;
    for (int i = 0; i < d; ++i) {
        w[i] = boost::multiprecision::numerator(Rat(u[i] * lcm));
        g = boost::multiprecision::gcd(g, w[i]);
    }
    std::vector<long long> out(d);
    for (int i = 0; i < d; ++i)
        out[i] = checked_ll(g == 0 ? w[i] : w[i] / g, "validity_direction");
    return out;
}

// one integer normal to the span of rows (expected rank d-1), or nullopt
std::optional<std::vector<Count>> hyperplane_normal(const std::vector<const Point*>& rows, int d) {
    std::vector<std::vector<Rat>> M;
    for (const Point* r : rows) {
        std::vector<Rat> row(d);
        for (int i = 0; i < d; ++i)
            row[i] = (*r)[i];
        M.push_back(std::move(row));
    }
    std::vector<int> pivot_col;
    std::size_t r = 0;
    for (int c = 0; c < d && r < M.size(); ++c) {
        std::size_t sel = r;
        while (sel < M.size() && M[sel][c] == 0)
            ++sel;
        if (sel == M.size())
            continue;
        std::swap(M[r], M[sel]);
        for (std::size_t i = 0; i < M.size(); ++i) {
            if (i == r || M[i][c] == 0)
                continue;
            Rat f = M[i][c] / M[r][c];
            for (int j = 0; j < d; ++j)
                M[i][j] -= f * M[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    if (static_cast<int>(r) != d - 1)
        return std::nullopt; // degenerate subset
    std::vector<char> is_pivot(d, 0);
    for (int c : pivot_col)
        is_pivot[c] = 1;
    int free_col = 0;
    while (is_pivot[free_col])
        ++free_col;
    std::vector<Rat> n(d, Rat(0));
    n[free_col] = 1;
    for (std::size_t i = 0; i < r; ++i)
        n[pivot_col[i]] = -M[i][free_col] / M[i][pivot_col[i]];
    Count lcm = 1;
    for (int i = 0; i < d; ++i) {
        Count den = boost::multiprecision::denominator(n[i]);
        lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
    }
    std::vector<Count> out(d);
    Count g = 0;
    for (int i = 0; i < d; ++i) {
        out[i] = boost::multiprecision::numerator(Rat(n[i] * lcm));
        g = boost::multiprecision::gcd(g, out[i]);
    }
    if (g > 1)
        for (auto& v : out)
            v /= g;
    return out;
}

// solve M c = rhs for square rational M; nullopt when singular
std::optional<std::vector<Rat>> solve_linear(std::vector<std::vector<Rat>> M,
                                             std::vector<Rat> rhs) {
    std::size_t n = M.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        while (sel < n && M[sel][c] == 0)
            ++sel;
        if (sel == n)
            return std::nullopt;
        std::swap(M[c], M[sel]);
        std::swap(rhs[c], rhs[sel]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || M[i][c] == 0)
                continue;
            Rat f = M[i][c] / M[c][c];
            for (std::size_t j = c; j < n; ++j)
                M[i][j] -= f * M[c][j];
            rhs[i] -= f * rhs[c];
        }
    }
    std::vector<Rat> x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = rhs[i] / M[i][i];
    return x;
}

// Exact membership in lambda * H(points): interval test for d = 1, polygon
// edge test for d = 2 (full-dimensional), LP fallback otherwise.
class HullMembership {
  public:
    HullMembership(const std::vector<Point>& pts, int d) : pts_(pts), d_(d) {
        if (d_ == 1) {
            lo1_ = hi1_ = pts[0][0];
            for (const Point& p : pts) {
                lo1_ = std::min(lo1_, p[0]);
                hi1_ = std::max(hi1_, p[0]);
            }
            mode_ = Mode::Interval;
            return;
        }
        if (d_ == 2) {
            auto hull = convex_polygon(pts);
            if (hull.size() >= 3) {
                for (std::size_t i = 0; i < hull.size(); ++i) {
                    const Point& u = hull[i];
                    const Point& w = hull[(i + 1) % hull.size()];
                    long long ex = w[0] - u[0], ey = w[1] - u[1];
                    // interior is left of each CCW edge:
                    // ex*(p.y - lambda*u.y) - ey*(p.x - lambda*u.x) >= 0
                    edges_.push_back({ex, ey, Count(ex) * u[1] - Count(ey) * u[0]});
                }
                mode_ = Mode::Polygon;
                return;
            }
        }
        mode_ = Mode::Lp;
    }

    bool contains(const Point& p, const Rat& lambda) const {
        switch (mode_) {
        case Mode::Interval:
            return Rat(p[0]) >= lambda * lo1_ && Rat(p[0]) <= lambda * hi1_;
        case Mode::Polygon:
            for (const Edge& e : edges_) {
                Rat lhs = Rat(Count(e.ex) * p[1] - Count(e.ey) * p[0]);
                if (lhs < lambda * Rat(e.cross_u))
                    return false;
            }
            return true;
        case Mode::Lp:
            return in_scaled_hull(pts_, p, lambda);
        }
        return false;
    }

    // CCW vertex cycle by monotone chain; collinear points dropped
    static std::vector<Point> convex_polygon(std::vector<Point> pts) {
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        if (pts.size() < 3)
            return pts;
        auto cross = [](const Point& o, const Point& a, const Point& b) {
            return Count(a[0] - o[0]) * (b[1] - o[1]) - Count(a[1] - o[1]) * (b[0] - o[0]);
        };
        std::vector<Point> h;
        for (const Point& p : pts) { // lower
            while (h.size() >= 2 && cross(h[h.size() - 2], h.back(), p) <= 0)
                h.pop_back();
            h.push_back(p);
        }
        std::size_t lower = h.size() + 1;
        for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) { // upper
            while (h.size() >= lower && cross(h[h.size() - 2], h.back(), *it) <= 0)
                h.pop_back();
            h.push_back(*it);
        }
        h.pop_back();
        return h;
    }

  private:
    enum class Mode { Interval, Polygon, Lp };
    struct Edge {
        long long ex, ey;
        Count cross_u;
    };
    std::vector<Point> pts_;
    int d_;
    Mode mode_ = Mode::Lp;
    long long lo1_ = 0, hi1_ = 0;
    std::vector<Edge> edges_;
};

struct Box {
    Point lo, hi;
    std::vector<long long> stride;
    long long cells = 1;

    Box() = default;
    Box(const std::vector<Point>& pts, long long scale) {
        int d = static_cast<int>(pts[0].size());
        lo.assign(d, 0);
        hi.assign(d, 0);
        for (const Point& p : pts)
            for (int i = 0; i < d; ++i) {
                lo[i] = std::min(lo[i], p[i]);
                hi[i] = std::max(hi[i], p[i]);
            }
        for (int i = 0; i < d; ++i) {
            lo[i] *= scale;
            hi[i] *= scale;
        }
        finish();
    }

    void finish() {
        int d = static_cast<int>(lo.size());
        stride.assign(d, 0);
        cells = 1;
        for (int i = d - 1; i >= 0; --i) {
            stride[i] = cells;
            long long w = hi[i] - lo[i] + 1;
            if (w <= 0 || cells > config().max_lattice_points / w)
                throw ResourceLimit("lattice box exceeds the point cap");
            cells *= w;
        }
    }

    bool inside(const Point& p) const {
        for (std::size_t i = 0; i < lo.size(); ++i)
            if (p[i] < lo[i] || p[i] > hi[i])
                return false;
        return true;
    }

    long long index(const Point& p) const {
        long long idx = 0;
        for (std::size_t i = 0; i < lo.size(); ++i)
            idx += (p[i] - lo[i]) * stride[i];
        return idx;
    }

    // lexicographic iteration
    template <class F>
    void for_each(F&& f) const {
        Point p = lo;
        while (true) {
            f(p);
            int i = static_cast<int>(lo.size()) - 1;
            for (; i >= 0; --i) {
                if (++p[i] <= hi[i])
                    break;
                p[i] = lo[i];
            }
            if (i < 0)
                return;
        }
    }
};

// Exact-parts table over the bounding box of hmax*H(A); the d-dimensional
// sibling of RhoEngine, with the same uint64-then-big fallback.
class ZdRhoEngine {
  public:
    ZdRhoEngine(const LatticePointSet& A, long long hmax)
        : set_(A), hmax_(hmax), box_(A.points(), hmax) {
        if (hmax_ < 0)
            throw InvalidInput("ZdRhoEngine: negative parts cap");
        if (box_.cells > config().max_table_entries / (hmax_ + 1))
            throw ResourceLimit("parts table over the lattice box is too large");
        try {
            fill<std::uint64_t>(rows64_);
        } catch (U64Overflow&) {
            wide_ = true;
            rows64_.clear();
            rows64_.shrink_to_fit();
            fill<Count>(rows_big_);
        }
    }

    const Box& box() const { return box_; }
    long long hmax() const { return hmax_; }
    bool wide() const { return wide_; }

    Count exact(long long j, long long idx) const {
        if (j < 0 || j > hmax_)
            return 0;
        return wide_ ? rows_big_[j][idx] : Count(rows64_[j][idx]);
    }

    Count cumulative(long long h, const Point& p) const {
        if (!box_.inside(p))
            return 0;
        long long idx = box_.index(p);
        Count total = 0;
        for (long long j = 0; j <= std::min(h, hmax_); ++j)
            total += exact(j, idx);
        return total;
    }

    std::vector<Count> total_row() const {
        std::vector<Count> totals(box_.cells, Count(0));
        for (long long j = 0; j <= hmax_; ++j)
            for (long long i = 0; i < box_.cells; ++i) {
                if (wide_)
                    totals[i] += rows_big_[j][i];
                else if (rows64_[j][i])
                    totals[i] += rows64_[j][i];
            }
        return totals;
    }

  private:
    template <class Cell>
    void fill(std::vector<std::vector<Cell>>& rows) {
        rows.assign(hmax_ + 1, std::vector<Cell>(box_.cells, Cell(0)));
        rows[0][box_.index(Point(box_.lo.size(), 0))] = 1;
        Point q(box_.lo.size());
        for (const Point& a : set_.nonzero()) {
            for (long long j = 1; j <= hmax_; ++j) {
                auto& cur = rows[j];
                const auto& prev = rows[j - 1];
                box_.for_each([&](const Point& p) {
                    for (std::size_t i = 0; i < q.size(); ++i)
                        q[i] = p[i] - a[i];
                    if (!box_.inside(q))
                        return;
                    if constexpr (std::is_same_v<Cell, std::uint64_t>)
                        add_checked(cur[box_.index(p)], prev[box_.index(q)]);
                    else
                        cur[box_.index(p)] += prev[box_.index(q)];
                });
            }
        }
    }

    LatticePointSet set_;
    long long hmax_;
    Box box_;
    bool wide_ = false;
    std::vector<std::vector<std::uint64_t>> rows64_;
    std::vector<std::vector<Count>> rows_big_;

    friend class ZdRhoScanner;
};

class ZdRhoScanner {
  public:
    explicit ZdRhoScanner(const ZdRhoEngine& engine) : engine_(engine), wide_(engine.wide()) {
        if (wide_)
            cum_big_.assign(engine_.box().cells, Count(0));
        else
            cum64_.assign(engine_.box().cells, 0);
        long long origin = engine_.box().index(Point(engine_.box().lo.size(), 0));
        if (wide_)
            cum_big_[origin] = 1;
        else
            cum64_[origin] = 1;
    }

    long long h() const { return h_; }

    void advance() {
        ++h_;
        if (h_ > engine_.hmax())
            throw InternalError("ZdRhoScanner advanced past the table");
        if (!wide_) {
            try {
                const auto& row = engine_.rows64_[h_];
                for (long long i = 0; i < engine_.box().cells; ++i)
                    add_checked(cum64_[i], row[i]);
                return;
            } catch (U64Overflow&) { // running sums outgrew uint64: rebuild
                wide_ = true;
                cum_big_.assign(engine_.box().cells, Count(0));
                for (long long j = 0; j < h_; ++j)
                    for (long long i = 0; i < engine_.box().cells; ++i)
                        cum_big_[i] += engine_.exact(j, i);
                cum64_.clear();
                cum64_.shrink_to_fit();
            }
        }
        for (long long i = 0; i < engine_.box().cells; ++i)
            cum_big_[i] += engine_.exact(h_, i);
    }

    bool at_least(const Point& p, const Count& threshold) const {
        if (!engine_.box().inside(p))
            return threshold <= 0;
        long long idx = engine_.box().index(p);
        if (wide_)
            return cum_big_[idx] >= threshold;
        if (threshold > std::numeric_limits<std::uint64_t>::max())
            return false;
        return cum64_[idx] >= threshold.convert_to<std::uint64_t>();
    }

  private:
    const ZdRhoEngine& engine_;
    long long h_ = 0;
    bool wide_;
    std::vector<std::uint64_t> cum64_;
    std::vector<Count> cum_big_;
};

std::vector<Point> hull_lattice_points(const std::vector<Point>& pts, const HullMembership& hull,
                                       const Rat& lambda, const LatticeBasis* span_filter) {
    int d = static_cast<int>(pts[0].size());
    Point lo(d), hi(d);
    for (int i = 0; i < d; ++i) {
        long long mn = pts[0][i], mx = pts[0][i];
        for (const Point& p : pts) {
            mn = std::min(mn, p[i]);
            mx = std::max(mx, p[i]);
        }
        lo[i] = checked_ll(rat_ceil(lambda * mn), "hull box");
        hi[i] = checked_ll(rat_floor(lambda * mx), "hull box");
    }
    Box box;
    box.lo = lo;
    box.hi = hi;
    box.finish();
    std::vector<Point> out;
    box.for_each([&](const Point& p) {
        if (!hull.contains(p, lambda))
            return;
        if (span_filter && !span_filter->contains(p))
            return;
        out.push_back(p);
    });
    return out;
}

} // namespace

std::string format_point(const Point& p) {
    std::ostringstream os;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i)
            os << ',';
        os << p[i];
    }
    return os.str();
}

std::vector<Point> read_points_file(const std::string& path) {
    std::vector<Point> out;
    for (auto& row : read_sets_file(path))
        out.push_back(row);
    return out;
}

LatticePointSet::LatticePointSet(std::vector<Point> points) : points_(std::move(points)) {
    if (points_.empty())
        throw InvalidInput("lattice set: no points");
    d_ = static_cast<int>(points_[0].size());
    if (d_ < 1)
        throw InvalidInput("lattice set: zero-dimensional points");
    for (const Point& p : points_)
        if (static_cast<int>(p.size()) != d_)
            throw InvalidInput("lattice set: inconsistent dimensions");
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
    if (points_.size() < 2)
        throw InvalidInput("lattice set: needs at least 2 distinct points");
    bool has_origin = false;
    for (const Point& p : points_)
        if (is_origin(p))
            has_origin = true;
    if (!has_origin)
        throw InvalidInput("lattice set: must contain the origin");
    if (in_scaled_hull(nonzero(), Point(d_, 0), Rat(1)))
        throw InvalidInput("lattice set: origin is not an extremal point of the hull");
}

LatticePointSet LatticePointSet::from_integer_set(const IntegerSet& A) {
    std::vector<Point> pts;
    for (long long a : A.elements())
        pts.push_back({a});
    return LatticePointSet(std::move(pts));
}

std::vector<Point> LatticePointSet::nonzero() const {
    std::vector<Point> out;
    for (const Point& p : points_)
        if (!is_origin(p))
            out.push_back(p);
    return out;
}

bool LatticePointSet::contains(const Point& p) const {
    return std::binary_search(points_.begin(), points_.end(), p);
}

LatticePointSet LatticePointSet::vertex_reflect(const Point& v) const {
    std::vector<Point> out;
    for (const Point& p : points_) {
        Point q(d_);
        for (int i = 0; i < d_; ++i)
            q[i] = v[i] - p[i];
        out.push_back(std::move(q));
    }
    return LatticePointSet(std::move(out));
}

std::vector<Point> extremal_points(const LatticePointSet& A) {
    std::vector<Point> out;
    for (const Point& v : A.points()) {
        std::vector<Point> others;
        for (const Point& p : A.points())
            if (p != v)
                others.push_back(p);
        if (!in_scaled_hull(others, v, Rat(1)))
            out.push_back(v);
    }
    return out;
}

LatticeBasis LatticeBasis::from_points(const std::vector<Point>& pts, int d) {
    LatticeBasis basis;
    basis.d_ = d;
    std::vector<std::vector<Count>> cols;
    for (const Point& p : pts) {
        if (is_origin(p))
            continue;
        std::vector<Count> c(d);
        for (int i = 0; i < d; ++i)
            c[i] = p[i];
        cols.push_back(std::move(c));
    }
    std::size_t rank = 0;
    for (int r = 0; r < d && rank < cols.size(); ++r) {
        while (true) {
            std::size_t best = cols.size();
            for (std::size_t j = rank; j < cols.size(); ++j) {
                if (cols[j][r] == 0)
                    continue;
                if (best == cols.size() ||
                    boost::multiprecision::abs(cols[j][r]) <
                        boost::multiprecision::abs(cols[best][r]))
                    best = j;
            }
            if (best == cols.size())
                break; // row r empty among remaining columns
            std::swap(cols[rank], cols[best]);
            bool clean = true;
            for (std::size_t j = rank + 1; j < cols.size(); ++j) {
                if (cols[j][r] == 0)
                    continue;
                Count q = cols[j][r] / cols[rank][r];
                for (int i = 0; i < d; ++i)
                    cols[j][i] -= q * cols[rank][i];
                if (cols[j][r] != 0)
                    clean = false;
            }
            if (clean)
                break;
        }
        if (rank < cols.size() && cols[rank][r] != 0) {
            if (cols[rank][r] < 0)
                for (int i = 0; i < d; ++i)
                    cols[rank][i] = -cols[rank][i];
            basis.pivot_rows_.push_back(r);
            ++rank;
        }
    }
    cols.resize(rank);
    // canonical form: entries of earlier columns reduced modulo each pivot
    for (std::size_t i = 0; i < rank; ++i) {
        int r = basis.pivot_rows_[i];
        for (std::size_t j = 0; j < i; ++j) {
            Count q = cols[j][r] / cols[i][r];
            if (cols[j][r] - q * cols[i][r] < 0)
                --q;
            if (q != 0)
                for (int k = 0; k < d; ++k)
                    cols[j][k] -= q * cols[i][k];
        }
    }
    basis.cols_ = std::move(cols);
    return basis;
}

bool LatticeBasis::contains(const Point& p) const {
    std::vector<Count> x(d_);
    for (int i = 0; i < d_; ++i)
        x[i] = p[i];
    for (std::size_t i = 0; i < cols_.size(); ++i) {
        int r = pivot_rows_[i];
        if (x[r] % cols_[i][r] != 0)
            return false;
        Count q = x[r] / cols_[i][r];
        for (int k = 0; k < d_; ++k)
            x[k] -= q * cols_[i][k];
    }
    return std::all_of(x.begin(), x.end(), [](const Count& v) { return v == 0; });
}

Count LatticeBasis::index_in_Zd() const {
    if (rank() != d_)
        return 0;
    Count det = 1;
    for (std::size_t i = 0; i < cols_.size(); ++i)
        det *= cols_[i][pivot_rows_[i]];
    return det;
}

nlohmann::ordered_json LatticeBasis::to_json() const {
    nlohmann::ordered_json j;
    j["dim"] = d_;
    j["rank"] = rank();
    auto& cols = j["basis"] = nlohmann::ordered_json::array();
    for (const auto& c : cols_) {
        nlohmann::ordered_json col = nlohmann::ordered_json::array();
        for (const Count& v : c)
            col.push_back(v.str());
        cols.push_back(col);
    }
    j["index_in_Zd"] = index_in_Zd().str();
    return j;
}

LatticeBasis lattice_span(const LatticePointSet& A) {
    return LatticeBasis::from_points(A.points(), A.dim());
}

Count rho_h_d(const LatticePointSet& A, long long h, const Point& p) {
    if (h < 0)
        throw InvalidInput("rho_h_d: negative parts budget");
    if (static_cast<int>(p.size()) != A.dim())
        throw InvalidInput("rho_h_d: dimension mismatch");
    ZdRhoEngine engine(A, h);
    return engine.cumulative(h, p);
}

Count rho_total_d(const LatticePointSet& A, const Point& p) {
    if (static_cast<int>(p.size()) != A.dim())
        throw InvalidInput("rho_total_d: dimension mismatch");
    if (!lattice_span(A).contains(p) || !in_cone(A.nonzero(), p))
        return 0;
    auto u = validity_direction(A.nonzero(), A.dim());
    if (!u)
        throw InternalError("rho_total_d: pointed cone lost its direction");
    Count delta = 0;
    for (const Point& a : A.nonzero()) {
        Count proj = dot_cnt(a, *u);
        if (delta == 0 || proj < delta)
            delta = proj;
    }
    Count num = dot_cnt(p, *u);
    if (num < 0)
        return 0;
    long long cap = checked_ll(rat_ceil(Rat(num, delta)), "rho_total_d cap");
    ZdRhoEngine engine(A, cap);
    return engine.cumulative(cap, p);
}

DirectionStats delta_Delta(const LatticePointSet& A) {
    int d = A.dim();
    std::vector<Point> nz = A.nonzero();
    auto witness = validity_direction(nz, d);
    if (!witness)
        throw InternalError("delta_Delta: cone is not pointed");

    std::vector<std::vector<long long>> cands;
    cands.push_back(*witness);
    if (d == 1) {
        cands.push_back({1});
        cands.push_back({-1});
    } else {
        // normals to hyperplanes spanned by d-1 points of A u (A - A)
        std::vector<Point> pool = nz;
        for (const Point& a : A.points())
            for (const Point& b : A.points()) {
                if (a == b)
                    continue;
                Point q(d);
                for (int i = 0; i < d; ++i)
                    q[i] = a[i] - b[i];
                pool.push_back(std::move(q));
            }
        std::sort(pool.begin(), pool.end());
        pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

        std::vector<std::size_t> idx(d - 1);
        long long combos = 0;
        const long long combo_cap = 100000;
        auto emit = [&](const std::vector<std::size_t>& sel) {
            std::vector<const Point*> rows;
            for (std::size_t s : sel)
                rows.push_back(&pool[s]);
            auto n = hyperplane_normal(rows, d);
            if (!n)
                return;
            std::vector<long long> v(d), w(d);
            for (int i = 0; i < d; ++i) {
                v[i] = checked_ll((*n)[i], "delta_Delta normal");
                w[i] = -v[i];
            }
            cands.push_back(std::move(v));
            cands.push_back(std::move(w));
        };
        // lexicographic (d-1)-subsets, capped
        std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t from) {
            if (combos >= combo_cap)
                return;
            if (pos == idx.size()) {
                ++combos;
                emit(idx);
                return;
            }
            for (std::size_t j = from; j < pool.size(); ++j) {
                idx[pos] = j;
                rec(pos + 1, j + 1);
                if (combos >= combo_cap)
                    return;
            }
        };
        if (d >= 2 && !pool.empty())
            rec(0, 0);
    }
    long long grid_points = 0;
    if (d == 2) {
        const long long K = 720;
        grid_points = K;
        for (long long k = 0; k < K; ++k) {
            double th = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(K);
            long long x = std::llround(1e4 * std::cos(th));
            long long y = std::llround(1e4 * std::sin(th));
            if (x || y)
                cands.push_back({x, y});
        }
    }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

    bool found = false;
    DirectionStats best{};
    long long tried = 0;
    for (const auto& u : cands) {
        ++tried;
        Count mn = 0, mx = 0;
        bool valid = true;
        for (const Point& a : nz) {
            Count proj = dot_cnt(a, u);
            if (proj <= 0) {
                valid = false;
                break;
            }
            if (mn == 0 || proj < mn)
                mn = proj;
            if (proj > mx)
                mx = proj;
        }
        if (!valid)
            continue;
        Rat ratio(mx, mn);
        if (!found || ratio < best.ratio ||
            (ratio == best.ratio && u < best.direction)) {
            found = true;
            best.direction = u;
            best.proj_min = mn;
            best.proj_max = mx;
            best.ratio = ratio;
        }
    }
    if (!found)
        throw InternalError("delta_Delta: no valid direction among candidates");
    double norm = 0;
    for (long long v : best.direction)
        norm += static_cast<double>(v) * static_cast<double>(v);
    norm = std::sqrt(norm);
    best.delta = to_double(best.proj_min) / norm;
    best.Delta = to_double(best.proj_max) / norm;
    best.candidates_tried = tried;
    best.grid_points = grid_points;
    return best;
}

nlohmann::ordered_json DirectionStats::to_json() const {
    nlohmann::ordered_json j;
    j["direction"] = direction;
    j["delta"] = delta;
    j["Delta"] = Delta;
    j["ratio"] = rat_to_string(ratio);
    j["proj_min"] = proj_min.str();
    j["proj_max"] = proj_max.str();
    j["candidates_tried"] = candidates_tried;
    j["grid_points"] = grid_points;
    return j;
}

namespace {

// Shared state for the structure predicate in Z^d: the parts table of A up
// to h_cap plus, per hull vertex v, the truncated unbounded-count cache of
// v - A over the region the scan can reach.
class ZdStructureContext {
  public:
    ZdStructureContext(const LatticePointSet& A, long long t, long long h_cap)
        : A_(A), t_(t), h_cap_(h_cap), hull_(A.points(), A.dim()),
          basis_(lattice_span(A)), engine_(A, h_cap), scanner_(engine_) {
        if (t_ < 1)
            throw InvalidInput("structure scan: t must be >= 1");
        if (h_cap_ < 0)
            throw InvalidInput("structure scan: negative h");
        vertices_ = extremal_points(A_);
        for (const Point& v : vertices_) {
            VertexCache cache;
            cache.v = v;
            LatticePointSet B = A_.vertex_reflect(v);
            auto u = validity_direction(B.nonzero(), A_.dim());
            if (!u)
                throw InternalError("structure scan: vertex cone not pointed");
            Count delta = 0, Delta = 0;
            for (const Point& b : B.nonzero()) {
                Count proj = dot_cnt(b, *u);
                if (delta == 0 || proj < delta)
                    delta = proj;
                if (proj > Delta)
                    Delta = proj;
            }
            cache.parts_cap =
                checked_ll(rat_ceil(Rat(Delta * h_cap_, delta)), "vertex parts cap");
            ZdRhoEngine eng(B, cache.parts_cap);
            cache.box = eng.box();
            cache.totals = eng.total_row();
            caches_.push_back(std::move(cache));
        }
    }

    long long h() const { return scanner_.h(); }

    void advance_to(long long h) {
        while (scanner_.h() < h)
            scanner_.advance();
    }

    std::vector<Point> domain(long long h) const {
        return hull_lattice_points(A_.points(), hull_, Rat(h), &basis_);
    }

    bool in_lhs(const Point& p) const { return scanner_.at_least(p, Count(t_)); }

    bool in_rhs(long long h, const Point& p) const {
        Point q(p.size());
        for (const VertexCache& c : caches_) {
            for (std::size_t i = 0; i < p.size(); ++i)
                q[i] = h * c.v[i] - p[i];
            if (!c.box.inside(q))
                throw InternalError("structure scan: reflected point left its cache");
            if (c.totals[c.box.index(q)] < t_)
                return false;
        }
        return true;
    }

    const std::vector<Point>& vertices() const { return vertices_; }

    EmpiricalIndex::Truncation truncation(std::size_t i) const {
        const VertexCache& c = caches_[i];
        return {c.v, c.parts_cap, c.box.lo, c.box.hi};
    }
    std::size_t cache_count() const { return caches_.size(); }

  private:
    struct VertexCache {
        Point v;
        long long parts_cap;
        Box box;
        std::vector<Count> totals;
    };

    LatticePointSet A_;
    long long t_;
    long long h_cap_;
    HullMembership hull_;
    LatticeBasis basis_;
    ZdRhoEngine engine_;
    ZdRhoScanner scanner_;
    std::vector<Point> vertices_;
    std::vector<VertexCache> caches_;
};

} // namespace

std::vector<Point> t_sumset_d(const LatticePointSet& A, long long h, long long t) {
    ZdStructureContext ctx(A, t, h);
    ctx.advance_to(h);
    std::vector<Point> out;
    for (const Point& p : ctx.domain(h))
        if (ctx.in_lhs(p))
            out.push_back(p);
    return out;
}

std::vector<Point> structured_rhs_d(const LatticePointSet& A, long long h, long long t) {
    ZdStructureContext ctx(A, t, h);
    std::vector<Point> out;
    for (const Point& p : ctx.domain(h))
        if (ctx.in_rhs(h, p))
            out.push_back(p);
    return out;
}

ZdStructureReport is_structured_d(const LatticePointSet& A, long long h, long long t) {
    ZdStructureContext ctx(A, t, h);
    ctx.advance_to(h);
    ZdStructureReport rep{h, t, {}, {}, {}, true};
    for (const Point& p : ctx.domain(h)) {
        bool lhs = ctx.in_lhs(p);
        bool rhs = ctx.in_rhs(h, p);
        if (lhs)
            rep.lhs.push_back(p);
        if (rhs)
            rep.rhs.push_back(p);
        if (lhs && !rhs)
            throw InternalError("t_sumset escaped the structured shape at " + format_point(p));
        if (rhs && !lhs)
            rep.witnesses.push_back(p);
    }
    rep.structured = rep.witnesses.empty();
    return rep;
}

nlohmann::ordered_json ZdStructureReport::to_json(int witness_limit) const {
    nlohmann::ordered_json j;
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

EmpiricalIndex empirical_structure_index(const LatticePointSet& A, long long t, long long h_cap) {
    if (h_cap < 1)
        throw InvalidInput("empirical_structure_index: h_cap must be >= 1");
    ZdStructureContext ctx(A, t, h_cap);
    EmpiricalIndex idx{t, h_cap, std::nullopt, {}, {}};
    for (std::size_t i = 0; i < ctx.cache_count(); ++i)
        idx.truncation.push_back(ctx.truncation(i));
    for (long long h = 1; h <= h_cap; ++h) {
        ctx.advance_to(h);
        bool ok = true;
        for (const Point& p : ctx.domain(h)) {
            bool lhs = ctx.in_lhs(p);
            bool rhs = ctx.in_rhs(h, p);
            if (lhs && !rhs)
                throw InternalError("t_sumset escaped the structured shape at h = " +
                                    std::to_string(h));
            if (rhs && !lhs) {
                ok = false;
                break;
            }
        }
        if (!ok)
            idx.failing.push_back(h);
    }
    if (idx.failing.empty())
        idx.h_star = 1;
    else if (idx.failing.back() < h_cap)
        idx.h_star = idx.failing.back() + 1;
    return idx;
}

nlohmann::ordered_json EmpiricalIndex::to_json() const {
    nlohmann::ordered_json j;
    j["t"] = t;
    j["h_cap"] = h_cap;
    j["label"] = "empirical up to h_cap";
    if (h_star)
        j["h_star"] = *h_star;
    else
        j["h_star"] = nullptr;
    j["failing_h"] = failing;
    auto& tr = j["truncation"] = nlohmann::ordered_json::array();
    for (const auto& c : truncation) {
        nlohmann::ordered_json e;
        e["vertex"] = c.vertex;
        e["parts_cap"] = c.parts_cap;
        e["box_lo"] = c.box_lo;
        e["box_hi"] = c.box_hi;
        tr.push_back(e);
    }
    return j;
}

long long zd_bound_formula(const LatticePointSet& A, long long t,
                           const std::vector<std::pair<Point, Rat>>& phi) {
    (void)t; // the dependence on t is carried entirely by the phi values
    std::vector<Point> vertices = extremal_points(A);
    int d = A.dim();

    std::vector<Rat> phi_of(vertices.size());
    std::vector<Rat> term(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const Point& v = vertices[i];
        auto it = std::find_if(phi.begin(), phi.end(),
                               [&](const auto& kv) { return kv.first == v; });
        if (it == phi.end())
            throw InvalidInput("zd_bound_formula: missing phi for vertex " + format_point(v));
        if (it->second < 1)
            throw InvalidInput("zd_bound_formula: phi must be >= 1");
        phi_of[i] = it->second;
        DirectionStats stats = delta_Delta(A.vertex_reflect(v));
        term[i] = stats.ratio * phi_of[i];
    }

    std::size_t origin_idx = vertices.size();
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (is_origin(vertices[i]))
            origin_idx = i;
    if (origin_idx == vertices.size())
        throw InternalError("zd_bound_formula: origin is not a hull vertex");

    // all B = {0} u {d independent nonzero vertices}
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (i != origin_idx)
            others.push_back(i);
    long long best = -1;
    std::vector<std::size_t> sel(d);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t from) {
        if (pos == sel.size()) {
            std::vector<std::vector<Rat>> M(d, std::vector<Rat>(d));
            for (int r = 0; r < d; ++r)
                for (int c = 0; c < d; ++c)
                    M[r][c] = vertices[others[sel[c]]][r];
            if (!solve_linear(M, std::vector<Rat>(d, Rat(0))))
                return; // singular: not spanning
            Rat sum = Rat(rat_ceil(term[origin_idx]));
            for (std::size_t c = 0; c < sel.size(); ++c)
                sum += Rat(rat_ceil(term[others[sel[c]]]));
            best = std::max(best, checked_ll(rat_ceil(sum), "zd bound"));
            return;
        }
        for (std::size_t j = from; j < others.size(); ++j) {
            sel[pos] = j;
            rec(pos + 1, j + 1);
        }
    };
    if (static_cast<std::size_t>(d) <= others.size())
        rec(0, 0);
    if (best < 0)
        throw InvalidInput("zd_bound_formula: no spanning vertex simplex (set not full-dimensional)");
    return best;
}

bool caratheodory_cover_check(const LatticePointSet& A, const Rat& lambda, long long sample_cap) {
    if (lambda < 1)
        throw InvalidInput("caratheodory_cover_check: lambda must be >= 1");
    int d = A.dim();
    std::vector<Point> vertices = extremal_points(A);
    std::vector<Point> nz_vertices;
    for (const Point& v : vertices)
        if (!is_origin(v))
            nz_vertices.push_back(v);

    // admissible simplices: {0} plus d independent nonzero vertices
    std::vector<std::vector<Point>> simplices;
    std::vector<std::size_t> sel(d);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t from) {
        if (pos == sel.size()) {
            std::vector<std::vector<Rat>> M(d, std::vector<Rat>(d));
            for (int r = 0; r < d; ++r)
                for (int c = 0; c < d; ++c)
                    M[r][c] = nz_vertices[sel[c]][r];
            std::vector<Rat> probe(d, Rat(0));
            if (!solve_linear(M, probe))
                return;
            std::vector<Point> b;
            for (std::size_t c = 0; c < sel.size(); ++c)
                b.push_back(nz_vertices[sel[c]]);
            simplices.push_back(std::move(b));
            return;
        }
        for (std::size_t j = from; j < nz_vertices.size(); ++j) {
            sel[pos] = j;
            rec(pos + 1, j + 1);
        }
    };
    if (static_cast<std::size_t>(d) <= nz_vertices.size())
        rec(0, 0);
    if (simplices.empty())
        throw InvalidInput("caratheodory_cover_check: set is not full-dimensional");

    HullMembership hull(A.points(), d);
    std::vector<Point> pts = hull_lattice_points(A.points(), hull, lambda, nullptr);
    if (sample_cap >= 0 && static_cast<long long>(pts.size()) > sample_cap)
        pts.resize(sample_cap);

    for (const Point& p : pts) {
        bool covered = false;
        for (const auto& B : simplices) {
            std::vector<std::vector<Rat>> M(d, std::vector<Rat>(d));
            std::vector<Rat> rhs(d);
            for (int r = 0; r < d; ++r) {
                for (int c = 0; c < d; ++c)
                    M[r][c] = B[c][r];
                rhs[r] = p[r];
            }
            auto coeff = solve_linear(M, rhs);
            if (!coeff)
                continue;
            Rat sum = 0;
            bool nonneg = true;
            for (const Rat& cv : *coeff) {
                if (cv < 0) {
                    nonneg = false;
                    break;
                }
                sum += cv;
            }
            if (nonneg && sum <= lambda) {
                covered = true;
                break;
            }
        }
        if (!covered)
            return false;
    }
    return true;
}

PolyCheckRecord hull_size_poly_check(const LatticePointSet& A, long long t, long long h_lo,
                                     long long h_hi) {
    if (h_lo < 0 || h_hi < h_lo)
        throw InvalidInput("hull_size_poly_check: bad range");
    if (t < 1)
        throw InvalidInput("hull_size_poly_check: t must be >= 1");
    int d = A.dim();
    auto u = validity_direction(A.nonzero(), d);
    if (!u)
        throw InternalError("hull_size_poly_check: cone not pointed");
    Count delta = 0, Delta = 0;
    for (const Point& a : A.nonzero()) {
        Count proj = dot_cnt(a, *u);
        if (delta == 0 || proj < delta)
            delta = proj;
        if (proj > Delta)
            Delta = proj;
    }
    long long cap = checked_ll(rat_ceil(Rat(Delta * h_hi, delta)), "poly check cap");
    ZdRhoEngine engine(A, cap);
    std::vector<Count> totals = engine.total_row();
    HullMembership hull(A.points(), d);
    LatticeBasis basis = lattice_span(A);

    PolyCheckRecord rec{t, h_lo, h_hi, {}, std::nullopt, {}};
    for (long long h = h_lo; h <= h_hi; ++h) {
        Count s = 0;
        for (const Point& p : hull_lattice_points(A.points(), hull, Rat(h), &basis))
            if (totals[engine.box().index(p)] >= t)
                ++s;
        rec.sizes.push_back(s);
    }

    long long len = h_hi - h_lo + 1;
    long long order = d + 1;
    if (len <= order)
        return rec; // range too short to difference

    std::vector<Count> diff(rec.sizes.begin(), rec.sizes.end());
    for (long long k = 0; k < order; ++k)
        for (std::size_t i = 0; i + 1 < diff.size(); ++i)
            diff[i] = diff[i + 1] - diff[i];
    diff.resize(len - order);
    long long tail = -1;
    for (long long i = static_cast<long long>(diff.size()) - 1; i >= 0; --i) {
        if (diff[i] != 0)
            break;
        tail = i;
    }
    if (tail < 0)
        return rec;
    rec.tail_start = h_lo + tail;

    // Newton forward-difference fit of degree d from the tail start
    std::vector<std::vector<Count>> table(order);
    table[0].assign(rec.sizes.begin() + tail, rec.sizes.begin() + tail + order);
    for (long long k = 1; k < order; ++k)
        for (long long i = 0; i + k < order; ++i)
            table[k].push_back(table[k - 1][i + 1] - table[k - 1][i]);

    std::vector<Rat> poly{Rat(0)}; // coefficients, low degree first
    std::vector<Rat> basis_poly{Rat(1)}; // product (x - h0)(x - h0 - 1).../k!
    long long h0 = *rec.tail_start;
    for (long long k = 0; k < order; ++k) {
        if (poly.size() < basis_poly.size())
            poly.resize(basis_poly.size(), Rat(0));
        Rat coef = Rat(table[k][0]);
        for (std::size_t i = 0; i < basis_poly.size(); ++i)
            poly[i] += coef * basis_poly[i];
        // multiply by (x - (h0 + k)) / (k + 1)
        std::vector<Rat> next(basis_poly.size() + 1, Rat(0));
        for (std::size_t i = 0; i < basis_poly.size(); ++i) {
            next[i + 1] += basis_poly[i];
            next[i] -= basis_poly[i] * (h0 + k);
        }
        for (auto& v : next)
            v /= (k + 1);
        basis_poly = std::move(next);
    }
    while (poly.size() > 1 && poly.back() == 0)
        poly.pop_back();
    rec.coefficients = std::move(poly);
    return rec;
}

nlohmann::ordered_json PolyCheckRecord::to_json() const {
    nlohmann::ordered_json j;
    j["t"] = t;
    j["h_lo"] = h_lo;
    j["h_hi"] = h_hi;
    auto& sz = j["sizes"] = nlohmann::ordered_json::array();
    for (const Count& s : sizes)
        sz.push_back(s.str());
    if (tail_start)
        j["tail_start"] = *tail_start;
    else
        j["tail_start"] = nullptr;
    auto& co = j["coefficients"] = nlohmann::ordered_json::array();
    for (const Rat& c : coefficients)
        co.push_back(rat_to_string(c));
    return j;
}

} // namespace sumstruct
