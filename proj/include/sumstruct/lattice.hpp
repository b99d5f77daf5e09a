#pragma once

#include "sumstruct/core.hpp"
#include "sumstruct/numeric.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sumstruct {

using Point = std::vector<long long>;

std::string format_point(const Point& p);
// one point per line, comma-separated integer coordinates
std::vector<Point> read_points_file(const std::string& path);

// Finite A subset of Z^d containing the origin, with the origin an extremal
// point of the convex hull (equivalently, the cone of A is pointed; this is
// verified exactly at construction).  Points are kept sorted and unique.
class LatticePointSet {
  public:
    explicit LatticePointSet(std::vector<Point> points);
    static LatticePointSet from_integer_set(const IntegerSet& A);

    int dim() const { return d_; }
    const std::vector<Point>& points() const { return points_; }
    std::vector<Point> nonzero() const;
    bool contains(const Point& p) const;

    // {v - a : a in A}; shares the origin-extremality guarantee when v is
    // an extremal point of A
    LatticePointSet vertex_reflect(const Point& v) const;

  private:
    std::vector<Point> points_;
    int d_;
};

// Z-span basis in triangular (Hermite-style) column form; membership tests
// are exact integer back-substitution.
class LatticeBasis {
  public:
    static LatticeBasis from_points(const std::vector<Point>& pts, int d);

    int dim() const { return d_; }
    int rank() const { return static_cast<int>(cols_.size()); }
    bool contains(const Point& p) const;
    Count index_in_Zd() const; // 0 when rank < d
    const std::vector<std::vector<Count>>& columns() const { return cols_; }

    nlohmann::ordered_json to_json() const;

  private:
    int d_ = 0;
    std::vector<std::vector<Count>> cols_;
    std::vector<int> pivot_rows_;
};

// Projection statistics along one direction: the reported ratio is the best
// (smallest) found over the documented candidate family, hence an upper
// bound on the true minimum over all valid directions.
struct DirectionStats {
    std::vector<long long> direction; // integer witness, not normalized
    Count proj_min;                   // min <a, direction> over nonzero a
    Count proj_max;
    Rat ratio;    // proj_max / proj_min
    double delta; // proj_min / |direction|
    double Delta; // proj_max / |direction|
    long long candidates_tried;
    long long grid_points; // angular grid size, d = 2 only

    nlohmann::ordered_json to_json() const;
};

// hull vertices: points not in the hull of the remaining ones (exact LP)
std::vector<Point> extremal_points(const LatticePointSet& A);

LatticeBasis lattice_span(const LatticePointSet& A);

// tuples over nonzero elements with sum of parts <= h reaching p
Count rho_h_d(const LatticePointSet& A, long long h, const Point& p);

// unbounded-parts count, evaluated at the stabilization cap
// h = ceil(<p,u>/delta_u) for the stored validity direction u
Count rho_total_d(const LatticePointSet& A, const Point& p);

DirectionStats delta_Delta(const LatticePointSet& A);

std::vector<Point> t_sumset_d(const LatticePointSet& A, long long h, long long t);
std::vector<Point> structured_rhs_d(const LatticePointSet& A, long long h, long long t);

struct ZdStructureReport {
    long long h;
    long long t;
    std::vector<Point> lhs;
    std::vector<Point> rhs;
    std::vector<Point> witnesses; // rhs \ lhs
    bool structured;

    nlohmann::ordered_json to_json(int witness_limit) const;
};

ZdStructureReport is_structured_d(const LatticePointSet& A, long long h, long long t);

// Smallest h* <= h_cap with every h in [h*, h_cap] structured.  Empirical:
// no certificate past h_cap is available in Z^d, and the per-vertex
// exceptional sets are computed truncated to the region the scan can see.
struct EmpiricalIndex {
    long long t;
    long long h_cap;
    std::optional<long long> h_star;
    std::vector<long long> failing;
    struct Truncation {
        Point vertex;
        long long parts_cap;
        Point box_lo;
        Point box_hi;
    };
    std::vector<Truncation> truncation;

    nlohmann::ordered_json to_json() const;
};

EmpiricalIndex empirical_structure_index(const LatticePointSet& A, long long t, long long h_cap);

// max over bases B (0 in B, |B| = d+1, spanning) of
// sum_{b in B} ceil(ratio(b - A) * phi[b]); phi must supply a value >= 1
// for every hull vertex
long long zd_bound_formula(const LatticePointSet& A, long long t,
                           const std::vector<std::pair<Point, Rat>>& phi);

// every lattice point of lambda*H(A) lies in lambda*H(B) for some admissible
// simplex B; checks up to sample_cap points in lexicographic order
bool caratheodory_cover_check(const LatticePointSet& A, const Rat& lambda, long long sample_cap);

// sizes s(h) = |{p in h*H(A) ∩ span : rho_total >= t}| over [h_lo, h_hi],
// the largest tail on which the (d+1)-th finite differences vanish, and the
// fitted degree-d polynomial when the tail is nonempty
struct PolyCheckRecord {
    long long t;
    long long h_lo;
    long long h_hi;
    std::vector<Count> sizes;
    std::optional<long long> tail_start;
    std::vector<Rat> coefficients; // c0 + c1 h + ... + cd h^d

    nlohmann::ordered_json to_json() const;
};

PolyCheckRecord hull_size_poly_check(const LatticePointSet& A, long long t, long long h_lo,
                                     long long h_hi);

} // namespace sumstruct
