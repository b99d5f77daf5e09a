#pragma once

#include "sumstruct/numeric.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace sumstruct {

// Affine normalization record: raw = shift + scale * normalized.
struct AffineRecord {
    long long shift = 0;
    long long scale = 1;
};

// A normalized finite set of integers: 0 = a_0 < a_1 < ... < a_ell < m,
// gcd of the elements 1.  Immutable after construction; the derived
// quantities (m, ell, a1, a_ell) are fixed at construction time.
class IntegerSet {
  public:
    // elements must already be normalized (sorted, starting at 0, gcd 1)
    explicit IntegerSet(std::vector<long long> elements);

    // shift/scale an arbitrary raw list (>= 2 distinct values) into
    // normalized form; the record inverts the transformation
    static std::pair<IntegerSet, AffineRecord> normalize(std::vector<long long> raw);

    const std::vector<long long>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    long long element(std::size_t i) const { return elements_[i]; }

    long long m() const { return m_; }        // maximum element
    long long ell() const { return ell_; }    // number of interior elements
    long long a1() const { return a1_; }      // least nonzero element
    long long a_ell() const { return a_ell_; } // greatest element below m

    // {m - a : a in A}
    IntegerSet reflect() const;

    bool contains(long long v) const;
    bool operator==(const IntegerSet& o) const { return elements_ == o.elements_; }

    std::string to_string() const; // "0,3,5"

  private:
    std::vector<long long> elements_;
    long long m_;
    long long ell_;
    long long a1_;
    long long a_ell_;
};

// Comma-separated decimal integers, whitespace ignored.
std::vector<long long> parse_int_list(std::string_view text);

// One set per line; blank lines skipped.
std::vector<std::vector<long long>> read_sets_file(const std::string& path);

std::string format_int_list(const std::vector<long long>& v);

} // namespace sumstruct
