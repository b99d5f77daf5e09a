#pragma once

#include "sumstruct/numeric.hpp"

#include <vector>

namespace sumstruct::ratlp {

// Dense exact-rational simplex for the small geometric subproblems
// (hull membership, separating directions).  Standard form:
//   min c.x  subject to  A x = b,  x >= 0.
// Two phases, Bland's rule, so it terminates on every input.

enum class Status { Optimal, Infeasible, Unbounded };

struct Problem {
    std::vector<std::vector<Rat>> A; // m rows, n cols
    std::vector<Rat> b;              // m
    std::vector<Rat> c;              // n
};

struct Solution {
    Status status;
    Rat objective;
    std::vector<Rat> x;
};

Solution solve(const Problem& p);

// is {x >= 0 : A x = b} nonempty?
bool feasible(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b);

} // namespace sumstruct::ratlp
