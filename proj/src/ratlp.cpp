#include "sumstruct/ratlp.hpp"

#include "sumstruct/errors.hpp"

#include <algorithm>

namespace sumstruct::ratlp {

namespace {

// Tableau rows 0..m-1 are constraints, row m is the reduced-cost row;
// column n is the right-hand side.
struct Tableau {
    std::size_t m, n;
    std::vector<std::vector<Rat>> T;
    std::vector<std::size_t> basis;

    void pivot(std::size_t r, std::size_t c) {
        Rat inv = 1 / T[r][c];
        for (auto& v : T[r])
            v *= inv;
        for (std::size_t i = 0; i < T.size(); ++i) {
            if (i == r || T[i][c] == 0)
                continue;
            Rat f = T[i][c];
            for (std::size_t j = 0; j <= n; ++j)
                T[i][j] -= f * T[r][j];
        }
        basis[r] = c;
    }

    // Bland's rule; allowed(j) masks out retired columns
    template <class Allowed>
    Status run(const Allowed& allowed) {
        while (true) {
            std::size_t enter = n;
            for (std::size_t j = 0; j < n; ++j) {
                if (allowed(j) && T[m][j] < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == n)
                return Status::Optimal;
            std::size_t leave = m;
            Rat best;
            for (std::size_t i = 0; i < m; ++i) {
                if (T[i][enter] <= 0)
                    continue;
                Rat ratio = T[i][n] / T[i][enter];
                if (leave == m || ratio < best ||
                    (ratio == best && basis[i] < basis[leave]))
                    leave = i, best = ratio;
            }
            if (leave == m)
                return Status::Unbounded;
            pivot(leave, enter);
        }
    }
};

} // namespace

Solution solve(const Problem& p) {
    std::size_t rows = p.A.size();
    std::size_t cols = p.c.size();
    for (const auto& row : p.A)
        if (row.size() != cols)
            throw InvalidInput("ratlp: ragged constraint matrix");
    if (p.b.size() != rows)
        throw InvalidInput("ratlp: rhs size mismatch");

    Tableau tab;
    tab.m = rows;
    tab.n = cols + rows; // artificials appended
    tab.T.assign(rows + 1, std::vector<Rat>(tab.n + 1, Rat(0)));
    tab.basis.resize(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        bool flip = p.b[i] < 0;
        for (std::size_t j = 0; j < cols; ++j)
            tab.T[i][j] = flip ? -p.A[i][j] : p.A[i][j];
        tab.T[i][tab.n] = flip ? -p.b[i] : p.b[i];
        tab.T[i][cols + i] = 1;
        tab.basis[i] = cols + i;
    }

    // phase 1: minimize the artificial sum
    for (std::size_t j = cols; j < tab.n; ++j)
        tab.T[rows][j] = 1;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j <= tab.n; ++j)
            tab.T[rows][j] -= tab.T[i][j];
    tab.run([](std::size_t) { return true; });
    if (tab.T[rows][tab.n] < 0) // residual artificial mass
        return {Status::Infeasible, Rat(0), {}};

    // drive artificials out of the basis; all-zero rows are redundant
    std::vector<bool> dead_row(rows, false);
    for (std::size_t i = 0; i < rows; ++i) {
        if (tab.basis[i] < cols)
            continue;
        std::size_t c = cols;
        for (std::size_t j = 0; j < cols; ++j)
            if (tab.T[i][j] != 0) {
                c = j;
                break;
            }
        if (c < cols)
            tab.pivot(i, c);
        else
            dead_row[i] = true;
    }

    // phase 2 with the real objective
    std::fill(tab.T[rows].begin(), tab.T[rows].end(), Rat(0));
    for (std::size_t j = 0; j < cols; ++j)
        tab.T[rows][j] = p.c[j];
    for (std::size_t i = 0; i < rows; ++i) {
        if (dead_row[i] || tab.basis[i] >= cols || tab.T[rows][tab.basis[i]] == 0)
            continue;
        Rat f = tab.T[rows][tab.basis[i]];
        for (std::size_t j = 0; j <= tab.n; ++j)
            tab.T[rows][j] -= f * tab.T[i][j];
    }
    Status st = tab.run([&](std::size_t j) { return j < cols; });
    if (st == Status::Unbounded)
        return {Status::Unbounded, Rat(0), {}};

    Solution sol{Status::Optimal, -tab.T[rows][tab.n], std::vector<Rat>(cols, Rat(0))};
    for (std::size_t i = 0; i < rows; ++i)
        if (!dead_row[i] && tab.basis[i] < cols)
            sol.x[tab.basis[i]] = tab.T[i][tab.n];
    return sol;
}

bool feasible(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b) {
    Problem p{A, b, std::vector<Rat>(A.empty() ? 0 : A[0].size(), Rat(0))};
    return solve(p).status == Status::Optimal;
}

} // namespace sumstruct::ratlp
