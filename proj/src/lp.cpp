#include "kgh/lp.hpp"

#include <stdexcept>

namespace kgh {

bool lp_equality_feasible(const std::vector<std::vector<Rat>>& A,
                          const std::vector<Rat>& b, std::vector<Rat>* solution) {
    std::size_t m = A.size();
    if (b.size() != m) throw std::invalid_argument("rhs size mismatch");
    std::size_t n = m == 0 ? 0 : A[0].size();
    for (const auto& row : A)
        if (row.size() != n) throw std::invalid_argument("ragged constraint matrix");
    if (m == 0) {
        if (solution) solution->assign(n, Rat(0));
        return true;
    }

    // Tableau: n structural columns, m artificial columns, rhs. Artificials
    // form the starting basis; minimize their sum.
    std::size_t cols = n + m + 1;
    std::vector<std::vector<Rat>> t(m, std::vector<Rat>(cols, Rat(0)));
    for (std::size_t i = 0; i < m; ++i) {
        bool flip = b[i].sign() < 0;
        for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? -A[i][j] : A[i][j];
        t[i][n + i] = Rat(1);
        t[i][cols - 1] = flip ? -b[i] : b[i];
    }

    // Objective row of reduced costs for min sum(artificials) with the
    // artificial basis priced out: z_j = -sum_i t[i][j] on structural columns.
    std::vector<Rat> z(cols, Rat(0));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < m; ++i) z[j] -= t[i][j];
    for (std::size_t i = 0; i < m; ++i) z[cols - 1] -= t[i][cols - 1];

    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    while (true) {
        // Bland: entering = smallest-index column with negative reduced cost.
        std::size_t enter = cols - 1;
        for (std::size_t j = 0; j < n + m; ++j) {
            if (z[j].sign() < 0) {
                enter = j;
                break;
            }
        }
        if (enter == cols - 1) break;  // optimal

        // Ratio test; ties broken by smallest basis variable (Bland).
        std::size_t leave = m;
        Rat best;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter].sign() <= 0) continue;
            Rat ratio = t[i][cols - 1] / t[i][enter];
            if (leave == m || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m)
            throw std::logic_error("phase-one objective unbounded");  // cannot happen

        // Pivot on (leave, enter).
        Rat piv = t[leave][enter];
        for (std::size_t j = 0; j < cols; ++j) t[leave][j] /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter].is_zero()) continue;
            Rat f = t[i][enter];
            for (std::size_t j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
        }
        if (!z[enter].is_zero()) {
            Rat f = z[enter];
            for (std::size_t j = 0; j < cols; ++j) z[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }

    // Feasible iff all artificials can be driven to zero: objective value is
    // -z[rhs] after pricing out.
    Rat objective = -z[cols - 1];
    if (!objective.is_zero()) return false;

    if (solution) {
        solution->assign(n, Rat(0));
        for (std::size_t i = 0; i < m; ++i)
            if (basis[i] < n) (*solution)[basis[i]] = t[i][cols - 1];
    }
    return true;
}

}  // namespace kgh
