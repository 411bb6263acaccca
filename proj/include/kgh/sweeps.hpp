#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kgh/bounds.hpp"
#include "kgh/core.hpp"
#include "kgh/solver.hpp"

namespace kgh {

enum class Verdict {
    equality_confirmed,
    within_bounds,
    violation,            // exact chi contradicts a proven statement
    conjecture_refuted,   // exact chi contradicts a conjectured equality
    inconclusive,         // budget exhausted
    skipped,              // hypothesis not satisfied; reason recorded
};

std::string verdict_name(Verdict v);

enum class CheckKind {
    proven_equality,      // chi == expected, otherwise violation
    proven_lower,         // chi >= expected, otherwise violation
    conjectured_equality, // chi == expected, otherwise conjecture_refuted
};

struct SweepRow {
    std::string sweep;
    HypergraphSpec spec;
    CheckKind check = CheckKind::proven_equality;
    long long expected = 0;
    std::optional<int> chi;
    BoundReport bounds;
    Verdict verdict = Verdict::skipped;
    std::string reason;
    long long nodes = 0;
    std::optional<bool> lz_ok;          // chi <= lz_upper side check
    std::optional<Coloring> witness;    // kept on refutation
    bool pending = false;               // not yet evaluated
};

struct SweepGrid {
    std::vector<int> rs{2, 3, 4};
    std::vector<int> ks{1, 2, 3};
    int max_n_r2 = 12;   // budget for r = 2
    int max_n = 10;      // budget for r >= 3
    bool all_partitions = false;  // transversal sweep: every block composition <= r-1
    SolveOptions solve;
    int threads = 1;

    int max_n_for(int r) const { return r == 2 ? max_n_r2 : max_n; }
};

/// chi(KG^r(n,k;P)) == ceil((n-r(k-1))/(r-1)) for prime r and |P_i| <= r-1.
std::vector<SweepRow> sweep_transversal_equality(const SweepGrid& grid);

/// chi(KG^r_s(n,k)) >= ceil((sum s_i - r(k-1))/(r-1)) for caps <= b(r)-1,
/// with the chi <= lz_upper side check recorded per row.
std::vector<SweepRow> sweep_caps_lower_bound(const SweepGrid& grid);

enum class ConjectureKind { stable_vertices, bounded_parts, avoid_set };

std::vector<SweepRow> sweep_conjectures(const SweepGrid& grid, ConjectureKind kind);

/// chi(KG^r(n,k;P)_{t-wide}) == ceil((n-r(k-1))/(r-1)) for prime r,
/// |P_i| <= r-1 and t <= r(k-3)+2; rows with t_max < 1 are skipped.
std::vector<SweepRow> sweep_wide_equality(const SweepGrid& grid);

/// Every sweep on the default grids; the master regression set.
std::vector<SweepRow> run_all_sweeps(const SweepGrid& grid);

bool any_violation_or_refutation(const std::vector<SweepRow>& rows);
bool any_inconclusive(const std::vector<SweepRow>& rows);

std::string sweep_csv_header();
std::string sweep_row_csv(const SweepRow& row);
std::string sweep_row_jsonl(const SweepRow& row);

}  // namespace kgh
