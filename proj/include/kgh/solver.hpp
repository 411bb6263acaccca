#pragma once

#include <optional>
#include <vector>

#include "kgh/core.hpp"

namespace kgh {

/// A total map from vertex index to a color in [m].
struct Coloring {
    std::vector<int> colors;  // 1-based colors, indexed by vertex index
    int m = 0;

    int colors_used() const;

    friend bool operator==(const Coloring& a, const Coloring& b) {
        return a.m == b.m && a.colors == b.colors;
    }
};

struct ChiResult {
    int chi = 0;
    Coloring witness;
    int lower_bound_used = 1;      // the m the upward search started from
    long long nodes_explored = 0;  // color-assignment attempts across the search
};

struct SolveOptions {
    long long node_budget = 100'000'000;
    long long candidate_budget = kDefaultCandidateBudget;
    bool audit = false;            // ignore formula-derived seeds, start at m = 1
    bool use_hint = true;          // allow verified construction-based upper witnesses
    bool symmetry_breaking = true; // vertex v uses at most 1 + max color before it
};

/// True iff no minimal support is monochromatic.
bool is_proper(const Coloring& coloring, const Hypergraph& hg);

/// Complete backtracking search for a proper m-coloring.
/// Vertices are processed in descending support-degree order (ties by index);
/// a support with all but one vertex colored c forbids c on the last one.
std::optional<Coloring> is_m_colorable(const Hypergraph& hg, int m,
                                       const SolveOptions& opts = {},
                                       long long* nodes_out = nullptr);

/// Exact chromatic number with witness. Iterates m upward from a proven
/// formula seed when the instance's family admits one (from 1 in audit mode).
ChiResult chromatic_number(const Hypergraph& hg, const SolveOptions& opts = {});

struct MonoSupport {
    std::vector<int> support;         // vertex indices
    std::vector<int> multiplicities;  // from support_feasible
    int color = 0;
};

/// Lexicographically first monochromatic minimal support, if any.
std::optional<MonoSupport> find_monochromatic_support(const Coloring& coloring,
                                                      const Hypergraph& hg);

/// Build the hypergraph for a spec and compute its chromatic number.
ChiResult solve_spec(const HypergraphSpec& spec, const SolveOptions& opts = {});

}  // namespace kgh
