#include "kgh/solver.hpp"

#include <algorithm>
#include <numeric>

#include "kgh/bounds.hpp"

namespace kgh {

int Coloring::colors_used() const {
    std::vector<int> seen;
    for (int c : colors)
        if (std::find(seen.begin(), seen.end(), c) == seen.end()) seen.push_back(c);
    return static_cast<int>(seen.size());
}

bool is_proper(const Coloring& coloring, const Hypergraph& hg) {
    if (static_cast<int>(coloring.colors.size()) != hg.num_vertices())
        throw std::invalid_argument("coloring length does not match vertex count");
    for (const auto& support : hg.min_supports) {
        int c0 = coloring.colors[static_cast<std::size_t>(support[0])];
        bool mono = true;
        for (int v : support)
            if (coloring.colors[static_cast<std::size_t>(v)] != c0) {
                mono = false;
                break;
            }
        if (mono) return false;
    }
    return true;
}

std::optional<MonoSupport> find_monochromatic_support(const Coloring& coloring,
                                                      const Hypergraph& hg) {
    if (static_cast<int>(coloring.colors.size()) != hg.num_vertices())
        throw std::invalid_argument("coloring length does not match vertex count");
    for (const auto& support : hg.min_supports) {  // stored in lex order
        int c0 = coloring.colors[static_cast<std::size_t>(support[0])];
        bool mono = true;
        for (int v : support)
            if (coloring.colors[static_cast<std::size_t>(v)] != c0) {
                mono = false;
                break;
            }
        if (!mono) continue;
        MonoSupport out;
        out.support = support;
        out.color = c0;
        if (hg.spec) {
            std::vector<KSubset> sets;
            for (int v : support) sets.push_back(hg.vertices[static_cast<std::size_t>(v)]);
            SVector sv = hg.spec->svector.value_or(
                SVector::uniform(1, hg.spec->n, hg.spec->r));
            if (auto mult = support_feasible(sets, hg.spec->r, sv)) out.multiplicities = *mult;
        }
        if (out.multiplicities.empty())
            out.multiplicities.assign(out.support.size(), 1);
        return out;
    }
    return std::nullopt;
}

namespace {

struct Searcher {
    const Hypergraph& hg;
    int m;
    const SolveOptions& opts;
    long long nodes = 0;
    long long budget;

    int V;
    std::vector<int> order;     // position -> vertex
    std::vector<int> color;     // vertex -> 0 or assigned color
    std::vector<Mask> forbidden;  // vertex -> bitmask of banned colors (bit c-1)
    // CSR of supports per vertex
    std::vector<int> sup_start;
    std::vector<int> sup_list;
    std::vector<std::vector<int>> supports;

    Searcher(const Hypergraph& hg_, int m_, const SolveOptions& opts_, long long budget_)
        : hg(hg_), m(m_), opts(opts_), budget(budget_), V(hg_.num_vertices()) {
        supports = hg.min_supports;
        std::vector<int> degree(static_cast<std::size_t>(V), 0);
        std::vector<int> counts(static_cast<std::size_t>(V), 0);
        for (const auto& s : supports)
            for (int v : s) ++degree[static_cast<std::size_t>(v)];
        sup_start.assign(static_cast<std::size_t>(V + 1), 0);
        for (int v = 0; v < V; ++v)
            sup_start[static_cast<std::size_t>(v + 1)] =
                sup_start[static_cast<std::size_t>(v)] + degree[static_cast<std::size_t>(v)];
        sup_list.assign(static_cast<std::size_t>(sup_start[static_cast<std::size_t>(V)]), 0);
        for (int si = 0; si < static_cast<int>(supports.size()); ++si)
            for (int v : supports[static_cast<std::size_t>(si)])
                sup_list[static_cast<std::size_t>(
                    sup_start[static_cast<std::size_t>(v)] +
                    counts[static_cast<std::size_t>(v)]++)] = si;

        order.resize(static_cast<std::size_t>(V));
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            int da = degree[static_cast<std::size_t>(a)];
            int db = degree[static_cast<std::size_t>(b)];
            if (da != db) return da > db;
            return a < b;
        });
        color.assign(static_cast<std::size_t>(V), 0);
        forbidden.assign(static_cast<std::size_t>(V), 0);
    }

    // Applies the consequences of coloring v with c. Returns false on a
    // conflict (monochromatic support or a wiped-out uncolored vertex);
    // records forbidden-mask changes for undo.
    bool propagate(int v, int c, std::vector<std::pair<int, Mask>>& trail) {
        Mask domain = (m >= 64) ? ~Mask{0} : full_mask(m);
        for (int idx = sup_start[static_cast<std::size_t>(v)];
             idx < sup_start[static_cast<std::size_t>(v + 1)]; ++idx) {
            const auto& s = supports[static_cast<std::size_t>(sup_list[static_cast<std::size_t>(idx)])];
            int uncolored = -1;
            bool all_c = true;
            for (int w : s) {
                if (w == v) continue;
                int cw = color[static_cast<std::size_t>(w)];
                if (cw == 0) {
                    if (uncolored >= 0) {
                        all_c = false;
                        break;
                    }
                    uncolored = w;
                } else if (cw != c) {
                    all_c = false;
                    break;
                }
            }
            if (!all_c) continue;
            if (uncolored < 0) return false;  // support went monochromatic
            Mask bit = Mask{1} << (c - 1);
            Mask& f = forbidden[static_cast<std::size_t>(uncolored)];
            if ((f & bit) == 0) {
                trail.emplace_back(uncolored, f);
                f |= bit;
                if ((f & domain) == domain) return false;  // no color left
            }
        }
        return true;
    }

    static void unwind(std::vector<std::pair<int, Mask>>& trail, std::size_t from,
                       std::vector<Mask>& forbidden) {
        while (trail.size() > from) {
            auto [v, old] = trail.back();
            trail.pop_back();
            forbidden[static_cast<std::size_t>(v)] = old;
        }
    }

    bool search(int pos, int max_used, std::vector<std::pair<int, Mask>>& trail) {
        if (pos == V) return true;
        int v = order[static_cast<std::size_t>(pos)];
        int limit = opts.symmetry_breaking ? std::min(m, max_used + 1) : m;
        for (int c = 1; c <= limit; ++c) {
            if (++nodes > budget)
                throw BudgetExceeded("solver node budget exceeded", nodes);
            if (forbidden[static_cast<std::size_t>(v)] & (Mask{1} << (c - 1))) continue;
            std::size_t mark = trail.size();
            color[static_cast<std::size_t>(v)] = c;
            if (propagate(v, c, trail)) {
                if (search(pos + 1, std::max(max_used, c), trail)) return true;
            }
            color[static_cast<std::size_t>(v)] = 0;
            unwind(trail, mark, forbidden);
        }
        return false;
    }
};

}  // namespace

std::optional<Coloring> is_m_colorable(const Hypergraph& hg, int m,
                                       const SolveOptions& opts, long long* nodes_out) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    if (m > 62) throw std::invalid_argument("color count limited to 62");
    if (hg.num_vertices() == 0) {
        if (nodes_out) *nodes_out = 0;
        return Coloring{{}, m};
    }
    Searcher s(hg, m, opts, opts.node_budget);
    std::vector<std::pair<int, Mask>> trail;
    bool ok;
    try {
        ok = s.search(0, 0, trail);
    } catch (...) {
        if (nodes_out) *nodes_out = s.nodes;
        throw;
    }
    if (nodes_out) *nodes_out = s.nodes;
    if (!ok) return std::nullopt;
    Coloring c;
    c.colors = s.color;
    c.m = m;
    return c;
}

ChiResult chromatic_number(const Hypergraph& hg, const SolveOptions& opts) {
    ChiResult res;
    if (hg.num_vertices() == 0) {
        res.chi = 0;
        res.lower_bound_used = 0;
        return res;
    }
    if (hg.min_supports.empty()) {
        res.chi = 1;
        res.witness.colors.assign(static_cast<std::size_t>(hg.num_vertices()), 1);
        res.witness.m = 1;
        return res;
    }

    int V = hg.num_vertices();
    long long start = 1;
    if (!opts.audit && hg.spec) {
        if (auto seed = proven_lower_bound(*hg.spec))
            start = std::clamp<long long>(*seed, 1, V);
    }

    std::optional<Coloring> hint;
    if (opts.use_hint && hg.spec) {
        if (auto h = construction_upper_hint(*hg.spec, hg.vertices)) {
            if (is_proper(*h, hg)) hint = std::move(*h);
        }
    }
    if (hint && hint->colors_used() < start)
        throw std::logic_error(
            "verified coloring beats the proven seed; seed derivation is inconsistent");

    res.lower_bound_used = static_cast<int>(start);
    long long budget_left = opts.node_budget;
    auto finish = [&](int m, Coloring witness) {
        res.chi = m;
        res.witness = std::move(witness);
        res.witness.m = m;
        if (!is_proper(res.witness, hg) || res.witness.colors_used() > m)
            throw std::logic_error("witness failed verification");
        return res;
    };
    for (int m = static_cast<int>(start); m <= V; ++m) {
        if (hint && hint->colors_used() <= m) return finish(m, *hint);
        SolveOptions level = opts;
        level.node_budget = budget_left;
        long long used = 0;
        std::optional<Coloring> got;
        try {
            got = is_m_colorable(hg, m, level, &used);
        } catch (const BudgetExceeded&) {
            throw BudgetExceeded("chromatic search budget exceeded",
                                 res.nodes_explored + used);
        }
        res.nodes_explored += used;
        budget_left -= used;
        if (got) return finish(m, std::move(*got));
    }
    throw std::logic_error("no coloring found with |V| colors");
}

ChiResult solve_spec(const HypergraphSpec& spec, const SolveOptions& opts) {
    Hypergraph hg = build_minimal_supports(spec, opts.candidate_budget);
    return chromatic_number(hg, opts);
}

}  // namespace kgh
