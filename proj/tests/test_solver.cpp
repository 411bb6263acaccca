#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "kgh/bounds.hpp"
#include "kgh/solver.hpp"

using namespace kgh;

namespace {

// Independent oracle: scan all m^V colorings for m = 1, 2, ... until one is
// proper under the direct definition.
bool brute_m_colorable(const Hypergraph& hg, int m) {
    int V = hg.num_vertices();
    std::vector<int> c(static_cast<std::size_t>(V), 1);
    while (true) {
        bool proper = true;
        for (const auto& s : hg.min_supports) {
            int c0 = c[static_cast<std::size_t>(s[0])];
            bool mono = true;
            for (int v : s)
                if (c[static_cast<std::size_t>(v)] != c0) {
                    mono = false;
                    break;
                }
            if (mono) {
                proper = false;
                break;
            }
        }
        if (proper) return true;
        int pos = 0;
        while (pos < V && c[static_cast<std::size_t>(pos)] == m) {
            c[static_cast<std::size_t>(pos)] = 1;
            ++pos;
        }
        if (pos == V) return false;
        ++c[static_cast<std::size_t>(pos)];
    }
}

int brute_chi(const Hypergraph& hg) {
    if (hg.num_vertices() == 0) return 0;
    for (int m = 1; m <= hg.num_vertices(); ++m)
        if (brute_m_colorable(hg, m)) return m;
    return hg.num_vertices();
}

Hypergraph raw_hypergraph(int n, std::vector<Mask> vertex_masks,
                          std::vector<std::vector<int>> supports) {
    Hypergraph hg;
    for (Mask m : vertex_masks) hg.vertices.emplace_back(m, n);
    hg.min_supports = std::move(supports);
    return hg;
}

}  // namespace

TEST_SUITE_BEGIN("solver");

TEST_CASE("is_proper matches the direct definition") {
    auto hg = build_minimal_supports(HypergraphSpec::kg(5, 2, 2));  // Petersen
    Coloring distinct;
    distinct.m = hg.num_vertices();
    for (int i = 0; i < hg.num_vertices(); ++i) distinct.colors.push_back(i + 1);
    CHECK(is_proper(distinct, hg));

    Coloring constant;
    constant.m = 1;
    constant.colors.assign(static_cast<std::size_t>(hg.num_vertices()), 1);
    CHECK_FALSE(is_proper(constant, hg));

    // The min-element-capped 3-coloring of the Petersen instance is proper.
    Coloring greedy = greedy_kneser_coloring(5, 2, 2);
    CHECK(is_proper(greedy, hg));

    Coloring short_coloring;
    short_coloring.m = 1;
    short_coloring.colors = {1, 1};
    CHECK_THROWS_AS(is_proper(short_coloring, hg), std::invalid_argument);
}

TEST_CASE("m-colorability on the Petersen instance") {
    auto hg = build_minimal_supports(HypergraphSpec::kg(5, 2, 2));
    CHECK_FALSE(is_m_colorable(hg, 2).has_value());
    auto c3 = is_m_colorable(hg, 3);
    REQUIRE(c3.has_value());
    CHECK(is_proper(*c3, hg));
}

TEST_CASE("edge-free and empty hypergraphs") {
    auto edge_free = build_minimal_supports(HypergraphSpec::kg(5, 3, 2));
    auto res = chromatic_number(edge_free);
    CHECK(res.chi == 1);
    CHECK(is_proper(res.witness, edge_free));

    Hypergraph empty;
    CHECK(chromatic_number(empty).chi == 0);

    auto one = is_m_colorable(edge_free, 1);
    REQUIRE(one.has_value());
    CHECK(one->colors == std::vector<int>(edge_free.vertices.size(), 1));
}

TEST_CASE("chromatic numbers of the small named instances") {
    CHECK(solve_spec(HypergraphSpec::kg(5, 2, 2)).chi == 3);
    CHECK(solve_spec(HypergraphSpec::kg(6, 2, 3)).chi == 2);
    CHECK(solve_spec(HypergraphSpec::kg(6, 2, 2)).chi == 4);
}

TEST_CASE("solver equals the brute-force scan at desk scale") {
    std::vector<HypergraphSpec> specs{
        HypergraphSpec::kg(5, 2, 2),                                   // 10 vertices
        HypergraphSpec::kg(6, 2, 3),                                   // 15 vertices... skip
        HypergraphSpec::kg_s(4, 2, SVector::uniform(1, 4, 2)),         // 6 vertices
        HypergraphSpec::kg_stable(7, 2, 2, 2),                         // 7 vertices
        HypergraphSpec::kg_partition(6, 2, 3, Partition::consecutive({2, 2, 2})),
        HypergraphSpec::kg_avoid_a(5, 2, 2, mask_from_elements({1, 2, 3}, 5)),
        HypergraphSpec::kg_stable(8, 2, 3, 3),                         // 8 vertices
        HypergraphSpec::kg_s(4, 1, SVector::uniform(2, 4, 3)),
    };
    for (const auto& spec : specs) {
        auto hg = build_minimal_supports(spec);
        if (hg.num_vertices() > 12) continue;
        SolveOptions opts;
        opts.audit = true;
        opts.use_hint = false;
        CHECK(chromatic_number(hg, opts).chi == brute_chi(hg));
    }
}

TEST_CASE("solver equals brute force on random small hypergraphs") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        int V = 4 + static_cast<int>(rng() % 6);  // 4..9 vertices
        int S = 2 + static_cast<int>(rng() % 10);
        std::set<std::vector<int>> supports;
        for (int s = 0; s < S; ++s) {
            int size = 2 + static_cast<int>(rng() % 2);
            std::set<int> pick;
            while (static_cast<int>(pick.size()) < size)
                pick.insert(static_cast<int>(rng() % V));
            supports.insert(std::vector<int>(pick.begin(), pick.end()));
        }
        Hypergraph hg;
        for (int v = 0; v < V; ++v) hg.vertices.emplace_back(bit_of(v + 1), V);
        hg.min_supports.assign(supports.begin(), supports.end());

        SolveOptions opts;
        opts.audit = true;
        opts.use_hint = false;
        int fast = chromatic_number(hg, opts).chi;
        CHECK(fast == brute_chi(hg));
    }
}

TEST_CASE("symmetry breaking preserves the yes/no answer") {
    std::vector<HypergraphSpec> specs{
        HypergraphSpec::kg(5, 2, 2),
        HypergraphSpec::kg_s(4, 2, SVector::uniform(1, 4, 2)),
        HypergraphSpec::kg_stable(8, 2, 2, 2),
        HypergraphSpec::kg_s(5, 1, SVector::uniform(2, 5, 3)),
    };
    for (const auto& spec : specs) {
        auto hg = build_minimal_supports(spec);
        if (hg.num_vertices() > 10) continue;
        for (int m = 1; m <= 4; ++m) {
            SolveOptions with, without;
            without.symmetry_breaking = false;
            CHECK(is_m_colorable(hg, m, with).has_value() ==
                  is_m_colorable(hg, m, without).has_value());
        }
    }
}

TEST_CASE("witness soundness and determinism") {
    for (const auto& spec : {HypergraphSpec::kg(6, 2, 2),
                             HypergraphSpec::kg_s(6, 2, SVector::uniform(2, 6, 3)),
                             HypergraphSpec::kg_stable(8, 2, 2, 2)}) {
        auto hg = build_minimal_supports(spec);
        auto a = chromatic_number(hg);
        auto b = chromatic_number(hg);
        CHECK(is_proper(a.witness, hg));
        CHECK(a.witness.colors_used() <= a.chi);
        CHECK(a.chi == b.chi);
        CHECK(a.witness == b.witness);
        CHECK(a.nodes_explored == b.nodes_explored);
    }
}

TEST_CASE("monochromatic support extraction") {
    auto hg = build_minimal_supports(HypergraphSpec::kg(6, 2, 3));
    Coloring constant;
    constant.m = 1;
    constant.colors.assign(static_cast<std::size_t>(hg.num_vertices()), 1);
    auto mono = find_monochromatic_support(constant, hg);
    REQUIRE(mono.has_value());
    // Lexicographically first perfect matching: {1,2},{3,4},{5,6}.
    std::vector<Mask> sets;
    for (int v : mono->support) sets.push_back(hg.vertices[static_cast<std::size_t>(v)].mask);
    CHECK(sets == std::vector<Mask>{mask_from_elements({1, 2}, 6),
                                    mask_from_elements({3, 4}, 6),
                                    mask_from_elements({5, 6}, 6)});
    CHECK(mono->multiplicities == std::vector<int>{1, 1, 1});

    auto chi = chromatic_number(hg);
    CHECK_FALSE(find_monochromatic_support(chi.witness, hg).has_value());

    // Capped instance: a 1-coloring has a support of size 2 or 3 with
    // multiplicities summing to 3.
    auto capped = build_minimal_supports(
        HypergraphSpec::kg_s(6, 2, SVector::uniform(2, 6, 3)));
    Coloring one;
    one.m = 1;
    one.colors.assign(static_cast<std::size_t>(capped.num_vertices()), 1);
    auto w = find_monochromatic_support(one, capped);
    REQUIRE(w.has_value());
    CHECK((w->support.size() == 2 || w->support.size() == 3));
    int total = 0;
    for (int m : w->multiplicities) total += m;
    CHECK(total == 3);
}

TEST_CASE("monotonicity: supports added, vertices deleted") {
    std::mt19937 rng(7);
    auto base = build_minimal_supports(HypergraphSpec::kg(6, 2, 2));
    SolveOptions opts;
    opts.audit = true;
    int chi_base = chromatic_number(base, opts).chi;

    for (int trial = 0; trial < 5; ++trial) {
        // Delete a random vertex subset: chi never increases.
        std::vector<int> keep;
        for (int v = 0; v < base.num_vertices(); ++v)
            if (rng() % 4 != 0) keep.push_back(v);
        std::vector<int> remap(static_cast<std::size_t>(base.num_vertices()), -1);
        Hypergraph sub;
        sub.vertices.reserve(keep.size());
        for (std::size_t i = 0; i < keep.size(); ++i) {
            remap[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
            sub.vertices.push_back(base.vertices[static_cast<std::size_t>(keep[i])]);
        }
        for (const auto& s : base.min_supports) {
            std::vector<int> mapped;
            bool ok = true;
            for (int v : s) {
                if (remap[static_cast<std::size_t>(v)] < 0) {
                    ok = false;
                    break;
                }
                mapped.push_back(remap[static_cast<std::size_t>(v)]);
            }
            if (ok) sub.min_supports.push_back(mapped);
        }
        CHECK(chromatic_number(sub, opts).chi <= chi_base);

        // Add extra supports: chi never decreases.
        Hypergraph extended = base;
        for (int extra = 0; extra < 3; ++extra) {
            std::vector<int> s;
            while (s.size() < 2) {
                int v = static_cast<int>(rng() % base.num_vertices());
                if (std::find(s.begin(), s.end(), v) == s.end()) s.push_back(v);
            }
            std::sort(s.begin(), s.end());
            extended.min_supports.push_back(s);
        }
        CHECK(chromatic_number(extended, opts).chi >= chi_base);
    }
}

TEST_CASE("node budget exhaustion is an explicit outcome") {
    auto hg = build_minimal_supports(HypergraphSpec::kg(7, 2, 2));
    SolveOptions opts;
    opts.audit = true;
    opts.use_hint = false;
    opts.node_budget = 5;
    CHECK_THROWS_AS(chromatic_number(hg, opts), BudgetExceeded);
}

TEST_CASE("raw hypergraphs from supports solve without a spec") {
    // Triangle as a 2-uniform hypergraph: chi = 3.
    auto hg = raw_hypergraph(3, {bit_of(1), bit_of(2), bit_of(3)},
                             {{0, 1}, {0, 2}, {1, 2}});
    CHECK(chromatic_number(hg).chi == 3);
}

TEST_SUITE_END();
