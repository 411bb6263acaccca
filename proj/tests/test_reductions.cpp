#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "kgh/bounds.hpp"
#include "kgh/reductions.hpp"
#include "kgh/solver.hpp"

using namespace kgh;

namespace {

// All colorings of V vertices with colors in [m].
void for_each_coloring(int V, int m, const std::function<void(const Coloring&)>& fn) {
    Coloring c;
    c.m = m;
    c.colors.assign(static_cast<std::size_t>(V), 1);
    while (true) {
        fn(c);
        int pos = 0;
        while (pos < V && c.colors[static_cast<std::size_t>(pos)] == m) {
            c.colors[static_cast<std::size_t>(pos)] = 1;
            ++pos;
        }
        if (pos == V) return;
        ++c.colors[static_cast<std::size_t>(pos)];
    }
}

bool pairwise_disjoint(const std::vector<Mask>& sets) {
    Mask seen = 0;
    for (Mask m : sets) {
        if (m & seen) return false;
        seen |= m;
    }
    return true;
}

}  // namespace

TEST_SUITE_BEGIN("reductions");

TEST_CASE("project_set images") {
    ProjectionMap pmap{Partition({mask_from_elements({1, 2}, 5), bit_of(3),
                                  mask_from_elements({4, 5}, 5)},
                                 5)};
    CHECK(project_set(mask_from_elements({1, 3}, 5), pmap) ==
          mask_from_elements({1, 2}, 3));
    CHECK(project_set(mask_from_elements({1, 2}, 5), pmap) == bit_of(1));  // collapse

    ProjectionMap identity{Partition::singletons(4)};
    for (Mask m = 0; m < 16; ++m) CHECK(project_set(m, identity) == m);
}

TEST_CASE("identity pullback returns the source coloring") {
    SVector caps = SVector::uniform(1, 4, 2);
    auto source_hg = build_minimal_supports(HypergraphSpec::kg_s(4, 2, caps));
    Coloring c = chromatic_number(source_hg).witness;
    auto res = pullback_coloring(c, 2, caps, ProjectionMap::consecutive({1, 1, 1, 1}));
    CHECK(res.coloring.colors == c.colors);
    CHECK(res.target_spec.n == 4);
}

TEST_CASE("pullback sends proper colorings to proper colorings, exhaustively") {
    // KG^3_{(2,2,2)}(3,2): 3 vertices, one support {all three}.
    SVector caps = SVector::uniform(2, 3, 3);
    auto source = build_minimal_supports(HypergraphSpec::kg_s(3, 2, caps));
    REQUIRE(source.num_vertices() == 3);
    REQUIRE(source.min_supports == std::vector<std::vector<int>>{{0, 1, 2}});
    ProjectionMap pmap = ProjectionMap::consecutive({2, 2, 2});
    auto target = build_minimal_supports(
        HypergraphSpec::kg_partition(6, 2, 3, pmap.partition));

    int proper_count = 0;
    for_each_coloring(source.num_vertices(), 3, [&](const Coloring& c) {
        if (!is_proper(c, source)) return;
        ++proper_count;
        auto res = pullback_coloring(c, 2, caps, pmap);
        CHECK(is_proper(res.coloring, target));
        // No new colors appear.
        std::set<int> source_colors(c.colors.begin(), c.colors.end());
        for (int col : res.coloring.colors) CHECK(source_colors.count(col) == 1);
    });
    CHECK(proper_count == 24);  // 3^3 minus the 3 constant colorings

    // KG^2_{(1,1,1,1)}(4,2) pulls back along the identity.
    SVector unit = SVector::uniform(1, 4, 2);
    auto source2 = build_minimal_supports(HypergraphSpec::kg_s(4, 2, unit));
    ProjectionMap id = ProjectionMap::consecutive({1, 1, 1, 1});
    auto target2 = build_minimal_supports(
        HypergraphSpec::kg_partition(4, 2, 2, id.partition));
    for_each_coloring(source2.num_vertices(), 3, [&](const Coloring& c) {
        if (!is_proper(c, source2)) return;
        auto res = pullback_coloring(c, 2, unit, id);
        CHECK(is_proper(res.coloring, target2));
    });
}

TEST_CASE("pullback rejects mismatched part sizes") {
    SVector caps = SVector::uniform(2, 3, 3);
    Coloring c;
    c.m = 1;
    c.colors = {1, 1, 1};
    CHECK_THROWS_AS(pullback_coloring(c, 2, caps, ProjectionMap::consecutive({2, 2, 1})),
                    std::invalid_argument);
}

TEST_CASE("prime induction on the constant coloring of 8 singletons") {
    RefuteInput in;
    in.n = 8;
    in.k = 1;
    in.r1 = 2;
    in.r2 = 2;
    in.coarse = Partition::singletons(8);
    in.coloring.m = 1;
    in.coloring.colors.assign(8, 1);
    auto res = prime_induction_refute(in);
    REQUIRE(res.status == RefuteStatus::witness);
    CHECK(res.k1 == 2);  // L(r2-1) + r2(k-1) + 1 with L = 1
    REQUIRE(res.sets.size() == 4);
    CHECK(res.sets == std::vector<Mask>{bit_of(1), bit_of(2), bit_of(3), bit_of(4)});
    CHECK(pairwise_disjoint(res.sets));
}

TEST_CASE("prime induction extracts witnesses from random small colorings") {
    std::mt19937 rng(11);
    auto target = build_minimal_supports(
        HypergraphSpec::kg_partition(9, 1, 4, Partition::singletons(9)));
    for (int trial = 0; trial < 25; ++trial) {
        RefuteInput in;
        in.n = 9;
        in.k = 1;
        in.r1 = 2;
        in.r2 = 2;
        in.coarse = Partition::singletons(9);
        in.coloring.m = 2;
        for (int v = 0; v < target.num_vertices(); ++v)
            in.coloring.colors.push_back(1 + static_cast<int>(rng() % 2));
        auto res = prime_induction_refute(in);
        REQUIRE(res.status == RefuteStatus::witness);
        REQUIRE(res.sets.size() == 4);
        CHECK(pairwise_disjoint(res.sets));
        // All four sets share the witness color.
        for (Mask m : res.sets) {
            int idx = target.index_of(m);
            REQUIRE(idx >= 0);
            CHECK(in.coloring.colors[static_cast<std::size_t>(idx)] == res.color);
        }
        // Trace validates: stage-two edge members are disjoint and each
        // stage-one tuple lives inside its vertex.
        CHECK(pairwise_disjoint(res.stage_two_edge));
        for (const auto& entry : res.stage_one) {
            CHECK(entry.color == res.color);
            for (Mask m : entry.tuple) CHECK((m & ~entry.vertex) == 0);
        }
    }
}

TEST_CASE("prime induction refines a coarse partition and stays transversal") {
    // Parts of size 2 with b1 = 2, b2 = 1: the refinement keeps the parts,
    // stage-one vertices meet each part at most once.
    RefuteInput in;
    in.n = 8;
    in.k = 1;
    in.r1 = 2;
    in.r2 = 2;
    in.b1 = 2;
    in.b2 = 1;
    in.coarse = Partition::consecutive({2, 2, 2, 2});
    in.coloring.m = 1;
    in.coloring.colors.assign(8, 1);
    auto res = prime_induction_refute(in);
    REQUIRE(res.status == RefuteStatus::witness);
    CHECK(res.refinement == in.coarse);
    REQUIRE(res.sets.size() == 4);
    CHECK(pairwise_disjoint(res.sets));
    for (Mask a : res.stage_two_edge)
        for (Mask part : in.coarse.parts) CHECK(popcount(a & part) <= 1);

    // With b1 = 1 the same parts refine into singletons.
    in.b1 = 1;
    in.b2 = 2;
    auto res2 = prime_induction_refute(in);
    REQUIRE(res2.status == RefuteStatus::witness);
    CHECK(res2.refinement.parts.size() == 8);
    CHECK(pairwise_disjoint(res2.sets));
}

TEST_CASE("prime induction gates on the coloring being below the bound") {
    RefuteInput in;
    in.n = 8;
    in.k = 1;
    in.r1 = 2;
    in.r2 = 2;
    in.coarse = Partition::singletons(8);
    in.coloring.m = 3;
    // ceil(8/3) = 3 colors is not below the bound.
    for (int v = 0; v < 8; ++v) in.coloring.colors.push_back(1 + v % 3);
    CHECK(prime_induction_refute(in).status == RefuteStatus::hypothesis_violated);
}

TEST_CASE("avoid-A embedding produces a transversal subhypergraph") {
    Mask a = mask_from_elements({1, 2}, 8);
    auto spec = avoid_a_embed(8, 2, 2, a, 2);
    REQUIRE(spec.partition.has_value());
    CHECK(spec.partition->parts[0] == a);  // A packed first

    auto embedded = build_minimal_supports(spec);
    auto ambient = build_minimal_supports(HypergraphSpec::kg_avoid_a(8, 2, 2, a));
    std::set<Mask> ambient_verts;
    for (const auto& v : ambient.vertices) ambient_verts.insert(v.mask);
    for (const auto& v : embedded.vertices) {
        CHECK(ambient_verts.count(v.mask) == 1);
        CHECK((v.mask & ~a) != 0);  // never inside A
    }
    // Every embedded support is a support of the ambient hypergraph.
    std::set<std::vector<Mask>> ambient_supports;
    for (const auto& s : ambient.min_supports) {
        std::vector<Mask> masks;
        for (int v : s) masks.push_back(ambient.vertices[static_cast<std::size_t>(v)].mask);
        ambient_supports.insert(masks);
    }
    for (const auto& s : embedded.min_supports) {
        std::vector<Mask> masks;
        for (int v : s) masks.push_back(embedded.vertices[static_cast<std::size_t>(v)].mask);
        CHECK(ambient_supports.count(masks) == 1);
    }

    CHECK_NOTHROW(avoid_a_embed(8, 2, 2, 0, 2));  // empty A is legal
    CHECK_THROWS_AS(avoid_a_embed(8, 2, 2, mask_from_elements({1, 2, 3}, 8), 2),
                    std::invalid_argument);  // |A| = b(k-1)+1
}

TEST_SUITE_END();
