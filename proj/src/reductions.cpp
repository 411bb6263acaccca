#include "kgh/reductions.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "kgh/bounds.hpp"

namespace kgh {

ProjectionMap ProjectionMap::consecutive(const std::vector<int>& sizes) {
    return ProjectionMap{Partition::consecutive(sizes)};
}

Mask project_set(Mask sigma, const ProjectionMap& pmap) {
    Mask out = 0;
    for (std::size_t i = 0; i < pmap.partition.parts.size(); ++i)
        if (sigma & pmap.partition.parts[i]) out |= Mask{1} << i;
    return out;
}

PullbackResult pullback_coloring(const Coloring& source, int k, const SVector& svector,
                                 const ProjectionMap& pmap) {
    int n = static_cast<int>(svector.caps.size());
    if (pmap.target_n() != n)
        throw std::invalid_argument("projection must have one part per element of [n]");
    for (int i = 0; i < n; ++i)
        if (popcount(pmap.partition.parts[static_cast<std::size_t>(i)]) !=
            svector.caps[static_cast<std::size_t>(i)])
            throw std::invalid_argument("part sizes must equal the multiplicity caps");

    HypergraphSpec source_spec = HypergraphSpec::kg_s(n, k, svector);
    auto source_vertices = enum_vertices(source_spec);
    if (source.colors.size() != source_vertices.size())
        throw std::invalid_argument("source coloring must cover all k-subsets of [n]");
    std::map<Mask, int> source_index;
    for (std::size_t i = 0; i < source_vertices.size(); ++i)
        source_index[source_vertices[i].mask] = static_cast<int>(i);

    PullbackResult out;
    out.target_spec = HypergraphSpec::kg_partition(pmap.source_n(), k, svector.r,
                                                   pmap.partition);
    out.target = build_minimal_supports(out.target_spec);
    out.coloring.m = source.m;
    out.coloring.colors.reserve(out.target.vertices.size());
    for (const KSubset& v : out.target.vertices) {
        Mask image = project_set(v.mask, pmap);
        auto it = source_index.find(image);
        if (it == source_index.end())
            throw std::logic_error("transversal vertex projected outside the source");
        out.coloring.colors.push_back(source.colors[static_cast<std::size_t>(it->second)]);
    }
    return out;
}

namespace {

/// Greedy refinement of each part into subparts of size <= limit, filling in
/// increasing element order.
Partition refine_partition(const Partition& coarse, int limit) {
    std::vector<Mask> parts;
    for (Mask p : coarse.parts) {
        Mask cur = 0;
        int cnt = 0;
        for (int e : mask_elements(p)) {
            cur |= bit_of(e);
            if (++cnt == limit) {
                parts.push_back(cur);
                cur = 0;
                cnt = 0;
            }
        }
        if (cur) parts.push_back(cur);
    }
    return Partition(parts, coarse.n);
}

/// Lexicographically first tuple of `count` pairwise disjoint vertices drawn
/// from `candidate_indices`, all of one color (`want`, or any common color if
/// want == 0). Reports the tuple and its color.
std::optional<std::pair<std::vector<int>, int>> find_mono_disjoint_tuple(
    const std::vector<KSubset>& verts, const std::vector<int>& candidate_indices,
    const Coloring& coloring, int count, int want) {
    std::vector<int> chosen;
    int color = want;
    std::function<bool(std::size_t, Mask)> rec = [&](std::size_t start, Mask used) {
        if (static_cast<int>(chosen.size()) == count) return true;
        for (std::size_t i = start; i < candidate_indices.size(); ++i) {
            int vi = candidate_indices[i];
            const KSubset& v = verts[static_cast<std::size_t>(vi)];
            if (v.mask & used) continue;
            int c = coloring.colors[static_cast<std::size_t>(vi)];
            if (color != 0 && c != color) continue;
            int prev = color;
            color = c;
            chosen.push_back(vi);
            if (rec(i + 1, used | v.mask)) return true;
            chosen.pop_back();
            color = prev;
        }
        return false;
    };
    if (!rec(0, 0)) return std::nullopt;
    return std::make_pair(chosen, color);
}

}  // namespace

RefuteResult prime_induction_refute(const RefuteInput& in) {
    if (in.r1 < 2 || in.r2 < 2) throw std::invalid_argument("need r1, r2 >= 2");
    if (in.b1 < 1 || in.b2 < 1) throw std::invalid_argument("need b1, b2 >= 1");
    long long r = static_cast<long long>(in.r1) * in.r2;
    for (Mask p : in.coarse.parts)
        if (popcount(p) > in.b1 * in.b2)
            throw std::invalid_argument("coarse part exceeds b1*b2");

    HypergraphSpec target_spec = HypergraphSpec::kg_partition(
        in.n, in.k, static_cast<int>(r), in.coarse);
    auto target_vertices = enum_vertices(target_spec);
    if (in.coloring.colors.size() != target_vertices.size())
        throw std::invalid_argument("coloring does not match the target vertex list");

    int L = 0;
    for (int c : in.coloring.colors) L = std::max(L, c);

    RefuteResult out;
    if (L >= ceil_div(in.n - r * (in.k - 1), r - 1)) {
        out.status = RefuteStatus::hypothesis_violated;
        return out;
    }

    long long k1 = static_cast<long long>(L) * (in.r2 - 1) +
                   static_cast<long long>(in.r2) * (in.k - 1) + 1;
    out.k1 = static_cast<int>(k1);
    out.refinement = refine_partition(in.coarse, in.b1);

    // Stage 1: every K1-set transversal to the refinement carries a
    // monochromatic pairwise disjoint r2-tuple of colored k-sets.
    HypergraphSpec stage1_spec = HypergraphSpec::kg_partition(
        in.n, out.k1, in.r1, out.refinement);
    auto stage1_vertices = enum_vertices(stage1_spec);

    std::vector<int> induced_color(stage1_vertices.size(), 0);
    std::vector<std::vector<Mask>> induced_tuple(stage1_vertices.size());
    long long work = 0;
    for (std::size_t ai = 0; ai < stage1_vertices.size(); ++ai) {
        Mask a = stage1_vertices[ai].mask;
        std::vector<int> inside;
        for (std::size_t vi = 0; vi < target_vertices.size(); ++vi)
            if ((target_vertices[vi].mask & ~a) == 0) inside.push_back(static_cast<int>(vi));
        work += static_cast<long long>(inside.size());
        if (work > in.budget)
            throw BudgetExceeded("prime-induction stage-one budget exceeded", work);
        auto tuple = find_mono_disjoint_tuple(target_vertices, inside, in.coloring,
                                              in.r2, 0);
        if (!tuple) {  // cannot happen when the r2-hypothesis holds
            out.status = RefuteStatus::proper;
            return out;
        }
        induced_color[ai] = tuple->second;
        for (int vi : tuple->first)
            induced_tuple[ai].push_back(target_vertices[static_cast<std::size_t>(vi)].mask);
    }

    // Stage 2: a monochromatic edge of KG^{r1}(n, K1; refinement) under the
    // induced coloring, lexicographically first.
    std::vector<int> all_indices(stage1_vertices.size());
    for (std::size_t i = 0; i < all_indices.size(); ++i)
        all_indices[i] = static_cast<int>(i);
    Coloring induced;
    induced.colors = induced_color;
    induced.m = L;
    auto edge = find_mono_disjoint_tuple(stage1_vertices, all_indices, induced, in.r1, 0);
    if (!edge) {
        out.status = RefuteStatus::proper;
        return out;
    }

    out.status = RefuteStatus::witness;
    out.color = edge->second;
    for (int ai : edge->first) {
        StageOneEntry entry;
        entry.vertex = stage1_vertices[static_cast<std::size_t>(ai)].mask;
        entry.tuple = induced_tuple[static_cast<std::size_t>(ai)];
        entry.color = induced_color[static_cast<std::size_t>(ai)];
        out.stage_two_edge.push_back(entry.vertex);
        for (Mask m : entry.tuple) out.sets.push_back(m);
        out.stage_one.push_back(std::move(entry));
    }
    return out;
}

HypergraphSpec avoid_a_embed(int n, int k, int r, Mask avoid_a, int b) {
    if (b < 1) throw std::invalid_argument("block size b must be >= 1");
    int a = popcount(avoid_a);
    if (a > b * (k - 1))
        throw std::invalid_argument("avoid set larger than b*(k-1)");

    std::vector<int> pool = mask_elements(avoid_a);
    for (int e = 1; e <= n; ++e)
        if (!(avoid_a & bit_of(e))) pool.push_back(e);

    std::vector<Mask> parts;
    std::size_t pos = 0;
    for (int i = 0; i < k - 1 && pos < pool.size(); ++i) {
        Mask p = 0;
        for (int j = 0; j < b && pos < pool.size(); ++j)
            p |= bit_of(pool[pos++]);
        if (p) parts.push_back(p);
    }
    while (pos < pool.size()) {
        Mask p = 0;
        for (int j = 0; j < b && pos < pool.size(); ++j)
            p |= bit_of(pool[pos++]);
        parts.push_back(p);
    }
    return HypergraphSpec::kg_partition(n, k, r, Partition(parts, n));
}

}  // namespace kgh
