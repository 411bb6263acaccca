// Acceptance suite: one line per criterion, exact values, pinned tolerances.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "kgh/bounds.hpp"
#include "kgh/core.hpp"
#include "kgh/reductions.hpp"
#include "kgh/solver.hpp"
#include "kgh/sweeps.hpp"
#include "kgh/tverberg.hpp"

using namespace kgh;

namespace {

int failures = 0;

void report(int id, bool pass, double seconds, const std::string& what,
            const std::string& detail = "") {
    std::printf("ACCEPT %02d %s (%7.2fs) %s%s%s\n", id, pass ? "PASS" : "FAIL", seconds,
                what.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

void run(int id, const std::string& what, double time_limit_s,
         const std::function<bool(std::string&)>& body) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                         .count();
    if (ok && time_limit_s > 0 && seconds > time_limit_s) {
        ok = false;
        detail = "time limit " + std::to_string(time_limit_s) + "s exceeded";
    }
    report(id, ok, seconds, what, detail);
}

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

bool criterion_1(std::string& detail) {
    for (int n = 5; n <= 12; ++n) {
        int chi = solve_spec(HypergraphSpec::kg(n, 2, 2)).chi;
        if (chi != n - 2) {
            detail = "n=" + std::to_string(n) + " chi=" + std::to_string(chi);
            return false;
        }
    }
    detail = "chi(KG^2(n,2)) = n-2 for all n in 5..12";
    return true;
}

bool criterion_2(std::string& detail) {
    for (int n = 6; n <= 10; ++n) {
        int chi = solve_spec(HypergraphSpec::kg(n, 2, 3)).chi;
        long long expected = ceil_div(n - 3, 2);
        if (chi != expected) {
            detail = "n=" + std::to_string(n) + " chi=" + std::to_string(chi);
            return false;
        }
    }
    detail = "chi(KG^3(n,2)) = ceil((n-3)/2) for all n in 6..10";
    return true;
}

bool criterion_3(std::string& detail) {
    SweepGrid grid;
    grid.rs = {2, 3};
    grid.ks = {1, 2};
    grid.max_n = 9;
    grid.max_n_r2 = 9;
    grid.all_partitions = true;
    auto rows = sweep_transversal_equality(grid);
    int checked = 0;
    for (const auto& row : rows) {
        if (row.verdict != Verdict::equality_confirmed) {
            detail = "bad row: " + sweep_row_csv(row);
            return false;
        }
        ++checked;
    }
    detail = std::to_string(checked) + " partition instances, zero VIOLATION rows";
    return checked > 0;
}

bool criterion_4(std::string& detail) {
    SweepGrid grid;
    grid.rs = {2, 3, 4};
    grid.ks = {1, 2};
    grid.max_n = 9;
    grid.max_n_r2 = 9;
    grid.solve.audit = true;  // chi derived independently of the formulas
    auto rows = sweep_caps_lower_bound(grid);
    int checked = 0, lz_flags = 0;
    for (const auto& row : rows) {
        if (row.verdict == Verdict::violation || row.verdict == Verdict::inconclusive) {
            detail = "bad row: " + sweep_row_csv(row);
            return false;
        }
        if (!row.chi || *row.chi < row.expected) {
            detail = "below bound: " + sweep_row_csv(row);
            return false;
        }
        if (row.lz_ok && !*row.lz_ok) ++lz_flags;
        ++checked;
    }
    detail = std::to_string(checked) + " audited instances, chi >= gek everywhere, " +
             std::to_string(lz_flags) + " lz-interpretation flags";
    return checked > 0;
}

bool criterion_5(std::string& detail) {
    long long multisets = 0;
    for (int n = 2; n <= 6; ++n) {
        for (int k = 1; k <= 2 && k <= n; ++k) {
            auto verts = enum_vertices(HypergraphSpec::kg(n, k, 2));
            int V = static_cast<int>(verts.size());
            for (int r = 2; r <= 4; ++r) {
                for (int s = 2; s <= r; ++s) {
                    std::vector<int> idx;
                    bool ok = true;
                    std::function<void(int)> rec = [&](int start) {
                        if (!ok) return;
                        if (static_cast<int>(idx.size()) == r) {
                            ++multisets;
                            bool swise_empty = true;
                            std::vector<int> pick;
                            std::function<void(int)> pr = [&](int from) {
                                if (!swise_empty) return;
                                if (static_cast<int>(pick.size()) == s) {
                                    Mask inter = full_mask(n);
                                    for (int p : pick)
                                        inter &= verts[static_cast<std::size_t>(
                                                           idx[static_cast<std::size_t>(p)])]
                                                     .mask;
                                    if (inter != 0) swise_empty = false;
                                    return;
                                }
                                for (int p = from; p < r; ++p) {
                                    pick.push_back(p);
                                    pr(p + 1);
                                    pick.pop_back();
                                }
                            };
                            pr(0);
                            bool capped = true;
                            for (int e = 1; e <= n && capped; ++e) {
                                int load = 0;
                                for (int p = 0; p < r; ++p)
                                    if (verts[static_cast<std::size_t>(
                                                  idx[static_cast<std::size_t>(p)])]
                                            .contains(e))
                                        ++load;
                                if (load > s - 1) capped = false;
                            }
                            if (swise_empty != capped) ok = false;
                            return;
                        }
                        for (int v = start; v < V; ++v) {
                            idx.push_back(v);
                            rec(v);
                            idx.pop_back();
                        }
                    };
                    rec(0);
                    if (!ok) {
                        detail = "disagreement at n=" + std::to_string(n) +
                                 " k=" + std::to_string(k) + " r=" + std::to_string(r) +
                                 " s=" + std::to_string(s);
                        return false;
                    }
                }
            }
        }
    }
    // The caps-1 and wide-t=1 identities via same_supports.
    for (int n = 4; n <= 6; ++n)
        for (int r = 2; r <= 4; ++r) {
            if (!same_supports(HypergraphSpec::kg_s(n, 2, SVector::uniform(1, n, r)),
                               HypergraphSpec::kg(n, 2, r))) {
                detail = "caps-1 identity failed";
                return false;
            }
        }
    detail = std::to_string(multisets) + " multisets compared, definitions agree";
    return true;
}

bool criterion_6(std::string& detail) {
    int pullbacks = 0;
    {
        SVector caps = SVector::uniform(2, 3, 3);
        auto source = build_minimal_supports(HypergraphSpec::kg_s(3, 2, caps));
        ProjectionMap pmap = ProjectionMap::consecutive({2, 2, 2});
        auto target = build_minimal_supports(
            HypergraphSpec::kg_partition(6, 2, 3, pmap.partition));
        bool ok = true;
        for_each_coloring(source.num_vertices(), 3, [&](const Coloring& c) {
            if (!ok || !is_proper(c, source)) return;
            auto res = pullback_coloring(c, 2, caps, pmap);
            if (!is_proper(res.coloring, target)) ok = false;
            ++pullbacks;
        });
        if (!ok) {
            detail = "improper pullback from KG^3_{(2,2,2)}(3,2)";
            return false;
        }
    }
    {
        SVector caps = SVector::uniform(1, 4, 2);
        auto source = build_minimal_supports(HypergraphSpec::kg_s(4, 2, caps));
        ProjectionMap pmap = ProjectionMap::consecutive({1, 1, 1, 1});
        auto target = build_minimal_supports(
            HypergraphSpec::kg_partition(4, 2, 2, pmap.partition));
        bool ok = true;
        for_each_coloring(source.num_vertices(), 3, [&](const Coloring& c) {
            if (!ok || !is_proper(c, source)) return;
            auto res = pullback_coloring(c, 2, caps, pmap);
            if (!is_proper(res.coloring, target)) ok = false;
            ++pullbacks;
        });
        if (!ok) {
            detail = "improper pullback from KG^2_{(1,1,1,1)}(4,2)";
            return false;
        }
    }
    detail = std::to_string(pullbacks) + " proper colorings pulled back, all proper";
    return pullbacks > 0;
}

bool criterion_7(std::string& detail) {
    std::mt19937_64 rng(2024);
    int trials = 0;
    for (int n = 8; n <= 12; ++n) {
        auto target = build_minimal_supports(
            HypergraphSpec::kg_partition(n, 1, 4, Partition::singletons(n)));
        long long bound = ceil_div(n, 3);
        for (int t = 0; t < 40; ++t) {
            int L = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(bound - 1));
            RefuteInput in;
            in.n = n;
            in.k = 1;
            in.r1 = 2;
            in.r2 = 2;
            in.coarse = Partition::singletons(n);
            in.coloring.m = L;
            for (int v = 0; v < target.num_vertices(); ++v)
                in.coloring.colors.push_back(
                    1 + static_cast<int>(rng() % static_cast<std::uint64_t>(L)));
            auto res = prime_induction_refute(in);
            if (res.status != RefuteStatus::witness || res.sets.size() != 4) {
                detail = "no witness at n=" + std::to_string(n);
                return false;
            }
            Mask seen = 0;
            for (Mask m : res.sets) {
                int idx = target.index_of(m);
                if (idx < 0 ||
                    in.coloring.colors[static_cast<std::size_t>(idx)] != res.color ||
                    (m & seen)) {
                    detail = "invalid witness at n=" + std::to_string(n);
                    return false;
                }
                seen |= m;
            }
            // Trace validation: stage-two edge disjoint with K1-sized members,
            // tuples inside their vertices, colors consistent.
            if (res.k1 != L + 1) {
                detail = "trace K1 mismatch";
                return false;
            }
            Mask edge_seen = 0;
            for (const auto& entry : res.stage_one) {
                if (entry.color != res.color || (entry.vertex & edge_seen) ||
                    popcount(entry.vertex) != res.k1 ||
                    static_cast<int>(entry.tuple.size()) != in.r2) {
                    detail = "trace shape failure";
                    return false;
                }
                edge_seen |= entry.vertex;
                for (Mask m : entry.tuple)
                    if (m & ~entry.vertex) {
                        detail = "trace tuple outside its vertex";
                        return false;
                    }
            }
            ++trials;
        }
    }
    detail = std::to_string(trials) + " random colorings, 4 disjoint monochromatic "
             "singletons extracted every time";
    return trials == 200;
}

bool criterion_8(std::string& detail) {
    int instances = 0;
    for (int n = 2; n <= 12; ++n)
        for (int r = 2; r <= 3; ++r)
            for (int k = 1; r * k <= n; ++k) {
                auto hg = build_minimal_supports(HypergraphSpec::kg(n, k, r));
                Coloring c = greedy_kneser_coloring(n, k, r);
                if (!is_proper(c, hg) || c.colors_used() != afl_lower(n, k, r)) {
                    detail = "greedy failed at n=" + std::to_string(n) +
                             " k=" + std::to_string(k) + " r=" + std::to_string(r);
                    return false;
                }
                ++instances;
            }
    detail = std::to_string(instances) +
             " instances: proper, exactly ceil((n-r(k-1))/(r-1)) colors";
    return instances > 0;
}

bool criterion_9(std::string& detail) {
    auto planar = tverberg_existence_sweep(2, 2, 100, 101);
    if (planar.nhat_with_partition != 100 || planar.nminus1_with_partition != 0) {
        detail = "planar Radon sweep: " + std::to_string(planar.nhat_with_partition) +
                 "/100 size-4, " + std::to_string(planar.nminus1_with_partition) +
                 "/100 size-3";
        return false;
    }
    auto line = tverberg_existence_sweep(3, 1, 100, 102);
    if (line.nhat_with_partition != 100) {
        detail = "line sweep: " + std::to_string(line.nhat_with_partition) + "/100 size-5";
        return false;
    }
    detail = "100/100 4-point Radon, 0/100 generic 3-point, 100/100 5-point line "
             "3-Tverberg";
    return true;
}

bool criterion_10(std::string& detail) {
    auto colorful = colorful_partitions(3, 1);
    std::set<std::string> got;
    for (const auto& p : colorful) got.insert(p.encode());
    if (got != std::set<std::string>{"1,4|2,5|3", "1,5|2,4|3"}) {
        detail = "colorful set of [5] mismatch";
        return false;
    }
    PointConfig cfg;
    cfg.d = 1;
    cfg.points = {{Rat(0)}, {Rat(1)}, {Rat(2)}};
    auto verdict = check_bln_property(cfg, 2);
    if (!verdict.exactly_colorful) {
        detail = "points 0<1<2 not exactly colorful";
        return false;
    }
    detail = "colorful partitions of [5] match; 0<1<2 checker returns exactly_colorful";
    return true;
}

bool criterion_11(std::string& detail) {
    SolveOptions audit;
    audit.audit = true;  // Schrijver instances are re-proved from m=1
    for (int n = 5; n <= 10; ++n) {
        int chi = solve_spec(HypergraphSpec::kg_stable(n, 2, 2, 2), audit).chi;
        if (chi != n - 2) {
            detail = "n=" + std::to_string(n) + " chi=" + std::to_string(chi);
            return false;
        }
    }
    detail = "chi(KG^2(n,2)_{2-stab}) = n-2 for all n in 5..10, audited from m=1";
    return true;
}

bool criterion_12(std::string& detail) {
    SweepGrid grid;  // default grids: r in {2,3,4}, k in {1,2,3}, n <= 12/10
    auto rows = run_all_sweeps(grid);
    int conjecture_rows = 0;
    for (const auto& row : rows) {
        if (row.verdict == Verdict::violation) {
            detail = "VIOLATION: " + sweep_row_csv(row);
            return false;
        }
        if (row.verdict == Verdict::conjecture_refuted) {
            detail = "refutation: " + sweep_row_csv(row);
            return false;
        }
        if (row.verdict == Verdict::inconclusive) {
            detail = "inconclusive: " + sweep_row_csv(row);
            return false;
        }
        if (row.sweep.rfind("conj_", 0) == 0 && row.verdict != Verdict::skipped) {
            ++conjecture_rows;
            if (row.verdict != Verdict::equality_confirmed &&
                row.verdict != Verdict::within_bounds) {
                detail = "bad conjecture row: " + sweep_row_csv(row);
                return false;
            }
        }
    }
    detail = std::to_string(rows.size()) + " rows, " + std::to_string(conjecture_rows) +
             " conjecture rows, zero VIOLATION";
    return conjecture_rows > 0;
}

}  // namespace

int main() {
    run(1, "Kneser baseline chi(KG^2(n,2)) = n-2, n in 5..12", 60, criterion_1);
    run(2, "three-uniform baseline chi(KG^3(n,2)) = ceil((n-3)/2), n in 6..10", 300,
        criterion_2);
    run(3, "transversal equality sweep, all block compositions, n <= 9", 0, criterion_3);
    run(4, "lower-bound sweep chi >= gek with lz side check, audited", 0, criterion_4);
    run(5, "s-wise empty intersection equals per-element caps, exhaustive", 0,
        criterion_5);
    run(6, "coloring pullback proper on both exhaustive instances", 0, criterion_6);
    run(7, "prime-induction extraction on 200 random colorings", 0, criterion_7);
    run(8, "greedy coloring proper and formula-optimal, n <= 12", 0, criterion_8);
    run(9, "Tverberg existence sweeps by exact-rational feasibility", 120, criterion_9);
    run(10, "colorful partition enumeration and checker verdicts", 0, criterion_10);
    run(11, "Schrijver instances chi = n-2, n in 5..10, audited", 0, criterion_11);
    run(12, "master regression: default sweep grids, zero VIOLATION", 1800, criterion_12);
    return failures;
}
