#include "kgh/sweeps.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <thread>

#include "kgh/serial.hpp"

namespace kgh {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::equality_confirmed: return "equality_confirmed";
        case Verdict::within_bounds: return "within_bounds";
        case Verdict::violation: return "VIOLATION";
        case Verdict::conjecture_refuted: return "conjecture_refuted";
        case Verdict::inconclusive: return "inconclusive";
        case Verdict::skipped: return "skipped";
    }
    throw std::logic_error("unknown verdict");
}

namespace {

bool is_prime(int r) {
    if (r < 2) return false;
    for (int p = 2; p * p <= r; ++p)
        if (r % p == 0) return false;
    return true;
}

SVector spec_caps(const HypergraphSpec& spec) {
    if (spec.svector) return *spec.svector;
    return SVector::uniform(1, spec.n, spec.r);
}

SweepRow make_row(std::string sweep, HypergraphSpec spec, CheckKind check,
                  long long expected) {
    SweepRow row;
    row.sweep = std::move(sweep);
    row.bounds = make_bound_report(spec.n, spec.k, spec.r, spec_caps(spec));
    row.spec = std::move(spec);
    row.check = check;
    row.expected = expected;
    row.pending = true;
    return row;
}

void evaluate_row(SweepRow& row, const SolveOptions& solve) {
    row.pending = false;
    ChiResult res;
    try {
        res = solve_spec(row.spec, solve);
    } catch (const BudgetExceeded& e) {
        row.verdict = Verdict::inconclusive;
        row.reason = std::string("budget: ") + e.what();
        row.nodes = e.reached();
        return;
    }
    row.chi = res.chi;
    row.nodes = res.nodes_explored;
    // The upper-bound side check only applies where a coloring construction
    // can exist at all (n >= rk).
    if (row.bounds.lz && row.spec.n >= row.spec.r * row.spec.k)
        row.lz_ok = res.chi <= *row.bounds.lz;

    switch (row.check) {
        case CheckKind::proven_equality:
            row.verdict = (res.chi == row.expected) ? Verdict::equality_confirmed
                                                    : Verdict::violation;
            break;
        case CheckKind::proven_lower:
            if (res.chi < row.expected)
                row.verdict = Verdict::violation;
            else
                row.verdict = (res.chi == row.expected) ? Verdict::equality_confirmed
                                                        : Verdict::within_bounds;
            break;
        case CheckKind::conjectured_equality:
            if (res.chi == row.expected) {
                row.verdict = Verdict::equality_confirmed;
            } else {
                row.verdict = Verdict::conjecture_refuted;
                row.witness = res.witness;
            }
            break;
    }
    if (row.verdict == Verdict::violation || row.verdict == Verdict::conjecture_refuted) {
        std::ostringstream os;
        os << "chi=" << res.chi << " expected=" << row.expected;
        row.reason = os.str();
    }
}

void evaluate_rows(std::vector<SweepRow>& rows, const SweepGrid& grid) {
    int threads = std::max(1, grid.threads);
    if (threads == 1) {
        for (auto& row : rows)
            if (row.pending) evaluate_row(row, grid.solve);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= rows.size()) break;
            if (rows[i].pending) evaluate_row(rows[i], grid.solve);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

SweepRow skipped_row(std::string sweep, HypergraphSpec spec, std::string reason) {
    SweepRow row;
    row.sweep = std::move(sweep);
    row.bounds = make_bound_report(spec.n, spec.k, spec.r, spec_caps(spec));
    row.spec = std::move(spec);
    row.verdict = Verdict::skipped;
    row.reason = std::move(reason);
    return row;
}

/// Compositions of n into parts each in [1, cap], in lexicographic order.
std::vector<std::vector<int>> compositions_capped(int n, int cap) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int left) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int s = 1; s <= std::min(cap, left); ++s) {
            cur.push_back(s);
            rec(left - s);
            cur.pop_back();
        }
    };
    rec(n);
    return out;
}

/// Consecutive blocks of size `cap` with a remainder block.
Partition max_block_partition(int n, int cap) {
    std::vector<int> sizes;
    int left = n;
    while (left > 0) {
        int s = std::min(cap, left);
        sizes.push_back(s);
        left -= s;
    }
    return Partition::consecutive(sizes);
}

}  // namespace

std::vector<SweepRow> sweep_transversal_equality(const SweepGrid& grid) {
    std::vector<SweepRow> rows;
    for (int r : grid.rs) {
        if (!is_prime(r)) continue;
        for (int k : grid.ks) {
            for (int n = r * k; n <= grid.max_n_for(r); ++n) {
                std::vector<std::vector<int>> compositions;
                if (grid.all_partitions && r > 2)
                    compositions = compositions_capped(n, r - 1);
                else
                    compositions = {std::vector<int>()};  // max-size default below
                for (auto& sizes : compositions) {
                    Partition p = sizes.empty() ? max_block_partition(n, r - 1)
                                                : Partition::consecutive(sizes);
                    rows.push_back(make_row(
                        "transversal_equality", HypergraphSpec::kg_partition(n, k, r, p),
                        CheckKind::proven_equality, afl_lower(n, k, r)));
                }
            }
        }
    }
    evaluate_rows(rows, grid);
    return rows;
}

std::vector<SweepRow> sweep_caps_lower_bound(const SweepGrid& grid) {
    std::vector<SweepRow> rows;
    for (int r : grid.rs) {
        long long caps_limit = b_of_r(r) - 1;
        for (int k : grid.ks) {
            for (int n = std::max(2, k); n <= grid.max_n_for(r); ++n) {
                for (int cap = 1; cap <= caps_limit; ++cap) {
                    // Composite-cap instances above k = 2 overrun the support
                    // candidate budget; keep them out of the default grid.
                    if (cap >= 2 && k > 2) continue;
                    SVector sv = SVector::uniform(cap, n, r);
                    rows.push_back(make_row("caps_lower_bound",
                                            HypergraphSpec::kg_s(n, k, sv),
                                            CheckKind::proven_lower,
                                            gek_lower(n, k, r, sv)));
                }
            }
        }
    }
    evaluate_rows(rows, grid);
    return rows;
}

std::vector<SweepRow> sweep_conjectures(const SweepGrid& grid, ConjectureKind kind) {
    std::vector<SweepRow> rows;
    for (int r : grid.rs) {
        for (int k : grid.ks) {
            switch (kind) {
                case ConjectureKind::stable_vertices:
                    for (int n = r * k; n <= grid.max_n_for(r); ++n)
                        rows.push_back(make_row(
                            "conj_stable", HypergraphSpec::kg_stable(n, k, r, r),
                            CheckKind::conjectured_equality, afl_lower(n, k, r)));
                    break;
                case ConjectureKind::bounded_parts:
                    for (int n = r * k; n <= grid.max_n_for(r); ++n)
                        rows.push_back(make_row(
                            "conj_parts",
                            HypergraphSpec::kg_partition(n, k, r,
                                                         max_block_partition(n, r)),
                            CheckKind::conjectured_equality, afl_lower(n, k, r)));
                    break;
                case ConjectureKind::avoid_set:
                    for (int n = 2 * r * k; n <= grid.max_n_for(r); ++n) {
                        for (int a = 1; a <= std::min(n, r * k); ++a) {
                            Mask avoid = full_mask(a);
                            long long expected = ceil_div(
                                n - std::max<long long>(
                                        static_cast<long long>(r) * (k - 1), a),
                                r - 1);
                            rows.push_back(make_row(
                                "conj_avoid_set",
                                HypergraphSpec::kg_avoid_a(n, k, r, avoid),
                                CheckKind::conjectured_equality, expected));
                        }
                    }
                    break;
            }
        }
    }
    evaluate_rows(rows, grid);
    return rows;
}

std::vector<SweepRow> sweep_wide_equality(const SweepGrid& grid) {
    std::vector<SweepRow> rows;
    for (int r : grid.rs) {
        if (!is_prime(r)) continue;
        for (int k : grid.ks) {
            long long t_max = static_cast<long long>(r) * (k - 3) + 2;
            if (t_max < 1) {
                rows.push_back(skipped_row("wide_equality",
                                           HypergraphSpec::kg(std::max(r * k, k), k, r),
                                           "t_max < 1"));
                continue;
            }
            for (int n = r * k; n <= grid.max_n_for(r); ++n) {
                Partition p = max_block_partition(n, std::max(1, r - 1));
                for (int t = 1; t <= t_max; ++t)
                    rows.push_back(make_row(
                        "wide_equality", HypergraphSpec::kg_wide(n, k, r, t, p),
                        CheckKind::proven_equality, afl_lower(n, k, r)));
            }
        }
    }
    evaluate_rows(rows, grid);
    return rows;
}

std::vector<SweepRow> run_all_sweeps(const SweepGrid& grid) {
    std::vector<SweepRow> rows = sweep_transversal_equality(grid);
    auto append = [&rows](std::vector<SweepRow> more) {
        for (auto& r : more) rows.push_back(std::move(r));
    };
    append(sweep_caps_lower_bound(grid));
    append(sweep_conjectures(grid, ConjectureKind::stable_vertices));
    append(sweep_conjectures(grid, ConjectureKind::bounded_parts));
    append(sweep_conjectures(grid, ConjectureKind::avoid_set));
    append(sweep_wide_equality(grid));
    return rows;
}

bool any_violation_or_refutation(const std::vector<SweepRow>& rows) {
    return std::any_of(rows.begin(), rows.end(), [](const SweepRow& r) {
        return r.verdict == Verdict::violation || r.verdict == Verdict::conjecture_refuted;
    });
}

bool any_inconclusive(const std::vector<SweepRow>& rows) {
    return std::any_of(rows.begin(), rows.end(), [](const SweepRow& r) {
        return r.verdict == Verdict::inconclusive;
    });
}

std::string sweep_csv_header() {
    return "sweep,family,n,k,r,s_repr,param,chi,expected,b_r,gek_lower,lz_upper,lz_ok,"
           "nodes,verdict,reason";
}

namespace {

std::string spec_param_repr(const HypergraphSpec& spec) {
    std::ostringstream os;
    switch (spec.family) {
        case Family::KG:
        case Family::KG_s:
            break;
        case Family::KG_partition: {
            bool first = true;
            for (Mask p : spec.partition->parts) {
                if (!first) os << ';';
                os << popcount(p);
                first = false;
            }
            break;
        }
        case Family::KG_stable:
            os << "stable_s=" << *spec.stable_s;
            break;
        case Family::KG_wide:
            os << "t=" << *spec.wide_t;
            if (spec.partition) {
                os << ";parts=";
                bool first = true;
                for (Mask p : spec.partition->parts) {
                    if (!first) os << ';';
                    os << popcount(p);
                    first = false;
                }
            }
            break;
        case Family::KG_avoidA:
            os << "|A|=" << popcount(*spec.avoid_A);
            break;
        case Family::KG_setsystem:
            os << "sets=" << spec.set_system->size();
            break;
    }
    return os.str();
}

}  // namespace

std::string sweep_row_csv(const SweepRow& row) {
    std::ostringstream os;
    os << row.sweep << ',' << family_name(row.spec.family) << ',' << row.spec.n << ','
       << row.spec.k << ',' << row.spec.r << ',';
    if (row.spec.svector && row.spec.svector->is_uniform())
        os << row.spec.svector->caps[0] + 1;
    os << ',' << spec_param_repr(row.spec) << ',';
    if (row.chi) os << *row.chi;
    os << ',' << row.expected << ',' << row.bounds.b_r << ',' << row.bounds.gek << ',';
    if (row.bounds.lz) os << *row.bounds.lz;
    os << ',';
    if (row.lz_ok) os << (*row.lz_ok ? "true" : "false");
    os << ',' << row.nodes << ',' << verdict_name(row.verdict) << ','
       << row.reason;
    return os.str();
}

std::string sweep_row_jsonl(const SweepRow& row) {
    Json j;
    j["sweep"] = row.sweep;
    j["spec"] = spec_to_json(row.spec);
    if (row.chi) j["chi"] = *row.chi;
    j["expected"] = row.expected;
    Json bounds;
    bounds["b_r"] = row.bounds.b_r;
    bounds["gek_lower"] = row.bounds.gek;
    bounds["afl_lower"] = row.bounds.afl;
    if (row.bounds.lz) bounds["lz_upper"] = *row.bounds.lz;
    bounds["applicable"] = row.bounds.applicable;
    j["bounds"] = bounds;
    j["verdict"] = verdict_name(row.verdict);
    if (!row.reason.empty()) j["reason"] = row.reason;
    j["nodes"] = row.nodes;
    if (row.lz_ok) j["lz_ok"] = *row.lz_ok;
    if (row.witness) j["witness"] = coloring_to_json(*row.witness);
    return j.dump();
}

}  // namespace kgh
