// kgh: exact chromatic numbers, bound formulas, reduction procedures and
// rational Tverberg checks for Kneser-type hypergraphs.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "kgh/bounds.hpp"
#include "kgh/core.hpp"
#include "kgh/lp.hpp"
#include "kgh/reductions.hpp"
#include "kgh/serial.hpp"
#include "kgh/solver.hpp"
#include "kgh/sweeps.hpp"
#include "kgh/tverberg.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFinding = 1;   // violation, refutation, improper coloring
constexpr int kExitConfig = 2;    // parse or configuration error
constexpr int kExitBudget = 3;    // inconclusive, budget exhausted

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << content;
}

std::vector<int> parse_int_list(const std::string& s, char sep = ',') {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    return out;
}

/// "1,2|3,4|5" -> partition parts.
kgh::Partition parse_partition(const std::string& s, int n) {
    std::vector<kgh::Mask> parts;
    std::stringstream ss(s);
    std::string block;
    while (std::getline(ss, block, '|')) {
        if (block.empty()) continue;
        parts.push_back(kgh::mask_from_elements(parse_int_list(block), n));
    }
    return kgh::Partition(parts, n);
}

struct SpecFlags {
    std::string family = "KG";
    int n = 0, k = 0, r = 0;
    std::string svector;     // "2" uniform or "2,1,2"
    std::string partition;   // "1,2|3,4"
    int stable_s = 0;
    int wide_t = 0;
    std::string avoid_a;     // "1,2"
    std::string sets;        // "1,2|2,3"
    std::string spec_file;
};

void add_spec_flags(CLI::App* cmd, SpecFlags& f) {
    cmd->add_option("--spec", f.spec_file, "spec JSON file (overrides other flags)");
    cmd->add_option("--family", f.family,
                    "KG|KG_s|KG_partition|KG_stable|KG_wide|KG_avoidA|KG_setsystem");
    cmd->add_option("--n", f.n, "ground set size");
    cmd->add_option("--k", f.k, "subset size");
    cmd->add_option("--r", f.r, "hyperedge arity");
    cmd->add_option("--s", f.svector, "multiplicity caps: uniform value or comma list");
    cmd->add_option("--partition", f.partition, "partition blocks, e.g. 1,2|3,4|5");
    cmd->add_option("--stable-s", f.stable_s, "cyclic stability parameter");
    cmd->add_option("--wide-t", f.wide_t, "wideness parameter");
    cmd->add_option("--avoid-a", f.avoid_a, "avoided set A, e.g. 1,2");
    cmd->add_option("--sets", f.sets, "explicit set system, e.g. 1,2|2,3");
}

kgh::HypergraphSpec spec_from_flags(const SpecFlags& f) {
    if (!f.spec_file.empty())
        return kgh::spec_from_json(kgh::Json::parse(read_file(f.spec_file)));
    kgh::HypergraphSpec spec;
    spec.family = kgh::family_from_name(f.family);
    spec.n = f.n;
    spec.k = f.k;
    spec.r = f.r;
    if (!f.svector.empty()) {
        auto caps = parse_int_list(f.svector);
        if (caps.size() == 1) caps.assign(static_cast<std::size_t>(f.n), caps[0]);
        spec.svector = kgh::SVector(caps, f.r);
    }
    if (!f.partition.empty()) spec.partition = parse_partition(f.partition, f.n);
    if (f.stable_s > 0) spec.stable_s = f.stable_s;
    if (f.wide_t > 0) spec.wide_t = f.wide_t;
    if (!f.avoid_a.empty())
        spec.avoid_A = kgh::mask_from_elements(parse_int_list(f.avoid_a), f.n);
    if (!f.sets.empty()) {
        std::vector<kgh::Mask> sets;
        std::stringstream ss(f.sets);
        std::string block;
        while (std::getline(ss, block, '|'))
            sets.push_back(kgh::mask_from_elements(parse_int_list(block), f.n));
        spec.set_system = std::move(sets);
    }
    spec.validate();
    return spec;
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        write_file(out_path, content);
}

int cmd_gen(const SpecFlags& flags, const std::string& format, const std::string& out,
            long long candidate_budget) {
    kgh::HypergraphSpec spec = spec_from_flags(flags);
    kgh::Hypergraph hg = kgh::build_minimal_supports(spec, candidate_budget);
    if (format == "hkg") {
        emit(out, kgh::to_hkg(hg));
    } else if (format == "json") {
        kgh::Json j;
        j["spec"] = kgh::spec_to_json(spec);
        kgh::Json verts = kgh::Json::array();
        for (const auto& v : hg.vertices) verts.push_back(v.elements());
        j["vertices"] = verts;
        j["supports"] = hg.min_supports;
        emit(out, j.dump(2) + "\n");
    } else {
        throw std::invalid_argument("gen supports --format hkg|json");
    }
    std::cerr << "gen: " << hg.num_vertices() << " vertices, " << hg.num_supports()
              << " supports\n";
    return kExitOk;
}

int cmd_chi(const SpecFlags& flags, const std::string& hkg_path, bool audit,
            bool no_hint, long long node_budget, long long candidate_budget,
            const std::string& witness_out) {
    kgh::SolveOptions opts;
    opts.audit = audit;
    opts.use_hint = !no_hint;
    opts.node_budget = node_budget;
    opts.candidate_budget = candidate_budget;

    kgh::ChiResult res;
    if (!hkg_path.empty()) {
        kgh::Hypergraph hg = kgh::hkg_from_string(read_file(hkg_path));
        res = kgh::chromatic_number(hg, opts);
    } else {
        res = kgh::solve_spec(spec_from_flags(flags), opts);
    }
    std::cout << "chi=" << res.chi << " nodes=" << res.nodes_explored
              << " seed=" << res.lower_bound_used << "\n";
    if (!witness_out.empty())
        write_file(witness_out, kgh::chi_result_to_json(res).dump(2) + "\n");
    return kExitOk;
}

int cmd_bounds(int n, int k, int r, const std::string& svector) {
    auto caps = parse_int_list(svector.empty() ? "1" : svector);
    if (caps.size() == 1) {
        // A single value is the intersection arity s; caps are s-1.
        int s = caps[0];
        if (s < 2) throw std::invalid_argument("uniform s must be >= 2");
        caps.assign(static_cast<std::size_t>(n), s - 1);
    }
    kgh::BoundReport rep = kgh::make_bound_report(n, k, r, kgh::SVector(caps, r));
    std::cout << kgh::bound_report_csv_header() << "\n"
              << kgh::bound_report_csv(rep) << "\n";
    return kExitOk;
}

int cmd_verify(const SpecFlags& flags, const std::string& coloring_path,
               long long candidate_budget) {
    kgh::HypergraphSpec spec = spec_from_flags(flags);
    kgh::Hypergraph hg = kgh::build_minimal_supports(spec, candidate_budget);
    kgh::Coloring c =
        kgh::coloring_from_json(kgh::Json::parse(read_file(coloring_path)));
    if (kgh::is_proper(c, hg)) {
        std::cout << "proper\n";
        return kExitOk;
    }
    auto mono = kgh::find_monochromatic_support(c, hg);
    std::cout << "improper " << kgh::mono_support_to_json(*mono, hg).dump() << "\n";
    return kExitFinding;
}

int cmd_pullback(int k, const std::string& caps_str, int r,
                 const std::string& coloring_path, const std::string& out) {
    auto caps = parse_int_list(caps_str);
    kgh::SVector sv(caps, r);
    kgh::ProjectionMap pmap = kgh::ProjectionMap::consecutive(caps);
    kgh::Coloring source =
        kgh::coloring_from_json(kgh::Json::parse(read_file(coloring_path)));
    kgh::PullbackResult res = kgh::pullback_coloring(source, k, sv, pmap);
    kgh::Json j;
    j["target_spec"] = kgh::spec_to_json(res.target_spec);
    j["coloring"] = kgh::coloring_to_json(res.coloring);
    j["proper"] = kgh::is_proper(res.coloring, res.target);
    emit(out, j.dump(2) + "\n");
    return kExitOk;
}

int cmd_refute(int n, int k, int r1, int r2, int b1, int b2,
               const std::string& partition_str, const std::string& coloring_path,
               long long budget, const std::string& out) {
    kgh::RefuteInput input;
    input.n = n;
    input.k = k;
    input.r1 = r1;
    input.r2 = r2;
    input.b1 = b1;
    input.b2 = b2;
    input.coarse = partition_str.empty() ? kgh::Partition::singletons(n)
                                         : parse_partition(partition_str, n);
    input.coloring =
        kgh::coloring_from_json(kgh::Json::parse(read_file(coloring_path)));
    input.budget = budget;
    kgh::RefuteResult res = kgh::prime_induction_refute(input);
    emit(out, kgh::refute_result_to_json(res).dump(2) + "\n");
    if (res.status == kgh::RefuteStatus::hypothesis_violated) {
        std::cerr << "refute: hypothesis violated (coloring not below the bound)\n";
        return kExitConfig;
    }
    return kExitOk;
}

int cmd_tverberg(const std::string& points_path, int r, const std::string& partition_str,
                 bool check_bln, bool full_sweep, bool do_sweep, int d, int trials,
                 std::uint64_t seed, long long budget, const std::string& out) {
    if (do_sweep) {
        kgh::ExistenceReport rep = kgh::tverberg_existence_sweep(r, d, trials, seed);
        kgh::Json j;
        j["r"] = rep.r;
        j["d"] = rep.d;
        j["trials"] = rep.trials;
        j["nhat_with_partition"] = rep.nhat_with_partition;
        j["nminus1_with_partition"] = rep.nminus1_with_partition;
        j["resampled_degenerate"] = rep.resampled_degenerate;
        emit(out, j.dump(2) + "\n");
        bool ok = rep.nhat_with_partition == rep.trials && rep.nminus1_with_partition == 0;
        std::cerr << "tverberg sweep: " << (ok ? "as expected" : "UNEXPECTED") << "\n";
        return ok ? kExitOk : kExitFinding;
    }

    kgh::PointConfig config =
        kgh::point_config_from_json(kgh::Json::parse(read_file(points_path)));
    if (!partition_str.empty()) {
        kgh::TverbergPartition part;
        std::stringstream ss(partition_str);
        std::string block;
        while (std::getline(ss, block, '|')) part.parts.push_back(parse_int_list(block));
        part.canonicalize();
        bool hit = kgh::hulls_intersect(config, part);
        std::cout << (hit ? "intersect" : "disjoint") << "\n";
        return kExitOk;
    }
    if (check_bln) {
        kgh::BlnVerdict v = kgh::check_bln_property(config, r, full_sweep, budget);
        emit(out, kgh::bln_verdict_to_json(v).dump(2) + "\n");
        std::cerr << "tverberg bln: "
                  << (v.exactly_colorful ? "exactly_colorful" : "mismatch") << "\n";
        return kExitOk;
    }
    auto occurring = kgh::occurring_tverberg_partitions(config, r, full_sweep, budget);
    kgh::Json j;
    j["occurring"] = kgh::partition_list_to_json(occurring);
    emit(out, j.dump(2) + "\n");
    return kExitOk;
}

int cmd_sweep(const std::string& which, kgh::SweepGrid grid, const std::string& csv_path,
              const std::string& jsonl_path) {
    std::vector<kgh::SweepRow> rows;
    if (which == "transversal")
        rows = kgh::sweep_transversal_equality(grid);
    else if (which == "caps")
        rows = kgh::sweep_caps_lower_bound(grid);
    else if (which == "stable")
        rows = kgh::sweep_conjectures(grid, kgh::ConjectureKind::stable_vertices);
    else if (which == "parts")
        rows = kgh::sweep_conjectures(grid, kgh::ConjectureKind::bounded_parts);
    else if (which == "avoid")
        rows = kgh::sweep_conjectures(grid, kgh::ConjectureKind::avoid_set);
    else if (which == "wide")
        rows = kgh::sweep_wide_equality(grid);
    else if (which == "all")
        rows = kgh::run_all_sweeps(grid);
    else
        throw std::invalid_argument("unknown sweep: " + which);

    if (!csv_path.empty()) {
        std::ostringstream os;
        os << kgh::sweep_csv_header() << "\n";
        for (const auto& row : rows) os << kgh::sweep_row_csv(row) << "\n";
        write_file(csv_path, os.str());
    }
    if (!jsonl_path.empty()) {
        std::ostringstream os;
        for (const auto& row : rows) os << kgh::sweep_row_jsonl(row) << "\n";
        write_file(jsonl_path, os.str());
    }

    int confirmed = 0, within = 0, skipped = 0, inconclusive = 0, bad = 0;
    for (const auto& row : rows) {
        switch (row.verdict) {
            case kgh::Verdict::equality_confirmed: ++confirmed; break;
            case kgh::Verdict::within_bounds: ++within; break;
            case kgh::Verdict::skipped: ++skipped; break;
            case kgh::Verdict::inconclusive: ++inconclusive; break;
            default: ++bad; break;
        }
    }
    std::cout << "sweep " << which << ": " << rows.size() << " rows, " << confirmed
              << " equality_confirmed, " << within << " within_bounds, " << skipped
              << " skipped, " << inconclusive << " inconclusive, " << bad
              << " violations/refutations\n";
    if (kgh::any_violation_or_refutation(rows)) return kExitFinding;
    if (kgh::any_inconclusive(rows)) return kExitBudget;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact engine for Kneser-type hypergraph chromatic numbers"};
    app.require_subcommand(1);

    long long node_budget = 100'000'000;
    long long candidate_budget = kgh::kDefaultCandidateBudget;
    if (const char* env = std::getenv("KGH_NODE_BUDGET")) node_budget = std::atoll(env);
    if (const char* env = std::getenv("KGH_CANDIDATE_BUDGET"))
        candidate_budget = std::atoll(env);

    // gen
    SpecFlags gen_flags;
    std::string gen_format = "hkg", gen_out;
    auto* gen = app.add_subcommand("gen", "materialize a hypergraph");
    add_spec_flags(gen, gen_flags);
    gen->add_option("--format", gen_format, "hkg|json");
    gen->add_option("--out", gen_out, "output path (default stdout)");

    // chi
    SpecFlags chi_flags;
    std::string chi_hkg, chi_witness_out;
    bool chi_audit = false, chi_no_hint = false, deterministic = false;
    int threads = 1;
    auto* chi = app.add_subcommand("chi", "exact chromatic number");
    add_spec_flags(chi, chi_flags);
    chi->add_option("--hkg", chi_hkg, "read a materialized .hkg file instead of a spec");
    chi->add_flag("--audit", chi_audit, "ignore formula seeds, search from m=1");
    chi->add_flag("--no-hint", chi_no_hint, "disable construction-based upper witnesses");
    chi->add_option("--budget", node_budget, "search node budget");
    chi->add_option("--threads", threads, "worker count (witness commands run on 1)");
    chi->add_flag("--deterministic", deterministic, "force single-threaded witnesses");
    chi->add_option("--witness-out", chi_witness_out, "write ChiResult JSON here");

    // bounds
    int b_n = 0, b_k = 0, b_r = 0;
    std::string b_s = "2";
    auto* bounds = app.add_subcommand("bounds", "closed-form bound report as CSV");
    bounds->add_option("--n", b_n)->required();
    bounds->add_option("--k", b_k)->required();
    bounds->add_option("--r", b_r)->required();
    bounds->add_option("--s", b_s, "uniform s (caps are s-1) or explicit cap list");

    // verify
    SpecFlags verify_flags;
    std::string verify_coloring;
    auto* verify = app.add_subcommand("verify", "check a coloring against a spec");
    add_spec_flags(verify, verify_flags);
    verify->add_option("--coloring", verify_coloring, "coloring JSON array")->required();

    // pullback
    int pb_k = 0, pb_r = 0;
    std::string pb_caps, pb_coloring, pb_out;
    auto* pullback = app.add_subcommand(
        "pullback", "pull a coloring back along the multiplicity projection");
    pullback->add_option("--k", pb_k)->required();
    pullback->add_option("--r", pb_r)->required();
    pullback->add_option("--s", pb_caps, "caps s_1,...,s_n")->required();
    pullback->add_option("--coloring", pb_coloring)->required();
    pullback->add_option("--out", pb_out);

    // refute
    int rf_n = 0, rf_k = 0, rf_r1 = 0, rf_r2 = 0, rf_b1 = 1, rf_b2 = 1;
    std::string rf_partition, rf_coloring, rf_out;
    auto* refute = app.add_subcommand(
        "refute", "extract disjoint monochromatic sets from an undersized coloring");
    refute->add_option("--n", rf_n)->required();
    refute->add_option("--k", rf_k)->required();
    refute->add_option("--r1", rf_r1)->required();
    refute->add_option("--r2", rf_r2)->required();
    refute->add_option("--b1", rf_b1);
    refute->add_option("--b2", rf_b2);
    refute->add_option("--partition", rf_partition, "coarse partition (default singletons)");
    refute->add_option("--coloring", rf_coloring)->required();
    refute->add_option("--out", rf_out);

    // tverberg
    std::string tv_points, tv_partition, tv_out;
    int tv_r = 2, tv_d = 2, tv_trials = 100;
    std::uint64_t tv_seed = 1;
    bool tv_bln = false, tv_full = false, tv_sweep = false;
    long long tv_budget = 1'000'000;
    auto* tv = app.add_subcommand("tverberg", "exact-rational Tverberg checks");
    tv->add_option("--points", tv_points, "point config JSON");
    tv->add_option("--r", tv_r, "number of parts");
    tv->add_option("--partition", tv_partition, "test one partition, e.g. 1,4|2,3");
    tv->add_flag("--check-bln", tv_bln, "compare occurring vs colorful partitions");
    tv->add_flag("--full-sweep", tv_full, "include proper subsequences");
    tv->add_flag("--sweep", tv_sweep, "random existence sweep");
    tv->add_option("--d", tv_d, "dimension for --sweep");
    tv->add_option("--trials", tv_trials, "trials for --sweep");
    tv->add_option("--seed", tv_seed, "rng seed for --sweep");
    tv->add_option("--budget", tv_budget, "feasibility-check budget");
    tv->add_option("--out", tv_out);

    // sweep
    std::string sw_which = "all", sw_csv, sw_jsonl, sw_rs, sw_ks;
    kgh::SweepGrid grid;
    bool sw_audit = false;
    auto* sweep = app.add_subcommand("sweep", "formula/conjecture verification grids");
    sweep->add_option("--which", sw_which, "transversal|caps|stable|parts|avoid|wide|all");
    sweep->add_option("--csv", sw_csv, "CSV output path");
    sweep->add_option("--jsonl", sw_jsonl, "JSON-lines output path");
    sweep->add_option("--rs", sw_rs, "arities, e.g. 2,3,4");
    sweep->add_option("--ks", sw_ks, "subset sizes, e.g. 1,2,3");
    sweep->add_option("--max-n", grid.max_n, "ground-set budget for r >= 3");
    sweep->add_option("--max-n-r2", grid.max_n_r2, "ground-set budget for r = 2");
    sweep->add_flag("--all-partitions", grid.all_partitions,
                    "every consecutive block composition (transversal sweep)");
    sweep->add_option("--threads", grid.threads, "parallel rows");
    sweep->add_flag("--audit", sw_audit, "solve every row from m=1");
    sweep->add_flag("--deterministic", deterministic, "force single-threaded rows");
    sweep->add_option("--budget", node_budget, "per-row node budget");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_gen(gen_flags, gen_format, gen_out, candidate_budget);
        if (chi->parsed())
            return cmd_chi(chi_flags, chi_hkg, chi_audit, chi_no_hint, node_budget,
                           candidate_budget, chi_witness_out);
        if (bounds->parsed()) return cmd_bounds(b_n, b_k, b_r, b_s);
        if (verify->parsed())
            return cmd_verify(verify_flags, verify_coloring, candidate_budget);
        if (pullback->parsed())
            return cmd_pullback(pb_k, pb_caps, pb_r, pb_coloring, pb_out);
        if (refute->parsed())
            return cmd_refute(rf_n, rf_k, rf_r1, rf_r2, rf_b1, rf_b2, rf_partition,
                              rf_coloring, candidate_budget, rf_out);
        if (tv->parsed())
            return cmd_tverberg(tv_points, tv_r, tv_partition, tv_bln, tv_full, tv_sweep,
                                tv_d, tv_trials, tv_seed, tv_budget, tv_out);
        if (sweep->parsed()) {
            if (!sw_rs.empty()) grid.rs = parse_int_list(sw_rs);
            if (!sw_ks.empty()) grid.ks = parse_int_list(sw_ks);
            grid.solve.audit = sw_audit;
            grid.solve.node_budget = node_budget;
            grid.solve.candidate_budget = candidate_budget;
            if (deterministic) grid.threads = 1;
            return cmd_sweep(sw_which, grid, sw_csv, sw_jsonl);
        }
    } catch (const kgh::BudgetExceeded& e) {
        std::cerr << "inconclusive: " << e.what() << " (reached " << e.reached() << ")\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitConfig;
}
