#include "kgh/tverberg.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "kgh/lp.hpp"

namespace kgh {

void PointConfig::validate() const {
    if (d < 1) throw std::invalid_argument("dimension must be >= 1");
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != d)
            throw std::invalid_argument("point with wrong number of coordinates");
}

void TverbergPartition::canonicalize() {
    for (auto& p : parts) std::sort(p.begin(), p.end());
    std::sort(parts.begin(), parts.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  return a[0] < b[0];
              });
}

std::string TverbergPartition::encode() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) os << '|';
        for (std::size_t j = 0; j < parts[i].size(); ++j) {
            if (j) os << ',';
            os << parts[i][j];
        }
    }
    return os.str();
}

int nhat(int r, int d) {
    if (r < 1 || d < 1) throw std::invalid_argument("nhat requires r, d >= 1");
    return (r - 1) * (d + 1) + 1;
}

std::vector<TverbergPartition> all_r_partitions(int ground, int r) {
    // Restricted growth strings with exactly r classes.
    std::vector<TverbergPartition> out;
    if (ground < r || r < 1) return out;
    std::vector<int> rgs(static_cast<std::size_t>(ground), 0);
    std::function<void(int, int)> rec = [&](int pos, int maxc) {
        if (pos == ground) {
            if (maxc + 1 != r) return;
            TverbergPartition p;
            p.parts.assign(static_cast<std::size_t>(r), {});
            for (int i = 0; i < ground; ++i)
                p.parts[static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)])]
                    .push_back(i + 1);
            p.canonicalize();
            out.push_back(std::move(p));
            return;
        }
        for (int c = 0; c <= std::min(maxc + 1, r - 1); ++c) {
            rgs[static_cast<std::size_t>(pos)] = c;
            rec(pos + 1, std::max(maxc, c));
        }
    };
    rec(0, -1);
    std::sort(out.begin(), out.end());
    return out;
}

bool hulls_intersect(const PointConfig& config, const TverbergPartition& partition) {
    config.validate();
    if (partition.parts.empty()) throw std::invalid_argument("empty partition");
    for (const auto& part : partition.parts) {
        if (part.empty()) throw std::invalid_argument("empty partition part");
        for (int i : part)
            if (i < 1 || i > config.size())
                throw std::invalid_argument("partition index out of range");
    }
    int r = partition.r();
    if (r == 1) return true;

    // One convex-combination variable per (part, member); columns grouped by
    // part. Rows: one sum-to-1 per part, then d equal-moment rows per part >= 2.
    std::vector<int> offset(static_cast<std::size_t>(r) + 1, 0);
    for (int j = 0; j < r; ++j)
        offset[static_cast<std::size_t>(j + 1)] =
            offset[static_cast<std::size_t>(j)] +
            static_cast<int>(partition.parts[static_cast<std::size_t>(j)].size());
    int vars = offset[static_cast<std::size_t>(r)];
    int rows = r + (r - 1) * config.d;

    std::vector<std::vector<Rat>> A(static_cast<std::size_t>(rows),
                                    std::vector<Rat>(static_cast<std::size_t>(vars), Rat(0)));
    std::vector<Rat> b(static_cast<std::size_t>(rows), Rat(0));
    for (int j = 0; j < r; ++j) {
        for (int t = 0; t < static_cast<int>(partition.parts[static_cast<std::size_t>(j)].size()); ++t)
            A[static_cast<std::size_t>(j)]
             [static_cast<std::size_t>(offset[static_cast<std::size_t>(j)] + t)] = Rat(1);
        b[static_cast<std::size_t>(j)] = Rat(1);
    }
    for (int j = 1; j < r; ++j) {
        for (int coord = 0; coord < config.d; ++coord) {
            auto& row = A[static_cast<std::size_t>(r + (j - 1) * config.d + coord)];
            const auto& first = partition.parts[0];
            for (int t = 0; t < static_cast<int>(first.size()); ++t)
                row[static_cast<std::size_t>(offset[0] + t)] =
                    config.points[static_cast<std::size_t>(first[static_cast<std::size_t>(t)] - 1)]
                                 [static_cast<std::size_t>(coord)];
            const auto& other = partition.parts[static_cast<std::size_t>(j)];
            for (int t = 0; t < static_cast<int>(other.size()); ++t)
                row[static_cast<std::size_t>(offset[static_cast<std::size_t>(j)] + t)] =
                    -config.points[static_cast<std::size_t>(other[static_cast<std::size_t>(t)] - 1)]
                                  [static_cast<std::size_t>(coord)];
        }
    }
    return lp_equality_feasible(A, b);
}

bool is_colorful(const TverbergPartition& partition, int r, int d) {
    int ground = nhat(r, d);
    std::vector<bool> seen(static_cast<std::size_t>(ground) + 1, false);
    int count = 0;
    for (const auto& part : partition.parts)
        for (int i : part) {
            if (i < 1 || i > ground || seen[static_cast<std::size_t>(i)])
                throw std::invalid_argument("partition must cover [(r-1)(d+1)+1]");
            seen[static_cast<std::size_t>(i)] = true;
            ++count;
        }
    if (count != ground || partition.r() != r)
        throw std::invalid_argument("partition must cover [(r-1)(d+1)+1] with r parts");

    for (int k = 1; k <= d + 1; ++k) {
        int lo = (r - 1) * (k - 1) + 1;
        int hi = (r - 1) * k + 1;
        for (const auto& part : partition.parts) {
            int hits = 0;
            for (int i : part)
                if (i >= lo && i <= hi) ++hits;
            if (hits != 1) return false;
        }
    }
    return true;
}

std::vector<TverbergPartition> colorful_partitions(int r, int d) {
    std::vector<TverbergPartition> out;
    for (const auto& p : all_r_partitions(nhat(r, d), r))
        if (is_colorful(p, r, d)) out.push_back(p);
    return out;
}

namespace {

void for_each_subsequence(int n, int len, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> idx(static_cast<std::size_t>(len));
    std::function<void(int, int)> rec = [&](int pos, int start) {
        if (pos == len) {
            fn(idx);
            return;
        }
        for (int i = start; i <= n - (len - pos) + 1; ++i) {
            idx[static_cast<std::size_t>(pos)] = i;
            rec(pos + 1, i + 1);
        }
    };
    rec(0, 1);
}

}  // namespace

std::vector<TverbergPartition> occurring_tverberg_partitions(const PointConfig& config,
                                                             int r,
                                                             bool all_subsequences,
                                                             long long budget) {
    config.validate();
    int want = nhat(r, config.d);
    if (config.size() < want)
        throw std::invalid_argument("configuration shorter than (r-1)(d+1)+1");
    if (!all_subsequences && config.size() != want)
        throw std::invalid_argument(
            "configuration must have length exactly (r-1)(d+1)+1 unless the "
            "subsequence sweep is enabled");

    auto patterns = all_r_partitions(want, r);
    std::set<TverbergPartition> occur;
    long long checks = 0;
    for_each_subsequence(config.size(), want, [&](const std::vector<int>& subseq) {
        for (const auto& pattern : patterns) {
            if (occur.count(pattern)) continue;  // already known to occur
            if (++checks > budget)
                throw BudgetExceeded("tverberg occurrence budget exceeded", checks);
            TverbergPartition mapped;
            mapped.parts.reserve(pattern.parts.size());
            for (const auto& part : pattern.parts) {
                std::vector<int> mp;
                mp.reserve(part.size());
                for (int i : part)
                    mp.push_back(subseq[static_cast<std::size_t>(i - 1)]);
                mapped.parts.push_back(std::move(mp));
            }
            if (hulls_intersect(config, mapped)) occur.insert(pattern);
        }
    });
    return {occur.begin(), occur.end()};
}

BlnVerdict check_bln_property(const PointConfig& config, int r,
                              bool full_subsequence_sweep, long long budget) {
    auto occurring = occurring_tverberg_partitions(config, r, full_subsequence_sweep,
                                                   budget);
    auto colorful = colorful_partitions(r, config.d);
    BlnVerdict v;
    std::set<TverbergPartition> occ(occurring.begin(), occurring.end());
    std::set<TverbergPartition> col(colorful.begin(), colorful.end());
    for (const auto& p : occ)
        if (!col.count(p)) v.extra.push_back(p);
    for (const auto& p : col)
        if (!occ.count(p)) v.missing.push_back(p);
    v.exactly_colorful = v.extra.empty() && v.missing.empty();
    return v;
}

namespace {

/// Rank of the matrix over the rationals via Gaussian elimination.
int rational_rank(std::vector<std::vector<Rat>> m) {
    int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    int cols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i)
            if (!m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)].is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(rank)]);
        for (int i = 0; i < rows; ++i) {
            if (i == rank) continue;
            auto& row = m[static_cast<std::size_t>(i)];
            const auto& base = m[static_cast<std::size_t>(rank)];
            if (row[static_cast<std::size_t>(c)].is_zero()) continue;
            Rat f = row[static_cast<std::size_t>(c)] / base[static_cast<std::size_t>(c)];
            for (int j = c; j < cols; ++j)
                row[static_cast<std::size_t>(j)] -= f * base[static_cast<std::size_t>(j)];
        }
        ++rank;
    }
    return rank;
}

/// No d+1 of the points affinely dependent (pairwise distinct for d = 1,
/// no 3 collinear for d = 2, ...).
bool generic_position(const PointConfig& config) {
    int d = config.d;
    int n = config.size();
    int probe = std::min(n, d + 1);
    std::vector<int> idx(static_cast<std::size_t>(probe));
    bool ok = true;
    std::function<void(int, int)> rec = [&](int pos, int start) {
        if (!ok) return;
        if (pos == probe) {
            // Affine independence: rank of [x_i - x_0] is probe-1.
            std::vector<std::vector<Rat>> m;
            for (int t = 1; t < probe; ++t) {
                std::vector<Rat> row;
                for (int c = 0; c < d; ++c)
                    row.push_back(
                        config.points[static_cast<std::size_t>(idx[static_cast<std::size_t>(t)])]
                                     [static_cast<std::size_t>(c)] -
                        config.points[static_cast<std::size_t>(idx[0])]
                                     [static_cast<std::size_t>(c)]);
                m.push_back(std::move(row));
            }
            if (rational_rank(std::move(m)) < probe - 1) ok = false;
            return;
        }
        for (int i = start; i < n && ok; ++i) {
            idx[static_cast<std::size_t>(pos)] = i;
            rec(pos + 1, i + 1);
        }
    };
    rec(0, 0);
    return ok;
}

PointConfig random_config(int d, int count, std::mt19937_64& rng) {
    PointConfig cfg;
    cfg.d = d;
    for (int i = 0; i < count; ++i) {
        std::vector<Rat> p;
        for (int c = 0; c < d; ++c)
            p.emplace_back(static_cast<long long>(rng() % 2001) - 1000);
        cfg.points.push_back(std::move(p));
    }
    return cfg;
}

}  // namespace

ExistenceReport tverberg_existence_sweep(int r, int d, int trials, std::uint64_t seed) {
    ExistenceReport rep;
    rep.r = r;
    rep.d = d;
    rep.trials = trials;
    std::mt19937_64 rng(seed);
    int want = nhat(r, d);
    for (int t = 0; t < trials; ++t) {
        PointConfig full = random_config(d, want, rng);
        if (!occurring_tverberg_partitions(full, r, false).empty())
            ++rep.nhat_with_partition;

        PointConfig small = random_config(d, want - 1, rng);
        while (!generic_position(small)) {
            ++rep.resampled_degenerate;
            small = random_config(d, want - 1, rng);
        }
        bool any = false;
        for (const auto& pattern : all_r_partitions(want - 1, r)) {
            if (hulls_intersect(small, pattern)) {
                any = true;
                break;
            }
        }
        if (any) ++rep.nminus1_with_partition;
    }
    return rep;
}

}  // namespace kgh
