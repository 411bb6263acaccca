#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kgh/core.hpp"
#include "kgh/rational.hpp"

namespace kgh {

/// Point sequence in R^d with exact rational coordinates.
struct PointConfig {
    int d = 0;
    std::vector<std::vector<Rat>> points;

    int size() const { return static_cast<int>(points.size()); }
    void validate() const;
};

/// Partition of an index set into nonempty blocks, canonical form: each part
/// sorted ascending, parts ordered by minimum element. Indices are 1-based.
struct TverbergPartition {
    std::vector<std::vector<int>> parts;

    int r() const { return static_cast<int>(parts.size()); }
    void canonicalize();
    std::string encode() const;  // "1,4|2,5|3"

    friend bool operator==(const TverbergPartition& a, const TverbergPartition& b) {
        return a.parts == b.parts;
    }
    friend bool operator<(const TverbergPartition& a, const TverbergPartition& b) {
        return a.parts < b.parts;
    }
};

/// Tight Tverberg size (r-1)(d+1)+1.
int nhat(int r, int d);

/// All partitions of {1..ground} into exactly r nonempty unlabeled parts,
/// canonical and sorted.
std::vector<TverbergPartition> all_r_partitions(int ground, int r);

/// Exact feasibility of a common point of the part hulls, decided by
/// phase-one simplex over rationals.
bool hulls_intersect(const PointConfig& config, const TverbergPartition& partition);

/// Every window Y_k = {(r-1)(k-1)+1, ..., (r-1)k+1}, k in [d+1], meets every
/// part exactly once. The partition must cover [(r-1)(d+1)+1].
bool is_colorful(const TverbergPartition& partition, int r, int d);

/// The colorful partitions of [(r-1)(d+1)+1], canonical and sorted.
std::vector<TverbergPartition> colorful_partitions(int r, int d);

/// Partition patterns of [nhat] that occur as Tverberg partitions of some
/// length-nhat subsequence of the configuration. With all_subsequences =
/// false the configuration length must be exactly nhat.
std::vector<TverbergPartition> occurring_tverberg_partitions(
    const PointConfig& config, int r, bool all_subsequences = true,
    long long budget = 1'000'000);

struct BlnVerdict {
    bool exactly_colorful = false;
    std::vector<TverbergPartition> extra;    // occur but are not colorful
    std::vector<TverbergPartition> missing;  // colorful but do not occur
};

/// Compares occurring Tverberg partitions against the colorful ones.
/// By default the configuration length must be exactly nhat; the flag enables
/// the full subsequence sweep.
BlnVerdict check_bln_property(const PointConfig& config, int r,
                              bool full_subsequence_sweep = false,
                              long long budget = 1'000'000);

struct ExistenceReport {
    int r = 0, d = 0, trials = 0;
    int nhat_with_partition = 0;       // size-nhat configs with >= 1 occurring partition
    int nminus1_with_partition = 0;    // generic size-(nhat-1) configs with one (expect 0)
    long long resampled_degenerate = 0;
};

/// Random-configuration sweep: every size-nhat draw must admit a Tverberg
/// partition; generic size-(nhat-1) draws must not. Degenerate draws for the
/// smaller size are resampled. Coordinates are integers in [-1000, 1000].
ExistenceReport tverberg_existence_sweep(int r, int d, int trials,
                                         std::uint64_t seed = 1);

}  // namespace kgh
