#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kgh/core.hpp"
#include "kgh/solver.hpp"

namespace kgh {

/// Projects [N] onto [n] by sending every element of part P_i to i.
struct ProjectionMap {
    Partition partition;  // of [N], one part per target element, in target order

    int source_n() const { return partition.n; }
    int target_n() const { return static_cast<int>(partition.parts.size()); }

    /// Consecutive blocks of the given sizes, block j mapping to j.
    static ProjectionMap consecutive(const std::vector<int>& sizes);
};

/// Image f(sigma) of a subset of [N]; size is preserved exactly when sigma is
/// transversal to the partition.
Mask project_set(Mask sigma, const ProjectionMap& pmap);

struct PullbackResult {
    HypergraphSpec target_spec;  // KG^r(N, k; P)
    Hypergraph target;
    Coloring coloring;  // c'(A) = c(f(A)) on the target vertex list
};

/// Pulls an m-coloring of KG^r_s(n,k) back to KG^r(N,k;P) where |P_i| = s_i.
/// `source` must color the lex-ordered k-subsets of [n].
PullbackResult pullback_coloring(const Coloring& source, int k, const SVector& svector,
                                 const ProjectionMap& pmap);

struct RefuteInput {
    int n = 0, k = 0;
    int r1 = 0, r2 = 0;        // target arity is r1*r2
    int b1 = 1, b2 = 1;        // part-size budgets of the two hypotheses
    Partition coarse;          // R, partition of [n] with |R_i| <= b1*b2
    Coloring coloring;         // on the lex vertex order of KG^{r1r2}(n,k;R)
    long long budget = kDefaultCandidateBudget;
};

enum class RefuteStatus { witness, proper, hypothesis_violated };

struct StageOneEntry {
    Mask vertex = 0;                 // the K1-set A
    std::vector<Mask> tuple;         // its monochromatic pairwise disjoint r2-tuple
    int color = 0;
};

struct RefuteResult {
    RefuteStatus status = RefuteStatus::proper;
    int color = 0;
    std::vector<Mask> sets;          // r1*r2 pairwise disjoint monochromatic k-sets
    int k1 = 0;
    Partition refinement;            // R_i split into parts of size <= b1
    std::vector<StageOneEntry> stage_one;  // entries for the stage-two edge only
    std::vector<Mask> stage_two_edge;      // the r1 K1-sets
};

/// Executes the prime-induction extraction on a concrete coloring: refines the
/// partition, finds per-K1-set monochromatic disjoint r2-tuples, colors the
/// induced hypergraph, finds a monochromatic r1-edge and assembles r1*r2
/// pairwise disjoint monochromatic k-sets.
RefuteResult prime_induction_refute(const RefuteInput& input);

/// A partition of [n] with k-1 parts of size exactly b covering A (A packed
/// first, padding ascending from [n] \ A), remaining elements in consecutive
/// parts of size <= b. The transversal hypergraph it defines is a
/// subhypergraph of KG^r_A(n,k). Requires |A| <= b(k-1).
HypergraphSpec avoid_a_embed(int n, int k, int r, Mask avoid_a, int b);

}  // namespace kgh
