#pragma once

#include <bit>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kgh {

// Ground-set elements are 1-based; element e occupies bit (e-1).
using Mask = std::uint64_t;

constexpr int kMaxGroundSet = 62;

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask bit_of(int element) { return Mask{1} << (element - 1); }

inline Mask full_mask(int n) { return (n == 0) ? 0 : ((Mask{1} << n) - 1); }

/// Lowest set element (1-based); 0 for the empty mask.
inline int min_element(Mask m) { return m == 0 ? 0 : std::countr_zero(m) + 1; }

/// Highest set element (1-based); 0 for the empty mask.
inline int max_element(Mask m) {
    return m == 0 ? 0 : 64 - std::countl_zero(m);
}

std::vector<int> mask_elements(Mask m);
Mask mask_from_elements(const std::vector<int>& elements, int n);
std::string mask_to_string(Mask m);

/// Thrown when an enumeration or search exceeds its configured budget.
class BudgetExceeded : public std::runtime_error {
  public:
    BudgetExceeded(const std::string& what, long long reached)
        : std::runtime_error(what), reached_(reached) {}
    long long reached() const { return reached_; }

  private:
    long long reached_;
};

/// A k-element subset of [n] stored as a bitmask.
struct KSubset {
    Mask mask = 0;
    int n = 0;
    int k = 0;

    KSubset() = default;
    KSubset(Mask mask_, int n_);

    std::vector<int> elements() const { return mask_elements(mask); }
    bool contains(int element) const { return (mask & bit_of(element)) != 0; }

    friend bool operator==(const KSubset& a, const KSubset& b) {
        return a.mask == b.mask && a.n == b.n;
    }
};

/// A partition of [n] into pairwise disjoint nonempty parts.
struct Partition {
    std::vector<Mask> parts;
    int n = 0;

    Partition() = default;
    Partition(std::vector<Mask> parts_, int n_);

    int part_of(int element) const;  // 0-based part index, -1 if absent
    int max_part_size() const;

    /// Consecutive blocks of the given sizes: {1..s1}, {s1+1..s1+s2}, ...
    static Partition consecutive(const std::vector<int>& sizes);
    /// All parts of size one.
    static Partition singletons(int n);

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.n == b.n && a.parts == b.parts;
    }
};

/// Per-element multiplicity caps s = (s_1,...,s_n) with s_i in [r-1].
struct SVector {
    std::vector<int> caps;
    int r = 0;

    SVector() = default;
    SVector(std::vector<int> caps_, int r_);
    static SVector uniform(int cap, int n, int r);

    bool is_uniform() const;
    long long sum() const;

    friend bool operator==(const SVector& a, const SVector& b) {
        return a.r == b.r && a.caps == b.caps;
    }
};

enum class Family {
    KG,
    KG_s,
    KG_partition,
    KG_stable,
    KG_wide,
    KG_avoidA,
    KG_setsystem,
};

std::string family_name(Family f);
Family family_from_name(const std::string& name);

/// Declarative description of one hypergraph instance.
///
/// Field use per family:
///   KG           - n, k, r only
///   KG_s         - svector
///   KG_partition - partition
///   KG_stable    - stable_s
///   KG_wide      - wide_t, optionally partition (transversal wide variant)
///   KG_avoidA    - avoid_A
///   KG_setsystem - set_system, optionally svector or partition; k may be 0
struct HypergraphSpec {
    Family family = Family::KG;
    int n = 0;
    int k = 0;
    int r = 0;
    std::optional<SVector> svector;
    std::optional<Partition> partition;
    std::optional<int> stable_s;
    std::optional<int> wide_t;
    std::optional<Mask> avoid_A;
    std::optional<std::vector<Mask>> set_system;

    void validate() const;  // throws std::invalid_argument

    static HypergraphSpec kg(int n, int k, int r);
    static HypergraphSpec kg_s(int n, int k, SVector svector);
    static HypergraphSpec kg_partition(int n, int k, int r, Partition partition);
    static HypergraphSpec kg_stable(int n, int k, int r, int stable_s);
    static HypergraphSpec kg_wide(int n, int k, int r, int wide_t,
                                  std::optional<Partition> partition = {});
    static HypergraphSpec kg_avoid_a(int n, int k, int r, Mask avoid_a);
    static HypergraphSpec kg_setsystem(int n, int r, std::vector<Mask> sets,
                                       std::optional<SVector> svector = {},
                                       std::optional<Partition> partition = {});

    friend bool operator==(const HypergraphSpec& a, const HypergraphSpec& b);
};

/// Materialized hypergraph: vertices plus inclusion-minimal hyperedge supports.
/// Supports are lists of 0-based vertex indices, each sorted ascending, the
/// whole list sorted lexicographically.
struct Hypergraph {
    std::vector<KSubset> vertices;
    std::vector<std::vector<int>> min_supports;
    std::optional<HypergraphSpec> spec;

    int num_vertices() const { return static_cast<int>(vertices.size()); }
    int num_supports() const { return static_cast<int>(min_supports.size()); }

    int index_of(Mask mask) const;  // -1 if absent (vertices are mask-sorted)
};

/// Cyclic distance min(|a-b|, n-|a-b|) between two elements of [n].
int cyclic_distance(int a, int b, int n);

/// Every pair of elements at cyclic distance >= s.
bool is_s_stable(const KSubset& sigma, int s);

/// Not contained in any window {i,...,i+t-1}: max - min + 1 > t.
bool is_t_wide(const KSubset& sigma, int t);

/// Vertices of the family, sorted ascending by mask.
std::vector<KSubset> enum_vertices(const HypergraphSpec& spec);

/// A multiplicity vector m_j >= 1 with sum r such that every ground element
/// lies in at most s_i members counted with multiplicity, if one exists.
/// Compositions are tried largest-first-part so (2,1) precedes (1,2).
std::optional<std::vector<int>> support_feasible(const std::vector<KSubset>& support,
                                                 int r, const SVector& svector);

inline constexpr long long kDefaultCandidateBudget = 5'000'000;

Hypergraph build_minimal_supports(const HypergraphSpec& spec,
                                  long long candidate_budget = kDefaultCandidateBudget);

bool same_supports(const Hypergraph& a, const Hypergraph& b);
bool same_supports(const HypergraphSpec& a, const HypergraphSpec& b,
                   long long candidate_budget = kDefaultCandidateBudget);

// --- hkg text format ---------------------------------------------------
// Line 1: "hkg <n> <k> <r> <num_vertices> <num_supports>"
// Then one line per vertex (space-separated elements, 1-based) and one line
// per support (space-separated 0-based vertex indices). Newline is '\n'.

void write_hkg(const Hypergraph& hg, std::ostream& out);
std::string to_hkg(const Hypergraph& hg);
Hypergraph read_hkg(std::istream& in);
Hypergraph hkg_from_string(const std::string& text);

}  // namespace kgh
