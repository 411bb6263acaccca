#include "kgh/core.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace kgh {

std::vector<int> mask_elements(Mask m) {
    std::vector<int> out;
    while (m != 0) {
        int e = std::countr_zero(m) + 1;
        out.push_back(e);
        m &= m - 1;
    }
    return out;
}

Mask mask_from_elements(const std::vector<int>& elements, int n) {
    Mask m = 0;
    for (int e : elements) {
        if (e < 1 || e > n)
            throw std::invalid_argument("element out of range [1,n]: " + std::to_string(e));
        m |= bit_of(e);
    }
    return m;
}

std::string mask_to_string(Mask m) {
    std::string s = "{";
    bool first = true;
    for (int e : mask_elements(m)) {
        if (!first) s += ",";
        s += std::to_string(e);
        first = false;
    }
    return s + "}";
}

KSubset::KSubset(Mask mask_, int n_) : mask(mask_), n(n_), k(popcount(mask_)) {
    if (n < 1 || n > kMaxGroundSet)
        throw std::invalid_argument("ground set size out of range");
    if ((mask & ~full_mask(n)) != 0)
        throw std::invalid_argument("set bit beyond ground set");
}

Partition::Partition(std::vector<Mask> parts_, int n_) : parts(std::move(parts_)), n(n_) {
    if (n < 1 || n > kMaxGroundSet)
        throw std::invalid_argument("partition ground set out of range");
    Mask seen = 0;
    for (Mask p : parts) {
        if (p == 0) throw std::invalid_argument("empty partition part");
        if ((p & ~full_mask(n)) != 0)
            throw std::invalid_argument("partition part exceeds ground set");
        if ((p & seen) != 0) throw std::invalid_argument("partition parts overlap");
        seen |= p;
    }
    if (seen != full_mask(n))
        throw std::invalid_argument("partition does not cover [n]");
}

int Partition::part_of(int element) const {
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (parts[i] & bit_of(element)) return static_cast<int>(i);
    return -1;
}

int Partition::max_part_size() const {
    int best = 0;
    for (Mask p : parts) best = std::max(best, popcount(p));
    return best;
}

Partition Partition::consecutive(const std::vector<int>& sizes) {
    std::vector<Mask> parts;
    int next = 1;
    for (int s : sizes) {
        if (s < 1) throw std::invalid_argument("partition block size must be positive");
        Mask p = 0;
        for (int i = 0; i < s; ++i) p |= bit_of(next++);
        parts.push_back(p);
    }
    return Partition(std::move(parts), next - 1);
}

Partition Partition::singletons(int n) {
    std::vector<Mask> parts;
    for (int e = 1; e <= n; ++e) parts.push_back(bit_of(e));
    return Partition(std::move(parts), n);
}

SVector::SVector(std::vector<int> caps_, int r_) : caps(std::move(caps_)), r(r_) {
    if (r < 2) throw std::invalid_argument("svector arity r must be >= 2");
    if (caps.empty()) throw std::invalid_argument("svector must be nonempty");
    for (int c : caps)
        if (c < 1 || c > r - 1)
            throw std::invalid_argument("svector cap out of range [1,r-1]");
}

SVector SVector::uniform(int cap, int n, int r) {
    return SVector(std::vector<int>(static_cast<std::size_t>(n), cap), r);
}

bool SVector::is_uniform() const {
    for (int c : caps)
        if (c != caps[0]) return false;
    return true;
}

long long SVector::sum() const {
    long long s = 0;
    for (int c : caps) s += c;
    return s;
}

std::string family_name(Family f) {
    switch (f) {
        case Family::KG: return "KG";
        case Family::KG_s: return "KG_s";
        case Family::KG_partition: return "KG_partition";
        case Family::KG_stable: return "KG_stable";
        case Family::KG_wide: return "KG_wide";
        case Family::KG_avoidA: return "KG_avoidA";
        case Family::KG_setsystem: return "KG_setsystem";
    }
    throw std::logic_error("unknown family");
}

Family family_from_name(const std::string& name) {
    if (name == "KG") return Family::KG;
    if (name == "KG_s") return Family::KG_s;
    if (name == "KG_partition") return Family::KG_partition;
    if (name == "KG_stable") return Family::KG_stable;
    if (name == "KG_wide") return Family::KG_wide;
    if (name == "KG_avoidA") return Family::KG_avoidA;
    if (name == "KG_setsystem") return Family::KG_setsystem;
    throw std::invalid_argument("unknown family name: " + name);
}

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

void HypergraphSpec::validate() const {
    require(r >= 2, "arity r must be >= 2");
    require(n >= 1 && n <= kMaxGroundSet, "ground set size out of range");
    if (family == Family::KG_setsystem) {
        require(k >= 0 && k <= n, "k out of range");
    } else {
        require(k >= 1 && n >= k, "need n >= k >= 1");
    }

    bool want_svector = family == Family::KG_s;
    bool allow_svector = want_svector || family == Family::KG_setsystem;
    bool want_partition = family == Family::KG_partition;
    bool allow_partition = want_partition || family == Family::KG_wide ||
                           family == Family::KG_setsystem;
    require(!svector || allow_svector, "svector not allowed for this family");
    require(!want_svector || svector.has_value(), "family KG_s requires svector");
    require(!partition || allow_partition, "partition not allowed for this family");
    require(!want_partition || partition.has_value(),
            "family KG_partition requires partition");
    require(stable_s.has_value() == (family == Family::KG_stable),
            "stable_s exactly for family KG_stable");
    require(wide_t.has_value() == (family == Family::KG_wide),
            "wide_t exactly for family KG_wide");
    require(avoid_A.has_value() == (family == Family::KG_avoidA),
            "avoid_A exactly for family KG_avoidA");
    require(set_system.has_value() == (family == Family::KG_setsystem),
            "set_system exactly for family KG_setsystem");

    if (svector) {
        require(static_cast<int>(svector->caps.size()) == n, "svector length must be n");
        require(svector->r == r, "svector arity must match spec arity");
    }
    if (partition) require(partition->n == n, "partition must cover [n]");
    if (stable_s) require(*stable_s >= 1, "stable_s must be >= 1");
    if (wide_t) require(*wide_t >= 1, "wide_t must be >= 1");
    if (avoid_A) require((*avoid_A & ~full_mask(n)) == 0, "avoid_A exceeds ground set");
    if (set_system) {
        require(family == Family::KG_setsystem && !set_system->empty(),
                "set_system must be nonempty");
        for (Mask s : *set_system) {
            require(s != 0, "set_system contains the empty set");
            require((s & ~full_mask(n)) == 0, "set_system element exceeds ground set");
        }
    }
}

HypergraphSpec HypergraphSpec::kg(int n, int k, int r) {
    HypergraphSpec s;
    s.family = Family::KG;
    s.n = n;
    s.k = k;
    s.r = r;
    s.validate();
    return s;
}

HypergraphSpec HypergraphSpec::kg_s(int n, int k, SVector svector) {
    HypergraphSpec s;
    s.family = Family::KG_s;
    s.n = n;
    s.k = k;
    s.r = svector.r;
    s.svector = std::move(svector);
    s.validate();
    return s;
}

HypergraphSpec HypergraphSpec::kg_partition(int n, int k, int r, Partition partition) {
    HypergraphSpec s;
    s.family = Family::KG_partition;
    s.n = n;
    s.k = k;
    s.r = r;
    s.partition = std::move(partition);
    s.validate();
    return s;
}

HypergraphSpec HypergraphSpec::kg_stable(int n, int k, int r, int stable_s) {
    HypergraphSpec s;
    s.family = Family::KG_stable;
    s.n = n;
    s.k = k;
    s.r = r;
    s.stable_s = stable_s;
    s.validate();
    return s;
}

HypergraphSpec HypergraphSpec::kg_wide(int n, int k, int r, int wide_t,
                                       std::optional<Partition> partition) {
    HypergraphSpec s;
    s.family = Family::KG_wide;
    s.n = n;
    s.k = k;
    s.r = r;
    s.wide_t = wide_t;
    s.partition = std::move(partition);
    s.validate();
    return s;
}

HypergraphSpec HypergraphSpec::kg_avoid_a(int n, int k, int r, Mask avoid_a) {
    HypergraphSpec s;
    s.family = Family::KG_avoidA;
    s.n = n;
    s.k = k;
    s.r = r;
    s.avoid_A = avoid_a;
    s.validate();
    return s;
}

HypergraphSpec HypergraphSpec::kg_setsystem(int n, int r, std::vector<Mask> sets,
                                            std::optional<SVector> svector,
                                            std::optional<Partition> partition) {
    HypergraphSpec s;
    s.family = Family::KG_setsystem;
    s.n = n;
    s.k = 0;
    s.r = r;
    s.set_system = std::move(sets);
    s.svector = std::move(svector);
    s.partition = std::move(partition);
    s.validate();
    return s;
}

bool operator==(const HypergraphSpec& a, const HypergraphSpec& b) {
    return a.family == b.family && a.n == b.n && a.k == b.k && a.r == b.r &&
           a.svector == b.svector && a.partition == b.partition &&
           a.stable_s == b.stable_s && a.wide_t == b.wide_t && a.avoid_A == b.avoid_A &&
           a.set_system == b.set_system;
}

int Hypergraph::index_of(Mask mask) const {
    int lo = 0, hi = num_vertices() - 1;
    while (lo <= hi) {
        int mid = (lo + hi) / 2;
        if (vertices[mid].mask == mask) return mid;
        if (vertices[mid].mask < mask)
            lo = mid + 1;
        else
            hi = mid - 1;
    }
    return -1;
}

int cyclic_distance(int a, int b, int n) {
    int d = std::abs(a - b);
    return std::min(d, n - d);
}

bool is_s_stable(const KSubset& sigma, int s) {
    if (s < 1) throw std::invalid_argument("stability parameter must be >= 1");
    auto elems = sigma.elements();
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = i + 1; j < elems.size(); ++j)
            if (cyclic_distance(elems[i], elems[j], sigma.n) < s) return false;
    return true;
}

bool is_t_wide(const KSubset& sigma, int t) {
    if (t < 1) throw std::invalid_argument("wideness parameter must be >= 1");
    if (sigma.mask == 0) return false;
    return max_element(sigma.mask) - min_element(sigma.mask) + 1 > t;
}

namespace {

bool transversal(Mask sigma, const Partition& p) {
    for (Mask part : p.parts)
        if (popcount(sigma & part) > 1) return false;
    return true;
}

/// All k-subsets of [n] in ascending mask order.
void for_each_ksubset(int n, int k, const std::function<void(Mask)>& fn) {
    if (k == 0) {
        fn(0);
        return;
    }
    if (k > n) return;
    // Gosper's hack walks k-subsets in ascending mask order.
    Mask v = full_mask(k);
    Mask limit = Mask{1} << n;
    while (v < limit) {
        fn(v);
        Mask t = v | (v - 1);
        if (t == ~Mask{0}) break;
        v = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
    }
}

}  // namespace

std::vector<KSubset> enum_vertices(const HypergraphSpec& spec) {
    spec.validate();
    std::vector<KSubset> out;

    if (spec.family == Family::KG_setsystem) {
        std::set<Mask> uniq(spec.set_system->begin(), spec.set_system->end());
        for (Mask m : uniq) {
            if (spec.partition && !transversal(m, *spec.partition)) continue;
            out.emplace_back(m, spec.n);
        }
        return out;
    }

    for_each_ksubset(spec.n, spec.k, [&](Mask m) {
        KSubset v(m, spec.n);
        switch (spec.family) {
            case Family::KG:
            case Family::KG_s:
                break;
            case Family::KG_partition:
                if (!transversal(m, *spec.partition)) return;
                break;
            case Family::KG_stable:
                if (!is_s_stable(v, *spec.stable_s)) return;
                break;
            case Family::KG_wide:
                if (!is_t_wide(v, *spec.wide_t)) return;
                if (spec.partition && !transversal(m, *spec.partition)) return;
                break;
            case Family::KG_avoidA:
                if ((m & ~*spec.avoid_A) == 0) return;  // sigma inside A
                break;
            case Family::KG_setsystem:
                break;
        }
        out.push_back(v);
    });
    return out;
}

std::optional<std::vector<int>> support_feasible(const std::vector<KSubset>& support,
                                                 int r, const SVector& svector) {
    if (support.empty()) throw std::invalid_argument("support must be nonempty");
    int q = static_cast<int>(support.size());
    if (q > r) return std::nullopt;

    // Compositions of r into q positive parts, largest first part first, so
    // that e.g. (2,1) precedes (1,2).
    std::vector<int> comp(static_cast<std::size_t>(q));
    std::optional<std::vector<int>> found;
    Mask all = 0;
    for (const KSubset& s : support) all |= s.mask;
    if (max_element(all) > static_cast<int>(svector.caps.size()))
        throw std::invalid_argument("support element beyond the cap vector");
    auto feasible = [&](const std::vector<int>& m) {
        for (int e : mask_elements(all)) {
            int load = 0;
            for (int j = 0; j < q; ++j)
                if (support[static_cast<std::size_t>(j)].contains(e))
                    load += m[static_cast<std::size_t>(j)];
            if (load > svector.caps[static_cast<std::size_t>(e - 1)]) return false;
        }
        return true;
    };
    std::function<bool(int, int)> rec = [&](int pos, int remaining) {
        if (pos == q - 1) {
            comp[static_cast<std::size_t>(pos)] = remaining;
            if (feasible(comp)) {
                found = comp;
                return true;
            }
            return false;
        }
        int hi = remaining - (q - 1 - pos);
        for (int v = hi; v >= 1; --v) {
            comp[static_cast<std::size_t>(pos)] = v;
            if (rec(pos + 1, remaining - v)) return true;
        }
        return false;
    };
    rec(0, r);
    return found;
}

namespace {

bool family_uses_caps(const HypergraphSpec& spec) {
    return spec.family == Family::KG_s ||
           (spec.family == Family::KG_setsystem && spec.svector.has_value());
}

/// Supports for disjointness families: r-subsets of pairwise disjoint vertices.
std::vector<std::vector<int>> disjoint_supports(const std::vector<KSubset>& verts, int r,
                                                long long budget) {
    int V = static_cast<int>(verts.size());
    std::vector<std::vector<int>> out;
    long long candidates = 0;
    std::vector<int> chosen;
    std::function<void(int, Mask)> rec = [&](int start, Mask used) {
        if (static_cast<int>(chosen.size()) == r) {
            out.push_back(chosen);
            return;
        }
        for (int i = start; i < V; ++i) {
            if ((verts[static_cast<std::size_t>(i)].mask & used) != 0) continue;
            if (++candidates > budget)
                throw BudgetExceeded("support enumeration budget exceeded", candidates);
            chosen.push_back(i);
            rec(i + 1, used | verts[static_cast<std::size_t>(i)].mask);
            chosen.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

/// Supports for multiplicity-cap families: feasible vertex sets of size 2..r,
/// reduced to inclusion-minimal ones. The DFS stops extending feasible sets
/// (supersets cannot be minimal); subsets reached on later branches are
/// handled by the final minimality pass.
std::vector<std::vector<int>> capped_supports(const std::vector<KSubset>& verts, int r,
                                              const SVector& svector, long long budget) {
    int V = static_cast<int>(verts.size());
    std::vector<std::set<std::vector<int>>> kept(static_cast<std::size_t>(r + 1));
    long long candidates = 0;

    std::vector<int> chosen;
    std::vector<KSubset> chosen_sets;
    std::function<void(int)> rec = [&](int start) {
        int size = static_cast<int>(chosen.size());
        if (size >= 2) {
            if (++candidates > budget)
                throw BudgetExceeded("support enumeration budget exceeded", candidates);
            if (support_feasible(chosen_sets, r, svector)) {
                kept[static_cast<std::size_t>(size)].insert(chosen);
                return;
            }
        }
        if (size == r) return;
        for (int i = start; i < V; ++i) {
            chosen.push_back(i);
            chosen_sets.push_back(verts[static_cast<std::size_t>(i)]);
            rec(i + 1);
            chosen_sets.pop_back();
            chosen.pop_back();
        }
    };
    rec(0);

    std::vector<std::vector<int>> out;
    for (int size = 2; size <= r; ++size) {
        for (const auto& s : kept[static_cast<std::size_t>(size)]) {
            bool minimal = true;
            for (int small = 2; small < size && minimal; ++small)
                for (const auto& sub : kept[static_cast<std::size_t>(small)])
                    if (std::includes(s.begin(), s.end(), sub.begin(), sub.end())) {
                        minimal = false;
                        break;
                    }
            if (minimal) out.push_back(s);
        }
    }
    return out;
}

}  // namespace

Hypergraph build_minimal_supports(const HypergraphSpec& spec, long long candidate_budget) {
    spec.validate();
    Hypergraph hg;
    hg.spec = spec;
    hg.vertices = enum_vertices(spec);

    // All-ones caps force pairwise disjointness, so those instances share the
    // disjointness fast path (the definitions agree on all multisets; see the
    // equivalence tests).
    bool all_ones = !spec.svector ||
                    std::all_of(spec.svector->caps.begin(), spec.svector->caps.end(),
                                [](int c) { return c == 1; });
    if (family_uses_caps(spec) && !all_ones) {
        hg.min_supports =
            capped_supports(hg.vertices, spec.r, *spec.svector, candidate_budget);
    } else {
        hg.min_supports = disjoint_supports(hg.vertices, spec.r, candidate_budget);
    }
    std::sort(hg.min_supports.begin(), hg.min_supports.end());
    return hg;
}

namespace {

std::set<std::vector<Mask>> support_mask_sets(const Hypergraph& hg) {
    std::set<std::vector<Mask>> out;
    for (const auto& s : hg.min_supports) {
        std::vector<Mask> masks;
        for (int i : s) masks.push_back(hg.vertices[static_cast<std::size_t>(i)].mask);
        std::sort(masks.begin(), masks.end());
        out.insert(masks);
    }
    return out;
}

}  // namespace

bool same_supports(const Hypergraph& a, const Hypergraph& b) {
    return support_mask_sets(a) == support_mask_sets(b);
}

bool same_supports(const HypergraphSpec& a, const HypergraphSpec& b,
                   long long candidate_budget) {
    if (a.n != b.n) throw std::invalid_argument("same_supports requires equal n");
    return same_supports(build_minimal_supports(a, candidate_budget),
                         build_minimal_supports(b, candidate_budget));
}

void write_hkg(const Hypergraph& hg, std::ostream& out) {
    int n = hg.spec ? hg.spec->n : (hg.vertices.empty() ? 0 : hg.vertices[0].n);
    int k = hg.spec ? hg.spec->k : (hg.vertices.empty() ? 0 : hg.vertices[0].k);
    int r = hg.spec ? hg.spec->r : 0;
    out << "hkg " << n << ' ' << k << ' ' << r << ' ' << hg.num_vertices() << ' '
        << hg.num_supports() << '\n';
    for (const KSubset& v : hg.vertices) {
        bool first = true;
        for (int e : v.elements()) {
            if (!first) out << ' ';
            out << e;
            first = false;
        }
        out << '\n';
    }
    for (const auto& s : hg.min_supports) {
        bool first = true;
        for (int i : s) {
            if (!first) out << ' ';
            out << i;
            first = false;
        }
        out << '\n';
    }
}

std::string to_hkg(const Hypergraph& hg) {
    std::ostringstream os;
    write_hkg(hg, os);
    return os.str();
}

Hypergraph read_hkg(std::istream& in) {
    std::string tag;
    int n = 0, k = 0, r = 0, nv = 0, ns = 0;
    if (!(in >> tag >> n >> k >> r >> nv >> ns) || tag != "hkg")
        throw std::invalid_argument("bad hkg header");
    std::string line;
    std::getline(in, line);  // rest of header line

    Hypergraph hg;
    for (int i = 0; i < nv; ++i) {
        if (!std::getline(in, line)) throw std::invalid_argument("truncated hkg vertex list");
        std::istringstream ls(line);
        std::vector<int> elems;
        int e;
        while (ls >> e) elems.push_back(e);
        hg.vertices.emplace_back(mask_from_elements(elems, n), n);
    }
    for (int i = 0; i < ns; ++i) {
        if (!std::getline(in, line))
            throw std::invalid_argument("truncated hkg support list");
        std::istringstream ls(line);
        std::vector<int> idx;
        int v;
        while (ls >> v) {
            if (v < 0 || v >= nv) throw std::invalid_argument("hkg support index out of range");
            idx.push_back(v);
        }
        if (idx.size() < 2) throw std::invalid_argument("hkg support smaller than 2");
        std::vector<int> sorted = idx;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("hkg support repeats a vertex");
        hg.min_supports.push_back(std::move(idx));
    }
    return hg;
}

Hypergraph hkg_from_string(const std::string& text) {
    std::istringstream is(text);
    return read_hkg(is);
}

}  // namespace kgh
