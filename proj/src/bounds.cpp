#include "kgh/bounds.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace kgh {

long long ceil_div(long long a, long long b) {
    if (b <= 0) throw std::invalid_argument("ceil_div requires positive denominator");
    long long q = a / b;
    if (a % b != 0 && a > 0) ++q;
    return q;
}

long long PrimeFactorization::value() const {
    long long v = 1;
    for (auto [p, e] : pairs)
        for (int i = 0; i < e; ++i) v *= p;
    return v;
}

PrimeFactorization factorize(long long r) {
    if (r < 2) throw std::invalid_argument("factorize requires r >= 2");
    PrimeFactorization f;
    for (long long p = 2; p * p <= r; ++p) {
        if (r % p == 0) {
            int e = 0;
            while (r % p == 0) {
                r /= p;
                ++e;
            }
            f.pairs.emplace_back(p, e);
        }
    }
    if (r > 1) f.pairs.emplace_back(r, 1);
    return f;
}

long long b_of_r(long long r) {
    long long b = 1;
    for (auto [p, e] : factorize(r).pairs) {
        long long base = (p == 2) ? 2 : p - 1;
        for (int i = 0; i < e; ++i) b *= base;
    }
    return b;
}

long long afl_lower(long long n, long long k, long long r) {
    if (r < 2 || k < 1) throw std::invalid_argument("afl_lower requires r >= 2, k >= 1");
    return ceil_div(n - r * (k - 1), r - 1);
}

long long gek_lower(long long n, long long k, long long r, const SVector& svector) {
    if (static_cast<long long>(svector.caps.size()) != n || svector.r != r)
        throw std::invalid_argument("svector does not match (n, r)");
    return ceil_div(svector.sum() - r * (k - 1), r - 1);
}

long long lz_upper(long long n, long long k, long long r, long long s) {
    if (s < 2 || s > r) throw std::invalid_argument("lz_upper requires 2 <= s <= r");
    long long inner = ceil_div(r - 1, s - 1);
    return 1 + ceil_div((s - 1) * n - r * k + 1, inner * (s - 1));
}

int greedy_kneser_color(Mask sigma, int n, int k, int r) {
    if (n < static_cast<long long>(r) * k)
        throw std::invalid_argument("greedy coloring requires n >= rk");
    long long total = afl_lower(n, k, r);
    long long block = ceil_div(min_element(sigma), r - 1);
    return static_cast<int>(std::min(block, total));
}

Coloring greedy_kneser_coloring(int n, int k, int r) {
    HypergraphSpec spec = HypergraphSpec::kg(n, k, r);
    auto verts = enum_vertices(spec);
    Coloring c;
    c.m = static_cast<int>(afl_lower(n, k, r));
    c.colors.reserve(verts.size());
    for (const KSubset& v : verts) c.colors.push_back(greedy_kneser_color(v.mask, n, k, r));
    return c;
}

TwideParams twide_proof_params(int r, int k) {
    if (r < 2 || k < 1) throw std::invalid_argument("twide params require r >= 2, k >= 1");
    // The window (r(k-2), r(k-1)-1] contains exactly one multiple of r-1, but
    // d must also be a nonnegative dimension.
    long long lo = static_cast<long long>(r) * (k - 2);
    long long hi = static_cast<long long>(r) * (k - 1) - 1;
    for (long long d = 0; (r - 1) * d <= hi; ++d) {
        long long v = static_cast<long long>(r - 1) * d;
        if (v > lo && v <= hi) {
            TwideParams p;
            p.d = static_cast<int>(d);
            p.m = static_cast<int>(v - lo - 1);
            p.t_max = static_cast<int>(static_cast<long long>(r) * (k - 3) + 2);
            return p;
        }
    }
    throw std::invalid_argument("no nonnegative d with r(k-1)-1 >= (r-1)d > r(k-2)");
}

int max_wide_t(const SVector& svector, int r, int k) {
    long long bound = static_cast<long long>(r) * (k - 3) + 2;
    int n = static_cast<int>(svector.caps.size());
    int best = 0;
    for (int t = 1; t <= n; ++t) {
        bool ok = true;
        for (int j = 0; j + t <= n && ok; ++j) {
            long long sum = 0;
            for (int i = j; i < j + t; ++i) sum += svector.caps[static_cast<std::size_t>(i)];
            if (sum > bound) ok = false;
        }
        if (!ok) break;  // window sums grow with t
        best = t;
    }
    return best;
}

BoundReport make_bound_report(int n, int k, int r, const SVector& svector) {
    BoundReport rep;
    rep.n = n;
    rep.k = k;
    rep.r = r;
    rep.svector = svector;
    rep.b_r = b_of_r(r);
    rep.gek = gek_lower(n, k, r, svector);
    rep.afl = afl_lower(n, k, r);
    rep.applicable = true;
    for (int c : svector.caps)
        if (c > rep.b_r - 1) rep.applicable = false;
    if (svector.is_uniform()) {
        long long s = svector.caps[0] + 1;
        if (s >= 2 && s <= r) rep.lz = lz_upper(n, k, r, s);
    }
    return rep;
}

std::string bound_report_csv_header() {
    return "n,k,r,s_repr,b_r,gek_lower,lz_upper,applicable";
}

std::string bound_report_csv(const BoundReport& rep) {
    std::ostringstream os;
    os << rep.n << ',' << rep.k << ',' << rep.r << ',';
    if (rep.svector.is_uniform()) {
        os << rep.svector.caps[0] + 1;
    } else {
        for (std::size_t i = 0; i < rep.svector.caps.size(); ++i) {
            if (i) os << ';';
            os << rep.svector.caps[i];
        }
    }
    os << ',' << rep.b_r << ',' << rep.gek << ',';
    if (rep.lz) os << *rep.lz;
    os << ',' << (rep.applicable ? "true" : "false");
    return os.str();
}

namespace {

bool is_prime(long long r) {
    auto f = factorize(r);
    return f.pairs.size() == 1 && f.pairs[0].second == 1;
}

bool is_power_of_two(long long r) { return (r & (r - 1)) == 0; }

}  // namespace

std::optional<long long> proven_lower_bound(const HypergraphSpec& spec) {
    long long n = spec.n, k = spec.k, r = spec.r;
    switch (spec.family) {
        case Family::KG:
            return afl_lower(n, k, r);

        case Family::KG_s: {
            long long cap_limit = b_of_r(r) - 1;
            for (int c : spec.svector->caps)
                if (c > cap_limit) return std::nullopt;
            return gek_lower(n, k, r, *spec.svector);
        }

        case Family::KG_partition:
            if (n >= r * k && spec.partition->max_part_size() <= b_of_r(r))
                return afl_lower(n, k, r);
            return std::nullopt;

        case Family::KG_stable:
            // s-stable vertices contain the r-stable ones, whose equality case
            // is settled for powers of two (and classically for r = 2).
            if (n >= r * k && *spec.stable_s <= r && is_power_of_two(r))
                return afl_lower(n, k, r);
            if (*spec.stable_s == 1) return afl_lower(n, k, r);
            return std::nullopt;

        case Family::KG_wide: {
            if (n < r * k) return std::nullopt;
            int max_part = spec.partition ? spec.partition->max_part_size() : 1;
            if (*spec.wide_t < k) {
                // Wideness is vacuous; fall back to the transversal case.
                if (max_part <= b_of_r(r)) return afl_lower(n, k, r);
                return std::nullopt;
            }
            if (is_prime(r) && max_part <= r - 1 &&
                static_cast<long long>(*spec.wide_t) <= r * (k - 3) + 2)
                return afl_lower(n, k, r);
            return std::nullopt;
        }

        case Family::KG_avoidA: {
            long long a = popcount(*spec.avoid_A);
            std::optional<long long> best;
            auto consider = [&](long long v) {
                if (!best || v > *best) best = v;
            };
            if (n >= r * k && a <= b_of_r(r) * (k - 1)) consider(afl_lower(n, k, r));
            if (n >= 2 * r * k) {
                if (a <= 2 * (k - 1)) consider(afl_lower(n, k, r));
                if (a >= r * k - 1)
                    consider(ceil_div(n - std::max(r * (k - 1), a), r - 1));
                // The sandwich lower bound is established only on the open
                // range between those settled cases.
                if (a >= 2 * k - 1 && a <= r * k - 2)
                    consider(ceil_div(n - r * (k - 1) - a / k, r - 1));
            }
            return best;
        }

        case Family::KG_setsystem:
            return std::nullopt;
    }
    return std::nullopt;
}

namespace {

Coloring compress_colors(std::vector<int> raw) {
    std::map<int, int> remap;
    for (int c : raw) remap.emplace(c, 0);
    int next = 1;
    for (auto& [c, to] : remap) to = next++;
    Coloring out;
    out.colors.reserve(raw.size());
    for (int c : raw) out.colors.push_back(remap[c]);
    out.m = next - 1;
    return out;
}

}  // namespace

std::optional<Coloring> construction_upper_hint(const HypergraphSpec& spec,
                                                const std::vector<KSubset>& vertices) {
    long long n = spec.n, k = spec.k, r = spec.r;
    bool disjointness_family =
        spec.family == Family::KG || spec.family == Family::KG_partition ||
        spec.family == Family::KG_stable || spec.family == Family::KG_wide ||
        spec.family == Family::KG_avoidA ||
        (spec.family == Family::KG_s &&
         std::all_of(spec.svector->caps.begin(), spec.svector->caps.end(),
                     [](int c) { return c == 1; }));
    if (!disjointness_family || k < 1 || n < r * k) return std::nullopt;

    std::vector<int> raw;
    raw.reserve(vertices.size());
    if (spec.family == Family::KG_avoidA &&
        popcount(*spec.avoid_A) >= r * (k - 1)) {
        // Every vertex meets U = [n] \ A; color by blocks of r-1 elements of U.
        Mask u = full_mask(spec.n) & ~*spec.avoid_A;
        std::vector<int> index_in_u(static_cast<std::size_t>(spec.n + 1), 0);
        int idx = 0;
        for (int e : mask_elements(u)) index_in_u[static_cast<std::size_t>(e)] = ++idx;
        for (const KSubset& v : vertices) {
            Mask meet = v.mask & u;
            if (meet == 0) return std::nullopt;  // not a vertex of this family
            raw.push_back(static_cast<int>(
                ceil_div(index_in_u[static_cast<std::size_t>(min_element(meet))], r - 1)));
        }
    } else {
        for (const KSubset& v : vertices)
            raw.push_back(greedy_kneser_color(v.mask, spec.n, spec.k, spec.r));
    }
    return compress_colors(std::move(raw));
}

}  // namespace kgh
