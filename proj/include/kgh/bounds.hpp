#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kgh/core.hpp"
#include "kgh/solver.hpp"

namespace kgh {

/// Exact ceiling of a/b for integer a and b > 0 (a may be negative).
long long ceil_div(long long a, long long b);

struct PrimeFactorization {
    std::vector<std::pair<long long, int>> pairs;  // (prime, exponent), primes increasing

    long long value() const;
};

PrimeFactorization factorize(long long r);

/// For r = 2^a0 * p1^a1 * ... * pt^at, the product 2^a0 * (p1-1)^a1 * ... * (pt-1)^at.
long long b_of_r(long long r);

/// ceil((n - r(k-1)) / (r-1)); may be <= 0 for small n.
long long afl_lower(long long n, long long k, long long r);

/// ceil(((sum_i s_i) - r(k-1)) / (r-1)).
long long gek_lower(long long n, long long k, long long r, const SVector& svector);

/// 1 + ceil(((s-1)n - rk + 1) / (ceil((r-1)/(s-1)) * (s-1))); requires 2 <= s <= r.
/// The inner ceiling is evaluated first and the whole product sits inside the
/// outer ceiling.
long long lz_upper(long long n, long long k, long long r, long long s);

/// A proper coloring of KG^r(n,k) with exactly afl_lower(n,k,r) colors:
/// min-element blocks of size r-1, sets inside the final rk-1 elements share
/// the last color. Requires n >= rk. Indexed by the lex vertex order of KG.
Coloring greedy_kneser_coloring(int n, int k, int r);

/// Color of a single k-subset under the greedy scheme above.
int greedy_kneser_color(Mask sigma, int n, int k, int r);

struct TwideParams {
    int d = 0;      // the unique d with r(k-1)-1 >= (r-1)d > r(k-2), d >= 0
    int m = 0;      // (r-1)d - r(k-2) - 1
    int t_max = 0;  // r(k-3)+2
};

/// Parameters used by the wide-subhypergraph argument. Throws when no
/// nonnegative integer d satisfies the window (possible for small k).
TwideParams twide_proof_params(int r, int k);

/// Maximal t >= 1 with every length-t window sum of caps <= r(k-3)+2
/// (0 if even t = 1 fails). Uniform caps reproduce floor((r(k-3)+2)/cap).
int max_wide_t(const SVector& svector, int r, int k);

struct BoundReport {
    int n = 0, k = 0, r = 0;
    SVector svector;
    long long b_r = 0;
    long long gek = 0;
    long long afl = 0;
    std::optional<long long> lz;  // uniform caps only
    bool applicable = false;      // all caps <= b(r)-1, i.e. s <= b(r)
};

BoundReport make_bound_report(int n, int k, int r, const SVector& svector);

/// One CSV row: n,k,r,s_repr,b_r,gek_lower,lz_upper,applicable
std::string bound_report_csv_header();
std::string bound_report_csv(const BoundReport& report);

/// A lower bound on chi(spec) that follows from a proven statement covering
/// the instance, if any. Used to seed the upward chi search.
std::optional<long long> proven_lower_bound(const HypergraphSpec& spec);

/// A verified-by-construction proper coloring of the instance's vertex list,
/// if a construction applies (disjointness families only). Colors are
/// compressed to 1..U.
std::optional<Coloring> construction_upper_hint(const HypergraphSpec& spec,
                                                const std::vector<KSubset>& vertices);

}  // namespace kgh
