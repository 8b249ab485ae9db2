#pragma once

// Exhaustive verification over small graphs: enumerate isomorphism classes,
// confirm that every minimum (n,k,t)- and (n,k,t,r)-graph is a disjoint
// union of cliques, and explore minimum clique counts, inclusion-minimal
// graphs, and the clique-blowup comparison.
//
// Enumeration streams all 2^C(n,2) edge masks in Gray-code order.  A mask is
// exactly the packed upper-triangle encoding used by the canonical form, so
// a cheap screen first rejects masks that an adjacent label transposition
// would strictly decrease; survivors are canonicalized in full and merged
// through a set.  The canonical minimum survives every screen, so each
// isomorphism class is represented exactly once.  Shards over the index
// range are independent and the final sort makes the output identical for
// any worker count.

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <unordered_set>
#include <utility>
#include <vector>

#include "nkt/canonical.hpp"
#include "nkt/clique_union.hpp"
#include "nkt/errors.hpp"
#include "nkt/extremal.hpp"
#include "nkt/graph.hpp"
#include "nkt/verify.hpp"

namespace nkt {

inline constexpr int kEnumerationMaxDefault = 7;
inline constexpr int kEnumerationMaxOptIn = 8;

struct SearchOptions {
    int jobs = 0;       // 0 means all available cores
    bool allow_n8 = false;
    // Called with (masks done, masks total) at coarse intervals.
    std::function<void(std::uint64_t, std::uint64_t)> progress;
};

namespace detail {

inline long long binomial(int n, int r) {
    if (r < 0 || n < 0 || r > n) return 0;
    r = std::min(r, n - r);
    long long res = 1;
    for (int i = 1; i <= r; ++i) res = res * (n - r + i) / i;
    return res;
}

// Pairs exchanged by swapping labels v and v+1, as (high bit, low bit)
// positions in the packed encoding, highest first.  A mask strictly
// decreases under the swap iff the first position pair holding unequal bits
// has the 1 on the high side.
struct TranspositionScreen {
    int n = 0;
    std::vector<std::vector<std::pair<int, int>>> swaps;

    explicit TranspositionScreen(int n_) : n(n_), swaps(static_cast<std::size_t>(std::max(0, n_ - 1))) {
        int q_total = n * (n - 1) / 2;
        auto bit_of = [&](int i, int j) { return q_total - 1 - (j * (j - 1) / 2 + i); };
        for (int v = 0; v + 1 < n; ++v) {
            auto& tbl = swaps[static_cast<std::size_t>(v)];
            for (int u = 0; u < n; ++u) {
                if (u == v || u == v + 1) continue;
                int p1 = bit_of(std::min(u, v), std::max(u, v));
                int p2 = bit_of(std::min(u, v + 1), std::max(u, v + 1));
                tbl.emplace_back(std::max(p1, p2), std::min(p1, p2));
            }
            std::sort(tbl.begin(), tbl.end(),
                      [](const auto& a, const auto& b) { return a.first > b.first; });
        }
    }

    bool survives(std::uint64_t mask) const {
        for (const auto& tbl : swaps) {
            for (const auto& [hb, lb] : tbl) {
                unsigned a = (mask >> hb) & 1u;
                unsigned b = (mask >> lb) & 1u;
                if (a != b) {
                    if (a) return false;
                    break;
                }
            }
        }
        return true;
    }
};

}  // namespace detail

// One representative per isomorphism class on n vertices, sorted by edge
// count then by packed canonical form.  Deterministic for any job count.
inline std::vector<Graph> enumerate_nonisomorphic(int n, const SearchOptions& opts = {}) {
    if (n < 1) throw InvalidInputError("enumeration needs at least one vertex");
    if (n > kEnumerationMaxOptIn)
        throw UnsupportedSizeError("enumeration caps at order " +
                                   std::to_string(kEnumerationMaxOptIn));
    if (n == kEnumerationMaxOptIn && !opts.allow_n8)
        throw UnsupportedSizeError(
            "order 8 scans 2^28 labeled graphs and needs the explicit opt-in");

    const int q_total = n * (n - 1) / 2;
    const std::uint64_t total = 1ULL << q_total;
    detail::TranspositionScreen screen(n);

    std::vector<std::pair<int, int>> pair_of_bit(static_cast<std::size_t>(q_total));
    {
        int q = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++q)
                pair_of_bit[static_cast<std::size_t>(q_total - 1 - q)] = {i, j};
    }

    int jobs = opts.jobs > 0 ? opts.jobs
                             : std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs), total));

    std::atomic<std::uint64_t> done{0};
    std::mutex progress_mu;
    constexpr std::uint64_t kBatch = 1ULL << 20;

    auto run_range = [&](std::uint64_t lo, std::uint64_t hi,
                         std::unordered_set<std::uint64_t>& out) {
        std::uint64_t mask = lo ^ (lo >> 1);
        std::uint64_t since_report = 0;
        for (std::uint64_t idx = lo;;) {
            if (screen.survives(mask)) {
                std::uint32_t rows[32] = {};
                for (int p = 0; p < q_total; ++p)
                    if ((mask >> p) & 1u) {
                        auto [i, j] = pair_of_bit[static_cast<std::size_t>(p)];
                        rows[i] |= 1u << j;
                        rows[j] |= 1u << i;
                    }
                out.insert(detail::canonical_bits(n, rows, mask));
            }
            ++idx;
            if (++since_report == kBatch) {
                std::uint64_t d = done.fetch_add(since_report) + since_report;
                since_report = 0;
                if (opts.progress) {
                    std::lock_guard<std::mutex> lock(progress_mu);
                    opts.progress(d, total);
                }
            }
            if (idx >= hi) break;
            mask ^= 1ULL << std::countr_zero(idx);
        }
        done.fetch_add(since_report);
    };

    std::vector<std::unordered_set<std::uint64_t>> found(static_cast<std::size_t>(jobs));
    if (jobs == 1) {
        run_range(0, total, found[0]);
    } else {
        std::vector<std::thread> workers;
        std::vector<std::exception_ptr> errs(static_cast<std::size_t>(jobs));
        for (int w = 0; w < jobs; ++w) {
            std::uint64_t lo = total / static_cast<std::uint64_t>(jobs) * static_cast<std::uint64_t>(w);
            std::uint64_t hi = w + 1 == jobs
                                   ? total
                                   : total / static_cast<std::uint64_t>(jobs) *
                                         static_cast<std::uint64_t>(w + 1);
            workers.emplace_back([&, lo, hi, w] {
                try {
                    run_range(lo, hi, found[static_cast<std::size_t>(w)]);
                } catch (...) {
                    errs[static_cast<std::size_t>(w)] = std::current_exception();
                }
            });
        }
        for (auto& th : workers) th.join();
        for (auto& e : errs)
            if (e) std::rethrow_exception(e);
    }

    std::unordered_set<std::uint64_t> merged;
    for (auto& s : found) merged.insert(s.begin(), s.end());
    std::vector<std::uint64_t> bits(merged.begin(), merged.end());
    std::sort(bits.begin(), bits.end(), [](std::uint64_t a, std::uint64_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    if (opts.progress) opts.progress(total, total);

    std::vector<Graph> out;
    out.reserve(bits.size());
    for (std::uint64_t b : bits) out.push_back(detail::unpack_triangle(n, b));
    return out;
}

struct SearchReport {
    NktParams params;
    std::optional<int> s;            // clique size for count searches
    std::uint64_t scanned = 0;       // isomorphism classes inspected
    std::uint64_t qualifying = 0;    // classes meeting the membership predicate
    bool feasible = false;           // some class qualified
    long long min_value = 0;         // minimum objective over qualifying classes
    std::vector<Graph> witnesses;    // every optimum, in enumeration order
    bool all_clique_unions = false;  // every witness is a clique union
    std::vector<CliqueUnion> witness_partitions;  // partitions of the witnesses, sorted
    bool formula_feasible = false;
    long long formula_min = 0;
    std::vector<CliqueUnion> formula_minimizers;
    std::optional<long long> clique_floor;  // lower bound for count searches, when known
    bool value_matches = false;       // brute minimum agrees with the closed form
    bool minimizers_match = false;    // witness partitions equal the closed-form set
    bool conjecture_holds = false;    // every witness is a clique union, vacuously if none
};

namespace detail {

template <class Pred, class Objective>
SearchReport minimum_scan(std::span<const Graph> classes, Pred pred, Objective objective) {
    SearchReport rep;
    rep.scanned = classes.size();
    for (const Graph& g : classes) {
        if (!pred(g)) continue;
        ++rep.qualifying;
        long long v = objective(g);
        if (!rep.feasible || v < rep.min_value) {
            rep.feasible = true;
            rep.min_value = v;
            rep.witnesses.assign(1, g);
        } else if (v == rep.min_value) {
            rep.witnesses.push_back(g);
        }
    }
    rep.all_clique_unions = true;
    for (const Graph& g : rep.witnesses) {
        if (auto u = as_clique_union(g))
            rep.witness_partitions.push_back(*u);
        else
            rep.all_clique_unions = false;
    }
    std::sort(rep.witness_partitions.begin(), rep.witness_partitions.end());
    rep.conjecture_holds = !rep.feasible || rep.all_clique_unions;
    return rep;
}

inline void attach_formula(SearchReport& rep, const ExtremalRecord& rec) {
    rep.formula_feasible = rec.feasible;
    rep.formula_min = rec.min_edges;
    rep.formula_minimizers = rec.minimizers;
    rep.value_matches = rep.feasible == rec.feasible &&
                        (!rep.feasible || rep.min_value == rec.min_edges);
    rep.minimizers_match = rep.feasible
                               ? (rep.all_clique_unions &&
                                  rep.witness_partitions == rec.minimizers)
                               : !rec.feasible;
}

}  // namespace detail

// Brute minimum edge count over all (n,k,t) classes, checked against the
// closed form; holds iff every minimizer is a disjoint union of cliques.
inline SearchReport verify_strong_conjecture(std::span<const Graph> classes, int n, int k,
                                             int t) {
    detail::check_positive({n, k, t});
    auto rep = detail::minimum_scan(
        classes, [&](const Graph& g) { return is_nkt(g, k, t); },
        [](const Graph& g) { return static_cast<long long>(g.edge_count()); });
    rep.params = {n, k, t, std::nullopt};
    detail::attach_formula(rep, min_nkt(n, k, t));
    return rep;
}

inline SearchReport verify_strong_conjecture(int n, int k, int t,
                                             const SearchOptions& opts = {}) {
    auto classes = enumerate_nonisomorphic(n, opts);
    return verify_strong_conjecture(classes, n, k, t);
}

// Same restricted to independence number exactly r, against min_nktr.
inline SearchReport verify_mainthm(std::span<const Graph> classes, int n, int k, int t,
                                   int r) {
    detail::check_positive({n, k, t, r});
    auto rep = detail::minimum_scan(
        classes,
        [&](const Graph& g) { return is_nkt(g, k, t) && independence_number(g) == r; },
        [](const Graph& g) { return static_cast<long long>(g.edge_count()); });
    rep.params = {n, k, t, r};
    detail::attach_formula(rep, min_nktr(n, k, t, r));
    return rep;
}

inline SearchReport verify_mainthm(int n, int k, int t, int r,
                                   const SearchOptions& opts = {}) {
    auto classes = enumerate_nonisomorphic(n, opts);
    return verify_mainthm(classes, n, k, t, r);
}

// Minimum number of s-vertex cliques over all (n,k,t) classes.  When every
// such graph is known to contain K_{n-k+t} (n >= k >= t >= 3, k <= 2t-2) the
// binomial floor C(n-k+t, s) is attached.
inline SearchReport min_clique_count(std::span<const Graph> classes, int n, int k, int t,
                                     int s) {
    detail::check_positive({n, k, t, s});
    auto rep = detail::minimum_scan(
        classes, [&](const Graph& g) { return is_nkt(g, k, t); },
        [&](const Graph& g) { return static_cast<long long>(count_cliques(g, s)); });
    rep.params = {n, k, t, std::nullopt};
    rep.s = s;
    if (n >= k && k >= t && t >= 3 && k <= 2 * t - 2)
        rep.clique_floor = detail::binomial(n - k + t, s);
    return rep;
}

inline SearchReport min_clique_count(int n, int k, int t, int s,
                                     const SearchOptions& opts = {}) {
    auto classes = enumerate_nonisomorphic(n, opts);
    return min_clique_count(classes, n, k, t, s);
}

struct SaturationReport {
    NktParams params;
    std::uint64_t scanned = 0;
    std::uint64_t qualifying = 0;   // classes passing the membership test
    std::vector<Graph> minimal;     // inclusion-minimal classes, enumeration order
    bool feasible = false;
    long long max_edges = 0;
    std::vector<Graph> max_witnesses;
};

// All classes that are (n,k,t)-graphs and stop being one after deleting any
// single edge; reports the maximum edge count among them.  An edgeless
// qualifying class is trivially minimal.
inline SaturationReport inclusion_minimal(std::span<const Graph> classes, int n, int k,
                                          int t) {
    detail::check_positive({n, k, t});
    SaturationReport rep;
    rep.params = {n, k, t, std::nullopt};
    rep.scanned = classes.size();
    for (const Graph& g : classes) {
        if (!is_nkt(g, k, t)) continue;
        ++rep.qualifying;
        bool minimal = true;
        for (int j = 1; minimal && j < g.order(); ++j)
            for (int i = 0; i < j; ++i) {
                if (!g.has_edge(i, j)) continue;
                Graph h = g;
                h.remove_edge(i, j);
                if (is_nkt(h, k, t)) {
                    minimal = false;
                    break;
                }
            }
        if (!minimal) continue;
        rep.minimal.push_back(g);
        long long e = static_cast<long long>(g.edge_count());
        if (!rep.feasible || e > rep.max_edges) {
            rep.feasible = true;
            rep.max_edges = e;
            rep.max_witnesses.assign(1, g);
        } else if (e == rep.max_edges) {
            rep.max_witnesses.push_back(g);
        }
    }
    return rep;
}

inline SaturationReport inclusion_minimal(int n, int k, int t,
                                          const SearchOptions& opts = {}) {
    auto classes = enumerate_nonisomorphic(n, opts);
    return inclusion_minimal(classes, n, k, t);
}

struct NikiforovReport {
    int n = 0;
    int m = 0;                   // blob size n/5
    long long blowup_count = 0;  // K_4 count of the C5 clique-blowup
    long long split_count = 0;   // K_4 count of two balanced cliques, 2*C(n/2,4)
    bool strict_less = false;
    bool realized = false;       // counted on an explicit graph
    bool blowup_is_nkt = false;  // blowup passes the (n,3,2) membership test
};

// K_4 counts of the C5 clique-blowup versus the two-clique split on the same
// n.  The blowup has independence number 2, so both are (n,3,2)-graphs; the
// blowup has strictly fewer 4-cliques.  Realized explicitly when the blowup
// fits in 32 vertices, otherwise by closed-form binomials: cliques of the
// blowup live inside the five unions of adjacent blobs, and those inside a
// single blob are shared by exactly two such unions.
inline NikiforovReport nikiforov_compare(int n) {
    if (n < 10 || n % 10 != 0)
        throw InvalidInputError("comparison needs n divisible by 10");
    if (n > 100000) throw UnsupportedSizeError("counts overflow past n = 100000");
    NikiforovReport rep;
    rep.n = n;
    rep.m = n / 5;
    rep.split_count = 2 * detail::binomial(n / 2, 4);
    long long formula =
        5 * detail::binomial(2 * rep.m, 4) - 5 * detail::binomial(rep.m, 4);
    if (n <= kMaxVertices) {
        Graph b = blowup(cycle_graph(5), rep.m);
        rep.blowup_count = static_cast<long long>(count_cliques(b, 4));
        if (rep.blowup_count != formula)
            throw Error("internal: realized blowup count disagrees with the closed form");
        rep.blowup_is_nkt = is_nkt(b, 3, 2);
        rep.realized = true;
    } else {
        rep.blowup_count = formula;
        rep.blowup_is_nkt = true;  // independence number 2 regardless of size
    }
    rep.strict_less = rep.blowup_count < rep.split_count;
    return rep;
}

}  // namespace nkt
