#pragma once

// Minimum edge counts among (n,k,t)- and (n,k,t,r)-graphs, in closed form
// over clique-union partitions, plus the recursive construction that builds
// a minimizer by descending through t.
//
// A clique union with parts p_1 >= ... >= p_r is an (n,k,t)-graph exactly
// when (t-1)*#{p_i >= t} + sum of the parts below t is at most k-1, so the
// minimum over graphs with independence number r is a bounded scan over
// partitions of n into r parts; balancing within the large and small groups
// minimizes the edge count for a fixed split, and the full optimum set comes
// from a pruned partition search at the optimal value.

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nkt/clique_union.hpp"
#include "nkt/errors.hpp"
#include "nkt/verify.hpp"

namespace nkt {

// Above this order only the optimal value and one witness are reported.
inline constexpr int kPartitionOptimaCap = 40;

enum class InfeasibleReason { none, no_such_graphs, alpha_bound, r_out_of_range };

inline const char* to_token(InfeasibleReason r) {
    switch (r) {
        case InfeasibleReason::no_such_graphs: return "no-such-graphs";
        case InfeasibleReason::alpha_bound: return "alpha-bound";
        case InfeasibleReason::r_out_of_range: return "r-out-of-range";
        default: return "none";
    }
}

struct ExtremalRecord {
    NktParams params;
    bool feasible = false;
    InfeasibleReason reason = InfeasibleReason::none;
    long long min_edges = 0;
    std::vector<CliqueUnion> minimizers;  // sorted ascending
    bool exhaustive = true;

    std::vector<int> alphas() const {
        std::vector<int> out;
        out.reserve(minimizers.size());
        for (const auto& u : minimizers) out.push_back(u.part_count());
        return out;
    }
};

struct CandidateDecomposition {
    int a = 0;
    int b = 0;
    CliqueUnion partition;  // a singletons plus b balanced parts of size >= t
    long long edges = 0;
};

struct PartitionOptima {
    bool feasible = false;
    long long min_edges = 0;
    std::vector<CliqueUnion> optima;  // sorted ascending
    bool exhaustive = true;
};

namespace detail {

inline void check_positive(std::initializer_list<int> vals) {
    for (int v : vals)
        if (v < 1) throw InvalidInputError("parameters must be at least 1");
}

// Vertices a largest K_t-free subgraph keeps from one clique part.
inline long long part_usage(int p, int t) { return p < t ? p : t - 1; }

// Least possible total usage over `parts` parts summing to `total`: usage is
// concave in the part size, so concentrate the mass into a single part.
inline long long min_usage(long long total, int parts, int t) {
    if (parts == 0) return 0;
    long long big = total - (parts - 1);
    return static_cast<long long>(parts - 1) * std::min(1, t - 1) +
           std::min<long long>(big, t - 1);
}

inline void optima_rec(int remaining, int parts_left, int max_part, long long cost,
                       long long usage, long long target, long long budget, int t,
                       std::vector<int>& stack, std::vector<CliqueUnion>& out) {
    if (parts_left == 0) {
        if (remaining == 0 && cost == target && usage <= budget) out.emplace_back(stack);
        return;
    }
    if (remaining < parts_left) return;
    if (static_cast<long long>(max_part) * parts_left < remaining) return;
    if (cost + balanced_clique_union_edges(remaining, parts_left) > target) return;
    if (usage + min_usage(remaining, parts_left, t) > budget) return;
    int hi = std::min(max_part, remaining - (parts_left - 1));
    int lo = (remaining + parts_left - 1) / parts_left;
    for (int p = hi; p >= lo; --p) {
        stack.push_back(p);
        optima_rec(remaining - p, parts_left - 1, p, cost + static_cast<long long>(p) * (p - 1) / 2,
                   usage + part_usage(p, t), target, budget, t, stack, out);
        stack.pop_back();
    }
}

}  // namespace detail

// All (a,b) with a + b(t-1) = k-1 and 1 <= b <= min((k-1)/(t-1), n-k+1);
// each yields the (n,k,t)-graph aK1 + balanced b-part union, and every
// minimum clique-union (n,k,t)-graph has this shape.
inline std::vector<CandidateDecomposition> candidate_decompositions(int n, int k, int t) {
    detail::check_positive({n, k, t});
    if (t < 2 || k < t || n < k)
        throw InvalidInputError("candidate decompositions need n >= k >= t >= 2");
    std::vector<CandidateDecomposition> out;
    int bmax = std::min((k - 1) / (t - 1), n - k + 1);
    for (int b = 1; b <= bmax; ++b) {
        int a = (k - 1) - b * (t - 1);
        std::vector<int> parts = balanced_clique_union(n - a, b).parts();
        parts.insert(parts.end(), static_cast<std::size_t>(a), 1);
        CandidateDecomposition c;
        c.a = a;
        c.b = b;
        c.partition = CliqueUnion(std::move(parts));
        c.edges = c.partition.edge_count();
        out.push_back(std::move(c));
    }
    return out;
}

// Minimum edges over clique unions of n vertices with exactly r parts that
// are (n,k,t)-graphs, with every optimal partition (below the cap).
inline PartitionOptima feasible_min_partition(int n, int k, int t, int r) {
    detail::check_positive({n, k, t, r});
    PartitionOptima res;
    if (r > n) return res;
    long long budget = k - 1;
    long long best = -1;
    int best_b = 0, best_m = 0;
    for (int b = 0; b <= r; ++b) {
        int small_cnt = r - b;
        for (int m = 0; m <= n; ++m) {
            if (b == 0 && m != n) continue;
            if (b > 0 && static_cast<long long>(n) - m < static_cast<long long>(t) * b) continue;
            if (small_cnt == 0 && m != 0) continue;
            if (small_cnt > 0 &&
                (m < small_cnt || m > static_cast<long long>(small_cnt) * (t - 1)))
                continue;
            if (static_cast<long long>(t - 1) * b + m > budget) continue;
            long long cost = (b ? balanced_clique_union_edges(n - m, b) : 0) +
                             (small_cnt ? balanced_clique_union_edges(m, small_cnt) : 0);
            if (best < 0 || cost < best) {
                best = cost;
                best_b = b;
                best_m = m;
            }
        }
    }
    if (best < 0) return res;
    res.feasible = true;
    res.min_edges = best;
    if (n <= kPartitionOptimaCap) {
        std::vector<int> stack;
        detail::optima_rec(n, r, n, 0, 0, best, budget, t, stack, res.optima);
        std::sort(res.optima.begin(), res.optima.end());
    } else {
        std::vector<int> parts = best_b ? balanced_clique_union(n - best_m, best_b).parts()
                                        : std::vector<int>{};
        if (r - best_b) {
            auto small = balanced_clique_union(best_m, r - best_b).parts();
            parts.insert(parts.end(), small.begin(), small.end());
        }
        res.optima = {CliqueUnion(std::move(parts))};
        res.exhaustive = false;
    }
    return res;
}

// Minimum (n,k,t,r)-graphs.  In the main regime t >= 2, k <= n the record is
// infeasible when r >= k-t+2 (no (n,k,t)-graph has independence number that
// large); with t = 1 or k > n every 1 <= r <= n is feasible with the
// balanced r-part union as unique minimizer, which the scan reproduces.
inline ExtremalRecord min_nktr(int n, int k, int t, int r) {
    detail::check_positive({n, k, t, r});
    ExtremalRecord rec;
    rec.params = {n, k, t, r};
    if (r > n) {
        rec.reason = InfeasibleReason::r_out_of_range;
        return rec;
    }
    if (k <= n && t > k) {
        rec.reason = InfeasibleReason::no_such_graphs;
        return rec;
    }
    if (k <= n && t >= 2 && r >= k - t + 2) {
        rec.reason = InfeasibleReason::alpha_bound;
        return rec;
    }
    auto po = feasible_min_partition(n, k, t, r);
    if (!po.feasible)
        throw Error("internal: partition scan infeasible for admissible parameters");
    rec.feasible = true;
    rec.min_edges = po.min_edges;
    rec.minimizers = std::move(po.optima);
    rec.exhaustive = po.exhaustive;
    return rec;
}

namespace detail {

inline ExtremalRecord min_over_r(int n, int k, int t, int rhi) {
    ExtremalRecord best;
    best.params = {n, k, t, std::nullopt};
    best.reason = InfeasibleReason::no_such_graphs;
    for (int r = 1; r <= rhi; ++r) {
        auto rec = min_nktr(n, k, t, r);
        if (!rec.feasible) continue;
        if (!best.feasible || rec.min_edges < best.min_edges) {
            best.feasible = true;
            best.reason = InfeasibleReason::none;
            best.min_edges = rec.min_edges;
            best.minimizers = std::move(rec.minimizers);
            best.exhaustive = rec.exhaustive;
        } else if (rec.min_edges == best.min_edges) {
            best.minimizers.insert(best.minimizers.end(), rec.minimizers.begin(),
                                   rec.minimizers.end());
            best.exhaustive = best.exhaustive && rec.exhaustive;
        }
    }
    std::sort(best.minimizers.begin(), best.minimizers.end());
    best.params.r.reset();
    return best;
}

inline int alpha_scan_limit(int n, int k, int t) {
    return (k <= n && t >= 2) ? std::min(n, k - t + 1) : n;
}

// Same computation as min_nkt but always through the r-scan; the public
// entry point answers the closed-form regimes directly.
inline ExtremalRecord min_nkt_by_scan(int n, int k, int t) {
    return min_over_r(n, k, t, alpha_scan_limit(n, k, t));
}

}  // namespace detail

// Closed-form regimes: k > n (every graph qualifies), t > k (no graph
// does), t = 1 (every graph qualifies), k = t (only K_n), n = k (unique
// minimizer (n-t)K1 + K_t).  Returns nothing when the general scan applies.
inline std::optional<ExtremalRecord> special_case(int n, int k, int t) {
    detail::check_positive({n, k, t});
    auto make = [&](std::vector<int> parts) {
        ExtremalRecord rec;
        rec.params = {n, k, t, std::nullopt};
        rec.feasible = true;
        rec.minimizers = {CliqueUnion(std::move(parts))};
        rec.min_edges = rec.minimizers.front().edge_count();
        return rec;
    };
    if (k > n) return make(std::vector<int>(static_cast<std::size_t>(n), 1));
    if (t > k) {
        ExtremalRecord rec;
        rec.params = {n, k, t, std::nullopt};
        rec.reason = InfeasibleReason::no_such_graphs;
        return rec;
    }
    if (t == 1) return make(std::vector<int>(static_cast<std::size_t>(n), 1));
    if (k == t) return make({n});
    if (n == k) {
        std::vector<int> parts{t};
        parts.insert(parts.end(), static_cast<std::size_t>(n - t), 1);
        return make(std::move(parts));
    }
    return std::nullopt;
}

// Minimum (n,k,t)-graphs: minimum over all feasible independence numbers.
inline ExtremalRecord min_nkt(int n, int k, int t) {
    if (auto sc = special_case(n, k, t)) return *sc;
    return detail::min_nkt_by_scan(n, k, t);
}

// Minimum (n,k,t)-graphs with independence number at most a.
inline ExtremalRecord min_nkt_alpha_at_most(int n, int k, int t, int a) {
    detail::check_positive({n, k, t, a});
    return detail::min_over_r(n, k, t, std::min(a, detail::alpha_scan_limit(n, k, t)));
}

// G' of the induction step: one new vertex joined to each clique of h plus
// enough isolated vertices to reach r parts.
inline CliqueUnion lift_partition(const CliqueUnion& h, int r) {
    if (r < h.part_count())
        throw InvalidInputError("lift needs r at least the number of parts");
    std::vector<int> parts = h.parts();
    for (int& p : parts) ++p;
    parts.insert(parts.end(), static_cast<std::size_t>(r - h.part_count()), 1);
    return CliqueUnion(std::move(parts));
}

enum class ConstructCase { vacuous, base_t1, pigeonhole, join };

inline const char* to_token(ConstructCase c) {
    switch (c) {
        case ConstructCase::vacuous: return "vacuous";
        case ConstructCase::base_t1: return "base-t1";
        case ConstructCase::pigeonhole: return "pigeonhole";
        default: return "join";
    }
}

struct ConstructLevel {
    int n = 0, k = 0, t = 0, r = 0;
    ConstructCase kase = ConstructCase::base_t1;
    CliqueUnion h;  // the lower-level minimizer, join case only
};

struct ConstructResult {
    bool feasible = false;
    InfeasibleReason reason = InfeasibleReason::none;
    CliqueUnion partition;
    std::vector<ConstructLevel> trace;
};

namespace detail {

struct ConstructMemo {
    std::mutex mu;
    std::map<std::array<int, 4>, ConstructResult> entries;

    static ConstructMemo& instance() {
        static ConstructMemo m;
        return m;
    }
};

}  // namespace detail

// Builds one minimum (n,k,t,r)-graph by the inductive recipe: t = 1 and the
// vacuous regime take the balanced union; r(t-1) < k forces the balanced
// union by pigeonhole; otherwise take a minimum (n-r, k-r, t-1)-graph H with
// independence number at most r and join one fresh vertex to each of its
// cliques, padding with isolated vertices.  Ties resolve to the
// lexicographically smallest partition.  Memoized on (n,k,t,r).
inline ConstructResult recursive_min_construct(int n, int k, int t, int r) {
    detail::check_positive({n, k, t, r});
    auto& memo = detail::ConstructMemo::instance();
    std::array<int, 4> key{n, k, t, r};
    {
        std::lock_guard<std::mutex> lock(memo.mu);
        if (auto it = memo.entries.find(key); it != memo.entries.end()) return it->second;
    }
    ConstructResult res;
    auto turan = [&](ConstructCase c) {
        res.feasible = true;
        res.partition = balanced_clique_union(n, r);
        res.trace = {ConstructLevel{n, k, t, r, c, {}}};
    };
    if (r > n) {
        res.reason = InfeasibleReason::r_out_of_range;
    } else if (k > n) {
        turan(ConstructCase::vacuous);
    } else if (t > k) {
        res.reason = InfeasibleReason::no_such_graphs;
    } else if (t == 1) {
        turan(ConstructCase::base_t1);
    } else if (r >= k - t + 2) {
        res.reason = InfeasibleReason::alpha_bound;
    } else if (static_cast<long long>(r) * (t - 1) < k) {
        turan(ConstructCase::pigeonhole);
    } else {
        auto sub = min_nkt_alpha_at_most(n - r, k - r, t - 1, r);
        if (!sub.feasible)
            throw Error("internal: join step found no feasible lower-level graph");
        std::vector<int> part_counts;
        for (const auto& u : sub.minimizers) part_counts.push_back(u.part_count());
        std::sort(part_counts.begin(), part_counts.end());
        part_counts.erase(std::unique(part_counts.begin(), part_counts.end()),
                          part_counts.end());
        const ConstructResult* chosen = nullptr;
        std::vector<ConstructResult> cands;
        cands.reserve(part_counts.size());
        for (int rp : part_counts) {
            auto cand = recursive_min_construct(n - r, k - r, t - 1, rp);
            if (!cand.feasible || cand.partition.edge_count() != sub.min_edges)
                throw Error("internal: lower-level construction missed the optimum");
            cands.push_back(std::move(cand));
            if (!chosen || cands.back().partition < chosen->partition) chosen = &cands.back();
        }
        res.feasible = true;
        res.partition = lift_partition(chosen->partition, r);
        res.trace.push_back(ConstructLevel{n, k, t, r, ConstructCase::join, chosen->partition});
        res.trace.insert(res.trace.end(), chosen->trace.begin(), chosen->trace.end());
    }
    {
        std::lock_guard<std::mutex> lock(memo.mu);
        memo.entries.emplace(key, res);
    }
    return res;
}

namespace detail {

inline bool parse_case(const std::string& s, ConstructCase& out) {
    if (s == "vacuous") out = ConstructCase::vacuous;
    else if (s == "base-t1") out = ConstructCase::base_t1;
    else if (s == "pigeonhole") out = ConstructCase::pigeonhole;
    else if (s == "join") out = ConstructCase::join;
    else return false;
    return true;
}

inline bool parse_reason(const std::string& s, InfeasibleReason& out) {
    if (s == "none") out = InfeasibleReason::none;
    else if (s == "no-such-graphs") out = InfeasibleReason::no_such_graphs;
    else if (s == "alpha-bound") out = InfeasibleReason::alpha_bound;
    else if (s == "r-out-of-range") out = InfeasibleReason::r_out_of_range;
    else return false;
    return true;
}

}  // namespace detail

inline constexpr const char* kConstructCacheHeader = "nkt-construct-cache 1";

// Writes the whole memo table; the format is line oriented and versioned.
inline std::size_t save_construct_cache(std::ostream& os) {
    auto& memo = detail::ConstructMemo::instance();
    std::lock_guard<std::mutex> lock(memo.mu);
    os << kConstructCacheHeader << '\n';
    for (const auto& [key, res] : memo.entries) {
        os << "entry " << key[0] << ' ' << key[1] << ' ' << key[2] << ' ' << key[3] << ' '
           << (res.feasible ? "ok" : "infeasible");
        if (!res.feasible) os << ' ' << to_token(res.reason);
        os << '\n';
        if (res.feasible) {
            os << "partition";
            for (int p : res.partition.parts()) os << ' ' << p;
            os << '\n';
            for (const auto& lv : res.trace) {
                os << "level " << lv.n << ' ' << lv.k << ' ' << lv.t << ' ' << lv.r << ' '
                   << to_token(lv.kase);
                for (int p : lv.h.parts()) os << ' ' << p;
                os << '\n';
            }
        }
    }
    return memo.entries.size();
}

inline std::size_t save_construct_cache(const std::string& path) {
    std::ofstream os(path);
    if (!os) return 0;
    return save_construct_cache(os);
}

// Merges previously saved entries into the memo; stops quietly at the first
// malformed line (the cache is advisory).  Returns entries merged.
inline std::size_t load_construct_cache(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != kConstructCacheHeader) return 0;
    auto& memo = detail::ConstructMemo::instance();
    std::size_t merged = 0;
    std::optional<std::array<int, 4>> key;
    ConstructResult cur;
    auto flush = [&] {
        if (!key) return;
        std::lock_guard<std::mutex> lock(memo.mu);
        if (memo.entries.emplace(*key, cur).second) ++merged;
        key.reset();
    };
    while (std::getline(is, line)) {
        std::istringstream ss(line);
        std::string tag;
        if (!(ss >> tag)) continue;
        if (tag == "entry") {
            flush();
            std::array<int, 4> k{};
            std::string status;
            if (!(ss >> k[0] >> k[1] >> k[2] >> k[3] >> status)) return merged;
            cur = ConstructResult{};
            if (status == "ok") {
                cur.feasible = true;
            } else if (status == "infeasible") {
                std::string reason;
                if (!(ss >> reason) || !detail::parse_reason(reason, cur.reason)) return merged;
            } else {
                return merged;
            }
            key = k;
        } else if (tag == "partition" && key && cur.feasible) {
            std::vector<int> parts;
            for (int p; ss >> p;) parts.push_back(p);
            cur.partition = CliqueUnion(std::move(parts));
        } else if (tag == "level" && key && cur.feasible) {
            ConstructLevel lv;
            std::string kase;
            if (!(ss >> lv.n >> lv.k >> lv.t >> lv.r >> kase) ||
                !detail::parse_case(kase, lv.kase))
                return merged;
            std::vector<int> parts;
            for (int p; ss >> p;) parts.push_back(p);
            lv.h = CliqueUnion(std::move(parts));
            cur.trace.push_back(std::move(lv));
        } else {
            return merged;
        }
    }
    flush();
    return merged;
}

inline std::size_t load_construct_cache(const std::string& path) {
    std::ifstream is(path);
    if (!is) return 0;
    return load_construct_cache(is);
}

}  // namespace nkt
