#pragma once

// Membership tests for (n,k,t)-graphs: graphs in which every induced
// k-subset contains a clique of size t.  Two independent decision paths are
// provided: a literal subset-scan oracle and an optimized test through the
// size of a largest K_t-free induced subgraph.
//
// Degenerate parameters follow the set definition: k > n holds vacuously
// (there are no k-subsets), and t > k with k <= n fails (a k-subset cannot
// contain t vertices).

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>

#include "nkt/clique_union.hpp"
#include "nkt/errors.hpp"
#include "nkt/graph.hpp"

namespace nkt {

struct NktParams {
    int n = 0;
    int k = 0;
    int t = 0;
    std::optional<int> r;
};

enum class Strictness {
    lenient,           // degenerate parameters answered by the definition
    require_main_regime  // demand n >= k >= t
};

namespace detail {

inline void check_kt(int k, int t) {
    if (k < 1 || t < 1) throw InvalidInputError("k and t must be at least 1");
}

inline void check_regime(const Graph& g, int k, int t, Strictness strict) {
    check_kt(k, t);
    if (strict == Strictness::require_main_regime && !(g.order() >= k && k >= t))
        throw InvalidInputError("parameters must satisfy n >= k >= t");
}

// f(S) = size of a largest K_t-free subset of S, plus one witness subset.
// Any K_t inside S must lose at least one vertex, so branch on the vertices
// of one such clique; results are memoized on S, which also caches the
// clique tests.  The clique and the branch order are deterministic, so the
// witness is deterministic too.
struct KtFreeSearch {
    const Graph& g;
    int t;
    std::unordered_map<std::uint32_t, std::pair<int, std::uint32_t>> memo;

    std::pair<int, std::uint32_t> run(std::uint32_t s) {
        if (auto it = memo.find(s); it != memo.end()) return it->second;
        std::pair<int, std::uint32_t> res;
        auto clique = find_clique_rec(g, s, t);
        if (!clique) {
            res = {std::popcount(s), s};
        } else {
            res = {-1, 0};
            for (std::uint32_t m = *clique; m;) {
                int v = std::countr_zero(m);
                m &= m - 1;
                auto sub = run(s & ~(1u << v));
                if (sub.first > res.first) res = sub;
            }
        }
        memo.emplace(s, res);
        return res;
    }
};

}  // namespace detail

// Largest vertex set whose induced subgraph has no K_t.
inline std::uint32_t max_kt_free_set(const Graph& g, int t) {
    if (t < 1) throw InvalidInputError("t must be at least 1");
    if (g.order() < 1) throw InvalidInputError("graph has no vertices");
    detail::KtFreeSearch search{g, t, {}};
    return search.run(g.vertex_mask()).second;
}

inline int max_kt_free_size(const Graph& g, int t) {
    return std::popcount(max_kt_free_set(g, t));
}

// Closed form for clique unions: with A the parts smaller than t and B the
// rest, an optimal K_t-free subgraph takes all of A plus t-1 vertices from
// each part of B.
inline int max_kt_free_size(const CliqueUnion& u, int t) {
    if (t < 1) throw InvalidInputError("t must be at least 1");
    int size = 0;
    for (int p : u.parts()) size += p < t ? p : t - 1;
    return size;
}

// Literal definition: every k-subset of the vertices must contain a K_t.
inline bool is_nkt_oracle(const Graph& g, int k, int t, Strictness strict = Strictness::lenient) {
    detail::check_regime(g, k, t, strict);
    int n = g.order();
    if (k > n) return true;
    if (t > k) return false;
    std::uint32_t subset = (1u << k) - 1;
    std::uint32_t limit = g.vertex_mask();
    for (;;) {
        if (!detail::find_clique_rec(g, subset, t)) return false;
        if (subset == (limit & ~((1u << (n - k)) - 1))) return true;  // highest k-subset
        // Gosper's hack: next subset of the same size
        std::uint32_t c = subset & (0u - subset);
        std::uint32_t r = subset + c;
        subset = (((r ^ subset) >> 2) / c) | r;
    }
}

// Optimized test: G is (n,k,t) iff its largest K_t-free induced subgraph has
// at most k-1 vertices.  Clique unions go through the closed form.
inline bool is_nkt(const Graph& g, int k, int t, Strictness strict = Strictness::lenient) {
    detail::check_regime(g, k, t, strict);
    if (k > g.order()) return true;
    if (t > k) return false;
    if (auto u = as_clique_union(g)) return max_kt_free_size(*u, t) <= k - 1;
    return max_kt_free_size(g, t) <= k - 1;
}

// (n,k,t,r)-graph: an (n,k,t)-graph with independence number exactly r.
inline bool is_nktr(const Graph& g, int k, int t, int r, Strictness strict = Strictness::lenient) {
    if (r < 1) throw InvalidInputError("r must be at least 1");
    return is_nkt(g, k, t, strict) && independence_number(g) == r;
}

// G - S for an independent set S (mask).  The result is the induced subgraph
// on the remaining vertices; by the exchange argument this turns an
// (n,k,t)-graph into an (n-|S|, k-|S|, t-1)-graph.
inline Graph remove_independent_set(const Graph& g, std::uint32_t s) {
    if (s & ~g.vertex_mask()) throw InvalidInputError("removal set outside the graph");
    for (std::uint32_t m = s; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        if (g.neighbors(v) & s) throw InvalidInputError("removal set is not independent");
    }
    if (s == g.vertex_mask()) throw InvalidInputError("cannot remove every vertex");
    if (s == 0) return g;
    return induced_subgraph(g, g.vertex_mask() & ~s);
}

}  // namespace nkt
