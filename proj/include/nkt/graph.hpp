#pragma once

// Dense undirected graphs on at most 32 vertices, stored as symmetric
// adjacency bit rows so the hot loops are word-parallel.  Everything is a
// value type and every free function is pure, so concurrent use is safe.

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "nkt/errors.hpp"

namespace nkt {

inline constexpr int kMaxVertices = 32;

class Graph {
public:
    Graph() = default;  // order 0, only useful as a container placeholder

    explicit Graph(int n) : n_(n) {
        if (n < 1 || n > kMaxVertices)
            throw InvalidInputError("graph order must be between 1 and 32");
    }

    int order() const { return n_; }

    // Bitmask of all vertices.
    std::uint32_t vertex_mask() const {
        return n_ == 32 ? ~0u : (1u << n_) - 1;
    }

    std::uint32_t neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (adj_[static_cast<std::size_t>(u)] >> v) & 1u;
    }

    void add_edge(int u, int v) {
        check_pair(u, v);
        adj_[static_cast<std::size_t>(u)] |= 1u << v;
        adj_[static_cast<std::size_t>(v)] |= 1u << u;
    }

    void remove_edge(int u, int v) {
        check_pair(u, v);
        adj_[static_cast<std::size_t>(u)] &= ~(1u << v);
        adj_[static_cast<std::size_t>(v)] &= ~(1u << u);
    }

    void toggle_edge(int u, int v) {
        check_pair(u, v);
        adj_[static_cast<std::size_t>(u)] ^= 1u << v;
        adj_[static_cast<std::size_t>(v)] ^= 1u << u;
    }

    int degree(int v) const { return std::popcount(neighbors(v)); }

    int edge_count() const {
        int twice = 0;
        for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[static_cast<std::size_t>(v)]);
        return twice / 2;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw InvalidInputError("vertex index out of range");
    }
    void check_pair(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw InvalidInputError("self-loops are not allowed");
    }

    int n_ = 0;
    std::array<std::uint32_t, kMaxVertices> adj_{};
};

inline Graph build_graph(int n, std::span<const std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);  // duplicates collapse
    return g;
}

inline Graph build_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
    return build_graph(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

inline Graph complement(const Graph& g) {
    Graph c(g.order());
    for (int v = 0; v < g.order(); ++v) {
        std::uint32_t row = ~g.neighbors(v) & g.vertex_mask() & ~(1u << v);
        while (row) {
            int u = std::countr_zero(row);
            row &= row - 1;
            if (u > v) c.add_edge(v, u);
        }
    }
    return c;
}

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) g.add_edge(u, v);
    return g;
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw InvalidInputError("cycle needs at least 3 vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

inline Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

// Induced subgraph on the vertices of `mask`, relabeled to 0..popcount-1 in
// ascending order of the original labels.
inline Graph induced_subgraph(const Graph& g, std::uint32_t mask) {
    if (mask & ~g.vertex_mask()) throw InvalidInputError("vertex set outside the graph");
    if (mask == 0) throw InvalidInputError("induced subgraph needs at least one vertex");
    std::array<int, kMaxVertices> relabel{};
    int m = 0;
    for (std::uint32_t bits = mask; bits;) {
        int v = std::countr_zero(bits);
        bits &= bits - 1;
        relabel[static_cast<std::size_t>(v)] = m++;
    }
    Graph out(m);
    for (std::uint32_t bits = mask; bits;) {
        int v = std::countr_zero(bits);
        bits &= bits - 1;
        std::uint32_t row = g.neighbors(v) & mask;
        while (row) {
            int u = std::countr_zero(row);
            row &= row - 1;
            if (u > v) out.add_edge(relabel[static_cast<std::size_t>(v)], relabel[static_cast<std::size_t>(u)]);
        }
    }
    return out;
}

// Connected components as vertex masks, ordered by their smallest vertex.
inline std::vector<std::uint32_t> components(const Graph& g) {
    std::vector<std::uint32_t> out;
    std::uint32_t seen = 0;
    for (int v = 0; v < g.order(); ++v) {
        if ((seen >> v) & 1u) continue;
        std::uint32_t comp = 1u << v;
        for (;;) {
            std::uint32_t grown = comp;
            std::uint32_t frontier = comp;
            while (frontier) {
                int u = std::countr_zero(frontier);
                frontier &= frontier - 1;
                grown |= g.neighbors(u);
            }
            if (grown == comp) break;
            comp = grown;
        }
        seen |= comp;
        out.push_back(comp);
    }
    return out;
}

namespace detail {

// Counts cliques of size s inside `cand`; candidates are consumed in
// ascending vertex order so every clique is counted exactly once.
inline std::uint64_t count_cliques_rec(const Graph& g, std::uint32_t cand, int s) {
    if (s == 0) return 1;
    std::uint64_t total = 0;
    while (std::popcount(cand) >= s) {
        int v = std::countr_zero(cand);
        cand &= cand - 1;
        total += count_cliques_rec(g, cand & g.neighbors(v), s - 1);
    }
    return total;
}

// Finds one clique of size t inside `cand`, or nothing.
inline std::optional<std::uint32_t> find_clique_rec(const Graph& g, std::uint32_t cand, int t) {
    if (t == 0) return 0u;
    while (std::popcount(cand) >= t) {
        int v = std::countr_zero(cand);
        cand &= cand - 1;
        if (auto rest = find_clique_rec(g, cand & g.neighbors(v), t - 1))
            return *rest | (1u << v);
    }
    return std::nullopt;
}

}  // namespace detail

inline std::uint64_t count_cliques(const Graph& g, int s) {
    if (s < 1) throw InvalidInputError("clique size must be at least 1");
    return detail::count_cliques_rec(g, g.vertex_mask(), s);
}

inline std::optional<std::uint32_t> find_clique(const Graph& g, std::uint32_t cand, int t) {
    if (t < 1) throw InvalidInputError("clique size must be at least 1");
    return detail::find_clique_rec(g, cand & g.vertex_mask(), t);
}

inline bool has_clique(const Graph& g, int t) {
    return find_clique(g, g.vertex_mask(), t).has_value();
}

// Replaces every vertex by an m-clique; two blobs are fully joined exactly
// when the original vertices are adjacent.  Vertex (v, i) becomes v*m + i.
inline Graph blowup(const Graph& g, int m) {
    if (m < 1) throw InvalidInputError("blowup factor must be at least 1");
    long long total = static_cast<long long>(g.order()) * m;
    if (g.order() < 1 || total > kMaxVertices)
        throw InvalidInputError("blowup exceeds 32 vertices");
    Graph out(static_cast<int>(total));
    for (int v = 0; v < g.order(); ++v)
        for (int i = 0; i < m; ++i) {
            for (int j = i + 1; j < m; ++j) out.add_edge(v * m + i, v * m + j);
            std::uint32_t row = g.neighbors(v);
            while (row) {
                int u = std::countr_zero(row);
                row &= row - 1;
                if (u > v)
                    for (int j = 0; j < m; ++j) out.add_edge(v * m + i, u * m + j);
            }
        }
    return out;
}

namespace detail {

// Exact maximum independent set: branch on a highest-degree candidate
// (include first, then exclude), bound by the remaining candidate count.
inline void mis_rec(const Graph& g, std::uint32_t cand, int size, std::uint32_t set,
                    int& best_size, std::uint32_t& best_set) {
    if (size + std::popcount(cand) <= best_size) return;
    if (cand == 0) {
        best_size = size;
        best_set = set;
        return;
    }
    int v = -1, dmax = -1;
    for (std::uint32_t m = cand; m;) {
        int u = std::countr_zero(m);
        m &= m - 1;
        int d = std::popcount(g.neighbors(u) & cand);
        if (d > dmax) {
            dmax = d;
            v = u;
        }
    }
    mis_rec(g, cand & ~(g.neighbors(v) | (1u << v)), size + 1, set | (1u << v), best_size, best_set);
    mis_rec(g, cand & ~(1u << v), size, set, best_size, best_set);
}

}  // namespace detail

inline std::uint32_t max_independent_set(const Graph& g) {
    if (g.order() < 1) throw InvalidInputError("graph has no vertices");
    int best_size = 0;
    std::uint32_t best_set = 0;
    detail::mis_rec(g, g.vertex_mask(), 0, 0, best_size, best_set);
    return best_set;
}

inline int independence_number(const Graph& g) {
    return std::popcount(max_independent_set(g));
}

}  // namespace nkt
