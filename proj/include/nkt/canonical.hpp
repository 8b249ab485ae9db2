#pragma once

// Canonical form for isomorphism testing on small graphs (n <= 10).
//
// The canonical encoding of a labeled graph is the upper triangle in
// column-major order packed into an integer, first pair most significant, so
// integer comparison is lexicographic comparison of the pair sequence.  The
// canonical form of a graph is the relabeling minimizing that integer over
// all vertex permutations.  The search places vertices position by position,
// keeps the running encoding, and prunes any branch whose prefix already
// exceeds the best complete encoding; candidates are tried in ascending
// column value and full twins (vertices whose transposition is an
// automorphism) are expanded only once per node.

#include <array>
#include <cstdint>
#include <string>

#include "nkt/errors.hpp"
#include "nkt/graph.hpp"
#include "nkt/graph6.hpp"

namespace nkt {

inline constexpr int kCanonicalMaxVertices = 10;  // C(10,2) = 45 bits fits a word

struct CanonicalKey {
    std::string bytes;  // graph6 of the canonical labeling

    friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
    friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

namespace detail {

inline std::uint64_t pack_triangle(const Graph& g) {
    std::uint64_t bits = 0;
    for (int j = 1; j < g.order(); ++j)
        for (int i = 0; i < j; ++i) bits = bits << 1 | (g.has_edge(i, j) ? 1u : 0u);
    return bits;
}

inline Graph unpack_triangle(int n, std::uint64_t bits) {
    Graph g(n);
    int pos = n * (n - 1) / 2;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if ((bits >> --pos) & 1u) g.add_edge(i, j);
    return g;
}

struct CanonicalSearch {
    int n = 0;
    int total = 0;
    std::array<std::uint32_t, kCanonicalMaxVertices> row{};
    std::uint64_t best = 0;

    void rec(int p, std::uint64_t acc, int bits_done, std::uint32_t free_mask,
             std::array<std::uint16_t, kCanonicalMaxVertices> col) {
        if (free_mask == 0) {
            best = acc;  // reachable only with acc <= best
            return;
        }
        int order[kCanonicalMaxVertices];
        int cnt = 0;
        for (std::uint32_t m = free_mask; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            int at = cnt++;
            while (at > 0 && col[static_cast<std::size_t>(order[at - 1])] > col[static_cast<std::size_t>(v)]) {
                order[at] = order[at - 1];
                --at;
            }
            order[at] = v;
        }
        std::uint32_t tried = 0;
        for (int idx = 0; idx < cnt; ++idx) {
            int v = order[idx];
            bool twin = false;
            for (std::uint32_t m = tried; m && !twin;) {
                int u = std::countr_zero(m);
                m &= m - 1;
                twin = ((row[static_cast<std::size_t>(u)] ^ row[static_cast<std::size_t>(v)]) &
                        ~((1u << u) | (1u << v))) == 0;
            }
            if (twin) continue;
            std::uint64_t acc2 = (acc << p) | col[static_cast<std::size_t>(v)];
            int bits2 = bits_done + p;
            if (acc2 > (best >> (total - bits2))) break;  // candidates are sorted
            auto col2 = col;
            std::uint32_t free2 = free_mask & ~(1u << v);
            for (std::uint32_t m = free2; m;) {
                int u = std::countr_zero(m);
                m &= m - 1;
                col2[static_cast<std::size_t>(u)] = static_cast<std::uint16_t>(
                    col2[static_cast<std::size_t>(u)] << 1 |
                    ((row[static_cast<std::size_t>(v)] >> u) & 1u));
            }
            rec(p + 1, acc2, bits2, free2, col2);
            tried |= 1u << v;
        }
    }
};

// Minimal packed encoding over all relabelings; `init` must be the packed
// encoding of some labeling of the same graph (it seeds the bound).
inline std::uint64_t canonical_bits(int n, const std::uint32_t* rows, std::uint64_t init) {
    CanonicalSearch s;
    s.n = n;
    s.total = n * (n - 1) / 2;
    for (int v = 0; v < n; ++v) s.row[static_cast<std::size_t>(v)] = rows[v];
    s.best = init;
    std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
    s.rec(0, 0, 0, full, {});
    return s.best;
}

inline std::uint64_t canonical_bits(const Graph& g) {
    std::array<std::uint32_t, kCanonicalMaxVertices> rows{};
    for (int v = 0; v < g.order(); ++v) rows[static_cast<std::size_t>(v)] = g.neighbors(v);
    return canonical_bits(g.order(), rows.data(), pack_triangle(g));
}

}  // namespace detail

inline Graph canonical_form(const Graph& g) {
    if (g.order() < 1) throw InvalidInputError("graph has no vertices");
    if (g.order() > kCanonicalMaxVertices)
        throw UnsupportedSizeError("canonical form supports at most 10 vertices");
    return detail::unpack_triangle(g.order(), detail::canonical_bits(g));
}

inline CanonicalKey canonical_key(const Graph& g) {
    return CanonicalKey{graph6_encode(canonical_form(g))};
}

}  // namespace nkt
