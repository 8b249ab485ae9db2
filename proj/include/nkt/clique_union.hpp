#pragma once

// Disjoint unions of cliques represented by their multiset of part sizes.
// Parts are kept sorted descending, so lexicographic comparison of the part
// vectors gives the deterministic order used everywhere in reports.

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "nkt/errors.hpp"
#include "nkt/graph.hpp"

namespace nkt {

class CliqueUnion {
public:
    CliqueUnion() = default;

    explicit CliqueUnion(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p < 1) throw InvalidInputError("clique union parts must be positive");
        std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    }

    const std::vector<int>& parts() const { return parts_; }

    int total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    // Number of parts; equals the independence number of the realization.
    int part_count() const { return static_cast<int>(parts_.size()); }

    long long edge_count() const {
        long long e = 0;
        for (long long p : parts_) e += p * (p - 1) / 2;
        return e;
    }

    // Realized with vertices consecutive per part, largest part first.
    Graph realize() const {
        int n = total();
        if (n < 1 || n > kMaxVertices)
            throw UnsupportedSizeError("realization needs 1..32 vertices");
        Graph g(n);
        int base = 0;
        for (int p : parts_) {
            for (int j = 1; j < p; ++j)
                for (int i = 0; i < j; ++i) g.add_edge(base + i, base + j);
            base += p;
        }
        return g;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += '+';
            s += std::to_string(parts_[i]);
        }
        return s;
    }

    friend bool operator==(const CliqueUnion&, const CliqueUnion&) = default;
    friend auto operator<=>(const CliqueUnion&, const CliqueUnion&) = default;

private:
    std::vector<int> parts_;
};

// The complement of the Turán graph T(n,r): r cliques with sizes as equal as
// possible.  Minimizes edges among clique unions with exactly r parts.
inline CliqueUnion balanced_clique_union(int n, int r) {
    if (r < 1 || r > n) throw InvalidInputError("part count must be between 1 and n");
    std::vector<int> parts(static_cast<std::size_t>(r), n / r);
    for (int i = 0; i < n % r; ++i) parts[static_cast<std::size_t>(i)]++;
    return CliqueUnion(std::move(parts));
}

// Edge count of balanced_clique_union(n, r) without building it.
inline long long balanced_clique_union_edges(int n, int r) {
    long long q = n / r, rem = n % r;
    return rem * (q + 1) * q / 2 + (r - rem) * q * (q - 1) / 2;
}

// Recognizes graphs whose every component is a clique.
inline std::optional<CliqueUnion> as_clique_union(const Graph& g) {
    std::vector<int> parts;
    for (std::uint32_t comp : components(g)) {
        for (std::uint32_t bits = comp; bits;) {
            int v = std::countr_zero(bits);
            bits &= bits - 1;
            if ((g.neighbors(v) & comp) != (comp & ~(1u << v))) return std::nullopt;
        }
        parts.push_back(std::popcount(comp));
    }
    return CliqueUnion(std::move(parts));
}

}  // namespace nkt
