#pragma once

// graph6 codec for graphs on 1..32 vertices.
//
// Format: optional ">>graph6<<" header, one byte n+63, then the upper
// triangle in column-major order -- entry (i,j) for j = 1..n-1, i = 0..j-1 --
// packed into 6-bit groups (first entry in the most significant bit), each
// group emitted as one printable byte value+63, final group zero padded.

#include <string>
#include <string_view>

#include "nkt/errors.hpp"
#include "nkt/graph.hpp"

namespace nkt {

inline std::string graph6_encode(const Graph& g) {
    int n = g.order();
    if (n < 1) throw InvalidInputError("cannot encode an empty graph");
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = acc << 1 | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

inline Graph graph6_decode(std::string_view s) {
    constexpr std::string_view header = ">>graph6<<";
    if (s.substr(0, header.size()) == header) s.remove_prefix(header.size());
    if (s.empty()) throw ParseError("graph6: empty string");
    int first = static_cast<unsigned char>(s[0]);
    if (first == 126) throw ParseError("graph6: orders above 32 are not supported");
    int n = first - 63;
    if (n < 1 || n > kMaxVertices) throw ParseError("graph6: order must be between 1 and 32");
    std::size_t want = 1 + (static_cast<std::size_t>(n) * (n - 1) / 2 + 5) / 6;
    if (s.size() != want) throw ParseError("graph6: length mismatch");
    for (std::size_t i = 1; i < s.size(); ++i) {
        int c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126) throw ParseError("graph6: byte out of range");
    }
    Graph g(n);
    int acc = 0, nbits = 0;
    std::size_t pos = 1;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (nbits == 0) {
                acc = static_cast<unsigned char>(s[pos++]) - 63;
                nbits = 6;
            }
            if ((acc >> --nbits) & 1) g.add_edge(i, j);
        }
    if (nbits && (acc & ((1 << nbits) - 1))) throw ParseError("graph6: nonzero padding bits");
    return g;
}

}  // namespace nkt
