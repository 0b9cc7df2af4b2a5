#pragma once

// Undirected multigraph with loops and parallel edges, the edge-list text
// format, and a few structural summaries used to sanity check instantiated
// gadgets.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dcl/error.hpp"

namespace dcl {

using Vertex = std::uint32_t;

struct Edge {
    Vertex u;
    Vertex v;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Dense 0-based vertices; edges kept in insertion order with u <= v.
class Multigraph {
public:
    Multigraph() = default;
    explicit Multigraph(std::size_t vertex_count) : vertex_count_(vertex_count) {
        if (vertex_count > max_vertices()) {
            throw SizeLimitError("vertex count " + std::to_string(vertex_count) + " exceeds index range");
        }
    }

    static constexpr std::size_t max_vertices() { return std::size_t{1} << 32; }

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    void reserve_edges(std::size_t n) { edges_.reserve(n); }

    /// Returns the id of the new edge (its position in `edges()`).
    std::size_t add_edge(std::uint64_t u, std::uint64_t v) {
        if (u >= vertex_count_ || v >= vertex_count_) {
            throw EndpointOutOfRange("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                     ") has an endpoint outside [0, " + std::to_string(vertex_count_) + ")");
        }
        if (u > v) std::swap(u, v);
        edges_.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
        return edges_.size() - 1;
    }

    friend bool operator==(const Multigraph&, const Multigraph&) = default;

private:
    std::size_t vertex_count_ = 0;
    std::vector<Edge> edges_;
};

/// Edge-list text: vertex count line, then "u v" per edge, '#' comments, LF
/// endings, trailing newline.
inline std::string write_edge_list(const Multigraph& g) {
    std::string out = std::to_string(g.vertex_count());
    out += '\n';
    for (const Edge& e : g.edges()) {
        out += std::to_string(e.u);
        out += ' ';
        out += std::to_string(e.v);
        out += '\n';
    }
    return out;
}

namespace detail {

inline bool parse_decimal(std::string_view s, std::uint64_t& out) {
    if (s.empty()) return false;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && p == s.data() + s.size();
}

}  // namespace detail

inline Multigraph read_edge_list(std::string_view text) {
    if (text.empty()) throw ParseError("empty input, expected a vertex count", 1);
    if (text.back() != '\n') throw ParseError("missing trailing newline", 0);

    Multigraph g;
    bool have_count = false;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.front() == '#') continue;
        if (line.find('\r') != std::string_view::npos) throw ParseError("CR in line, LF endings required", line_no);
        if (!have_count) {
            std::uint64_t n = 0;
            if (!detail::parse_decimal(line, n)) throw ParseError("expected vertex count, got \"" + std::string(line) + "\"", line_no);
            if (n > Multigraph::max_vertices()) throw ParseError("vertex count too large", line_no);
            g = Multigraph(n);
            have_count = true;
            continue;
        }
        std::size_t sp = line.find(' ');
        std::uint64_t u = 0;
        std::uint64_t v = 0;
        if (sp == std::string_view::npos || !detail::parse_decimal(line.substr(0, sp), u) ||
            !detail::parse_decimal(line.substr(sp + 1), v)) {
            throw ParseError("expected \"u v\", got \"" + std::string(line) + "\"", line_no);
        }
        try {
            g.add_edge(u, v);
        } catch (const EndpointOutOfRange& e) {
            throw EndpointOutOfRange("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (!have_count) throw ParseError("no vertex count line", line_no);
    return g;
}

/// Loops contribute 2.
inline std::vector<std::uint64_t> degrees(const Multigraph& g) {
    std::vector<std::uint64_t> deg(g.vertex_count(), 0);
    for (const Edge& e : g.edges()) {
        ++deg[e.u];
        ++deg[e.v];
    }
    return deg;
}

/// degree -> number of vertices with that degree.
inline std::map<std::uint64_t, std::uint64_t> degree_histogram(const Multigraph& g) {
    std::map<std::uint64_t, std::uint64_t> hist;
    for (std::uint64_t d : degrees(g)) ++hist[d];
    return hist;
}

inline std::size_t connected_components(const Multigraph& g) {
    std::vector<Vertex> parent(g.vertex_count());
    std::iota(parent.begin(), parent.end(), Vertex{0});
    auto find = [&parent](Vertex x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    std::size_t components = g.vertex_count();
    for (const Edge& e : g.edges()) {
        Vertex a = find(e.u);
        Vertex b = find(e.v);
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
    return components;
}

/// E - V + C: the dimension of the cycle space.
inline std::int64_t cyclomatic_number(const Multigraph& g) {
    return static_cast<std::int64_t>(g.edge_count()) - static_cast<std::int64_t>(g.vertex_count()) +
           static_cast<std::int64_t>(connected_components(g));
}

}  // namespace dcl
