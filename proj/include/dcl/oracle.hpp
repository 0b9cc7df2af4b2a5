#pragma once

// Exhaustive simple-cycle enumeration on multigraphs.
//
// Loops are reported as cycles of length 1. Otherwise a rooted DFS is run
// from each start vertex s in increasing order, visiting only vertices > s
// and closing back at s. Edges are tracked by identity, so every pair of
// parallel edges gives one digon and parallel routes are told apart. Each
// cycle is reached in both orientations; the one whose first edge id is
// smaller than its last is kept.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dcl/error.hpp"
#include "dcl/graph.hpp"

namespace dcl {

inline constexpr std::uint64_t kDefaultMaxCycles = 1'000'000;

struct CycleRecord {
    std::uint64_t length = 0;
    /// Starts at the minimum vertex; orientation has the smaller neighbour
    /// second.
    std::vector<Vertex> vertices;
    /// Edge ids (indices into Multigraph::edges()) in traversal order,
    /// edges[p] joins vertices[p] and vertices[p+1 mod length].
    std::vector<std::size_t> edges;

    friend bool operator==(const CycleRecord&, const CycleRecord&) = default;
};

namespace detail {

inline void canonicalize(std::vector<Vertex>& vs, std::vector<std::size_t>& es) {
    if (vs.size() >= 3 && vs[1] > vs.back()) {
        std::reverse(vs.begin() + 1, vs.end());
        std::reverse(es.begin(), es.end());
    }
}

}  // namespace detail

/// Calls `visit(std::span<const Vertex>, std::span<const std::size_t>)` once
/// per simple cycle in deterministic order. Throws LimitExceeded when more
/// than `max_cycles` cycles exist.
template <class Visitor>
std::uint64_t for_each_cycle(const Multigraph& g, Visitor&& visit, std::uint64_t max_cycles = kDefaultMaxCycles) {
    const std::size_t n = g.vertex_count();
    const auto& edges = g.edges();

    std::uint64_t found = 0;
    auto bump = [&] {
        if (++found > max_cycles) {
            throw LimitExceeded("more than " + std::to_string(max_cycles) + " cycles", found);
        }
    };

    std::vector<std::size_t> loops;
    std::vector<std::size_t> deg(n, 0);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (edges[e].u == edges[e].v) {
            loops.push_back(e);
        } else {
            ++deg[edges[e].u];
            ++deg[edges[e].v];
        }
    }
    std::stable_sort(loops.begin(), loops.end(),
                     [&edges](std::size_t a, std::size_t b) { return edges[a].u < edges[b].u; });
    // CSR adjacency without loops: (neighbour, edge id), edge ids ascending.
    std::vector<std::size_t> offset(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) offset[v + 1] = offset[v] + deg[v];
    std::vector<std::pair<Vertex, std::size_t>> adj(offset[n]);
    {
        std::vector<std::size_t> fill(offset.begin(), offset.end() - 1);
        for (std::size_t e = 0; e < edges.size(); ++e) {
            const Edge& ed = edges[e];
            if (ed.u == ed.v) continue;
            adj[fill[ed.u]++] = {ed.v, e};
            adj[fill[ed.v]++] = {ed.u, e};
        }
    }

    std::vector<Vertex> cyc_v;
    std::vector<std::size_t> cyc_e;
    std::size_t next_loop = 0;

    std::vector<char> on_path(n, 0);
    std::vector<Vertex> path;
    std::vector<std::size_t> path_edges;  // path_edges[d] enters path[d+1]
    std::vector<std::size_t> cursor;      // next adjacency slot per depth

    for (std::size_t s = 0; s < n; ++s) {
        for (; next_loop < loops.size() && edges[loops[next_loop]].u == s; ++next_loop) {
            bump();
            cyc_v.assign(1, static_cast<Vertex>(s));
            cyc_e.assign(1, loops[next_loop]);
            visit(std::span<const Vertex>(cyc_v), std::span<const std::size_t>(cyc_e));
        }

        path.assign(1, static_cast<Vertex>(s));
        path_edges.clear();
        cursor.assign(1, offset[s]);
        on_path[s] = 1;
        while (!path.empty()) {
            const std::size_t depth = path.size() - 1;
            const Vertex v = path.back();
            if (cursor[depth] == offset[v + 1]) {
                on_path[v] = 0;
                path.pop_back();
                cursor.pop_back();
                if (!path_edges.empty()) path_edges.pop_back();
                continue;
            }
            auto [w, e] = adj[cursor[depth]++];
            if (depth > 0 && e == path_edges.back()) continue;
            if (w == s) {
                if (depth == 0 || path_edges.front() >= e) continue;
                bump();
                cyc_v.assign(path.begin(), path.end());
                cyc_e.assign(path_edges.begin(), path_edges.end());
                cyc_e.push_back(e);
                detail::canonicalize(cyc_v, cyc_e);
                visit(std::span<const Vertex>(cyc_v), std::span<const std::size_t>(cyc_e));
            } else if (w > s && !on_path[w]) {
                on_path[w] = 1;
                path.push_back(w);
                path_edges.push_back(e);
                cursor.push_back(offset[w]);
            }
        }
    }
    return found;
}

inline std::vector<CycleRecord> enumerate_cycles(const Multigraph& g, std::uint64_t max_cycles = kDefaultMaxCycles) {
    std::vector<CycleRecord> out;
    for_each_cycle(
        g,
        [&out](std::span<const Vertex> vs, std::span<const std::size_t> es) {
            out.push_back({vs.size(), {vs.begin(), vs.end()}, {es.begin(), es.end()}});
        },
        max_cycles);
    return out;
}

/// Sorted multiset of cycle lengths.
inline std::vector<std::uint64_t> cycle_lengths(const Multigraph& g, std::uint64_t max_cycles = kDefaultMaxCycles) {
    std::vector<std::uint64_t> out;
    for_each_cycle(
        g, [&out](std::span<const Vertex> vs, std::span<const std::size_t>) { out.push_back(vs.size()); },
        max_cycles);
    std::sort(out.begin(), out.end());
    return out;
}

struct DistinctVerdict {
    bool distinct = true;
    std::uint64_t cycle_count = 0;
    /// Two cycles of the smallest repeated length, when not distinct.
    std::optional<std::pair<CycleRecord, CycleRecord>> witness;
};

inline DistinctVerdict distinct_lengths(const Multigraph& g, std::uint64_t max_cycles = kDefaultMaxCycles) {
    std::map<std::uint64_t, CycleRecord> first_of_length;
    std::optional<std::pair<CycleRecord, CycleRecord>> witness;
    DistinctVerdict verdict;
    verdict.cycle_count = for_each_cycle(
        g,
        [&](std::span<const Vertex> vs, std::span<const std::size_t> es) {
            CycleRecord rec{vs.size(), {vs.begin(), vs.end()}, {es.begin(), es.end()}};
            auto [it, inserted] = first_of_length.try_emplace(rec.length, rec);
            if (!inserted && (!witness || rec.length < witness->first.length)) {
                witness.emplace(it->second, std::move(rec));
            }
        },
        max_cycles);
    verdict.distinct = !witness.has_value();
    verdict.witness = std::move(witness);
    return verdict;
}

}  // namespace dcl
