#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "bitset.hpp"
#include "errors.hpp"

namespace mdim {

/// Inverse-closed subset of Z_n - {0}; the difference set defining a
/// circulant graph. Validated at construction.
struct ConnectionSet {
    int n = 0;
    std::vector<int> members;  // sorted ascending, each in 1..n-1

    ConnectionSet(int group_order, std::vector<int> residues)
        : n(group_order), members(std::move(residues)) {
        if (n < 3)
            throw DomainError("connection set: group order must satisfy n >= 3, got n=" +
                              std::to_string(n));
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        for (int d : members) {
            if (d <= 0 || d >= n)
                throw DomainError("connection set: residue " + std::to_string(d) +
                                  " outside 1.." + std::to_string(n - 1) +
                                  " (0 and multiples of n are excluded)");
        }
        for (int d : members) {
            if (!contains(n - d))
                throw DomainError("connection set: not closed under negation mod n, missing " +
                                  std::to_string(n - d) + " for member " + std::to_string(d));
        }
    }

    bool contains(int d) const {
        return std::binary_search(members.begin(), members.end(), d);
    }
};

/// S_k = {1, n-1} u {2, n-2} u ... u {k, n-k}, the nested family of
/// connection sets. Requires n >= 4 and 1 <= k <= floor(n/2)-1, which keeps
/// |S_k| = 2k and the circulant connected.
inline ConnectionSet build_connection_set(int n, int k) {
    if (n < 4)
        throw DomainError("build_connection_set: n must satisfy n >= 4, got n=" +
                          std::to_string(n));
    const int k_max = n / 2 - 1;
    if (k < 1 || k > k_max)
        throw DomainError("build_connection_set: k must satisfy 1 <= k <= floor(n/2)-1 = " +
                          std::to_string(k_max) + ", got k=" + std::to_string(k));
    std::vector<int> m;
    m.reserve(2 * static_cast<std::size_t>(k));
    for (int d = 1; d <= k; ++d) {
        m.push_back(d);
        m.push_back(n - d);
    }
    return ConnectionSet(n, std::move(m));
}

/// Undirected simple graph on vertices 0..n-1 with per-vertex bitset rows.
/// Immutable after construction and safe to share across threads.
///
/// Construction enforces symmetry and irreflexivity always; connectivity is
/// enforced by default but can be waived (the strong resolving graph is a
/// legitimate disconnected product of a connected input).
class Graph {
public:
    Graph(int n, std::vector<Bitset> adjacency, bool require_connected = true)
        : n_(n), adj_(std::move(adjacency)) {
        if (n_ < 1) throw DomainError("graph: vertex count must be positive");
        if (static_cast<int>(adj_.size()) != n_)
            throw DomainError("graph: adjacency row count does not match n");
        for (int u = 0; u < n_; ++u) {
            if (adj_[u].size() != n_)
                throw DomainError("graph: adjacency row width does not match n");
            if (adj_[u].test(u))
                throw DomainError("graph: self-loop at vertex " + std::to_string(u));
        }
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (adj_[u].test(v) != adj_[v].test(u))
                    throw DomainError("graph: adjacency not symmetric at (" +
                                      std::to_string(u) + "," + std::to_string(v) + ")");
        if (require_connected && !connected())
            throw DisconnectedError("graph: disconnected input rejected (distances must be finite)");
    }

    int n() const { return n_; }

    bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u)].test(v); }

    const Bitset& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }

    int degree(int v) const { return adj_[static_cast<std::size_t>(v)].count(); }

    int edge_count() const {
        int twice = 0;
        for (int v = 0; v < n_; ++v) twice += degree(v);
        return twice / 2;
    }

    /// Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> e;
        e.reserve(static_cast<std::size_t>(edge_count()));
        for (int u = 0; u < n_; ++u)
            adj_[static_cast<std::size_t>(u)].for_each([&](int v) {
                if (u < v) e.emplace_back(u, v);
            });
        return e;
    }

    bool connected() const {
        Bitset seen(n_);
        Bitset frontier(n_);
        seen.set(0);
        frontier.set(0);
        while (frontier.any()) {
            Bitset next(n_);
            frontier.for_each([&](int u) { next |= adj_[static_cast<std::size_t>(u)]; });
            next.subtract(seen);
            seen |= next;
            frontier = next;
        }
        return seen.count() == n_;
    }

private:
    int n_;
    std::vector<Bitset> adj_;
};

/// Circulant Cay(Z_n, S): u ~ v iff (v - u) mod n is a member of S.
/// The rotation v -> v+1 is an automorphism by construction.
inline Graph build_circulant(const ConnectionSet& s) {
    std::vector<char> in_set(static_cast<std::size_t>(s.n), 0);
    for (int d : s.members) in_set[static_cast<std::size_t>(d)] = 1;
    std::vector<Bitset> rows(static_cast<std::size_t>(s.n), Bitset(s.n));
    for (int u = 0; u < s.n; ++u)
        for (int v = 0; v < s.n; ++v) {
            if (u == v) continue;
            const int diff = (v - u + s.n) % s.n;
            if (in_set[static_cast<std::size_t>(diff)]) rows[static_cast<std::size_t>(u)].set(v);
        }
    return Graph(s.n, std::move(rows), true);
}

/// General-graph entry point. Duplicate edges collapse; self-loops and
/// out-of-range endpoints are domain errors; disconnected input is rejected.
inline Graph build_graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1) throw DomainError("build_graph_from_edges: n must be positive");
    std::vector<Bitset> rows(static_cast<std::size_t>(n), Bitset(n));
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw DomainError("build_graph_from_edges: endpoint out of range 0.." +
                              std::to_string(n - 1) + ": (" + std::to_string(u) + "," +
                              std::to_string(v) + ")");
        if (u == v)
            throw DomainError("build_graph_from_edges: self-loop at vertex " + std::to_string(u));
        rows[static_cast<std::size_t>(u)].set(v);
        rows[static_cast<std::size_t>(v)].set(u);
    }
    return Graph(n, std::move(rows), true);
}

}  // namespace mdim
