#pragma once

#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace mdim {

/// Dense all-pairs shortest-path table for a connected graph, stored flat
/// row-major. Construction re-checks the metric axioms (symmetry, identity,
/// triangle inequality) so a hand-built table cannot silently poison the
/// predicates downstream.
class DistanceMatrix {
public:
    DistanceMatrix(int n, std::vector<int> flat) : n_(n), d_(std::move(flat)) {
        if (n_ < 1) throw DomainError("distance matrix: vertex count must be positive");
        if (d_.size() != static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_))
            throw DomainError("distance matrix: expected n*n entries");
        for (int u = 0; u < n_; ++u) {
            if (at(u, u) != 0)
                throw DomainError("distance matrix: nonzero diagonal at vertex " +
                                  std::to_string(u));
            for (int v = 0; v < n_; ++v) {
                if (at(u, v) < 0)
                    throw DomainError("distance matrix: negative entry (disconnected input?)");
                if (u != v && at(u, v) == 0)
                    throw DomainError("distance matrix: zero distance between distinct vertices " +
                                      std::to_string(u) + " and " + std::to_string(v));
                if (at(u, v) != at(v, u))
                    throw DomainError("distance matrix: not symmetric at (" + std::to_string(u) +
                                      "," + std::to_string(v) + ")");
            }
        }
        for (int u = 0; u < n_; ++u)
            for (int v = 0; v < n_; ++v)
                for (int w = 0; w < n_; ++w)
                    if (at(u, v) > at(u, w) + at(w, v))
                        throw DomainError("distance matrix: triangle inequality fails through " +
                                          std::to_string(w));
        diameter_ = 0;
        for (int x : d_) diameter_ = std::max(diameter_, x);
    }

    int n() const { return n_; }

    int at(int u, int v) const {
        return d_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
                  static_cast<std::size_t>(v)];
    }

    bool adjacent(int u, int v) const { return at(u, v) == 1; }

    int degree(int v) const {
        int deg = 0;
        for (int u = 0; u < n_; ++u)
            if (at(v, u) == 1) ++deg;
        return deg;
    }

    int diameter() const { return diameter_; }

private:
    int n_;
    std::vector<int> d_;
    int diameter_ = 0;
};

/// BFS from every source using bitset frontiers; O(n^2 * n/64) per graph.
/// The graph is connected by construction, so every entry is finite.
inline DistanceMatrix all_pairs_distances(const Graph& g) {
    const int n = g.n();
    std::vector<int> flat(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
    for (int s = 0; s < n; ++s) {
        auto* row = flat.data() + static_cast<std::size_t>(s) * static_cast<std::size_t>(n);
        Bitset seen(n);
        Bitset frontier(n);
        seen.set(s);
        frontier.set(s);
        row[s] = 0;
        int level = 0;
        while (frontier.any()) {
            ++level;
            Bitset next(n);
            frontier.for_each([&](int u) { next |= g.neighbors(u); });
            next.subtract(seen);
            next.for_each([&](int v) { row[v] = level; });
            seen |= next;
            frontier = next;
        }
        if (seen.count() != n)
            throw DisconnectedError("all_pairs_distances: graph is not connected");
    }
    return DistanceMatrix(n, std::move(flat));
}

/// True iff the graph underlying the table is a path P_n: the one family
/// where a single landmark suffices. K_1 and K_2 count as paths.
inline bool is_path(const DistanceMatrix& dist) {
    const int n = dist.n();
    if (n == 1) return true;
    int ones = 0, twos = 0;
    for (int v = 0; v < n; ++v) {
        const int deg = dist.degree(v);
        if (deg == 1)
            ++ones;
        else if (deg == 2)
            ++twos;
        else
            return false;
    }
    // Degree profile 1,1,2,...,2 plus connectedness (guaranteed by the
    // matrix being finite) pins down the path and excludes cycles.
    return ones == 2 && twos == n - 2;
}

}  // namespace mdim
