#pragma once

// Conversions between library types and the plain containers the naive
// oracles work on, plus shared instance builders.

#include <utility>
#include <vector>

#include <mdim/mdim.hpp>

#include "oracle.hpp"

namespace testutil {

inline oracle::Table table_of(const mdim::DistanceMatrix& d) {
    oracle::Table t(static_cast<std::size_t>(d.n()), std::vector<int>(static_cast<std::size_t>(d.n())));
    for (int u = 0; u < d.n(); ++u)
        for (int v = 0; v < d.n(); ++v) t[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = d.at(u, v);
    return t;
}

inline oracle::Edges edges_of(const mdim::Graph& g) { return g.edges(); }

inline mdim::Graph graph_of(int n, const oracle::Edges& edges) {
    return mdim::build_graph_from_edges(n, edges);
}

inline mdim::DistanceMatrix dist_of(int n, const oracle::Edges& edges) {
    return mdim::all_pairs_distances(graph_of(n, edges));
}

inline mdim::Graph circulant(int n, int k) {
    return mdim::build_circulant(mdim::build_connection_set(n, k));
}

inline mdim::DistanceMatrix circulant_dist(int n, int k) {
    return mdim::all_pairs_distances(circulant(n, k));
}

}  // namespace testutil
