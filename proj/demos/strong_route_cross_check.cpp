// Compute the strong metric dimension of a few graphs twice: once by direct
// ascending-cardinality enumeration over the strong-resolution predicate, and
// once by reducing to minimum vertex cover of the strong resolving graph.
// The two routes share no machinery past the distance matrix, so agreement
// is a meaningful check.

#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <mdim/mdim.hpp>

static void report(const std::string& name, const mdim::DistanceMatrix& dist) {
    const auto srg = mdim::strong_resolving_graph(dist);
    const auto enum_route = mdim::min_strong_resolving_set_enum(dist);
    const auto vc_route = mdim::min_strong_resolving_set_vc(dist);
    std::cout << name << ": mutually-maximally-distant pairs =";
    for (const auto& [u, v] : srg.edges()) std::cout << " (" << u << "," << v << ")";
    std::cout << "\n  " << mdim::to_json(enum_route, false).dump() << "\n  "
              << mdim::to_json(vc_route, false).dump() << "\n  agreement: "
              << (enum_route.optimum == vc_route.optimum &&
                          enum_route.witness.vertices == vc_route.witness.vertices
                      ? "yes"
                      : "NO")
              << "\n";
}

int main() {
    using namespace mdim;
    report("Cay(Z_8, S_3)", all_pairs_distances(build_circulant(build_connection_set(8, 3))));
    report("C_8", all_pairs_distances(build_circulant(build_connection_set(8, 1))));
    std::vector<std::pair<int, int>> k4;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) k4.emplace_back(i, j);
    report("K_4", all_pairs_distances(build_graph_from_edges(4, k4)));
    report("C_5", all_pairs_distances(build_circulant(build_connection_set(5, 1))));
    return 0;
}
