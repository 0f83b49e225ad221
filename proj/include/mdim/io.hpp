#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "distance.hpp"
#include "family.hpp"
#include "graph.hpp"
#include "solvers.hpp"

namespace mdim {

/// Key order in emitted JSON is part of the output contract (byte-identical
/// reruns), hence the order-preserving json type throughout.
using ordered_json = nlohmann::ordered_json;

namespace detail {

inline std::vector<int> shift_labels(const std::vector<int>& verts, int base) {
    std::vector<int> out;
    out.reserve(verts.size());
    for (int v : verts) out.push_back(v + base);
    return out;
}

}  // namespace detail

/// {"problem","n","optimum","witness","method","nodes","millis"}; millis is
/// the only nondeterministic field and is dropped when timing is off.
inline ordered_json to_json(const SolverReport& r, bool include_timing = true,
                            int label_base = 0) {
    ordered_json j;
    j["problem"] = to_string(r.problem);
    j["n"] = r.n;
    j["optimum"] = r.optimum;
    j["witness"] = detail::shift_labels(r.witness.vertices, label_base);
    j["method"] = to_string(r.method);
    j["nodes"] = r.nodes_explored;
    if (include_timing) j["millis"] = r.millis;
    return j;
}

inline ordered_json to_json(const FamilyReport& r) {
    ordered_json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["expected"] = r.expected;
    j["beta"] = r.beta;
    j["psi"] = r.psi;
    j["sdim"] = r.sdim;
    j["witness_ok"] = r.witness_ok();
    j["verdict"] = r.verdict();
    return j;
}

inline std::string family_csv_header() { return "n,k,expected,beta,psi,sdim,witness_ok,verdict"; }

inline std::string to_csv_row(const FamilyReport& r) {
    std::ostringstream os;
    os << r.n << ',' << r.k << ',' << r.expected << ',' << r.beta << ',' << r.psi << ','
       << r.sdim << ',' << (r.witness_ok() ? "true" : "false") << ',' << r.verdict();
    return os.str();
}

inline std::string to_dot(const Graph& g, int label_base = 0) {
    std::ostringstream os;
    os << "graph G {\n";
    for (int v = 0; v < g.n(); ++v) os << "  " << v + label_base << ";\n";
    for (const auto& [u, v] : g.edges())
        os << "  " << u + label_base << " -- " << v + label_base << ";\n";
    os << "}\n";
    return os.str();
}

inline ordered_json graph_to_json(const Graph& g, int label_base = 0) {
    ordered_json j;
    j["n"] = g.n();
    j["edge_count"] = g.edge_count();
    ordered_json edges = ordered_json::array();
    for (const auto& [u, v] : g.edges())
        edges.push_back(ordered_json::array({u + label_base, v + label_base}));
    j["edges"] = std::move(edges);
    return j;
}

/// Plain matrix rows; row/column order is vertex order, so labels stay
/// implicit and the label base does not apply.
inline std::string distances_to_csv(const DistanceMatrix& d) {
    std::ostringstream os;
    for (int u = 0; u < d.n(); ++u) {
        for (int v = 0; v < d.n(); ++v) {
            if (v) os << ',';
            os << d.at(u, v);
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace mdim
