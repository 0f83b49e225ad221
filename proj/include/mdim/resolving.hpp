#pragma once

#include <string>
#include <utility>
#include <vector>

#include "distance.hpp"
#include "errors.hpp"

namespace mdim {

enum class WitnessKind { resolving, doubly_resolving, strong_resolving };

inline const char* to_string(WitnessKind k) {
    switch (k) {
        case WitnessKind::resolving: return "resolving";
        case WitnessKind::doubly_resolving: return "doubly_resolving";
        case WitnessKind::strong_resolving: return "strong_resolving";
    }
    return "?";
}

/// An ordered candidate landmark set. Order is significant: representation
/// coordinates follow it. Labels must be distinct and non-negative; the
/// per-graph range check happens where a DistanceMatrix is in hand.
struct WitnessSet {
    std::vector<int> vertices;
    WitnessKind kind = WitnessKind::resolving;

    explicit WitnessSet(std::vector<int> verts, WitnessKind k = WitnessKind::resolving)
        : vertices(std::move(verts)), kind(k) {
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            if (vertices[i] < 0)
                throw DomainError("witness set: negative vertex label " +
                                  std::to_string(vertices[i]));
            for (std::size_t j = i + 1; j < vertices.size(); ++j)
                if (vertices[i] == vertices[j])
                    throw DomainError("witness set: duplicate vertex " +
                                      std::to_string(vertices[i]));
        }
        if (kind == WitnessKind::doubly_resolving && vertices.size() < 2)
            throw DomainError("witness set: a doubly-resolving witness needs at least 2 vertices");
    }

    std::size_t size() const { return vertices.size(); }
};

/// Distance vector of one vertex to the witness, in witness order.
struct Representation {
    std::vector<int> coords;
    bool operator==(const Representation&) const = default;
};

namespace detail {

inline void check_witness_range(const WitnessSet& w, const DistanceMatrix& d,
                                const char* where) {
    if (w.vertices.empty())
        throw DomainError(std::string(where) + ": witness set must be nonempty");
    for (int v : w.vertices)
        if (v >= d.n())
            throw DomainError(std::string(where) + ": witness vertex " + std::to_string(v) +
                              " outside 0.." + std::to_string(d.n() - 1));
}

inline void check_vertex_range(int v, const DistanceMatrix& d, const char* where) {
    if (v < 0 || v >= d.n())
        throw DomainError(std::string(where) + ": vertex " + std::to_string(v) +
                          " outside 0.." + std::to_string(d.n() - 1));
}

}  // namespace detail

/// Predicate outcome plus, on failure, the lexicographically smallest pair of
/// vertices the witness cannot tell apart. Deterministic counterexamples make
/// negative tests reproducible.
struct PredicateResult {
    bool ok = false;
    std::pair<int, int> failing_pair{-1, -1};

    explicit operator bool() const { return ok; }
};

inline Representation metric_representation(int v, const WitnessSet& w, const DistanceMatrix& d) {
    detail::check_witness_range(w, d, "metric_representation");
    detail::check_vertex_range(v, d, "metric_representation");
    Representation r;
    r.coords.reserve(w.size());
    for (int wi : w.vertices) r.coords.push_back(d.at(v, wi));
    return r;
}

/// W resolves the graph iff distinct vertices get distinct representations.
/// Pairs touching W can never collide (a witness vertex is the unique vertex
/// with a zero in its own coordinate), so only outside pairs are compared.
inline PredicateResult is_resolving(const WitnessSet& w, const DistanceMatrix& d) {
    detail::check_witness_range(w, d, "is_resolving");
    const int n = d.n();
    Bitset in_w(n);
    for (int v : w.vertices) in_w.set(v);
    std::vector<std::vector<int>> rep(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        if (in_w.test(v)) continue;
        auto& r = rep[static_cast<std::size_t>(v)];
        r.reserve(w.size());
        for (int wi : w.vertices) r.push_back(d.at(v, wi));
    }
    for (int u = 0; u < n; ++u) {
        if (in_w.test(u)) continue;
        for (int v = u + 1; v < n; ++v) {
            if (in_w.test(v)) continue;
            if (rep[static_cast<std::size_t>(u)] == rep[static_cast<std::size_t>(v)])
                return {false, {u, v}};
        }
    }
    return {true, {-1, -1}};
}

/// Literal check that the landmark pair {x, y} separates u from v by distance
/// differences. Evaluates the defining inequality as written, so x = y or
/// u = v simply yield false.
inline bool doubly_resolves(int x, int y, int u, int v, const DistanceMatrix& d) {
    detail::check_vertex_range(x, d, "doubly_resolves");
    detail::check_vertex_range(y, d, "doubly_resolves");
    detail::check_vertex_range(u, d, "doubly_resolves");
    detail::check_vertex_range(v, d, "doubly_resolves");
    return d.at(u, x) - d.at(u, y) != d.at(v, x) - d.at(v, y);
}

/// Z doubly resolves the graph iff every pair u != v is doubly resolved by
/// some two members of Z. Internally: the difference profile
/// (d(u,z_i) - d(v,z_i))_i is non-constant, which is equivalent because
/// d(u,x)-d(u,y) = d(v,x)-d(v,y) rearranges to profile(x) = profile(y).
/// Pairs with a vertex inside Z are checked too; the outside-only shortcut is
/// sound only for plain resolving.
inline PredicateResult is_doubly_resolving(const WitnessSet& z, const DistanceMatrix& d) {
    detail::check_witness_range(z, d, "is_doubly_resolving");
    if (z.size() < 2)
        throw DomainError("is_doubly_resolving: witness must have at least 2 vertices");
    const int n = d.n();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const int first = d.at(u, z.vertices[0]) - d.at(v, z.vertices[0]);
            bool separated = false;
            for (std::size_t i = 1; i < z.size(); ++i)
                if (d.at(u, z.vertices[i]) - d.at(v, z.vertices[i]) != first) {
                    separated = true;
                    break;
                }
            if (!separated) return {false, {u, v}};
        }
    return {true, {-1, -1}};
}

/// w strongly resolves (u, v) iff one of them lies on a shortest path from
/// the other to w, via the distance identity.
inline bool strongly_resolves(int w, int u, int v, const DistanceMatrix& d) {
    detail::check_vertex_range(w, d, "strongly_resolves");
    detail::check_vertex_range(u, d, "strongly_resolves");
    detail::check_vertex_range(v, d, "strongly_resolves");
    return d.at(w, v) == d.at(w, u) + d.at(u, v) || d.at(w, u) == d.at(w, v) + d.at(v, u);
}

/// N strongly resolves the graph iff every pair u != v is strongly resolved
/// by some member. All pairs are checked, including those meeting N.
inline PredicateResult is_strong_resolving(const WitnessSet& s, const DistanceMatrix& d) {
    detail::check_witness_range(s, d, "is_strong_resolving");
    const int n = d.n();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool separated = false;
            for (int w : s.vertices)
                if (strongly_resolves(w, u, v, d)) {
                    separated = true;
                    break;
                }
            if (!separated) return {false, {u, v}};
        }
    return {true, {-1, -1}};
}

}  // namespace mdim
