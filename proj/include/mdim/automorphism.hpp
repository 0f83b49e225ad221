#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "budget.hpp"
#include "distance.hpp"
#include "errors.hpp"
#include "graph.hpp"

namespace mdim {

namespace detail {

/// Backtracking enumeration of every distance-preserving permutation. On a
/// connected graph those are exactly the adjacency-preserving ones, and the
/// full distance table gives much stronger pruning than adjacency alone.
class AutomorphismSearch {
public:
    AutomorphismSearch(const DistanceMatrix& dist, const SearchBudget& budget)
        : d_(dist), clock_(budget), used_(dist.n()) {}

    std::vector<std::vector<int>> run() {
        const int n = d_.n();
        // Vertices sharing an image must share the sorted multiset of
        // distances to everything else; group by that invariant.
        std::map<std::vector<int>, std::vector<int>> classes;
        std::vector<std::vector<int>> profile(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            auto& p = profile[static_cast<std::size_t>(v)];
            p.reserve(static_cast<std::size_t>(n));
            for (int u = 0; u < n; ++u) p.push_back(d_.at(v, u));
            std::sort(p.begin(), p.end());
            classes[p].push_back(v);
        }
        candidates_.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            candidates_[static_cast<std::size_t>(v)] = classes[profile[static_cast<std::size_t>(v)]];
        // Rarest class first keeps the branching factor low near the root.
        order_.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) order_[static_cast<std::size_t>(v)] = v;
        std::sort(order_.begin(), order_.end(), [&](int a, int b) {
            const auto sa = candidates_[static_cast<std::size_t>(a)].size();
            const auto sb = candidates_[static_cast<std::size_t>(b)].size();
            return sa != sb ? sa < sb : a < b;
        });
        image_.assign(static_cast<std::size_t>(n), -1);
        extend(0);
        return std::move(found_);
    }

    std::uint64_t count_found() const { return found_.size(); }
    std::uint64_t nodes() const { return clock_.nodes(); }

private:
    void extend(int pos) {
        const int n = d_.n();
        if (pos == n) {
            found_.push_back(image_);
            return;
        }
        const int v = order_[static_cast<std::size_t>(pos)];
        for (int w : candidates_[static_cast<std::size_t>(v)]) {
            if (!clock_.tick()) throw BudgetExhausted{};
            if (used_.test(w)) continue;
            bool ok = true;
            for (int i = 0; i < pos; ++i) {
                const int u = order_[static_cast<std::size_t>(i)];
                if (d_.at(v, u) != d_.at(w, image_[static_cast<std::size_t>(u)])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            image_[static_cast<std::size_t>(v)] = w;
            used_.set(w);
            extend(pos + 1);
            used_.reset(w);
            image_[static_cast<std::size_t>(v)] = -1;
        }
    }

    const DistanceMatrix& d_;
    BudgetClock clock_;
    Bitset used_;
    std::vector<std::vector<int>> candidates_;
    std::vector<int> order_;
    std::vector<int> image_;
    std::vector<std::vector<int>> found_;
};

}  // namespace detail

/// Full automorphism group of a connected graph, each element as an image
/// array (sigma[v] = image of v). Desk scale only; the group itself can be
/// factorially large, and enumeration charges the node budget per candidate
/// tried. Throws BudgetError (lower bound = automorphisms already found,
/// upper bound unknown = -1) on exhaustion.
inline std::vector<std::vector<int>> enumerate_automorphisms(const Graph& g,
                                                             const SearchBudget& budget = {}) {
    budget.validate();
    const DistanceMatrix dist = all_pairs_distances(g);
    detail::AutomorphismSearch search(dist, budget);
    try {
        return search.run();
    } catch (const detail::BudgetExhausted&) {
        throw BudgetError("enumerate_automorphisms: search budget exhausted",
                          static_cast<std::int64_t>(search.count_found()), -1, search.nodes());
    }
}

/// True iff the automorphism group acts transitively on the ordered vertex
/// pairs at every fixed distance (distance 0 included, i.e. the graph must
/// also be vertex-transitive). Decided by exhaustive group enumeration, so
/// desk scale only.
inline bool is_distance_transitive_desk(const Graph& g, const SearchBudget& budget = {}) {
    const auto autos = enumerate_automorphisms(g, budget);
    const DistanceMatrix dist = all_pairs_distances(g);
    const int n = g.n();
    for (int d = 0; d <= dist.diameter(); ++d) {
        int u0 = -1, v0 = -1;
        for (int u = 0; u < n && u0 == -1; ++u)
            for (int v = 0; v < n; ++v)
                if (dist.at(u, v) == d) {
                    u0 = u;
                    v0 = v;
                    break;
                }
        if (u0 == -1) continue;
        // The group is closed, so the orbit of (u0, v0) is exactly its image
        // set; transitivity on this distance class means every pair is hit.
        Bitset hit(n * n);
        for (const auto& sigma : autos)
            hit.set(sigma[static_cast<std::size_t>(u0)] * n + sigma[static_cast<std::size_t>(v0)]);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (dist.at(u, v) == d && !hit.test(u * n + v)) return false;
    }
    return true;
}

}  // namespace mdim
