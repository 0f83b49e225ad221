#pragma once

#include <algorithm>
#include <vector>

#include "budget.hpp"
#include "errors.hpp"
#include "graph.hpp"

namespace mdim {

namespace detail {

/// Branch-and-bound maximum clique (Tomita-style): candidates are greedily
/// colored each node, and a branch dies when |current| + color(v) cannot
/// beat the incumbent.
class CliqueSearch {
public:
    CliqueSearch(const Graph& g, const SearchBudget& budget) : g_(g), clock_(budget) {}

    int run() {
        const int n = g_.n();
        std::vector<int> start(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) start[static_cast<std::size_t>(v)] = v;
        std::sort(start.begin(), start.end(),
                  [&](int a, int b) { return g_.degree(a) > g_.degree(b); });
        Bitset all(n);
        for (int v = 0; v < n; ++v) all.set(v);
        expand(0, all, start);
        return best_;
    }

    int best() const { return best_; }
    std::uint64_t nodes() const { return clock_.nodes(); }

private:
    void expand(int current, const Bitset& pool, const std::vector<int>& candidates) {
        if (candidates.empty()) {
            best_ = std::max(best_, current);
            return;
        }
        const int n = g_.n();
        // Greedy color classes over the candidate set; class index + 1 bounds
        // the largest clique a candidate can still extend.
        std::vector<Bitset> classes;
        std::vector<int> ordered, bound;
        ordered.reserve(candidates.size());
        bound.reserve(candidates.size());
        for (int v : candidates) {
            std::size_t c = 0;
            while (c < classes.size() && classes[c].intersects(g_.neighbors(v))) ++c;
            if (c == classes.size()) classes.emplace_back(n);
            classes[c].set(v);
        }
        for (std::size_t c = 0; c < classes.size(); ++c)
            classes[c].for_each([&](int v) {
                ordered.push_back(v);
                bound.push_back(static_cast<int>(c) + 1);
            });
        Bitset p = pool;
        for (std::size_t i = ordered.size(); i-- > 0;) {
            if (!clock_.tick()) throw BudgetExhausted{};
            if (current + bound[i] <= best_) return;  // remaining bounds only shrink
            const int v = ordered[i];
            Bitset np = p & g_.neighbors(v);
            std::vector<int> next;
            next.reserve(static_cast<std::size_t>(np.count()));
            np.for_each([&](int u) { next.push_back(u); });
            expand(current + 1, np, next);
            p.reset(v);
        }
    }

    const Graph& g_;
    BudgetClock clock_;
    int best_ = 0;
};

/// Greedy DSATUR pass; returns the number of colors used (an upper bound on
/// the chromatic number).
inline int dsatur_upper_bound(const Graph& g) {
    const int n = g.n();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::vector<Bitset> neighbor_colors(static_cast<std::size_t>(n), Bitset(n));
    int used = 0;
    for (int step = 0; step < n; ++step) {
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[static_cast<std::size_t>(v)] != -1) continue;
            const int sat = neighbor_colors[static_cast<std::size_t>(v)].count();
            const int deg = g.degree(v);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        int c = 0;
        while (neighbor_colors[static_cast<std::size_t>(pick)].test(c)) ++c;
        color[static_cast<std::size_t>(pick)] = c;
        used = std::max(used, c + 1);
        g.neighbors(pick).for_each(
            [&](int u) { neighbor_colors[static_cast<std::size_t>(u)].set(c); });
    }
    return used;
}

/// Exact t-colorability by saturation-guided backtracking. New colors are
/// introduced in order (at most one fresh color per branch point), which
/// kills color-permutation symmetry.
class ColorabilitySearch {
public:
    ColorabilitySearch(const Graph& g, BudgetClock& clock) : g_(g), clock_(clock) {}

    bool colorable(int t) {
        const int n = g_.n();
        color_.assign(static_cast<std::size_t>(n), -1);
        neighbor_colors_.assign(static_cast<std::size_t>(n), Bitset(std::max(n, t)));
        return extend(t, 0, 0);
    }

private:
    bool extend(int t, int colored, int used) {
        const int n = g_.n();
        if (colored == n) return true;
        if (!clock_.tick()) throw BudgetExhausted{};
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color_[static_cast<std::size_t>(v)] != -1) continue;
            const int sat = neighbor_colors_[static_cast<std::size_t>(v)].count();
            const int deg = g_.degree(v);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        const int limit = std::min(t, used + 1);
        for (int c = 0; c < limit; ++c) {
            if (neighbor_colors_[static_cast<std::size_t>(pick)].test(c)) continue;
            color_[static_cast<std::size_t>(pick)] = c;
            std::vector<int> touched;
            g_.neighbors(pick).for_each([&](int u) {
                auto& nc = neighbor_colors_[static_cast<std::size_t>(u)];
                if (!nc.test(c)) {
                    nc.set(c);
                    touched.push_back(u);
                }
            });
            if (extend(t, colored + 1, std::max(used, c + 1))) return true;
            for (int u : touched) neighbor_colors_[static_cast<std::size_t>(u)].reset(c);
            color_[static_cast<std::size_t>(pick)] = -1;
        }
        return false;
    }

    const Graph& g_;
    BudgetClock& clock_;
    std::vector<int> color_;
    std::vector<Bitset> neighbor_colors_;
};

}  // namespace detail

/// Exact clique number. Throws BudgetError carrying the best clique found so
/// far (a valid lower bound) when the budget runs out.
inline int clique_number(const Graph& g, const SearchBudget& budget = {}) {
    budget.validate();
    detail::CliqueSearch search(g, budget);
    try {
        return search.run();
    } catch (const detail::BudgetExhausted&) {
        throw BudgetError("clique_number: search budget exhausted", search.best(), g.n(),
                          search.nodes());
    }
}

/// Exact chromatic number by iterative deepening: start from a greedy clique
/// (sound lower bound), stop at the DSATUR upper bound, and decide exact
/// t-colorability for each t in between. Throws BudgetError with the bracket
/// established so far when the budget runs out.
inline int chromatic_number(const Graph& g, const SearchBudget& budget = {}) {
    budget.validate();
    const int n = g.n();
    const int upper = detail::dsatur_upper_bound(g);
    // Cheap greedy clique for the starting lower bound; exactness of the
    // final answer does not depend on it being the maximum clique.
    int lower = 0;
    {
        std::vector<int> by_degree(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) by_degree[static_cast<std::size_t>(v)] = v;
        std::sort(by_degree.begin(), by_degree.end(),
                  [&](int a, int b) { return g.degree(a) > g.degree(b); });
        Bitset common(n);
        for (int v = 0; v < n; ++v) common.set(v);
        for (int v : by_degree)
            if (common.test(v)) {
                ++lower;
                common &= g.neighbors(v);
            }
    }
    BudgetClock clock(budget);
    detail::ColorabilitySearch search(g, clock);
    int t = std::max(lower, 1);
    try {
        for (; t < upper; ++t)
            if (search.colorable(t)) return t;
        return upper;
    } catch (const detail::BudgetExhausted&) {
        throw BudgetError("chromatic_number: search budget exhausted", t, upper, clock.nodes());
    }
}

}  // namespace mdim
