#pragma once

#include <algorithm>
#include <chrono>
#include <string>
#include <utility>
#include <vector>

#include "budget.hpp"
#include "distance.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "resolving.hpp"

namespace mdim {

enum class Problem { beta, psi, sdim };
enum class Method { enumeration, vertex_cover_reduction };

inline const char* to_string(Problem p) {
    switch (p) {
        case Problem::beta: return "beta";
        case Problem::psi: return "psi";
        case Problem::sdim: return "sdim";
    }
    return "?";
}

inline const char* to_string(Method m) {
    switch (m) {
        case Method::enumeration: return "enumeration";
        case Method::vertex_cover_reduction: return "vertex_cover_reduction";
    }
    return "?";
}

/// Result of one exact solve: the certified optimum, the canonical
/// (lexicographically smallest) witness of that size, and the search cost.
/// Minimality is certified by exhaustion: every smaller cardinality the
/// search visited contained no valid set, and cardinalities below the start
/// are excluded by the documented lower-bound argument.
struct SolverReport {
    Problem problem;
    int n;
    int optimum;
    WitnessSet witness;
    Method method;
    std::uint64_t nodes_explored;
    std::int64_t millis;
};

namespace detail {

class StopWatch {
public:
    StopWatch() : start_(std::chrono::steady_clock::now()) {}
    std::int64_t millis() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

/// Index of unordered pair {u, v}, u < v, in the row-major triangle order
/// (0,1), (0,2), ..., (0,n-1), (1,2), ...
inline int pair_index(int u, int v, int n) {
    return u * (2 * n - u - 1) / 2 + (v - u - 1);
}

inline int pair_count(int n) { return n * (n - 1) / 2; }

inline Bitset full_mask(int bits) {
    Bitset b(bits);
    for (int i = 0; i < bits; ++i) b.set(i);
    return b;
}

/// Lexicographic fixed-cardinality search for a candidate subset whose
/// per-candidate coverage union hits every target bit. Candidates are chosen
/// in increasing order, so the first hit is the lexicographically smallest
/// valid subset of that cardinality. Pruning: suffix unions are monotone in
/// the start index, so once acc | suffix[i] falls short the whole remaining
/// candidate range at this level is dead.
class CoverSearch {
public:
    CoverSearch(const std::vector<Bitset>& coverage, Bitset full, BudgetClock& clock)
        : coverage_(coverage), full_(std::move(full)), clock_(clock) {
        const int c = static_cast<int>(coverage_.size());
        suffix_.assign(static_cast<std::size_t>(c) + 1, Bitset(full_.size()));
        for (int i = c - 1; i >= 0; --i) {
            suffix_[static_cast<std::size_t>(i)] = suffix_[static_cast<std::size_t>(i) + 1];
            suffix_[static_cast<std::size_t>(i)] |= coverage_[static_cast<std::size_t>(i)];
        }
    }

    bool find(int m, std::vector<int>& out) {
        out.clear();
        Bitset acc(full_.size());
        return extend(0, m, acc, out);
    }

private:
    bool extend(int start, int slots, const Bitset& acc, std::vector<int>& chosen) {
        if (slots == 0) return acc == full_;
        const int c = static_cast<int>(coverage_.size());
        for (int i = start; i <= c - slots; ++i) {
            if (!clock_.tick()) throw BudgetExhausted{};
            if (!((acc | suffix_[static_cast<std::size_t>(i)]) == full_)) break;
            chosen.push_back(i);
            if (extend(i + 1, slots - 1, acc | coverage_[static_cast<std::size_t>(i)], chosen))
                return true;
            chosen.pop_back();
        }
        return false;
    }

    const std::vector<Bitset>& coverage_;
    Bitset full_;
    BudgetClock& clock_;
    std::vector<Bitset> suffix_;
};

/// As CoverSearch, but a target is covered by a PAIR of chosen vertices:
/// appending vertex i contributes the coverage of every pair {x, i} with x
/// already chosen. Suffix pruning uses "every pair whose larger member is
/// >= i", which again shrinks monotonically in i.
class PairCoverSearch {
public:
    PairCoverSearch(int n, const std::vector<Bitset>& pair_coverage, Bitset full,
                    BudgetClock& clock)
        : n_(n), pc_(pair_coverage), full_(std::move(full)), clock_(clock) {
        potential_.assign(static_cast<std::size_t>(n_) + 1, Bitset(full_.size()));
        for (int s = n_ - 1; s >= 0; --s) {
            potential_[static_cast<std::size_t>(s)] = potential_[static_cast<std::size_t>(s) + 1];
            for (int x = 0; x < s; ++x)
                potential_[static_cast<std::size_t>(s)] |=
                    pc_[static_cast<std::size_t>(pair_index(x, s, n_))];
        }
    }

    bool find(int m, std::vector<int>& out) {
        out.clear();
        Bitset acc(full_.size());
        return extend(0, m, acc, out);
    }

private:
    bool extend(int start, int slots, const Bitset& acc, std::vector<int>& chosen) {
        if (slots == 0) return acc == full_;
        for (int i = start; i <= n_ - slots; ++i) {
            if (!clock_.tick()) throw BudgetExhausted{};
            if (!((acc | potential_[static_cast<std::size_t>(i)]) == full_)) break;
            Bitset next = acc;
            for (int x : chosen) next |= pc_[static_cast<std::size_t>(pair_index(x, i, n_))];
            chosen.push_back(i);
            if (extend(i + 1, slots - 1, next, chosen)) return true;
            chosen.pop_back();
        }
        return false;
    }

    int n_;
    const std::vector<Bitset>& pc_;
    Bitset full_;
    BudgetClock& clock_;
    std::vector<Bitset> potential_;
};

/// Size of a greedy cover (largest-gain-first, smallest index on ties); a
/// valid upper bound whenever the full candidate set covers everything.
inline int greedy_cover_size(const std::vector<Bitset>& coverage, const Bitset& full) {
    const int c = static_cast<int>(coverage.size());
    Bitset acc(full.size());
    int size = 0;
    while (!(acc == full)) {
        int best = -1, best_gain = 0;
        for (int i = 0; i < c; ++i) {
            Bitset gain = coverage[static_cast<std::size_t>(i)];
            gain.subtract(acc);
            const int g = gain.count();
            if (g > best_gain) {
                best_gain = g;
                best = i;
            }
        }
        if (best == -1) return c;  // uncoverable target; callers never hit this
        acc |= coverage[static_cast<std::size_t>(best)];
        ++size;
    }
    return size;
}

/// Ascending-cardinality driver shared by the union-coverage solvers.
/// Returns (optimum, lex-smallest witness); throws BudgetError naming the
/// certified bracket when the budget dies mid-search.
inline std::pair<int, std::vector<int>> min_cover(const std::vector<Bitset>& coverage,
                                                  const Bitset& full, int start, int upper,
                                                  BudgetClock& clock, const char* what) {
    CoverSearch search(coverage, full, clock);
    int m = start;
    try {
        for (;; ++m) {
            if (m > static_cast<int>(coverage.size()))
                throw DomainError(std::string(what) + ": no covering subset exists");
            std::vector<int> out;
            if (search.find(m, out)) return {m, out};
        }
    } catch (const BudgetExhausted&) {
        throw BudgetError(std::string(what) + ": search budget exhausted", m,
                          std::max(upper, m), clock.nodes());
    }
}

}  // namespace detail

/// Exact metric dimension. Enumeration ascends by cardinality — from 1 on
/// paths (one endpoint resolves a path), from 2 otherwise (a single vertex
/// resolves only paths) — and within a cardinality in lexicographic order, so
/// the witness is the lexicographically smallest minimum resolving set.
/// Formulated as set cover: vertex x covers pair {u, v} iff d(u,x) != d(v,x),
/// and a subset resolves iff its coverage union is all pairs.
inline SolverReport min_resolving_set(const DistanceMatrix& d, const SearchBudget& budget = {}) {
    budget.validate();
    detail::StopWatch watch;
    const int n = d.n();
    const int pairs = detail::pair_count(n);
    std::vector<Bitset> coverage(static_cast<std::size_t>(n), Bitset(pairs));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const int p = detail::pair_index(u, v, n);
            for (int x = 0; x < n; ++x)
                if (d.at(u, x) != d.at(v, x)) coverage[static_cast<std::size_t>(x)].set(p);
        }
    const Bitset full = detail::full_mask(pairs);
    const int start = is_path(d) ? 1 : 2;
    const int upper = std::max(start, detail::greedy_cover_size(coverage, full));
    BudgetClock clock(budget);
    auto [optimum, verts] =
        detail::min_cover(coverage, full, start, upper, clock, "min_resolving_set");
    return SolverReport{Problem::beta,
                        n,
                        optimum,
                        WitnessSet(std::move(verts), WitnessKind::resolving),
                        Method::enumeration,
                        clock.nodes(),
                        watch.millis()};
}

/// Exact minimum doubly resolving set. Needs n >= 2 (the definition speaks
/// about two distinct vertices). Search starts at max(2, known_beta):
/// a doubly resolving set is resolving, so no set below the metric dimension
/// can qualify. Pass known_beta only if it is the certified metric dimension
/// of the same graph; with the default -1 the start is 2, which is always
/// sound. Coverage is pair-based: chosen vertices x, y cover vertex pair
/// {u, v} iff d(u,x) - d(u,y) != d(v,x) - d(v,y).
inline SolverReport min_doubly_resolving_set(const DistanceMatrix& d,
                                             const SearchBudget& budget = {},
                                             int known_beta = -1) {
    budget.validate();
    detail::StopWatch watch;
    const int n = d.n();
    if (n < 2)
        throw DomainError("min_doubly_resolving_set: need n >= 2 vertices");
    const int pairs = detail::pair_count(n);
    std::vector<Bitset> pair_coverage(static_cast<std::size_t>(pairs), Bitset(pairs));
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            auto& cov = pair_coverage[static_cast<std::size_t>(detail::pair_index(x, y, n))];
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (d.at(u, x) - d.at(u, y) != d.at(v, x) - d.at(v, y))
                        cov.set(detail::pair_index(u, v, n));
        }
    const Bitset full = detail::full_mask(pairs);
    const int start = std::max(2, known_beta);
    BudgetClock clock(budget);
    detail::PairCoverSearch search(n, pair_coverage, full, clock);
    int m = start;
    std::vector<int> verts;
    try {
        for (;; ++m) {
            if (m > n)
                throw DomainError("min_doubly_resolving_set: no covering subset exists");
            if (search.find(m, verts)) break;
        }
    } catch (const detail::BudgetExhausted&) {
        throw BudgetError("min_doubly_resolving_set: search budget exhausted", m, n,
                          clock.nodes());
    }
    return SolverReport{Problem::psi,
                        n,
                        m,
                        WitnessSet(std::move(verts), WitnessKind::doubly_resolving),
                        Method::enumeration,
                        clock.nodes(),
                        watch.millis()};
}

/// Exact strong metric dimension by direct ascending-cardinality enumeration
/// (no reduction involved; this is the route the vertex-cover path is
/// cross-checked against). Needs n >= 2. Start is max(1, known_beta): every
/// strong resolving set is resolving. Vertex x covers pair {u, v} iff x
/// strongly resolves it.
inline SolverReport min_strong_resolving_set_enum(const DistanceMatrix& d,
                                                  const SearchBudget& budget = {},
                                                  int known_beta = -1) {
    budget.validate();
    detail::StopWatch watch;
    const int n = d.n();
    if (n < 2)
        throw DomainError("min_strong_resolving_set_enum: need n >= 2 vertices");
    const int pairs = detail::pair_count(n);
    std::vector<Bitset> coverage(static_cast<std::size_t>(n), Bitset(pairs));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const int p = detail::pair_index(u, v, n);
            for (int x = 0; x < n; ++x)
                if (strongly_resolves(x, u, v, d)) coverage[static_cast<std::size_t>(x)].set(p);
        }
    const Bitset full = detail::full_mask(pairs);
    const int start = std::max(1, known_beta);
    const int upper = std::max(start, detail::greedy_cover_size(coverage, full));
    BudgetClock clock(budget);
    auto [optimum, verts] =
        detail::min_cover(coverage, full, start, upper, clock, "min_strong_resolving_set_enum");
    return SolverReport{Problem::sdim,
                        n,
                        optimum,
                        WitnessSet(std::move(verts), WitnessKind::strong_resolving),
                        Method::enumeration,
                        clock.nodes(),
                        watch.millis()};
}

/// The strong resolving graph: u is maximally distant from v when no
/// neighbor of u is farther from v than u is, and {u, v} becomes an edge when
/// the relation holds both ways (mutually maximally distant). Typically
/// disconnected, so the connectivity check is waived on the output.
inline Graph strong_resolving_graph(const DistanceMatrix& d) {
    const int n = d.n();
    auto maximally_distant = [&](int u, int v) {
        for (int w = 0; w < n; ++w)
            if (d.at(u, w) == 1 && d.at(w, v) > d.at(u, v)) return false;
        return true;
    };
    std::vector<Bitset> rows(static_cast<std::size_t>(n), Bitset(n));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (maximally_distant(u, v) && maximally_distant(v, u)) {
                rows[static_cast<std::size_t>(u)].set(v);
                rows[static_cast<std::size_t>(v)].set(u);
            }
    return Graph(n, std::move(rows), /*require_connected=*/false);
}

namespace detail {

/// Exact minimum vertex cover size by branch and bound: branch on a
/// maximum-degree vertex (either it joins the cover, or its whole
/// neighborhood does), bound with a greedy maximal matching, start from a
/// greedy cover incumbent.
class VertexCoverBB {
public:
    VertexCoverBB(const Graph& g, BudgetClock& clock) : n_(g.n()), clock_(clock) {
        adj_.reserve(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) adj_.push_back(g.neighbors(v));
    }

    int run() {
        best_ = greedy_cover(adj_);
        root_lower_ = matching_bound(adj_);
        recurse(adj_, 0);
        return best_;
    }

    int best() const { return best_; }
    int root_lower() const { return root_lower_; }

private:
    static int max_degree_vertex(const std::vector<Bitset>& adj) {
        int v = -1, deg = 0;
        for (std::size_t u = 0; u < adj.size(); ++u) {
            const int d = adj[u].count();
            if (d > deg) {
                deg = d;
                v = static_cast<int>(u);
            }
        }
        return v;  // -1 when edgeless
    }

    static void remove_vertex(std::vector<Bitset>& adj, int v) {
        adj[static_cast<std::size_t>(v)].for_each(
            [&](int w) { adj[static_cast<std::size_t>(w)].reset(v); });
        adj[static_cast<std::size_t>(v)] = Bitset(static_cast<int>(adj.size()));
    }

    int greedy_cover(std::vector<Bitset> adj) const {
        int size = 0;
        for (int v; (v = max_degree_vertex(adj)) != -1; ++size) remove_vertex(adj, v);
        return size;
    }

    int matching_bound(const std::vector<Bitset>& adj) const {
        Bitset matched(n_);
        int size = 0;
        for (int u = 0; u < n_; ++u) {
            if (matched.test(u)) continue;
            const int w = adj[static_cast<std::size_t>(u)].find_first();
            if (w == -1) continue;
            int pick = -1;
            adj[static_cast<std::size_t>(u)].for_each([&](int x) {
                if (pick == -1 && !matched.test(x) && x != u) pick = x;
            });
            if (pick != -1) {
                matched.set(u);
                matched.set(pick);
                ++size;
            }
        }
        return size;
    }

    void recurse(const std::vector<Bitset>& adj, int chosen) {
        if (!clock_.tick()) throw BudgetExhausted{};
        const int v = max_degree_vertex(adj);
        if (v == -1) {
            best_ = std::min(best_, chosen);
            return;
        }
        if (chosen + matching_bound(adj) >= best_) return;
        {
            std::vector<Bitset> next = adj;
            remove_vertex(next, v);
            recurse(next, chosen + 1);
        }
        {
            std::vector<Bitset> next = adj;
            std::vector<int> nbrs;
            adj[static_cast<std::size_t>(v)].for_each([&](int w) { nbrs.push_back(w); });
            for (int w : nbrs) remove_vertex(next, w);
            recurse(next, chosen + static_cast<int>(nbrs.size()));
        }
    }

    int n_;
    BudgetClock& clock_;
    std::vector<Bitset> adj_;
    int best_ = 0;
    int root_lower_ = 0;
};

}  // namespace detail

/// Strong metric dimension via the literature reduction: it equals the
/// minimum vertex cover of the strong resolving graph, and the strong
/// resolving sets are exactly that graph's vertex covers. The cover SIZE
/// comes from an independent branch and bound; the canonical witness is then
/// recovered by fixed-cardinality lexicographic enumeration over
/// edge-incidence coverage. Must agree with the direct enumeration route on
/// every instance where both complete — that agreement is the point.
inline SolverReport min_strong_resolving_set_vc(const DistanceMatrix& d,
                                                const SearchBudget& budget = {}) {
    budget.validate();
    detail::StopWatch watch;
    const int n = d.n();
    if (n < 2)
        throw DomainError("min_strong_resolving_set_vc: need n >= 2 vertices");
    const Graph srg = strong_resolving_graph(d);
    const auto edge_list = srg.edges();
    const int m_edges = static_cast<int>(edge_list.size());
    BudgetClock clock(budget);
    detail::VertexCoverBB bb(srg, clock);
    int cover_size = 0;
    try {
        cover_size = bb.run();
    } catch (const detail::BudgetExhausted&) {
        throw BudgetError("min_strong_resolving_set_vc: search budget exhausted",
                          bb.root_lower(), bb.best(), clock.nodes());
    }
    std::vector<Bitset> coverage(static_cast<std::size_t>(n), Bitset(m_edges));
    for (int e = 0; e < m_edges; ++e) {
        coverage[static_cast<std::size_t>(edge_list[static_cast<std::size_t>(e)].first)].set(e);
        coverage[static_cast<std::size_t>(edge_list[static_cast<std::size_t>(e)].second)].set(e);
    }
    const Bitset full = detail::full_mask(m_edges);
    detail::CoverSearch search(coverage, full, clock);
    std::vector<int> verts;
    try {
        if (!search.find(cover_size, verts))
            throw DomainError("min_strong_resolving_set_vc: internal bound mismatch");
    } catch (const detail::BudgetExhausted&) {
        throw BudgetError("min_strong_resolving_set_vc: search budget exhausted", cover_size,
                          cover_size, clock.nodes());
    }
    return SolverReport{Problem::sdim,
                        n,
                        cover_size,
                        WitnessSet(std::move(verts), WitnessKind::strong_resolving),
                        Method::vertex_cover_reduction,
                        clock.nodes(),
                        watch.millis()};
}

/// Sanity bound for a metric-dimension report on a connected non-path graph:
/// 2 <= optimum <= n - diameter. Paths are outside the bound's hypotheses and
/// raise a domain error saying so.
inline bool verify_lemma_bounds(const SolverReport& report, const DistanceMatrix& d) {
    if (report.problem != Problem::beta)
        throw DomainError("verify_lemma_bounds: report must come from min_resolving_set");
    if (is_path(d))
        throw DomainError("verify_lemma_bounds: not applicable, bound excludes path graphs");
    return 2 <= report.optimum && report.optimum <= d.n() - d.diameter();
}

}  // namespace mdim
