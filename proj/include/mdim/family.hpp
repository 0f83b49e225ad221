#pragma once

#include <string>

#include "budget.hpp"
#include "distance.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "invariants.hpp"
#include "resolving.hpp"
#include "solvers.hpp"

namespace mdim {

/// Everything below targets the even-order family Cay(Z_n, S_k) with
/// k = n/2 - 1: the cocktail-party graphs, where all three dimensions equal
/// k + 1 and the closed form can be checked member by member.

namespace detail {

inline int family_half_degree(int n, const char* where) {
    if (n < 8 || n % 2 != 0)
        throw DomainError(std::string(where) +
                          ": family member requires even n >= 8, got n=" + std::to_string(n));
    return n / 2 - 1;
}

}  // namespace detail

/// The canonical witness {0, 1, ..., k}: k+1 consecutive residues. Verifies
/// the clique property (any two members are at circulant distance <= k, hence
/// adjacent) before returning.
inline WitnessSet canonical_witness(int n) {
    const int k = detail::family_half_degree(n, "canonical_witness");
    std::vector<int> verts;
    verts.reserve(static_cast<std::size_t>(k) + 1);
    for (int v = 0; v <= k; ++v) verts.push_back(v);
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            const int diff = verts[j] - verts[i];
            if (diff > k && n - diff > k)
                throw DomainError("canonical_witness: internal error, witness not a clique");
        }
    return WitnessSet(std::move(verts));
}

/// Dropping the last witness vertex leaves the k-clique {0..k-1}, which
/// fails to resolve: vertices k and n-1 are adjacent to every member, so
/// both represent as all-ones. True iff the predicate fails with exactly
/// that pair, (k, n-1).
inline bool clique_prefix_counterexample(int n) {
    const int k = detail::family_half_degree(n, "clique_prefix_counterexample");
    std::vector<int> verts;
    for (int v = 0; v < k; ++v) verts.push_back(v);
    const auto dist = all_pairs_distances(build_circulant(build_connection_set(n, k)));
    const auto r = is_resolving(WitnessSet(std::move(verts)), dist);
    return !r.ok && r.failing_pair == std::make_pair(k, n - 1);
}

/// Swapping the last witness vertex for the far partner of 0 gives
/// {0..k-1} + {k+1}, which still fails to resolve — augmenting the clique
/// prefix with that particular vertex does not help, and the same pair
/// (k, n-1) stays unseparated. True iff the predicate fails there.
inline bool partner_augmented_counterexample(int n) {
    const int k = detail::family_half_degree(n, "partner_augmented_counterexample");
    std::vector<int> verts;
    for (int v = 0; v < k; ++v) verts.push_back(v);
    verts.push_back(k + 1);
    const auto dist = all_pairs_distances(build_circulant(build_connection_set(n, k)));
    const auto r = is_resolving(WitnessSet(std::move(verts)), dist);
    return !r.ok && r.failing_pair == std::make_pair(k, n - 1);
}

/// One family member's scorecard: the three exact optima, the canonical
/// witness checked under all three predicates, and the verdict. A budget
/// abort leaves the uncomputed optima at -1 and flags the report instead of
/// throwing, so sweeps can report partial progress.
struct FamilyReport {
    int n = 0;
    int k = 0;
    int expected = 0;
    int beta = -1;
    int psi = -1;
    int sdim = -1;
    bool witness_resolving = false;
    bool witness_doubly = false;
    bool witness_strong = false;
    bool budget_exhausted = false;

    bool witness_ok() const { return witness_resolving && witness_doubly && witness_strong; }

    bool pass() const {
        return !budget_exhausted && beta == expected && psi == expected && sdim == expected &&
               witness_ok();
    }

    const char* verdict() const { return budget_exhausted ? "budget" : pass() ? "pass" : "fail"; }
};

/// Solve beta, psi, and sdim on the member of order n and compare each
/// against k+1. psi and sdim searches start from the certified beta. The
/// sdim value reported here comes from the direct enumeration route; the
/// vertex-cover route is a separate cross-check.
inline FamilyReport verify_family(int n, const SearchBudget& budget = {}) {
    budget.validate();
    FamilyReport rep;
    rep.k = detail::family_half_degree(n, "verify_family");
    rep.n = n;
    rep.expected = rep.k + 1;
    const WitnessSet w = canonical_witness(n);
    const auto dist = all_pairs_distances(build_circulant(build_connection_set(n, rep.k)));
    rep.witness_resolving = is_resolving(w, dist).ok;
    rep.witness_doubly = is_doubly_resolving(w, dist).ok;
    rep.witness_strong = is_strong_resolving(w, dist).ok;
    try {
        rep.beta = min_resolving_set(dist, budget).optimum;
        rep.psi = min_doubly_resolving_set(dist, budget, rep.beta).optimum;
        rep.sdim = min_strong_resolving_set_enum(dist, budget, rep.beta).optimum;
    } catch (const BudgetError&) {
        rep.budget_exhausted = true;
    }
    return rep;
}

/// Both directions of the clique/coloring dichotomy on Cay(Z_n, S_k):
/// omega = chi = k+1 holds exactly when k+1 divides n. Returns true when the
/// computed omega and chi confirm whichever side applies.
inline bool verify_clique_coloring_iff(int n, int k, const SearchBudget& budget = {}) {
    const Graph g = build_circulant(build_connection_set(n, k));
    const int omega = clique_number(g, budget);
    const int chi = chromatic_number(g, budget);
    const bool joint_equality = omega == k + 1 && chi == k + 1;
    const bool divides = n % (k + 1) == 0;
    return joint_equality == divides;
}

}  // namespace mdim
