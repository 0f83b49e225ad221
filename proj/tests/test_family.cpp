#include <algorithm>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "common.hpp"

using namespace mdim;

TEST_CASE("canonical witness is the consecutive run 0..k") {
    CHECK(canonical_witness(8).vertices == std::vector<int>{0, 1, 2, 3});
    CHECK(canonical_witness(10).vertices == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(canonical_witness(16).vertices == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7});
    CHECK_THROWS_AS(canonical_witness(7), DomainError);   // odd order
    CHECK_THROWS_AS(canonical_witness(6), DomainError);   // below the family range
    CHECK_THROWS_AS(canonical_witness(0), DomainError);
}

TEST_CASE("canonical witness induces a clique") {
    for (int n = 8; n <= 16; n += 2) {
        const int k = n / 2 - 1;
        const auto g = build_circulant(build_connection_set(n, k));
        const auto w = canonical_witness(n).vertices;
        for (std::size_t i = 0; i < w.size(); ++i)
            for (std::size_t j = i + 1; j < w.size(); ++j)
                REQUIRE(g.adjacent(w[i], w[j]));
    }
}

TEST_CASE("dropping the top vertex breaks resolution at the expected pair") {
    for (int n = 8; n <= 16; n += 2) {
        INFO("n=" << n);
        REQUIRE(clique_prefix_counterexample(n));
    }
    CHECK_THROWS_AS(clique_prefix_counterexample(9), DomainError);
}

TEST_CASE("swapping in the far partner of zero does not restore resolution") {
    for (int n = 8; n <= 16; n += 2) {
        INFO("n=" << n);
        REQUIRE(partner_augmented_counterexample(n));
    }
    CHECK_THROWS_AS(partner_augmented_counterexample(9), DomainError);
}

TEST_CASE("the two counterexample sets really fail the basic predicate") {
    // spell out what the helpers encapsulate, for n = 8: k = 3
    const auto dist = testutil::circulant_dist(8, 3);
    const auto drop = is_resolving(WitnessSet({0, 1, 2}), dist);
    REQUIRE_FALSE(drop.ok);
    CHECK(drop.failing_pair == std::make_pair(3, 7));
    const auto swapped = is_resolving(WitnessSet({0, 1, 2, 4}), dist);
    REQUIRE_FALSE(swapped.ok);
    CHECK(swapped.failing_pair == std::make_pair(3, 7));
}

TEST_CASE("family members have all three dimensions equal to k+1") {
    for (int n = 8; n <= 16; n += 2) {
        INFO("n=" << n);
        const auto rep = verify_family(n);
        REQUIRE(rep.n == n);
        REQUIRE(rep.k == n / 2 - 1);
        REQUIRE(rep.expected == rep.k + 1);
        REQUIRE(rep.beta == rep.expected);
        REQUIRE(rep.psi == rep.expected);
        REQUIRE(rep.sdim == rep.expected);
        REQUIRE(rep.witness_resolving);
        REQUIRE(rep.witness_doubly);
        REQUIRE(rep.witness_strong);
        REQUIRE_FALSE(rep.budget_exhausted);
        REQUIRE(rep.pass());
        REQUIRE(std::string(rep.verdict()) == "pass");
    }
    CHECK_THROWS_AS(verify_family(10, SearchBudget{0, 1}), DomainError);
}

TEST_CASE("a tiny budget yields a budget verdict, not a wrong answer") {
    const auto rep = verify_family(12, SearchBudget{1, 60'000});
    CHECK(rep.budget_exhausted);
    CHECK_FALSE(rep.pass());
    CHECK(std::string(rep.verdict()) == "budget");
    CHECK(rep.beta == -1);
    // witness checks are budget-free and still run
    CHECK(rep.witness_ok());
}

TEST_CASE("on family members every minimum resolving set is doubly resolving") {
    for (int n : {8, 10, 12}) {
        const int k = n / 2 - 1;
        const auto dist = testutil::circulant_dist(n, k);
        const int beta = min_resolving_set(dist).optimum;
        REQUIRE(beta == k + 1);
        std::vector<int> c(beta);
        std::iota(c.begin(), c.end(), 0);
        int minimum_sets = 0;
        do {
            if (is_resolving(WitnessSet(c), dist).ok) {
                ++minimum_sets;
                REQUIRE(is_doubly_resolving(WitnessSet(c), dist).ok);
            }
        } while (oracle::next_combination(c, n));
        REQUIRE(minimum_sets > 0);
    }
}

TEST_CASE("rotations of the canonical witness stay valid under all predicates") {
    for (int n = 8; n <= 14; n += 2) {
        const int k = n / 2 - 1;
        const auto dist = testutil::circulant_dist(n, k);
        const auto base = canonical_witness(n).vertices;
        for (int shift = 0; shift < n; ++shift) {
            std::vector<int> rotated;
            for (int v : base) rotated.push_back((v + shift) % n);
            std::sort(rotated.begin(), rotated.end());
            const WitnessSet w(rotated);
            REQUIRE(is_resolving(w, dist).ok);
            REQUIRE(is_doubly_resolving(w, dist).ok);
            REQUIRE(is_strong_resolving(w, dist).ok);
        }
    }
}

TEST_CASE("clique and chromatic numbers hit k+1 together exactly on divisible orders") {
    CHECK(verify_clique_coloring_iff(8, 3));   // 4 | 8: both equal 4
    CHECK(verify_clique_coloring_iff(8, 2));   // 3 does not divide 8
    CHECK(verify_clique_coloring_iff(6, 2));   // 3 | 6: both equal 3
    for (int n = 4; n <= 12; ++n)
        for (int k = 1; k <= n / 2 - 1; ++k) {
            INFO("n=" << n << " k=" << k);
            REQUIRE(verify_clique_coloring_iff(n, k));
        }
}

TEST_CASE("order six sits below the family but shares the numerics") {
    // circulant(6, 2) is the octahedron; all three optima are 3, yet the
    // family helpers refuse it because the closed form is stated for n >= 8
    const auto dist = testutil::circulant_dist(6, 2);
    CHECK(min_resolving_set(dist).optimum == 3);
    CHECK(min_doubly_resolving_set(dist).optimum == 3);
    CHECK(min_strong_resolving_set_vc(dist).optimum == 3);
    CHECK_THROWS_AS(verify_family(6), DomainError);
}
