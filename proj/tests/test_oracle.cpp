#include <cstdint>
#include <stdexcept>

#include "doctest.h"

#include "qfa/oracle.hpp"
#include "qfa/promise.hpp"

using qfa::SearchReport;

TEST_CASE("cycle_solvable on the anchor cases") {
    SUBCASE("a full 2N cycle always works") {
        const auto verdict = qfa::cycle_solvable(8, 4);
        CHECK(verdict.solvable);
        CHECK(verdict.divisor == 8);
    }
    SUBCASE("a cycle of exactly N fails for even N") {
        const auto verdict = qfa::cycle_solvable(4, 4);
        CHECK_FALSE(verdict.solvable);
        CHECK(verdict.divisor == 4);
    }
    SUBCASE("three states cannot split period two") {
        CHECK_FALSE(qfa::cycle_solvable(3, 2).solvable);
    }
    SUBCASE("four states split period six") {
        CHECK(qfa::cycle_solvable(4, 6).solvable);
    }
    SUBCASE("rejects zero arguments") {
        CHECK_THROWS_AS(qfa::cycle_solvable(0, 1), std::invalid_argument);
        CHECK_THROWS_AS(qfa::cycle_solvable(1, 0), std::invalid_argument);
    }
}

TEST_CASE("cycle_solvable matches residue-set disjointness everywhere") {
    for (std::uint64_t t = 1; t <= 64; ++t) {
        for (std::uint64_t n = 1; n <= 64; ++n) {
            CAPTURE(t);
            CAPTURE(n);
            CHECK(qfa::cycle_solvable(t, n).solvable == qfa::cycle_solvable_by_residues(t, n));
        }
    }
}

TEST_CASE("analytic_min_states doubles the largest power of two in n") {
    CHECK(qfa::analytic_min_states(1) == 2);
    CHECK(qfa::analytic_min_states(7) == 2);
    CHECK(qfa::analytic_min_states(2) == 4);
    CHECK(qfa::analytic_min_states(8) == 16);
    CHECK(qfa::analytic_min_states(12) == 8);
    CHECK_THROWS_AS(qfa::analytic_min_states(0), std::invalid_argument);
}

TEST_CASE("analytic_min_states is the smallest solvable cycle") {
    for (std::uint64_t n = 1; n <= 32; ++n) {
        const std::uint64_t bound = qfa::analytic_min_states(n);
        CHECK(qfa::cycle_solvable(bound, n).solvable);
        for (std::uint64_t t = 1; t < bound; ++t) {
            CAPTURE(n);
            CAPTURE(t);
            CHECK_FALSE(qfa::cycle_solvable(t, n).solvable);
        }
    }
}

TEST_CASE("min_dfa_search finds the known minima") {
    const SearchReport two = qfa::min_dfa_search(2, 8);
    REQUIRE(two.minimal_states.has_value());
    CHECK(*two.minimal_states == 4);

    const SearchReport four = qfa::min_dfa_search(4, 10);
    REQUIRE(four.minimal_states.has_value());
    CHECK(*four.minimal_states == 8);

    const SearchReport one = qfa::min_dfa_search(1, 4);
    REQUIRE(one.minimal_states.has_value());
    CHECK(*one.minimal_states == 2);

    const SearchReport six = qfa::min_dfa_search(6, 8);
    REQUIRE(six.minimal_states.has_value());
    CHECK(*six.minimal_states == 4);
}

TEST_CASE("min_dfa_search witness solves the promise and has no tail") {
    for (std::uint64_t n = 1; n <= 12; ++n) {
        const SearchReport report = qfa::min_dfa_search(n, 16);
        CAPTURE(n);
        REQUIRE(report.witness.has_value());
        CHECK(qfa::dfa_solves_exactly(*report.witness, qfa::PromiseSpec{n}));
        CHECK(report.witness->tail_len == 0);
        CHECK(qfa::total_states(*report.witness) == *report.minimal_states);
    }
}

TEST_CASE("min_dfa_search counts every candidate at every scanned size") {
    // Sizes 1..4 are exhausted for n=2, so the count is the closed-form sum
    // of m * 2^m over those sizes.
    const SearchReport report = qfa::min_dfa_search(2, 8);
    CHECK(report.machines_checked == 98);
    CHECK(report.ms_per_size.size() == 4);

    // The count does not depend on how the scan was chunked.
    CHECK(qfa::min_dfa_search(2, 8, 1).machines_checked == 98);
    CHECK(qfa::min_dfa_search(2, 8, 7).machines_checked == 98);
}

TEST_CASE("min_dfa_search result is identical across thread counts") {
    for (unsigned threads : {1u, 2u, 3u, 8u}) {
        const SearchReport report = qfa::min_dfa_search(4, 10, threads);
        CAPTURE(threads);
        REQUIRE(report.minimal_states.has_value());
        CHECK(*report.minimal_states == 8);
        REQUIRE(report.witness.has_value());
        CHECK(report.witness->tail_len == 0);
        CHECK(report.witness->cycle_len == 8);
        CHECK(report.witness->accepting == std::set<std::uint32_t>{0});
        CHECK(report.machines_checked == qfa::min_dfa_search(4, 10, 1).machines_checked);
    }
}

TEST_CASE("min_dfa_search reports nothing when the bound is too small") {
    const SearchReport report = qfa::min_dfa_search(16, 8);
    CHECK_FALSE(report.minimal_states.has_value());
    CHECK_FALSE(report.witness.has_value());
    // All sizes were still exhausted.
    CHECK(report.ms_per_size.size() == 8);
}

TEST_CASE("min_dfa_search rejects out-of-range bounds") {
    CHECK_THROWS_AS(qfa::min_dfa_search(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(qfa::min_dfa_search(2, 21), std::invalid_argument);
    CHECK_THROWS_AS(qfa::min_dfa_search(0, 8), std::invalid_argument);
}

TEST_CASE("oracle_vs_analytic agrees at desk scale") {
    CHECK(qfa::oracle_vs_analytic(1, 2));
    CHECK(qfa::oracle_vs_analytic(12, 16));
    CHECK_FALSE(qfa::oracle_analytic_mismatch(8, 16).has_value());
    CHECK_THROWS_AS(qfa::oracle_vs_analytic(8, 8), std::invalid_argument);
}
