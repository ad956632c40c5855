#include "oracles.hpp"

#include "spinmod/error.hpp"
#include "spinmod/graphs.hpp"

#include <doctest.h>

#include <set>

using namespace spinmod::graphs;

TEST_CASE("stability of single vertices and small trees") {
    CHECK(is_stable(StableGraph{{1}, {}, {0}}));
    CHECK_FALSE(is_stable(StableGraph{{0}, {}, {0, 0}}));
    CHECK_FALSE(is_stable(StableGraph{{0, 0}, {{0, 1}}, {0, 0, 1}}));
    CHECK(is_stable(StableGraph{{0, 0}, {{0, 1}}, {0, 0, 1, 1}}));
}

TEST_CASE("total genus") {
    CHECK(total_genus(StableGraph{{0}, {{0, 0}}, {0}}) == 1);
    CHECK(total_genus(StableGraph{{1, 1}, {{0, 1}}, {}}) == 2);
    CHECK(total_genus(StableGraph{{1}, {{0, 0}}, {0, 0, 0}}) == 2);
    CHECK_THROWS_AS((void)total_genus(StableGraph{{1, 1}, {}, {}}), spinmod::StructuralError);
}

TEST_CASE("malformed graphs are structural errors") {
    CHECK_THROWS_AS((void)is_stable(StableGraph{{0}, {{0, 1}}, {0, 0, 0}}), spinmod::StructuralError);
    CHECK_THROWS_AS((void)is_stable(StableGraph{{0}, {}, {0, 0, 3}}), spinmod::StructuralError);
    CHECK_THROWS_AS((void)is_stable(StableGraph{{}, {}, {}}), spinmod::StructuralError);
    CHECK_THROWS_AS((void)is_stable(StableGraph{{-1}, {}, {0, 0, 0}}), spinmod::StructuralError);
}

TEST_CASE("canonical key distinguishes and identifies") {
    const StableGraph a{{0, 0}, {{0, 1}}, {0, 0, 1, 1}};
    const StableGraph b{{0, 0}, {{1, 0}}, {1, 1, 0, 0}};
    const StableGraph c{{0, 0}, {{0, 1}}, {0, 1, 0, 1}};
    CHECK(canonical_key(a) == canonical_key(b));
    CHECK(canonical_key(a) != canonical_key(c));
}

TEST_CASE("automorphism counts") {
    CHECK(automorphism_count(StableGraph{{0}, {{0, 0}}, {0}}) == 2);
    CHECK(automorphism_count(StableGraph{{1, 1}, {{0, 1}}, {}}) == 2);
    CHECK(automorphism_count(StableGraph{{0, 0}, {{0, 1}, {0, 1}, {0, 1}}, {}}) == 12);
    CHECK(automorphism_count(StableGraph{{0}, {{0, 0}, {0, 0}}, {}}) == 8);
}

TEST_CASE("genus-zero strata match the split-family oracle") {
    for (int n = 3; n <= 5; ++n) {
        std::map<int, int> by_edges;
        for (const auto& g : enumerate_strata(0, n)) {
            ++by_edges[g.edge_count()];
        }
        CHECK(by_edges == oracle::genus0_strata_by_edges(n));
    }
    CHECK(enumerate_strata(0, 4).size() == 4);
    CHECK(enumerate_strata(0, 5).size() == 26);
}

TEST_CASE("strata counts match exhaustive generation") {
    for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 3}, {0, 4}, {0, 5}, {1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 0}, {2, 1}, {2, 2}}) {
        CAPTURE(g);
        CAPTURE(n);
        const auto got = enumerate_strata(g, n);
        const auto want = oracle::brute_strata(g, n);
        CHECK(got.size() == want.size());
        for (const auto& w : want) {
            CHECK(std::any_of(got.begin(), got.end(), [&](const StableGraph& x) { return oracle::isomorphic(x, w); }));
        }
    }
    CHECK(enumerate_strata(1, 1).size() == 2);
    CHECK(enumerate_strata(1, 2).size() == 5);
    CHECK(enumerate_strata(2, 0).size() == 7);
}

TEST_CASE("enumerated strata are stable, connected, of the right genus and pairwise distinct") {
    for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 5}, {1, 3}, {1, 4}, {2, 1}, {2, 2}}) {
        const auto strata = enumerate_strata(g, n);
        std::set<std::string> keys;
        for (const auto& s : strata) {
            CHECK(is_stable(s));
            CHECK(is_connected(s));
            CHECK(total_genus(s) == g);
            CHECK(s.marking_count() == n);
            keys.insert(canonical_key(s));
        }
        CHECK(keys.size() == strata.size());
    }
}

TEST_CASE("canonical key survives 1200 random relabelings") {
    std::mt19937 rng(20261018);
    std::vector<StableGraph> pool;
    for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 5}, {1, 3}, {2, 1}, {2, 2}}) {
        const auto s = enumerate_strata(g, n);
        pool.insert(pool.end(), s.begin(), s.end());
    }
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    int violations = 0;
    for (int trial = 0; trial < 1200; ++trial) {
        const auto& g = pool[pick(rng)];
        violations += canonical_key(oracle::scramble(g, rng)) != canonical_key(g);
    }
    CHECK(violations == 0);
}

TEST_CASE("automorphism counts agree with half-edge brute force") {
    for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 4}, {0, 5}, {1, 1}, {1, 2}, {1, 3}, {2, 0}, {2, 1}}) {
        for (const auto& s : enumerate_strata(g, n)) {
            CAPTURE(canonical_key(s));
            CHECK(automorphism_count(s) == oracle::brute_automorphisms(s));
        }
    }
}

TEST_CASE("one-node strata are the one-edge strata") {
    for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 5}, {1, 2}, {1, 3}, {2, 0}, {2, 2}}) {
        std::size_t one_edge = 0;
        for (const auto& s : enumerate_strata(g, n)) {
            one_edge += s.edge_count() == 1;
        }
        const auto one = enumerate_one_node(g, n);
        CHECK(one.size() == one_edge);
        for (const auto& s : one) {
            CHECK(s.edge_count() == 1);
        }
    }
}

TEST_CASE("window and stability errors") {
    CHECK_THROWS_AS((void)enumerate_strata(3, 0), spinmod::WindowError);
    CHECK_THROWS_AS((void)enumerate_strata(0, 6), spinmod::WindowError);
    CHECK_THROWS_AS((void)enumerate_strata(0, 2), std::invalid_argument);
    CHECK_THROWS_AS((void)enumerate_strata(1, 0), std::invalid_argument);
}

TEST_CASE("graph text round trip") {
    for (const auto& s : enumerate_strata(1, 3)) {
        const auto text = to_text(s);
        CHECK(from_text(text) == s);
        CHECK(to_text(from_text(text)) == text);
    }
    CHECK_THROWS_AS((void)from_text("{\"vertices\":[0],\"edges\":[],\"legs\":{\"2\":0}}"), spinmod::ParseError);
    CHECK_THROWS_AS((void)from_text("not json"), spinmod::ParseError);
}
