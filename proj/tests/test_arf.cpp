#include "spinmod/arf.hpp"
#include "spinmod/error.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace spinmod::arf;

TEST_CASE("theta counts") {
    CHECK(count_by_arf(1) == ParityCounts{3, 1});
    CHECK(count_by_arf(2) == ParityCounts{10, 6});
    for (int g = 1; g <= 4; ++g) {
        const std::uint64_t p = std::uint64_t{1} << (g - 1);
        const std::uint64_t q = std::uint64_t{1} << g;
        CHECK(count_by_arf(g) == ParityCounts{p * (q + 1), p * (q - 1)});
        CHECK(theta_counts_closed_form(g) == count_by_arf(g));
    }
    CHECK(theta_counts_closed_form(0) == ParityCounts{1, 0});
}

TEST_CASE("quadratic identity, exhaustive for g <= 3") {
    for (int g = 1; g <= 3; ++g) {
        const SymplecticSpace s(g);
        for (const auto& q : QuadraticForm::all(g)) {
            for (Vec x = 0; x < s.size(); ++x) {
                for (Vec y = 0; y < s.size(); ++y) {
                    REQUIRE(q(x ^ y) == (q(x) ^ q(y) ^ s.pair(x, y)));
                }
            }
        }
    }
}

TEST_CASE("quadratic identity, sampled for g = 4") {
    std::mt19937 rng(4);
    const SymplecticSpace s(4);
    std::uniform_int_distribution<Vec> vec(0, s.size() - 1);
    for (int i = 0; i < 20000; ++i) {
        const QuadraticForm q(s, vec(rng));
        const Vec x = vec(rng);
        const Vec y = vec(rng);
        REQUIRE(q(x ^ y) == (q(x) ^ q(y) ^ s.pair(x, y)));
    }
}

TEST_CASE("Arf is the majority value") {
    // Arf(Q) = 0 exactly when Q has more zeros than ones.
    for (int g = 1; g <= 3; ++g) {
        for (const auto& q : QuadraticForm::all(g)) {
            int zeros = 0;
            for (Vec x = 0; x < q.space().size(); ++x) {
                zeros += q(x) == 0;
            }
            CHECK((arf(q) == 0) == (2 * zeros > static_cast<int>(q.space().size())));
        }
    }
}

TEST_CASE("evaluation does not depend on summation order") {
    std::mt19937 rng(7);
    for (int g = 1; g <= 3; ++g) {
        std::vector<int> order(2 * g);
        std::iota(order.begin(), order.end(), 0);
        for (const auto& q : QuadraticForm::all(g)) {
            std::shuffle(order.begin(), order.end(), rng);
            for (Vec x = 0; x < q.space().size(); ++x) {
                REQUIRE(q.evaluate_in_order(x, order) == q(x));
            }
        }
    }
}

TEST_CASE("Arf is invariant under transvections") {
    for (int g = 1; g <= 3; ++g) {
        const SymplecticSpace s(g);
        for (const auto& q : QuadraticForm::all(g)) {
            for (Vec v = 1; v < s.size(); ++v) {
                std::vector<Vec> images;
                for (int j = 0; j < 2 * g; ++j) {
                    images.push_back(s.transvect(s.basis(j), v));
                }
                REQUIRE(arf(q.pullback(images)) == arf(q));
            }
        }
    }
}

TEST_CASE("transvection orbits are the two Arf classes") {
    for (int g = 1; g <= 3; ++g) {
        const auto o = transvection_orbits(g);
        REQUIRE(o.sizes.size() == 2);
        CHECK(o.arf_constant);
        const auto counts = count_by_arf(g);
        CHECK(o.sizes[0] == counts.even);
        CHECK(o.sizes[1] == counts.odd);
        CHECK(o.arf_values == std::vector<int>{0, 1});
    }
}

TEST_CASE("orbit counts of elliptic automorphisms, checked by hand") {
    // On E, a form is (Q(a), Q(b)); the even ones are 00, 10, 01.
    // The quarter turn swaps 10 and 01; the third turn cycles all three.
    const std::vector<Vec> identity{0b01, 0b10};
    const std::vector<Vec> quarter{0b10, 0b01};
    const std::vector<Vec> third{0b10, 0b11};
    CHECK(orbit_count(1, {identity}, 0) == 3);
    CHECK(orbit_count(1, {}, 0) == 3);
    CHECK(orbit_count(1, {quarter}, 0) == 2);
    CHECK(orbit_count(1, {third}, 0) == 1);
    CHECK(orbit_count(1, {third}, 1) == 1);
    CHECK(orbit_count(1, {quarter, third}, 0) == 1);
}

TEST_CASE("form text round trip and errors") {
    for (const auto& q : QuadraticForm::all(2)) {
        CHECK(QuadraticForm::parse(q.str()).basis_values() == q.basis_values());
    }
    CHECK(arf(QuadraticForm::parse("11")) == 1);
    CHECK(arf(QuadraticForm::parse("1100")) == 0);
    CHECK_THROWS_AS((void)QuadraticForm::parse("101"), spinmod::ParseError);
    CHECK_THROWS_AS((void)QuadraticForm::parse("12"), spinmod::ParseError);
    CHECK_THROWS_AS((void)count_by_arf(5), spinmod::WindowError);
    CHECK_THROWS_AS((void)transvection_orbits(4), spinmod::WindowError);
}
