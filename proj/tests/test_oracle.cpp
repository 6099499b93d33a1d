#include <algorithm>

#include "doctest.h"
#include "galecount/automata.hpp"
#include "galecount/oracle.hpp"

using namespace galecount;
using oracle::WheelSequence;

TEST_CASE("wheel sequences of size 1 and 2") {
    auto s1 = oracle::wheel_sequences(1);
    std::sort(s1.begin(), s1.end());
    CHECK(s1 == std::vector<WheelSequence>{{0, 1}, {1, 0}});

    auto s2 = oracle::wheel_sequences(2);
    std::sort(s2.begin(), s2.end());
    // no length-4 sequence of size 2 survives the adjacent-zero rule
    CHECK(s2 == std::vector<WheelSequence>{{0, 2}, {1, 1}, {2, 0}});
}

TEST_CASE("sequence count at size 3 equals the rooted-wheel series") {
    const auto r = rooted_wheel_series_closed(3).eval_u1();
    CHECK(Rational(static_cast<long>(oracle::wheel_sequences(3).size())) == r[3]);
}

TEST_CASE("orbit counts") {
    CHECK(oracle::orbit_count({{0, 1}, {1, 0}}, oracle::Group::Dihedral) == 1);
    CHECK(oracle::orbit_count({{1, 1}}, oracle::Group::Cyclic) == 1);
    const auto s2 = oracle::wheel_sequences(2);
    CHECK(oracle::orbit_count(s2, oracle::Group::Dihedral) == 2);
}

TEST_CASE("orbit counts are invariant under re-rooting the input") {
    auto seqs = oracle::wheel_sequences(5);
    std::vector<WheelSequence> k5;
    for (auto& s : seqs)
        if (s.size() == 10) k5.push_back(s);
    const long base = oracle::orbit_count(k5, oracle::Group::Dihedral);
    for (auto& s : k5) s = oracle::apply(s, 3, false);
    CHECK(oracle::orbit_count(k5, oracle::Group::Dihedral) == base);
}

TEST_CASE("half-plane window checks") {
    CHECK_FALSE(oracle::satisfies_p3({1, 1}));
    CHECK(oracle::satisfies_p3({1, 0, 1, 0, 1, 0, 1, 0, 1, 0}));
    CHECK_FALSE(oracle::satisfies_p3({1, 1, 1, 1}));
    CHECK(oracle::satisfies_p3({2, 2, 2, 2}));
}

TEST_CASE("brute force diagram counts") {
    const auto c5 = oracle::brute_force_counts(5);
    CHECK(c5.c == 1);
    CHECK(c5.c_plus == 1);
    CHECK(c5.c_minus == 1);
    const auto c6 = oracle::brute_force_counts(6);
    CHECK(c6.c == 7);
    CHECK(c6.c_plus == 7);
    CHECK(c6.c_minus == 7);
    const auto c7 = oracle::brute_force_counts(7, 2);
    CHECK(c7.c == 31);
    CHECK(c7.c_plus == 38);
    CHECK(c7.c_minus == 24);
}

TEST_CASE("fixed pair counts at size 1") {
    const auto counts = oracle::fixed_pair_counts(1);
    REQUIRE(counts.count(1) == 1);
    CHECK(counts.at(1).rooted == 2);  // (1,+) swaps (0,1) and (1,0)
    CHECK(counts.at(1).rotation_pairs == 0);
    // one of the two reflections of D_2 fixes both sequences, the other
    // neither; 4k W_{1,1} = 4 = 2 + 0 + 2
    CHECK(counts.at(1).reflection_pairs == 2);
}

TEST_CASE("Burnside identity 4k W_{n,k} = R + R+ + R- per (n,k)") {
    for (int n = 1; n <= 8; ++n) {
        const auto pairs = oracle::fixed_pair_counts(n);
        const auto orbits = oracle::wheel_orbit_counts(n, oracle::Group::Dihedral);
        for (const auto& [k, c] : pairs) {
            const long lhs = 4L * k * (orbits.count(k) ? orbits.at(k) : 0);
            CHECK(lhs == c.rooted + c.rotation_pairs + c.reflection_pairs);
        }
    }
}

TEST_CASE("no P3 wheel with one diameter, no violator with five or more") {
    for (int n = 1; n <= 8; ++n) {
        oracle::enumerate_wheel_sequences(n, [&](const WheelSequence& s) {
            const int k = static_cast<int>(s.size()) / 2;
            if (k == 1) CHECK_FALSE(oracle::satisfies_p3(s));
            if (k >= 5) CHECK(oracle::satisfies_p3(s));
        });
    }
}
