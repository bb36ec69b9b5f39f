#include <doctest.h>

#include "orbitspan/counterexample.hpp"
#include "orbitspan/errors.hpp"
#include "orbitspan/prng.hpp"

#include "oracles.hpp"

using namespace orbitspan;
namespace oracle = orbitspan::testing;

TEST_CASE("zero-orbit bundle for n -> n + 2") {
    SelfMap phi = SelfMap::make({}, 2);
    CounterexampleBundle b = build_zero_orbit(phi, 0, 20);
    CHECK(b.construction == CounterexampleBundle::Construction::ZeroOnOrbit);
    // evens are zeroed, odds carry fresh basis vectors
    for (Nat i = 0; i < 20; ++i) CHECK(b.family.at(i).is_zero() == (i % 2 == 0));
    CHECK(b.rank_deficit == 10);
    CHECK_NOTHROW(validate_bundle(b, phi));
    // the dependence names e_0 = 0
    CHECK(b.dependence.coefficients.count(0) == 1);
}

TEST_CASE("zero-orbit bundle for the lone fixed point") {
    SelfMap phi = SelfMap::make({{0, 0}}, 1);
    CounterexampleBundle b = build_zero_orbit(phi, 0, 16);
    // only e_0 is zeroed: rank grows as window - 1
    CHECK(b.rank_deficit == 1);
    std::size_t zeros = 0;
    for (const auto& [i, v] : b.family) zeros += v.is_zero();
    CHECK(zeros == 1);
    CHECK_NOTHROW(validate_bundle(b, phi));
}

TEST_CASE("zero-orbit rejects cofinite orbits") {
    CHECK_THROWS_AS(build_zero_orbit(SelfMap::successor(), 0, 16), InputError);
}

TEST_CASE("graded bundle for the two-orbit merge") {
    // phi: 0 -> 2, 1 -> 2, tail n -> n+1. Orbits of 0 and 1 are cofinite,
    // no generator; grades duplicate at e_1 = e_0.
    SelfMap phi = SelfMap::make({{0, 2}, {1, 2}}, 1);
    CounterexampleBundle b = build_graded(phi, 16);
    CHECK(b.construction == CounterexampleBundle::Construction::GradedByMeeting);
    CHECK(b.anchor == 0);
    CHECK(b.family.at(0) == b.family.at(1));  // grade(1) = n(1) - m(1) = 0
    CHECK(b.meetings[1].m == 1);
    CHECK(b.meetings[1].n == 1);
    CHECK(b.rank_deficit == 1);
    CHECK_NOTHROW(validate_bundle(b, phi));
}

TEST_CASE("graded grade bookkeeping follows the orbit split") {
    SelfMap phi = SelfMap::make({{0, 2}, {1, 2}}, 1);
    CounterexampleBundle b = build_graded(phi, 14);
    OrbitSet orbit = orbit_set(phi, b.anchor);
    for (Nat i = 0; i + 1 < b.window; ++i) {
        const MeetingIndices& cur = b.meetings[i];
        // m(i) = 0 exactly on the orbit of the anchor
        CHECK((cur.m == 0) == orbit.contains(i));
        Nat image = phi.evaluate(i);
        if (image >= b.window) continue;
        const MeetingIndices& next = b.meetings[image];
        if (orbit.contains(i)) {
            CHECK(next.m == 0);
            CHECK(next.n == cur.n + 1);
        } else {
            CHECK(next.m == cur.m - 1);
            CHECK(next.n == cur.n);
        }
        // either way the grade climbs by one: T e_i = e_{phi(i)}
        CHECK(next.n - next.m == cur.n - cur.m + 1);
    }
}

TEST_CASE("graded bundle across a far exception jump") {
    // 0 jumps to 50 and then climbs; 1 climbs from the bottom. Both
    // orbits are cofinite, they meet at 50, and the anchor of minimal
    // complement is 1.
    SelfMap phi = SelfMap::make({{0, 50}}, 1);
    CounterexampleBundle b = build_graded(phi, 50);
    CHECK(b.anchor == 1);
    CHECK(b.meetings[0].m == 1);
    CHECK(b.meetings[0].n == 49);
    CHECK(b.family.at(0) == QVector::unit(48));
    CHECK(b.family.at(49) == QVector::unit(48));  // the duplicated grade
    CHECK(b.rank_deficit == 1);
    CHECK_NOTHROW(validate_bundle(b, phi));
}

TEST_CASE("graded is rejected when an orbit is finite") {
    SelfMap fix = SelfMap::make({{0, 0}}, 1);
    CHECK_THROWS_AS(build_graded(fix, 16), InputError);
}

TEST_CASE("refute_P dispatches by orbit structure") {
    CHECK(refute_P(SelfMap::make({{0, 0}}, 1), 16).construction ==
          CounterexampleBundle::Construction::ZeroOnOrbit);
    CHECK(refute_P(SelfMap::make({}, 2), 16).construction ==
          CounterexampleBundle::Construction::ZeroOnOrbit);
    CHECK(refute_P(SelfMap::make({{0, 2}, {1, 2}}, 1), 16).construction ==
          CounterexampleBundle::Construction::GradedByMeeting);
    CHECK_THROWS_AS(refute_P(SelfMap::successor(), 16), InputError);
    CHECK_THROWS_AS(refute_P(SelfMap::make({{1, 0}, {0, 2}}, 1), 16), InputError);
}

TEST_CASE("shift compatibility holds on both sides of the orbit split") {
    SelfMap phi = SelfMap::make({{0, 2}, {1, 2}}, 1);
    CounterexampleBundle b = build_graded(phi, 12);
    for (Nat i = 0; i < b.window; ++i) {
        Nat image = phi.evaluate(i);
        if (image >= b.window) continue;
        CHECK(b.op.apply(b.family.at(i)) == b.family.at(image));
    }
}

TEST_CASE("refute_P succeeds exactly when no generator exists") {
    Prng rng(4096);
    std::size_t refuted = 0, generated = 0;
    for (int trial = 0; trial < 120; ++trial) {
        std::map<Nat, Nat> exceptions;
        Nat domain = rng.below(4);
        for (Nat k = 0; k < domain; ++k)
            if (rng.chance(2, 3)) exceptions[k] = rng.below(6);
        SelfMap phi = SelfMap::make(std::move(exceptions), rng.chance(4, 5) ? 1 : 2);
        bool has_gen = find_generator(phi, phi.tail_threshold()).has_value();
        Nat window = phi.min_window() + 20;
        if (has_gen) {
            ++generated;
            CHECK_THROWS_AS(refute_P(phi, window), InputError);
        } else {
            ++refuted;
            CounterexampleBundle b = refute_P(phi, window);
            CHECK_NOTHROW(validate_bundle(b, phi));
            CHECK(rank(QMatrix::from_rows([&b] {
                      std::vector<QVector> rows;
                      for (const auto& [i, v] : b.family) rows.push_back(v);
                      return rows;
                  }())) == b.window - b.rank_deficit);
        }
    }
    CHECK(refuted >= 20);
    CHECK(generated >= 10);
}

TEST_CASE("tampered bundles fail validation") {
    SelfMap phi = SelfMap::make({}, 2);
    CounterexampleBundle good = build_zero_orbit(phi, 0, 14);

    CounterexampleBundle wrong_family = good;
    wrong_family.family[1] = QVector::unit(7);
    CHECK_THROWS_AS(validate_bundle(wrong_family, phi), InputError);

    CounterexampleBundle wrong_witness = good;
    wrong_witness.dependence.coefficients = {{1, Rational(1)}};  // e_1 != 0
    CHECK_THROWS_AS(validate_bundle(wrong_witness, phi), InputError);

    CounterexampleBundle wrong_rank = good;
    wrong_rank.rank_deficit = 0;
    CHECK_THROWS_AS(validate_bundle(wrong_rank, phi), InputError);
}
