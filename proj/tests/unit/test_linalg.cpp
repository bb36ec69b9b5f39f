#include <doctest.h>

#include "orbitspan/linalg.hpp"
#include "orbitspan/prng.hpp"

#include "oracles.hpp"

using namespace orbitspan;
namespace oracle = orbitspan::testing;

namespace {

QVector vec(std::initializer_list<Rational> values) { return QVector::dense(values); }

QMatrix mat(std::vector<QVector> rows) { return QMatrix::from_rows(std::move(rows)); }

QVector random_vector(Prng& rng, std::size_t dim) {
    QVector v;
    for (std::size_t i = 0; i < dim; ++i) {
        if (rng.chance(3, 5)) continue;
        long long n = (long long)rng.below(9) - 4;
        long long d = (long long)rng.below(3) + 1;
        if (n != 0) v.set(i, Rational(n, d));
    }
    return v;
}

} // namespace

TEST_CASE("rank: identity and dependent third row") {
    CHECK(rank(QMatrix::identity(2)) == 2);
    CHECK(rank(mat({vec({1, 0}), vec({0, 1}), vec({1, 1})})) == 2);
}

TEST_CASE("rank: nilpotent shift chain, appending zero keeps rank") {
    // e0, S e0, S^2 e0 for the 3x3 nilpotent coordinate shift; S^3 e0 = 0.
    QMatrix s = QMatrix::coordinate_shift(3);
    QVector e0 = QVector::unit(0);
    QVector e1 = s.apply(e0), e2 = s.apply(e1), e3 = s.apply(e2);
    CHECK(e3.is_zero());
    QMatrix three = mat({e0, e1, e2});
    CHECK(rank(three) == 3);
    CHECK(oracle::minor_rank(three) == 3);
    CHECK(rank(QMatrix::from_rows({e0, e1, e2, e3}, 3)) == 3);
}

TEST_CASE("in_span basics") {
    Subspace plane = Subspace::from_generators({vec({1, 0}), vec({0, 1})});
    CHECK(in_span(vec({1, 1}), plane));
    Subspace xy = Subspace::from_generators({vec({1, 0, 0}), vec({0, 1, 0})});
    CHECK_FALSE(in_span(vec({0, 0, 1}), xy));
}

TEST_CASE("in_span with fractions, exact") {
    Subspace line = Subspace::from_generators({vec({3, 2})});
    // (1/2, 1/3) = (1/6) * (3, 2): solving the single equation exactly
    // shows membership.
    CHECK(in_span(vec({Rational(1, 2), Rational(1, 3)}), line));
    CHECK(in_span(vec({Rational(3, 2), Rational(1)}), line));
    CHECK_FALSE(in_span(vec({Rational(1, 2), Rational(1, 2)}), line));
}

TEST_CASE("in_span_plus") {
    CHECK(in_span_plus(vec({0, 1}), Subspace(), Subspace::from_generators({vec({0, 1})})));
    CHECK(in_span_plus(vec({1, 1, 1}), Subspace::from_generators({vec({1, 0, 0})}),
                       Subspace::from_generators({vec({0, 1, 1})})));
    CHECK_FALSE(in_span_plus(vec({0, 0, 1}), Subspace::from_generators({vec({1, 0, 0})}),
                             Subspace::from_generators({vec({0, 1, 0})})));
}

TEST_CASE("dependence witness examples") {
    CHECK_FALSE(dependence_witness(mat({vec({1, 0}), vec({0, 1})})).has_value());

    auto w = dependence_witness(mat({vec({1, 2}), vec({2, 4})}));
    REQUIRE(w.has_value());
    CHECK(w->verifies({vec({1, 2}), vec({2, 4})}));

    std::vector<QVector> rows{vec({1, 0}), vec({0, 1}), vec({1, 1})};
    auto w3 = dependence_witness(mat(rows));
    REQUIRE(w3.has_value());
    CHECK(w3->verifies(rows));
    CHECK(w3->indices() == std::vector<std::size_t>{0, 1, 2});
    // up to scaling: c0 = c1 = -c2
    Rational c0 = w3->coefficients.at(0);
    CHECK(w3->coefficients.at(1) == c0);
    CHECK(w3->coefficients.at(2) == -c0);
}

TEST_CASE("zero row is dependent on its own") {
    auto w = dependence_witness(QMatrix::from_rows({QVector{}}, 2));
    REQUIRE(w.has_value());
    CHECK(w->coefficients.size() == 1);
    CHECK(w->coefficients.count(0) == 1);
}

TEST_CASE("rank invariant under row permutation and scaling") {
    Prng rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<QVector> rows;
        for (int r = 0; r < 5; ++r) rows.push_back(random_vector(rng, 5));
        std::size_t base = rank(QMatrix::from_rows(rows, 5));
        CHECK(base == oracle::minor_rank(QMatrix::from_rows(rows, 5)));

        std::vector<QVector> shuffled = rows;
        rng.shuffle(shuffled);
        for (QVector& v : shuffled) {
            long long n = (long long)rng.below(5) + 1;
            long long d = (long long)rng.below(4) + 1;
            v = v.scaled(rng.chance(1, 2) ? Rational(n, d) : Rational(-n, d));
        }
        CHECK(rank(QMatrix::from_rows(shuffled, 5)) == base);
    }
}

TEST_CASE("in_span agrees with rank growth; witness laws") {
    Prng rng(99);
    for (int trial = 0; trial < 80; ++trial) {
        std::vector<QVector> rows;
        std::size_t n = 3 + rng.below(3);
        for (std::size_t r = 0; r < n; ++r) rows.push_back(random_vector(rng, 4));
        QVector v = random_vector(rng, 4);

        Subspace s = Subspace::from_generators(rows);
        std::vector<QVector> extended = rows;
        extended.push_back(v);
        bool members = in_span(v, s);
        CHECK(members == (rank(QMatrix::from_rows(extended, 4)) ==
                          rank(QMatrix::from_rows(rows, 4))));

        auto w = dependence_witness(QMatrix::from_rows(rows, 4));
        CHECK(w.has_value() == (rank(QMatrix::from_rows(rows, 4)) < rows.size()));
        if (w) {
            CHECK(w->verifies(rows));
            for (const auto& [i, c] : w->coefficients) CHECK_FALSE(c.is_zero());
        }
    }
}

TEST_CASE("subspace canonical form is order-independent") {
    Prng rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<QVector> rows;
        for (int r = 0; r < 4; ++r) rows.push_back(random_vector(rng, 5));
        std::vector<QVector> shuffled = rows;
        rng.shuffle(shuffled);
        for (QVector& v : shuffled)
            v = v.scaled(Rational((long long)rng.below(6) + 1, (long long)rng.below(3) + 1));
        CHECK(Subspace::from_generators(rows) == Subspace::from_generators(shuffled));
    }
    // echelon pivots strictly increasing, pivot entries 1
    Subspace s = Subspace::from_generators({vec({2, 4, 0}), vec({1, 2, 3}), vec({0, 0, 7})});
    std::size_t last_pivot = 0;
    bool first = true;
    for (const QVector& b : s.basis()) {
        std::size_t pivot = b.entries().begin()->first;
        CHECK(b.entries().begin()->second == Rational(1));
        if (!first) CHECK(pivot > last_pivot);
        last_pivot = pivot;
        first = false;
    }
}

TEST_CASE("in_span_plus agrees with rank of the stacked basis") {
    Prng rng(1212);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<QVector> left, right;
        for (int r = 0; r < 3; ++r) left.push_back(random_vector(rng, 5));
        for (int r = 0; r < 2; ++r) right.push_back(random_vector(rng, 5));
        QVector v = random_vector(rng, 5);

        Subspace s = Subspace::from_generators(left);
        Subspace vsub = Subspace::from_generators(right);
        std::vector<QVector> stacked = left;
        stacked.insert(stacked.end(), right.begin(), right.end());
        std::size_t base = rank(QMatrix::from_rows(stacked, 5));
        stacked.push_back(v);
        bool member = in_span_plus(v, s, vsub);
        CHECK(member == (rank(QMatrix::from_rows(stacked, 5)) == base));
        // sum is commutative in canonical form
        CHECK(Subspace::sum(s, vsub) == Subspace::sum(vsub, s));
    }
}

TEST_CASE("matrix apply and multiply") {
    QMatrix s = QMatrix::coordinate_shift(4);
    CHECK(s.apply(QVector::unit(1)) == QVector::unit(2));
    CHECK(s.multiply(s).apply(QVector::unit(1)) == QVector::unit(3));
    CHECK(s.multiply(s).multiply(s).apply(QVector::unit(1)).is_zero());
    CHECK(QMatrix::identity(3).apply(vec({1, 2, 3})) == vec({1, 2, 3}));
}
