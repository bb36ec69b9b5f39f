#include "orbitspan/counterexample.hpp"

#include "orbitspan/errors.hpp"

#include <algorithm>
#include <set>

namespace orbitspan {

namespace {

bool complement_infinite(const SelfMap& phi, Nat a) {
    OrbitSet orbit = orbit_set(phi, a);
    return !orbit.infinite || orbit.tail_step != 1;
}

Nat meeting_bound(const SelfMap& phi, Nat window) {
    Nat max_image = 0;
    for (auto [k, v] : phi.exceptions()) max_image = std::max(max_image, v);
    return 2 * (window + phi.tail_threshold() + phi.tail_offset() + max_image) + 8;
}

/// Family rule of the zero-orbit construction, defined for every index:
/// zero on the orbit, the u(j)-th basis vector off it, where u enumerates
/// the complement in increasing order.
QVector zero_orbit_vector(const OrbitSet& orbit, Nat j) {
    if (orbit.contains(j)) return QVector{};
    return QVector::unit(j - orbit.count_below(j));
}

struct GradedRule {
    const SelfMap& phi;
    Nat a;
    Nat bound;

    MeetingIndices meeting(Nat i) const {
        auto m = meeting_indices(phi, a, i, bound);
        if (!m)
            throw InputError("meeting search exceeded bound " + std::to_string(bound) +
                             " at index " + std::to_string(i));
        if (m->n < m->m)
            throw InputError("minimal meeting has n < m at index " + std::to_string(i) +
                             "; anchor does not have minimal complement");
        return *m;
    }
    Nat grade(Nat i) const {
        MeetingIndices m = meeting(i);
        return m.n - m.m;
    }
};

} // namespace

std::string CounterexampleBundle::construction_name() const {
    return construction == Construction::ZeroOnOrbit ? "zero-on-orbit" : "graded-by-meeting";
}

CounterexampleBundle build_zero_orbit(const SelfMap& phi, Nat a, Nat window) {
    if (window < phi.min_window())
        throw InputError("window too small: need at least " + std::to_string(phi.min_window()));
    if (a >= window) throw InputError("base point must lie inside the window");
    if (!complement_infinite(phi, a))
        throw InputError("complement of the orbit is finite; zero-orbit construction "
                         "needs an infinite complement");

    OrbitSet orbit = orbit_set(phi, a);
    CounterexampleBundle bundle;
    bundle.construction = CounterexampleBundle::Construction::ZeroOnOrbit;
    bundle.anchor = a;
    bundle.window = window;

    Nat coords = 0;  // number of complement elements in the window
    for (Nat i = 0; i < window; ++i) {
        bundle.family.emplace(i, zero_orbit_vector(orbit, i));
        if (!orbit.contains(i)) ++coords;
    }
    if (coords == 0)
        throw InputError("window shows no complement element; enlarge the window");

    // Operator: column u(i) is the family rule at phi(i), for each
    // complement element i in the window.
    std::vector<std::pair<Nat, QVector>> columns;  // (column index, value)
    Nat out_dim = coords;
    for (Nat i = 0; i < window; ++i) {
        if (orbit.contains(i)) continue;
        Nat col = i - orbit.count_below(i);
        QVector value = zero_orbit_vector(orbit, phi.evaluate(i));
        out_dim = std::max<Nat>(out_dim, value.support_bound());
        columns.emplace_back(col, std::move(value));
    }
    std::vector<QVector> rows(out_dim);
    for (const auto& [col, value] : columns)
        for (const auto& [r, coef] : value.entries()) rows[r].set(col, coef);
    bundle.op = QMatrix::from_rows(std::move(rows), coords);

    bundle.dependence.coefficients.emplace(a, Rational(1));  // e_a = 0
    bundle.rank_deficit = orbit.count_below(window);
    validate_bundle(bundle, phi);
    return bundle;
}

CounterexampleBundle build_graded(const SelfMap& phi, Nat window) {
    if (window < phi.min_window())
        throw InputError("window too small: need at least " + std::to_string(phi.min_window()));
    if (find_generator(phi, phi.tail_threshold()))
        throw InputError("map has a full orbit; graded construction does not apply");
    for (Nat b = 0; b < window; ++b) {
        OrbitSet orbit = orbit_set(phi, b);
        if (!orbit.infinite || orbit.tail_step != 1)
            throw InputError("orbit of " + std::to_string(b) +
                             " is not cofinite; use the zero-orbit construction");
    }

    // Anchor of minimal complement within the window, ties to smaller a.
    Nat best_a = 0;
    Nat best_misses = window + 1;
    for (Nat a = 0; a <= phi.tail_threshold(); ++a) {
        OrbitSet orbit = orbit_set(phi, a);
        Nat misses = window - orbit.count_below(window);
        if (misses < best_misses) {
            best_misses = misses;
            best_a = a;
        }
    }

    GradedRule rule{phi, best_a, meeting_bound(phi, window)};
    OrbitSet orbit = orbit_set(phi, best_a);

    CounterexampleBundle bundle;
    bundle.construction = CounterexampleBundle::Construction::GradedByMeeting;
    bundle.anchor = best_a;
    bundle.window = window;

    std::set<Nat> grades;
    Nat max_grade = 0;
    for (Nat i = 0; i < window; ++i) {
        MeetingIndices m = rule.meeting(i);
        bundle.meetings.push_back(m);
        Nat g = m.n - m.m;
        grades.insert(g);
        max_grade = std::max(max_grade, g);
        bundle.family.emplace(i, QVector::unit(g));
    }
    bundle.op = QMatrix::coordinate_shift(max_grade + 2);

    // Dependence: some b off the orbit shares its grade with the orbit
    // point phi^{n(b)-m(b)}(a).
    bool found = false;
    for (Nat b = 0; b < window && !found; ++b) {
        if (orbit.contains(b)) continue;
        Nat g = bundle.meetings[b].n - bundle.meetings[b].m;
        Nat j = phi.iterate(best_a, g);
        if (j < window) {
            bundle.dependence.coefficients.emplace(b, Rational(1));
            bundle.dependence.coefficients.emplace(j, Rational(-1));
            found = true;
        }
    }
    if (!found)
        throw InputError("window too small to exhibit the graded dependence");

    bundle.rank_deficit = window - grades.size();
    validate_bundle(bundle, phi);
    return bundle;
}

CounterexampleBundle refute_P(const SelfMap& phi, Nat window) {
    if (find_generator(phi, phi.tail_threshold()))
        throw InputError("P holds for this map (full orbit exists); nothing to refute");
    for (Nat a = 0; a <= phi.tail_threshold(); ++a)
        if (complement_infinite(phi, a)) return build_zero_orbit(phi, a, window);
    return build_graded(phi, window);
}

void validate_bundle(const CounterexampleBundle& bundle, const SelfMap& phi) {
    if (bundle.family.size() != bundle.window)
        throw InputError("bundle family does not cover the window");

    // Reconstruct the family rule for arbitrary indices (images of window
    // indices can leave the window).
    OrbitSet orbit = orbit_set(phi, bundle.anchor);
    GradedRule graded{phi, bundle.anchor, meeting_bound(phi, bundle.window)};
    auto rule = [&](Nat j) -> QVector {
        if (bundle.construction == CounterexampleBundle::Construction::ZeroOnOrbit)
            return zero_orbit_vector(orbit, j);
        return QVector::unit(graded.grade(j));
    };

    for (Nat i = 0; i < bundle.window; ++i) {
        const QVector& e = bundle.family.at(i);
        if (e != rule(i))
            throw InputError("family disagrees with the construction rule at " +
                             std::to_string(i));
        if (bundle.op.apply(e) != rule(phi.evaluate(i)))
            throw InputError("shift compatibility fails at index " + std::to_string(i));
    }

    std::vector<QVector> rows;
    rows.reserve(bundle.window);
    std::size_t ncols = 0;
    for (const auto& [i, v] : bundle.family) {
        rows.push_back(v);
        ncols = std::max(ncols, v.support_bound());
    }
    if (!bundle.dependence.verifies(rows))
        throw InputError("dependence witness does not verify");
    std::size_t r = rank(QMatrix::from_rows(rows, ncols));
    if (r + bundle.rank_deficit != bundle.window)
        throw InputError("rank growth violated: rank " + std::to_string(r) + " + K " +
                         std::to_string(bundle.rank_deficit) + " != window " +
                         std::to_string(bundle.window));
}

} // namespace orbitspan
