#pragma once

#include "orbitspan/linalg.hpp"
#include "orbitspan/selfmap.hpp"

#include <map>
#include <string>
#include <vector>

namespace orbitspan {

/// A finite-window refutation of the independence transfer for a map
/// without a full orbit: a family and operator with T e_i = e_{phi(i)}
/// and near-full rank growth that is nevertheless dependent.
struct CounterexampleBundle {
    enum class Construction { ZeroOnOrbit, GradedByMeeting };

    Construction construction = Construction::ZeroOnOrbit;
    Nat anchor = 0;   // base point a of the orbit used by the construction
    Nat window = 0;   // family indices are 0..window-1
    std::map<Nat, QVector> family;
    QMatrix op;
    DependenceWitness dependence;
    /// Exact rank deficit K: rank of the family over the window is
    /// window - K (so rank >= window - K with equality). Zero-on-orbit
    /// hands each complement element its own basis vector, so K counts
    /// the zeroed (orbit) indices in the window; graded-by-meeting hands
    /// each index the basis vector of its grade, so K counts the window
    /// indices whose grade duplicates an earlier one.
    Nat rank_deficit = 0;
    /// Graded construction only: the minimal meeting pair (m(i), n(i))
    /// per window index; e_i has grade n(i) - m(i).
    std::vector<MeetingIndices> meetings;

    std::string construction_name() const;
};

/// Zeroes the family along Orb(a) and spreads fresh basis vectors over
/// the complement (enumerated in increasing order). Requires the
/// complement of Orb(a) to be infinite: orbit finite, or infinite with
/// tail step != 1.
CounterexampleBundle build_zero_orbit(const SelfMap& phi, Nat a, Nat window);

/// Grades every window index by n(i) - m(i) for the minimal meeting
/// phi^m(i) = phi^n(a) with a chosen of minimal complement, and uses the
/// coordinate shift as operator. Requires every orbit cofinite and no
/// generator.
CounterexampleBundle build_graded(const SelfMap& phi, Nat window);

/// Dispatches on the orbit structure: zero-orbit when some orbit has
/// infinite complement, graded otherwise. Errors when phi has a full
/// orbit (there is nothing to refute).
CounterexampleBundle refute_P(const SelfMap& phi, Nat window);

/// Re-derives the construction and re-checks the three bundle
/// invariants from scratch: exact shift-compatibility against the
/// construction rule on the whole window, an exactly verifying
/// dependence witness, and rank == window - K. Throws InputError with a
/// description on any failure.
void validate_bundle(const CounterexampleBundle& bundle, const SelfMap& phi);

} // namespace orbitspan
