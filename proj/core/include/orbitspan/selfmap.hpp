#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace orbitspan {

using Nat = std::uint64_t;

/// Finitely presented self-map of the naturals: a finite exception table
/// plus the affine tail n -> n + tail_offset. Everything at or above the
/// tail threshold tau follows the tail rule, which is what makes orbit
/// kind, cofiniteness and fullness exactly decidable.
class SelfMap {
public:
    static SelfMap make(std::map<Nat, Nat> exceptions, Nat tail_offset);
    static SelfMap successor() { return make({}, 1); }

    Nat evaluate(Nat n) const;
    Nat iterate(Nat n, Nat times) const;

    const std::map<Nat, Nat>& exceptions() const { return exceptions_; }
    Nat tail_offset() const { return tail_offset_; }
    /// Smallest tau with [tau, inf) disjoint from the exception domain.
    Nat tail_threshold() const { return tail_threshold_; }
    /// Smallest legal window for orbit_report: tau + c + 1.
    Nat min_window() const { return tail_threshold_ + tail_offset_ + 1; }

    std::string str() const;

private:
    std::map<Nat, Nat> exceptions_;
    Nat tail_offset_ = 1;
    Nat tail_threshold_ = 0;
};

/// Exact description of one forward orbit: the finitely many values
/// visited before the affine tail takes over, plus the tail's arithmetic
/// progression (infinite orbits only).
struct OrbitSet {
    std::set<Nat> head;      // values visited before entering the tail
    bool infinite = false;
    Nat tail_start = 0;      // first value >= tau on the trajectory
    Nat tail_step = 0;       // == tail_offset when infinite

    bool contains(Nat value) const;
    Nat count_below(Nat bound) const;
};

OrbitSet orbit_set(const SelfMap& phi, Nat start);

struct OrbitReport {
    enum class Kind { Finite, Infinite };

    Nat start = 0;
    Kind kind = Kind::Finite;
    Nat period_entry = 0;  // Finite: step index where the cycle is entered
    Nat period = 0;        // Finite: cycle length
    bool cofinite = false;
    bool full = false;
    std::vector<Nat> complement_window;  // naturals below `window` not in the orbit
    Nat window = 0;

    std::string str() const;
};

/// Exact orbit analysis. Requires window >= phi.min_window(); with that
/// much room, "full" is equivalent to the orbit being all of N (an
/// empty complement window below tau + c + 1 leaves no room for later
/// misses, because the affine tail covers everything past its start).
///
/// Cofiniteness is decided by the criterion: infinite orbit and tail
/// step c == 1. Once the trajectory reaches a value v0 >= tau it climbs
/// by c forever; with c == 1 it covers [v0, inf), leaving at most the
/// finitely many naturals below v0 uncovered, while with c >= 2 it hits
/// a single residue class past v0 and misses infinitely much. Finite
/// orbits are trivially not cofinite. Both directions are unit-tested
/// against plain trajectory enumeration.
OrbitReport orbit_report(const SelfMap& phi, Nat start, Nat window);

/// Least a <= search_bound whose orbit is all of N. A generator of an
/// eventually-affine map always satisfies a <= tau: values >= tau only
/// ever move up the tail and so can never reach 0 (unless tau == 0, in
/// which case only a == 0 qualifies). Hence a none result with
/// search_bound >= tau proves no generator exists at all.
std::optional<Nat> find_generator(const SelfMap& phi, Nat search_bound);

/// Window of the conjugacy alpha(n) = phi^n(a) between the successor map
/// and phi, for a the least generator. For window_size >= tau the entries
/// must form exactly a permutation of [0, window_size); both directions
/// of that containment are verified.
struct ConjugacyWitness {
    Nat generator = 0;
    std::vector<Nat> alpha;

    std::string str() const;
};

std::optional<ConjugacyWitness> conjugacy_witness(const SelfMap& phi, Nat window_size);

/// phi^m(b) == phi^n(a) with m + n minimal, ties to smaller m.
struct MeetingIndices {
    Nat m = 0;
    Nat n = 0;
};

std::optional<MeetingIndices> meeting_indices(const SelfMap& phi, Nat a, Nat b, Nat bound);

} // namespace orbitspan
