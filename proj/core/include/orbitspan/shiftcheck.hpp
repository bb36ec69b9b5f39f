#pragma once

#include "orbitspan/linalg.hpp"
#include "orbitspan/selfmap.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace orbitspan {

/// Sequence e_0..e_N with an operator matrix sending each e_n to e_{n+1}
/// (validated exactly on construction).
struct ShiftInstance {
    std::vector<QVector> vectors;
    QMatrix op;

    std::size_t window() const { return vectors.empty() ? 0 : vectors.size() - 1; }
    static ShiftInstance make(std::vector<QVector> vectors, QMatrix op);
};

/// Least m with e_m in span{e_0..e_{m-1}} (m = 0 when e_0 = 0); nullopt
/// when the rank grows at every step.
std::optional<std::size_t> first_dependent_index(const ShiftInstance& inst);

struct TailCollapseReport {
    std::optional<std::size_t> first_dependent;
    bool tail_ok = true;               // vacuous when no collapse
    std::vector<std::size_t> rank_profile;  // r(k) = rank{e_0..e_{k-1}}, k = 0..N+1

    bool free_on_window() const { return !first_dependent.has_value(); }
    std::string str() const;
};

/// Collapse certificate: if e_m is the first dependent vector, every
/// later window vector must lie in span{e_0..e_{m-1}}.
TailCollapseReport verify_tail_collapse(const ShiftInstance& inst);

/// Family indexed along a self-map orbit: T e_i = e_{phi(i)} for every
/// window index whose image stays in the window (validated exactly).
struct PhiShiftInstance {
    SelfMap phi;
    std::map<Nat, QVector> family;
    QMatrix op;

    static PhiShiftInstance make(SelfMap phi, std::map<Nat, QVector> family, QMatrix op);
    /// One past the largest family index.
    Nat window() const { return family.empty() ? 0 : family.rbegin()->first + 1; }
};

struct TransferReport {
    TailCollapseReport reindexed;
    bool family_free = false;     // direct verdict on the family window
    bool reindexed_free = false;  // verdict after reindexing along alpha

    bool verdicts_agree() const { return family_free == reindexed_free; }
};

/// Reindexes the family along the conjugacy window alpha into a
/// successor-shift instance, certifies it there, and maps the verdict
/// back. Requires the witness to cover exactly the family window.
TransferReport transfer_independence(const PhiShiftInstance& inst,
                                     const ConjugacyWitness& witness);

} // namespace orbitspan
