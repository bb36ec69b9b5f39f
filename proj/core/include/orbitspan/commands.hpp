#pragma once

#include "orbitspan/io.hpp"
#include "orbitspan/report.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace orbitspan {

/// Orbit reports for small starts, generator search and the conjugacy
/// window of a self-map.
RunReport analyze_map_report(const SelfMap& phi, Nat window);

/// Validation + tail-collapse pipeline for either shift-file shape. For
/// the self-map shape the hypotheses are exact shift-compatibility with
/// phi on the window; the verdict lines carry the dependence/rank facts.
RunReport check_shift_report(const ShiftFile& file);

struct FalsifyResult {
    RunReport report;
    std::optional<ShiftFile> bundle;  // present when a bundle was produced
};

/// Builds a refutation bundle for a map without a full orbit and
/// re-validates it; errors (InputError) when the map has a generator.
FalsifyResult falsify_report(const SelfMap& phi, Nat window);

/// Seeded lemma batches (31, 32 and 33, `count` instances each).
RunReport lemmas_report(std::uint64_t seed, std::size_t count);

/// Single explicit lemma instance from a file.
RunReport lemma_instance_report(const LemmaInstanceFile& file);

/// Term closure of a subset plus the projection-law summary.
RunReport closure_report(const SigmaStructure& structure, const std::vector<Nat>& subset);

/// Condition report for a general instance; with a dependence witness
/// present, also the induction claim and its endgame rank pair.
RunReport check_general_report(const GeneralFile& file, Nat n_max);

} // namespace orbitspan
