#include "orbitspan/shiftcheck.hpp"

#include "orbitspan/errors.hpp"

#include <algorithm>

namespace orbitspan {

ShiftInstance ShiftInstance::make(std::vector<QVector> vectors, QMatrix op) {
    if (vectors.empty()) throw InputError("shift instance needs at least one vector");
    for (std::size_t n = 0; n + 1 < vectors.size(); ++n) {
        if (op.apply(vectors[n]) != vectors[n + 1])
            throw InputError("operator does not shift e_" + std::to_string(n) +
                             " to e_" + std::to_string(n + 1));
    }
    return ShiftInstance{std::move(vectors), std::move(op)};
}

std::optional<std::size_t> first_dependent_index(const ShiftInstance& inst) {
    std::size_t ncols = 0;
    for (const QVector& v : inst.vectors) ncols = std::max(ncols, v.support_bound());
    SpanBuilder builder(ncols);
    for (std::size_t m = 0; m < inst.vectors.size(); ++m)
        if (!builder.add(inst.vectors[m])) return m;
    return std::nullopt;
}

TailCollapseReport verify_tail_collapse(const ShiftInstance& inst) {
    TailCollapseReport report;
    std::size_t ncols = 0;
    for (const QVector& v : inst.vectors) ncols = std::max(ncols, v.support_bound());

    SpanBuilder builder(ncols);
    report.rank_profile.push_back(0);
    for (std::size_t m = 0; m < inst.vectors.size(); ++m) {
        if (!builder.add(inst.vectors[m]) && !report.first_dependent)
            report.first_dependent = m;
        report.rank_profile.push_back(builder.rank());
    }

    if (report.first_dependent) {
        std::vector<QVector> head(inst.vectors.begin(),
                                  inst.vectors.begin() +
                                      static_cast<std::ptrdiff_t>(*report.first_dependent));
        Subspace span = Subspace::from_generators(head);
        for (std::size_t k = *report.first_dependent; k < inst.vectors.size(); ++k)
            if (!in_span(inst.vectors[k], span)) report.tail_ok = false;
    }
    return report;
}

std::string TailCollapseReport::str() const {
    std::string s;
    if (first_dependent) {
        s = "first dependent index m = " + std::to_string(*first_dependent) +
            (tail_ok ? ", tail collapses into span{e_0..e_{m-1}}"
                     : ", TAIL ESCAPES THE SPAN");
    } else {
        s = "no collapse; rank r(k) = k on the window";
    }
    s += "; rank profile [";
    for (std::size_t i = 0; i < rank_profile.size(); ++i) {
        if (i) s += ",";
        if (i == 12 && rank_profile.size() > 13) {
            s += "...";
            break;
        }
        s += std::to_string(rank_profile[i]);
    }
    return s + "]";
}

PhiShiftInstance PhiShiftInstance::make(SelfMap phi, std::map<Nat, QVector> family,
                                        QMatrix op) {
    if (family.empty()) throw InputError("phi-shift instance needs a nonempty family");
    for (const auto& [i, v] : family) {
        Nat image = phi.evaluate(i);
        auto it = family.find(image);
        if (it == family.end()) continue;  // image outside the window
        if (op.apply(v) != it->second)
            throw InputError("operator does not send e_" + std::to_string(i) + " to e_" +
                             std::to_string(image));
    }
    return PhiShiftInstance{std::move(phi), std::move(family), std::move(op)};
}

TransferReport transfer_independence(const PhiShiftInstance& inst,
                                     const ConjugacyWitness& witness) {
    // The witness must enumerate exactly the family window.
    std::vector<QVector> reindexed;
    reindexed.reserve(witness.alpha.size());
    for (Nat n : witness.alpha) {
        auto it = inst.family.find(n);
        if (it == inst.family.end())
            throw InputError("conjugacy witness leaves the family window at index " +
                             std::to_string(n));
        reindexed.push_back(it->second);
    }
    if (witness.alpha.size() != inst.family.size())
        throw InputError("conjugacy witness does not cover the family window");
    for (Nat n = 0; n + 1 < witness.alpha.size(); ++n)
        if (inst.phi.evaluate(witness.alpha[n]) != witness.alpha[n + 1])
            throw InputError("witness does not intertwine succ with phi");

    TransferReport report;
    ShiftInstance seq = ShiftInstance::make(std::move(reindexed), inst.op);
    report.reindexed = verify_tail_collapse(seq);
    report.reindexed_free = report.reindexed.free_on_window();

    std::size_t ncols = 0;
    std::vector<QVector> direct;
    for (const auto& [i, v] : inst.family) {
        ncols = std::max(ncols, v.support_bound());
        direct.push_back(v);
    }
    report.family_free = !dependence_witness(QMatrix::from_rows(direct, ncols)).has_value();
    return report;
}

} // namespace orbitspan
