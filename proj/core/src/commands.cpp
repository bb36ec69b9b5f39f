#include "orbitspan/commands.hpp"

#include "orbitspan/errors.hpp"
#include "orbitspan/shiftcheck.hpp"

#include <algorithm>

namespace orbitspan {

namespace {

std::string nat_list_str(const std::vector<Nat>& xs) {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(xs[i]);
    }
    return s + "}";
}

} // namespace

RunReport analyze_map_report(const SelfMap& phi, Nat window) {
    RunReport report;
    report.command = "analyze-map";
    const Nat starts = std::min<Nat>(window, phi.tail_threshold() + phi.tail_offset() + 1);
    for (Nat a = 0; a <= starts; ++a)
        report.add("orbit-" + std::to_string(a), true, orbit_report(phi, a, window).str());

    auto gen = find_generator(phi, std::max(window, phi.tail_threshold()));
    report.add("generator", true,
               gen ? "least generator a = " + std::to_string(*gen)
                   : "none: no full orbit");
    if (gen) {
        auto witness = conjugacy_witness(phi, window);
        report.add("conjugate-to-successor", witness.has_value(),
                   witness ? witness->str() : "no conjugacy witness");
    }
    return report;
}

RunReport check_shift_report(const ShiftFile& file) {
    RunReport report;
    report.command = "check-shift";

    if (file.is_family_shape()) {
        const SelfMap& phi = *file.map;
        std::optional<PhiShiftInstance> inst;
        try {
            inst = PhiShiftInstance::make(phi, file.family, file.op);
            report.add("shift-compatibility", true,
                       "T e_i = e_phi(i) on the window, exact");
        } catch (const InputError& e) {
            report.add("shift-compatibility", false, e.what());
            return report;
        }

        std::vector<QVector> rows;
        std::size_t ncols = 0;
        for (const auto& [i, v] : file.family) {
            ncols = std::max(ncols, v.support_bound());
            rows.push_back(v);
        }
        auto witness = dependence_witness(QMatrix::from_rows(rows, ncols));
        std::size_t r = rank(QMatrix::from_rows(rows, ncols));
        report.add("rank", true,
                   std::to_string(r) + " over window " + std::to_string(rows.size()));

        if (file.dependence) {
            report.add("dependent", witness.has_value(),
                       witness ? "dependence found: " + witness->str()
                               : "family is free on the window");
            report.add("dependence-witness", file.dependence->verifies(rows),
                       file.dependence->str());
            if (file.rank_deficit)
                report.add("rank-growth", r + *file.rank_deficit == rows.size(),
                           "rank " + std::to_string(r) + " = window - K, K = " +
                               std::to_string(*file.rank_deficit));
        } else {
            report.add("free-on-window", !witness.has_value(),
                       witness ? "dependence: " + witness->str() : "no dependence");
        }

        // With a full orbit, certify the reindexed tail collapse as well.
        if (auto gen = find_generator(phi, phi.tail_threshold());
            gen && inst->window() == file.family.size() &&
            inst->window() >= phi.tail_threshold()) {
            auto cw = conjugacy_witness(phi, inst->window());
            if (cw) {
                TransferReport transfer = transfer_independence(*inst, *cw);
                report.add("transfer-verdicts-agree", transfer.verdicts_agree(),
                           std::string("family ") +
                               (transfer.family_free ? "free" : "dependent") +
                               ", reindexed " +
                               (transfer.reindexed_free ? "free" : "dependent"));
                report.add("tail-collapse", transfer.reindexed.tail_ok,
                           transfer.reindexed.str());
            }
        }
        return report;
    }

    std::optional<ShiftInstance> inst;
    try {
        inst = ShiftInstance::make(file.vectors, file.op);
        report.add("shift-compatibility", true, "T e_n = e_{n+1} on the window, exact");
    } catch (const InputError& e) {
        report.add("shift-compatibility", false, e.what());
        return report;
    }
    TailCollapseReport tail = verify_tail_collapse(*inst);
    report.add("tail-collapse", tail.tail_ok, tail.str());
    if (file.dependence) {
        report.add("dependence-witness", file.dependence->verifies(file.vectors),
                   file.dependence->str());
    }
    return report;
}

FalsifyResult falsify_report(const SelfMap& phi, Nat window) {
    FalsifyResult result;
    result.report.command = "falsify";

    CounterexampleBundle bundle = refute_P(phi, window);
    result.report.add("construction", true,
                      bundle.construction_name() + ", anchor a = " +
                          std::to_string(bundle.anchor) + ", window " +
                          std::to_string(bundle.window) + ", K = " +
                          std::to_string(bundle.rank_deficit));
    try {
        validate_bundle(bundle, phi);
        result.report.add("bundle-invariants", true,
                          "shift-compatibility, dependence and rank growth verified");
    } catch (const InputError& e) {
        result.report.add("bundle-invariants", false, e.what());
    }

    ShiftFile file = shift_file_from_bundle(bundle, phi);
    RunReport round_trip = check_shift_report(file);
    result.report.add("round-trip-check-shift", round_trip.pass(),
                      round_trip.pass() ? "hypotheses hold + dependent"
                                        : "round trip failed");
    result.bundle = std::move(file);
    return result;
}

RunReport lemmas_report(std::uint64_t seed, std::size_t count) {
    RunReport report;
    report.command = "lemmas";
    report.seed = seed;
    for (const char* lemma : {"31", "32", "33"}) {
        LemmaBatchReport batch = run_lemma_batch(lemma, seed, count);
        std::string stats = std::to_string(batch.total) + " instances, " +
                            std::to_string(batch.nonvacuous) + " hypothesis-satisfying";
        report.add(std::string("lemma-") + lemma + "-conclusion", batch.pass(),
                   batch.pass() ? stats
                                : stats + "; violation at instance " +
                                      std::to_string(*batch.first_violation_index) + ": " +
                                      batch.first_violation_description);
        report.add(std::string("lemma-") + lemma + "-coverage",
                   batch.nonvacuous * 5 >= batch.total,
                   std::to_string(batch.nonvacuous) + "/" + std::to_string(batch.total) +
                       " non-vacuous (need 1/5)");
    }
    return report;
}

RunReport lemma_instance_report(const LemmaInstanceFile& file) {
    RunReport report;
    report.command = "lemmas";
    LemmaCheck check;
    if (file.l31) {
        check = check_lemma_31(file.l31->P, file.l31->p, file.l31->f, file.l31->a,
                               file.l31->b);
    } else if (file.l32) {
        check = check_lemma_32(file.l32->S, file.l32->p, file.l32->f, file.l32->a,
                               file.l32->b, file.l32->m_star);
    } else if (file.l33) {
        check = check_lemma_33(file.l33->S, file.l33->p, file.l33->f, file.l33->e,
                               file.l33->b, file.l33->m_star);
    } else {
        throw InputError("lemma instance file carries no instance");
    }
    report.add("hypotheses", true,
               check.hypotheses ? "hold" : "fail: " + check.failed_hypothesis);
    report.add("lemma-" + file.lemma, check.implication_holds(),
               check.hypotheses
                   ? (check.conclusion ? "hypotheses hold, conclusion holds"
                                       : "hypotheses hold, CONCLUSION FAILS")
                   : "vacuous (hypotheses do not hold)");
    return report;
}

RunReport closure_report(const SigmaStructure& structure, const std::vector<Nat>& subset) {
    RunReport report;
    report.command = "closure";
    Subset x = 0;
    for (Nat v : subset) {
        if (v >= structure.size())
            throw InputError("subset element " + std::to_string(v) + " outside carrier");
        x |= Subset(1) << v;
    }
    Subset closed = term_closure(structure, x);
    std::vector<Nat> elems;
    for (Nat v = 0; v < structure.size(); ++v)
        if (closed >> v & 1) elems.push_back(v);
    report.add("term-closure", true, nat_list_str(elems));

    ProjectionLawReport laws = powerset_projection_laws(structure);
    report.add("projection-laws", laws.all(),
               "monotone/idempotent/extensive/endo-commute over " +
                   std::to_string(laws.subsets_checked) + " subsets, " +
                   std::to_string(laws.endos_checked) + " endomorphisms");
    return report;
}

RunReport check_general_report(const GeneralFile& file, Nat n_max) {
    RunReport report;
    report.command = "check-general";
    ConditionReport cond = check_conditions(file.instance);
    report.add("condition-1-scheme", cond.scheme_ok, "u(I*) in I*, I* within G(I*)");
    report.add("condition-2-operators", cond.operators_ok,
               "operator per (I*, j) on span{e_i : i in G}");
    report.add("condition-3-control", cond.control_ok, "J0 absorbing, window reaches J0");
    report.add("condition-4-rank-growth", cond.rank_growth_ok,
               "rank " + std::to_string(cond.rank) + " over J-window " +
                   std::to_string(file.instance.control.jwindow) + ", K4 = " +
                   std::to_string(cond.k4) + " (bound " +
                   std::to_string(file.instance.k4_bound) + ")");
    report.add("condition-5-membership", cond.span_membership_ok,
               cond.span_membership_ok ? "exact membership for every (j, i)"
                                       : cond.first_failure);

    if (!file.dependence) {
        std::vector<QVector> rows;
        std::size_t ncols = 0;
        for (const auto& [i, v] : file.instance.family) {
            ncols = std::max(ncols, v.support_bound());
            rows.push_back(v);
        }
        auto witness = dependence_witness(QMatrix::from_rows(rows, ncols));
        bool expect_free = cond.all();
        report.add("family-free",
                   !expect_free || !witness.has_value(),
                   witness ? "dependence: " + witness->str() : "no dependence on the window");
        return report;
    }

    InductionReport ind = verify_induction_claim(file.instance, *file.dependence, n_max);
    report.add("induction-claim", ind.claim_ok,
               ind.claim_ok
                   ? "membership for all n <= " + std::to_string(n_max)
                   : "fails at (n,j,i) = (" +
                         std::to_string(std::get<0>(*ind.first_claim_failure)) + "," +
                         std::to_string(std::get<1>(*ind.first_claim_failure)) + "," +
                         std::to_string(std::get<2>(*ind.first_claim_failure)) + ")");
    report.add("endgame-collapse", ind.endgame_ok,
               "T(I*,j) e_u in J0-span + V for every window j");
    report.add("endgame-rank-pair", true,
               "rank{T e_u} = " + std::to_string(ind.span_rank) +
                   " <= bound dim = " + std::to_string(ind.bound_dim) +
                   "; contradicts unbounded rank growth");
    return report;
}

} // namespace orbitspan
