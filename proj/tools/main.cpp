// Command-line front end: analyze-map, check-shift, falsify, lemmas,
// closure, check-general. Exit codes: 0 all checks pass, 1 a check
// failed (a witness is reported or written), 2 input error.

#include <CLI11.hpp>

#include "orbitspan/commands.hpp"
#include "orbitspan/errors.hpp"
#include "orbitspan/order.hpp"
#include "orbitspan/prng.hpp"

#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace orbitspan;

struct Options {
    std::string format = "text";
};

void print_report(const RunReport& report, const Options& opts) {
    std::cout << (opts.format == "lines" ? report.render_lines() : report.render_text());
}

/// Replays the batch generation stream to recover the n-th instance and
/// writes it as a replayable witness file.
std::string write_lemma_witness(const std::string& lemma, std::uint64_t seed,
                                std::size_t index, const std::string& path) {
    Prng rng(seed);
    Json out;
    for (std::size_t i = 0; i <= index; ++i) {
        if (lemma == "31") {
            Lemma31Instance inst = generate_lemma31_instance(rng);
            if (i == index) out = lemma_instance_to_json(inst);
        } else if (lemma == "32") {
            Lemma32Instance inst = generate_lemma32_instance(rng);
            if (i == index) out = lemma_instance_to_json(inst);
        } else {
            Lemma33Instance inst = generate_lemma33_instance(rng);
            if (i == index) out = lemma_instance_to_json(inst);
        }
    }
    save_json_file(path, out);
    return path;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact checkers for operator-shifted vector families, self-map orbits,"
                 " order-lemma batches, term closures and the generalized criterion"};
    app.require_subcommand(1);

    Options opts;
    app.add_option("--format", opts.format, "Report format: text or lines")
        ->check(CLI::IsMember({"text", "lines"}));

    // analyze-map
    std::string map_path;
    Nat window = 50;
    auto* analyze = app.add_subcommand("analyze-map", "Orbit reports, generator and "
                                                      "conjugacy window of a self-map");
    analyze->fallthrough();
    analyze->add_option("map", map_path, "Self-map JSON file")->required();
    analyze->add_option("--window", window, "Analysis window");

    // check-shift
    std::string shift_path;
    auto* check_shift = app.add_subcommand("check-shift", "Validate a shift instance and "
                                                          "certify tail collapse");
    check_shift->fallthrough();
    check_shift->add_option("instance", shift_path, "Shift-instance JSON file")->required();

    // falsify
    std::string falsify_map_path;
    std::string bundle_out = "bundle.json";
    Nat falsify_window = 50;
    auto* falsify = app.add_subcommand("falsify", "Build a dependent family refuting "
                                                  "independence transfer for a map "
                                                  "without a full orbit");
    falsify->fallthrough();
    falsify->add_option("--map", falsify_map_path, "Self-map JSON file")->required();
    falsify->add_option("--window", falsify_window, "Family window");
    falsify->add_option("--out", bundle_out, "Bundle output path");

    // lemmas
    std::uint64_t seed = 1;
    std::size_t count = 1000;
    std::string lemma_instance_path;
    std::string witness_out = "lemmas.witness.json";
    auto* lemmas = app.add_subcommand("lemmas", "Seeded order-lemma batches (or one "
                                                "explicit instance file)");
    lemmas->fallthrough();
    lemmas->add_option("--seed", seed, "Batch seed");
    lemmas->add_option("--count", count, "Instances per lemma");
    lemmas->add_option("--instance", lemma_instance_path, "Explicit instance file");
    lemmas->add_option("--witness-out", witness_out, "Falsifying-instance output path");

    // closure
    std::string structure_path;
    std::vector<Nat> subset;
    auto* closure = app.add_subcommand("closure", "Term closure of a subset in a finite "
                                                  "structure");
    closure->fallthrough();
    closure->add_option("--structure", structure_path, "Structure JSON file")->required();
    closure->add_option("--subset", subset, "Subset elements")->delimiter(',');

    // check-general
    std::string general_path;
    Nat n_max = 8;
    auto* check_general = app.add_subcommand("check-general", "Check the five conditions "
                                                              "of a general instance");
    check_general->fallthrough();
    check_general->add_option("instance", general_path, "General-instance JSON file")
        ->required();
    check_general->add_option("--nmax", n_max, "Induction depth for planted dependences");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) {
            SelfMap phi = parse_selfmap(load_json_file(map_path));
            RunReport report = analyze_map_report(phi, window);
            print_report(report, opts);
            return report.exit_code();
        }
        if (*check_shift) {
            ShiftFile file = parse_shift_file(load_json_file(shift_path));
            RunReport report = check_shift_report(file);
            if (!report.pass()) report.witness_path = shift_path;
            print_report(report, opts);
            return report.exit_code();
        }
        if (*falsify) {
            SelfMap phi = parse_selfmap(load_json_file(falsify_map_path));
            FalsifyResult result = falsify_report(phi, falsify_window);
            if (result.bundle) {
                save_json_file(bundle_out, shift_file_to_json(*result.bundle));
                result.report.witness_path = bundle_out;
            }
            print_report(result.report, opts);
            return result.report.exit_code();
        }
        if (*lemmas) {
            if (!lemma_instance_path.empty()) {
                LemmaInstanceFile file =
                    parse_lemma_instance(load_json_file(lemma_instance_path));
                RunReport report = lemma_instance_report(file);
                if (!report.pass()) report.witness_path = lemma_instance_path;
                print_report(report, opts);
                return report.exit_code();
            }
            RunReport report = lemmas_report(seed, count);
            if (!report.pass()) {
                // Ship a replayable witness for the first violation.
                for (const char* lemma : {"31", "32", "33"}) {
                    LemmaBatchReport batch = run_lemma_batch(lemma, seed, count);
                    if (!batch.pass()) {
                        report.witness_path = write_lemma_witness(
                            lemma, seed, *batch.first_violation_index, witness_out);
                        break;
                    }
                }
            }
            print_report(report, opts);
            return report.exit_code();
        }
        if (*closure) {
            SigmaStructure structure = parse_structure(load_json_file(structure_path));
            RunReport report = closure_report(structure, subset);
            print_report(report, opts);
            return report.exit_code();
        }
        if (*check_general) {
            GeneralFile file = parse_general_file(load_json_file(general_path));
            RunReport report = check_general_report(file, n_max);
            if (!report.pass()) report.witness_path = general_path;
            print_report(report, opts);
            return report.exit_code();
        }
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
