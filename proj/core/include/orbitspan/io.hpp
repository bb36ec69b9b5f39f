#pragma once

#include "orbitspan/counterexample.hpp"
#include "orbitspan/genprop.hpp"
#include "orbitspan/linalg.hpp"
#include "orbitspan/order.hpp"
#include "orbitspan/selfmap.hpp"
#include "orbitspan/sigma.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace orbitspan {

/// Insertion-ordered JSON so that emitted files are byte-stable.
using Json = nlohmann::ordered_json;

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& value);

// Scalars, vectors, matrices. A vector is a list of [index, rational]
// pairs; a matrix is a list of vectors. Rationals are exact strings
// ("-3/7") with integer shorthand ("5"); plain JSON integers are also
// accepted on input.
Rational parse_rational(const Json& j);
Json rational_to_json(const Rational& r);
QVector parse_qvector(const Json& j);
Json qvector_to_json(const QVector& v);
QMatrix parse_qmatrix(const Json& j);
Json qmatrix_to_json(const QMatrix& m);

// Self-map files: { "exceptions": {"0": 0, "5": 2}, "tail_offset": 1 };
// the tail threshold is computed on load.
SelfMap parse_selfmap(const Json& j);
Json selfmap_to_json(const SelfMap& m);

// Structure files: { "size": k, "symbols": [{"name", "arity", "table"}] }
// with the table nested by arity (scalar, list, list of lists, ...).
SigmaStructure parse_structure(const Json& j);
Json structure_to_json(const SigmaStructure& a);

/// Shift-instance files. Two shapes share the schema: a sequential
/// instance {"vectors": [...], "operator": ...} and a self-map family
/// {"map": ..., "family": [[i, vec], ...], "operator": ...}. Bundles
/// emitted by falsify add construction metadata and the dependence
/// witness.
struct ShiftFile {
    std::optional<SelfMap> map;
    std::vector<QVector> vectors;    // sequential shape
    std::map<Nat, QVector> family;   // self-map shape
    QMatrix op;
    std::optional<DependenceWitness> dependence;
    std::optional<std::string> construction;
    std::optional<Nat> anchor;
    std::optional<Nat> rank_deficit;

    bool is_family_shape() const { return map.has_value(); }
};

ShiftFile parse_shift_file(const Json& j);
Json shift_file_to_json(const ShiftFile& f);
ShiftFile shift_file_from_bundle(const CounterexampleBundle& bundle, const SelfMap& phi);

// Dependence witnesses: {"coefficients": [[index, rational], ...]}.
DependenceWitness parse_witness(const Json& j);
Json witness_to_json(const DependenceWitness& w);

/// Order-lemma instance files. "leq" lists the full relation as pairs;
/// sequences are {"prefix": [...], "cycle": [...]}.
struct LemmaInstanceFile {
    std::string lemma;  // "31", "32" or "33"
    std::optional<Lemma31Instance> l31;
    std::optional<Lemma32Instance> l32;
    std::optional<Lemma33Instance> l33;
};

LemmaInstanceFile parse_lemma_instance(const Json& j);
Json lemma_instance_to_json(const Lemma31Instance& inst);
Json lemma_instance_to_json(const Lemma32Instance& inst);
Json lemma_instance_to_json(const Lemma33Instance& inst);

// General-criterion instance files: family, scheme entries, operator
// matrices keyed by (subset, j), relation pairs with J0, V basis, and
// the declared K4 bound; optional planted dependence.
struct GeneralFile {
    GeneralInstance instance;
    std::optional<DependenceWitness> dependence;
};

GeneralFile parse_general_file(const Json& j);
Json general_file_to_json(const GeneralFile& f);

} // namespace orbitspan
