#include "orbitspan/io.hpp"

#include "orbitspan/errors.hpp"

#include <fstream>

namespace orbitspan {

namespace {

[[noreturn]] void bad(const std::string& what) { throw InputError(what); }

Nat to_nat(const Json& j, const char* what) {
    if (!j.is_number_unsigned()) bad(std::string(what) + " must be a natural number");
    return j.get<Nat>();
}

std::vector<Nat> to_nat_list(const Json& j, const char* what) {
    if (!j.is_array()) bad(std::string(what) + " must be a list");
    std::vector<Nat> out;
    for (const auto& x : j) out.push_back(to_nat(x, what));
    return out;
}

EPSeq parse_epseq(const Json& j) {
    if (!j.is_object() || !j.contains("cycle")) bad("sequence needs prefix/cycle lists");
    EPSeq s;
    if (j.contains("prefix"))
        for (const auto& x : j["prefix"]) s.prefix.push_back(to_nat(x, "sequence value"));
    for (const auto& x : j["cycle"]) s.cycle.push_back(to_nat(x, "sequence value"));
    if (s.cycle.empty()) bad("sequence cycle must be nonempty");
    return s;
}

Json epseq_to_json(const EPSeq& s) {
    Json j;
    j["prefix"] = s.prefix;
    j["cycle"] = s.cycle;
    return j;
}

std::vector<bool> parse_leq_pairs(std::size_t size, const Json& j) {
    std::vector<bool> leq(size * size, false);
    if (!j.is_array()) bad("leq must be a list of pairs");
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2) bad("leq entries must be [a, b] pairs");
        Nat a = to_nat(pair[0], "leq element");
        Nat b = to_nat(pair[1], "leq element");
        if (a >= size || b >= size) bad("leq pair out of range");
        leq[a * size + b] = true;
    }
    return leq;
}

Json leq_to_pairs(const FinitePreorder& p) {
    Json pairs = Json::array();
    for (Elem a = 0; a < p.size(); ++a)
        for (Elem b = 0; b < p.size(); ++b)
            if (p.le(a, b)) pairs.push_back(Json::array({a, b}));
    return pairs;
}

SubsetKey parse_subset_key(const Json& j) {
    SubsetKey key = to_nat_list(j, "subset");
    for (std::size_t i = 0; i + 1 < key.size(); ++i)
        if (key[i] >= key[i + 1]) bad("subset must be sorted and duplicate-free");
    return key;
}

// Sparse row lists cannot express trailing zero columns, so readers widen
// parsed operators to the support of the vectors they act on.
QMatrix pad_columns(const QMatrix& m, std::size_t ncols) {
    if (m.ncols() >= ncols) return m;
    return QMatrix::from_rows(m.rows(), ncols);
}

} // namespace

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        bad("parse error in " + path + ": " + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const Json& value) {
    std::ofstream out(path);
    if (!out) bad("cannot write file: " + path);
    out << value.dump(2) << "\n";
}

Rational parse_rational(const Json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long long>(j.get<std::int64_t>()));
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    bad("rational must be a string like \"-3/7\" or an integer");
}

Json rational_to_json(const Rational& r) { return r.str(); }

QVector parse_qvector(const Json& j) {
    if (!j.is_array()) bad("vector must be a list of [index, rational] pairs");
    QVector v;
    for (const auto& entry : j) {
        if (!entry.is_array() || entry.size() != 2)
            bad("vector entries must be [index, rational] pairs");
        v.set(to_nat(entry[0], "vector index"), parse_rational(entry[1]));
    }
    return v;
}

Json qvector_to_json(const QVector& v) {
    Json j = Json::array();
    for (const auto& [i, c] : v.entries()) j.push_back(Json::array({i, rational_to_json(c)}));
    return j;
}

QMatrix parse_qmatrix(const Json& j) {
    if (!j.is_array()) bad("matrix must be a list of vectors");
    std::vector<QVector> rows;
    for (const auto& row : j) rows.push_back(parse_qvector(row));
    return QMatrix::from_rows(std::move(rows));
}

Json qmatrix_to_json(const QMatrix& m) {
    Json j = Json::array();
    for (const QVector& row : m.rows()) j.push_back(qvector_to_json(row));
    return j;
}

SelfMap parse_selfmap(const Json& j) {
    if (!j.is_object()) bad("map file must be an object");
    if (!j.contains("tail_offset")) bad("map file needs tail_offset");
    std::map<Nat, Nat> exceptions;
    if (j.contains("exceptions")) {
        if (!j["exceptions"].is_object()) bad("exceptions must be an object");
        for (const auto& [key, value] : j["exceptions"].items()) {
            Nat k;
            try {
                std::size_t pos = 0;
                k = std::stoull(key, &pos);
                if (pos != key.size()) throw std::invalid_argument(key);
            } catch (const std::exception&) {
                bad("exception key '" + key + "' is not a natural number");
            }
            exceptions[k] = to_nat(value, "exception image");
        }
    }
    return SelfMap::make(std::move(exceptions), to_nat(j["tail_offset"], "tail_offset"));
}

Json selfmap_to_json(const SelfMap& m) {
    Json j;
    Json ex = Json::object();
    for (auto [k, v] : m.exceptions()) ex[std::to_string(k)] = v;
    j["exceptions"] = ex;
    j["tail_offset"] = m.tail_offset();
    return j;
}

SigmaStructure parse_structure(const Json& j) {
    if (!j.is_object() || !j.contains("size") || !j.contains("symbols"))
        bad("structure file needs size and symbols");
    std::size_t size = to_nat(j["size"], "size");
    Signature sig;
    std::vector<std::vector<std::size_t>> tables;
    for (const auto& sym : j["symbols"]) {
        if (!sym.is_object() || !sym.contains("name") || !sym.contains("arity") ||
            !sym.contains("table"))
            bad("symbol needs name, arity and table");
        Signature::Symbol s;
        s.name = sym["name"].get<std::string>();
        s.arity = to_nat(sym["arity"], "arity");
        // Flatten the nested table: depth == arity.
        std::vector<std::size_t> flat;
        auto flatten = [&](auto&& self, const Json& t, std::size_t depth) -> void {
            if (depth == 0) {
                flat.push_back(to_nat(t, "table entry"));
                return;
            }
            if (!t.is_array() || t.size() != size)
                bad("table for '" + s.name + "' must nest " + std::to_string(size) +
                    "-element lists to depth " + std::to_string(s.arity));
            for (const auto& sub : t) self(self, sub, depth - 1);
        };
        flatten(flatten, sym["table"], s.arity);
        sig.symbols.push_back(std::move(s));
        tables.push_back(std::move(flat));
    }
    return SigmaStructure::make(size, std::move(sig), std::move(tables));
}

Json structure_to_json(const SigmaStructure& a) {
    Json j;
    j["size"] = a.size();
    Json symbols = Json::array();
    for (std::size_t s = 0; s < a.signature().symbols.size(); ++s) {
        const auto& sym = a.signature().symbols[s];
        Json entry;
        entry["name"] = sym.name;
        entry["arity"] = sym.arity;
        // Re-nest the flat table.
        auto nest = [&](auto&& self, std::size_t depth, std::size_t offset,
                        std::size_t stride) -> Json {
            if (depth == 0) return a.tables()[s][offset];
            Json arr = Json::array();
            std::size_t sub = stride / a.size();
            for (std::size_t i = 0; i < a.size(); ++i)
                arr.push_back(self(self, depth - 1, offset + i * sub, sub));
            return arr;
        };
        std::size_t stride = 1;
        for (std::size_t i = 0; i < sym.arity; ++i) stride *= a.size();
        entry["table"] = nest(nest, sym.arity, 0, stride);
        symbols.push_back(std::move(entry));
    }
    j["symbols"] = symbols;
    return j;
}

DependenceWitness parse_witness(const Json& j) {
    if (!j.is_object() || !j.contains("coefficients"))
        bad("dependence witness needs a coefficients list");
    DependenceWitness w;
    for (const auto& entry : j["coefficients"]) {
        if (!entry.is_array() || entry.size() != 2)
            bad("witness coefficients must be [index, rational] pairs");
        Rational c = parse_rational(entry[1]);
        if (c.is_zero()) bad("witness coefficients must be nonzero");
        w.coefficients.emplace(to_nat(entry[0], "witness index"), std::move(c));
    }
    if (w.coefficients.empty()) bad("witness must name at least one index");
    return w;
}

Json witness_to_json(const DependenceWitness& w) {
    Json coeffs = Json::array();
    for (const auto& [i, c] : w.coefficients)
        coeffs.push_back(Json::array({i, rational_to_json(c)}));
    Json j;
    j["coefficients"] = coeffs;
    return j;
}

ShiftFile parse_shift_file(const Json& j) {
    if (!j.is_object() || !j.contains("operator")) bad("shift file needs an operator");
    ShiftFile f;
    f.op = parse_qmatrix(j["operator"]);
    if (j.contains("map")) {
        f.map = parse_selfmap(j["map"]);
        if (!j.contains("family")) bad("self-map shift file needs a family");
        for (const auto& entry : j["family"]) {
            if (!entry.is_array() || entry.size() != 2)
                bad("family entries must be [index, vector] pairs");
            f.family.emplace(to_nat(entry[0], "family index"), parse_qvector(entry[1]));
        }
    } else {
        if (!j.contains("vectors")) bad("shift file needs vectors or a map+family");
        for (const auto& row : j["vectors"]) f.vectors.push_back(parse_qvector(row));
    }
    if (j.contains("dependence")) f.dependence = parse_witness(j["dependence"]);
    if (j.contains("construction")) f.construction = j["construction"].get<std::string>();
    if (j.contains("anchor")) f.anchor = to_nat(j["anchor"], "anchor");
    if (j.contains("rank_deficit")) f.rank_deficit = to_nat(j["rank_deficit"], "rank_deficit");

    std::size_t support = 0;
    for (const QVector& v : f.vectors) support = std::max(support, v.support_bound());
    for (const auto& [i, v] : f.family) support = std::max(support, v.support_bound());
    f.op = pad_columns(f.op, support);
    return f;
}

Json shift_file_to_json(const ShiftFile& f) {
    Json j;
    if (f.construction) j["construction"] = *f.construction;
    if (f.map) {
        j["map"] = selfmap_to_json(*f.map);
        Json family = Json::array();
        for (const auto& [i, v] : f.family)
            family.push_back(Json::array({i, qvector_to_json(v)}));
        j["family"] = family;
    } else {
        Json vectors = Json::array();
        for (const QVector& v : f.vectors) vectors.push_back(qvector_to_json(v));
        j["vectors"] = vectors;
    }
    j["operator"] = qmatrix_to_json(f.op);
    if (f.dependence) j["dependence"] = witness_to_json(*f.dependence);
    if (f.anchor) j["anchor"] = *f.anchor;
    if (f.rank_deficit) j["rank_deficit"] = *f.rank_deficit;
    return j;
}

ShiftFile shift_file_from_bundle(const CounterexampleBundle& bundle, const SelfMap& phi) {
    ShiftFile f;
    f.map = phi;
    f.family = bundle.family;
    f.op = bundle.op;
    f.dependence = bundle.dependence;
    f.construction = bundle.construction_name();
    f.anchor = bundle.anchor;
    f.rank_deficit = bundle.rank_deficit;
    return f;
}

LemmaInstanceFile parse_lemma_instance(const Json& j) {
    if (!j.is_object() || !j.contains("lemma")) bad("instance file needs a lemma tag");
    LemmaInstanceFile f;
    f.lemma = j["lemma"].get<std::string>();
    if (!j.contains("size") || !j.contains("leq")) bad("instance file needs size and leq");
    std::size_t size = to_nat(j["size"], "size");
    std::vector<bool> leq = parse_leq_pairs(size, j["leq"]);

    auto table = [&](const char* key) {
        if (!j.contains(key)) bad(std::string("instance file needs ") + key);
        std::vector<Elem> t;
        for (const auto& x : j[key]) t.push_back(to_nat(x, key));
        return t;
    };

    if (f.lemma == "31") {
        FinitePreorder P = FinitePreorder::from_table(size, std::move(leq));
        Projection p = make_projection(P, table("projection"));
        MonotoneMap fm = make_monotone(P, table("f"));
        EPSeq a = parse_epseq(j.at("a"));
        Elem b = to_nat(j.at("b"), "b");
        f.l31 = Lemma31Instance{std::move(P), std::move(p), std::move(fm), std::move(a), b};
        return f;
    }

    JoinSemilattice S = JoinSemilattice::from_leq(size, std::move(leq));
    Projection p = make_projection(S.order(), table("projection"));
    MonotoneMap fm = make_monotone(S.order(), table("f"));
    EPSeq b = parse_epseq(j.at("b"));
    std::size_t m_star = to_nat(j.at("m_star"), "m_star");
    if (f.lemma == "33") {
        EPSeq e = parse_epseq(j.at("e"));
        f.l33 = Lemma33Instance{std::move(S), std::move(p), std::move(fm),
                                std::move(e), std::move(b), m_star};
        return f;
    }
    if (f.lemma == "32") {
        const Json& a = j.at("a");
        DoubleSeq ds = [&]() {
            if (a.is_object() && a.contains("diagonal"))
                return DoubleSeq::diagonal(parse_epseq(a["diagonal"]));
            if (a.is_object() && a.contains("rows")) {
                std::vector<EPSeq> rows;
                for (const auto& row : a["rows"]) rows.push_back(parse_epseq(row));
                return DoubleSeq::table(std::move(rows));
            }
            bad("a must give either a diagonal sequence or rows");
        }();
        f.l32 = Lemma32Instance{std::move(S), std::move(p), std::move(fm),
                                std::move(ds), std::move(b), m_star};
        return f;
    }
    bad("unknown lemma '" + f.lemma + "'");
}

namespace {

Json lemma_common(const FinitePreorder& order, const Projection& p, const MonotoneMap& f) {
    Json j;
    j["size"] = order.size();
    j["leq"] = leq_to_pairs(order);
    j["projection"] = p.table;
    j["f"] = f.table;
    return j;
}

} // namespace

Json lemma_instance_to_json(const Lemma31Instance& inst) {
    Json j = lemma_common(inst.P, inst.p, inst.f);
    j["lemma"] = "31";
    j["a"] = epseq_to_json(inst.a);
    j["b"] = inst.b;
    return j;
}

Json lemma_instance_to_json(const Lemma33Instance& inst) {
    Json j = lemma_common(inst.S.order(), inst.p, inst.f);
    j["lemma"] = "33";
    j["e"] = epseq_to_json(inst.e);
    j["b"] = epseq_to_json(inst.b);
    j["m_star"] = inst.m_star;
    return j;
}

Json lemma_instance_to_json(const Lemma32Instance& inst) {
    Json j = lemma_common(inst.S.order(), inst.p, inst.f);
    j["lemma"] = "32";
    Json a;
    if (inst.a.is_diagonal()) {
        a["diagonal"] = epseq_to_json(std::get<EPSeq>(inst.a.data));
    } else {
        Json rows = Json::array();
        for (const EPSeq& row : std::get<std::vector<EPSeq>>(inst.a.data))
            rows.push_back(epseq_to_json(row));
        a["rows"] = rows;
    }
    j["a"] = a;
    j["b"] = epseq_to_json(inst.b);
    j["m_star"] = inst.m_star;
    return j;
}

GeneralFile parse_general_file(const Json& j) {
    if (!j.is_object()) bad("general instance must be an object");
    GeneralFile f;
    if (!j.contains("family") || !j.contains("i_star") || !j.contains("scheme") ||
        !j.contains("operators") || !j.contains("relation"))
        bad("general instance needs family, i_star, scheme, operators and relation");

    for (const auto& entry : j["family"]) {
        if (!entry.is_array() || entry.size() != 2)
            bad("family entries must be [index, vector] pairs");
        f.instance.family.emplace(to_nat(entry[0], "family index"),
                                  parse_qvector(entry[1]));
    }
    f.instance.i_star = parse_subset_key(j["i_star"]);

    std::map<SubsetKey, Nat> u;
    std::map<SubsetKey, SubsetKey> g;
    for (const auto& entry : j["scheme"]) {
        if (!entry.is_object() || !entry.contains("subset") || !entry.contains("u") ||
            !entry.contains("g"))
            bad("scheme entries need subset, u and g");
        SubsetKey key = parse_subset_key(entry["subset"]);
        u[key] = to_nat(entry["u"], "u");
        g[key] = parse_subset_key(entry["g"]);
    }
    f.instance.scheme = WindowScheme::make(std::move(u), std::move(g));

    std::size_t family_support = 0;
    for (const auto& [i, v] : f.instance.family)
        family_support = std::max(family_support, v.support_bound());
    for (const auto& entry : j["operators"]) {
        if (!entry.is_object() || !entry.contains("subset") || !entry.contains("j") ||
            !entry.contains("matrix"))
            bad("operator entries need subset, j and matrix");
        f.instance.operators.emplace(
            std::make_pair(parse_subset_key(entry["subset"]), to_nat(entry["j"], "j")),
            pad_columns(parse_qmatrix(entry["matrix"]), family_support));
    }

    const Json& rel = j["relation"];
    if (!rel.is_object() || !rel.contains("jwindow") || !rel.contains("pairs") ||
        !rel.contains("j0"))
        bad("relation needs jwindow, pairs and j0");
    std::set<std::pair<Nat, Nat>> pairs;
    for (const auto& pr : rel["pairs"]) {
        if (!pr.is_array() || pr.size() != 2) bad("relation pairs must be [j, j']");
        pairs.emplace(to_nat(pr[0], "relation element"), to_nat(pr[1], "relation element"));
    }
    std::set<Nat> j0;
    for (const auto& x : rel["j0"]) j0.insert(to_nat(x, "j0 element"));
    f.instance.control =
        ControlRelation::make(to_nat(rel["jwindow"], "jwindow"), std::move(pairs),
                              std::move(j0));

    if (j.contains("v_basis")) {
        std::vector<QVector> basis;
        for (const auto& row : j["v_basis"]) basis.push_back(parse_qvector(row));
        f.instance.v = Subspace::from_generators(basis);
    }
    if (j.contains("k4_bound")) f.instance.k4_bound = to_nat(j["k4_bound"], "k4_bound");
    if (j.contains("dependence")) f.dependence = parse_witness(j["dependence"]);
    return f;
}

Json general_file_to_json(const GeneralFile& f) {
    Json j;
    Json family = Json::array();
    for (const auto& [i, v] : f.instance.family)
        family.push_back(Json::array({i, qvector_to_json(v)}));
    j["family"] = family;
    j["i_star"] = f.instance.i_star;

    Json scheme = Json::array();
    for (const auto& [key, u_val] : f.instance.scheme.u) {
        Json entry;
        entry["subset"] = key;
        entry["u"] = u_val;
        entry["g"] = f.instance.scheme.g.at(key);
        scheme.push_back(std::move(entry));
    }
    j["scheme"] = scheme;

    Json operators = Json::array();
    for (const auto& [key, matrix] : f.instance.operators) {
        Json entry;
        entry["subset"] = key.first;
        entry["j"] = key.second;
        entry["matrix"] = qmatrix_to_json(matrix);
        operators.push_back(std::move(entry));
    }
    j["operators"] = operators;

    Json rel;
    rel["jwindow"] = f.instance.control.jwindow;
    Json pairs = Json::array();
    for (auto [a, b] : f.instance.control.pairs) pairs.push_back(Json::array({a, b}));
    rel["pairs"] = pairs;
    rel["j0"] = f.instance.control.j0;
    j["relation"] = rel;

    Json v_basis = Json::array();
    for (const QVector& row : f.instance.v.basis()) v_basis.push_back(qvector_to_json(row));
    j["v_basis"] = v_basis;
    j["k4_bound"] = f.instance.k4_bound;
    if (f.dependence) j["dependence"] = witness_to_json(*f.dependence);
    return j;
}

} // namespace orbitspan
