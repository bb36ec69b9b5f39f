#include "orbitspan/genprop.hpp"

#include "orbitspan/errors.hpp"

#include <algorithm>

namespace orbitspan {

namespace {

bool is_sorted_unique(const SubsetKey& key) {
    for (std::size_t i = 0; i + 1 < key.size(); ++i)
        if (key[i] >= key[i + 1]) return false;
    return true;
}

std::string key_str(const SubsetKey& key) {
    std::string s = "{";
    for (std::size_t i = 0; i < key.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(key[i]);
    }
    return s + "}";
}

bool contains(const SubsetKey& key, Nat v) {
    return std::binary_search(key.begin(), key.end(), v);
}

bool subset_of(const SubsetKey& a, const SubsetKey& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace

ControlRelation ControlRelation::make(Nat jwindow, std::set<std::pair<Nat, Nat>> pairs,
                                      std::set<Nat> j0) {
    if (jwindow == 0) throw InputError("empty J-window");
    for (auto [a, b] : pairs)
        if (a >= jwindow || b >= jwindow)
            throw InputError("relation pair outside the J-window");
    for (Nat j : j0)
        if (j >= jwindow) throw InputError("J0 element outside the J-window");
    ControlRelation r{jwindow, std::move(pairs), std::move(j0)};
    for (Nat j : r.j0)
        for (Nat y : r.image({j}))
            if (!r.j0.count(y))
                throw InputError("R[" + std::to_string(j) + "] leaves J0");
    return r;
}

ControlRelation ControlRelation::shift(Nat jwindow) {
    std::set<std::pair<Nat, Nat>> pairs;
    pairs.emplace(0, 0);
    for (Nat m = 1; m < jwindow; ++m) pairs.emplace(m, m - 1);
    return make(jwindow, std::move(pairs), {0});
}

std::set<Nat> ControlRelation::image(const std::set<Nat>& s) const {
    std::set<Nat> out;
    for (auto [a, b] : pairs)
        if (s.count(a)) out.insert(b);
    return out;
}

std::set<Nat> relation_power_image(const ControlRelation& r, Nat j, Nat n) {
    std::set<Nat> s{j};
    for (Nat k = 0; k < n; ++k) s = r.image(s);
    return s;
}

Nat reach_steps(const ControlRelation& r, Nat j) {
    if (j >= r.jwindow) throw InputError("j outside the J-window");
    auto within_j0 = [&r](const std::set<Nat>& s) {
        return std::all_of(s.begin(), s.end(), [&r](Nat x) { return r.j0.count(x) > 0; });
    };
    std::set<Nat> s{j};
    std::set<std::set<Nat>> seen;
    Nat n = 0;
    while (true) {
        if (within_j0(s)) return n;
        if (!seen.insert(s).second)
            throw InputError("condition 3 violated at j = " + std::to_string(j) +
                             ": image sets cycle without entering J0");
        s = r.image(s);
        ++n;
    }
}

WindowScheme WindowScheme::make(std::map<SubsetKey, Nat> u,
                                std::map<SubsetKey, SubsetKey> g) {
    for (const auto& [key, val] : u) {
        (void)val;
        if (!is_sorted_unique(key)) throw InputError("subset key not sorted: " + key_str(key));
        if (!g.count(key)) throw InputError("scheme table G missing " + key_str(key));
    }
    for (const auto& [key, gs] : g) {
        if (!is_sorted_unique(gs)) throw InputError("G value not sorted: " + key_str(gs));
        if (!u.count(key)) throw InputError("scheme table u missing " + key_str(key));
    }
    return WindowScheme{std::move(u), std::move(g)};
}

Nat WindowScheme::u_of(const SubsetKey& key) const {
    auto it = u.find(key);
    if (it == u.end()) throw InputError("scheme does not cover subset " + key_str(key));
    return it->second;
}

const SubsetKey& WindowScheme::g_of(const SubsetKey& key) const {
    auto it = g.find(key);
    if (it == g.end()) throw InputError("scheme does not cover subset " + key_str(key));
    return it->second;
}

WindowScheme scheme_from_selfmap(const SelfMap& phi, Nat window,
                                 const std::vector<SubsetKey>& subsets) {
    auto gen = find_generator(phi, phi.tail_threshold());
    if (!gen) throw InputError("map has no full orbit; orbit scheme undefined");

    // Position of each value along the generator's trajectory.
    std::map<Nat, Nat> position;
    Nat steps = window + phi.tail_threshold() + phi.tail_offset() + 8;
    Nat x = *gen;
    for (Nat n = 0; n <= steps; ++n) {
        position.emplace(x, n);
        x = phi.evaluate(x);
    }

    std::map<SubsetKey, Nat> u;
    std::map<SubsetKey, SubsetKey> g;
    for (const SubsetKey& key : subsets) {
        if (key.empty()) throw InputError("scheme subset must be nonempty");
        if (!is_sorted_unique(key))
            throw InputError("subset key not sorted: " + key_str(key));
        Nat n_star = 0;
        for (Nat i : key) {
            auto it = position.find(i);
            if (it == position.end())
                throw InputError("subset element " + std::to_string(i) +
                                 " not reached within the enumeration window");
            n_star = std::max(n_star, it->second);
        }
        Nat u_val = phi.iterate(*gen, n_star);
        SubsetKey g_val;
        Nat y = *gen;
        for (Nat n = 0; n <= n_star; ++n) {
            g_val.push_back(y);
            y = phi.evaluate(y);
        }
        std::sort(g_val.begin(), g_val.end());

        if (!contains(key, u_val)) throw InputError("u(I*) not in I*");
        if (!subset_of(key, g_val)) throw InputError("I* not within G(I*)");
        for (Nat i : g_val)
            if (i != u_val && !contains(g_val, phi.evaluate(i)))
                throw InputError("phi(G \\ {u}) leaves G");

        u.emplace(key, u_val);
        g.emplace(key, g_val);
    }
    return WindowScheme::make(std::move(u), std::move(g));
}

const QMatrix& GeneralInstance::op(const SubsetKey& key, Nat j) const {
    auto it = operators.find({key, j});
    if (it == operators.end())
        throw InputError("no operator for (" + key_str(key) + ", " + std::to_string(j) + ")");
    return it->second;
}

const QVector& GeneralInstance::vec(Nat i) const {
    auto it = family.find(i);
    if (it == family.end())
        throw InputError("family vector e_" + std::to_string(i) + " missing");
    return it->second;
}

ConditionReport check_conditions(const GeneralInstance& inst) {
    ConditionReport report;
    auto note = [&report](const std::string& msg) {
        if (report.first_failure.empty()) report.first_failure = msg;
    };

    // 1: u(I*) in I* and I* within G(I*), over every tabulated subset.
    report.scheme_ok = true;
    for (const auto& [key, u_val] : inst.scheme.u) {
        const SubsetKey& g_val = inst.scheme.g_of(key);
        if (!contains(key, u_val)) {
            report.scheme_ok = false;
            note("condition 1: u" + key_str(key) + " not in the subset");
        }
        if (!subset_of(key, g_val)) {
            report.scheme_ok = false;
            note("condition 1: " + key_str(key) + " not within G");
        }
    }

    const SubsetKey& g = inst.scheme.g_of(inst.i_star);
    const Nat u = inst.scheme.u_of(inst.i_star);
    const Nat jwindow = inst.control.jwindow;

    // 2: an operator per (I*, j), wide enough for span{e_i : i in G(I*)}.
    report.operators_ok = true;
    std::size_t g_support = 0;
    for (Nat i : g) g_support = std::max(g_support, inst.vec(i).support_bound());
    for (Nat j = 0; j < jwindow; ++j) {
        auto it = inst.operators.find({inst.i_star, j});
        if (it == inst.operators.end()) {
            report.operators_ok = false;
            note("condition 2: no operator for j = " + std::to_string(j));
            break;
        }
        if (it->second.ncols() < g_support) {
            report.operators_ok = false;
            note("condition 2: operator domain too narrow at j = " + std::to_string(j));
            break;
        }
    }

    // 3: J0 absorbs its images and every window point reaches J0.
    report.control_ok = true;
    for (Nat j : inst.control.j0)
        for (Nat y : inst.control.image({j}))
            if (!inst.control.j0.count(y)) {
                report.control_ok = false;
                note("condition 3: R[" + std::to_string(j) + "] leaves J0");
            }
    for (Nat j = 0; j < jwindow && report.control_ok; ++j) {
        try {
            reach_steps(inst.control, j);
        } catch (const InputError& e) {
            report.control_ok = false;
            note(e.what());
        }
    }

    if (!report.operators_ok) return report;

    // 4 (window proxy): rank of {T(I*, j) e_u : j} within k4_bound of the
    // full window size.
    {
        std::vector<QVector> images;
        std::size_t ncols = 0;
        for (Nat j = 0; j < jwindow; ++j) {
            QVector w = inst.op(inst.i_star, j).apply(inst.vec(u));
            ncols = std::max(ncols, w.support_bound());
            images.push_back(std::move(w));
        }
        report.rank = rank(QMatrix::from_rows(images, ncols));
        report.k4 = jwindow - report.rank;
        report.rank_growth_ok = report.k4 <= inst.k4_bound;
        if (!report.rank_growth_ok)
            note("condition 4: rank " + std::to_string(report.rank) + " leaves K4 = " +
                 std::to_string(report.k4) + " > bound " + std::to_string(inst.k4_bound));
    }

    // 5: every T(I*, j) e_i with i in G \ {u} lies in the R[j] x G span + V.
    report.span_membership_ok = true;
    for (Nat j = 0; j < jwindow && report.span_membership_ok; ++j) {
        std::set<Nat> rj = inst.control.image({j});
        std::vector<QVector> generators;
        for (Nat jp : rj)
            for (Nat ip : g) generators.push_back(inst.op(inst.i_star, jp).apply(inst.vec(ip)));
        Subspace span = Subspace::from_generators(generators);
        for (Nat i : g) {
            if (i == u) continue;
            QVector w = inst.op(inst.i_star, j).apply(inst.vec(i));
            if (!in_span_plus(w, span, inst.v)) {
                report.span_membership_ok = false;
                note("condition 5 fails at (j,i) = (" + std::to_string(j) + "," +
                     std::to_string(i) + ")");
                break;
            }
        }
    }
    return report;
}

InductionReport verify_induction_claim(const GeneralInstance& inst,
                                       const DependenceWitness& witness, Nat n_max) {
    const SubsetKey& g = inst.scheme.g_of(inst.i_star);
    const Nat u = inst.scheme.u_of(inst.i_star);
    const Nat jwindow = inst.control.jwindow;

    // The witness must be a genuine dependence of the family with u(I*)
    // carrying a nonzero coefficient.
    {
        auto it = witness.coefficients.find(u);
        if (it == witness.coefficients.end() || it->second.is_zero())
            throw InputError("witness does not involve u(I*)");
        QVector acc;
        for (const auto& [i, c] : witness.coefficients) acc += inst.vec(i).scaled(c);
        if (!acc.is_zero()) throw InputError("witness does not verify on the family");
    }

    InductionReport report;
    for (Nat n = 0; n <= n_max && report.claim_ok; ++n) {
        for (Nat j = 0; j < jwindow && report.claim_ok; ++j) {
            std::set<Nat> rnj = relation_power_image(inst.control, j, n);
            std::vector<QVector> generators;
            for (Nat jp : rnj)
                for (Nat ip : g)
                    generators.push_back(inst.op(inst.i_star, jp).apply(inst.vec(ip)));
            Subspace span = Subspace::from_generators(generators);
            for (Nat i : g) {
                if (i == u) continue;
                QVector w = inst.op(inst.i_star, j).apply(inst.vec(i));
                if (!in_span_plus(w, span, inst.v)) {
                    report.claim_ok = false;
                    report.first_claim_failure = {n, j, i};
                    break;
                }
            }
        }
    }

    // Endgame: through condition 3 every T(I*, j) e_u collapses into the
    // J0-span + V, whose dimension caps the rank of the whole image family.
    std::vector<QVector> j0_generators;
    for (Nat jp : inst.control.j0)
        for (Nat ip : g) j0_generators.push_back(inst.op(inst.i_star, jp).apply(inst.vec(ip)));
    Subspace j0_span = Subspace::from_generators(j0_generators);
    report.bound_dim = Subspace::sum(j0_span, inst.v).dim();

    std::vector<QVector> u_images;
    std::size_t ncols = 0;
    for (Nat j = 0; j < jwindow; ++j) {
        QVector w = inst.op(inst.i_star, j).apply(inst.vec(u));
        ncols = std::max(ncols, w.support_bound());
        if (!in_span_plus(w, j0_span, inst.v)) report.endgame_ok = false;
        u_images.push_back(std::move(w));
    }
    report.span_rank = rank(QMatrix::from_rows(u_images, ncols));
    return report;
}

namespace {

std::map<std::pair<SubsetKey, Nat>, QMatrix> power_table(const SubsetKey& i_star,
                                                         const QMatrix& s, Nat jwindow) {
    std::map<std::pair<SubsetKey, Nat>, QMatrix> ops;
    QMatrix power = QMatrix::identity(s.ncols());
    for (Nat m = 0; m < jwindow; ++m) {
        ops.emplace(std::make_pair(i_star, m), power);
        power = s.multiply(power);
    }
    return ops;
}

} // namespace

GeneralInstance make_shift_criterion_instance(const SubsetKey& i_star, Nat jwindow,
                                              const QVector& e0, const Subspace& v) {
    if (i_star.empty()) throw InputError("I* must be nonempty");
    if (!is_sorted_unique(i_star)) throw InputError("I* must be sorted");
    if (jwindow == 0) throw InputError("J-window must be nonempty");
    if (e0.is_zero()) throw InputError("e0 must be nonzero");

    const Nat u = i_star.back();
    const std::size_t dim = u + jwindow + e0.support_bound() + 1;
    QMatrix s = QMatrix::coordinate_shift(dim);

    GeneralInstance inst;
    SubsetKey g_val;
    QVector e = e0;
    for (Nat i = 0; i <= u; ++i) {
        g_val.push_back(i);
        inst.family.emplace(i, e);
        e = s.apply(e);
    }
    inst.scheme = WindowScheme::make({{i_star, u}}, {{i_star, g_val}});
    inst.operators = power_table(i_star, s, jwindow);
    inst.control = ControlRelation::shift(jwindow);
    inst.v = v;
    inst.i_star = i_star;
    return inst;
}

GeneralInstance make_orbit_criterion_instance(const SelfMap& phi, const SubsetKey& i_star,
                                              Nat iwindow, Nat jwindow) {
    if (jwindow == 0) throw InputError("J-window must be nonempty");
    WindowScheme scheme = scheme_from_selfmap(phi, iwindow, {i_star});

    // Dimension bound: everything reachable from [0, iwindow) within
    // jwindow steps; with an affine tail this grows by at most c a step.
    Nat dim = iwindow;
    for (Nat step = 0; step <= jwindow + 1; ++step) {
        Nat next = dim;
        for (auto [k, v] : phi.exceptions())
            if (k < dim) next = std::max(next, v + 1);
        if (dim >= 1) next = std::max(next, (dim - 1) + phi.tail_offset() + 1);
        dim = next;
    }
    // Square matrix with column i -> unit(phi(i)); columns whose image
    // falls outside the bound stay zero and are never reached from G.
    std::vector<QVector> rows(dim);
    for (Nat i = 0; i < dim; ++i) {
        Nat image = phi.evaluate(i);
        if (image < dim) rows[image].set(i, Rational(1));
    }
    QMatrix s = QMatrix::from_rows(std::move(rows), dim);

    GeneralInstance inst;
    for (Nat i = 0; i < iwindow; ++i) inst.family.emplace(i, QVector::unit(i));
    inst.scheme = std::move(scheme);
    inst.operators = power_table(i_star, s, jwindow);
    inst.control = ControlRelation::shift(jwindow);
    inst.i_star = i_star;
    return inst;
}

std::pair<GeneralInstance, DependenceWitness>
make_planted_dependence_instance(const std::vector<Rational>& relation, Nat jwindow) {
    if (relation.size() < 2) throw InputError("planted relation needs degree >= 1");
    if (relation.back().is_zero()) throw InputError("leading coefficient must be nonzero");
    if (jwindow == 0) throw InputError("J-window must be nonempty");
    const Nat degree = relation.size() - 1;

    // Companion operator on Q^degree: shifts the basis and folds the last
    // basis vector back through the relation.
    std::vector<QVector> columns(degree);
    for (Nat k = 0; k + 1 < degree; ++k) columns[k] = QVector::unit(k + 1);
    QVector folded;
    for (Nat k = 0; k < degree; ++k)
        folded.set(k, -(relation[k] / relation.back()));
    columns[degree - 1] = folded;
    std::vector<QVector> rows(degree);
    for (Nat c = 0; c < degree; ++c)
        for (const auto& [r, coef] : columns[c].entries()) rows[r].set(c, coef);
    QMatrix s = QMatrix::from_rows(std::move(rows), degree);

    GeneralInstance inst;
    SubsetKey i_star;
    QVector e = QVector::unit(0);
    for (Nat i = 0; i <= degree; ++i) {
        i_star.push_back(i);
        inst.family.emplace(i, e);
        e = s.apply(e);
    }
    inst.scheme = WindowScheme::make({{i_star, degree}}, {{i_star, i_star}});
    inst.operators = power_table(i_star, s, jwindow);
    inst.control = ControlRelation::shift(jwindow);
    inst.i_star = i_star;

    DependenceWitness witness;
    for (Nat k = 0; k <= degree; ++k)
        if (!relation[k].is_zero()) witness.coefficients.emplace(k, relation[k]);
    return {std::move(inst), std::move(witness)};
}

} // namespace orbitspan
