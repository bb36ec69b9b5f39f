#pragma once

#include "orbitspan/linalg.hpp"
#include "orbitspan/selfmap.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace orbitspan {

/// Relation on a J-window [0, jwindow) steering the induction: images of
/// J0 stay in J0, and every window point reaches J0 under iterated
/// images (validated with image-set cycle detection).
struct ControlRelation {
    Nat jwindow = 0;
    std::set<std::pair<Nat, Nat>> pairs;
    std::set<Nat> j0;

    static ControlRelation make(Nat jwindow, std::set<std::pair<Nat, Nat>> pairs,
                                std::set<Nat> j0);
    /// The shift relation {(0,0)} and {(m, m-1)}; reaches {0} in m steps.
    static ControlRelation shift(Nat jwindow);

    std::set<Nat> image(const std::set<Nat>& s) const;
};

/// R^n[j] by iterated image; R^0[j] = {j}.
std::set<Nat> relation_power_image(const ControlRelation& r, Nat j, Nat n);

/// Least n with R^n[j] contained in J0. Throws InputError when the
/// image-set iteration cycles without ever entering J0.
Nat reach_steps(const ControlRelation& r, Nat j);

/// Subset key: sorted, duplicate-free index list.
using SubsetKey = std::vector<Nat>;

/// Tables u(I*) in I* and I* within G(I*), defined on the exercised
/// subsets.
struct WindowScheme {
    std::map<SubsetKey, Nat> u;
    std::map<SubsetKey, SubsetKey> g;

    static WindowScheme make(std::map<SubsetKey, Nat> u, std::map<SubsetKey, SubsetKey> g);
    Nat u_of(const SubsetKey& key) const;
    const SubsetKey& g_of(const SubsetKey& key) const;
};

/// Orbit-enumeration scheme of a generated map: u(I*) is the last point
/// of I* along the trajectory, G(I*) the trajectory up to it. Satisfies
/// u(I*) in I*, I* within G(I*) and phi(G \ {u}) within G (validated).
WindowScheme scheme_from_selfmap(const SelfMap& phi, Nat window,
                                 const std::vector<SubsetKey>& subsets);

/// Finite truncation of a generalized-criterion scenario for one
/// exercised subset I*: family, scheme, operator table T(I*, j), control
/// relation, and the finite slack subspace V.
struct GeneralInstance {
    std::map<Nat, QVector> family;
    WindowScheme scheme;
    std::map<std::pair<SubsetKey, Nat>, QMatrix> operators;
    ControlRelation control;
    Subspace v;
    SubsetKey i_star;
    Nat k4_bound = 0;  // declared bound for the rank-growth condition

    const QMatrix& op(const SubsetKey& key, Nat j) const;
    const QVector& vec(Nat i) const;
};

struct ConditionReport {
    bool scheme_ok = false;       // condition 1
    bool operators_ok = false;    // condition 2
    bool control_ok = false;      // condition 3
    bool rank_growth_ok = false;  // condition 4 (window proxy)
    bool span_membership_ok = false;  // condition 5
    std::size_t rank = 0;     // rank of {T(I*, j) e_u : j in J-window}
    Nat k4 = 0;               // jwindow - rank
    std::string first_failure;

    bool all() const {
        return scheme_ok && operators_ok && control_ok && rank_growth_ok &&
               span_membership_ok;
    }
};

ConditionReport check_conditions(const GeneralInstance& inst);

/// Verifies the induction claim and its endgame for an instance carrying
/// a real dependence: for n = 0..n_max every T(I*,j) e_i with
/// i in G \ {u} lies in span{T(I*,j') e_{i'} : (j',i') in R^n[j] x G} + V,
/// and T(I*,j) e_u lands in the J0-span + V for every window j. Reports
/// the rank pair (rank of {T(I*,j) e_u}, dim of the J0-span + V) whose
/// comparison contradicts unbounded rank growth.
struct InductionReport {
    bool claim_ok = true;
    std::optional<std::tuple<Nat, Nat, Nat>> first_claim_failure;  // (n, j, i)
    bool endgame_ok = true;
    std::size_t span_rank = 0;  // rank{T(I*,j) e_u : j}
    std::size_t bound_dim = 0;  // dim(span{T(I*,j') e_i' : J0 x G} + V)

    bool contradiction_exhibited() const { return endgame_ok && span_rank <= bound_dim; }
};

InductionReport verify_induction_claim(const GeneralInstance& inst,
                                       const DependenceWitness& witness, Nat n_max);

/// Instance of the successor-shift scenario: family e_n (defaults to the
/// standard basis seeded by e0), u = max, G = [0, max], T(I*, m) = S^m
/// for the coordinate shift S, J0 = {0} and the shift relation.
GeneralInstance make_shift_criterion_instance(const SubsetKey& i_star, Nat jwindow,
                                              const QVector& e0 = QVector::unit(0),
                                              const Subspace& v = Subspace());

/// Instance along a generated self-map orbit: family e_i = basis vectors
/// indexed by i, S e_i = e_{phi(i)}, T(I*, m) = S^m, scheme from the
/// orbit enumeration.
GeneralInstance make_orbit_criterion_instance(const SelfMap& phi, const SubsetKey& i_star,
                                              Nat iwindow, Nat jwindow);

/// The shift scenario with vectors satisfying a planted dependence
/// sum c_i e_i = 0 over I* = {0..degree}: e_0..e_{degree-1} are basis
/// vectors and the recurrence continues the family, so the operator is
/// the companion matrix. Returns the instance and the planted witness.
std::pair<GeneralInstance, DependenceWitness>
make_planted_dependence_instance(const std::vector<Rational>& relation, Nat jwindow);

} // namespace orbitspan
