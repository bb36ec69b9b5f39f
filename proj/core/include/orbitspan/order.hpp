#pragma once

#include "orbitspan/prng.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace orbitspan {

using Elem = std::size_t;

/// Reflexive transitive relation on {0, ..., size-1}, given by a full
/// boolean table. Construction validates both axioms.
class FinitePreorder {
public:
    static FinitePreorder from_table(std::size_t size, std::vector<bool> leq);
    /// Reflexive-transitive closure of an arbitrary pair list.
    static FinitePreorder closure_of(std::size_t size,
                                     const std::vector<std::pair<Elem, Elem>>& pairs);

    std::size_t size() const { return size_; }
    bool le(Elem a, Elem b) const { return leq_[a * size_ + b]; }
    bool antisymmetric() const;
    const std::vector<bool>& table() const { return leq_; }

private:
    std::size_t size_ = 0;
    std::vector<bool> leq_;
};

/// Finite join-semilattice: a partial order where every pair has a least
/// upper bound. The join table is computed and validated on construction.
class JoinSemilattice {
public:
    /// Throws InputError unless leq is a partial order with all binary joins.
    static JoinSemilattice from_leq(std::size_t size, std::vector<bool> leq);
    /// Union-closed family of subsets of a small universe, ordered by
    /// inclusion; every such family is a join-semilattice under union.
    static JoinSemilattice from_union_family(std::vector<std::uint32_t> masks);

    std::size_t size() const { return order_.size(); }
    const FinitePreorder& order() const { return order_; }
    bool le(Elem a, Elem b) const { return order_.le(a, b); }
    Elem join(Elem a, Elem b) const { return join_[a * size() + b]; }
    Elem join_all(const std::vector<Elem>& xs) const;

    /// FNV-1a over the leq and join tables; used to pin generator output.
    std::uint64_t structure_hash() const;

private:
    FinitePreorder order_;
    std::vector<Elem> join_;
};

/// Monotone self-map given as a table; validated on construction.
struct MonotoneMap {
    std::vector<Elem> table;
    Elem operator()(Elem x) const { return table[x]; }
};
MonotoneMap make_monotone(const FinitePreorder& p, std::vector<Elem> table);

/// Monotone idempotent self-map (order-theoretic projection).
struct Projection {
    std::vector<Elem> table;
    Elem operator()(Elem x) const { return table[x]; }
};
Projection make_projection(const FinitePreorder& p, std::vector<Elem> table);

/// Total sequence n -> value with the presentation value(n) = prefix[n]
/// for n < |prefix|, else cycle[(n - |prefix|) mod |cycle|]. A property
/// that is uniform in n holds for all n iff it holds on the prefix and
/// one full cycle (the checkers include the cycle seam).
struct EPSeq {
    std::vector<Elem> prefix;
    std::vector<Elem> cycle;  // nonempty

    Elem at(std::size_t n) const {
        if (n < prefix.size()) return prefix[n];
        return cycle[(n - prefix.size()) % cycle.size()];
    }
    /// Checking indices [0, check_bound(shift)) decides a property that
    /// reads positions n..n+shift, for every n.
    std::size_t check_bound(std::size_t shift = 0) const {
        return prefix.size() + cycle.size() + shift;
    }
    std::string str() const;
};

struct LemmaCheck {
    bool hypotheses = false;   // all hypotheses (including the antecedent) hold
    bool conclusion = false;   // the lemma's conclusion holds
    std::string failed_hypothesis;  // first failing hypothesis, for reports

    /// The lemma as an implication: vacuously true when hypotheses fail.
    bool implication_holds() const { return !hypotheses || conclusion; }
};

/// Projection-bound induction on a preorder: given monotone f with
/// f(p(b)) <= p(f(b)), a(n+1) <= f(a(n)) and f(b) <= a(0),
/// a(0) <= p(b) forces a(n) <= p(b) for every n.
LemmaCheck check_lemma_31(const FinitePreorder& P, const Projection& p,
                          const MonotoneMap& f, const EPSeq& a, Elem b);

/// Single-sequence semilattice version: e(m*) <= p(b(m*)) propagates to
/// the whole tail e(m*+n) <= p(b(m*)).
LemmaCheck check_lemma_33(const JoinSemilattice& S, const Projection& p,
                          const MonotoneMap& f, const EPSeq& e, const EPSeq& b,
                          std::size_t m_star);

/// Double sequence presentation for the two-index lemma: either the
/// diagonal a(m, n) = e(m + n) of a single sequence, or an explicit row
/// table (row m eventually periodic in n; the row list is the checked
/// range of m).
struct DoubleSeq {
    static DoubleSeq diagonal(EPSeq e);
    static DoubleSeq table(std::vector<EPSeq> rows);

    bool is_diagonal() const { return std::holds_alternative<EPSeq>(data); }
    Elem at(std::size_t m, std::size_t n) const;
    std::size_t row_count_for_checks() const;  // range of the forall-m checks

    std::variant<EPSeq, std::vector<EPSeq>> data;
};

LemmaCheck check_lemma_32(const JoinSemilattice& S, const Projection& p,
                          const MonotoneMap& f, const DoubleSeq& a, const EPSeq& b,
                          std::size_t m_star);

// --- seeded generators -----------------------------------------------------

JoinSemilattice random_semilattice(std::uint64_t seed, std::size_t size_bound);
Projection random_projection(std::uint64_t seed, const JoinSemilattice& S);
Projection random_projection(Prng& rng, const FinitePreorder& P);
MonotoneMap random_monotone(Prng& rng, const FinitePreorder& P);
EPSeq random_epseq(Prng& rng, std::size_t size);

// --- batch harness ----------------------------------------------------------

struct Lemma31Instance {
    FinitePreorder P;
    Projection p;
    MonotoneMap f;
    EPSeq a;
    Elem b;
};

struct Lemma33Instance {
    JoinSemilattice S;
    Projection p;
    MonotoneMap f;
    EPSeq e;
    EPSeq b;
    std::size_t m_star;
};

struct Lemma32Instance {
    JoinSemilattice S;
    Projection p;
    MonotoneMap f;
    DoubleSeq a;
    EPSeq b;
    std::size_t m_star;
};

Lemma31Instance generate_lemma31_instance(Prng& rng);
Lemma33Instance generate_lemma33_instance(Prng& rng);
Lemma32Instance generate_lemma32_instance(Prng& rng);

struct LemmaBatchReport {
    std::string lemma;
    std::size_t total = 0;
    std::size_t nonvacuous = 0;   // hypothesis-satisfying instances
    std::size_t violations = 0;   // hypotheses held but conclusion failed
    std::optional<std::size_t> first_violation_index;
    std::string first_violation_description;

    bool pass() const { return violations == 0; }
};

LemmaBatchReport run_lemma_batch(const std::string& lemma, std::uint64_t seed,
                                 std::size_t count);

} // namespace orbitspan
