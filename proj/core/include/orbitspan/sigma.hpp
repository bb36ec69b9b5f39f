#pragma once

#include "orbitspan/prng.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace orbitspan {

/// Algebraic signature: named operation symbols with arities (arity 0 =
/// constant). No relation symbols.
struct Signature {
    struct Symbol {
        std::string name;
        std::size_t arity = 0;
    };
    std::vector<Symbol> symbols;
};

/// Carrier subsets are bitmasks over {0, ..., size-1}; size is capped at
/// 32 so every subset fits a Subset.
using Subset = std::uint32_t;

/// Finite structure for an algebraic signature: carrier {0,...,size-1}
/// and one total interpretation table per symbol (row-major over the
/// argument tuple).
class SigmaStructure {
public:
    static SigmaStructure make(std::size_t size, Signature sig,
                               std::vector<std::vector<std::size_t>> tables);

    std::size_t size() const { return size_; }
    const Signature& signature() const { return sig_; }
    const std::vector<std::vector<std::size_t>>& tables() const { return tables_; }
    std::size_t apply(std::size_t symbol, std::span<const std::size_t> args) const;

    Subset full_mask() const { return size_ == 32 ? ~Subset(0) : (Subset(1) << size_) - 1; }

private:
    std::size_t size_ = 0;
    Signature sig_;
    std::vector<std::vector<std::size_t>> tables_;
};

/// Least superset of X containing every constant and closed under every
/// interpreted operation (subalgebra generated by X), by worklist
/// fixpoint. Throws InputError if X has bits outside the carrier.
Subset term_closure(const SigmaStructure& a, Subset x);

/// Commutation check f(g(args)) == g(f(args)) for every symbol and tuple.
/// On failure carries the first violation in symbol/tuple order.
struct EndoCheck {
    bool ok = false;
    std::string symbol;                // violation only
    std::vector<std::size_t> tuple;    // violation only

    std::string str() const;
};

EndoCheck verify_endomorphism(const SigmaStructure& a, const std::vector<std::size_t>& f);

/// Tail-collapse report for a shift-compatible sequence e_0..e_N in the
/// carrier: once some e_m falls into the closure of its predecessors,
/// the whole remaining tail must.
struct ModelPropReport {
    std::optional<std::size_t> first_collapse;
    bool tail_verified = true;   // vacuous when no collapse
    /// Every m <= N has a later index escaping the closure of e_0..e_{m-1}
    /// (within the window). Implies first_collapse is absent.
    bool escape_all = false;
};

ModelPropReport check_model_prop(const SigmaStructure& a, const std::vector<std::size_t>& f,
                                 const std::vector<std::size_t>& e);

/// Laws of the closure map p(X) = term_closure(X) on the powerset:
/// monotone, idempotent, extensive, and f(p(X)) == p(f(X)) for verified
/// endomorphisms f. Exhaustive over subsets (and over all self-maps when
/// feasible); seeded sampling beyond the thresholds.
struct ProjectionLawReport {
    bool monotone = true;
    bool idempotent = true;
    bool extensive = true;
    bool endo_commutes = true;
    std::size_t subsets_checked = 0;
    std::size_t endos_checked = 0;

    bool all() const { return monotone && idempotent && extensive && endo_commutes; }
};

ProjectionLawReport powerset_projection_laws(const SigmaStructure& a,
                                             std::uint64_t seed = 0);

/// All endomorphism tables when size^size is small enough to enumerate;
/// otherwise a seeded sample of verified ones.
std::vector<std::vector<std::size_t>> enumerate_endomorphisms(const SigmaStructure& a,
                                                              std::uint64_t seed = 0);

} // namespace orbitspan
