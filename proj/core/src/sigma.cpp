#include "orbitspan/sigma.hpp"

#include "orbitspan/errors.hpp"

#include <algorithm>
#include <set>

namespace orbitspan {

namespace {

std::size_t pow_size(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && r > (std::size_t(1) << 40) / base)
            throw InputError("interpretation table too large");
        r *= base;
    }
    return r;
}

/// Advances a mixed-radix tuple; returns false after the last one.
bool next_tuple(std::vector<std::size_t>& tuple, std::size_t base) {
    for (std::size_t i = tuple.size(); i-- > 0;) {
        if (++tuple[i] < base) return true;
        tuple[i] = 0;
    }
    return false;
}

bool tuple_within(const std::vector<std::size_t>& tuple, Subset x) {
    for (std::size_t v : tuple)
        if (!(x >> v & 1)) return false;
    return true;
}

} // namespace

SigmaStructure SigmaStructure::make(std::size_t size, Signature sig,
                                    std::vector<std::vector<std::size_t>> tables) {
    if (size == 0) throw InputError("carrier must be nonempty");
    if (size > 32) throw InputError("carrier size capped at 32");
    {
        std::set<std::string> names;
        for (const auto& sym : sig.symbols)
            if (!names.insert(sym.name).second)
                throw InputError("duplicate symbol name '" + sym.name + "'");
    }
    if (tables.size() != sig.symbols.size())
        throw InputError("one interpretation table required per symbol");
    for (std::size_t s = 0; s < tables.size(); ++s) {
        std::size_t expected = pow_size(size, sig.symbols[s].arity);
        if (tables[s].size() != expected)
            throw InputError("table for '" + sig.symbols[s].name + "' has " +
                             std::to_string(tables[s].size()) + " entries, expected " +
                             std::to_string(expected));
        for (std::size_t v : tables[s])
            if (v >= size)
                throw InputError("table for '" + sig.symbols[s].name +
                                 "' leaves the carrier");
    }
    SigmaStructure a;
    a.size_ = size;
    a.sig_ = std::move(sig);
    a.tables_ = std::move(tables);
    return a;
}

std::size_t SigmaStructure::apply(std::size_t symbol, std::span<const std::size_t> args) const {
    const std::size_t arity = sig_.symbols[symbol].arity;
    if (args.size() != arity) throw InputError("arity mismatch");
    std::size_t index = 0;
    for (std::size_t v : args) {
        if (v >= size_) throw InputError("argument outside carrier");
        index = index * size_ + v;
    }
    return tables_[symbol][index];
}

Subset term_closure(const SigmaStructure& a, Subset x) {
    if ((x & ~a.full_mask()) != 0) throw InputError("subset has elements outside carrier");
    Subset cur = x;
    // Constants first, then close under operations until stable.
    for (std::size_t s = 0; s < a.signature().symbols.size(); ++s)
        if (a.signature().symbols[s].arity == 0) cur |= Subset(1) << a.tables()[s][0];
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t s = 0; s < a.signature().symbols.size(); ++s) {
            const std::size_t arity = a.signature().symbols[s].arity;
            if (arity == 0) continue;
            std::vector<std::size_t> tuple(arity, 0);
            do {
                if (!tuple_within(tuple, cur)) continue;
                Subset bit = Subset(1) << a.apply(s, tuple);
                if (!(cur & bit)) {
                    cur |= bit;
                    grew = true;
                }
            } while (next_tuple(tuple, a.size()));
        }
    }
    return cur;
}

EndoCheck verify_endomorphism(const SigmaStructure& a, const std::vector<std::size_t>& f) {
    if (f.size() != a.size()) throw InputError("endomorphism table has wrong size");
    for (std::size_t v : f)
        if (v >= a.size()) throw InputError("endomorphism table leaves the carrier");

    for (std::size_t s = 0; s < a.signature().symbols.size(); ++s) {
        const std::size_t arity = a.signature().symbols[s].arity;
        std::vector<std::size_t> tuple(arity, 0);
        do {
            std::vector<std::size_t> mapped(arity);
            for (std::size_t i = 0; i < arity; ++i) mapped[i] = f[tuple[i]];
            if (f[a.apply(s, tuple)] != a.apply(s, mapped)) {
                EndoCheck c;
                c.ok = false;
                c.symbol = a.signature().symbols[s].name;
                c.tuple = tuple;
                return c;
            }
        } while (next_tuple(tuple, a.size()));
    }
    EndoCheck c;
    c.ok = true;
    return c;
}

std::string EndoCheck::str() const {
    if (ok) return "endomorphism";
    std::string s = "violates " + symbol + " at (";
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(tuple[i]);
    }
    return s + ")";
}

ModelPropReport check_model_prop(const SigmaStructure& a, const std::vector<std::size_t>& f,
                                 const std::vector<std::size_t>& e) {
    EndoCheck endo = verify_endomorphism(a, f);
    if (!endo.ok) throw InputError("map is not an endomorphism: " + endo.str());
    if (e.empty()) throw InputError("empty sequence");
    for (std::size_t v : e)
        if (v >= a.size()) throw InputError("sequence leaves the carrier");
    for (std::size_t n = 0; n + 1 < e.size(); ++n)
        if (f[e[n]] != e[n + 1])
            throw InputError("shift compatibility fails at index " + std::to_string(n) +
                             ": f(e_" + std::to_string(n) + ") != e_" + std::to_string(n + 1));

    ModelPropReport report;
    std::vector<Subset> closures(e.size() + 1);  // closure of {e_0..e_{m-1}}
    Subset prefix = 0;
    for (std::size_t m = 0; m <= e.size(); ++m) {
        closures[m] = term_closure(a, prefix);
        if (m < e.size()) prefix |= Subset(1) << e[m];
    }
    for (std::size_t m = 0; m < e.size(); ++m) {
        if (closures[m] >> e[m] & 1) {
            report.first_collapse = m;
            break;
        }
    }
    if (report.first_collapse) {
        const Subset cl = closures[*report.first_collapse];
        for (std::size_t k = *report.first_collapse; k < e.size(); ++k)
            if (!(cl >> e[k] & 1)) report.tail_verified = false;
    }
    // Contrapositive bookkeeping: does every prefix have a later escapee?
    report.escape_all = true;
    for (std::size_t m = 0; m < e.size() && report.escape_all; ++m) {
        bool escapes = false;
        for (std::size_t k = m; k < e.size(); ++k)
            if (!(closures[m] >> e[k] & 1)) {
                escapes = true;
                break;
            }
        if (!escapes) report.escape_all = false;
    }
    return report;
}

std::vector<std::vector<std::size_t>> enumerate_endomorphisms(const SigmaStructure& a,
                                                              std::uint64_t seed) {
    std::vector<std::vector<std::size_t>> endos;
    const std::size_t n = a.size();
    double total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= static_cast<double>(n);
    if (total <= 60000.0) {
        std::vector<std::size_t> f(n, 0);
        while (true) {
            if (verify_endomorphism(a, f).ok) endos.push_back(f);
            if (!next_tuple(f, n)) break;
        }
    } else {
        Prng rng(seed);
        for (int i = 0; i < 20000; ++i) {
            std::vector<std::size_t> f(n);
            for (std::size_t& v : f) v = rng.below(n);
            if (verify_endomorphism(a, f).ok) endos.push_back(f);
        }
        std::sort(endos.begin(), endos.end());
        endos.erase(std::unique(endos.begin(), endos.end()), endos.end());
    }
    return endos;
}

ProjectionLawReport powerset_projection_laws(const SigmaStructure& a, std::uint64_t seed) {
    ProjectionLawReport report;
    const std::size_t n = a.size();

    std::vector<Subset> subsets;
    if (n <= 12) {
        for (Subset x = 0;; ++x) {
            subsets.push_back(x);
            if (x == a.full_mask()) break;
        }
    } else {
        Prng rng(seed);
        subsets.push_back(0);
        subsets.push_back(a.full_mask());
        for (int i = 0; i < 512; ++i)
            subsets.push_back(static_cast<Subset>(rng.next()) & a.full_mask());
    }
    report.subsets_checked = subsets.size();

    std::vector<Subset> closure_of(subsets.size());
    for (std::size_t i = 0; i < subsets.size(); ++i)
        closure_of[i] = term_closure(a, subsets[i]);

    for (std::size_t i = 0; i < subsets.size(); ++i) {
        if ((subsets[i] & ~closure_of[i]) != 0) report.extensive = false;
        if (term_closure(a, closure_of[i]) != closure_of[i]) report.idempotent = false;
        for (std::size_t j = 0; j < subsets.size(); ++j) {
            if ((subsets[i] & ~subsets[j]) != 0) continue;  // need X subset of Y
            if ((closure_of[i] & ~closure_of[j]) != 0) report.monotone = false;
        }
    }

    auto endos = enumerate_endomorphisms(a, seed);
    report.endos_checked = endos.size();
    for (const auto& f : endos) {
        auto image = [&f](Subset x) {
            Subset y = 0;
            for (std::size_t v = 0; v < f.size(); ++v)
                if (x >> v & 1) y |= Subset(1) << f[v];
            return y;
        };
        for (std::size_t i = 0; i < subsets.size(); ++i) {
            if (image(closure_of[i]) != term_closure(a, image(subsets[i]))) {
                report.endo_commutes = false;
                break;
            }
        }
        if (!report.endo_commutes) break;
    }
    return report;
}

} // namespace orbitspan
