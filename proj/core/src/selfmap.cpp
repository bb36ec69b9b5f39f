#include "orbitspan/selfmap.hpp"

#include "orbitspan/errors.hpp"

#include <algorithm>

namespace orbitspan {

SelfMap SelfMap::make(std::map<Nat, Nat> exceptions, Nat tail_offset) {
    SelfMap m;
    m.exceptions_ = std::move(exceptions);
    m.tail_offset_ = tail_offset;
    m.tail_threshold_ =
        m.exceptions_.empty() ? 0 : m.exceptions_.rbegin()->first + 1;
    return m;
}

Nat SelfMap::evaluate(Nat n) const {
    auto it = exceptions_.find(n);
    return it != exceptions_.end() ? it->second : n + tail_offset_;
}

Nat SelfMap::iterate(Nat n, Nat times) const {
    for (Nat i = 0; i < times; ++i) n = evaluate(n);
    return n;
}

std::string SelfMap::str() const {
    std::string s = "{";
    bool first = true;
    for (auto [k, v] : exceptions_) {
        if (!first) s += ", ";
        first = false;
        s += std::to_string(k) + "->" + std::to_string(v);
    }
    s += "}, tail n->n+" + std::to_string(tail_offset_);
    return s;
}

bool OrbitSet::contains(Nat value) const {
    if (head.count(value)) return true;
    if (!infinite) return false;
    return value >= tail_start && (value - tail_start) % tail_step == 0;
}

Nat OrbitSet::count_below(Nat bound) const {
    Nat count = 0;
    for (Nat v : head)
        if (v < bound) ++count;
    if (infinite && bound > tail_start)
        count += (bound - 1 - tail_start) / tail_step + 1;
    return count;
}

OrbitSet orbit_set(const SelfMap& phi, Nat start) {
    const Nat tau = phi.tail_threshold();
    OrbitSet set;
    std::set<Nat> visited;
    Nat x = start;
    // Values below tau can repeat (cycle) or escape to the tail; at most
    // tau + 1 steps decide which.
    while (true) {
        if (x >= tau) {
            if (phi.tail_offset() == 0) {
                // Fixed point: finite orbit.
                set.head = std::move(visited);
                set.head.insert(x);
                set.infinite = false;
                return set;
            }
            set.head = std::move(visited);
            set.infinite = true;
            set.tail_start = x;
            set.tail_step = phi.tail_offset();
            return set;
        }
        if (visited.count(x)) {
            set.head = std::move(visited);
            set.infinite = false;
            return set;
        }
        visited.insert(x);
        x = phi.evaluate(x);
    }
}

OrbitReport orbit_report(const SelfMap& phi, Nat start, Nat window) {
    if (window < phi.min_window())
        throw InputError("orbit window too small: need at least tau + c + 1 = " +
                         std::to_string(phi.min_window()));

    OrbitReport report;
    report.start = start;
    report.window = window;

    const Nat tau = phi.tail_threshold();
    std::map<Nat, Nat> first_step;  // value -> step index
    Nat x = start;
    Nat step = 0;
    bool infinite = false;
    while (true) {
        if (x >= tau && phi.tail_offset() >= 1) {
            infinite = true;
            break;
        }
        if (x >= tau && phi.tail_offset() == 0) {
            // Tail fixed point: 1-cycle at x.
            auto it = first_step.find(x);
            report.kind = OrbitReport::Kind::Finite;
            report.period_entry = it != first_step.end() ? it->second : step;
            report.period = 1;
            if (it == first_step.end()) first_step.emplace(x, step);
            break;
        }
        auto it = first_step.find(x);
        if (it != first_step.end()) {
            report.kind = OrbitReport::Kind::Finite;
            report.period_entry = it->second;
            report.period = step - it->second;
            break;
        }
        first_step.emplace(x, step);
        ++step;
        x = phi.evaluate(x);
    }

    OrbitSet set = orbit_set(phi, start);
    if (infinite) {
        report.kind = OrbitReport::Kind::Infinite;
        report.cofinite = phi.tail_offset() == 1;
    }
    for (Nat v = 0; v < window; ++v)
        if (!set.contains(v)) report.complement_window.push_back(v);
    report.full = report.cofinite && report.complement_window.empty();
    return report;
}

std::string OrbitReport::str() const {
    std::string s = "orbit(" + std::to_string(start) + "): ";
    if (kind == Kind::Finite) {
        s += "finite, enters cycle at step " + std::to_string(period_entry) +
             ", period " + std::to_string(period);
    } else {
        s += "infinite";
        s += cofinite ? ", cofinite" : ", not cofinite";
        s += full ? ", full" : ", not full";
    }
    s += "; misses below " + std::to_string(window) + ": {";
    for (std::size_t i = 0; i < complement_window.size(); ++i) {
        if (i) s += ",";
        if (i == 8 && complement_window.size() > 9) {
            s += "...";
            break;
        }
        s += std::to_string(complement_window[i]);
    }
    s += "}";
    return s;
}

std::optional<Nat> find_generator(const SelfMap& phi, Nat search_bound) {
    const Nat window = phi.min_window();
    // No candidate above tau can generate (see header), so the scan stops
    // there even when search_bound is larger.
    const Nat stop = std::min(search_bound, phi.tail_threshold());
    for (Nat a = 0; a <= stop; ++a) {
        OrbitReport r = orbit_report(phi, a, window);
        if (r.full) return a;
    }
    return std::nullopt;
}

std::optional<ConjugacyWitness> conjugacy_witness(const SelfMap& phi, Nat window_size) {
    if (window_size < 1) throw InputError("conjugacy window must be >= 1");
    auto gen = find_generator(phi, phi.tail_threshold());
    if (!gen) return std::nullopt;

    ConjugacyWitness w;
    w.generator = *gen;
    w.alpha.reserve(window_size);
    Nat x = *gen;
    for (Nat n = 0; n < window_size; ++n) {
        w.alpha.push_back(x);
        x = phi.evaluate(x);
    }

    std::set<Nat> seen(w.alpha.begin(), w.alpha.end());
    if (seen.size() != w.alpha.size())
        throw InputError("conjugacy window not injective (not a generator?)");
    for (Nat n = 0; n + 1 < window_size; ++n)
        if (phi.evaluate(w.alpha[n]) != w.alpha[n + 1])
            throw InputError("conjugacy window does not intertwine succ with phi");
    if (window_size >= phi.tail_threshold()) {
        // The trajectory of a generator is a permutation of [0, v0)
        // followed by v0, v0+1, ... with v0 <= tau, so a window of length
        // W >= tau must be exactly a permutation of [0, W).
        for (Nat v : w.alpha)
            if (v >= window_size)
                throw InputError("conjugacy window misses an initial segment value");
    }
    return w;
}

std::optional<MeetingIndices> meeting_indices(const SelfMap& phi, Nat a, Nat b, Nat bound) {
    std::vector<Nat> it_a(bound + 1), it_b(bound + 1);
    it_a[0] = a;
    it_b[0] = b;
    for (Nat k = 1; k <= bound; ++k) {
        it_a[k] = phi.evaluate(it_a[k - 1]);
        it_b[k] = phi.evaluate(it_b[k - 1]);
    }
    for (Nat total = 0; total <= bound; ++total) {
        for (Nat m = 0; m <= total; ++m) {
            Nat n = total - m;
            if (it_b[m] == it_a[n]) return MeetingIndices{m, n};
        }
    }
    return std::nullopt;
}

std::string ConjugacyWitness::str() const {
    std::string s = "generator " + std::to_string(generator) + ", alpha = [";
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (i) s += ",";
        if (i == 12 && alpha.size() > 13) {
            s += "...";
            break;
        }
        s += std::to_string(alpha[i]);
    }
    return s + "]";
}

} // namespace orbitspan
