#include "orbitspan/linalg.hpp"

#include "orbitspan/errors.hpp"

#include <algorithm>

namespace orbitspan {

namespace {

BigInt content(const std::vector<BigInt>& a, const std::vector<BigInt>& t) {
    BigInt g = 0;
    for (const BigInt& x : a) g = boost::multiprecision::gcd(g, x);
    for (const BigInt& x : t) g = boost::multiprecision::gcd(g, x);
    return g;  // 0 when everything is zero
}

void divide_all(std::vector<BigInt>& v, const BigInt& g) {
    for (BigInt& x : v) x /= g;
}

bool all_zero(const std::vector<BigInt>& v) {
    return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; });
}

} // namespace

QMatrix QMatrix::from_rows(std::vector<QVector> rows, std::optional<std::size_t> ncols) {
    std::size_t bound = 0;
    for (const QVector& r : rows) bound = std::max(bound, r.support_bound());
    QMatrix m;
    m.rows_ = std::move(rows);
    if (ncols) {
        if (*ncols < bound)
            throw InputError("matrix ncols does not cover row supports");
        m.ncols_ = *ncols;
    } else {
        m.ncols_ = bound;
    }
    return m;
}

QMatrix QMatrix::identity(std::size_t n) {
    std::vector<QVector> rows;
    rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) rows.push_back(QVector::unit(i));
    return from_rows(std::move(rows), n);
}

QMatrix QMatrix::coordinate_shift(std::size_t n) {
    std::vector<QVector> rows(n);
    for (std::size_t i = 1; i < n; ++i) rows[i] = QVector::unit(i - 1);
    return from_rows(std::move(rows), n);
}

QVector QMatrix::apply(const QVector& v) const {
    if (v.support_bound() > ncols_)
        throw InputError("operator applied to vector outside its domain");
    QVector out;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        Rational acc;
        for (const auto& [c, coef] : rows_[r].entries()) acc += coef * v.at(c);
        if (!acc.is_zero()) out.set(r, acc);
    }
    return out;
}

QMatrix QMatrix::multiply(const QMatrix& other) const {
    if (ncols_ < other.nrows())
        throw InputError("matrix product dimension mismatch");
    std::vector<QVector> rows;
    rows.reserve(rows_.size());
    for (const QVector& r : rows_) {
        QVector acc;
        for (const auto& [k, coef] : r.entries()) {
            if (k < other.rows_.size()) acc += other.rows_[k].scaled(coef);
        }
        rows.push_back(std::move(acc));
    }
    return from_rows(std::move(rows), other.ncols());
}

std::vector<std::size_t> DependenceWitness::indices() const {
    std::vector<std::size_t> out;
    out.reserve(coefficients.size());
    for (const auto& [i, c] : coefficients) out.push_back(i);
    return out;
}

bool DependenceWitness::verifies(const std::vector<QVector>& rows) const {
    if (coefficients.empty()) return false;
    QVector acc;
    for (const auto& [i, c] : coefficients) {
        if (c.is_zero()) return false;
        if (i >= rows.size()) return false;
        acc += rows[i].scaled(c);
    }
    return acc.is_zero();
}

std::string DependenceWitness::str() const {
    std::string s = "{";
    bool first = true;
    for (const auto& [i, c] : coefficients) {
        if (!first) s += ", ";
        first = false;
        s += "c" + std::to_string(i) + "=" + c.str();
    }
    return s + "}";
}

SpanBuilder::SpanBuilder(std::size_t ncols, bool track) : ncols_(ncols), track_(track) {}

std::vector<BigInt> SpanBuilder::to_integer(const QVector& v) const {
    if (v.support_bound() > ncols_)
        throw InputError("row support exceeds declared column bound");
    BigInt lcm = 1;
    for (const auto& [i, c] : v.entries()) lcm = boost::multiprecision::lcm(lcm, c.den());
    std::vector<BigInt> a(ncols_, BigInt(0));
    for (const auto& [i, c] : v.entries()) a[i] = c.num() * (lcm / c.den());
    return a;
}

void SpanBuilder::reduce(std::vector<BigInt>& a, std::vector<BigInt>* t) const {
    for (const Row& e : echelon_) {
        const BigInt beta = a[e.pivot];  // by value: the loop writes a[e.pivot]
        if (beta == 0) continue;
        const BigInt alpha = e.a[e.pivot];
        for (std::size_t c = 0; c < ncols_; ++c) a[c] = alpha * a[c] - beta * e.a[c];
        if (t) {
            if (t->size() < e.t.size()) t->resize(e.t.size(), BigInt(0));
            for (std::size_t c = 0; c < e.t.size(); ++c)
                (*t)[c] = alpha * (*t)[c] - beta * e.t[c];
            for (std::size_t c = e.t.size(); c < t->size(); ++c) (*t)[c] *= alpha;
        }
    }
}

bool SpanBuilder::add(const QVector& row) {
    std::vector<BigInt> a = to_integer(row);
    std::vector<BigInt> t;
    if (track_) {
        t.assign(added_ + 1, BigInt(0));
        // Invariant: t . (input rows) == a, up to the row scaling applied
        // by to_integer (scaling does not affect zero combinations).
        BigInt lcm = 1;
        for (const auto& [i, c] : row.entries())
            lcm = boost::multiprecision::lcm(lcm, c.den());
        t[added_] = lcm;
    }
    reduce(a, track_ ? &t : nullptr);
    std::size_t index = added_++;

    if (all_zero(a)) {
        if (track_) {
            BigInt g = content({}, t);
            if (g > 1) divide_all(t, g);
            if (t[index] < 0)
                for (BigInt& x : t) x = -x;
            DependenceWitness w;
            for (std::size_t i = 0; i < t.size(); ++i)
                if (t[i] != 0) w.coefficients.emplace(i, Rational(t[i]));
            witness_ = std::move(w);
        }
        return false;
    }

    std::size_t pivot = 0;
    while (a[pivot] == 0) ++pivot;
    BigInt g = content(a, t);
    if (g > 1) {
        divide_all(a, g);
        divide_all(t, g);
    }
    if (a[pivot] < 0) {
        for (BigInt& x : a) x = -x;
        for (BigInt& x : t) x = -x;
    }
    Row r{std::move(a), std::move(t), pivot};
    auto pos = std::lower_bound(echelon_.begin(), echelon_.end(), r,
                                [](const Row& x, const Row& y) { return x.pivot < y.pivot; });
    echelon_.insert(pos, std::move(r));
    return true;
}

bool SpanBuilder::contains(const QVector& v) const {
    std::vector<BigInt> a = to_integer(v);
    reduce(a, nullptr);
    return all_zero(a);
}

Subspace Subspace::from_generators(const std::vector<QVector>& generators) {
    std::size_t ncols = 0;
    for (const QVector& g : generators) ncols = std::max(ncols, g.support_bound());

    // Forward pass: independent integer echelon rows.
    SpanBuilder builder(ncols);
    std::vector<QVector> kept;
    for (const QVector& g : generators)
        if (builder.add(g)) kept.push_back(g);

    // Rational Gauss-Jordan on the independent rows; canonical form at
    // the boundary only.
    std::vector<QVector> rows = std::move(kept);
    std::size_t done = 0;
    for (std::size_t col = 0; col < ncols && done < rows.size(); ++col) {
        std::size_t sel = rows.size();
        for (std::size_t r = done; r < rows.size(); ++r) {
            if (!rows[r].at(col).is_zero()) {
                sel = r;
                break;
            }
        }
        if (sel == rows.size()) continue;
        std::swap(rows[done], rows[sel]);
        QVector& p = rows[done];
        p = p.scaled(Rational(1) / p.at(col));
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == done) continue;
            Rational c = rows[r].at(col);
            if (!c.is_zero()) rows[r] -= p.scaled(c);
        }
        ++done;
    }
    Subspace s;
    s.basis_ = std::move(rows);
    return s;
}

Subspace Subspace::sum(const Subspace& a, const Subspace& b) {
    std::vector<QVector> gens = a.basis_;
    gens.insert(gens.end(), b.basis_.begin(), b.basis_.end());
    return from_generators(gens);
}

std::size_t rank(const QMatrix& m) {
    SpanBuilder builder(m.ncols());
    for (const QVector& r : m.rows()) builder.add(r);
    return builder.rank();
}

bool in_span(const QVector& v, const Subspace& s) {
    QVector w = v;
    for (const QVector& b : s.basis()) {
        std::size_t pivot = b.entries().begin()->first;
        Rational c = w.at(pivot);
        if (!c.is_zero()) w -= b.scaled(c);
    }
    return w.is_zero();
}

bool in_span_plus(const QVector& v, const Subspace& s, const Subspace& vsub) {
    return in_span(v, Subspace::sum(s, vsub));
}

std::optional<DependenceWitness> dependence_witness(const QMatrix& rows) {
    SpanBuilder builder(rows.ncols(), /*track=*/true);
    for (const QVector& r : rows.rows()) {
        if (!builder.add(r)) return builder.last_witness();
    }
    return std::nullopt;
}

} // namespace orbitspan
