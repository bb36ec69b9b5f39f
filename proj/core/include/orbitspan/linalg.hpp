#pragma once

#include "orbitspan/qvector.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace orbitspan {

/// Row-major rational matrix. Doubles as "ordered family of vectors"
/// (for rank and dependence questions) and as a linear operator acting
/// on coordinates: (m * v)[r] = sum_c m[r][c] * v[c].
class QMatrix {
public:
    QMatrix() = default;
    /// ncols defaults to the tightest support bound over the rows;
    /// when given explicitly it must cover every row's support.
    static QMatrix from_rows(std::vector<QVector> rows,
                             std::optional<std::size_t> ncols = std::nullopt);
    static QMatrix identity(std::size_t n);
    /// Coordinate shift on n coordinates: unit(i) -> unit(i+1), unit(n-1) -> 0.
    static QMatrix coordinate_shift(std::size_t n);

    const std::vector<QVector>& rows() const { return rows_; }
    std::size_t nrows() const { return rows_.size(); }
    std::size_t ncols() const { return ncols_; }

    /// Matrix-vector product; requires v's support within [0, ncols).
    QVector apply(const QVector& v) const;
    /// this * other, with other zero-padded to ncols() rows if shorter;
    /// result is nrows() x other.ncols().
    QMatrix multiply(const QMatrix& other) const;

    friend bool operator==(const QMatrix&, const QMatrix&) = default;

private:
    std::vector<QVector> rows_;
    std::size_t ncols_ = 0;
};

/// Nonzero coefficients c_i, keyed by row index, with sum_i c_i * row_i = 0.
struct DependenceWitness {
    std::map<std::size_t, Rational> coefficients;

    std::vector<std::size_t> indices() const;
    /// Exact check of sum_i c_i * rows[i] == 0 with every c_i nonzero.
    bool verifies(const std::vector<QVector>& rows) const;
    std::string str() const;
};

/// Incremental exact row-space builder. Internally keeps an integer
/// echelon (gcd-reduced cross-multiplication pivots, no rational
/// division), optionally with combination tracking so that the first
/// dependent row yields an integer dependence witness.
class SpanBuilder {
public:
    explicit SpanBuilder(std::size_t ncols, bool track = false);

    /// Returns true iff the row enlarged the span. With tracking on, a
    /// false return records a witness over the rows added so far.
    bool add(const QVector& row);
    std::size_t rank() const { return echelon_.size(); }
    std::size_t added() const { return added_; }
    /// Witness for the most recent dependent add (tracking only).
    const std::optional<DependenceWitness>& last_witness() const { return witness_; }
    /// Membership of v in the span of the rows added so far.
    bool contains(const QVector& v) const;

private:
    struct Row {
        std::vector<BigInt> a;  // length ncols
        std::vector<BigInt> t;  // combination over input rows (tracking only)
        std::size_t pivot;
    };

    std::vector<BigInt> to_integer(const QVector& v) const;
    void reduce(std::vector<BigInt>& a, std::vector<BigInt>* t) const;

    std::size_t ncols_;
    bool track_;
    std::size_t added_ = 0;
    std::vector<Row> echelon_;  // sorted by pivot
    std::optional<DependenceWitness> witness_;
};

/// Finite-dimensional subspace in canonical form: reduced row-echelon
/// basis, pivots strictly increasing, pivot entries 1. Two subspaces are
/// equal iff their bases compare equal.
class Subspace {
public:
    Subspace() = default;  // zero subspace
    static Subspace from_generators(const std::vector<QVector>& generators);
    static Subspace sum(const Subspace& a, const Subspace& b);

    const std::vector<QVector>& basis() const { return basis_; }
    std::size_t dim() const { return basis_.size(); }

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    std::vector<QVector> basis_;
};

/// Row rank by exact integer-pivot elimination.
std::size_t rank(const QMatrix& m);

/// Exact membership of v in s.
bool in_span(const QVector& v, const Subspace& s);

/// Exact membership of v in the sum s + vsub.
bool in_span_plus(const QVector& v, const Subspace& s, const Subspace& vsub);

/// First dependent row, as nonzero coefficients over the preceding rows;
/// nullopt when the rows are independent.
std::optional<DependenceWitness> dependence_witness(const QMatrix& rows);

} // namespace orbitspan
