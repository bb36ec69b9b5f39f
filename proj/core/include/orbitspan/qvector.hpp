#pragma once

#include "orbitspan/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace orbitspan {

/// Finite-support vector indexed by naturals. No stored entry is zero,
/// so support() is exactly the set of stored keys.
class QVector {
public:
    using Entries = std::map<std::size_t, Rational>;

    QVector() = default;
    /// Dense construction: entry i gets values[i]; zeros are dropped.
    static QVector dense(std::initializer_list<Rational> values);
    static QVector dense(const std::vector<Rational>& values);
    static QVector unit(std::size_t index);

    const Entries& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    /// Value at index (zero if absent).
    Rational at(std::size_t index) const;
    void set(std::size_t index, Rational value);
    /// One past the largest supported index; 0 for the zero vector.
    std::size_t support_bound() const;

    QVector& operator+=(const QVector& o);
    QVector& operator-=(const QVector& o);
    friend QVector operator+(QVector a, const QVector& b) { return a += b; }
    friend QVector operator-(QVector a, const QVector& b) { return a -= b; }
    QVector scaled(const Rational& c) const;

    friend bool operator==(const QVector&, const QVector&) = default;

    /// e.g. "{0: 1, 3: -3/7}"; "0" for the zero vector.
    std::string str() const;

private:
    Entries entries_;
};

} // namespace orbitspan
