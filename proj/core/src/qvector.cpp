#include "orbitspan/qvector.hpp"

namespace orbitspan {

QVector QVector::dense(std::initializer_list<Rational> values) {
    return dense(std::vector<Rational>(values));
}

QVector QVector::dense(const std::vector<Rational>& values) {
    QVector v;
    for (std::size_t i = 0; i < values.size(); ++i)
        if (!values[i].is_zero()) v.entries_.emplace(i, values[i]);
    return v;
}

QVector QVector::unit(std::size_t index) {
    QVector v;
    v.entries_.emplace(index, Rational(1));
    return v;
}

Rational QVector::at(std::size_t index) const {
    auto it = entries_.find(index);
    return it == entries_.end() ? Rational() : it->second;
}

void QVector::set(std::size_t index, Rational value) {
    if (value.is_zero())
        entries_.erase(index);
    else
        entries_[index] = std::move(value);
}

std::size_t QVector::support_bound() const {
    return entries_.empty() ? 0 : entries_.rbegin()->first + 1;
}

QVector& QVector::operator+=(const QVector& o) {
    for (const auto& [i, c] : o.entries_) {
        auto it = entries_.find(i);
        if (it == entries_.end()) {
            entries_.emplace(i, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) entries_.erase(it);
        }
    }
    return *this;
}

QVector& QVector::operator-=(const QVector& o) {
    for (const auto& [i, c] : o.entries_) {
        auto it = entries_.find(i);
        if (it == entries_.end()) {
            entries_.emplace(i, -c);
        } else {
            it->second -= c;
            if (it->second.is_zero()) entries_.erase(it);
        }
    }
    return *this;
}

QVector QVector::scaled(const Rational& c) const {
    QVector v;
    if (c.is_zero()) return v;
    for (const auto& [i, x] : entries_) v.entries_.emplace(i, x * c);
    return v;
}

std::string QVector::str() const {
    if (entries_.empty()) return "0";
    std::string s = "{";
    bool first = true;
    for (const auto& [i, c] : entries_) {
        if (!first) s += ", ";
        first = false;
        s += std::to_string(i) + ": " + c.str();
    }
    s += "}";
    return s;
}

} // namespace orbitspan
