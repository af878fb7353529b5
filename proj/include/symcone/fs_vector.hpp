#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "symcone/errors.hpp"
#include "symcone/rational.hpp"

namespace symcone {

/// A finite-support vector of R^infinity with exact rational coordinates.
///
/// Coordinates are indexed from 1. Only nonzero entries are stored, in
/// strictly increasing index order, so the width is the last stored index
/// and the zero vector has width 0.
class FsVector {
public:
  using Entry = std::pair<std::size_t, Rational>;

  FsVector() = default;

  /// Builds from coordinates 1..values.size().
  explicit FsVector(std::span<const Rational> values) {
    for (std::size_t k = 0; k < values.size(); ++k) {
      if (values[k] != 0) {
        entries_.emplace_back(k + 1, values[k]);
        entries_.back().second.canonicalize();
      }
    }
  }

  explicit FsVector(std::span<const Integer> values) {
    for (std::size_t k = 0; k < values.size(); ++k) {
      if (values[k] != 0) {
        entries_.emplace_back(k + 1, Rational(values[k]));
      }
    }
  }

  FsVector(std::initializer_list<Rational> values)
      : FsVector(std::span<const Rational>(values.begin(), values.size())) {}

  static FsVector from_ints(std::initializer_list<long> values) {
    QVector dense;
    for (long v : values) {
      dense.emplace_back(v);
    }
    return FsVector(std::span<const Rational>(dense));
  }

  /// Sparse construction; indices must be positive and distinct.
  static FsVector from_entries(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    FsVector v;
    for (auto& [index, value] : entries) {
      if (index == 0) {
        throw PreconditionError("coordinate indices start at 1");
      }
      if (!v.entries_.empty() && v.entries_.back().first == index) {
        throw PreconditionError("duplicate coordinate index " + std::to_string(index));
      }
      if (value != 0) {
        value.canonicalize();
        v.entries_.emplace_back(index, std::move(value));
      }
    }
    return v;
  }

  /// The unit vector e_i.
  static FsVector unit(std::size_t i) {
    if (i == 0) {
      throw PreconditionError("coordinate indices start at 1");
    }
    FsVector v;
    v.entries_.emplace_back(i, Rational(1));
    return v;
  }

  const std::vector<Entry>& entries() const { return entries_; }

  std::size_t width() const { return entries_.empty() ? 0 : entries_.back().first; }
  std::size_t support_size() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  std::vector<std::size_t> support() const {
    std::vector<std::size_t> s;
    s.reserve(entries_.size());
    for (const auto& e : entries_) {
      s.push_back(e.first);
    }
    return s;
  }

  /// Coordinate i (1-based); zero outside the support.
  Rational operator[](std::size_t i) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                               [](const Entry& e, std::size_t idx) { return e.first < idx; });
    if (it != entries_.end() && it->first == i) {
      return it->second;
    }
    return Rational(0);
  }

  /// The 1-norm |u_1| + ... + |u_n|.
  Rational norm1() const {
    Rational total = 0;
    for (const auto& e : entries_) {
      total += abs(e.second);
    }
    return total;
  }

  bool is_nonnegative() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Entry& e) { return e.second > 0; });
  }

  bool is_integral() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Entry& e) { return is_integer(e.second); });
  }

  /// Coordinates 1..n; requires width() <= n.
  QVector dense(std::size_t n) const {
    require_width(n);
    QVector out(n, Rational(0));
    for (const auto& e : entries_) {
      out[e.first - 1] = e.second;
    }
    return out;
  }

  /// Integer coordinates 1..n; requires an integral vector of width <= n.
  ZVector dense_integer(std::size_t n) const {
    require_width(n);
    ZVector out(n, Integer(0));
    for (const auto& e : entries_) {
      if (!is_integer(e.second)) {
        throw RejectedInput("vector has non-integral coordinate " + to_string(e.second));
      }
      out[e.first - 1] = e.second.get_num();
    }
    return out;
  }

  void require_width(std::size_t n) const {
    if (width() > n) {
      throw PreconditionError("vector of width " + std::to_string(width()) +
                              " does not fit in dimension " + std::to_string(n));
    }
  }

  friend FsVector operator+(const FsVector& a, const FsVector& b) {
    const std::size_t n = std::max(a.width(), b.width());
    QVector x = a.dense(n);
    const QVector y = b.dense(n);
    for (std::size_t k = 0; k < n; ++k) {
      x[k] += y[k];
    }
    return FsVector(std::span<const Rational>(x));
  }

  friend FsVector operator*(const Rational& scalar, const FsVector& a) {
    FsVector out;
    if (scalar == 0) {
      return out;
    }
    for (const auto& [index, value] : a.entries_) {
      out.entries_.emplace_back(index, scalar * value);
    }
    return out;
  }

  friend FsVector operator-(const FsVector& a) { return Rational(-1) * a; }
  friend FsVector operator-(const FsVector& a, const FsVector& b) { return a + (-b); }

  friend bool operator==(const FsVector& a, const FsVector& b) { return a.entries_ == b.entries_; }

  /// Lexicographic order on the dense coordinate sequence (zero padded).
  friend bool operator<(const FsVector& a, const FsVector& b) {
    const std::size_t n = std::max(a.width(), b.width());
    for (std::size_t i = 1; i <= n; ++i) {
      const Rational x = a[i];
      const Rational y = b[i];
      if (x != y) {
        return x < y;
      }
    }
    return false;
  }

  std::string str() const {
    std::string s = "(";
    const std::size_t n = std::max<std::size_t>(width(), 1);
    for (std::size_t i = 1; i <= n; ++i) {
      if (i > 1) {
        s += ",";
      }
      s += to_string((*this)[i]);
    }
    return s + ")";
  }

private:
  std::vector<Entry> entries_;
};

inline std::ostream& operator<<(std::ostream& os, const FsVector& v) { return os << v.str(); }

inline FsVector to_fs(const ZVector& z) { return FsVector(std::span<const Integer>(z)); }
inline FsVector to_fs(const QVector& q) { return FsVector(std::span<const Rational>(q)); }

inline Rational dot(const FsVector& a, const FsVector& b) {
  Rational total = 0;
  for (const auto& [index, value] : a.entries()) {
    total += value * b[index];
  }
  return total;
}

} // namespace symcone
