#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "symcone/rational.hpp"

namespace symcone::linalg {

inline Integer dot(const ZVector& a, const ZVector& b) {
  Integer s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    s += a[k] * b[k];
  }
  return s;
}

inline Rational dot(const QVector& a, const QVector& b) {
  Rational s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    s += a[k] * b[k];
  }
  return s;
}

inline bool is_zero(const ZVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

/// Divides by the gcd of the coordinates; the zero vector is left alone.
inline void make_primitive(ZVector& v) {
  Integer g = 0;
  for (const auto& x : v) {
    g = gcd(g, x);
  }
  if (g > 1) {
    for (auto& x : v) {
      x /= g;
    }
  }
}

/// Scales a rational vector to a primitive integer vector with the same direction.
inline ZVector primitive_from(const QVector& v) {
  Integer l = 1;
  for (const auto& x : v) {
    l = lcm(l, x.get_den());
  }
  ZVector out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    out[k] = v[k].get_num() * (l / v[k].get_den());
  }
  make_primitive(out);
  return out;
}

inline QVector to_rational(const ZVector& v) {
  QVector out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    out[k] = v[k];
  }
  return out;
}

inline ZVector negated(ZVector v) {
  for (auto& x : v) {
    x = -x;
  }
  return v;
}

/// Reduced row echelon form over Q; returns the nonzero rows and the pivot columns.
inline std::pair<std::vector<QVector>, std::vector<std::size_t>> rref(std::vector<QVector> rows,
                                                                      std::size_t n) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][col] == 0) {
      ++p;
    }
    if (p == rows.size()) {
      continue;
    }
    std::swap(rows[p], rows[r]);
    const Rational inv = 1 / rows[r][col];
    for (auto& x : rows[r]) {
      x *= inv;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r && rows[i][col] != 0) {
        const Rational f = rows[i][col];
        for (std::size_t k = 0; k < n; ++k) {
          rows[i][k] -= f * rows[r][k];
        }
      }
    }
    pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  return {rows, pivots};
}

/// Rank over Q of integer rows. Stops early once `stop_at` is reached.
inline std::size_t rank(std::vector<ZVector> rows, std::size_t n,
                        std::size_t stop_at = static_cast<std::size_t>(-1)) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][col] == 0) {
      ++p;
    }
    if (p == rows.size()) {
      continue;
    }
    std::swap(rows[p], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][col] != 0) {
        const Integer a = rows[r][col];
        const Integer b = rows[i][col];
        for (std::size_t k = col; k < n; ++k) {
          rows[i][k] = a * rows[i][k] - b * rows[r][k];
        }
        make_primitive(rows[i]);
      }
    }
    ++r;
    if (r >= stop_at) {
      return r;
    }
  }
  return r;
}

/// Canonical integer basis of span(rows): the RREF rows scaled to primitive
/// integer vectors (pivot entries positive).
inline std::vector<ZVector> canonical_basis(const std::vector<ZVector>& rows, std::size_t n) {
  std::vector<QVector> q;
  q.reserve(rows.size());
  for (const auto& r : rows) {
    q.push_back(to_rational(r));
  }
  auto [echelon, pivots] = rref(std::move(q), n);
  std::vector<ZVector> out;
  for (const auto& row : echelon) {
    out.push_back(primitive_from(row));
  }
  return out;
}

/// Canonical basis of the orthogonal complement of span(rows) in Q^n.
inline std::vector<ZVector> orthogonal_complement(const std::vector<ZVector>& rows, std::size_t n) {
  std::vector<QVector> q;
  for (const auto& r : rows) {
    q.push_back(to_rational(r));
  }
  auto [echelon, pivots] = rref(std::move(q), n);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) {
    is_pivot[p] = true;
  }
  std::vector<ZVector> kernel;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) {
      continue;
    }
    QVector v(n, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      v[pivots[i]] = -echelon[i][free];
    }
    kernel.push_back(primitive_from(v));
  }
  return canonical_basis(kernel, n);
}

/// Orthogonal projection of v onto the complement of span(basis), scaled to
/// a primitive integer vector.
inline ZVector project_out(const ZVector& v, const std::vector<ZVector>& basis) {
  if (basis.empty()) {
    ZVector out = v;
    make_primitive(out);
    return out;
  }
  const std::size_t m = basis.size();
  // Solve (B B^T) c = B v, then v - B^T c.
  std::vector<QVector> system(m, QVector(m + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      system[i][j] = dot(basis[i], basis[j]);
    }
    system[i][m] = dot(basis[i], v);
  }
  auto [echelon, pivots] = rref(system, m + 1);
  QVector coeff(m, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    coeff[pivots[i]] = echelon[i][m];
  }
  QVector out = to_rational(v);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < v.size(); ++k) {
      out[k] -= coeff[i] * basis[i][k];
    }
  }
  return primitive_from(out);
}

/// Some nonzero x with M x = 0 where M has the given columns, if one exists.
inline std::optional<QVector> kernel_vector(const std::vector<QVector>& columns, std::size_t rows) {
  const std::size_t k = columns.size();
  std::vector<QVector> m(rows, QVector(k));
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < rows; ++i) {
      m[i][j] = columns[j][i];
    }
  }
  auto [echelon, pivots] = rref(std::move(m), k);
  std::vector<bool> is_pivot(k, false);
  for (auto p : pivots) {
    is_pivot[p] = true;
  }
  for (std::size_t free = 0; free < k; ++free) {
    if (is_pivot[free]) {
      continue;
    }
    QVector x(k, Rational(0));
    x[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      x[pivots[i]] = -echelon[i][free];
    }
    return x;
  }
  return std::nullopt;
}

} // namespace symcone::linalg
