#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "symcone/rational.hpp"

namespace symcone::lp {

/// Exact phase-one simplex with Bland's rule.
///
/// Finds lambda >= 0 with sum_j lambda_j * columns[j] = target, or reports
/// infeasibility. The returned solution is basic, so at most
/// rank(columns) of its entries are positive.
inline std::optional<QVector> nonnegative_combination(const std::vector<QVector>& columns,
                                                      const QVector& target) {
  const std::size_t m = target.size();
  const std::size_t k = columns.size();
  // Tableau rows: [ A | I | b ], one artificial per row, rows flipped so b >= 0.
  const std::size_t width = k + m + 1;
  std::vector<QVector> t(m, QVector(width, Rational(0)));
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = target[i] < 0;
    for (std::size_t j = 0; j < k; ++j) {
      t[i][j] = flip ? Rational(-columns[j][i]) : columns[j][i];
    }
    t[i][k + i] = 1;
    t[i][width - 1] = flip ? Rational(-target[i]) : target[i];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    basis[i] = k + i;
  }
  // Phase-one objective row: reduced costs of "minimise the sum of artificials".
  QVector cost(width, Rational(0));
  for (std::size_t j = 0; j < width; ++j) {
    if (j >= k && j + 1 < width) {
      continue;
    }
    for (std::size_t i = 0; i < m; ++i) {
      cost[j] -= t[i][j];
    }
  }
  std::vector<bool> in_basis(width, false);
  for (auto b : basis) {
    in_basis[b] = true;
  }

  for (;;) {
    std::size_t entering = width;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (!in_basis[j] && cost[j] < 0) {
        entering = j;
        break;
      }
    }
    if (entering == width) {
      break;
    }
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][entering] > 0) {
        Rational ratio = t[i][width - 1] / t[i][entering];
        if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
    }
    if (leave == m) {
      break;  // phase one is bounded below by zero
    }
    const Rational pivot = t[leave][entering];
    for (auto& x : t[leave]) {
      x /= pivot;
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (i != leave && t[i][entering] != 0) {
        const Rational f = t[i][entering];
        for (std::size_t j = 0; j < width; ++j) {
          t[i][j] -= f * t[leave][j];
        }
      }
    }
    if (cost[entering] != 0) {
      const Rational f = cost[entering];
      for (std::size_t j = 0; j < width; ++j) {
        cost[j] -= f * t[leave][j];
      }
    }
    in_basis[basis[leave]] = false;
    in_basis[entering] = true;
    basis[leave] = entering;
  }

  QVector solution(k, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] >= k && t[i][width - 1] != 0) {
      return std::nullopt;
    }
    if (basis[i] < k) {
      solution[basis[i]] = t[i][width - 1];
    }
  }
  return solution;
}

} // namespace symcone::lp
