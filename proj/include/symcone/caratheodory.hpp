#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symcone/chain.hpp"
#include "symcone/cone.hpp"
#include "symcone/errors.hpp"
#include "symcone/generator_set.hpp"
#include "symcone/linalg.hpp"
#include "symcone/lp.hpp"
#include "symcone/orbit.hpp"
#include "symcone/permutation.hpp"

namespace symcone {

struct CaratheodoryTerm {
  Rational lambda;
  std::size_t base_index = 0;  ///< index into GeneratorSet::vectors()
  Permutation perm;            ///< acts on [N], N = max(width(target), A.max_width)
  FsVector vector;             ///< apply_perm(perm, A[base_index])
};

struct CaratheodoryDecomposition {
  std::vector<CaratheodoryTerm> terms;
  FsVector target;

  FsVector recombine() const {
    FsVector sum;
    for (const auto& t : terms) {
      sum = sum + t.lambda * t.vector;
    }
    return sum;
  }
};

namespace detail {

/// One LP column: the arrangement pi(compress(A[base])) of a generator.
struct OrbitColumn {
  std::size_t base_index;
  Permutation pi;  ///< on [dim]
  FsVector vector;
};

inline std::vector<OrbitColumn> orbit_columns(const GeneratorSet& a, std::size_t dim, std::size_t cap) {
  std::vector<OrbitColumn> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].support_size() > dim) {
      continue;
    }
    const FsVector base = compress(a[i]).compressed;
    for (auto& x : orbit(base, dim, cap)) {
      if (out.size() >= cap) {
        throw ResourceError("orbit cap of " + std::to_string(cap) + " exceeded in R^" + std::to_string(dim));
      }
      Permutation pi = permutation_between(base, x, dim);
      out.push_back({i, std::move(pi), std::move(x)});
    }
  }
  return out;
}

/// Shrinks a nonnegative solution of sum lambda_j col_j = target until its
/// positive columns are linearly independent. Ties are resolved by zeroing
/// the largest eligible index.
inline void reduce_to_independent(const std::vector<QVector>& columns, QVector& lambda, std::size_t rows) {
  for (;;) {
    std::vector<std::size_t> positive;
    for (std::size_t j = 0; j < lambda.size(); ++j) {
      if (lambda[j] > 0) {
        positive.push_back(j);
      }
    }
    std::vector<QVector> cols;
    for (auto j : positive) {
      cols.push_back(columns[j]);
    }
    auto x = linalg::kernel_vector(cols, rows);
    if (!x) {
      return;
    }
    if (std::none_of(x->begin(), x->end(), [](const Rational& c) { return c > 0; })) {
      for (auto& c : *x) {
        c = -c;
      }
    }
    std::optional<Rational> step;
    std::size_t drop = 0;
    for (std::size_t k = 0; k < positive.size(); ++k) {
      if ((*x)[k] <= 0) {
        continue;
      }
      const Rational ratio = lambda[positive[k]] / (*x)[k];
      if (!step || ratio <= *step) {
        step = ratio;
        drop = k;
      }
    }
    for (std::size_t k = 0; k < positive.size(); ++k) {
      lambda[positive[k]] -= *step * (*x)[k];
    }
    lambda[positive[drop]] = 0;
  }
}

inline std::vector<QVector> dense_columns(const std::vector<OrbitColumn>& cols, std::size_t dim) {
  std::vector<QVector> out;
  out.reserve(cols.size());
  for (const auto& c : cols) {
    out.push_back(c.vector.dense(dim));
  }
  return out;
}

} // namespace detail

inline void require_support_bound_hypothesis(const GeneratorSet& a) {
  if (!a.nonnegative()) {
    throw RejectedInput(
        "decompose requires nonnegative generators: with mixed signs no bound by the support size "
        "holds, e.g. e_1 needs two terms over {(1,1),(1,-1)}");
  }
}

/// Writes u as a conic combination of at most |supp(u)| elements of Sym(A).
/// Requires nonnegative A and u in cone(Sym(A)).
inline CaratheodoryDecomposition decompose(const GeneratorSet& a, const FsVector& u,
                                           std::size_t orbit_cap = kDefaultOrbitCap) {
  require_support_bound_hypothesis(a);
  if (u.is_zero()) {
    throw PreconditionError("decompose needs a nonzero target");
  }
  const Compression cu = compress(u);
  const std::size_t s = u.support_size();
  const auto columns = detail::orbit_columns(a, s, orbit_cap);
  const auto dense = detail::dense_columns(columns, s);
  auto lambda = lp::nonnegative_combination(dense, cu.compressed.dense(s));
  if (!lambda) {
    const LocalCone cs = localize(a, s, orbit_cap);
    ZVector normal = cs.violated_constraint(cu.compressed).value_or(ZVector{});
    // Translate the normal back to the coordinates of u.
    ZVector back(std::max<std::size_t>(u.width(), 1), Integer(0));
    for (std::size_t i = 1; i <= back.size() && !normal.empty(); ++i) {
      const std::size_t k = cu.sigma(i);
      if (k <= s) {
        back[i - 1] = normal[k - 1];
      }
    }
    throw NonMemberError(u.str() + " is not in cone(Sym(A))", std::move(back));
  }
  detail::reduce_to_independent(dense, *lambda, s);

  const std::size_t big = std::max(std::max<std::size_t>(u.width(), a.max_width()), s);
  const Permutation sigma_inv = cu.sigma.extended(big).inverse();
  CaratheodoryDecomposition d;
  d.target = u;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if ((*lambda)[j] == 0) {
      continue;
    }
    const auto& col = columns[j];
    const Permutation tau = compress(a[col.base_index]).sigma.extended(big);
    Permutation perm = sigma_inv * col.pi.extended(big) * tau;
    FsVector vec = apply_perm(perm, a[col.base_index]);
    d.terms.push_back({(*lambda)[j], col.base_index, std::move(perm), std::move(vec)});
  }
  if (d.recombine() != u) {
    throw Error("internal: decomposition does not recombine to " + u.str());
  }
  return d;
}

struct MinTermsResult {
  std::size_t count = 0;
  /// A combination attaining the count: (element of Sym(n)(A), coefficient).
  std::vector<std::pair<FsVector, Rational>> combination;
  std::size_t lp_calls = 0;
};

/// Smallest k such that u is a conic combination of k elements of
/// Sym(n)(A) in R^n, by exhaustive subset search. Mixed signs allowed.
/// `budget` bounds the number of LP feasibility calls.
inline MinTermsResult min_terms(const GeneratorSet& a, const FsVector& u, std::size_t n,
                                std::size_t budget = 100000, std::size_t orbit_cap = kDefaultOrbitCap) {
  u.require_width(n);
  MinTermsResult result;
  if (u.is_zero()) {
    return result;
  }
  const auto columns = detail::orbit_columns(a, n, orbit_cap);
  const auto dense = detail::dense_columns(columns, n);
  const QVector target = u.dense(n);

  auto full = lp::nonnegative_combination(dense, target);
  ++result.lp_calls;
  if (!full) {
    throw NonMemberError(u.str() + " is not in cone(Sym(" + std::to_string(n) + ")(A))", {});
  }
  detail::reduce_to_independent(dense, *full, n);
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if ((*full)[j] != 0) {
      result.combination.emplace_back(columns[j].vector, (*full)[j]);
    }
  }
  result.count = result.combination.size();

  for (std::size_t k = 1; k < result.count; ++k) {
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) {
      pick[i] = i;
    }
    while (true) {
      if (result.lp_calls >= budget) {
        throw ResourceError("min_terms budget of " + std::to_string(budget) +
                            " LP calls exhausted; best bound found: " + std::to_string(result.count) +
                            " terms, no combination of fewer than " + std::to_string(k) + " exists");
      }
      std::vector<QVector> cols;
      for (auto j : pick) {
        cols.push_back(dense[j]);
      }
      auto sol = lp::nonnegative_combination(cols, target);
      ++result.lp_calls;
      if (sol) {
        result.count = k;
        result.combination.clear();
        for (std::size_t i = 0; i < k; ++i) {
          result.combination.emplace_back(columns[pick[i]].vector, (*sol)[i]);
        }
        return result;
      }
      // Next k-subset in lexicographic order.
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == columns.size() - k + i - 1) {
        --i;
      }
      if (i == 0) {
        break;
      }
      ++pick[i - 1];
      for (std::size_t t = i; t < k; ++t) {
        pick[t] = pick[t - 1] + 1;
      }
    }
  }
  return result;
}

} // namespace symcone
