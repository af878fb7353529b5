#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "symcone/errors.hpp"
#include "symcone/fs_vector.hpp"
#include "symcone/permutation.hpp"

namespace symcone {

inline constexpr std::size_t kDefaultOrbitCap = 100000;

/// The non-decreasing arrangement of the first n coordinates of v.
inline FsVector canonical_rep(const FsVector& v, std::size_t n) {
  QVector x = v.dense(n);
  std::sort(x.begin(), x.end());
  return FsVector(std::span<const Rational>(x));
}

/// Number of distinct arrangements of v inside R^n:
/// n! / prod(multiplicity!) with the n - |supp| zeros counted as one block.
inline Integer orbit_size(const FsVector& v, std::size_t n) {
  QVector x = v.dense(n);
  std::sort(x.begin(), x.end());
  Integer count;
  mpz_fac_ui(count.get_mpz_t(), n);
  std::size_t run = 1;
  for (std::size_t k = 1; k <= x.size(); ++k) {
    if (k < x.size() && x[k] == x[k - 1]) {
      ++run;
      continue;
    }
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), run);
    count /= f;
    run = 1;
  }
  return count;
}

/// All distinct vectors sigma(v), sigma in Sym(n), in lexicographic order.
/// Generated as multiset permutations of the padded coordinates.
inline std::vector<FsVector> orbit(const FsVector& v, std::size_t n,
                                   std::size_t cap = kDefaultOrbitCap) {
  const Integer size = orbit_size(v, n);
  if (size > Integer(static_cast<unsigned long>(cap))) {
    throw ResourceError("orbit of " + v.str() + " in dimension " + std::to_string(n) + " has " +
                        size.get_str() + " elements, exceeding the orbit cap of " +
                        std::to_string(cap));
  }
  QVector x = v.dense(n);
  std::sort(x.begin(), x.end());
  std::vector<FsVector> out;
  out.reserve(size.get_ui());
  do {
    out.emplace_back(std::span<const Rational>(x));
  } while (std::next_permutation(x.begin(), x.end()));
  return out;
}

/// Union of the Sym(n)-orbits of all vectors, deduplicated and sorted.
/// The cap bounds the total number of produced vectors.
inline std::vector<FsVector> orbit_closure(const std::vector<FsVector>& vs, std::size_t n,
                                           std::size_t cap = kDefaultOrbitCap) {
  std::vector<FsVector> reps;
  for (const auto& v : vs) {
    reps.push_back(canonical_rep(v, n));
  }
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  std::vector<FsVector> out;
  for (const auto& r : reps) {
    auto o = orbit(r, n, cap);
    if (out.size() + o.size() > cap) {
      throw ResourceError("orbit closure in dimension " + std::to_string(n) +
                          " exceeds the orbit cap of " + std::to_string(cap));
    }
    out.insert(out.end(), o.begin(), o.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Some sigma in Sym(n) with sigma(from) = to; both vectors must be
/// arrangements of one another inside R^n.
inline Permutation permutation_between(const FsVector& from, const FsVector& to, std::size_t n) {
  const QVector x = from.dense(n);
  const QVector y = to.dense(n);
  std::map<Rational, std::vector<std::size_t>> targets;
  for (std::size_t k = n; k-- > 0;) {
    targets[y[k]].push_back(k + 1);
  }
  std::vector<std::size_t> images(n);
  for (std::size_t k = 0; k < n; ++k) {
    auto it = targets.find(x[k]);
    if (it == targets.end() || it->second.empty()) {
      throw PreconditionError(from.str() + " and " + to.str() + " lie in different orbits");
    }
    images[k] = it->second.back();
    it->second.pop_back();
  }
  return Permutation(std::move(images));
}

/// Order-preserving compression of the support onto 1..s.
struct Compression {
  Permutation sigma;  ///< sigma(v) = compressed; acts on [width(v)] (at least [1])
  FsVector compressed;
};

inline Compression compress(const FsVector& v) {
  const std::size_t n = std::max<std::size_t>(v.width(), 1);
  std::vector<std::size_t> images(n, 0);
  std::size_t next = 1;
  for (std::size_t i : v.support()) {
    images[i - 1] = next;
    ++next;
  }
  for (std::size_t i = 1; i <= n; ++i) {
    if (images[i - 1] == 0) {
      images[i - 1] = next++;
    }
  }
  Permutation sigma(std::move(images));
  FsVector c = apply_perm(sigma, v);
  return {std::move(sigma), std::move(c)};
}

} // namespace symcone
