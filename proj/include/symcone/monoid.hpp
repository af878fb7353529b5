#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "symcone/chain.hpp"
#include "symcone/cone.hpp"
#include "symcone/errors.hpp"
#include "symcone/generator_set.hpp"
#include "symcone/linalg.hpp"
#include "symcone/orbit.hpp"
#include "symcone/parallel.hpp"

namespace symcone {

/// Hilbert basis of the monoid c cap Z^n of a pointed rational cone.
struct HilbertBasis {
  std::size_t dim = 0;
  std::vector<FsVector> elements;  ///< sorted lexicographically
  Integer max_norm = 0;            ///< largest 1-norm, 0 for the zero cone

  std::size_t max_support() const {
    std::size_t s = 0;
    for (const auto& h : elements) {
      s = std::max(s, h.support_size());
    }
    return s;
  }
};

inline void require_integral(const GeneratorSet& a, const char* operation) {
  if (!a.integral()) {
    throw RejectedInput(std::string(operation) +
                        " requires integral generators: finite generation of the monoids is only "
                        "established for lattice data, and a generator like (1,a) with a > 1 "
                        "irrational yields a cone whose lattice points are not equivariantly "
                        "finitely generated");
  }
}

namespace detail {

using I64Vec = std::vector<std::int64_t>;

struct I64VecHash {
  std::size_t operator()(const I64Vec& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw ResourceError("integer overflow in lattice point arithmetic");
  }
  return r;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw ResourceError("integer overflow in lattice point arithmetic");
  }
  return r;
}

inline I64Vec to_i64(const ZVector& z) {
  I64Vec out;
  out.reserve(z.size());
  for (const auto& x : z) {
    out.push_back(to_int64(x));
  }
  return out;
}

inline FsVector from_i64(const I64Vec& x) {
  ZVector z;
  z.reserve(x.size());
  for (auto c : x) {
    z.emplace_back(static_cast<long>(c));
  }
  return to_fs(z);
}

inline std::int64_t norm1(const I64Vec& x) {
  std::int64_t s = 0;
  for (auto c : x) {
    s = checked_add(s, c < 0 ? -c : c);
  }
  return s;
}

/// Membership in {x : <a,x> >= 0, <b,x> = 0} with machine integers.
class I64Cone {
public:
  explicit I64Cone(const LocalCone& c) {
    for (const auto& a : c.ineqs()) {
      ineqs_.push_back(to_i64(a));
    }
    for (const auto& b : c.eqs()) {
      eqs_.push_back(to_i64(b));
    }
  }

  bool contains(const I64Vec& x) const {
    for (const auto& a : ineqs_) {
      if (dot(a, x) < 0) {
        return false;
      }
    }
    for (const auto& b : eqs_) {
      if (dot(b, x) != 0) {
        return false;
      }
    }
    return true;
  }

private:
  static std::int64_t dot(const I64Vec& a, const I64Vec& x) {
    std::int64_t s = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
      s = checked_add(s, checked_mul(a[k], x[k]));
    }
    return s;
  }

  std::vector<I64Vec> ineqs_;
  std::vector<I64Vec> eqs_;
};

inline void require_pointed_nonnegative(const LocalCone& c, const char* operation) {
  if (!c.is_pointed()) {
    throw PreconditionError(std::string(operation) +
                            " needs a pointed cone; with lineality the Hilbert basis is not unique");
  }
  for (const auto& r : c.rays()) {
    for (const auto& x : r) {
      if (x < 0) {
        throw RejectedInput(std::string(operation) + " needs a cone inside the nonnegative orthant");
      }
    }
  }
}

/// Coordinates on which the projection of span(rays) is injective.
inline std::vector<std::size_t> injective_coordinates(const std::vector<ZVector>& rays, std::size_t n,
                                                      std::size_t d) {
  std::vector<std::size_t> chosen;
  std::vector<ZVector> cols;
  for (std::size_t j = 0; j < n && chosen.size() < d; ++j) {
    ZVector col;
    for (const auto& r : rays) {
      col.push_back(r[j]);
    }
    cols.push_back(col);
    if (linalg::rank(cols, rays.size()) == chosen.size() + 1) {
      chosen.push_back(j);
    } else {
      cols.pop_back();
    }
  }
  return chosen;
}

/// det(M) and adj(M) = det(M) M^-1 for a nonsingular square integer matrix
/// given by its columns.
inline std::pair<Integer, std::vector<ZVector>> det_adjugate(const std::vector<ZVector>& columns) {
  const std::size_t d = columns.size();
  std::vector<QVector> aug(d, QVector(2 * d, Rational(0)));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      aug[i][j] = columns[j][i];
    }
    aug[i][d + i] = 1;
  }
  Rational det = 1;
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t p = col;
    while (aug[p][col] == 0) {
      ++p;
    }
    if (p != col) {
      std::swap(aug[p], aug[col]);
      det = -det;
    }
    const Rational pivot = aug[col][col];
    det *= pivot;
    for (auto& x : aug[col]) {
      x /= pivot;
    }
    for (std::size_t i = 0; i < d; ++i) {
      if (i != col && aug[i][col] != 0) {
        const Rational f = aug[i][col];
        for (std::size_t k = 0; k < 2 * d; ++k) {
          aug[i][k] -= f * aug[col][k];
        }
      }
    }
  }
  std::vector<ZVector> adj(d, ZVector(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const Rational v = det * aug[i][d + j];
      adj[i][j] = v.get_num();
    }
  }
  return {det.get_num(), adj};
}

inline constexpr std::int64_t kMaxParallelepiped = 5'000'000;

/// Nonzero lattice points of the half-open parallelepiped spanned by the
/// simplex rays (full coordinates `full`, projected coordinates `proj`).
inline std::vector<I64Vec> parallelepiped_points(const std::vector<ZVector>& full,
                                                 const std::vector<ZVector>& proj, std::size_t n) {
  const std::size_t d = proj.size();
  auto [det, adj] = det_adjugate(proj);
  const Integer abs_det = abs(det);
  if (abs_det == 1) {
    return {};
  }
  if (abs_det > kMaxParallelepiped) {
    throw ResourceError("simplicial cone of determinant " + abs_det.get_str() +
                        " exceeds the parallelepiped enumeration limit");
  }
  const std::int64_t D = abs_det.get_si();
  const std::int64_t s = sgn(det);
  // Moving by e_j in projected space shifts lambda by adj[:, j] / det.
  std::vector<I64Vec> steps(d, I64Vec(d));
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) {
      const Integer step = Integer(s) * adj[i][j];
      steps[j][i] = ((to_int64(step) % D) + D) % D;
    }
  }
  std::vector<I64Vec> rays;
  for (const auto& r : full) {
    rays.push_back(to_i64(r));
  }
  std::unordered_set<I64Vec, I64VecHash> seen;
  std::vector<I64Vec> frontier{I64Vec(d, 0)};
  seen.insert(frontier.front());
  std::vector<I64Vec> out;
  while (!frontier.empty()) {
    std::vector<I64Vec> next;
    for (const auto& k : frontier) {
      for (const auto& step : steps) {
        I64Vec m(d);
        for (std::size_t i = 0; i < d; ++i) {
          m[i] = (k[i] + step[i]) % D;
        }
        if (seen.insert(m).second) {
          next.push_back(std::move(m));
        }
      }
    }
    frontier = std::move(next);
  }
  for (const auto& k : seen) {
    if (std::all_of(k.begin(), k.end(), [](std::int64_t c) { return c == 0; })) {
      continue;
    }
    I64Vec x(n, 0);
    bool integral = true;
    for (std::size_t c = 0; c < n && integral; ++c) {
      std::int64_t acc = 0;
      for (std::size_t i = 0; i < d; ++i) {
        acc = checked_add(acc, checked_mul(k[i], rays[i][c]));
      }
      integral = acc % D == 0;
      x[c] = acc / D;
    }
    if (integral) {
      out.push_back(std::move(x));
    }
  }
  return out;
}

/// Placing triangulation of a pointed cone with linearly independent
/// projected rays: the first simplex is the greedy independent prefix of the
/// ray order; each further ray is joined to every boundary facet it sees.
inline std::vector<std::vector<std::size_t>> placing_triangulation(const std::vector<ZVector>& proj) {
  const std::size_t d = proj.empty() ? 0 : proj.front().size();
  std::vector<std::vector<std::size_t>> simplices;
  if (d == 0) {
    return simplices;
  }
  std::vector<std::size_t> first;
  std::vector<ZVector> picked;
  for (std::size_t i = 0; i < proj.size() && first.size() < d; ++i) {
    picked.push_back(proj[i]);
    if (linalg::rank(picked, d) == first.size() + 1) {
      first.push_back(i);
    } else {
      picked.pop_back();
    }
  }
  if (first.size() != d) {
    throw Error("internal: rays do not span the projected space");
  }
  // Boundary facets (sorted ray indices) with normals pointing into the union.
  std::map<std::vector<std::size_t>, ZVector> boundary;
  auto add_simplex = [&](std::vector<std::size_t> simplex) {
    std::sort(simplex.begin(), simplex.end());
    for (std::size_t drop = 0; drop < simplex.size(); ++drop) {
      std::vector<std::size_t> facet;
      std::vector<ZVector> rows;
      for (std::size_t k = 0; k < simplex.size(); ++k) {
        if (k != drop) {
          facet.push_back(simplex[k]);
          rows.push_back(proj[simplex[k]]);
        }
      }
      auto it = boundary.find(facet);
      if (it != boundary.end()) {
        boundary.erase(it);
        continue;
      }
      ZVector normal = linalg::orthogonal_complement(rows, d).front();
      if (linalg::dot(normal, proj[simplex[drop]]) < 0) {
        normal = linalg::negated(std::move(normal));
      }
      boundary.emplace(std::move(facet), std::move(normal));
    }
    simplices.push_back(std::move(simplex));
  };
  add_simplex(first);
  for (std::size_t v = 0; v < proj.size(); ++v) {
    if (std::find(first.begin(), first.end(), v) != first.end()) {
      continue;
    }
    std::vector<std::vector<std::size_t>> visible;
    for (const auto& [facet, normal] : boundary) {
      if (linalg::dot(normal, proj[v]) < 0) {
        visible.push_back(facet);
      }
    }
    for (auto& facet : visible) {
      facet.push_back(v);
      add_simplex(std::move(facet));
    }
  }
  return simplices;
}

inline HilbertBasis make_basis(std::size_t n, std::vector<I64Vec> points) {
  HilbertBasis hb;
  hb.dim = n;
  for (const auto& p : points) {
    hb.elements.push_back(from_i64(p));
    hb.max_norm = std::max<Integer>(hb.max_norm, Integer(static_cast<long>(norm1(p))));
  }
  std::sort(hb.elements.begin(), hb.elements.end());
  return hb;
}

} // namespace detail

/// Hilbert basis of c cap Z^n for a pointed cone inside the nonnegative orthant.
inline HilbertBasis hilbert_basis(const LocalCone& c) {
  detail::require_pointed_nonnegative(c, "hilbert_basis");
  const std::size_t n = c.dim();
  const std::size_t d = c.span_dim();
  if (c.is_zero()) {
    return detail::make_basis(n, {});
  }
  const auto& rays = c.rays();
  const auto coords = detail::injective_coordinates(rays, n, d);
  std::vector<ZVector> proj;
  for (const auto& r : rays) {
    ZVector p;
    for (auto j : coords) {
      p.push_back(r[j]);
    }
    proj.push_back(std::move(p));
  }

  std::unordered_set<detail::I64Vec, detail::I64VecHash> candidates;
  for (const auto& r : rays) {
    candidates.insert(detail::to_i64(r));
  }
  for (const auto& simplex : detail::placing_triangulation(proj)) {
    std::vector<ZVector> full;
    std::vector<ZVector> sp;
    for (auto i : simplex) {
      full.push_back(rays[i]);
      sp.push_back(proj[i]);
    }
    for (auto& x : detail::parallelepiped_points(full, sp, n)) {
      candidates.insert(std::move(x));
    }
  }

  std::vector<detail::I64Vec> ordered(candidates.begin(), candidates.end());
  std::sort(ordered.begin(), ordered.end(), [](const detail::I64Vec& a, const detail::I64Vec& b) {
    const auto na = detail::norm1(a);
    const auto nb = detail::norm1(b);
    return na != nb ? na < nb : a < b;
  });
  // Every candidate lies in c; x is reducible iff x - h is in c for an
  // irreducible h of smaller norm.
  const detail::I64Cone cone(c);
  std::vector<detail::I64Vec> irreducible;
  for (const auto& x : ordered) {
    const auto nx = detail::norm1(x);
    bool reducible = false;
    for (const auto& h : irreducible) {
      if (detail::norm1(h) >= nx) {
        break;
      }
      detail::I64Vec diff(n);
      bool nonneg = true;
      for (std::size_t k = 0; k < n && nonneg; ++k) {
        diff[k] = x[k] - h[k];
        nonneg = diff[k] >= 0;
      }
      if (nonneg && cone.contains(diff)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) {
      irreducible.push_back(x);
    }
  }
  return detail::make_basis(n, std::move(irreducible));
}

/// Irreducible lattice points of c with 1-norm <= bound, by enumerating every
/// nonnegative integer point of that norm. Exact for all elements of norm <=
/// bound, so it equals hilbert_basis(c) once bound >= its max_norm.
inline HilbertBasis brute_force_hilbert(const LocalCone& c, std::int64_t bound,
                                        std::size_t budget = 2'000'000) {
  detail::require_pointed_nonnegative(c, "brute_force_hilbert");
  if (bound <= 0) {
    throw PreconditionError("brute_force_hilbert needs a positive norm bound");
  }
  const std::size_t n = c.dim();
  // Number of points with norm <= bound is binom(bound + n, n).
  Integer total = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    total = total * (bound + static_cast<long>(k)) / static_cast<long>(k);
  }
  if (total > budget) {
    throw ResourceError("brute-force enumeration of " + total.get_str() + " points exceeds the budget of " +
                        std::to_string(budget));
  }
  const detail::I64Cone cone(c);
  std::vector<detail::I64Vec> points;
  detail::I64Vec x(n, 0);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t k, std::int64_t left) {
    if (k == n) {
      if (cone.contains(x)) {
        points.push_back(x);
      }
      return;
    }
    for (std::int64_t v = 0; v <= left; ++v) {
      x[k] = v;
      rec(k + 1, left - v);
    }
    x[k] = 0;
  };
  rec(0, bound);
  const std::unordered_set<detail::I64Vec, detail::I64VecHash> members(points.begin(), points.end());
  std::sort(points.begin(), points.end(), [](const detail::I64Vec& a, const detail::I64Vec& b) {
    return detail::norm1(a) < detail::norm1(b);
  });
  std::vector<detail::I64Vec> irreducible;
  for (const auto& p : points) {
    const auto np = detail::norm1(p);
    if (np == 0) {
      continue;
    }
    bool reducible = false;
    for (const auto& y : points) {
      const auto ny = detail::norm1(y);
      if (2 * ny > np) {
        break;
      }
      if (ny == 0) {
        continue;
      }
      detail::I64Vec diff(n);
      bool nonneg = true;
      for (std::size_t k = 0; k < n && nonneg; ++k) {
        diff[k] = p[k] - y[k];
        nonneg = diff[k] >= 0;
      }
      if (nonneg && members.count(diff) != 0) {
        reducible = true;
        break;
      }
    }
    if (!reducible) {
      irreducible.push_back(p);
    }
  }
  return detail::make_basis(n, std::move(irreducible));
}

/// Writes x as a sum of basis elements with multiplicities, searching
/// depth-first over nonnegative remainders. Elements must be nonnegative.
inline std::optional<std::vector<std::pair<FsVector, Integer>>> decompose_over(
    const std::vector<FsVector>& elements, const FsVector& x, std::size_t n) {
  std::vector<detail::I64Vec> basis;
  for (const auto& h : elements) {
    basis.push_back(detail::to_i64(h.dense_integer(n)));
  }
  std::unordered_set<detail::I64Vec, detail::I64VecHash> dead;
  std::vector<std::size_t> used;
  std::function<bool(const detail::I64Vec&, std::size_t)> rec = [&](const detail::I64Vec& rest,
                                                                   std::size_t from) {
    if (std::all_of(rest.begin(), rest.end(), [](std::int64_t c) { return c == 0; })) {
      return true;
    }
    detail::I64Vec key = rest;
    key.push_back(static_cast<std::int64_t>(from));
    if (dead.count(key) != 0) {
      return false;
    }
    // Multisets are generated in non-decreasing index order.
    for (std::size_t i = from; i < basis.size(); ++i) {
      detail::I64Vec next(n);
      bool ok = true;
      for (std::size_t k = 0; k < n && ok; ++k) {
        next[k] = rest[k] - basis[i][k];
        ok = next[k] >= 0;
      }
      if (!ok) {
        continue;
      }
      used.push_back(i);
      if (rec(next, i)) {
        return true;
      }
      used.pop_back();
    }
    dead.insert(std::move(key));
    return false;
  };
  if (!rec(detail::to_i64(x.dense_integer(n)), 0)) {
    return std::nullopt;
  }
  std::vector<std::pair<FsVector, Integer>> out;
  for (auto i : used) {
    if (!out.empty() && out.back().first == elements[i]) {
      out.back().second += 1;
    } else {
      out.emplace_back(elements[i], Integer(1));
    }
  }
  return out;
}

/// hilbert_basis(localize(A, n)) for n = 1..n_max.
inline std::vector<HilbertBasis> hilbert_chain(const GeneratorSet& a, std::size_t n_max,
                                               std::size_t orbit_cap = kDefaultOrbitCap,
                                               std::size_t threads = 1) {
  require_nonnegative(a, "hilbert_chain");
  require_integral(a, "hilbert_chain");
  return parallel_map(n_max, threads,
                      [&](std::size_t k) { return hilbert_basis(localize(a, k + 1, orbit_cap)); });
}

/// Window-certified stabilization of a chain of Hilbert bases H_1..H_{n_max}.
struct HbStabilization {
  /// Smallest m with H_n = Sym(n)(H_m) for every n in (m, n_max]; equal to
  /// n_max when nothing stabilizes inside the window.
  std::size_t r_hilbert = 0;
  /// r_hilbert < n_max, i.e. at least one dimension past m confirms it.
  bool observed = false;
  /// Sym(n)(H_m) is contained in H_n for all m <= n in the window.
  bool containment = true;
  std::vector<Integer> norms;
  std::vector<std::size_t> support_sizes;
  bool norms_nonincreasing = true;
  /// First n > r_hilbert whose norm exceeds the previous one.
  std::optional<std::size_t> norm_rise_at;
  bool verdict = false;
};

inline HbStabilization check_hb_stabilization(const std::vector<HilbertBasis>& bases) {
  HbStabilization out;
  const std::size_t n_max = bases.size();
  if (n_max == 0) {
    return out;
  }
  auto reps = [&](std::size_t m, std::size_t n) {
    std::vector<FsVector> r;
    for (const auto& h : bases[m - 1].elements) {
      r.push_back(canonical_rep(h, n));
    }
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    return r;
  };
  for (const auto& b : bases) {
    out.norms.push_back(b.max_norm);
    out.support_sizes.push_back(b.max_support());
  }
  for (std::size_t n = 1; n <= n_max; ++n) {
    const auto target = reps(n, n);
    for (std::size_t m = 1; m < n && out.containment; ++m) {
      const auto small = reps(m, n);
      out.containment = std::includes(target.begin(), target.end(), small.begin(), small.end());
    }
  }
  out.r_hilbert = n_max;
  for (std::size_t m = n_max; m-- > 1;) {
    bool same = true;
    for (std::size_t n = m + 1; n <= n_max && same; ++n) {
      same = reps(n, n) == reps(m, n);
    }
    if (!same) {
      break;
    }
    out.r_hilbert = m;
  }
  out.observed = out.r_hilbert < n_max;
  for (std::size_t n = out.r_hilbert + 1; n <= n_max; ++n) {
    if (out.norms[n - 1] > out.norms[n - 2]) {
      out.norms_nonincreasing = false;
      out.norm_rise_at = n;
      break;
    }
  }
  out.verdict = out.observed && out.norms_nonincreasing && out.containment;
  return out;
}

/// Equivariant Gordan pipeline over the window [1, n_max].
struct GordanReport {
  std::size_t r_cone = 0;
  StabilizationCertificate cone_certificate;
  std::vector<HilbertBasis> bases;
  HbStabilization stabilization;
  std::size_t support_bound = 0;
  bool verdict = false;
};

inline GordanReport gordan(const GeneratorSet& a, std::size_t n_max,
                           std::size_t orbit_cap = kDefaultOrbitCap, std::size_t threads = 1) {
  require_nonnegative(a, "gordan");
  require_integral(a, "gordan");
  GordanReport report;
  report.cone_certificate = stability_index(a, orbit_cap);
  report.r_cone = report.cone_certificate.index;
  report.bases = hilbert_chain(a, n_max, orbit_cap, threads);
  report.stabilization = check_hb_stabilization(report.bases);
  for (const auto& s : report.stabilization.support_sizes) {
    report.support_bound = std::max(report.support_bound, s);
  }
  report.verdict = report.stabilization.verdict;
  return report;
}

struct MonoidMerge {
  std::size_t i = 0;
  std::size_t j = 0;
  FsVector merged;
  /// merged as a sum of elements of the previous Hilbert basis.
  std::vector<std::pair<FsVector, Integer>> decomposition;
};

/// merge_test for lattice points: the merged vector must lie in
/// M_{n-1} = c_prev cap Z^{n-1}, certified by a decomposition over hb_prev.
inline std::optional<MonoidMerge> monoid_merge_test(const FsVector& u, const HilbertBasis& hb_prev,
                                                    const LocalCone& c_prev) {
  if (!u.is_integral()) {
    throw RejectedInput("monoid_merge_test needs an integer vector, got " + u.str());
  }
  if (hb_prev.dim != c_prev.dim()) {
    throw PreconditionError("Hilbert basis and cone live in different dimensions");
  }
  const auto m = merge_test(u, c_prev);
  if (!m) {
    return std::nullopt;
  }
  auto parts = decompose_over(hb_prev.elements, m->merged, c_prev.dim());
  if (!parts) {
    throw Error("internal: " + m->merged.str() + " is in the cone but not generated by its Hilbert basis");
  }
  return MonoidMerge{m->i, m->j, m->merged, std::move(*parts)};
}

} // namespace symcone
