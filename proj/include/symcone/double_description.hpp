#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "symcone/errors.hpp"
#include "symcone/linalg.hpp"
#include "symcone/rational.hpp"

namespace symcone::dd {

/// Generators of a polyhedral cone: extreme rays modulo the lineality space,
/// plus a basis of the lineality space.
struct VRep {
  std::vector<ZVector> rays;
  std::vector<ZVector> lineality;
};

/// Insertion order for constraints: support size, then lexicographic.
inline bool insertion_less(const ZVector& a, const ZVector& b) {
  auto support = [](const ZVector& v) {
    return std::count_if(v.begin(), v.end(), [](const Integer& x) { return x != 0; });
  };
  const auto sa = support(a);
  const auto sb = support(b);
  if (sa != sb) {
    return sa < sb;
  }
  return a < b;
}

/// Incremental double description (Motzkin-Burger) over the integers.
///
/// State: the cone {x : <a_k, x> >= 0, <b, x> = 0} for the constraints
/// inserted so far, as extreme rays, a lineality basis, and for every ray
/// the set of inserted inequalities tight on it. Adjacency of two rays is
/// decided by the rank of the constraints tight on both.
class Engine {
public:
  /// Starts from all of R^n.
  explicit Engine(std::size_t n) : n_(n) {
    for (std::size_t i = 0; i < n; ++i) {
      ZVector e(n, Integer(0));
      e[i] = 1;
      lineality_.push_back(std::move(e));
    }
  }

  /// Starts from a synchronized cone: `rays`/`lineality` must be exactly the
  /// irredundant generators of {x : ineqs x >= 0, eqs x = 0}.
  Engine(std::size_t n, std::vector<ZVector> rays, std::vector<ZVector> lineality,
         const std::vector<ZVector>& ineqs, const std::vector<ZVector>& eqs)
      : n_(n), lineality_(std::move(lineality)) {
    eq_rows_ = eqs;
    for (auto& r : rays) {
      rays_.push_back({std::move(r), boost::dynamic_bitset<>()});
    }
    for (const auto& a : ineqs) {
      ineq_rows_.push_back(a);
      for (auto& r : rays_) {
        r.tight.push_back(linalg::dot(a, r.v) == 0);
      }
    }
  }

  std::size_t dim() const { return n_; }

  void add_inequality(const ZVector& a) { insert(a, false); }
  void add_equality(const ZVector& b) { insert(b, true); }

  /// Canonical output: lineality in RREF form, rays projected onto the
  /// orthogonal complement of the lineality space, primitive and sorted.
  VRep result() const {
    VRep out;
    out.lineality = linalg::canonical_basis(lineality_, n_);
    for (const auto& r : rays_) {
      ZVector v = linalg::project_out(r.v, out.lineality);
      if (!linalg::is_zero(v)) {
        out.rays.push_back(std::move(v));
      }
    }
    std::sort(out.rays.begin(), out.rays.end());
    out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
    return out;
  }

private:
  struct Ray {
    ZVector v;
    boost::dynamic_bitset<> tight;  // over ineq_rows_
  };

  void insert(const ZVector& a, bool equality) {
    if (a.size() != n_) {
      throw PreconditionError("constraint of length " + std::to_string(a.size()) +
                              " in dimension " + std::to_string(n_));
    }
    if (linalg::is_zero(a)) {
      return;
    }
    // Lineality direction not orthogonal to a: it absorbs the new constraint.
    for (std::size_t p = 0; p < lineality_.size(); ++p) {
      Integer ap = linalg::dot(a, lineality_[p]);
      if (ap == 0) {
        continue;
      }
      ZVector l0 = lineality_[p];
      if (ap < 0) {
        l0 = linalg::negated(std::move(l0));
        ap = -ap;
      }
      std::vector<ZVector> rest;
      for (std::size_t q = 0; q < lineality_.size(); ++q) {
        if (q == p) {
          continue;
        }
        rest.push_back(shift(lineality_[q], linalg::dot(a, lineality_[q]), ap, l0));
      }
      for (auto& r : rays_) {
        r.v = shift(r.v, linalg::dot(a, r.v), ap, l0);
      }
      lineality_ = std::move(rest);
      if (equality) {
        eq_rows_.push_back(a);
        return;
      }
      for (auto& r : rays_) {
        r.tight.push_back(true);
      }
      boost::dynamic_bitset<> t(ineq_rows_.size(), 0);
      t.set();
      t.push_back(false);
      ineq_rows_.push_back(a);
      rays_.push_back({std::move(l0), std::move(t)});
      return;
    }

    std::vector<Integer> value(rays_.size());
    std::vector<std::size_t> plus, minus, zero;
    for (std::size_t i = 0; i < rays_.size(); ++i) {
      value[i] = linalg::dot(a, rays_[i].v);
      const int s = sgn(value[i]);
      (s > 0 ? plus : s < 0 ? minus : zero).push_back(i);
    }

    std::vector<Ray> next;
    auto keep = [&](std::size_t i, bool tight) {
      Ray r = rays_[i];
      r.tight.push_back(tight);
      next.push_back(std::move(r));
    };
    for (auto i : zero) {
      keep(i, true);
    }
    if (!equality) {
      for (auto i : plus) {
        keep(i, false);
      }
    }
    if (!plus.empty() && !minus.empty() && n_ >= lineality_.size() + 2) {
      const std::size_t target = n_ - lineality_.size() - 2;
      const std::size_t eq_rank = linalg::rank(eq_rows_, n_);
      for (auto p : plus) {
        for (auto m : minus) {
          boost::dynamic_bitset<> common = rays_[p].tight & rays_[m].tight;
          if (common.count() + eq_rank < target) {
            continue;
          }
          if (!adjacent(common, target)) {
            continue;
          }
          ZVector v(n_);
          const Integer& vp = value[p];
          const Integer mm = -value[m];
          for (std::size_t k = 0; k < n_; ++k) {
            v[k] = vp * rays_[m].v[k] + mm * rays_[p].v[k];
          }
          linalg::make_primitive(v);
          common.push_back(true);
          next.push_back({std::move(v), std::move(common)});
        }
      }
    }
    if (equality) {
      // Equalities are tight everywhere; they live in eq_rows_ and not in the bitsets.
      for (auto& r : next) {
        r.tight.pop_back();
      }
      eq_rows_.push_back(a);
    } else {
      ineq_rows_.push_back(a);
    }
    rays_ = std::move(next);
  }

  /// x - (<a,x>/<a,l0>) l0, scaled to stay integral and primitive.
  static ZVector shift(const ZVector& x, const Integer& ax, const Integer& al0, const ZVector& l0) {
    ZVector out(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) {
      out[k] = al0 * x[k] - ax * l0[k];
    }
    linalg::make_primitive(out);
    return out;
  }

  bool adjacent(const boost::dynamic_bitset<>& common, std::size_t target) const {
    std::vector<ZVector> rows = eq_rows_;
    for (auto k = common.find_first(); k != boost::dynamic_bitset<>::npos; k = common.find_next(k)) {
      rows.push_back(ineq_rows_[k]);
    }
    return linalg::rank(std::move(rows), n_, target) >= target;
  }

  std::size_t n_;
  std::vector<ZVector> lineality_;
  std::vector<Ray> rays_;
  std::vector<ZVector> ineq_rows_;
  std::vector<ZVector> eq_rows_;
};

/// Generators of {x in R^n : <a,x> >= 0 for a in ineqs, <b,x> = 0 for b in eqs}.
inline VRep solve(std::size_t n, std::vector<ZVector> ineqs, std::vector<ZVector> eqs) {
  std::sort(eqs.begin(), eqs.end(), insertion_less);
  std::sort(ineqs.begin(), ineqs.end(), insertion_less);
  ineqs.erase(std::unique(ineqs.begin(), ineqs.end()), ineqs.end());
  Engine engine(n);
  for (const auto& b : eqs) {
    engine.add_equality(b);
  }
  for (const auto& a : ineqs) {
    engine.add_inequality(a);
  }
  return engine.result();
}

} // namespace symcone::dd
