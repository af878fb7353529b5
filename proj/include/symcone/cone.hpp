#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symcone/double_description.hpp"
#include "symcone/errors.hpp"
#include "symcone/fs_vector.hpp"
#include "symcone/linalg.hpp"
#include "symcone/lp.hpp"
#include "symcone/rational.hpp"

namespace symcone {

/// Exact certificate that a point lies in a cone:
/// point = sum lambda_i * generator_i + sum c_j * lineality_j, lambda_i > 0.
struct MembershipWitness {
  std::vector<std::pair<FsVector, Rational>> coefficients;
  std::vector<std::pair<FsVector, Rational>> lineality_part;

  FsVector recombine() const {
    FsVector sum;
    for (const auto& [g, lambda] : coefficients) {
      sum = sum + lambda * g;
    }
    for (const auto& [l, c] : lineality_part) {
      sum = sum + c * l;
    }
    return sum;
  }
};

/// Finds lambda >= 0 with point = sum lambda_i gens_i (+ free lineality
/// coefficients), using the exact Bland-rule simplex. Basic solution.
inline std::optional<MembershipWitness> conic_witness(const std::vector<FsVector>& gens,
                                                      const std::vector<FsVector>& lineality,
                                                      const FsVector& point, std::size_t n) {
  std::vector<QVector> columns;
  columns.reserve(gens.size() + 2 * lineality.size());
  for (const auto& g : gens) {
    columns.push_back(g.dense(n));
  }
  for (const auto& l : lineality) {
    QVector d = l.dense(n);
    columns.push_back(d);
    for (auto& x : d) {
      x = -x;
    }
    columns.push_back(std::move(d));
  }
  auto solution = lp::nonnegative_combination(columns, point.dense(n));
  if (!solution) {
    return std::nullopt;
  }
  MembershipWitness w;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if ((*solution)[i] != 0) {
      w.coefficients.emplace_back(gens[i], (*solution)[i]);
    }
  }
  for (std::size_t j = 0; j < lineality.size(); ++j) {
    Rational c = (*solution)[gens.size() + 2 * j] - (*solution)[gens.size() + 2 * j + 1];
    if (c != 0) {
      w.lineality_part.emplace_back(lineality[j], c);
    }
  }
  return w;
}

/// A rational polyhedral cone in R^n carrying synchronized V- and H-representations.
///
/// V: cone(rays) + span(lineality). H: {x : <a,x> >= 0 for a in ineqs,
/// <b,x> = 0 for b in eqs}. All vectors are primitive integer vectors in a
/// canonical form (bases in reduced echelon form, rays and inequality normals
/// projected orthogonally to the lineality resp. equation space), so equal
/// cones have identical representations.
class LocalCone {
public:
  /// The zero cone {0} in R^n.
  explicit LocalCone(std::size_t n = 0) : LocalCone(from_hrep(n, {}, identity_rows(n))) {}

  /// cone(gens) in R^n.
  static LocalCone from_generators(const std::vector<FsVector>& gens, std::size_t n) {
    std::vector<ZVector> rows;
    rows.reserve(gens.size());
    for (const auto& g : gens) {
      g.require_width(n);
      rows.push_back(linalg::primitive_from(g.dense(n)));
    }
    return from_integer_generators(std::move(rows), {}, n);
  }

  /// cone(rays) + span(lineality) in R^n, integer input.
  static LocalCone from_integer_generators(std::vector<ZVector> rays, std::vector<ZVector> lineality,
                                           std::size_t n) {
    dd::VRep dual = dd::solve(n, std::move(rays), std::move(lineality));
    dd::VRep primal = dd::solve(n, dual.rays, dual.lineality);
    return LocalCone(n, std::move(primal), std::move(dual));
  }

  /// {x : <a,x> >= 0 for a in ineqs, <b,x> = 0 for b in eqs}.
  static LocalCone from_hrep(std::size_t n, std::vector<ZVector> ineqs, std::vector<ZVector> eqs) {
    dd::VRep primal = dd::solve(n, std::move(ineqs), std::move(eqs));
    dd::VRep dual = dd::solve(n, primal.rays, primal.lineality);
    return LocalCone(n, std::move(primal), std::move(dual));
  }

  std::size_t dim() const { return dim_; }
  const std::vector<ZVector>& rays() const { return rays_; }
  const std::vector<ZVector>& lineality() const { return lineality_; }
  const std::vector<ZVector>& ineqs() const { return ineqs_; }
  const std::vector<ZVector>& eqs() const { return eqs_; }

  bool is_pointed() const { return lineality_.empty(); }
  bool is_zero() const { return rays_.empty() && lineality_.empty(); }
  /// Dimension of the linear span.
  std::size_t span_dim() const { return dim_ - eqs_.size(); }

  std::vector<FsVector> ray_vectors() const { return as_fs(rays_); }
  std::vector<FsVector> lineality_vectors() const { return as_fs(lineality_); }

  /// Exact H-representation membership test.
  bool contains(const FsVector& v) const {
    v.require_width(dim_);
    return contains_dense(v.dense(dim_));
  }

  bool contains_dense(const QVector& x) const {
    for (const auto& b : eqs_) {
      if (linalg::dot(linalg::to_rational(b), x) != 0) {
        return false;
      }
    }
    for (const auto& a : ineqs_) {
      if (linalg::dot(linalg::to_rational(a), x) < 0) {
        return false;
      }
    }
    return true;
  }

  /// First violated constraint (inequality normal, or equation normal) if any.
  std::optional<ZVector> violated_constraint(const FsVector& v) const {
    const QVector x = v.dense(dim_);
    for (const auto& b : eqs_) {
      if (linalg::dot(linalg::to_rational(b), x) != 0) {
        return b;
      }
    }
    for (const auto& a : ineqs_) {
      if (linalg::dot(linalg::to_rational(a), x) < 0) {
        return a;
      }
    }
    return std::nullopt;
  }

  /// Nonnegative coefficients over the rays (plus lineality part) reproducing v.
  std::optional<MembershipWitness> witness(const FsVector& v) const {
    if (!contains(v)) {
      return std::nullopt;
    }
    if (v.is_zero()) {
      return MembershipWitness{};
    }
    return conic_witness(ray_vectors(), lineality_vectors(), v, dim_);
  }

  friend bool operator==(const LocalCone&, const LocalCone&) = default;

private:
  LocalCone(std::size_t n, dd::VRep primal, dd::VRep dual)
      : dim_(n),
        rays_(std::move(primal.rays)),
        lineality_(std::move(primal.lineality)),
        ineqs_(std::move(dual.rays)),
        eqs_(std::move(dual.lineality)) {}

  static std::vector<ZVector> identity_rows(std::size_t n) {
    std::vector<ZVector> rows;
    for (std::size_t i = 0; i < n; ++i) {
      ZVector e(n, Integer(0));
      e[i] = 1;
      rows.push_back(std::move(e));
    }
    return rows;
  }

  static std::vector<FsVector> as_fs(const std::vector<ZVector>& vs) {
    std::vector<FsVector> out;
    out.reserve(vs.size());
    for (const auto& v : vs) {
      out.emplace_back(std::span<const Integer>(v));
    }
    return out;
  }

  friend LocalCone dualize(const LocalCone& c);
  friend LocalCone intersect_halfspaces(const LocalCone& c, const std::vector<FsVector>& normals);

  std::size_t dim_ = 0;
  std::vector<ZVector> rays_;
  std::vector<ZVector> lineality_;
  std::vector<ZVector> ineqs_;
  std::vector<ZVector> eqs_;
};

inline LocalCone from_generators(const std::vector<FsVector>& gens, std::size_t n) {
  return LocalCone::from_generators(gens, n);
}

/// The dual cone {y : <y,x> >= 0 for all x in c} in the same ambient space.
/// Its H-representation is c's V-representation; its generators are
/// recomputed by double description.
inline LocalCone dualize(const LocalCone& c) {
  dd::VRep primal = dd::solve(c.dim_, c.rays_, c.lineality_);
  return LocalCone(c.dim_, std::move(primal), dd::VRep{c.rays_, c.lineality_});
}

/// c intersected with {x : <a,x> >= 0} for each a in normals, refining c's
/// double description state one halfspace at a time.
inline LocalCone intersect_halfspaces(const LocalCone& c, const std::vector<FsVector>& normals) {
  if (normals.empty()) {
    return c;
  }
  std::vector<ZVector> rows;
  for (const auto& a : normals) {
    a.require_width(c.dim_);
    rows.push_back(linalg::primitive_from(a.dense(c.dim_)));
  }
  std::sort(rows.begin(), rows.end(), dd::insertion_less);
  dd::Engine engine(c.dim_, c.rays_, c.lineality_, c.ineqs_, c.eqs_);
  for (const auto& a : rows) {
    engine.add_inequality(a);
  }
  dd::VRep primal = engine.result();
  dd::VRep dual = dd::solve(c.dim_, primal.rays, primal.lineality);
  return LocalCone(c.dim_, std::move(primal), std::move(dual));
}

/// Membership decision; the witness is produced only on request.
struct Containment {
  bool member = false;
  std::optional<MembershipWitness> witness;
};

inline Containment contains(const LocalCone& c, const FsVector& v, bool with_witness = false) {
  Containment out;
  out.member = c.contains(v);
  if (out.member && with_witness) {
    out.witness = c.witness(v);
  }
  return out;
}

/// Set equality by mutual membership of all generators.
inline bool equal(const LocalCone& c, const LocalCone& d) {
  if (c.dim() != d.dim()) {
    throw PreconditionError("comparing cones in dimensions " + std::to_string(c.dim()) + " and " +
                            std::to_string(d.dim()));
  }
  auto inside = [](const LocalCone& outer, const LocalCone& inner) {
    for (const auto& r : inner.ray_vectors()) {
      if (!outer.contains(r)) {
        return false;
      }
    }
    for (const auto& l : inner.lineality_vectors()) {
      if (!outer.contains(l) || !outer.contains(-l)) {
        return false;
      }
    }
    return true;
  };
  return inside(c, d) && inside(d, c);
}

} // namespace symcone
