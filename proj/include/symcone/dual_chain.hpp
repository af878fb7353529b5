#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symcone/chain.hpp"
#include "symcone/cone.hpp"
#include "symcone/errors.hpp"
#include "symcone/generator_set.hpp"
#include "symcone/orbit.hpp"
#include "symcone/parallel.hpp"

namespace symcone {

/// Finite data generating every dual slice C_n*, n >= r, up to symmetry.
struct DualChainBasis {
  std::size_t r = 0;
  /// Extreme rays of the non-decreasing part of C_r*, e_r excluded.
  std::vector<FsVector> F;
  /// e_r when it is an extreme ray of that subcone (it always lies in it).
  std::optional<FsVector> excluded_ray;
  /// The non-decreasing subcone itself has lineality; no padding formula applies.
  bool degenerate = false;
  /// C_r* has lineality, i.e. C_r is not full-dimensional.
  bool dual_has_lineality = false;
  LocalCone nondecreasing_subcone;
};

/// Normals of {x : x_i <= x_{i+1}, i < n}.
inline std::vector<FsVector> nondecreasing_normals(std::size_t n) {
  std::vector<FsVector> out;
  for (std::size_t i = 1; i < n; ++i) {
    out.push_back(FsVector::unit(i + 1) - FsVector::unit(i));
  }
  return out;
}

inline DualChainBasis dual_chain_basis(const GeneratorSet& a, std::size_t orbit_cap = kDefaultOrbitCap) {
  require_nonnegative(a, "dual_chain_basis");
  DualChainBasis b;
  b.r = stability_index(a, orbit_cap).index;
  const LocalCone dual = dualize(localize(a, b.r, orbit_cap));
  b.dual_has_lineality = !dual.is_pointed();
  b.nondecreasing_subcone = intersect_halfspaces(dual, nondecreasing_normals(b.r));
  b.degenerate = !b.nondecreasing_subcone.is_pointed();
  const FsVector er = FsVector::unit(b.r);
  for (const auto& ray : b.nondecreasing_subcone.ray_vectors()) {
    if (ray == er) {
      b.excluded_ray = ray;
    } else {
      b.F.push_back(ray);
    }
  }
  return b;
}

/// F_n together with e_n: each element of F_r padded with copies of its last
/// coordinate up to R^n.
inline std::vector<FsVector> pad_basis(const DualChainBasis& b, std::size_t n) {
  if (n < b.r) {
    throw PreconditionError("pad_basis needs n >= r = " + std::to_string(b.r) + ", got " +
                            std::to_string(n));
  }
  std::vector<FsVector> out;
  for (const auto& f : b.F) {
    QVector x = f.dense(b.r);
    x.resize(n, x.back());
    out.push_back(to_fs(x));
  }
  out.push_back(FsVector::unit(n));
  return out;
}

/// Certificate that a generator of one cone lies in the other.
struct InclusionWitness {
  FsVector generator;
  MembershipWitness witness;
};

struct DualSliceReport {
  std::size_t n = 0;
  bool verified = false;
  std::optional<std::string> error;  ///< resource cap hit while building the slice
  /// Generators of C_n* expressed over Sym(n)(F_n u {e_n}).
  std::vector<InclusionWitness> dual_in_padded;
  /// Elements of F_n u {e_n} expressed over the generators of C_n*.
  std::vector<InclusionWitness> padded_in_dual;
  /// First generator found on the wrong side, when verification fails.
  std::optional<FsVector> counterexample;
  /// F_n u {e_n} with elements removed greedily (in order) while the
  /// symmetrized cone is unchanged.
  std::vector<FsVector> minimized;
};

struct DualChainReport {
  DualChainBasis basis;
  std::vector<DualSliceReport> slices;
  bool verdict = false;
};

namespace detail {

inline DualSliceReport verify_dual_slice(const GeneratorSet& a, const DualChainBasis& b, std::size_t n,
                                         std::size_t orbit_cap) {
  DualSliceReport s;
  s.n = n;
  try {
    const LocalCone dual = dualize(localize(a, n, orbit_cap));
    const std::vector<FsVector> padded = pad_basis(b, n);
    const std::vector<FsVector> sym = orbit_closure(padded, n, orbit_cap);

    std::vector<FsVector> dual_gens = dual.ray_vectors();
    for (const auto& l : dual.lineality_vectors()) {
      dual_gens.push_back(l);
      dual_gens.push_back(-l);
    }
    for (const auto& g : dual_gens) {
      auto w = conic_witness(sym, {}, g, n);
      if (!w) {
        s.counterexample = g;
        return s;
      }
      s.dual_in_padded.push_back({g, std::move(*w)});
    }
    // C_n* is Sym(n)-invariant, so the orbit representatives suffice.
    for (const auto& g : padded) {
      auto w = dual.witness(g);
      if (!w) {
        s.counterexample = g;
        return s;
      }
      s.padded_in_dual.push_back({g, std::move(*w)});
    }
    s.verified = true;

    std::vector<FsVector> kept = padded;
    for (std::size_t k = kept.size(); k-- > 0;) {
      std::vector<FsVector> rest;
      for (std::size_t j = 0; j < kept.size(); ++j) {
        if (j != k) {
          rest.push_back(kept[j]);
        }
      }
      if (rest.empty()) {
        continue;
      }
      const LocalCone reduced = from_generators(orbit_closure(rest, n, orbit_cap), n);
      if (reduced.contains(kept[k])) {
        kept = std::move(rest);
      }
    }
    s.minimized = std::move(kept);
  } catch (const ResourceError& e) {
    s.verified = false;
    s.error = e.what();
  }
  return s;
}

} // namespace detail

/// Checks C_n* = cone(Sym(n)(F_n u {e_n})) for n = r..n_max by double
/// inclusion against the directly dualized slice.
inline DualChainReport verify_dual_chain(const GeneratorSet& a, std::size_t n_max,
                                         std::size_t orbit_cap = kDefaultOrbitCap,
                                         std::size_t threads = 1) {
  DualChainReport report;
  report.basis = dual_chain_basis(a, orbit_cap);
  const std::size_t r = report.basis.r;
  if (n_max < r) {
    throw PreconditionError("n_max = " + std::to_string(n_max) + " is below the stability index " +
                            std::to_string(r));
  }
  if (report.basis.degenerate) {
    return report;
  }
  report.slices = parallel_map(n_max - r + 1, threads, [&](std::size_t k) {
    return detail::verify_dual_slice(a, report.basis, r + k, orbit_cap);
  });
  report.verdict = true;
  for (const auto& s : report.slices) {
    report.verdict = report.verdict && s.verified;
  }
  return report;
}

} // namespace symcone
