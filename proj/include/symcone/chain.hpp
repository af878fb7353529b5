#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symcone/cone.hpp"
#include "symcone/errors.hpp"
#include "symcone/generator_set.hpp"
#include "symcone/orbit.hpp"

namespace symcone {

inline void require_nonnegative(const GeneratorSet& a, const char* operation) {
  if (!a.nonnegative()) {
    throw RejectedInput(std::string(operation) +
                        " requires nonnegative generators: the localization C cap R^n = "
                        "cone(Sym(n)(A_n)) is only valid for cones inside the nonnegative orthant");
  }
}

/// The saturated slice C_n = C cap R^n = cone(Sym(n)(A_n)) of C = cone(Sym(A)).
inline LocalCone localize(const GeneratorSet& a, std::size_t n, std::size_t orbit_cap = kDefaultOrbitCap) {
  require_nonnegative(a, "localize");
  if (n == 0) {
    throw PreconditionError("localize needs n >= 1");
  }
  return from_generators(orbit_closure(a.slice(n), n, orbit_cap), n);
}

/// cone(Sym(n)(c)) for a cone c in R^m, m <= n.
inline LocalCone symmetrize(const LocalCone& c, std::size_t n, std::size_t orbit_cap = kDefaultOrbitCap) {
  if (c.dim() > n) {
    throw PreconditionError("cannot symmetrize a cone of dimension " + std::to_string(c.dim()) +
                            " into R^" + std::to_string(n));
  }
  std::vector<FsVector> gens = c.ray_vectors();
  for (const auto& l : c.lineality_vectors()) {
    gens.push_back(l);
    gens.push_back(-l);
  }
  return from_generators(orbit_closure(gens, n, orbit_cap), n);
}

struct GeneratorWitness {
  FsVector generator;  ///< compressed generator, a vector of R^dim
  std::size_t dim = 0;
  MembershipWitness witness;
};

struct CandidateFailure {
  std::size_t candidate = 0;
  FsVector generator;  ///< compressed generator outside cone(Sym(dim)(C_candidate))
  std::size_t dim = 0;
  ZVector violated;  ///< normal a of that cone with <a, generator> < 0 (or != 0 for an equation)
};

/// Certified stability index of the saturated chain of cone(Sym(A)).
struct StabilizationCertificate {
  std::size_t index = 0;
  std::vector<GeneratorWitness> witnesses;
  std::vector<CandidateFailure> failures;
};

/// Smallest m such that every generator a with |supp(a)| > m lies in
/// cone(Sym(|supp a|)(C_m)); then C_n = cone(Sym(n)(C_m)) for all n >= m.
/// Terminates at m = max support size at the latest.
inline StabilizationCertificate stability_index(const GeneratorSet& a,
                                                std::size_t orbit_cap = kDefaultOrbitCap) {
  require_nonnegative(a, "stability_index");
  if (a.empty()) {
    throw PreconditionError("stability_index needs a nonempty generator set");
  }
  StabilizationCertificate cert;
  for (std::size_t m = 1;; ++m) {
    const LocalCone cm = localize(a, m, orbit_cap);
    std::vector<GeneratorWitness> witnesses;
    std::optional<CandidateFailure> failure;
    for (const auto& g : a.vectors()) {
      const std::size_t s = g.support_size();
      if (s <= m) {
        continue;
      }
      const FsVector compressed = compress(g).compressed;
      const LocalCone target = symmetrize(cm, s, orbit_cap);
      if (auto violated = target.violated_constraint(compressed)) {
        failure = CandidateFailure{m, compressed, s, *violated};
        break;
      }
      auto w = conic_witness(orbit_closure(cm.ray_vectors(), s, orbit_cap), {}, compressed, s);
      if (!w) {
        throw Error("internal: membership without a conic witness");
      }
      witnesses.push_back({compressed, s, std::move(*w)});
    }
    if (failure) {
      cert.failures.push_back(std::move(*failure));
      continue;
    }
    cert.index = m;
    cert.witnesses = std::move(witnesses);
    return cert;
  }
}

/// A coordinate pair {i, j} (1-based, i < j) and the merged vector of R^(n-1).
struct Merge {
  std::size_t i = 0;
  std::size_t j = 0;
  FsVector merged;
};

/// Replaces coordinates i and j of u (in R^n) by the single coordinate
/// u_i + u_j, returning the canonical arrangement in R^(n-1).
inline FsVector merge_coordinates(const FsVector& u, std::size_t n, std::size_t i, std::size_t j) {
  const QVector x = u.dense(n);
  QVector y;
  for (std::size_t k = 1; k <= n; ++k) {
    if (k != i && k != j) {
      y.push_back(x[k - 1]);
    }
  }
  y.push_back(x[i - 1] + x[j - 1]);
  return canonical_rep(to_fs(y), n - 1);
}

/// Searches the pairs {i, j} of [n], n = dim(c_prev) + 1, in lexicographic
/// order for one whose merge lands in c_prev. c_prev must be
/// Sym(n-1)-invariant for the arrangement of the merged vector not to matter.
inline std::optional<Merge> merge_test(const FsVector& u, const LocalCone& c_prev) {
  const std::size_t n = c_prev.dim() + 1;
  u.require_width(n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      FsVector merged = merge_coordinates(u, n, i, j);
      if (c_prev.contains(merged)) {
        return Merge{i, j, std::move(merged)};
      }
    }
  }
  return std::nullopt;
}

} // namespace symcone
