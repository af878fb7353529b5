#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "symcone/fs_vector.hpp"
#include "symcone/orbit.hpp"

namespace symcone {

/// A finite set A equivariantly generating the global cone cone(Sym(A)).
///
/// Zero vectors are dropped and vectors in the same Sym-orbit are merged
/// (first occurrence kept). The flags and the bounds w (max width) and
/// s (max support size) are derived, never supplied.
class GeneratorSet {
public:
  GeneratorSet() = default;

  explicit GeneratorSet(const std::vector<FsVector>& vectors) {
    std::size_t w = 0;
    for (const auto& v : vectors) {
      w = std::max(w, v.width());
    }
    std::vector<FsVector> seen;
    for (const auto& v : vectors) {
      if (v.is_zero()) {
        continue;
      }
      FsVector rep = canonical_rep(v, w);
      if (std::find(seen.begin(), seen.end(), rep) != seen.end()) {
        continue;
      }
      seen.push_back(std::move(rep));
      vectors_.push_back(v);
    }
    for (const auto& v : vectors_) {
      nonnegative_ = nonnegative_ && v.is_nonnegative();
      integral_ = integral_ && v.is_integral();
      max_width_ = std::max(max_width_, v.width());
      max_support_ = std::max(max_support_, v.support_size());
    }
  }

  const std::vector<FsVector>& vectors() const { return vectors_; }
  std::size_t size() const { return vectors_.size(); }
  bool empty() const { return vectors_.empty(); }
  const FsVector& operator[](std::size_t i) const { return vectors_[i]; }

  bool nonnegative() const { return nonnegative_; }
  bool integral() const { return integral_; }
  std::size_t max_width() const { return max_width_; }
  std::size_t max_support() const { return max_support_; }

  /// Every generator whose support fits in R^n, compressed onto its first
  /// |supp| coordinates. Sym(n) of this set equals Sym(N)(A) intersected
  /// with R^n for nonnegative A.
  std::vector<FsVector> slice(std::size_t n) const {
    std::vector<FsVector> out;
    for (const auto& v : vectors_) {
      if (v.support_size() <= n) {
        out.push_back(compress(v).compressed);
      }
    }
    return out;
  }

private:
  std::vector<FsVector> vectors_;
  bool nonnegative_ = true;
  bool integral_ = true;
  std::size_t max_width_ = 0;
  std::size_t max_support_ = 0;
};

} // namespace symcone
