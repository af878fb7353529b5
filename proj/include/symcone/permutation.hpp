#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "symcone/errors.hpp"
#include "symcone/fs_vector.hpp"

namespace symcone {

/// An element of Sym(n), stored as its images of 1..n.
class Permutation {
public:
  /// Throws PreconditionError unless `images` is a bijection of {1..n}.
  explicit Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (std::size_t img : images_) {
      if (img == 0 || img > images_.size() || seen[img]) {
        throw PreconditionError("not a permutation of 1.." + std::to_string(images_.size()));
      }
      seen[img] = true;
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<std::size_t> images(n);
    for (std::size_t i = 0; i < n; ++i) {
      images[i] = i + 1;
    }
    return Permutation(std::move(images));
  }

  /// The transposition (i j) in Sym(n).
  static Permutation transposition(std::size_t n, std::size_t i, std::size_t j) {
    return cycle(n, {i, j});
  }

  /// The cycle (c_1 c_2 ... c_k) in Sym(n): c_1 -> c_2 -> ... -> c_k -> c_1.
  static Permutation cycle(std::size_t n, std::initializer_list<std::size_t> points) {
    std::vector<std::size_t> pts(points);
    auto images = identity(n).images_;
    for (std::size_t k = 0; k < pts.size(); ++k) {
      if (pts[k] == 0 || pts[k] > n) {
        throw PreconditionError("cycle point outside 1.." + std::to_string(n));
      }
      images[pts[k] - 1] = pts[(k + 1) % pts.size()];
    }
    return Permutation(std::move(images));
  }

  std::size_t size() const { return images_.size(); }
  const std::vector<std::size_t>& images() const { return images_; }

  /// sigma(i), 1-based.
  std::size_t operator()(std::size_t i) const {
    if (i == 0 || i > images_.size()) {
      throw PreconditionError("point " + std::to_string(i) + " outside 1.." +
                              std::to_string(images_.size()));
    }
    return images_[i - 1];
  }

  Permutation inverse() const {
    std::vector<std::size_t> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
      inv[images_[i] - 1] = i + 1;
    }
    return Permutation(std::move(inv));
  }

  /// Extends to Sym(m), m >= n, fixing n+1..m.
  Permutation extended(std::size_t m) const {
    if (m < images_.size()) {
      throw PreconditionError("cannot shrink a permutation");
    }
    auto images = images_;
    for (std::size_t i = images_.size() + 1; i <= m; ++i) {
      images.push_back(i);
    }
    return Permutation(std::move(images));
  }

  /// (p * q)(i) = p(q(i)). Both factors must act on the same [n].
  friend Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size()) {
      throw PreconditionError("composing permutations of different sizes");
    }
    std::vector<std::size_t> images(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      images[i] = p.images_[q.images_[i] - 1];
    }
    return Permutation(std::move(images));
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  std::vector<std::size_t> images_;
};

/// sigma(u) = (u_{sigma^-1(1)}, u_{sigma^-1(2)}, ...): the entry at index i
/// moves to index sigma(i). Requires width(v) <= p.size().
inline FsVector apply_perm(const Permutation& p, const FsVector& v) {
  if (v.width() > p.size()) {
    throw PreconditionError("vector of width " + std::to_string(v.width()) +
                            " extends beyond Sym(" + std::to_string(p.size()) + ")");
  }
  std::vector<FsVector::Entry> moved;
  moved.reserve(v.support_size());
  for (const auto& [index, value] : v.entries()) {
    moved.emplace_back(p(index), value);
  }
  return FsVector::from_entries(std::move(moved));
}

} // namespace symcone
