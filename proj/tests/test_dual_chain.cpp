#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "symcone/dual_chain.hpp"
#include "test_util.hpp"

using namespace symcone;
using symcone::testing::v;

namespace {

std::vector<FsVector> sorted(std::vector<FsVector> xs) {
  std::sort(xs.begin(), xs.end());
  return xs;
}

// y is in C_n* iff <y, x> >= 0 for every arrangement x of a generator that fits in R^n.
bool in_dual_by_definition(const GeneratorSet& a, const FsVector& y, std::size_t n) {
  for (const auto& g : a.vectors()) {
    if (g.support_size() > n) {
      continue;
    }
    for (const auto& x : orbit(compress(g).compressed, n)) {
      if (dot(x, y) < 0) {
        return false;
      }
    }
  }
  return true;
}

void for_each_box_point(std::size_t n, long bound, const std::function<void(const FsVector&)>& f) {
  std::vector<long> x(n, -bound);
  for (;;) {
    QVector q(x.begin(), x.end());
    f(to_fs(q));
    std::size_t k = 0;
    while (k < n && x[k] == bound) {
      x[k++] = -bound;
    }
    if (k == n) {
      return;
    }
    ++x[k];
  }
}

} // namespace

TEST(DualChainBasis, NondecreasingShapeForOneA) {
  for (long a : {1L, 2L, 3L}) {
    const auto b = dual_chain_basis(GeneratorSet({v({1, a})}));
    EXPECT_EQ(b.r, 2u);
    EXPECT_EQ(sorted(b.F), sorted({v({-1, a}), v({1, 1})})) << "a=" << a;
    EXPECT_FALSE(b.degenerate);
    EXPECT_FALSE(b.excluded_ray.has_value());
  }
}

TEST(DualChainBasis, OrthantAndLowerDimensionalSlice) {
  const auto unit = dual_chain_basis(GeneratorSet({FsVector::unit(1)}));
  EXPECT_EQ(unit.r, 1u);
  EXPECT_TRUE(unit.F.empty());
  ASSERT_TRUE(unit.excluded_ray.has_value());
  EXPECT_EQ(*unit.excluded_ray, FsVector::unit(1));

  // C_2 = cone((1,1)): the dual is a halfplane with lineality along (1,-1),
  // but its non-decreasing part is pointed.
  const auto diag = dual_chain_basis(GeneratorSet({v({1, 1})}));
  EXPECT_EQ(diag.r, 2u);
  EXPECT_TRUE(diag.dual_has_lineality);
  EXPECT_FALSE(diag.degenerate);
  EXPECT_EQ(sorted(diag.F), sorted({v({-1, 1}), v({1, 1})}));
}

TEST(PadBasis, Examples) {
  DualChainBasis b;
  b.r = 2;
  b.F = {v({-1, 2}), v({1, 1})};
  EXPECT_EQ(pad_basis(b, 4), (std::vector<FsVector>{v({-1, 2, 2, 2}), v({1, 1, 1, 1}), FsVector::unit(4)}));
  EXPECT_EQ(pad_basis(b, 2), (std::vector<FsVector>{v({-1, 2}), v({1, 1}), FsVector::unit(2)}));
  EXPECT_THROW(pad_basis(b, 1), PreconditionError);
  DualChainBasis empty;
  empty.r = 1;
  EXPECT_EQ(pad_basis(empty, 3), (std::vector<FsVector>{FsVector::unit(3)}));
}

TEST(VerifyDualChain, OneTwoAgainstDefinition) {
  const GeneratorSet a({v({1, 2})});
  const auto report = verify_dual_chain(a, 5);
  EXPECT_TRUE(report.verdict);
  ASSERT_EQ(report.slices.size(), 4u);
  for (const auto& s : report.slices) {
    EXPECT_TRUE(s.verified) << s.n;
    for (const auto& w : s.dual_in_padded) {
      EXPECT_EQ(w.witness.recombine(), w.generator);
    }
    for (const auto& w : s.padded_in_dual) {
      EXPECT_EQ(w.witness.recombine(), w.generator);
    }
  }
  // At n = 3 the all-ones vector is redundant next to the unit vectors.
  EXPECT_EQ(report.slices[1].minimized, (std::vector<FsVector>{v({-1, 2, 2}), FsVector::unit(3)}));

  for (std::size_t n = 2; n <= 3; ++n) {
    const LocalCone padded = from_generators(orbit_closure(pad_basis(report.basis, n), n), n);
    for_each_box_point(n, 3, [&](const FsVector& y) {
      EXPECT_EQ(padded.contains(y), in_dual_by_definition(a, y, n)) << y;
    });
  }
}

TEST(VerifyDualChain, OrthantIsSelfDual) {
  const GeneratorSet a({FsVector::unit(1)});
  const auto report = verify_dual_chain(a, 4);
  EXPECT_TRUE(report.verdict);
  for (const auto& s : report.slices) {
    std::vector<FsVector> units;
    for (std::size_t i = 1; i <= s.n; ++i) {
      units.push_back(FsVector::unit(i));
    }
    EXPECT_EQ(dualize(localize(a, s.n)), from_generators(units, s.n));
  }
}

TEST(VerifyDualChain, MixedWidthsAgainstDefinition) {
  const GeneratorSet a({v({1, 2}), v({1, 1, 1})});
  const auto report = verify_dual_chain(a, 5);
  EXPECT_TRUE(report.verdict);
  for (std::size_t n = report.basis.r; n <= 4; ++n) {
    const LocalCone padded = from_generators(orbit_closure(pad_basis(report.basis, n), n), n);
    for_each_box_point(n, 2, [&](const FsVector& y) {
      EXPECT_EQ(padded.contains(y), in_dual_by_definition(a, y, n)) << y;
    });
  }
}

TEST(VerifyDualChain, RejectsMixedSignsAndLowNmax) {
  EXPECT_THROW(dual_chain_basis(GeneratorSet({v({1, -1})})), RejectedInput);
  EXPECT_THROW(verify_dual_chain(GeneratorSet({v({1, 2})}), 1), PreconditionError);
}

TEST(DualChainProperties, RandomSetsVerifyAndRaysAreNondecreasing) {
  std::mt19937 rng(61);
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<FsVector> gens;
    const std::size_t count = 1 + rng() % 3;
    while (gens.size() < count) {
      FsVector g = symcone::testing::random_vector(rng, 1 + rng() % 3, 0, 4);
      if (!g.is_zero()) {
        gens.push_back(g);
      }
    }
    const GeneratorSet a(gens);
    const auto report = verify_dual_chain(a, a.max_width() + 2);
    EXPECT_TRUE(report.verdict);
    EXPECT_FALSE(report.basis.degenerate);
    for (const auto& f : report.basis.F) {
      const QVector x = f.dense(report.basis.r);
      EXPECT_TRUE(std::is_sorted(x.begin(), x.end())) << f;
      EXPECT_GE(f.support_size(), 2u) << f;
    }
    // The minimized list generates the same symmetric cone.
    for (const auto& s : report.slices) {
      const LocalCone full = from_generators(orbit_closure(pad_basis(report.basis, s.n), s.n), s.n);
      EXPECT_TRUE(equal(full, from_generators(orbit_closure(s.minimized, s.n), s.n)));
    }
  }
}
