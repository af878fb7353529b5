#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "symcone/cone.hpp"
#include "symcone/orbit.hpp"
#include "test_util.hpp"

using namespace symcone;
using symcone::testing::v;

namespace {

ZVector z(std::initializer_list<long> xs) {
  ZVector out;
  for (long x : xs) {
    out.emplace_back(x);
  }
  return out;
}

std::set<ZVector> as_set(const std::vector<ZVector>& vs) { return {vs.begin(), vs.end()}; }

std::vector<FsVector> units(std::size_t n) {
  std::vector<FsVector> out;
  for (std::size_t i = 1; i <= n; ++i) {
    out.push_back(FsVector::unit(i));
  }
  return out;
}

// Every primitive integer vector of [-bound, bound]^n (nonzero).
std::vector<ZVector> small_normals(std::size_t n, long bound) {
  std::vector<ZVector> out;
  std::vector<long> x(n, -bound);
  for (;;) {
    ZVector a;
    for (long c : x) {
      a.emplace_back(c);
    }
    if (!linalg::is_zero(a)) {
      ZVector p = a;
      linalg::make_primitive(p);
      if (p == a) {
        out.push_back(a);
      }
    }
    std::size_t k = 0;
    while (k < n && x[k] == bound) {
      x[k] = -bound;
      ++k;
    }
    if (k == n) {
      break;
    }
    ++x[k];
  }
  return out;
}

// Brute-force H-representation: all small normals valid on every generator.
struct BruteForceHRep {
  std::vector<ZVector> valid;
  BruteForceHRep(const std::vector<FsVector>& gens, std::size_t n, long bound) {
    for (const auto& a : small_normals(n, bound)) {
      const FsVector af = to_fs(a);
      if (std::all_of(gens.begin(), gens.end(), [&](const FsVector& g) { return dot(af, g) >= 0; })) {
        valid.push_back(a);
      }
    }
  }
  bool contains(const FsVector& x) const {
    return std::all_of(valid.begin(), valid.end(), [&](const ZVector& a) {
      return dot(to_fs(a), x) >= 0;
    });
  }
  // Facet normals of a full-dimensional cone: valid normals tight on a
  // rank n-1 subset of the generators.
  std::vector<ZVector> facets(const std::vector<FsVector>& gens, std::size_t n) const {
    std::vector<ZVector> out;
    for (const auto& a : valid) {
      std::vector<ZVector> tight;
      for (const auto& g : gens) {
        if (dot(to_fs(a), g) == 0) {
          tight.push_back(g.dense_integer(n));
        }
      }
      if (linalg::rank(tight, n) == n - 1) {
        out.push_back(a);
      }
    }
    return out;
  }
};

FsVector random_point(std::mt19937& rng, const LocalCone& c) {
  std::uniform_int_distribution<long> coeff(0, 4);
  FsVector u;
  for (const auto& r : c.ray_vectors()) {
    u = u + Rational(coeff(rng), 1 + coeff(rng)) * r;
  }
  for (const auto& l : c.lineality_vectors()) {
    u = u + Rational(coeff(rng) - 2, 1 + coeff(rng)) * l;
  }
  return u;
}

std::vector<FsVector> random_generators(std::mt19937& rng, std::size_t n, std::size_t count, long lo,
                                        long hi) {
  std::vector<FsVector> gens;
  for (std::size_t i = 0; i < count; ++i) {
    gens.push_back(symcone::testing::random_vector(rng, n, lo, hi));
  }
  return gens;
}

} // namespace

TEST(FromGenerators, OrthantIsSelfDescribing) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const LocalCone c = from_generators(units(n), n);
    std::vector<ZVector> e;
    for (const auto& u : units(n)) {
      e.push_back(u.dense_integer(n));
    }
    EXPECT_EQ(as_set(c.ineqs()), as_set(e));
    EXPECT_EQ(as_set(c.rays()), as_set(e));
    EXPECT_TRUE(c.eqs().empty());
    EXPECT_TRUE(c.lineality().empty());
  }
}

TEST(FromGenerators, TwoDimensionalCone) {
  const std::vector<FsVector> gens{v({1, 2}), v({2, 1})};
  const LocalCone c = from_generators(gens, 2);
  EXPECT_EQ(as_set(c.ineqs()), as_set({z({2, -1}), z({-1, 2})}));
  // Oracle: brute-force facet search over normals in [-3,3]^2.
  const BruteForceHRep oracle(gens, 2, 3);
  EXPECT_EQ(as_set(c.ineqs()), as_set(oracle.facets(gens, 2)));
}

TEST(FromGenerators, MixedSignCone) {
  const std::vector<FsVector> gens{v({1, 1}), v({1, -1})};
  const LocalCone c = from_generators(gens, 2);
  EXPECT_EQ(as_set(c.rays()), as_set({z({1, 1}), z({1, -1})}));
  EXPECT_EQ(as_set(c.ineqs()), as_set({z({1, 1}), z({1, -1})}));
}

TEST(FromGenerators, EmptyListIsZeroCone) {
  const LocalCone c = from_generators({}, 3);
  EXPECT_TRUE(c.is_zero());
  EXPECT_EQ(c.eqs().size(), 3u);
  EXPECT_TRUE(c.contains(FsVector()));
  EXPECT_FALSE(c.contains(FsVector::unit(1)));
}

TEST(FromGenerators, DimensionOverflowIsRejected) {
  EXPECT_THROW(from_generators({v({1, 2, 3})}, 2), PreconditionError);
}

TEST(FromGenerators, RedundantGeneratorsAreDropped) {
  const LocalCone c = from_generators({v({1, 2}), v({2, 1}), v({1, 1}), v({3, 3})}, 2);
  EXPECT_EQ(as_set(c.rays()), as_set({z({1, 2}), z({2, 1})}));
}

TEST(FromGenerators, LinealityAndLowerDimension) {
  const LocalCone line = from_generators({v({1, -1}), v({-1, 1})}, 2);
  EXPECT_TRUE(line.rays().empty());
  EXPECT_EQ(line.lineality(), (std::vector<ZVector>{z({1, -1})}));
  EXPECT_EQ(line.eqs(), (std::vector<ZVector>{z({1, 1})}));

  const LocalCone halfplane = from_generators({v({1, 0}), v({0, 1}), v({0, -1})}, 2);
  EXPECT_EQ(halfplane.rays(), (std::vector<ZVector>{z({1, 0})}));
  EXPECT_EQ(halfplane.lineality(), (std::vector<ZVector>{z({0, 1})}));
  EXPECT_EQ(halfplane.ineqs(), (std::vector<ZVector>{z({1, 0})}));
}

TEST(Dualize, Examples) {
  const LocalCone orthant = from_generators(units(3), 3);
  EXPECT_EQ(dualize(orthant), orthant);

  const LocalCone c2 = from_generators(orbit(v({1, 2}), 2), 2);
  const LocalCone expected = from_generators(orbit(v({-1, 2}), 2), 2);
  EXPECT_TRUE(equal(dualize(c2), expected));

  const LocalCone origin = from_generators({}, 1);
  const LocalCone d = dualize(origin);
  EXPECT_EQ(d.lineality(), (std::vector<ZVector>{z({1})}));
  EXPECT_TRUE(d.rays().empty());
}

TEST(Contains, Examples) {
  const LocalCone c = from_generators({v({1, 2}), v({2, 1})}, 2);
  auto yes = contains(c, v({1, 1}), true);
  ASSERT_TRUE(yes.member);
  ASSERT_TRUE(yes.witness.has_value());
  EXPECT_EQ(yes.witness->recombine(), v({1, 1}));
  for (const auto& [g, lambda] : yes.witness->coefficients) {
    EXPECT_EQ(lambda, Rational(1, 3));
  }
  EXPECT_FALSE(contains(c, v({1, 0})).member);
  EXPECT_EQ(*c.violated_constraint(v({1, 0})), z({-1, 2}));
  auto zero = contains(c, FsVector(), true);
  EXPECT_TRUE(zero.member);
  EXPECT_TRUE(zero.witness->coefficients.empty());
}

TEST(IntersectHalfspaces, Examples) {
  const LocalCone orthant = from_generators(units(2), 2);
  const LocalCone d = intersect_halfspaces(orthant, {v({-1, 1})});
  EXPECT_EQ(as_set(d.rays()), as_set({z({0, 1}), z({1, 1})}));

  const LocalCone dual2 = from_generators(orbit(v({-1, 2}), 2), 2);
  const LocalCone sub = intersect_halfspaces(dual2, {v({-1, 1})});
  EXPECT_EQ(as_set(sub.rays()), as_set({z({-1, 2}), z({1, 1})}));

  EXPECT_EQ(intersect_halfspaces(dual2, {}), dual2);
}

TEST(IntersectHalfspaces, AgreesWithDirectHRepresentation) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng() % 3;
    const LocalCone c = from_generators(random_generators(rng, n, 2 + rng() % 4, -3, 3), n);
    const auto normals = random_generators(rng, n, 1 + rng() % 3, -2, 2);
    const LocalCone refined = intersect_halfspaces(c, normals);
    std::vector<ZVector> ineqs = c.ineqs();
    for (const auto& a : normals) {
      ineqs.push_back(a.dense_integer(n));
    }
    const LocalCone direct = LocalCone::from_hrep(n, ineqs, c.eqs());
    EXPECT_EQ(refined, direct);
  }
}

TEST(Equal, Examples) {
  const LocalCone c = from_generators({v({1, 2}), v({2, 1})}, 2);
  const LocalCone d = from_generators({v({1, 2}), v({2, 1}), v({1, 1})}, 2);
  EXPECT_TRUE(equal(c, d));
  EXPECT_FALSE(equal(from_generators(units(2), 2), from_generators({v({1, 0})}, 2)));
  EXPECT_TRUE(equal(c, c));
  EXPECT_THROW(equal(c, from_generators(units(3), 3)), PreconditionError);
}

TEST(ConeProperties, DoubleDual) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const LocalCone c = from_generators(random_generators(rng, n, 1 + rng() % 6, -2, 4), n);
    EXPECT_TRUE(equal(dualize(dualize(c)), c));
    EXPECT_EQ(dualize(dualize(c)), c);
  }
}

TEST(ConeProperties, VAndHRepresentationsAreSynchronized) {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const auto gens = random_generators(rng, n, 1 + rng() % 6, -3, 3);
    const LocalCone c = from_generators(gens, n);
    for (const auto& g : gens) {
      EXPECT_TRUE(c.contains(g));
    }
    for (const auto& r : c.rays()) {
      for (const auto& a : c.ineqs()) {
        EXPECT_GE(linalg::dot(a, r), 0);
      }
      for (const auto& b : c.eqs()) {
        EXPECT_EQ(linalg::dot(b, r), 0);
      }
      ZVector p = r;
      linalg::make_primitive(p);
      EXPECT_EQ(p, r);
    }
    // Irredundancy: no ray lies in the cone of the others.
    const auto rays = c.ray_vectors();
    for (std::size_t i = 0; i < rays.size(); ++i) {
      std::vector<FsVector> others;
      for (std::size_t j = 0; j < rays.size(); ++j) {
        if (j != i) {
          others.push_back(rays[j]);
        }
      }
      EXPECT_FALSE(conic_witness(others, c.lineality_vectors(), rays[i], n).has_value());
    }
    // Facets of full-dimensional cones are tight on n - 1 independent rays.
    if (c.eqs().empty()) {
      for (const auto& a : c.ineqs()) {
        std::vector<ZVector> tight = c.lineality();
        for (const auto& r : c.rays()) {
          if (linalg::dot(a, r) == 0) {
            tight.push_back(r);
          }
        }
        EXPECT_EQ(linalg::rank(tight, n), n - 1);
      }
    }
  }
}

TEST(ConeProperties, WitnessesRecombineExactly) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const LocalCone c = from_generators(random_generators(rng, n, 1 + rng() % 5, -3, 3), n);
    const FsVector u = random_point(rng, c);
    auto w = c.witness(u);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->recombine(), u);
    for (const auto& [g, lambda] : w->coefficients) {
      EXPECT_GT(lambda, 0);
    }
  }
}

TEST(ConeProperties, ContainsAgreesWithBruteForceHRepresentation) {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 3;
    const auto gens = random_generators(rng, n, 1 + rng() % 4, -3, 3);
    const LocalCone c = from_generators(gens, n);
    // Facet normals of cones with generators in [-3,3]^3 are cross products,
    // so primitive normals in [-18,18]^3 suffice.
    const BruteForceHRep oracle(gens, n, n == 3 ? 18 : 6);
    for (int k = 0; k < 40; ++k) {
      const FsVector x = symcone::testing::random_vector(rng, n, -3, 3);
      EXPECT_EQ(c.contains(x), oracle.contains(x)) << x.str();
    }
  }
}

TEST(ConeProperties, DualOfSymmetricConeIsSymmetric) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + rng() % 3;
    const auto base = random_generators(rng, n, 1 + rng() % 2, -2, 3);
    const LocalCone c = from_generators(orbit_closure(base, n), n);
    const LocalCone d = dualize(c);
    for (const auto& u : d.ray_vectors()) {
      for (int k = 0; k < 5; ++k) {
        EXPECT_TRUE(d.contains(apply_perm(symcone::testing::random_perm(rng, n), u)));
      }
    }
  }
}

TEST(ConeProperties, BetweenCone) {
  std::mt19937 rng(37);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng() % 3;
    const auto base = random_generators(rng, n, 1 + rng() % 2, -2, 4);
    const LocalCone c = from_generators(orbit_closure(base, n), n);
    for (int k = 0; k < 3; ++k) {
      const FsVector u = random_point(rng, c);
      const Rational lambda(static_cast<long>(rng() % 7), 6);
      QVector x = u.dense(n);
      const Rational a = x[n - 2];
      const Rational b = x[n - 1];
      x[n - 2] = lambda * a + (1 - lambda) * b;
      x[n - 1] = (1 - lambda) * a + lambda * b;
      EXPECT_TRUE(c.contains(to_fs(x)));
      ++checked;
    }
  }
  EXPECT_EQ(checked, 120);
}
