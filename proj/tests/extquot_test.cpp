#include <gtest/gtest.h>

#include "extquot/grid_oracle.hpp"
#include "extquot/poincare.hpp"
#include "test_support.hpp"

using namespace extquot;
using namespace extquot::testing;

namespace {

std::vector<std::size_t> dims(const ComponentCatalog& c) {
  std::vector<std::size_t> d;
  for (const auto& x : c.components) d.push_back(x.dimension);
  return d;
}

QuotientSetup inversion_r1() { return QuotientSetup::from_generators({LatticeAutomorphism{{-1}}}, 1, "inv"); }

// random point on a random component, with free parameters sometimes drawn from mu_6
// so that points with large stabilizers show up
TorusPoint special_point(const ComponentCatalog& cat, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, cat.components.size() - 1);
  std::uniform_int_distribution<int> coin(0, 2), root(0, 5);
  const auto& c = cat.components[pick(rng)];
  std::vector<Complex> params;
  for (std::size_t i = 0; i < c.dimension; ++i)
    params.push_back(coin(rng) == 0 ? root_of_unity(root(rng), 6) : random_point(1, rng)[0]);
  std::uniform_int_distribution<std::size_t> lab(0, c.component_orbit.size() - 1);
  auto x = cat.fixed_set_of(c).parametrize(c.component_orbit[lab(rng)], params);
  std::uniform_int_distribution<std::size_t> el(0, cat.setup.group.order() - 1);
  return cat.setup.group[el(rng)].apply(x);
}

} // namespace

TEST(Decompose, TrivialGroup) {
  auto c = decompose(QuotientSetup::trivial(2));
  ASSERT_EQ(c.components.size(), 1u);
  EXPECT_EQ(c.components[0].dimension, 2u);
  EXPECT_EQ(c.ordinary_component_index, 0u);
}

TEST(Decompose, SymmetricGroupOnRankThree) {
  // one component per partition of 3, dimension = number of cycles
  auto c = decompose(s3_setup());
  EXPECT_EQ(dims(c), (std::vector<std::size_t>{3, 2, 1}));
}

TEST(Decompose, G2Klein) {
  auto c = decompose(g2_setup());
  EXPECT_EQ(dims(c), (std::vector<std::size_t>{2, 1, 1, 0, 0, 0}));
  EXPECT_TRUE(c.ordinary().class_rep.is_identity());
}

TEST(Decompose, IgnoresGeneratorsThatDoNotGenerate) {
  auto s = s3_setup();
  auto bare = s;
  bare.generators = {};
  auto a = decompose(s), b = decompose(bare);
  ASSERT_EQ(a.components.size(), b.components.size());
  for (std::size_t i = 0; i < a.components.size(); ++i) {
    EXPECT_EQ(a.components[i].class_rep, b.components[i].class_rep);
    EXPECT_EQ(a.components[i].component_orbit, b.components[i].component_orbit);
  }
}

TEST(Decompose, OneComponentPerClassAndOrbit) {
  for (const auto& name : bundled_setup_names()) {
    auto c = decompose(load_setup(name));
    std::size_t identity_components = 0;
    for (std::size_t ci = 0; ci < c.classes.size(); ++ci) {
      std::set<TorsionLabel> seen;
      for (const auto& comp : c.components)
        if (comp.class_index == ci)
          for (const auto& k : comp.component_orbit) EXPECT_TRUE(seen.insert(k).second) << name;
      EXPECT_EQ(seen.size(), c.classes[ci].fixed.component_count()) << name;
    }
    for (const auto& comp : c.components)
      if (comp.class_rep.is_identity()) {
        ++identity_components;
        EXPECT_EQ(comp.dimension, c.setup.rank);
      }
    EXPECT_EQ(identity_components, 1u) << name;
  }
}

TEST(OrbitCanonical, Examples) {
  TorusPoint x({2.0, 5.0});
  EXPECT_TRUE(orbit_canonical(QuotientSetup::trivial(2), x).representative.approx_equals(x));
  auto sw = QuotientSetup::from_generators({swap2()}, 2, "s2");
  EXPECT_TRUE(orbit_canonical(sw, TorusPoint({5.0, 2.0})).representative.approx_equals(x));
  // orbit of (2,3) under the Klein group: (2,3), (3,2), (1/3,1/2), (1/2,1/3)
  auto g2 = g2_setup();
  EXPECT_TRUE(orbit_canonical(g2, TorusPoint({2.0, 3.0})).representative.approx_equals(TorusPoint({1.0 / 3, 0.5})));
  EXPECT_EQ(orbit(g2, TorusPoint({2.0, 3.0})).size(), 4u);
  EXPECT_THROW(orbit_canonical(g2, TorusPoint({1.0})), RankMismatch);
}

TEST(OrbitCanonical, ConstantOnOrbits) {
  std::mt19937_64 rng(9);
  for (const auto& name : {"weyl_g2_r2", "s4_r4", "signed_swap_r3"}) {
    auto s = load_setup(name);
    for (int i = 0; i < 100; ++i) {
      auto x = random_point(s.rank, rng);
      auto c = orbit_canonical(s, x);
      for (const auto& g : s.group.elements()) EXPECT_TRUE(orbit_canonical(s, g.apply(x)).approx_equals(c));
    }
  }
}

TEST(Project, Examples) {
  auto g2 = g2_setup();
  TorusPoint x({2.0, 2.0});
  EXPECT_TRUE(project(g2, swap2(), x).approx_equals(orbit_canonical(g2, x)));
  TorusPoint p3({1.0, -1.0});
  auto m = LatticeAutomorphism{{-1, 0}, {0, -1}};
  EXPECT_TRUE(project(g2, m, p3).approx_equals(orbit_canonical(g2, p3)));
  EXPECT_TRUE(project(g2, LatticeAutomorphism::identity(2), TorusPoint({2.0, 3.0}))
                  .approx_equals(orbit_canonical(g2, TorusPoint({2.0, 3.0}))));
  EXPECT_THROW(project(g2, swap2(), TorusPoint({2.0, 3.0})), NotFixed);
}

TEST(ReducedMembership, Examples) {
  std::mt19937_64 rng(4);
  EXPECT_FALSE(reduced_membership(s3_setup(), random_point(3, rng)));
  auto g2 = g2_setup();
  EXPECT_TRUE(reduced_membership(g2, TorusPoint({7.0, 7.0})));
  EXPECT_TRUE(reduced_membership(g2, TorusPoint({1.0, -1.0})));
  EXPECT_FALSE(reduced_membership(g2, TorusPoint({2.0, 3.0})));
}

TEST(ReducedMembership, ConstantOnOrbits) {
  std::mt19937_64 rng(8);
  auto cat = decompose(load_setup("weyl_g2_r2"));
  for (int i = 0; i < 200; ++i) {
    auto x = special_point(cat, rng);
    bool r = reduced_membership(cat.setup, x);
    for (const auto& g : cat.setup.group.elements()) EXPECT_EQ(reduced_membership(cat.setup, g.apply(x)), r);
  }
}

TEST(Fiber, PreimageIsConjugacyClassesOfStabilizer) {
  std::mt19937_64 rng(12);
  for (const auto& name : {"g2_klein", "weyl_g2_r2", "s3_r3", "hyperoctahedral_r3"}) {
    auto cat = decompose(load_setup(name));
    for (int i = 0; i < 100; ++i) {
      auto x = special_point(cat, rng);
      auto st = stabilizer(cat.setup.group, x);
      EXPECT_EQ(fiber(cat, x).size(), conjugacy_classes(st).size()) << name << ' ' << x.str();
      // reduced iff some preimage is off the ordinary component
      bool off = false;
      for (const auto& f : fiber(cat, x)) off = off || f.component != cat.ordinary_component_index;
      EXPECT_EQ(off, reduced_membership(cat.setup, x));
    }
  }
}

TEST(ProductSetup, Examples) {
  auto t = QuotientSetup::trivial(1);
  auto g2 = g2_setup();
  EXPECT_EQ(dims(decompose(product_setup(t, g2))), (std::vector<std::size_t>{3, 2, 2, 1, 1, 1}));
  auto s2 = QuotientSetup::from_generators({swap2()}, 2, "s2");
  auto p = product_setup(s2, s2);
  EXPECT_EQ(p.group.order(), 4u);
  EXPECT_EQ(dims(decompose(p)), (std::vector<std::size_t>{4, 3, 3, 2}));
}

TEST(ProductSetup, MultiplicativeOnBundledPairs) {
  std::vector<std::string> pool{"trivial_r1", "inversion_r1", "swap_r2", "g2_klein", "rotation3_r2", "weyl_a2_r2"};
  for (const auto& a : pool)
    for (const auto& b : pool) {
      auto sa = load_setup(a), sb = load_setup(b);
      auto ca = decompose(sa), cb = decompose(sb);
      auto cp = decompose(product_setup(sa, sb));
      ASSERT_EQ(cp.components.size(), ca.components.size() * cb.components.size()) << a << 'x' << b;
      std::multiset<std::size_t> want, got;
      for (const auto& x : ca.components)
        for (const auto& y : cb.components) want.insert(x.dimension + y.dimension);
      for (const auto& z : cp.components) got.insert(z.dimension);
      EXPECT_EQ(got, want);
      EXPECT_EQ(poincare_polynomial(cp).total, poincare_polynomial(ca).total * poincare_polynomial(cb).total);
    }
}

TEST(Poincare, Examples) {
  EXPECT_EQ(poincare_polynomial(QuotientSetup::trivial(1)).total, (Polynomial{1, 1}));
  // (1/2)((1+t) + (1-t)) = 1 for the identity class, two fixed points for the inversion
  EXPECT_EQ(poincare_polynomial(inversion_r1()).total, (Polynomial{3}));
  EXPECT_EQ(poincare_polynomial(g2_setup()).total, (Polynomial{6}));
}

TEST(Poincare, HandComputedValues) {
  // Z/4 rotation: 1 + t^2 from T^2/Z4, 2 + 2 fixed points of the order 4 elements, 3 orbits of (+-1,+-1)
  EXPECT_EQ(poincare_polynomial(load_setup("rotation4_r2")).total, (Polynomial{8, 0, 1}));
  // S_3 on the A2 root lattice: 1 + (1 + t) + 3
  EXPECT_EQ(poincare_polynomial(load_setup("weyl_a2_r2")).total, (Polynomial{5, 1}));
  EXPECT_EQ(poincare_polynomial(QuotientSetup::from_generators({swap2()}, 2, "s2")).total, (Polynomial{2, 2}));
}

TEST(Poincare, DegreeZeroCountsComponents) {
  for (const auto& name : bundled_setup_names()) {
    auto cat = decompose(load_setup(name));
    auto pp = poincare_polynomial(cat);
    EXPECT_EQ(pp.total.coefficient(0), Rational(static_cast<checked::Int>(cat.components.size()))) << name;
    for (const auto& p : pp.per_component) {
      EXPECT_EQ(p.coefficient(0), Rational(1)) << name;
      for (const auto& c : p.coefficients()) {
        EXPECT_TRUE(c.is_integer()) << name;
        EXPECT_GE(c, Rational(0)) << name;
      }
    }
  }
}

TEST(GridOracle, Examples) {
  auto t = grid_oracle(QuotientSetup::trivial(2), 4);
  EXPECT_EQ(t.total, 16u);
  auto s2 = QuotientSetup::from_generators({swap2()}, 2, "s2");
  auto c = grid_oracle(s2, 2);
  // classes in lex order: swap fixes (1,1), (-1,-1) -> 2; identity: 4 points -> 3 orbits
  EXPECT_EQ(c.total, 5u);
  EXPECT_EQ(c.per_class, (std::vector<std::size_t>{2, 3}));
  EXPECT_EQ(c.stabilizer_histogram.at(2), 2u);
  EXPECT_EQ(c.stabilizer_histogram.at(1), 1u);
  auto g = grid_oracle(g2_setup(), 2);
  EXPECT_EQ(g.total, catalog_grid_census(decompose(g2_setup()), 2).total);
  EXPECT_THROW(grid_oracle(QuotientSetup::from_generators({LatticeAutomorphism{{1, 2}, {0, 1}}}, 2, "x", 10), 2),
               ClosureExceedsBound);
}

TEST(GridOracle, RejectsUnstableGrids) {
  // a conjugate of the swap, still of order two
  auto s = QuotientSetup::from_generators({LatticeAutomorphism{{2, -3}, {1, -2}}}, 2, "x");
  EXPECT_EQ(s.group.order(), 2u);
  EXPECT_THROW(grid_oracle(s, 3), GridNotStable);
}

TEST(GridOracle, AgreesWithCatalogParametrization) {
  for (const auto& name : bundled_setup_names())
    for (checked::Int N : {2, 3, 4}) {
      auto cat = decompose(load_setup(name));
      auto o = grid_oracle(cat.setup, N);
      auto d = catalog_grid_census(cat, N);
      EXPECT_EQ(o.total, d.total) << name << " N=" << N;
      EXPECT_EQ(o.per_class, d.per_class) << name << " N=" << N;
    }
}

TEST(GridOracle, CanonicalizedSamplesAgree) {
  // count per class by sampling parametrizations numerically and canonicalizing under Z(gamma)
  for (const auto& name : {"g2_klein", "rotation4_r2", "s3_r3"}) {
    auto cat = decompose(load_setup(name));
    const checked::Int N = 4;
    auto o = grid_oracle(cat.setup, N);
    for (std::size_t ci = 0; ci < cat.classes.size(); ++ci) {
      const auto& cd = cat.classes[ci];
      QuotientSetup zs{cd.centralizer, cat.setup.rank, "Z", {}};
      std::vector<TorusPoint> reps;
      std::size_t combos = 1;
      for (std::size_t i = 0; i < cd.fixed.dimension(); ++i) combos *= N;
      for (const auto& label : cd.fixed.labels())
        for (std::size_t code = 0; code < combos; ++code) {
          std::vector<Complex> params;
          std::size_t c = code;
          for (std::size_t i = 0; i < cd.fixed.dimension(); ++i, c /= N) params.push_back(root_of_unity(static_cast<long long>(c % N), N));
          auto x = cd.fixed.parametrize(label, params);
          bool in_grid = true;
          for (auto z : x.coords()) {
            double turns = std::arg(z) / (2 * M_PI) * N;
            in_grid = in_grid && std::abs(turns - std::round(turns)) < 1e-6;
          }
          if (!in_grid) continue;
          auto rep = orbit_canonical(zs, x).representative;
          if (std::none_of(reps.begin(), reps.end(), [&](const TorusPoint& q) { return q.approx_equals(rep); }))
            reps.push_back(rep);
        }
      EXPECT_EQ(reps.size(), o.per_class[ci]) << name << " class " << ci;
    }
  }
}
