#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "hopfcat/duoidal.hpp"
#include "hopfcat/fixtures.hpp"
#include "hopfcat/transform.hpp"

using namespace hopfcat;
namespace fx = hopfcat::fixtures;

namespace {

const Field Q = Field::rationals();

ObjectSet objects(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
  return ObjectSet(labels);
}

std::set<std::string> failed_axioms(const Report& r) {
  std::set<std::string> out;
  for (const auto& f : r.items())
    if (f.status == Status::fail) out.insert(f.axiom);
  return out;
}

/// The pair groupoid on {1,2} written directly as a bimonoid: every space is k,
/// mu_{x,y} sums the two summands.
BimonoidData pair_bimonoid() {
  const ObjectSet ob = objects(2);
  BimonoidData b{Q, MkXObject(ob, {1, 1, 1, 1}), {}, {}, {}, {}};
  for (std::size_t x = 0; x < 2; ++x) {
    for (std::size_t y = 0; y < 2; ++y) {
      b.mu.push_back(LinMap::from_ints(Q, {{1, 1}}));
      b.eta.push_back(x == y ? LinMap::identity(Q, 1) : LinMap(Q, 1, 0));
      b.delta.push_back(LinMap::identity(Q, 1));
      b.eps.push_back(LinMap::identity(Q, 1));
    }
  }
  return b;
}

}  // namespace

TEST(Tensors, WhiteAndBlackDimensions) {
  const ObjectSet ob = objects(2);
  const MkXObject j = unit_j(ob);
  EXPECT_EQ(white_tensor(j, j).dims, (std::vector<std::size_t>{2, 2, 2, 2}));
  const MkXObject m(ob, {3, 0, 2, 5});
  EXPECT_EQ(white_tensor(m, unit_i(ob)), m);
  EXPECT_EQ(white_tensor(unit_i(ob), m), m);
  EXPECT_EQ(black_tensor(m, j), m);
  const MkXObject n(ob, {1, 2, 3, 4});
  // (M (.) N)_{1,2} = M_{11} N_{12} + M_{12} N_{22}
  EXPECT_EQ(white_tensor(m, n).dim(0, 1), 3u * 2u + 0u * 4u);
  EXPECT_EQ(black_tensor(m, n).dims, (std::vector<std::size_t>{3, 0, 6, 20}));
  EXPECT_THROW(white_tensor(m, unit_j(objects(3))), PreconditionError);
}

TEST(Zeta, OneObjectIsIdentity) {
  const ObjectSet ob = objects(1);
  const MkXObject j = unit_j(ob);
  const Family z = zeta(Q, j, j, j, j);
  ASSERT_EQ(z.size(), 1u);
  EXPECT_EQ(z[0], LinMap::identity(Q, 1));
}

TEST(Zeta, TwoObjectsIncludeTheDiagonal) {
  const ObjectSet ob = objects(2);
  const MkXObject j = unit_j(ob);
  const Family z = zeta(Q, j, j, j, j);
  for (const auto& block : z) {
    ASSERT_EQ(block.rows(), 4u);
    ASSERT_EQ(block.cols(), 2u);
    // summand z goes to (u, v) = (z, z), flat index 2z + z.
    EXPECT_EQ(block, LinMap::from_ints(Q, {{1, 0}, {0, 0}, {0, 0}, {0, 1}}));
  }
}

TEST(Zeta, SwapsTheMiddleFactors) {
  const ObjectSet ob = objects(1);
  const MkXObject m(ob, {2}), n(ob, {3}), p(ob, {2}), q(ob, {1});
  const Family z = zeta(Q, m, n, p, q);
  // m (x) n (x) p (x) q -> m (x) p (x) n (x) q
  EXPECT_EQ(z[0], permute_factors(Q, {2, 3, 2, 1}, {0, 2, 1, 3}));
}

TEST(DuoidalStructure, UnitLawsHoldUpToFourObjects) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const Report r = check_duoidal_structure(Q, objects(n));
    EXPECT_TRUE(r.passed()) << n;
    EXPECT_EQ(r.find("zeta-varpi").size(), n * n);
  }
}

TEST(Bimonoid, FromHopfFixturesPass) {
  for (const auto& [name, a] : fx::hopf_fixtures()) {
    EXPECT_TRUE(verify_bimonoid(bimonoid_from_category(a)).passed()) << name;
  }
  EXPECT_TRUE(verify_bimonoid(bimonoid_from_category(fx::idempotent_monoid())).passed());
}

TEST(Bimonoid, FaultInjectedDeltaFailsCompatibility) {
  auto b = bimonoid_from_category(fx::pair_category(2));
  b.delta[1] = LinMap::from_ints(Q, {{2}});
  const Report r = verify_bimonoid(b);
  EXPECT_FALSE(r.passed());
  // Delta_{12} enters once on each side for the (1,2) block, so only the
  // diagonal blocks whose sums pass through A_{12} (x) A_{21} break.
  std::set<std::vector<std::string>> failing;
  for (const auto* f : r.find("bimonoid-comult")) {
    if (f->status == Status::fail) {
      ASSERT_TRUE(f->witness.has_value());
      failing.insert(f->objects);
    }
  }
  EXPECT_EQ(failing, (std::set<std::vector<std::string>>{{"1", "1"}, {"2", "2"}}));
}

TEST(Bimonoid, RoundTripsAreExact) {
  for (const auto& [name, a] : fx::hopf_fixtures()) {
    const BimonoidData b = bimonoid_from_category(a);
    EXPECT_EQ(category_from_bimonoid(b), strip_antipode(a)) << name;
    EXPECT_EQ(bimonoid_from_category(category_from_bimonoid(b)), b) << name;
  }
  const BimonoidData hand = pair_bimonoid();
  ASSERT_TRUE(verify_bimonoid(hand).passed());
  EXPECT_EQ(category_from_bimonoid(hand), strip_antipode(fx::pair_category(2)));
  EXPECT_EQ(bimonoid_from_category(category_from_bimonoid(hand)), hand);
}

TEST(Bimonoid, InvalidInputIsRejectedUnlessUnchecked) {
  auto b = pair_bimonoid();
  b.eps[0] = LinMap::from_ints(Q, {{3}});
  EXPECT_THROW(category_from_bimonoid(b), PreconditionError);
  EXPECT_NO_THROW(category_from_bimonoid(b, false));
}

TEST(Bimonoid, MutantsFailOnBothSidesWithMatchingAxioms) {
  const Scalar two = Scalar::from_int(Q, 2);
  const std::vector<std::function<void(HopfCategory&)>> mutations = {
      [&](HopfCategory& a) { a.mult(0, 0, 0).at(0, 0) += two; },
      [&](HopfCategory& a) { a.unit(0).at(0, 0) = two; },
      [&](HopfCategory& a) { a.comult(0, 0).at(0, 0) += two; },
      [&](HopfCategory& a) { a.counit(0, 0).at(0, 0) = Scalar::zero(Q); },
      [&](HopfCategory& a) { a.mult(0, 0, 0) = a.mult(0, 0, 0).scaled(two); },
  };
  for (const auto& [name, base] : fx::hopf_fixtures()) {
    for (std::size_t i = 0; i < mutations.size(); ++i) {
      HopfCategory a = strip_antipode(base);
      mutations[i](a);
      const Report cat = verify_structure(a, Level::semihopf);
      const Report bim = verify_bimonoid(bimonoid_from_category(a));
      EXPECT_FALSE(cat.passed()) << name << " mutant " << i;
      EXPECT_EQ(cat.passed(), bim.passed()) << name << " mutant " << i;
      std::set<std::string> mapped;
      for (const auto& ax : failed_axioms(cat)) mapped.insert(bimonoid_axiom_map().at(ax));
      EXPECT_EQ(mapped, failed_axioms(bim)) << name << " mutant " << i;
    }
  }
}
