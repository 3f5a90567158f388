#include <gtest/gtest.h>

#include "hopfcat/fixtures.hpp"
#include "hopfcat/transform.hpp"
#include "hopfcat/verify.hpp"

using namespace hopfcat;
namespace fx = hopfcat::fixtures;

namespace {

const Field Q = Field::rationals();

// Sweedler's algebra written out independently: product of g^a x^b and
// g^c x^d by the commutation rule, antipode values by hand.
std::vector<long> sweedler_product(int a, int b, int c, int d) {
  std::vector<long> out(4, 0);
  if (b + d < 2) out[(a + c) % 2 + 2 * (b + d)] = (b * c) % 2 ? -1 : 1;
  return out;
}

}  // namespace

TEST(VerifyStructure, GroupAlgebraZ2PassesHopf) {
  const auto a = fx::group_algebra(2);
  // Structure constants by hand: e*e = e, e*g = g, g*e = g, g*g = e.
  const LinMap m = LinMap::from_ints(Q, {{1, 0, 0, 1}, {0, 1, 1, 0}});
  EXPECT_EQ(a.mult(0, 0, 0), m);
  EXPECT_EQ(a.antipode(0, 0), LinMap::identity(Q, 2));
  EXPECT_TRUE(verify_structure(a, Level::hopf).passed());
}

TEST(VerifyStructure, PairGroupoidAllConstantsOne) {
  const auto a = fx::pair_category(2);
  for (std::size_t x = 0; x < 2; ++x) {
    for (std::size_t y = 0; y < 2; ++y) {
      EXPECT_EQ(a.dim(x, y), 1u);
      EXPECT_TRUE(a.comult(x, y)(0, 0).is_one());
      EXPECT_TRUE(a.counit(x, y)(0, 0).is_one());
      EXPECT_TRUE(a.antipode(x, y)(0, 0).is_one());
      for (std::size_t z = 0; z < 2; ++z) EXPECT_TRUE(a.mult(x, y, z)(0, 0).is_one());
    }
  }
  EXPECT_TRUE(verify_structure(a, Level::hopf).passed());
}

TEST(VerifyStructure, IdempotentMonoidWithIdentityAntipodeFails) {
  auto a = fx::idempotent_monoid();
  EXPECT_TRUE(verify_structure(a, Level::semihopf).passed());
  a.add_antipode();
  a.antipode(0, 0) = LinMap::identity(Q, 2);
  const Report r = verify_structure(a, Level::hopf);
  EXPECT_FALSE(r.passed());
  const auto found = r.find("antipode-right");
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0]->status, Status::fail);
  ASSERT_TRUE(found[0]->witness.has_value());
  EXPECT_EQ(*found[0]->witness, std::vector<std::size_t>{1});  // the basis element z
  EXPECT_EQ(found[0]->failures, 1u);
}

TEST(VerifyStructure, MissingAntipodeAtLevelHopfThrows) {
  EXPECT_THROW(verify_structure(fx::idempotent_monoid(), Level::hopf), MissingAntipode);
}

TEST(VerifyStructure, MalformedShapesThrow) {
  auto a = fx::group_algebra(2);
  a.counit(0, 0) = LinMap(Q, 1, 3);
  EXPECT_THROW(verify_structure(a, Level::category), MalformedData);
}

TEST(VerifyStructure, SweedlerMatchesIndependentTable) {
  const auto a = fx::sweedler();
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const auto expected = sweedler_product(i % 2, i / 2, j % 2, j / 2);
      for (int k = 0; k < 4; ++k) {
        EXPECT_EQ(a.mult(0, 0, 0)(k, i * 4 + j), Scalar::from_int(Q, expected[k]));
      }
    }
  }
  EXPECT_TRUE(verify_structure(a, Level::hopf).passed());
}

TEST(VerifyStructure, EveryFixturePassesHopfAndEmptyHomsAreHarmless) {
  for (const auto& [name, a] : fx::hopf_fixtures()) {
    const Report r = verify_structure(a, Level::hopf);
    EXPECT_TRUE(r.passed()) << name;
  }
  const auto d = fx::disjoint_category();
  EXPECT_EQ(d.dim(0, 1), 0u);
  EXPECT_EQ(d.dim(1, 0), 0u);
}

TEST(VerifyStructure, FaultInjectionIsLocated) {
  auto a = fx::pair_category(3);
  a.mult(0, 1, 2).at(0, 0) = Scalar::from_int(Q, 2);
  const Report r = verify_structure(a, Level::semihopf);
  EXPECT_FALSE(r.passed());
  bool saw = false;
  for (const auto& f : r.items()) {
    if (f.status == Status::fail && f.axiom == "comult-mult") {
      EXPECT_EQ(f.objects, (std::vector<std::string>{"1", "2", "3"}));
      saw = true;
    }
  }
  EXPECT_TRUE(saw);
}

TEST(VerifyStructure, SingletonMatchesClassicalAntipodeFormula) {
  // h_(1) S(h_(2)) = eps(h) 1 evaluated basis by basis without the verifier.
  const auto a = fx::sweedler();
  const LinMap lhs = a.mult(0, 0, 0) * kron(LinMap::identity(Q, 4), a.antipode(0, 0)) * a.comult(0, 0);
  for (std::size_t h = 0; h < 4; ++h) {
    for (std::size_t k = 0; k < 4; ++k) {
      const Scalar expected = k == 0 ? a.counit(0, 0)(0, h) : Scalar::zero(Q);
      EXPECT_EQ(lhs(k, h), expected);
    }
  }
}

TEST(AntipodeTheorems, CyclicGroupHasInvolutiveAntipode) {
  const auto a = fx::group_algebra(3);
  const Report r = check_antipode_theorems(a);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(involution_conditions(a), (std::array<bool, 3>{true, true, true}));
}

TEST(AntipodeTheorems, SweedlerAntipodeIsNotInvolutive) {
  const auto a = fx::sweedler();
  const Report r = check_antipode_theorems(a);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(involution_conditions(a), (std::array<bool, 3>{false, false, false}));
  const LinMap s2 = a.antipode(0, 0) * a.antipode(0, 0);
  EXPECT_EQ(s2(2, 2), Scalar::from_int(Q, -1));  // S^2(x) = -x
}

TEST(AntipodeTheorems, PairGroupoidAllHold) {
  const auto a = fx::pair_category(2);
  EXPECT_TRUE(check_antipode_theorems(a).passed());
  EXPECT_EQ(involution_conditions(a), (std::array<bool, 3>{true, true, true}));
}

TEST(AntipodeTheorems, RejectsNonHopfInput) {
  auto a = fx::idempotent_monoid();
  a.add_antipode();
  a.antipode(0, 0) = LinMap::identity(Q, 2);
  EXPECT_THROW(check_antipode_theorems(a), PreconditionError);
}

TEST(Transform, OppositeOfCommutativeCocommutativeIsIdentity) {
  const auto a = fx::group_algebra(2);
  EXPECT_EQ(transform(a, Variance::opposite), a);
}

TEST(Transform, InvolutionsAndCommutation) {
  for (const auto& [name, a] : fx::hopf_fixtures()) {
    const auto op = transform(a, Variance::opposite);
    const auto cop = transform(a, Variance::coopposite);
    EXPECT_EQ(transform(op, Variance::opposite), a) << name;
    EXPECT_EQ(transform(cop, Variance::coopposite), a) << name;
    EXPECT_EQ(transform(op, Variance::coopposite), transform(cop, Variance::opposite)) << name;
    EXPECT_EQ(transform(op, Variance::coopposite), transform(a, Variance::opcop)) << name;
    EXPECT_TRUE(verify_structure(op, Level::hopf).passed()) << name;
    EXPECT_TRUE(verify_structure(cop, Level::hopf).passed()) << name;
  }
}

TEST(Transform, SweedlerOpcopPassesHopf) {
  const auto a = fx::sweedler();
  const auto oc = transform(a, Variance::opcop);
  EXPECT_TRUE(verify_structure(oc, Level::hopf).passed());
  EXPECT_FALSE(oc == a);
}

TEST(Strictness, ConnectedGroupoidIsStrict) {
  const auto s = strictness(fx::pair_category(3));
  EXPECT_TRUE(s.all_surjective);
  EXPECT_TRUE(s.loops_surjective);
  EXPECT_TRUE(s.report.passed());
}

TEST(Strictness, ZeroOffDiagonalIsNotStrict) {
  HopfCategory a(Q, ObjectSet({"1", "2"}), {1, 0, 0, 1});
  const Scalar one = Scalar::one(Q);
  for (std::size_t x = 0; x < 2; ++x) {
    set_mult(a, x, x, x, 0, 0, 0, one);
    a.unit(x).at(0, 0) = one;
  }
  ASSERT_TRUE(verify_structure(a, Level::category).passed());
  EXPECT_EQ(rank(a.mult(0, 1, 0)), 0u);
  const auto s = strictness(a);
  EXPECT_FALSE(s.all_surjective);
  EXPECT_FALSE(s.loops_surjective);
  const Report r = check_strictness(a);
  EXPECT_FALSE(r.passed());
  ASSERT_EQ(r.find("strict-conditions-agree").size(), 1u);
  EXPECT_EQ(r.find("strict-conditions-agree")[0]->status, Status::pass);
}

TEST(Strictness, SingletonHopfAlgebraIsStrict) {
  EXPECT_TRUE(is_strict(fx::sweedler()));
  EXPECT_TRUE(is_strict(fx::group_algebra(3)));
}
