#include <gtest/gtest.h>

#include "mcalg/models.hpp"
#include "oracle.hpp"

using namespace mcalg;

namespace {

SignedModel S1() { return signed_algebra(1); }
SignedModel S2() { return signed_algebra(2); }

}  // namespace

TEST(FinAlgebra, ChainOrder) {
  FinAlgebra c = chain2();
  EXPECT_TRUE(c.leq(0, 1));
  EXPECT_FALSE(c.leq(1, 0));
  EXPECT_EQ(c.top(), 1u);
}

TEST(FinAlgebra, TopIsMaximum) {
  auto m = S2();
  const FinAlgebra& A = m.alg.base();
  for (Elem x = 0; x < A.size(); ++x) {
    EXPECT_TRUE(A.leq(x, A.top()));
    if (x != A.top()) {
      EXPECT_FALSE(A.leq(A.top(), x));
    }
  }
}

TEST(FinAlgebra, SignedJoinOrder) {
  auto m = S2();
  EXPECT_TRUE(m.alg.base().leq(m.at(make_signed(2, 0b01, 0)), m.at(make_signed(2, 0, 0))));
}

TEST(FinAlgebra, MeetIdempotent) {
  auto m = S2();
  for (Elem x = 0; x < m.elems.size(); ++x) EXPECT_EQ(m.alg.base().meet(x, x), x);
}

TEST(FinAlgebra, VerticesHaveNoMeet) {
  auto m = S1();
  Elem plus = m.at(make_signed(1, 1, 0));
  Elem minus = m.at(make_signed(1, 0, 1));
  EXPECT_FALSE(m.alg.base().meet(plus, minus).has_value());
  EXPECT_FALSE(m.alg.base().has_common_lower_bound(plus, minus));
}

TEST(FinAlgebra, MeetMatchesBruteForce) {
  for (int g = 0; g <= 3; ++g) {
    auto m = signed_algebra(g);
    const FinAlgebra& A = m.alg.base();
    for (Elem x = 0; x < A.size(); ++x)
      for (Elem y = 0; y < A.size(); ++y) EXPECT_EQ(A.meet(x, y), oracle::meet(A.join_table(), A.size(), x, y));
  }
}

TEST(FinAlgebra, ImpMatchesBruteForce) {
  for (int k = 0; k <= 3; ++k) {
    auto m = interval_algebra(k);
    const FinAlgebra& A = m.alg.base();
    for (Elem x = 0; x < A.size(); ++x)
      for (Elem y = 0; y < A.size(); ++y) {
        auto want = oracle::imp(A.join_table(), A.size(), A.top(), x, y);
        ASSERT_TRUE(want.has_value());
        EXPECT_EQ(A.imp(x, y), *want);
      }
  }
}

TEST(FinAlgebra, ImpSelfIsTop) {
  auto m = S2();
  for (Elem x = 0; x < m.elems.size(); ++x) EXPECT_EQ(m.alg.base().imp(x, x), m.alg.top());
}

TEST(FinAlgebra, IntervalImp) {
  auto m = interval_algebra(1);
  Elem lo = m.at(make_interval(BoolAlg(1), 0, 0));
  Elem hi = m.at(make_interval(BoolAlg(1), 1, 1));
  EXPECT_EQ(m.alg.base().imp(lo, hi), hi);
}

TEST(FinAlgebra, SignedImpOfVertices) {
  auto m = S1();
  Elem plus = m.at(make_signed(1, 1, 0));
  Elem minus = m.at(make_signed(1, 0, 1));
  EXPECT_EQ(m.alg.base().imp(plus, minus), minus);
}

TEST(FinAlgebra, RejectsBadTables) {
  EXPECT_THROW(FinAlgebra(2, {0, 1, 1}, 1), algebra_error);
  EXPECT_THROW(FinAlgebra(2, {0, 1, 1, 1}, 5), algebra_error);
}

TEST(Checks, SemilatticePasses) {
  EXPECT_TRUE(check_semilattice(chain2()).passed);
  EXPECT_TRUE(check_semilattice(S2().alg.base()).passed);
  EXPECT_TRUE(check_implication_axioms(chain2()).passed);
  EXPECT_TRUE(check_implication_axioms(S2().alg.base()).passed);
}

TEST(Checks, NonAssociativeJoinFails) {
  // 0 v 1 = 2, 1 v 2 = 1: not associative, with a witness triple.
  FinAlgebra bad(4, {0, 2, 2, 3, 2, 1, 1, 3, 2, 1, 2, 3, 3, 3, 3, 3}, 3);
  CheckReport r = check_semilattice(bad);
  EXPECT_FALSE(r.passed);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_FALSE(r.witness->elems.empty());
  EXPECT_FALSE(check_implication_axioms(bad).passed);
}

TEST(Checks, NonCommutativeJoinFails) {
  FinAlgebra bad(3, {0, 2, 2, 1, 1, 2, 2, 2, 2}, 2);
  CheckReport r = check_semilattice(bad);
  EXPECT_FALSE(r.passed);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->rule, "commutative");
  EXPECT_EQ(r.witness->elems, (std::vector<Elem>{0, 1}));
}

TEST(Morphism, IdentityAndConstant) {
  const FinAlgebra A = S2().alg.base();
  std::vector<Elem> id(A.size()), one(A.size(), A.top());
  for (Elem x = 0; x < A.size(); ++x) id[x] = x;
  EXPECT_TRUE(check_morphism(id, A, A).passed);
  EXPECT_TRUE(check_morphism(one, A, A).passed);
}

TEST(Morphism, VertexSwap) {
  auto m = S1();
  std::vector<Elem> f(m.elems.size());
  for (Elem x = 0; x < f.size(); ++x) f[x] = m.at({m.elems[x].neg, m.elems[x].pos});
  EXPECT_TRUE(check_morphism(f, m.alg.base(), m.alg.base()).passed);
  for (Elem x = 0; x < f.size(); ++x) EXPECT_EQ(f[x], m.alg.delta(m.alg.top(), x));
}

TEST(Morphism, RejectsNonMorphism) {
  const FinAlgebra A = chain2();
  EXPECT_FALSE(check_morphism({1, 0}, A, A).passed);
  EXPECT_FALSE(check_morphism({0}, A, A).passed);
}

TEST(Helpers, CoverEdgesOfChain) {
  auto e = cover_edges(chain2());
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e[0], (std::pair<Elem, Elem>{0, 1}));
}

TEST(Helpers, RestrictToUpset) {
  auto m = S2();
  const FinAlgebra& A = m.alg.base();
  Elem x = m.at(make_signed(2, 0b01, 0b10));
  SubAlgebra sub = restrict_to(A, A.up_set(x));
  EXPECT_EQ(sub.members.size(), 4u);
  EXPECT_TRUE(check_implication_axioms(sub.alg).passed);
  std::vector<bool> in(A.size(), false);
  for (Elem y : sub.members) in[y] = true;
  EXPECT_TRUE(is_upward_closed(A, in));
}

TEST(Suite, MaxSizeEnvSwitchesToSampling) {
  SuiteOptions o;
  o.exhaustive_cap = 2;
  CheckReport r = check_semilattice(S2().alg.base(), o);
  EXPECT_TRUE(r.passed);
  EXPECT_TRUE(r.sampled);
  EXPECT_EQ(r.seed, kDefaultSeed);
}
