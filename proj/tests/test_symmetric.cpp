#include <gtest/gtest.h>

#include "mcalg/symmetric.hpp"
#include "oracle.hpp"

using namespace mcalg;

namespace {

const std::vector<std::vector<int>> kShapes = {{1}, {1, 1}, {1, 2}, {2, 2}, {1, 1, 1}, {0, 1}};

// Evaluates the three identities from the raw join table and T, returning
// the first failing (x, y) or nothing.
std::optional<std::pair<Elem, Elem>> oracle_identity(const SymAlgebra& S, Identity id) {
  const auto& J = S.base().join_table();
  const std::size_t n = S.size();
  const Elem one = S.top();
  auto imp = [&](Elem a, Elem b) { return *oracle::imp(J, n, one, a, b); };
  auto join = [&](Elem a, Elem b) { return J[a * n + b]; };
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      Elem v = 0;
      switch (id) {
        case Identity::A2basis: v = imp(x, S.T(x)); break;
        case Identity::A3basis: v = join(x, S.T(x)); break;
        case Identity::A23basis: v = join(join(imp(x, S.T(x)), y), S.T(y)); break;
      }
      if (v != one) return std::make_pair(x, y);
    }
  return std::nullopt;
}

}  // namespace

TEST(SymAlgebra, Validation) {
  EXPECT_THROW(SymAlgebra(chain2(), {1, 0}), algebra_error);
  FinAlgebra four = FinAlgebra::from_join(4, 3, [](Elem x, Elem y) { return x | y; });
  EXPECT_THROW(SymAlgebra(four, {1, 0, 2, 3}), algebra_error);
  EXPECT_NO_THROW(SymAlgebra(four, {0, 2, 1, 3}));
}

TEST(Identities, BuiltinPattern) {
  struct Case {
    const char* alg;
    bool a2, a3, a23;
  };
  for (const Case& c : {Case{"A2", true, false, true}, Case{"A3", false, true, true}, Case{"A4", false, false, false}}) {
    SymAlgebra S = builtin(c.alg);
    SCOPED_TRACE(c.alg);
    EXPECT_EQ(eval_identity(S, Identity::A2basis).passed, c.a2);
    EXPECT_EQ(eval_identity(S, Identity::A3basis).passed, c.a3);
    EXPECT_EQ(eval_identity(S, Identity::A23basis).passed, c.a23);
    for (Identity id : {Identity::A2basis, Identity::A3basis, Identity::A23basis})
      EXPECT_EQ(eval_identity(S, id).passed, !oracle_identity(S, id).has_value());
  }
}

TEST(Identities, A4Witness) {
  SymAlgebra A4 = builtin("A4");
  CheckReport r = eval_identity(A4, Identity::A23basis);
  ASSERT_FALSE(r.passed);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(A4.labels()[r.witness->elems.at(0)], "<0,1>");
  EXPECT_EQ(A4.labels()[r.witness->elems.at(1)], "<0,0>");
  Elem x = r.witness->elems[0], y = r.witness->elems[1];
  Elem v = A4.join(A4.join(A4.imp(x, A4.T(x)), y), A4.T(y));
  EXPECT_EQ(A4.labels()[v], "<1,0>");
  EXPECT_EQ(oracle_identity(A4, Identity::A23basis), std::make_pair(x, y));
}

TEST(Identities, MulticubesInA23) {
  for (const auto& n : kShapes) {
    SymAlgebra S = sym_from_multicube(Multicube(McSpec(n)));
    EXPECT_TRUE(eval_identity(S, Identity::A23basis).passed);
    EXPECT_FALSE(oracle_identity(S, Identity::A23basis).has_value());
  }
}

TEST(Identities, ParseNames) {
  EXPECT_EQ(parse_identity("A23basis"), Identity::A23basis);
  EXPECT_EQ(to_string(Identity::A3basis), "A3basis");
  EXPECT_THROW(parse_identity("A5basis"), algebra_error);
}

TEST(LocalSymmetry, Builtins) {
  EXPECT_TRUE(is_locally_symmetric(builtin("A3")).passed);
  EXPECT_TRUE(is_locally_symmetric(builtin("A4")).passed);
  for (const auto& n : kShapes) EXPECT_TRUE(is_locally_symmetric(sym_from_multicube(Multicube(McSpec(n)))).passed);
}

TEST(LocalSymmetry, UpsetOfSwappedPairFails) {
  // {(a,a), (b,b)} and everything above them in A3 x A3.
  SymAlgebra P = sym_product(builtin("A3"), builtin("A3"));
  std::vector<Elem> keep;
  for (Elem x = 0; x < P.size(); ++x)
    if (P.leq(0, x) || P.leq(4, x)) keep.push_back(x);
  SubAlgebra sub = restrict_to(P.base(), keep);
  std::vector<Elem> T(keep.size());
  for (Elem i = 0; i < keep.size(); ++i) T[i] = sub.index_of[P.T(keep[i])];
  SymAlgebra S(sub.alg, T);
  EXPECT_EQ(S.size(), 7u);
  EXPECT_FALSE(is_locally_symmetric(S).passed);
}

TEST(DerivedDelta, A3) {
  SymAlgebra A3 = builtin("A3");
  DeltaTable D = derived_delta(A3);
  EXPECT_EQ(D.at(2, 0), std::optional<Elem>(1));
  EXPECT_EQ(D.at(2, 1), std::optional<Elem>(0));
  for (Elem a = 0; a < 3; ++a) EXPECT_EQ(D.at(a, a), std::optional<Elem>(a));
  EXPECT_FALSE(D.at(0, 1).has_value());
}

TEST(DerivedDelta, EqualsGeometricOnMulticubes) {
  for (const auto& n : kShapes) {
    Multicube P{McSpec(n)};
    DeltaTable D = derived_delta(sym_from_multicube(P));
    for (Elem b = 0; b < P.size(); ++b)
      for (Elem a = 0; a < P.size(); ++a) {
        if (!mc_leq(P.elem(a), P.elem(b))) continue;
        ASSERT_EQ(D.at(b, a), std::optional<Elem>(P.at(mc_delta(P.spec(), P.elem(b), P.elem(a)))));
      }
    EXPECT_TRUE(check_multicube_symmetry(P).passed);
  }
}

TEST(DeltaOperator, PassesOnMulticubesAndA3) {
  for (const auto& n : kShapes) {
    Multicube P{McSpec(n)};
    EXPECT_TRUE(check_delta_operator(sym_from_multicube(P), delta_table_from(P.reflection())).passed);
  }
  SymAlgebra A3 = builtin("A3");
  EXPECT_TRUE(check_delta_operator(A3, derived_delta(A3)).passed);
}

TEST(DeltaOperator, A4FailsClauseC) {
  SymAlgebra A4 = builtin("A4");
  CheckReport r = check_delta_operator(A4, derived_delta(A4));
  ASSERT_FALSE(r.passed);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->rule, "(c)");
  // b = <0,1> above a = <0,0>: Delta(b, a) = b, so Delta(b, Delta(b, a)) = b != a.
  EXPECT_EQ(r.witness->elems, (std::vector<Elem>{1, 0}));
  EXPECT_EQ(derived_delta(A4).at(1, 0), std::optional<Elem>(1));
}

TEST(DeltaOperator, MissingEntryFailsDefinedness) {
  SymAlgebra A3 = builtin("A3");
  DeltaTable holes(3);
  holes.set(2, 2, 2);
  EXPECT_FALSE(check_delta_operator(A3, holes).passed);
  EXPECT_EQ(check_delta_operator(A3, holes).witness->rule, "(a)");
}

TEST(DeltaLemmas, PassWhereApplicable) {
  for (const auto& n : kShapes) EXPECT_TRUE(check_delta_lemmas(sym_from_multicube(Multicube(McSpec(n)))).passed);
  EXPECT_TRUE(check_delta_lemmas(builtin("A3")).passed);
  EXPECT_TRUE(check_delta_lemmas(sym_product(builtin("A3"), builtin("A2"))).passed);
  CheckReport r = check_delta_lemmas(builtin("A4"));
  EXPECT_FALSE(r.applicable);
}

TEST(Products, LabelsAndT) {
  SymAlgebra P = sym_product(builtin("A3"), builtin("A2"));
  EXPECT_EQ(P.size(), 6u);
  EXPECT_EQ(P.labels()[0], "(a,0)");
  EXPECT_EQ(P.labels()[P.T(0)], "(b,0)");
  EXPECT_TRUE(eval_identity(P, Identity::A23basis).passed);
  EXPECT_FALSE(eval_identity(P, Identity::A3basis).passed);
}

TEST(Products, CubicModelsAreSymmetric) {
  auto m = signed_algebra(2);
  SymAlgebra S = sym_from_cubic(m.alg, m.labels());
  EXPECT_TRUE(eval_identity(S, Identity::A23basis).passed);
  EXPECT_TRUE(is_locally_symmetric(S).passed);
  EXPECT_TRUE(check_delta_operator(S, delta_table_from(m.alg)).passed);
  EXPECT_EQ(derived_delta(S), delta_table_from(m.alg));
}
