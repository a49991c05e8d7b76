#include <gtest/gtest.h>

#include "mcalg/fixpoints.hpp"

using namespace mcalg;

namespace {

const std::vector<std::vector<int>> kShapes = {{1}, {1, 1}, {1, 2}, {2, 2}, {2, 1}, {0, 1}};

struct Cube {
  Multicube P;
  FixContext C;
  explicit Cube(std::vector<int> n) : P(McSpec(std::move(n))), C(FixContext::from_multicube(P)) {}
  Elem at(McVec g, Mask s) const { return P.at({std::move(g), s}); }
  Elem top() const { return P.top(); }
};

// Brute-force fixed-point data from the geometric reflection of flats.
struct FlatOracle {
  const Multicube& P;
  bool fixes(Elem v, Elem u) const {
    return mc_leq(P.elem(u), P.elem(v)) && mc_delta(P.spec(), P.elem(v), P.elem(u)) == P.elem(u);
  }
  std::vector<Elem> fix(Elem u) const {
    std::vector<Elem> out;
    for (Elem v = 0; v < P.size(); ++v)
      if (fixes(v, u)) out.push_back(v);
    return out;
  }
  std::vector<Elem> phi(Elem u) const {
    std::vector<Elem> out;
    for (Elem x = 0; x < P.size(); ++x)
      if (mc_leq(P.elem(x), P.elem(u)) && mc_delta(P.spec(), P.elem(u), P.elem(x)) == P.elem(x)) out.push_back(x);
    return out;
  }
  // Least T-fixed flat above u.
  Elem beta(Elem u) const {
    Elem best = kNone;
    for (Elem w = 0; w < P.size(); ++w) {
      if (!mc_leq(P.elem(u), P.elem(w)) || mc_T(P.spec(), P.elem(w)) != P.elem(w)) continue;
      if (best == kNone || mc_leq(P.elem(w), P.elem(best))) best = w;
    }
    return best;
  }
  // Greatest element of Fix(u).
  Elem delta(Elem u) const {
    Elem best = kNone;
    for (Elem v : fix(u))
      if (best == kNone || mc_leq(P.elem(best), P.elem(v))) best = v;
    return best;
  }
  bool nowhere_invariant(Elem u) const { return fix(u) == std::vector<Elem>{u}; }
};

}  // namespace

TEST(FixSets, OneDimensionalCube) {
  Cube c({1});
  EXPECT_EQ(fix_set(c.C, c.top()), std::vector<Elem>{c.top()});
  EXPECT_EQ(fix_set(c.C, c.at({0}, 0)), (std::vector<Elem>{c.at({0}, 0), c.top()}));
  EXPECT_EQ(fix_set(c.C, c.at({1}, 0)), std::vector<Elem>{c.at({1}, 0)});
  EXPECT_EQ(phi_set(c.C, c.top()), (std::vector<Elem>{c.at({0}, 0), c.top()}));
}

TEST(FixSets, PhiTopOfSquareHasFourFlats) {
  Cube c({1, 1});
  EXPECT_EQ(phi_set(c.C, c.top()).size(), 4u);
  for (Elem u = 0; u < c.P.size(); ++u) {
    auto phi = phi_set(c.C, u);
    EXPECT_TRUE(std::binary_search(phi.begin(), phi.end(), u));
  }
}

TEST(FixSets, AgreeWithFlatOracle) {
  for (const auto& n : kShapes) {
    Cube c(n);
    FlatOracle o{c.P};
    for (Elem u = 0; u < c.P.size(); ++u) {
      ASSERT_EQ(fix_set(c.C, u), o.fix(u));
      ASSERT_EQ(phi_set(c.C, u), o.phi(u));
      ASSERT_EQ(beta(c.C, u), o.beta(u));
      ASSERT_EQ(delta_fn(c.C, u), o.delta(u));
      ASSERT_EQ(is_nowhere_invariant(c.C, u), o.nowhere_invariant(u));
    }
  }
}

TEST(BetaDelta, Examples) {
  Cube c({1, 1});
  Elem u = c.at({0, 1}, 0);
  EXPECT_EQ(beta(c.C, u), c.at({0, 0}, 0b10));
  EXPECT_EQ(delta_fn(c.C, u), c.at({0, 1}, 0b01));
  for (Elem x = 0; x < c.P.size(); ++x) EXPECT_EQ(beta(c.C, x, x), x);

  Cube l({1});
  EXPECT_EQ(delta_fn(l.C, l.at({0}, 0)), l.top());
  EXPECT_EQ(delta_fn(l.C, l.at({1}, 0)), l.at({1}, 0));
}

TEST(Alpha, Examples) {
  Cube c({1, 1});
  Elem u = c.at({0, 1}, 0);
  AlphaIso id = alpha_iso(c.C, u, u);
  EXPECT_EQ(id.map, (std::vector<std::pair<Elem, Elem>>{{u, u}}));
  AlphaIso a = alpha_iso(c.C, u, c.top());
  Elem du = c.at({0, 1}, 0b01);
  EXPECT_EQ(a.domain, (std::vector<Elem>{u, du}));
  std::vector<std::pair<Elem, Elem>> want = {{u, c.at({0, 0}, 0b10)}, {du, c.top()}};
  EXPECT_EQ(a.map, want);
  EXPECT_EQ(c.C.meet(c.top(), du), du);
  EXPECT_THROW(alpha_iso(c.C, c.top(), u), algebra_error);
}

TEST(NowhereInvariance, OneDimensionalCube) {
  Cube c({1});
  EXPECT_TRUE(is_nowhere_invariant(c.C, c.top()));
  EXPECT_FALSE(is_nowhere_invariant(c.C, c.at({0}, 0)));
  EXPECT_TRUE(is_nowhere_invariant(c.C, c.at({1}, 0)));
  EXPECT_TRUE(is_nowhere_invariant(c.C, c.at({-1}, 0)));
}

TEST(NowhereInvariance, ClosedFormsAgree) {
  for (const auto& n : kShapes) {
    Cube c(n);
    for (Elem u = 0; u < c.P.size(); ++u) {
      ASSERT_EQ(is_nowhere_invariant(c.C, u), is_nowhere_invariant_brute(c.C, u));
      ASSERT_EQ(is_nowhere_invariant(c.C, u), mc_is_nowhere_invariant(c.P.spec(), c.P.elem(u)));
    }
  }
}

TEST(Nucleus, MatchesMulticubeNucleus) {
  for (const auto& n : kShapes) {
    Cube c(n);
    CubicSub a = nucleus(c.C), b = mc_nucleus(c.P);
    EXPECT_EQ(a.members, b.members);
    EXPECT_EQ(a.alg.delta_table(), b.alg.delta_table());
  }
  Cube l({1});
  CubicSub N = nucleus(l.C);
  EXPECT_EQ(N.alg.size(), 3u);
  EXPECT_TRUE(check_cubic_axioms(N.alg).passed);
  EXPECT_TRUE(check_mr(N.alg).passed);
}

TEST(Nucleus, A3IsWhole) {
  FixContext C = FixContext::from_symmetric(builtin("A3"));
  EXPECT_EQ(nucleus(C).members, (std::vector<Elem>{0, 1, 2}));
}

TEST(Localization, OneDimensionalCube) {
  Cube c({1});
  EXPECT_EQ(localization_star(c.C, c.top()), std::vector<Elem>{c.top()});
  EXPECT_EQ(localization_star(c.C, c.at({0}, 0)), (std::vector<Elem>{c.at({0}, 0), c.top()}));
  std::vector<Elem> want = {c.at({-1}, 0), c.at({1}, 0), c.top()};
  std::sort(want.begin(), want.end());
  EXPECT_EQ(localization_star(c.C, c.at({1}, 0)), want);
}

TEST(Psi, OneDimensionalCube) {
  Cube c({1});
  Elem z = c.at({0}, 0);
  EXPECT_EQ(psi_iso(c.C, z, z), std::make_pair(c.top(), c.top()));
  EXPECT_EQ(psi_iso(c.C, z, c.top()), std::make_pair(c.top(), z));
  EXPECT_THROW(psi_iso(c.C, c.top(), z), algebra_error);
}

TEST(GlobalEmbed, OneDimensionalCube) {
  Cube c({1});
  EXPECT_EQ(global_embed(c.C, c.top()), std::make_pair(c.top(), c.top()));
  EXPECT_EQ(global_embed(c.C, c.at({0}, 0)), std::make_pair(c.top(), c.at({0}, 0)));
  EXPECT_EQ(global_embed(c.C, c.at({1}, 0)), std::make_pair(c.at({1}, 0), c.top()));
}

TEST(GlobalEmbed, InjectiveWithUpwardClosedImage) {
  for (const auto& n : kShapes) {
    Cube c(n);
    std::set<std::pair<Elem, Elem>> image;
    for (Elem x = 0; x < c.P.size(); ++x) image.insert(global_embed(c.C, x));
    EXPECT_EQ(image.size(), c.P.size());
    // Every <a, b> above an image point with a nowhere invariant and b
    // T-fixed is attained.
    for (const auto& [d, b] : std::vector<std::pair<Elem, Elem>>(image.begin(), image.end()))
      for (Elem a2 = 0; a2 < c.P.size(); ++a2)
        for (Elem b2 = 0; b2 < c.P.size(); ++b2) {
          if (!c.C.leq(d, a2) || !c.C.leq(b, b2)) continue;
          if (!is_nowhere_invariant(c.C, a2) || c.P.T()[b2] != b2) continue;
          ASSERT_TRUE(image.count({a2, b2}));
        }
  }
}

TEST(PhiOneInterval, NotApplicableOnLine) {
  Cube c({1});
  EXPECT_FALSE(generating_element(c.C).has_value());
  EXPECT_FALSE(check_phi_one_interval(c.C, c.at({1}, 0)).applicable);
}

TEST(PhiOneInterval, SignedLine) {
  auto m = signed_algebra(1);
  FixContext C = FixContext::from_cubic(m.alg, m.labels());
  Elem plus = m.at({1, 0});
  EXPECT_EQ(localization_star(C, plus).size(), 3u);
  EXPECT_EQ(phi_set(C, C.top()), std::vector<Elem>{C.top()});
  EXPECT_TRUE(check_phi_one_interval(C, plus).passed);
}

TEST(Suites, AllPassOnMulticubes) {
  for (const auto& n : kShapes) {
    Cube c(n);
    SCOPED_TRACE(c.P.size());
    EXPECT_TRUE(check_fixpoint_lemmas(c.C).passed);
    EXPECT_TRUE(check_alpha_iso(c.C).passed);
    EXPECT_TRUE(check_nowhere_invariance(c.C).passed);
    EXPECT_TRUE(check_nucleus(c.C).passed);
    EXPECT_TRUE(check_localizations(c.C).passed);
    EXPECT_TRUE(check_psi(c.C).passed);
    EXPECT_TRUE(check_global_embed(c.C).passed);
  }
}

TEST(Suites, AllPassOnOtherModels) {
  std::vector<FixContext> ctx;
  ctx.push_back(FixContext::from_symmetric(builtin("A3")));
  ctx.push_back(FixContext::from_symmetric(sym_product(builtin("A3"), builtin("A3"))));
  ctx.push_back(FixContext::from_cubic(signed_algebra(2).alg));
  ctx.push_back(FixContext::from_cubic(interval_algebra(2).alg));
  for (const auto& C : ctx) {
    EXPECT_TRUE(check_fixpoint_lemmas(C).passed);
    EXPECT_TRUE(check_alpha_iso(C).passed);
    EXPECT_TRUE(check_nowhere_invariance(C).passed);
    EXPECT_TRUE(check_nucleus(C).passed);
    EXPECT_TRUE(check_localizations(C).passed);
    EXPECT_TRUE(check_psi(C).passed);
    EXPECT_TRUE(check_global_embed(C).passed);
  }
}

TEST(FixContext, RejectsA4) { EXPECT_THROW(FixContext::from_symmetric(builtin("A4")), algebra_error); }
