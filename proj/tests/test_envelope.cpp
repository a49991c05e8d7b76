#include <gtest/gtest.h>

#include "mcalg/envelope.hpp"

using namespace mcalg;

namespace {

// Up-closure of {(a,a), (b,b)} in A3 x A3; two atoms per factor.
PresentedSpec i7_spec() { return {4, {5, 7, 10, 11, 13, 14, 15}, {{5, 10}, {7, 11}, {13, 14}}}; }

// Up-closure of {{1},{2}} in subsets of {1,2,3}, T swapping atoms 1 and 2.
PresentedSpec atoms123_spec() { return {3, {1, 2, 3, 5, 6, 7}, {{1, 2}, {5, 6}}}; }

bool is_morphism(const SymAlgebra& A, const SymAlgebra& B, const std::vector<Elem>& f) {
  if (f[A.top()] != B.top()) return false;
  for (Elem x = 0; x < A.size(); ++x) {
    if (f[A.T(x)] != B.T(f[x])) return false;
    for (Elem y = 0; y < A.size(); ++y) {
      if (f[A.join(x, y)] != B.join(f[x], f[y])) return false;
      if (f[A.imp(x, y)] != B.imp(f[x], f[y])) return false;
    }
  }
  return true;
}

// Every map A -> B, tested one by one.
std::vector<std::vector<Elem>> all_morphisms(const SymAlgebra& A, const SymAlgebra& B) {
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> f(A.size(), 0);
  while (true) {
    if (is_morphism(A, B, f)) out.push_back(f);
    std::size_t i = 0;
    while (i < f.size() && ++f[i] == B.size()) f[i++] = 0;
    if (i == f.size()) break;
  }
  return out;
}

SymAlgebra product_sym(const PresentedSpec& P, const char* m) { return sym_product(presented_algebra(P), builtin(m)); }

}  // namespace

TEST(Presented, Validation) {
  EXPECT_THROW(presented_algebra({0, {0}, {}}), algebra_error);
  EXPECT_THROW(presented_algebra({2, {1, 2}, {}}), algebra_error);        // no full set
  EXPECT_NO_THROW(presented_algebra({2, {1, 3}, {}}));
  EXPECT_THROW(presented_algebra({2, {1, 3, 3}, {}}), algebra_error);     // duplicate
  EXPECT_THROW(presented_algebra({2, {0, 1, 3}, {}}), algebra_error);     // not upward closed
  EXPECT_THROW(presented_algebra({2, {1, 2, 3}, {{1, 4}}}), algebra_error);
}

TEST(Presented, Builds) {
  SymAlgebra S = presented_algebra(atoms123_spec());
  EXPECT_EQ(S.size(), 6u);
  EXPECT_EQ(S.labels().back(), "{1,2,3}");
  EXPECT_EQ(S.labels()[S.T(0)], "{2}");
  EXPECT_TRUE(check_implication_axioms(S.base()).passed);
}

TEST(MinimalElements, Examples) {
  EXPECT_EQ(minimal_elements(builtin("A3")), (std::vector<Elem>{0, 1}));
  EXPECT_EQ(minimal_elements(builtin("A4")), (std::vector<Elem>{0}));
  Multicube P{McSpec({1})};
  std::vector<Elem> want = {P.at({{-1}, 0}), P.at({{0}, 0}), P.at({{1}, 0})};
  std::sort(want.begin(), want.end());
  EXPECT_EQ(minimal_elements(sym_from_multicube(P)), want);
}

TEST(Envelope, LocallySymmetricInputIsIdentity) {
  for (const char* m : {"A2", "A3", "A4"}) {
    SymAlgebra S = builtin(m);
    EnvelopeResult R = envelope(make_presented(S));
    EXPECT_EQ(R.method, "identity");
    EXPECT_EQ(R.E.size(), S.size());
    EXPECT_TRUE(check_envelope(S, R).passed);
  }
  SymAlgebra chain(chain2(), {0, 1});
  EXPECT_EQ(envelope(make_presented(chain)).E.size(), 2u);
}

TEST(Envelope, A3BaseCase) {
  EnvelopeResult R = envelope_base2(make_presented(builtin("A3")));
  EXPECT_EQ(R.E.size(), 3u);
  std::set<Elem> img(R.e.begin(), R.e.end());
  EXPECT_EQ(img.size(), 3u);
}

TEST(Envelope, Atoms123Example) {
  SymAlgebra S = presented_algebra(atoms123_spec());
  EXPECT_TRUE(is_locally_symmetric(S).passed);
  EnvelopeResult R = envelope(make_presented(S));
  EXPECT_EQ(R.E.size(), 6u);
  EXPECT_TRUE(check_envelope(S, R).passed);
}

TEST(Envelope, I7) {
  SymAlgebra S = presented_algebra(i7_spec());
  ASSERT_EQ(S.size(), 7u);
  EXPECT_FALSE(is_locally_symmetric(S).passed);
  EnvelopeResult R = envelope(make_presented(S));
  EXPECT_EQ(R.method, "subdirect");
  EXPECT_EQ(R.E.size(), 9u);
  EXPECT_TRUE(check_envelope(S, R).passed);
  EnvelopeResult B = envelope_base2(make_presented(S));
  EXPECT_EQ(B.E.size(), 9u);
  EXPECT_TRUE(check_envelope(S, B).passed);
  // The two constructions are isomorphic over S, and only in one way.
  std::vector<Elem> h(9);
  for (Elem i = 0; i < 9; ++i) h[i] = i;
  std::size_t over_s = 0;
  do {
    bool ok = true;
    for (Elem x = 0; x < S.size() && ok; ++x) ok = h[R.e[x]] == B.e[x];
    if (ok && is_morphism(R.E, B.E, h)) ++over_s;
  } while (std::next_permutation(h.begin(), h.end()));
  EXPECT_EQ(over_s, 1u);
}

TEST(Envelope, LargerSubdirect) {
  struct Case {
    const char* factor;
    std::size_t in, out;
  };
  for (const Case& c : {Case{"A3", 21, 27}, Case{"A2", 14, 18}}) {
    SymAlgebra S = product_sym(i7_spec(), c.factor);
    ASSERT_EQ(S.size(), c.in);
    EnvelopeResult R = envelope(make_presented(S));
    EXPECT_EQ(R.E.size(), c.out);
    EXPECT_TRUE(check_envelope(S, R).passed);
  }
}

TEST(Envelope, RejectsTooManyMinimalsForBaseCase) {
  SymAlgebra S = product_sym(i7_spec(), "A3");
  EXPECT_THROW(envelope_base2(make_presented(S)), algebra_error);
}

TEST(Morphisms, EnumeratorMatchesBruteForce) {
  std::vector<SymAlgebra> src = {builtin("A2"), builtin("A3"), builtin("A4"), presented_algebra(i7_spec()),
                                 presented_algebra(atoms123_spec())};
  std::vector<SymAlgebra> dst = {builtin("A2"), builtin("A3"), builtin("A4")};
  for (const auto& A : src)
    for (const auto& B : dst) {
      auto want = all_morphisms(A, B);
      auto got = enumerate_morphisms(A, B).found;
      std::sort(want.begin(), want.end());
      std::sort(got.begin(), got.end());
      EXPECT_EQ(got, want);
    }
}

TEST(Morphisms, A3Counts) {
  SymAlgebra A3 = builtin("A3"), A2 = builtin("A2");
  // identity, swap and the constant map to 1
  EXPECT_EQ(enumerate_morphisms(A3, A3).found.size(), 3u);
  // a, b -> 0 breaks a v b = 1, so only the constant map remains
  auto collapse = enumerate_morphisms(A3, A2).found;
  ASSERT_EQ(collapse.size(), 1u);
  EXPECT_EQ(collapse[0], (std::vector<Elem>{1, 1, 1}));
}

TEST(UniversalProperty, SmallTargets) {
  std::vector<SymAlgebra> inputs = {builtin("A3"), presented_algebra(i7_spec()), presented_algebra(atoms123_spec())};
  std::vector<SymAlgebra> targets = {builtin("A2"), builtin("A3"), builtin("A4"),
                                     sym_product(builtin("A3"), builtin("A3"))};
  for (const auto& S : inputs) {
    EnvelopeResult R = envelope(make_presented(S));
    for (const auto& M : targets) EXPECT_TRUE(check_universal_property(S, R, M).passed);
  }
}

// Independent check: for each f: S -> M, exactly one h: E -> M with h.e = f.
TEST(UniversalProperty, BruteForceOnI7) {
  SymAlgebra S = presented_algebra(i7_spec());
  EnvelopeResult R = envelope(make_presented(S));
  for (const char* m : {"A2", "A3", "A4"}) {
    SymAlgebra M = builtin(m);
    auto fs = all_morphisms(S, M);
    auto hs = all_morphisms(R.E, M);
    for (const auto& f : fs) {
      int n = 0;
      for (const auto& h : hs) {
        bool ok = true;
        for (Elem x = 0; x < S.size() && ok; ++x) ok = h[R.e[x]] == f[x];
        n += ok;
      }
      EXPECT_EQ(n, 1) << m;
    }
  }
}

TEST(UniversalProperty, TargetOf27Elements) {
  auto s3 = signed_algebra(3);
  SymAlgebra M = sym_from_cubic(s3.alg);
  SymAlgebra S = presented_algebra(i7_spec());
  CheckReport r = check_universal_property(S, envelope(make_presented(S)), M);
  EXPECT_TRUE(r.applicable);
  EXPECT_TRUE(r.passed);
}

TEST(UniversalProperty, NonLocallySymmetricTargetNotApplicable) {
  SymAlgebra S = builtin("A3");
  SymAlgebra M = presented_algebra(i7_spec());
  EXPECT_FALSE(check_universal_property(S, identity_envelope(S), M).applicable);
}

TEST(ToPresented, RoundTrips) {
  std::vector<SymAlgebra> algs = {builtin("A2"), builtin("A3"), builtin("A4"), presented_algebra(i7_spec()),
                                  envelope(make_presented(presented_algebra(i7_spec()))).E,
                                  sym_from_multicube(Multicube(McSpec({1, 1})))};
  for (const auto& S : algs) {
    SymAlgebra back = presented_algebra(to_presented(S));
    ASSERT_EQ(back.size(), S.size());
    const std::vector<Mask> code = coatom_codes(S).second;
    std::vector<Mask> sorted = code;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Elem> f(S.size());
    for (Elem x = 0; x < S.size(); ++x)
      f[x] = static_cast<Elem>(std::lower_bound(sorted.begin(), sorted.end(), code[x]) - sorted.begin());
    EXPECT_TRUE(is_morphism(S, back, f));
  }
}
