#ifndef MCALG_FIXPOINTS_HPP
#define MCALG_FIXPOINTS_HPP

#include "mcalg/symmetric.hpp"

namespace mcalg {

/// Symmetric algebra with a Delta-operator that passed check_delta_operator.
class FixContext {
 public:
  FixContext(SymAlgebra S, DeltaTable D) : S_(std::move(S)), D_(std::move(D)) {
    CheckReport r = check_delta_operator(S_, D_);
    if (!r.passed) {
      std::string where = r.witness ? " (rule " + r.witness->rule + ")" : "";
      throw algebra_error("not a Delta-operator" + where);
    }
  }

  static FixContext from_multicube(const Multicube& P) {
    return FixContext(sym_from_multicube(P), delta_table_from(P.reflection()));
  }
  static FixContext from_cubic(const CubicAlg& C, std::vector<std::string> labels = {}) {
    return FixContext(sym_from_cubic(C, std::move(labels)), delta_table_from(C));
  }
  /// Derived Delta(b, a) = b meet T(b -> a).
  static FixContext from_symmetric(SymAlgebra S) {
    DeltaTable D = derived_delta(S);
    return FixContext(std::move(S), std::move(D));
  }

  const SymAlgebra& sym() const { return S_; }
  const FinAlgebra& base() const { return S_.base(); }
  const DeltaTable& table() const { return D_; }
  std::size_t size() const { return S_.size(); }
  Elem top() const { return S_.top(); }
  bool leq(Elem x, Elem y) const { return S_.leq(x, y); }
  bool lt(Elem x, Elem y) const { return S_.base().lt(x, y); }
  Elem join(Elem x, Elem y) const { return S_.join(x, y); }

  Elem delta(Elem b, Elem a) const {
    auto v = D_.at(b, a);
    if (!v) throw algebra_error("Delta(b, a) needs a <= b");
    return *v;
  }
  /// Meet that is known to exist (common lower bound inside an interval).
  Elem meet(Elem x, Elem y) const {
    auto m = S_.meet(x, y);
    if (!m) throw algebra_error("meet does not exist");
    return *m;
  }
  /// c(a, b): complement of b over a in [a, 1], i.e. b -> a, for a <= b.
  Elem comp(Elem a, Elem b) const {
    if (!leq(a, b)) throw algebra_error("c(a, b) needs a <= b");
    return S_.imp(b, a);
  }

 private:
  SymAlgebra S_;
  DeltaTable D_;
};

inline std::vector<Elem> fix_set(const FixContext& C, Elem u) {
  std::vector<Elem> out;
  for (Elem v = 0; v < C.size(); ++v)
    if (C.leq(u, v) && C.delta(v, u) == u) out.push_back(v);
  return out;
}

inline std::vector<Elem> phi_set(const FixContext& C, Elem u) {
  std::vector<Elem> out;
  for (Elem x = 0; x < C.size(); ++x)
    if (C.leq(x, u) && C.delta(u, x) == x) out.push_back(x);
  return out;
}

/// beta^v(u) = u v Delta(v, u).
inline Elem beta(const FixContext& C, Elem u, Elem v) { return C.join(u, C.delta(v, u)); }
inline Elem beta(const FixContext& C, Elem u) { return beta(C, u, C.top()); }

/// delta^v(u) = c(u, beta^v(u)) meet v.
inline Elem delta_fn(const FixContext& C, Elem u, Elem v) { return C.meet(C.comp(u, beta(C, u, v)), v); }
inline Elem delta_fn(const FixContext& C, Elem u) { return delta_fn(C, u, C.top()); }

inline std::vector<Elem> interval(const FixContext& C, Elem lo, Elem hi) {
  std::vector<Elem> out;
  for (Elem x = 0; x < C.size(); ++x)
    if (C.leq(lo, x) && C.leq(x, hi)) out.push_back(x);
  return out;
}

namespace detail {

inline std::vector<Elem> intersect_sorted(const std::vector<Elem>& a, const std::vector<Elem>& b) {
  std::vector<Elem> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool contains(const std::vector<Elem>& sorted, Elem x) { return std::binary_search(sorted.begin(), sorted.end(), x); }

}  // namespace detail

/// alpha: Fix(u) n [u, w] -> Phi(w) n [u, w], x -> x v Delta(w, u).
struct AlphaIso {
  std::vector<Elem> domain;
  std::vector<Elem> codomain;
  std::vector<std::pair<Elem, Elem>> map;
};

inline AlphaIso alpha_iso(const FixContext& C, Elem u, Elem w) {
  if (!C.leq(u, w)) throw algebra_error("alpha needs u <= w");
  AlphaIso out;
  auto I = interval(C, u, w);
  out.domain = detail::intersect_sorted(fix_set(C, u), I);
  out.codomain = detail::intersect_sorted(phi_set(C, w), I);
  const Elem d = C.delta(w, u);
  for (Elem x : out.domain) out.map.emplace_back(x, C.join(x, d));
  return out;
}

/// u v Delta(1, u) = 1.
inline bool is_nowhere_invariant(const FixContext& C, Elem u) { return C.join(u, C.delta(C.top(), u)) == C.top(); }

/// No v > u with Delta(v, u) = u.
inline bool is_nowhere_invariant_brute(const FixContext& C, Elem u) {
  for (Elem v = 0; v < C.size(); ++v)
    if (C.lt(u, v) && C.delta(v, u) == u) return false;
  return true;
}

inline std::vector<Elem> nowhere_invariant_set(const FixContext& C) {
  std::vector<Elem> out;
  for (Elem u = 0; u < C.size(); ++u)
    if (is_nowhere_invariant(C, u)) out.push_back(u);
  return out;
}

/// N(M) with inherited join and Delta.
inline CubicSub nucleus(const FixContext& C) {
  SubAlgebra sub = restrict_to(C.base(), nowhere_invariant_set(C));
  CubicAlg alg = CubicAlg::from_partial(std::move(sub.alg), [&](Elem y, Elem x) {
    Elem r = sub.index_of[C.delta(sub.members[y], sub.members[x])];
    if (r == kNone) throw algebra_error("nowhere-invariant set is not closed under Delta");
    return r;
  });
  return {std::move(alg), std::move(sub.members), std::move(sub.index_of)};
}

/// L*_a = {b | b >= Delta(y, a) for some y >= a}.
inline std::vector<Elem> localization_star(const FixContext& C, Elem a) {
  std::vector<bool> in(C.size(), false);
  for (Elem y = 0; y < C.size(); ++y) {
    if (!C.leq(a, y)) continue;
    Elem d = C.delta(y, a);
    for (Elem b = 0; b < C.size(); ++b)
      if (C.leq(d, b)) in[b] = true;
  }
  std::vector<Elem> out;
  for (Elem b = 0; b < C.size(); ++b)
    if (in[b]) out.push_back(b);
  return out;
}

/// L_a = L*_a n N(M).
inline std::vector<Elem> localization(const FixContext& C, Elem a) {
  std::vector<Elem> out;
  for (Elem b : localization_star(C, a))
    if (is_nowhere_invariant(C, b)) out.push_back(b);
  return out;
}

/// y >= delta(a) with Delta(y, a) <= x.
inline std::vector<Elem> psi_admissible(const FixContext& C, Elem a, Elem x) {
  const Elem da = delta_fn(C, a);
  std::vector<Elem> out;
  for (Elem y = 0; y < C.size(); ++y)
    if (C.leq(da, y) && C.leq(C.delta(y, a), x)) out.push_back(y);
  return out;
}

/// Psi(x) = <x v delta(a_y), Delta(y, c(a_y, x) meet delta(a_y))>, a_y = Delta(y, a).
inline std::pair<Elem, Elem> psi_with(const FixContext& C, Elem a, Elem x, Elem y) {
  const Elem ay = C.delta(y, a);
  const Elem day = delta_fn(C, ay);
  return {C.join(x, day), C.delta(y, C.meet(C.comp(ay, x), day))};
}

/// Psi with the least admissible y. Throws when x is outside L*_a.
inline std::pair<Elem, Elem> psi_iso(const FixContext& C, Elem a, Elem x) {
  auto ys = psi_admissible(C, a, x);
  if (ys.empty()) throw algebra_error("no admissible y: element outside L*_a");
  return psi_with(C, a, x, ys.front());
}

/// e(x) = <delta(x), beta(x)>.
inline std::pair<Elem, Elem> global_embed(const FixContext& C, Elem x) { return {delta_fn(C, x), beta(C, x)}; }

// ---- suites ---------------------------------------------------------------

/// Fixed-point transfer and characterization lemmas, with delta and beta
/// also compared against brute-force extrema.
inline CheckReport check_fixpoint_lemmas(const FixContext& C, SuiteOptions opts = SuiteOptions::from_env()) {
  const Elem one = C.top();
  auto le = [&](Elem x, Elem y) { return C.leq(x, y); };
  auto D = [&](Elem b, Elem a) { return C.delta(b, a); };
  auto cc = [&](Elem a, Elem b) { return C.comp(a, b); };
  auto chain = [&](Elem a, Elem b, Elem c) { return le(a, b) && le(b, c); };
  auto mt = [&](Elem x, Elem y) { return C.meet(x, y); };
  Suite s("fixpoints", C.size(), opts);

  s.forall2("transfer(a)", [&](Elem b, Elem a) {
    return !le(a, b) || C.sym().imp(b, D(b, a)) == D(one, C.sym().imp(b, a));
  });
  s.forall3("transfer(b)", [&](Elem a, Elem b, Elem c) {
    return !chain(a, b, c) || D(c, mt(cc(a, b), c)) == mt(c, D(one, cc(a, b)));
  });
  s.forall3("transfer(c)", [&](Elem a, Elem b, Elem c) {
    return !chain(a, b, c) || D(b, a) == mt(b, D(c, mt(cc(a, b), c)));
  });
  s.forall3("transfer(d)", [&](Elem a, Elem b, Elem c) {
    return !(chain(a, b, c) && D(c, b) == b) || D(c, a) == D(b, a);
  });
  s.forall3("transfer(e)", [&](Elem a, Elem b, Elem c) {
    return !(chain(a, b, c) && D(c, b) == b && D(b, a) == a) || D(c, a) == a;
  });
  s.forall2("fixed<=>le", [&](Elem b, Elem a) { return !le(a, b) || ((D(b, a) == a) == le(D(b, a), a)); });
  s.forall2("fixed<=>ge", [&](Elem b, Elem a) { return !le(a, b) || ((D(b, a) == a) == le(a, D(b, a))); });
  s.forall2("fixed<=>c-fixed", [&](Elem b, Elem a) {
    return !le(a, b) || ((D(b, a) == a) == (D(one, cc(a, b)) == cc(a, b)));
  });
  s.forall3("fixed<=>c-fixed-in-c", [&](Elem a, Elem b, Elem c) {
    if (!chain(a, b, c)) return true;
    Elem m = mt(cc(a, b), c);
    return (D(b, a) == a) == (D(c, m) == m);
  });
  s.forall2("upward", [&](Elem a, Elem b) { return !(le(a, b) && D(one, a) == a) || D(one, b) == b; });
  s.forall3("fix-transitive", [&](Elem a, Elem b, Elem c) {
    return !chain(a, b, c) || ((D(c, a) == a) == (D(c, b) == b && D(b, a) == a));
  });
  s.forall3("fixed<=>above-beta", [&](Elem u, Elem x, Elem v) {
    return !chain(u, x, v) || ((D(v, x) == x) == le(beta(C, u, v), x));
  });
  s.forall3("beta-join", [&](Elem u, Elem v, Elem w) {
    return !chain(u, v, w) || C.join(v, D(w, v)) == C.join(v, D(w, u));
  });
  s.forall3("delta-char", [&](Elem u, Elem x, Elem v) {
    return !chain(u, x, v) || ((D(x, u) == u) == le(x, delta_fn(C, u, v)));
  });
  s.forall2("delta=max", [&](Elem u, Elem v) {
    if (!le(u, v)) return true;
    auto F = detail::intersect_sorted(fix_set(C, u), interval(C, u, v));
    Elem d = delta_fn(C, u, v);
    if (!detail::contains(F, d)) return false;
    for (Elem x : F)
      if (!le(x, d)) return false;
    return true;
  });
  s.forall2("beta=min", [&](Elem u, Elem v) {
    if (!le(u, v)) return true;
    auto F = detail::intersect_sorted(phi_set(C, v), interval(C, u, v));
    Elem b = beta(C, u, v);
    if (!detail::contains(F, b)) return false;
    for (Elem x : F)
      if (!le(b, x)) return false;
    return true;
  });
  s.forall2("delta-idempotent", [&](Elem u, Elem v) {
    return !le(u, v) || delta_fn(C, delta_fn(C, u, v), v) == delta_fn(C, u, v);
  });
  s.forall3("delta-monotone", [&](Elem u, Elem v, Elem w) {
    return !chain(u, v, w) || le(delta_fn(C, u, v), delta_fn(C, u, w));
  });
  s.forall3("delta-restrict", [&](Elem u, Elem v, Elem w) {
    return !chain(u, v, w) || delta_fn(C, u, v) == mt(delta_fn(C, u, w), v);
  });
  s.forall3("beta-restrict", [&](Elem u, Elem v, Elem w) {
    return !chain(u, v, w) || beta(C, u, v) == mt(beta(C, u, w), v);
  });
  s.forall3("fix-from-delta", [&](Elem u, Elem v, Elem w) {
    return !(chain(u, v, w) && le(D(w, u), D(v, u))) || D(w, v) == v;
  });
  s.forall2("delta-top-monotone", [&](Elem u, Elem v) { return !le(u, v) || le(delta_fn(C, u), delta_fn(C, v)); });
  s.forall3("delta-equal", [&](Elem u, Elem v, Elem w) {
    return !(chain(u, v, w) && D(v, u) == u) || delta_fn(C, u, w) == delta_fn(C, v, w);
  });
  s.forall3("v=beta^c", [&](Elem u, Elem v, Elem w) {
    if (!(chain(u, v, w) && D(v, u) == u)) return true;
    auto m = C.sym().meet(beta(C, v, w), cc(u, beta(C, u, w)));
    return m == std::optional<Elem>(v);
  });
  s.forall3("y-prime", [&](Elem u, Elem y, Elem w) {
    if (!(chain(u, y, w) && D(w, y) == y)) return true;
    Elem yp = mt(y, delta_fn(C, u));
    return chain(u, yp, w) && D(yp, u) == u && C.join(yp, D(w, yp)) == y;
  });
  s.forall2("alpha-inverse", [&](Elem u, Elem v) {
    if (!le(u, v)) return true;
    return C.join(mt(v, delta_fn(C, u)), D(v, u)) == v && mt(beta(C, u, v), delta_fn(C, u)) == u;
  });
  return std::move(s).finish();
}

/// alpha is a well-defined order isomorphism with inverse y -> y meet delta(u).
inline CheckReport check_alpha_iso(const FixContext& C, SuiteOptions opts = SuiteOptions::from_env()) {
  Suite s("alpha-iso", C.size(), opts);
  s.forall2("alpha", [&](Elem u, Elem w) {
    if (!C.leq(u, w)) return true;
    AlphaIso A = alpha_iso(C, u, w);
    if (A.domain.size() != A.codomain.size()) return false;
    const Elem du = delta_fn(C, u);
    std::vector<Elem> image;
    for (auto [x, y] : A.map) {
      if (!detail::contains(A.codomain, y)) return false;
      if (C.meet(y, du) != x) return false;
      image.push_back(y);
    }
    std::sort(image.begin(), image.end());
    if (image != A.codomain) return false;
    for (Elem y : A.codomain) {
      Elem x = C.meet(y, du);
      if (!detail::contains(A.domain, x)) return false;
    }
    for (auto [x1, y1] : A.map)
      for (auto [x2, y2] : A.map)
        if (C.leq(x1, x2) != C.leq(y1, y2)) return false;
    return true;
  });
  return std::move(s).finish();
}

/// Closed form against the definition and against u = delta(u); upward
/// closure; v nowhere invariant iff delta(u) <= v for some u <= v.
inline CheckReport check_nowhere_invariance(const FixContext& C, SuiteOptions opts = SuiteOptions::from_env()) {
  Suite s("nowhere-invariance", C.size(), opts);
  s.forall1("closed=brute", [&](Elem u) { return is_nowhere_invariant(C, u) == is_nowhere_invariant_brute(C, u); });
  s.forall1("u=delta(u)", [&](Elem u) { return is_nowhere_invariant(C, u) == (delta_fn(C, u) == u); });
  s.forall2("upward", [&](Elem u, Elem v) {
    return !(C.leq(u, v) && is_nowhere_invariant(C, u)) || is_nowhere_invariant(C, v);
  });
  s.forall1("exists-u", [&](Elem v) {
    bool found = false;
    for (Elem u = 0; u < C.size() && !found; ++u)
      found = C.leq(u, v) && C.leq(delta_fn(C, u), v);
    return found == is_nowhere_invariant(C, v);
  });
  return std::move(s).finish();
}

/// N(M) is a cubic implication algebra and x -> y there is Delta(1, Delta(y, x)) v x.
inline CheckReport check_nucleus(const FixContext& C, SuiteOptions opts = SuiteOptions::from_env()) {
  CubicSub N = nucleus(C);
  CheckReport ax = check_cubic_axioms(N.alg, opts);
  Suite s("nucleus-complement", N.members.size(), opts);
  s.forall2("c(x,y)", [&](Elem i, Elem j) {
    Elem x = N.members[i], y = N.members[j];
    if (!C.leq(x, y)) return true;
    return C.comp(x, y) == C.join(C.delta(C.top(), C.delta(y, x)), x);
  });
  return merge_reports("nucleus", {ax, std::move(s).finish()});
}

/// L_a = L_delta(a) = L*_delta(a); L_a is an MR-algebra; beta^z(a) = beta^z(a_y);
/// the technical lemma and the y-independence of Psi's second coordinate.
inline CheckReport check_localizations(const FixContext& C, SuiteOptions opts = SuiteOptions::from_env()) {
  auto le = [&](Elem x, Elem y) { return C.leq(x, y); };
  CubicSub N = nucleus(C);
  Suite s("localizations", C.size(), opts);
  s.forall1("L_a=L_da=L*_da", [&](Elem a) {
    Elem da = delta_fn(C, a);
    auto L = localization(C, a);
    return L == localization(C, da) && L == localization_star(C, da);
  });
  s.forall1("L_a-MR", [&](Elem a) {
    std::vector<Elem> members;
    for (Elem e : localization(C, a)) members.push_back(N.index_of[e]);
    CubicSub La = restrict_cubic(N.alg, std::move(members));
    return check_cubic_axioms(La.alg, opts).passed && check_mr(La.alg, opts).passed;
  });
  s.forall3("beta-reflect", [&](Elem a, Elem y, Elem z) {
    if (!(le(a, y) && le(y, z))) return true;
    return beta(C, a, z) == beta(C, C.delta(y, a), z);
  });
  s.forall3("technical", [&](Elem a, Elem x, Elem y) {
    if (!le(a, y) || !le(beta(C, a), x)) return true;
    Elem ay = C.delta(y, a);
    if (!le(ay, x)) return false;
    if (!le(C.join(delta_fn(C, a), C.comp(ay, x)), y)) return true;
    return C.delta(y, C.comp(ay, x)) == C.comp(a, x);
  });
  s.forall3("y-independence", [&](Elem a, Elem y1, Elem y2) {
    Elem da = delta_fn(C, a);
    if (!le(da, y1) || !le(da, y2)) return true;
    Elem a1 = C.delta(y1, a), a2 = C.delta(y2, a);
    for (Elem x = 0; x < C.size(); ++x) {
      if (!le(C.join(a1, a2), x)) continue;
      auto side = [&](Elem y, Elem ai) {
        Elem m = C.meet(C.comp(ai, x), delta_fn(C, ai));
        return le(m, y) ? std::optional<Elem>(C.delta(y, m)) : std::nullopt;
      };
      auto l = side(y1, a1), r = side(y2, a2);
      if (!l || !r || *l != *r) return false;
    }
    return true;
  });
  return std::move(s).finish();
}

/// Psi: L*_a -> L_a x [a, delta(a)]^r is well defined (independent of y), a
/// bijection, monotone in the first coordinate and antitone in the second.
inline CheckReport check_psi(const FixContext& C, SuiteOptions opts = SuiteOptions::from_env()) {
  Suite s("psi-iso", C.size(), opts);
  s.forall1("psi", [&](Elem a) {
    const Elem da = delta_fn(C, a);
    auto Ls = localization_star(C, a);
    auto L = localization(C, a);
    auto I = interval(C, a, da);
    if (Ls.size() != L.size() * I.size()) return false;
    std::vector<std::pair<Elem, Elem>> img;
    for (Elem x : Ls) {
      auto ys = psi_admissible(C, a, x);
      if (ys.empty()) return false;
      for (Elem y : ys) {
        Elem ay = C.delta(y, a);
        Elem m = C.meet(C.comp(ay, x), delta_fn(C, ay));
        if (!C.leq(m, y)) return false;
      }
      auto p = psi_with(C, a, x, ys.front());
      for (Elem y : ys)
        if (psi_with(C, a, x, y) != p) return false;
      if (!detail::contains(L, p.first) || !detail::contains(I, p.second)) return false;
      img.push_back(p);
    }
    auto sorted = img;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (std::size_t i = 0; i < Ls.size(); ++i)
      for (std::size_t j = 0; j < Ls.size(); ++j) {
        bool lhs = C.leq(Ls[i], Ls[j]);
        bool rhs = C.leq(img[i].first, img[j].first) && C.leq(img[j].second, img[i].second);
        if (lhs != rhs) return false;
      }
    return true;
  });
  return std::move(s).finish();
}

/// e(x) = <delta x, beta x> is an order-embedding into N(M) x Phi(1) with
/// upward-closed image, and e(a meet b) = <a, b> above the image.
inline CheckReport check_global_embed(const FixContext& C, SuiteOptions opts = SuiteOptions::from_env()) {
  const Elem one = C.top();
  auto phi1 = phi_set(C, one);
  auto N = nowhere_invariant_set(C);
  std::vector<std::pair<Elem, Elem>> e(C.size());
  for (Elem x = 0; x < C.size(); ++x) e[x] = global_embed(C, x);
  Suite s("global-embed", C.size(), opts);
  s.forall1("codomain", [&](Elem x) { return detail::contains(N, e[x].first) && detail::contains(phi1, e[x].second); });
  s.forall1("x=dx^bx", [&](Elem x) { return C.sym().meet(e[x].first, e[x].second) == std::optional<Elem>(x); });
  s.forall2("order-embedding", [&](Elem x, Elem y) {
    return C.leq(x, y) == (C.leq(e[x].first, e[y].first) && C.leq(e[x].second, e[y].second));
  });
  s.forall1("upward-closed", [&](Elem x) {
    for (Elem a : N) {
      if (!C.leq(e[x].first, a)) continue;
      for (Elem b : phi1) {
        if (!C.leq(e[x].second, b)) continue;
        auto m = C.sym().meet(a, b);
        if (!m || e[*m] != std::make_pair(a, b)) return false;
      }
    }
    return true;
  });
  return std::move(s).finish();
}

/// When L*_a is everything, Phi(1) = [beta(a), 1]. Not applicable otherwise.
inline CheckReport check_phi_one_interval(const FixContext& C, Elem a, SuiteOptions opts = SuiteOptions::from_env()) {
  if (a >= C.size()) throw algebra_error("element index out of range");
  if (localization_star(C, a).size() != C.size())
    return CheckReport::not_applicable("phi-one-interval", "L*_a is not the whole algebra");
  Suite s("phi-one-interval", C.size(), opts);
  auto phi1 = phi_set(C, C.top());
  auto I = interval(C, beta(C, a), C.top());
  s.require("Phi(1)=[beta(a),1]", phi1 == I, {a});
  return std::move(s).finish();
}

/// First a with L*_a = M, if any.
inline std::optional<Elem> generating_element(const FixContext& C) {
  for (Elem a = 0; a < C.size(); ++a)
    if (localization_star(C, a).size() == C.size()) return a;
  return std::nullopt;
}

}  // namespace mcalg

#endif  // MCALG_FIXPOINTS_HPP
