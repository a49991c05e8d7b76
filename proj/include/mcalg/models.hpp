#ifndef MCALG_MODELS_HPP
#define MCALG_MODELS_HPP

#include <map>

#include "mcalg/cubic.hpp"

namespace mcalg {

using Mask = std::uint32_t;

inline constexpr int kMaxAtoms = 32;

/// "{1,3}" for bits 0 and 2; atoms are numbered from 1.
inline std::string set_to_string(std::uint64_t m) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < 64; ++i)
    if ((m >> i) & 1U) {
      if (!first) s += ",";
      s += std::to_string(i + 1);
      first = false;
    }
  return s + "}";
}

/// Finite Boolean algebra of subsets of k atoms, as bit patterns.
struct BoolAlg {
  int k = 0;

  explicit BoolAlg(int atoms) : k(atoms) {
    if (atoms < 0 || atoms > kMaxAtoms) throw algebra_error("atom count must be in [0, 32]");
  }
  Mask bottom() const { return 0; }
  Mask top() const { return k == 32 ? ~Mask{0} : (Mask{1} << k) - 1; }
  bool contains(Mask a) const { return (a & ~top()) == 0; }
  Mask complement(Mask a) const { return top() & ~a; }
  static Mask meet(Mask a, Mask b) { return a & b; }
  static Mask join(Mask a, Mask b) { return a | b; }
  static bool leq(Mask a, Mask b) { return (a & ~b) == 0; }
};

/// [lo, hi] with lo <= hi in the ambient Boolean algebra.
struct IntervalElt {
  Mask lo = 0;
  Mask hi = 0;
  friend auto operator<=>(const IntervalElt&, const IntervalElt&) = default;
};

inline IntervalElt make_interval(const BoolAlg& B, Mask lo, Mask hi) {
  if (!B.contains(lo) || !B.contains(hi)) throw algebra_error("interval endpoint outside the Boolean algebra");
  if (!BoolAlg::leq(lo, hi)) throw algebra_error("interval requires lo <= hi");
  return {lo, hi};
}

/// Signed subset <A|B> with A, B disjoint.
struct SignedElt {
  Mask pos = 0;
  Mask neg = 0;
  friend auto operator<=>(const SignedElt&, const SignedElt&) = default;
};

inline SignedElt make_signed(int ground, Mask pos, Mask neg) {
  BoolAlg X(ground);
  if (!X.contains(pos) || !X.contains(neg)) throw algebra_error("signed set outside the ground set");
  if (pos & neg) throw algebra_error("signed set requires disjoint parts");
  return {pos, neg};
}

inline std::string to_string(const IntervalElt& p) {
  return "[" + set_to_string(p.lo) + "," + set_to_string(p.hi) + "]";
}
inline std::string to_string(const SignedElt& s) {
  return "<" + set_to_string(s.pos) + "|" + set_to_string(s.neg) + ">";
}

// Interval algebra I(B): inclusion order, 1 = [0,1].

inline IntervalElt interval_join(const IntervalElt& p, const IntervalElt& q) {
  return {BoolAlg::meet(p.lo, q.lo), BoolAlg::join(p.hi, q.hi)};
}
inline bool interval_leq(const IntervalElt& p, const IntervalElt& q) { return interval_join(p, q) == q; }

/// Delta([a,b],[c,d]) = [a v (b ^ -d), b ^ (a v -c)], for q <= p.
inline IntervalElt interval_delta_partial(const BoolAlg& B, const IntervalElt& p, const IntervalElt& q) {
  if (!interval_leq(q, p)) throw algebra_error("partial interval Delta needs q <= p");
  return {p.lo | (p.hi & B.complement(q.hi)), p.hi & (p.lo | B.complement(q.lo))};
}
inline IntervalElt interval_delta(const BoolAlg& B, const IntervalElt& p, const IntervalElt& q) {
  return interval_delta_partial(B, interval_join(p, q), q);
}

// Signed sets S(X): 1 = <{}|{}>.

inline SignedElt signed_join(const SignedElt& s, const SignedElt& t) { return {s.pos & t.pos, s.neg & t.neg}; }
inline bool signed_leq(const SignedElt& s, const SignedElt& t) { return signed_join(s, t) == t; }

/// <A u D \ B, B u C \ A> for t <= s.
inline SignedElt signed_delta_partial(const SignedElt& s, const SignedElt& t) {
  if (!signed_leq(t, s)) throw algebra_error("partial signed Delta needs t <= s");
  return {(s.pos | t.neg) & ~s.neg, (s.neg | t.pos) & ~s.pos};
}
inline SignedElt signed_delta(const SignedElt& s, const SignedElt& t) {
  return signed_delta_partial(signed_join(s, t), t);
}

/// <A|B> -> [A, X \ B].
inline IntervalElt signed_to_interval(int ground, const SignedElt& s) {
  BoolAlg X(ground);
  return make_interval(X, s.pos, X.complement(s.neg));
}
inline SignedElt interval_to_signed(int atoms, const IntervalElt& p) {
  BoolAlg X(atoms);
  return make_signed(atoms, p.lo, X.complement(p.hi));
}

/// A concrete model compiled down to an indexed cubic algebra.
template <class E>
struct Model {
  int dim = 0;
  std::vector<E> elems;
  std::map<E, Elem> index;
  CubicAlg alg;

  Elem at(const E& e) const {
    auto it = index.find(e);
    if (it == index.end()) throw algebra_error("element not in model");
    return it->second;
  }
  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    for (const auto& e : elems) out.push_back(to_string(e));
    return out;
  }
};

using SignedModel = Model<SignedElt>;
using IntervalModel = Model<IntervalElt>;

namespace detail {

template <class E, class JoinF, class DeltaF>
Model<E> compile_model(int dim, std::vector<E> elems, const E& top, JoinF&& join, DeltaF&& delta_partial) {
  Model<E> m;
  m.dim = dim;
  m.elems = std::move(elems);
  for (Elem i = 0; i < m.elems.size(); ++i) m.index.emplace(m.elems[i], i);
  const std::size_t n = m.elems.size();
  FinAlgebra base = FinAlgebra::from_join(n, m.index.at(top),
                                          [&](Elem x, Elem y) { return m.index.at(join(m.elems[x], m.elems[y])); });
  m.alg = CubicAlg::from_partial(std::move(base), [&](Elem y, Elem x) {
    return m.index.at(delta_partial(m.elems[y], m.elems[x]));
  });
  return m;
}

}  // namespace detail

/// S(X) for X = {1..ground}; 3^ground elements.
inline SignedModel signed_algebra(int ground) {
  if (ground < 0 || ground > 7) throw algebra_error("signed ground size must be in [0, 7]");
  BoolAlg X(ground);
  std::vector<SignedElt> elems;
  for (Mask p = 0; p <= X.top(); ++p)
    for (Mask q = 0; q <= X.top(); ++q)
      if ((p & q) == 0) elems.push_back({p, q});
  return detail::compile_model(ground, std::move(elems), SignedElt{0, 0}, signed_join, signed_delta_partial);
}

/// I(B) for B with `atoms` atoms; 3^atoms elements.
inline IntervalModel interval_algebra(int atoms) {
  if (atoms < 0 || atoms > 7) throw algebra_error("interval atom count must be in [0, 7]");
  BoolAlg B(atoms);
  std::vector<IntervalElt> elems;
  for (Mask lo = 0; lo <= B.top(); ++lo)
    for (Mask hi = 0; hi <= B.top(); ++hi)
      if (BoolAlg::leq(lo, hi)) elems.push_back({lo, hi});
  return detail::compile_model(
      atoms, std::move(elems), IntervalElt{0, B.top()}, interval_join,
      [B](const IntervalElt& p, const IntervalElt& q) { return interval_delta_partial(B, p, q); });
}

/// Componentwise join; element (i, j) has index i * |B| + j.
inline FinAlgebra product(const FinAlgebra& A, const FinAlgebra& B) {
  const std::size_t nb = B.size();
  return FinAlgebra::from_join(A.size() * nb, A.top() * static_cast<Elem>(nb) + B.top(), [&](Elem x, Elem y) {
    Elem a = A.join(x / nb, y / nb);
    Elem b = B.join(x % nb, y % nb);
    return a * static_cast<Elem>(nb) + b;
  });
}

/// Product with componentwise Delta.
inline CubicAlg product(const CubicAlg& A, const CubicAlg& B) {
  const std::size_t nb = B.size();
  FinAlgebra base = product(A.base(), B.base());
  const std::size_t n = base.size();
  std::vector<Elem> t(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      t[x * n + y] =
          A.delta(x / nb, y / nb) * static_cast<Elem>(nb) + B.delta(x % nb, y % nb);
  return CubicAlg(std::move(base), std::move(t));
}

/// Checks that signed_to_interval is a bijection S(X) -> I(P(X)) commuting
/// with v, Delta and 1.
inline CheckReport check_signed_interval_iso(int ground, SuiteOptions opts = SuiteOptions::from_env()) {
  SignedModel S = signed_algebra(ground);
  IntervalModel I = interval_algebra(ground);
  BoolAlg B(ground);
  std::vector<Elem> f(S.elems.size());
  for (Elem i = 0; i < S.elems.size(); ++i) f[i] = I.at(signed_to_interval(ground, S.elems[i]));
  Suite s("signed-interval-iso", S.elems.size(), opts);
  s.require("size", S.elems.size() == I.elems.size());
  s.forall2("injective", [&](Elem x, Elem y) { return x == y || f[x] != f[y]; });
  s.require("top", f[S.alg.top()] == I.alg.top(), {S.alg.top()});
  s.forall2("join", [&](Elem x, Elem y) { return f[S.alg.join(x, y)] == I.alg.join(f[x], f[y]); });
  s.forall2("delta", [&](Elem x, Elem y) { return f[S.alg.delta(x, y)] == I.alg.delta(f[x], f[y]); });
  s.forall1("inverse", [&](Elem x) {
    return interval_to_signed(ground, signed_to_interval(ground, S.elems[x])) == S.elems[x];
  });
  return std::move(s).finish();
}

}  // namespace mcalg

#endif  // MCALG_MODELS_HPP
