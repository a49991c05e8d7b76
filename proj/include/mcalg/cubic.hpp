#ifndef MCALG_CUBIC_HPP
#define MCALG_CUBIC_HPP

#include <deque>

#include "mcalg/core.hpp"

namespace mcalg {

/// Join semilattice with one plus a reflection Delta, stored totalized:
/// delta(x, y) == delta(x v y, y) for every pair.
class CubicAlg {
 public:
  CubicAlg() = default;

  CubicAlg(FinAlgebra base, std::vector<Elem> delta) : base_(std::move(base)), delta_(std::move(delta)) {
    const std::size_t n = base_.size();
    if (delta_.size() != n * n) throw algebra_error("delta table must have n*n entries");
    for (Elem v : delta_)
      if (v >= n) throw algebra_error("delta table entry out of range");
  }

  /// `partial(y, x)` is only evaluated for x <= y; the rest is filled in
  /// through delta(x, y) = delta(x v y, y).
  template <class F>
  static CubicAlg from_partial(FinAlgebra base, F&& partial) {
    const std::size_t n = base.size();
    std::vector<Elem> t(n * n);
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) {
        Elem j = base.join(x, y);
        t[x * n + y] = partial(j, y);
      }
    return CubicAlg(std::move(base), std::move(t));
  }

  const FinAlgebra& base() const { return base_; }
  std::size_t size() const { return base_.size(); }
  Elem top() const { return base_.top(); }
  Elem join(Elem x, Elem y) const { return base_.join(x, y); }
  bool leq(Elem x, Elem y) const { return base_.leq(x, y); }

  Elem delta(Elem x, Elem y) const {
    if (x >= size() || y >= size()) throw algebra_error("element index out of range");
    return delta_[x * size() + y];
  }
  const std::vector<Elem>& delta_table() const { return delta_; }

 private:
  FinAlgebra base_;
  std::vector<Elem> delta_;
};

/// xy = Delta(1, Delta(x v y, y)) v y.
inline Elem derived_xy(const CubicAlg& C, Elem x, Elem y) {
  return C.join(C.delta(C.top(), C.delta(C.join(x, y), y)), y);
}

/// x ^ y = x meet Delta(x v y, y), when the meet exists.
inline std::optional<Elem> caret(const CubicAlg& C, Elem x, Elem y) {
  return C.base().meet(x, C.delta(C.join(x, y), y));
}

/// Caret through the second form x meet Delta(1, xy).
inline std::optional<Elem> caret_via_xy(const CubicAlg& C, Elem x, Elem y) {
  return C.base().meet(x, C.delta(C.top(), derived_xy(C, x, y)));
}

inline CheckReport check_cubic_axioms(const CubicAlg& C, SuiteOptions opts = SuiteOptions::from_env()) {
  CheckReport lat = check_semilattice(C.base(), opts);
  if (!lat.passed) {
    lat.suite = "cubic";
    return lat;
  }
  const auto& B = C.base();
  auto D = [&](Elem x, Elem y) { return C.delta(x, y); };
  auto xy = [&](Elem x, Elem y) { return derived_xy(C, x, y); };

  Suite s("cubic", C.size(), opts);
  s.forall2("(a)", [&](Elem x, Elem y) { return !B.leq(x, y) || B.join(D(y, x), x) == y; });
  s.forall3("(b)", [&](Elem x, Elem y, Elem z) {
    return !(B.leq(x, y) && B.leq(y, z)) || D(z, D(y, x)) == D(D(z, y), D(z, x));
  });
  s.forall2("(c)", [&](Elem x, Elem y) { return !B.leq(x, y) || D(y, D(y, x)) == x; });
  s.forall3("(d)", [&](Elem x, Elem y, Elem z) {
    return !(B.leq(x, y) && B.leq(y, z)) || B.leq(D(z, x), D(z, y));
  });
  s.forall2("(e)", [&](Elem x, Elem y) { return xy(xy(x, y), y) == B.join(x, y); });
  s.forall3("(f)", [&](Elem x, Elem y, Elem z) { return xy(x, xy(y, z)) == xy(y, xy(x, z)); });
  s.forall2("totalized", [&](Elem x, Elem y) { return D(x, y) == D(B.join(x, y), y); });
  s.forall2("xy=imp", [&](Elem x, Elem y) { return xy(x, y) == B.try_imp(x, y); });
  s.forall2("delta=meet", [&](Elem x, Elem y) {
    if (!B.leq(y, x)) return true;
    auto m = B.meet(x, D(C.top(), xy(x, y)));
    return m && *m == D(x, y);
  });
  s.forall2("caret=xy", [&](Elem x, Elem y) { return caret(C, x, y) == caret_via_xy(C, x, y); });
  return std::move(s).finish();
}

/// MR-axiom: for a, b < x, Delta(x,a) v b < x iff a meet b does not exist.
/// The two directions are separate rules so the report names the one that broke.
inline CheckReport check_mr(const CubicAlg& C, SuiteOptions opts = SuiteOptions::from_env()) {
  const auto& B = C.base();
  Suite s("mr", C.size(), opts);
  auto lhs = [&](Elem x, Elem a, Elem b) { return B.lt(B.join(C.delta(x, a), b), x); };
  s.forall3("mr:=>", [&](Elem x, Elem a, Elem b) {
    if (!B.lt(a, x) || !B.lt(b, x)) return true;
    return !lhs(x, a, b) || !B.meet(a, b).has_value();
  });
  s.forall3("mr:<=", [&](Elem x, Elem a, Elem b) {
    if (!B.lt(a, x) || !B.lt(b, x)) return true;
    return B.meet(a, b).has_value() || lhs(x, a, b);
  });
  return std::move(s).finish();
}

inline bool caret_is_total(const CubicAlg& C) {
  for (Elem x = 0; x < C.size(); ++x)
    for (Elem y = 0; y < C.size(); ++y)
      if (!caret(C, x, y)) return false;
  return true;
}

/// MR holds exactly when caret is total.
inline CheckReport check_mr_caret_equivalence(const CubicAlg& C, SuiteOptions opts = SuiteOptions::from_env()) {
  Suite s("mr-caret", C.size(), opts);
  bool mr = check_mr(C, opts).passed;
  bool total = caret_is_total(C);
  s.require("mr<=>caret-total", mr == total);
  s.note(std::string("mr=") + (mr ? "yes" : "no") + " caret-total=" + (total ? "yes" : "no"));
  return std::move(s).finish();
}

/// {y | exists z >= x with Delta(z, x) <= y}.
inline std::vector<Elem> localization(const CubicAlg& C, Elem x) {
  const auto& B = C.base();
  std::vector<bool> in(C.size(), false);
  for (Elem z = 0; z < C.size(); ++z) {
    if (!B.leq(x, z)) continue;
    Elem d = C.delta(z, x);
    for (Elem y = 0; y < C.size(); ++y)
      if (B.leq(d, y)) in[y] = true;
  }
  std::vector<Elem> out;
  for (Elem y = 0; y < C.size(); ++y)
    if (in[y]) out.push_back(y);
  return out;
}

/// Least upward-closed subset containing `seed` that is closed under v, ->
/// and Delta, by saturation.
inline std::vector<Elem> upward_subalgebra_closure(const CubicAlg& C, const std::vector<Elem>& seed) {
  const auto& B = C.base();
  const std::size_t n = C.size();
  std::vector<bool> in(n, false);
  std::deque<Elem> work;
  auto add = [&](Elem e) {
    if (!in[e]) {
      in[e] = true;
      work.push_back(e);
    }
  };
  for (Elem e : seed) add(e);
  while (!work.empty()) {
    Elem e = work.front();
    work.pop_front();
    for (Elem y = 0; y < n; ++y) {
      if (B.leq(e, y)) add(y);
      if (!in[y]) continue;
      add(B.join(e, y));
      add(C.delta(e, y));
      add(C.delta(y, e));
      add(derived_xy(C, e, y));
      add(derived_xy(C, y, e));
    }
  }
  std::vector<Elem> out;
  for (Elem y = 0; y < n; ++y)
    if (in[y]) out.push_back(y);
  return out;
}

inline CheckReport check_localization(const CubicAlg& C, SuiteOptions opts = SuiteOptions::from_env()) {
  const auto& B = C.base();
  Suite s("localization", C.size(), opts);
  s.forall1("formula=closure", [&](Elem x) { return localization(C, x) == upward_subalgebra_closure(C, {x}); });
  s.forall1("contains-x-and-T(x)", [&](Elem x) {
    auto L = localization(C, x);
    auto has = [&](Elem e) { return std::binary_search(L.begin(), L.end(), e); };
    return has(x) && has(C.delta(C.top(), x));
  });
  s.forall1("closed", [&](Elem x) {
    auto L = localization(C, x);
    std::vector<bool> in(C.size(), false);
    for (Elem e : L) in[e] = true;
    if (!is_upward_closed(B, in)) return false;
    for (Elem a : L)
      for (Elem b : L)
        if (!in[B.join(a, b)] || !in[C.delta(a, b)] || !in[derived_xy(C, a, b)]) return false;
    return true;
  });
  return std::move(s).finish();
}

/// Restriction of a cubic algebra to a join- and Delta-closed subset.
struct CubicSub {
  CubicAlg alg;
  std::vector<Elem> members;
  std::vector<Elem> index_of;
};

inline CubicSub restrict_cubic(const CubicAlg& C, std::vector<Elem> members) {
  SubAlgebra sub = restrict_to(C.base(), std::move(members));
  const std::size_t m = sub.members.size();
  std::vector<Elem> t(m * m);
  for (Elem i = 0; i < m; ++i)
    for (Elem j = 0; j < m; ++j) {
      Elem r = sub.index_of[C.delta(sub.members[i], sub.members[j])];
      if (r == kNone) throw algebra_error("subset is not closed under Delta");
      t[i * m + j] = r;
    }
  return {CubicAlg(std::move(sub.alg), std::move(t)), std::move(sub.members), std::move(sub.index_of)};
}

}  // namespace mcalg

#endif  // MCALG_CUBIC_HPP
