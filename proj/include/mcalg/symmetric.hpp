#ifndef MCALG_SYMMETRIC_HPP
#define MCALG_SYMMETRIC_HPP

#include <string_view>

#include "mcalg/multicube.hpp"

namespace mcalg {

/// Implication algebra with an automorphism T of order two.
class SymAlgebra {
 public:
  SymAlgebra() = default;

  SymAlgebra(FinAlgebra base, std::vector<Elem> T, std::vector<std::string> labels = {})
      : base_(std::move(base)), T_(std::move(T)), labels_(std::move(labels)) {
    const std::size_t n = base_.size();
    if (T_.size() != n) throw algebra_error("T must map every element");
    for (Elem x = 0; x < n; ++x) {
      if (T_[x] >= n) throw algebra_error("T entry out of range");
      if (T_[T_[x]] != x) throw algebra_error("T is not an involution at " + std::to_string(x));
    }
    if (T_[base_.top()] != base_.top()) throw algebra_error("T does not fix 1");
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) {
        if (T_[base_.join(x, y)] != base_.join(T_[x], T_[y])) throw algebra_error("T does not preserve join");
        Elem i = base_.try_imp(x, y);
        Elem j = base_.try_imp(T_[x], T_[y]);
        if ((i == kNone) != (j == kNone) || (i != kNone && T_[i] != j))
          throw algebra_error("T does not preserve ->");
      }
    if (labels_.empty())
      for (Elem x = 0; x < n; ++x) labels_.push_back(std::to_string(x));
    if (labels_.size() != n) throw algebra_error("label count mismatch");
  }

  const FinAlgebra& base() const { return base_; }
  std::size_t size() const { return base_.size(); }
  Elem top() const { return base_.top(); }
  Elem T(Elem x) const { return T_.at(x); }
  const std::vector<Elem>& T_table() const { return T_; }
  Elem join(Elem x, Elem y) const { return base_.join(x, y); }
  bool leq(Elem x, Elem y) const { return base_.leq(x, y); }
  std::optional<Elem> meet(Elem x, Elem y) const { return base_.meet(x, y); }
  Elem imp(Elem x, Elem y) const { return base_.imp(x, y); }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  FinAlgebra base_;
  std::vector<Elem> T_;
  std::vector<std::string> labels_;
};

enum class Builtin { A2, A3, A4 };

inline Builtin parse_builtin(std::string_view name) {
  if (name == "A2") return Builtin::A2;
  if (name == "A3") return Builtin::A3;
  if (name == "A4") return Builtin::A4;
  throw algebra_error("unknown builtin algebra: " + std::string(name));
}

/// A2: 0 < 1, T = id. A3: a, b < 1 with T swapping a and b (indices 0, 1, 2).
/// A4: 2x2 with <x,y> at index 2x+y, join componentwise, T the twist.
inline SymAlgebra builtin(Builtin which) {
  switch (which) {
    case Builtin::A2:
      return SymAlgebra(chain2(), {0, 1}, {"0", "1"});
    case Builtin::A3:
      return SymAlgebra(FinAlgebra(3, {0, 2, 2, 2, 1, 2, 2, 2, 2}, 2), {1, 0, 2}, {"a", "b", "1"});
    case Builtin::A4:
      return SymAlgebra(FinAlgebra::from_join(4, 3, [](Elem x, Elem y) { return x | y; }), {0, 2, 1, 3},
                        {"<0,0>", "<0,1>", "<1,0>", "<1,1>"});
  }
  throw algebra_error("unknown builtin");
}
inline SymAlgebra builtin(std::string_view name) { return builtin(parse_builtin(name)); }

/// Index i * |B| + j, T componentwise.
inline SymAlgebra sym_product(const SymAlgebra& A, const SymAlgebra& B) {
  const std::size_t nb = B.size();
  FinAlgebra base = product(A.base(), B.base());
  std::vector<Elem> T(base.size());
  std::vector<std::string> labels(base.size());
  for (Elem x = 0; x < base.size(); ++x) {
    T[x] = A.T(x / static_cast<Elem>(nb)) * static_cast<Elem>(nb) + B.T(x % static_cast<Elem>(nb));
    labels[x] = "(" + A.labels()[x / nb] + "," + B.labels()[x % nb] + ")";
  }
  return SymAlgebra(std::move(base), std::move(T), std::move(labels));
}

/// T(x) = Delta(1, x).
inline SymAlgebra sym_from_cubic(const CubicAlg& C, std::vector<std::string> labels = {}) {
  std::vector<Elem> T(C.size());
  for (Elem x = 0; x < C.size(); ++x) T[x] = C.delta(C.top(), x);
  return SymAlgebra(C.base(), std::move(T), std::move(labels));
}

inline SymAlgebra sym_from_multicube(const Multicube& P) { return SymAlgebra(P.order(), P.T(), P.labels()); }

enum class Identity { A2basis, A3basis, A23basis };

inline Identity parse_identity(std::string_view s) {
  if (s == "A2basis") return Identity::A2basis;
  if (s == "A3basis") return Identity::A3basis;
  if (s == "A23basis") return Identity::A23basis;
  throw algebra_error("unknown identity: " + std::string(s));
}

inline std::string to_string(Identity id) {
  switch (id) {
    case Identity::A2basis: return "A2basis";
    case Identity::A3basis: return "A3basis";
    case Identity::A23basis: return "A23basis";
  }
  return "?";
}

/// A2basis: x -> T(x) = 1. A3basis: x v T(x) = 1.
/// A23basis: (x -> T(x)) v y v T(y) = 1.
inline CheckReport eval_identity(const SymAlgebra& S, Identity id, SuiteOptions opts = SuiteOptions::from_env()) {
  Suite s(to_string(id), S.size(), opts);
  const Elem one = S.top();
  switch (id) {
    case Identity::A2basis:
      s.forall1("x->T(x)=1", [&](Elem x) { return S.imp(x, S.T(x)) == one; });
      break;
    case Identity::A3basis:
      s.forall1("xvT(x)=1", [&](Elem x) { return S.join(x, S.T(x)) == one; });
      break;
    case Identity::A23basis:
      s.forall2("(x->T(x))vyvT(y)=1",
                [&](Elem x, Elem y) { return S.join(S.join(S.imp(x, S.T(x)), y), S.T(y)) == one; });
      break;
  }
  return std::move(s).finish();
}

/// x meet T(x -> y) exists for every y <= x.
inline CheckReport is_locally_symmetric(const SymAlgebra& S, SuiteOptions opts = SuiteOptions::from_env()) {
  Suite s("locally-symmetric", S.size(), opts);
  s.forall2("x^T(x->y)", [&](Elem x, Elem y) {
    return !S.leq(y, x) || S.meet(x, S.T(S.imp(x, y))).has_value();
  });
  return std::move(s).finish();
}

/// Partial table Delta(b, a), defined for a <= b.
class DeltaTable {
 public:
  DeltaTable() = default;
  explicit DeltaTable(std::size_t n) : n_(n), t_(n * n, kNone) {}

  std::size_t size() const { return n_; }
  void set(Elem b, Elem a, Elem v) { t_.at(b * n_ + a) = v; }
  std::optional<Elem> at(Elem b, Elem a) const {
    Elem v = t_.at(b * n_ + a);
    if (v == kNone) return std::nullopt;
    return v;
  }
  bool operator==(const DeltaTable&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Elem> t_;
};

/// Delta(b, a) = b meet T(b -> a) for a <= b. Throws when a required meet is
/// missing (the algebra is not locally symmetric).
inline DeltaTable derived_delta(const SymAlgebra& S) {
  DeltaTable D(S.size());
  for (Elem b = 0; b < S.size(); ++b)
    for (Elem a = 0; a < S.size(); ++a) {
      if (!S.leq(a, b)) continue;
      auto m = S.meet(b, S.T(S.imp(b, a)));
      if (!m) throw algebra_error("not locally symmetric: no meet at (" + std::to_string(b) + "," + std::to_string(a) + ")");
      D.set(b, a, *m);
    }
  return D;
}

/// Restriction of a total Delta to comparable pairs.
inline DeltaTable delta_table_from(const CubicAlg& C) {
  DeltaTable D(C.size());
  for (Elem b = 0; b < C.size(); ++b)
    for (Elem a = 0; a < C.size(); ++a)
      if (C.leq(a, b)) D.set(b, a, C.delta(b, a));
  return D;
}

/// Clauses (a)-(g) of a Delta-operator. Runs on any SymAlgebra.
inline CheckReport check_delta_operator(const SymAlgebra& S, const DeltaTable& D,
                                        SuiteOptions opts = SuiteOptions::from_env()) {
  Suite s("delta-operator", S.size(), opts);
  s.require("table-size", D.size() == S.size());
  if (!s.ok()) return std::move(s).finish();
  const Elem one = S.top();
  auto le = [&](Elem x, Elem y) { return S.leq(x, y); };
  // Definedness is checked exhaustively even when the rest is sampled.
  for (Elem b = 0; b < S.size() && s.ok(); ++b)
    for (Elem a = 0; a < S.size(); ++a) {
      if (!le(a, b)) continue;
      auto v = D.at(b, a);
      if (!v || *v >= S.size() || !le(*v, b)) {
        s.fail("(a)", {b, a});
        break;
      }
    }
  s.forall1("(b)", [&](Elem a) { return D.at(a, a) == std::optional<Elem>(a); });
  s.forall2("(c)", [&](Elem b, Elem a) {
    if (!le(a, b)) return true;
    return D.at(b, *D.at(b, a)) == std::optional<Elem>(a);
  });
  s.forall3("(d)", [&](Elem c, Elem b, Elem a) {
    if (!(le(a, b) && le(b, c))) return true;
    return le(*D.at(c, a), *D.at(c, b));
  });
  s.forall3("(e)", [&](Elem c, Elem b, Elem a) {
    if (!(le(a, b) && le(b, c))) return true;
    auto lhs = D.at(c, *D.at(b, a));
    auto rhs = D.at(*D.at(c, b), *D.at(c, a));
    return lhs && rhs && *lhs == *rhs;
  });
  s.forall2("(f)", [&](Elem b, Elem a) {
    if (!S.base().lt(a, b)) return true;
    Elem d = *D.at(b, a);
    return d == a || !S.base().has_common_lower_bound(d, a);
  });
  s.forall2("(g)", [&](Elem b, Elem a) {
    if (!le(a, b)) return true;
    auto m = S.meet(b, *D.at(one, S.imp(b, a)));
    return m && *m == *D.at(b, a);
  });
  return std::move(s).finish();
}

/// Lemmas on the derived Delta. Applicable when S passes A23basis and is
/// locally symmetric.
inline CheckReport check_delta_lemmas(const SymAlgebra& S, SuiteOptions opts = SuiteOptions::from_env()) {
  if (!eval_identity(S, Identity::A23basis, opts).passed)
    return CheckReport::not_applicable("delta-lemmas", "outside the variety generated by A2 and A3");
  if (!is_locally_symmetric(S, opts).passed)
    return CheckReport::not_applicable("delta-lemmas", "not locally symmetric");
  const DeltaTable D = derived_delta(S);
  const Elem one = S.top();
  auto le = [&](Elem x, Elem y) { return S.leq(x, y); };
  auto d = [&](Elem b, Elem a) { return *D.at(b, a); };
  auto T = [&](Elem x) { return S.T(x); };
  auto im = [&](Elem x, Elem y) { return S.imp(x, y); };
  auto chain = [&](Elem a, Elem b, Elem c) { return le(a, b) && le(b, c); };

  Suite s("delta-lemmas", S.size(), opts);
  s.forall1("T=delta(1,x)", [&](Elem a) { return T(a) == d(one, a); });
  s.forall2("delta=meet", [&](Elem b, Elem a) {
    return !le(a, b) || S.meet(b, d(one, im(b, a))) == std::optional<Elem>(d(b, a));
  });
  s.forall2("delta-below", [&](Elem b, Elem a) { return !le(a, b) || le(d(b, a), b); });
  s.forall2("imp-delta", [&](Elem b, Elem a) { return !le(a, b) || im(b, d(b, a)) == T(im(b, a)); });
  s.forall2("involutive", [&](Elem b, Elem a) { return !le(a, b) || d(b, d(b, a)) == a; });
  s.forall3("monotone", [&](Elem c, Elem b, Elem a) { return !chain(a, b, c) || le(d(c, a), d(c, b)); });
  s.forall2("fixed-upward", [&](Elem b, Elem a) { return !(le(a, b) && T(a) == a) || T(b) == b; });
  s.forall2("fixed<=>T-fixed-imp", [&](Elem b, Elem a) {
    return !le(a, b) || ((d(b, a) == a) == (T(im(b, a)) == im(b, a)));
  });
  s.forall2("no-lower-bound", [&](Elem b, Elem a) {
    return !S.base().lt(a, b) || d(b, a) == a || !S.base().has_common_lower_bound(d(b, a), a);
  });
  s.forall3("meet-imp", [&](Elem c, Elem b, Elem a) {
    return !chain(a, b, c) || S.meet(im(c, b), T(im(b, a))) == std::optional<Elem>(im(c, d(b, a)));
  });
  s.forall3("imp-transfer", [&](Elem c, Elem b, Elem a) {
    return !chain(a, b, c) || im(d(c, b), d(c, a)) == T(im(b, a));
  });
  s.forall3("delta-compose", [&](Elem c, Elem b, Elem a) {
    return !chain(a, b, c) || d(d(c, b), d(c, a)) == d(c, d(b, a));
  });
  return std::move(s).finish();
}

/// Multicube as a symmetric algebra: A23basis, local symmetry, and the
/// derived Delta against the geometric one.
inline CheckReport check_multicube_symmetry(const Multicube& P, SuiteOptions opts = SuiteOptions::from_env()) {
  SymAlgebra S = sym_from_multicube(P);
  std::vector<CheckReport> parts{eval_identity(S, Identity::A23basis, opts), is_locally_symmetric(S, opts)};
  Suite s("derived=geometric", P.size(), opts);
  if (parts[1].passed) {
    DeltaTable D = derived_delta(S);
    s.forall2("delta", [&](Elem b, Elem a) {
      return !S.leq(a, b) || D.at(b, a) == std::optional<Elem>(P.reflection().delta(b, a));
    });
    parts.push_back(std::move(s).finish());
    parts.push_back(check_delta_operator(S, D, opts));
  }
  return merge_reports("multicube-symmetry", parts);
}

}  // namespace mcalg

#endif  // MCALG_SYMMETRIC_HPP
