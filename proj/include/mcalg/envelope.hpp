#ifndef MCALG_ENVELOPE_HPP
#define MCALG_ENVELOPE_HPP

#include <set>

#include "mcalg/fixpoints.hpp"

namespace mcalg {

/// Upward-closed family of subsets of {1..atoms} with join = union,
/// x -> y = complement(x) u y, and an involution given by mask pairs.
struct PresentedSpec {
  int atoms = 0;
  std::vector<Mask> elements;
  std::vector<std::pair<Mask, Mask>> T;  // unlisted masks are fixed
};

/// Builds the algebra; elements are sorted by mask, so the full set is last.
inline SymAlgebra presented_algebra(const PresentedSpec& P) {
  if (P.atoms < 1 || P.atoms > 16) throw algebra_error("presented atoms must be in [1, 16]");
  BoolAlg B(P.atoms);
  std::vector<Mask> els = P.elements;
  std::sort(els.begin(), els.end());
  if (std::adjacent_find(els.begin(), els.end()) != els.end()) throw algebra_error("duplicate element mask");
  for (Mask m : els)
    if (!B.contains(m)) throw algebra_error("element mask uses atoms outside {1.." + std::to_string(P.atoms) + "}");
  if (els.empty() || els.back() != B.top()) throw algebra_error("presented family must contain the full set");
  std::map<Mask, Elem> idx;
  for (Elem i = 0; i < els.size(); ++i) idx.emplace(els[i], i);
  for (Mask m : els)
    for (int b = 0; b < P.atoms; ++b)
      if (!idx.count(m | (Mask{1} << b))) throw algebra_error("presented family is not upward closed at " + set_to_string(m));
  std::vector<Elem> T(els.size());
  for (Elem i = 0; i < els.size(); ++i) T[i] = i;
  std::set<Mask> seen;
  for (auto [x, y] : P.T) {
    if (!idx.count(x) || !idx.count(y)) throw algebra_error("T pair mentions a mask outside the family");
    if (!seen.insert(x).second || (x != y && !seen.insert(y).second)) throw algebra_error("T lists a mask twice");
    T[idx[x]] = idx[y];
    T[idx[y]] = idx[x];
  }
  FinAlgebra base = FinAlgebra::from_join(els.size(), idx.at(B.top()), [&](Elem x, Elem y) { return idx.at(els[x] | els[y]); });
  std::vector<std::string> labels;
  for (Mask m : els) labels.push_back(set_to_string(m));
  return SymAlgebra(std::move(base), std::move(T), std::move(labels));
}

/// Finitely presented symmetric implication algebra with its minimal elements m(I).
struct PresentedSym {
  SymAlgebra S;
  std::vector<Elem> minimals;
};

inline std::vector<Elem> minimal_elements(const SymAlgebra& S) { return S.base().minimal_elements(); }

inline PresentedSym make_presented(SymAlgebra S) {
  auto m = minimal_elements(S);
  for (Elem x = 0; x < S.size(); ++x) {
    bool above = false;
    for (Elem a : m) above = above || S.leq(a, x);
    if (!above) throw algebra_error("element above no minimal element");
  }
  for (Elem a : m)
    if (!std::binary_search(m.begin(), m.end(), S.T(a))) throw algebra_error("T does not permute the minimal elements");
  return {std::move(S), std::move(m)};
}

struct EnvelopeResult {
  SymAlgebra E;
  std::vector<Elem> e;  // e[x] is the image of input element x
  std::string method;   // "identity", "base2" or "subdirect"
};

inline EnvelopeResult identity_envelope(const SymAlgebra& S) {
  std::vector<Elem> e(S.size());
  for (Elem x = 0; x < S.size(); ++x) e[x] = x;
  return {S, std::move(e), "identity"};
}

namespace detail {

/// Caret in a symmetric algebra with derived Delta: x meet (p meet T(p -> y)), p = x v y.
inline std::optional<Elem> sym_caret(const SymAlgebra& S, Elem x, Elem y) {
  Elem p = S.join(x, y);
  auto d = S.meet(p, S.T(S.imp(p, y)));
  if (!d) return std::nullopt;
  return S.meet(x, *d);
}

/// Closure of `seed` under -> and caret inside an enumerated ambient.
inline std::vector<Elem> close_under_imp_caret(const SymAlgebra& L, const std::vector<Elem>& seed) {
  std::vector<bool> in(L.size(), false);
  std::vector<Elem> members;
  for (Elem x : seed)
    if (!in[x]) {
      in[x] = true;
      members.push_back(x);
    }
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      Elem x = members[i], y = members[j];
      for (auto z : {std::optional<Elem>(L.imp(x, y)), std::optional<Elem>(L.imp(y, x)), sym_caret(L, x, y),
                     sym_caret(L, y, x)})
        if (z && !in[*z]) {
          in[*z] = true;
          members.push_back(*z);
        }
    }
  std::sort(members.begin(), members.end());
  return members;
}

/// Sub-algebra of L on `members` (closed under join and T).
inline SymAlgebra restrict_sym(const SymAlgebra& L, const std::vector<Elem>& members) {
  SubAlgebra sub = restrict_to(L.base(), members);
  std::vector<Elem> T(sub.members.size());
  std::vector<std::string> labels;
  for (Elem i = 0; i < sub.members.size(); ++i) {
    Elem t = sub.index_of[L.T(sub.members[i])];
    if (t == kNone) throw algebra_error("subset not closed under T");
    T[i] = t;
    labels.push_back(L.labels()[sub.members[i]]);
  }
  return SymAlgebra(std::move(sub.alg), std::move(T), std::move(labels));
}

}  // namespace detail

/// Base case |m(I)| <= 2. Locally symmetric inputs (in particular T = id)
/// get the identity. Otherwise m(I) = {a, b} with b = T(a), and
/// phi: I -> [a v b, 1] x I([a, a v b]),
///   phi(x) = <x v a v b, [a, x meet (a v b)]>               if x >= a,
///   phi(x) = <x v a v b, Delta(1, [a, T(x meet (a v b))])>  if x >= b.
/// The envelope is the closure of the image under -> and caret.
inline EnvelopeResult envelope_base2(const PresentedSym& P) {
  const SymAlgebra& S = P.S;
  if (P.minimals.size() > 2) throw algebra_error("base case needs at most two minimal elements");
  if (is_locally_symmetric(S).passed) return identity_envelope(S);
  if (P.minimals.size() != 2 || S.T(P.minimals[0]) != P.minimals[1])
    throw algebra_error("input is not locally symmetric and outside the variety generated by A2 and A3");
  const Elem a = P.minimals[0], b = P.minimals[1], ab = S.join(a, b);
  auto meet = [&](Elem x, Elem y) {
    auto m = S.meet(x, y);
    if (!m) throw algebra_error("meet missing inside a Boolean interval");
    return *m;
  };
  // Fixed factor [a v b, 1] and Boolean interval [a, a v b].
  std::vector<Elem> J, B;
  for (Elem x = 0; x < S.size(); ++x) {
    if (S.leq(ab, x)) J.push_back(x);
    if (S.leq(a, x) && S.leq(x, ab)) B.push_back(x);
  }
  std::map<Elem, Elem> jpos, bpos;
  for (Elem i = 0; i < J.size(); ++i) jpos[J[i]] = i;
  for (Elem i = 0; i < B.size(); ++i) bpos[B[i]] = i;
  for (Elem x : J)
    if (S.T(x) != x) throw algebra_error("T is not the identity above a v b");
  auto bneg = [&](Elem x) { return meet(S.imp(x, a), ab); };  // complement in [a, a v b]
  // Intervals [lo, hi] of [a, a v b], enumerated as index pairs.
  std::vector<std::pair<Elem, Elem>> iv;
  std::map<std::pair<Elem, Elem>, Elem> ivpos;
  for (Elem lo : B)
    for (Elem hi : B)
      if (S.leq(lo, hi)) {
        ivpos[{lo, hi}] = static_cast<Elem>(iv.size());
        iv.emplace_back(lo, hi);
      }
  const auto nI = static_cast<Elem>(iv.size());
  auto pack = [&](Elem j, std::pair<Elem, Elem> p) { return jpos.at(j) * nI + ivpos.at(p); };
  auto ivT = [&](std::pair<Elem, Elem> p) { return std::make_pair(bneg(p.second), bneg(p.first)); };
  const std::size_t n = J.size() * iv.size();
  if (n > kMaxElements) throw algebra_error("base-case ambient too large");
  FinAlgebra base = FinAlgebra::from_join(n, pack(S.top(), {a, ab}), [&](Elem x, Elem y) {
    Elem j = S.join(J[x / nI], J[y / nI]);
    auto p = iv[x % nI], q = iv[y % nI];
    return pack(j, {meet(p.first, q.first), S.join(p.second, q.second)});
  });
  std::vector<Elem> T(n);
  std::vector<std::string> labels(n);
  for (Elem x = 0; x < n; ++x) {
    T[x] = pack(J[x / nI], ivT(iv[x % nI]));
    auto p = iv[x % nI];
    labels[x] = "<" + S.labels()[J[x / nI]] + ",[" + S.labels()[p.first] + "," + S.labels()[p.second] + "]>";
  }
  SymAlgebra L(std::move(base), std::move(T), std::move(labels));

  std::vector<Elem> phi(S.size());
  for (Elem x = 0; x < S.size(); ++x) {
    Elem j = S.join(x, ab);
    if (S.leq(a, x)) {
      phi[x] = pack(j, {a, meet(x, ab)});
      if (S.leq(b, x) && phi[x] != pack(j, ivT({a, S.T(meet(x, ab))})))
        throw algebra_error("base-case formulas disagree above a v b");
    } else if (S.leq(b, x)) {
      phi[x] = pack(j, ivT({a, S.T(meet(x, ab))}));
    } else {
      throw algebra_error("element above neither minimal element");
    }
  }
  auto members = detail::close_under_imp_caret(L, phi);
  SymAlgebra E = detail::restrict_sym(L, members);
  std::vector<Elem> e(S.size());
  for (Elem x = 0; x < S.size(); ++x)
    e[x] = static_cast<Elem>(std::lower_bound(members.begin(), members.end(), phi[x]) - members.begin());
  return {std::move(E), std::move(e), "base2"};
}

namespace detail {

/// Element of 2^Y x S(X): K = Boolean coordinates at 0, A and C = signed
/// coordinates at a and at b.
struct Triple {
  std::uint64_t K = 0, A = 0, C = 0;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

inline Triple t_join(const Triple& x, const Triple& y) { return {x.K & y.K, x.A & y.A, x.C & y.C}; }
inline Triple t_imp(const Triple& x, const Triple& y) { return {y.K & ~x.K, y.A & ~x.A, y.C & ~x.C}; }
inline Triple t_T(const Triple& x) { return {x.K, x.C, x.A}; }
inline std::optional<Triple> t_meet(const Triple& x, const Triple& y) {
  Triple m{x.K | y.K, x.A | y.A, x.C | y.C};
  if (m.A & m.C) return std::nullopt;
  return m;
}
inline std::optional<Triple> t_caret(const Triple& x, const Triple& y) {
  Triple p = t_join(x, y);
  auto d = t_meet(p, t_T(t_imp(p, y)));
  if (!d) return std::nullopt;
  return t_meet(x, *d);
}

inline std::string bits_to_string(std::uint64_t m) { return set_to_string(m); }

}  // namespace detail

/// Envelope of a finite symmetric implication algebra.
///
/// Locally symmetric inputs are their own envelope. Otherwise the input is
/// represented subdirectly: one coordinate in 2 per T-invariant morphism
/// I -> A2 and one signed coordinate per conjugate pair of symmetric
/// morphisms I -> A3. The envelope is the closure of the image under -> and
/// caret in 2^Y x S(X).
inline EnvelopeResult envelope(const PresentedSym& P) {
  const SymAlgebra& S = P.S;
  if (is_locally_symmetric(S).passed) return identity_envelope(S);
  const std::size_t n = S.size();
  const Elem one = S.top();
  std::vector<Elem> ys, xs;  // p for Y coordinates, p with q = T(p) for X coordinates
  for (Elem p = 0; p < n; ++p) {
    if (p == one) continue;
    auto f = [&](Elem x) { return S.leq(x, p) ? 0 : 1; };
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) {
      ok = f(S.T(x)) == f(x);
      for (Elem y = 0; y < n && ok; ++y) ok = f(S.imp(x, y)) == ((f(x) == 0 || f(y) == 1) ? 1 : 0);
    }
    if (ok) ys.push_back(p);
  }
  for (Elem p = 0; p < n; ++p) {
    const Elem q = S.T(p);
    if (p == one || p >= q || S.base().has_common_lower_bound(p, q)) continue;
    auto f = [&](Elem x) { return S.leq(x, p) ? 0 : S.leq(x, q) ? 1 : 2; };  // a, b, 1
    auto imp3 = [](int u, int v) { return (v == 2 || u == v) ? 2 : v; };
    auto swap3 = [](int u) { return u == 2 ? 2 : 1 - u; };
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) {
      ok = f(S.T(x)) == swap3(f(x));
      for (Elem y = 0; y < n && ok; ++y) ok = f(S.imp(x, y)) == imp3(f(x), f(y));
    }
    if (ok) xs.push_back(p);
  }
  if (ys.size() > 64 || xs.size() > 64) throw algebra_error("too many subdirect coordinates");
  std::vector<detail::Triple> img(n);
  for (Elem x = 0; x < n; ++x) {
    for (std::size_t j = 0; j < ys.size(); ++j)
      if (S.leq(x, ys[j])) img[x].K |= std::uint64_t{1} << j;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (S.leq(x, xs[i])) img[x].A |= std::uint64_t{1} << i;
      if (S.leq(x, S.T(xs[i]))) img[x].C |= std::uint64_t{1} << i;
    }
  }
  {
    auto sorted = img;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw algebra_error("input is not locally symmetric and outside the variety generated by A2 and A3");
  }
  std::vector<detail::Triple> members;
  std::set<detail::Triple> in;
  for (const auto& t : img)
    if (in.insert(t).second) members.push_back(t);
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      auto x = members[i], y = members[j];
      for (auto z : {std::optional<detail::Triple>(detail::t_imp(x, y)), std::optional<detail::Triple>(detail::t_imp(y, x)),
                     detail::t_caret(x, y), detail::t_caret(y, x)})
        if (z && in.insert(*z).second) {
          members.push_back(*z);
          if (members.size() > kMaxElements) throw algebra_error("envelope exceeds the element limit");
        }
    }
  std::sort(members.begin(), members.end());
  std::map<detail::Triple, Elem> pos;
  for (Elem i = 0; i < members.size(); ++i) pos.emplace(members[i], i);
  auto at = [&](const detail::Triple& t) {
    auto it = pos.find(t);
    if (it == pos.end()) throw algebra_error("envelope not closed under join or T");
    return it->second;
  };
  FinAlgebra base = FinAlgebra::from_join(members.size(), at(detail::Triple{}),
                                          [&](Elem x, Elem y) { return at(detail::t_join(members[x], members[y])); });
  std::vector<Elem> T(members.size());
  std::vector<std::string> labels;
  for (Elem i = 0; i < members.size(); ++i) {
    T[i] = at(detail::t_T(members[i]));
    const auto& t = members[i];
    labels.push_back("(" + detail::bits_to_string(t.K) + ";<" + detail::bits_to_string(t.A) + "|" +
                     detail::bits_to_string(t.C) + ">)");
  }
  std::vector<Elem> e(n);
  for (Elem x = 0; x < n; ++x) e[x] = at(img[x]);
  return {SymAlgebra(std::move(base), std::move(T), std::move(labels)), std::move(e), "subdirect"};
}

/// Invariants of an envelope of S: E locally symmetric, e an injective
/// symmetric implication morphism with upward-closed image that generates E
/// under caret and ->.
inline CheckReport check_envelope(const SymAlgebra& S, const EnvelopeResult& R, SuiteOptions opts = SuiteOptions::from_env()) {
  const SymAlgebra& E = R.E;
  std::vector<CheckReport> parts;
  parts.push_back(is_locally_symmetric(E, opts));
  parts.push_back(check_morphism(R.e, S.base(), E.base(), opts));
  Suite s("envelope", S.size(), opts);
  s.forall1("T-equivariant", [&](Elem x) { return R.e[S.T(x)] == E.T(R.e[x]); });
  s.forall2("injective", [&](Elem x, Elem y) { return x == y || R.e[x] != R.e[y]; });
  std::vector<bool> in_img(E.size(), false);
  for (Elem v : R.e) in_img[v] = true;
  s.require("upward-closed", is_upward_closed(E.base(), in_img));
  if (s.ok() && parts[0].passed) {
    auto gen = detail::close_under_imp_caret(E, R.e);
    s.require("generates", gen.size() == E.size());
  }
  parts.push_back(std::move(s).finish());
  return merge_reports("envelope", parts);
}

/// Exhaustive search for symmetric implication morphisms A -> B extending a
/// partial assignment, with a node budget.
struct MorphismSearch {
  std::vector<std::vector<Elem>> found;
  bool budget_exceeded = false;
  std::size_t nodes = 0;
};

namespace detail {

class MorphismEnumerator {
 public:
  MorphismEnumerator(const SymAlgebra& A, const SymAlgebra& B, std::size_t budget, std::size_t limit)
      : A_(A), B_(B), budget_(budget), limit_(limit), g_(A.size(), kNone) {}

  MorphismSearch run(const std::vector<std::pair<Elem, Elem>>& fixed) {
    std::vector<Elem> trail;
    bool ok = assign(A_.top(), B_.top(), trail);
    for (auto [x, v] : fixed) ok = ok && assign(x, v, trail);
    if (ok) search(0);
    return std::move(out_);
  }

 private:
  bool assign(Elem x, Elem v, std::vector<Elem>& trail) {
    std::vector<std::pair<Elem, Elem>> work{{x, v}};
    while (!work.empty()) {
      auto [p, w] = work.back();
      work.pop_back();
      if (g_[p] != kNone) {
        if (g_[p] != w) return false;
        continue;
      }
      g_[p] = w;
      trail.push_back(p);
      assigned_.push_back(p);
      work.emplace_back(A_.T(p), B_.T(w));
      for (Elem q : assigned_) {
        Elem u = g_[q];
        work.emplace_back(A_.join(p, q), B_.join(w, u));
        work.emplace_back(A_.imp(p, q), B_.imp(w, u));
        work.emplace_back(A_.imp(q, p), B_.imp(u, w));
      }
    }
    return true;
  }

  void undo(std::vector<Elem>& trail) {
    for (Elem p : trail) g_[p] = kNone;
    assigned_.resize(assigned_.size() - trail.size());
    trail.clear();
  }

  void search(Elem from) {
    if (out_.budget_exceeded || out_.found.size() >= limit_) return;
    if (++out_.nodes > budget_) {
      out_.budget_exceeded = true;
      return;
    }
    Elem x = from;
    while (x < A_.size() && g_[x] != kNone) ++x;
    if (x == A_.size()) {
      out_.found.push_back(g_);
      return;
    }
    for (Elem v = 0; v < B_.size(); ++v) {
      std::vector<Elem> trail;
      if (assign(x, v, trail)) search(x + 1);
      undo(trail);
      if (out_.budget_exceeded || out_.found.size() >= limit_) return;
    }
  }

  const SymAlgebra& A_;
  const SymAlgebra& B_;
  std::size_t budget_;
  std::size_t limit_;
  std::vector<Elem> g_;
  std::vector<Elem> assigned_;
  MorphismSearch out_;
};

}  // namespace detail

inline constexpr std::size_t kDefaultMorphismBudget = 2'000'000;

inline MorphismSearch enumerate_morphisms(const SymAlgebra& A, const SymAlgebra& B,
                                          const std::vector<std::pair<Elem, Elem>>& fixed = {},
                                          std::size_t budget = kDefaultMorphismBudget,
                                          std::size_t limit = std::numeric_limits<std::size_t>::max()) {
  return detail::MorphismEnumerator(A, B, budget, limit).run(fixed);
}

/// Every symmetric morphism f: S -> M has exactly one extension h: E -> M
/// with h(e(x)) = f(x). The note records morphism and extension counts.
inline CheckReport check_universal_property(const SymAlgebra& S, const EnvelopeResult& R, const SymAlgebra& M,
                                            std::size_t budget = kDefaultMorphismBudget,
                                            SuiteOptions opts = SuiteOptions::from_env()) {
  if (M.size() > 256) return CheckReport::not_applicable("universal-property", "target exceeds 256 elements");
  if (!is_locally_symmetric(M, opts).passed)
    return CheckReport::not_applicable("universal-property", "target is not locally symmetric");
  Suite s("universal-property", S.size(), opts);
  auto fs = enumerate_morphisms(S, M, {}, budget);
  if (fs.budget_exceeded) return CheckReport::not_applicable("universal-property", "budget exceeded enumerating morphisms");
  std::size_t total_ext = 0;
  for (std::size_t k = 0; k < fs.found.size() && s.ok(); ++k) {
    const auto& f = fs.found[k];
    std::vector<std::pair<Elem, Elem>> fixed;
    for (Elem x = 0; x < S.size(); ++x) fixed.emplace_back(R.e[x], f[x]);
    auto ext = enumerate_morphisms(R.E, M, fixed, budget, 2);
    if (ext.budget_exceeded)
      return CheckReport::not_applicable("universal-property", "budget exceeded enumerating extensions");
    total_ext += ext.found.size();
    s.require("unique-extension", ext.found.size() == 1, f);
  }
  s.note("morphisms=" + std::to_string(fs.found.size()) + " extensions=" + std::to_string(total_ext));
  return std::move(s).finish();
}

/// Coatom code of each element: bit i of x is set iff the i-th coatom is
/// not above x.
inline std::pair<int, std::vector<Mask>> coatom_codes(const SymAlgebra& S) {
  const FinAlgebra& B = S.base();
  std::vector<Elem> coatoms;
  for (Elem c = 0; c < S.size(); ++c) {
    if (c == S.top()) continue;
    bool cover = true;
    for (Elem z = 0; z < S.size() && cover; ++z)
      if (B.lt(c, z) && z != S.top()) cover = false;
    if (cover) coatoms.push_back(c);
  }
  if (coatoms.size() > 16) throw algebra_error("more than 16 coatoms");
  if (coatoms.empty()) coatoms.push_back(kNone);  // one-element algebra: a single unused atom
  std::vector<Mask> code(S.size(), 0);
  for (Elem x = 0; x < S.size(); ++x)
    for (std::size_t i = 0; i < coatoms.size(); ++i)
      if (coatoms[i] == kNone || !B.leq(x, coatoms[i])) code[x] |= Mask{1} << i;
  return {static_cast<int>(coatoms.size()), std::move(code)};
}

/// Presented form of a finite symmetric implication algebra.
inline PresentedSpec to_presented(const SymAlgebra& S) {
  auto [atoms, code] = coatom_codes(S);
  PresentedSpec P;
  P.atoms = atoms;
  P.elements = code;
  std::sort(P.elements.begin(), P.elements.end());
  for (Elem x = 0; x < S.size(); ++x)
    if (code[x] < code[S.T(x)]) P.T.emplace_back(code[x], code[S.T(x)]);
  std::sort(P.T.begin(), P.T.end());
  return P;
}

}  // namespace mcalg

#endif  // MCALG_ENVELOPE_HPP
