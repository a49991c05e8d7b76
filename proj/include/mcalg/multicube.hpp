#ifndef MCALG_MULTICUBE_HPP
#define MCALG_MULTICUBE_HPP

#include <map>

#include "mcalg/cubic.hpp"
#include "mcalg/models.hpp"

namespace mcalg {

inline constexpr int kMaxMcDim = 8;
inline constexpr int kMaxMcRadius = 4;

/// Coordinate modules M_i = {-n_i..n_i} (odd size 2n_i+1), Omega = {1..dim}.
struct McSpec {
  std::vector<int> n;

  McSpec() = default;
  explicit McSpec(std::vector<int> sizes) : n(std::move(sizes)) {
    if (n.empty()) throw algebra_error("multicube needs at least one coordinate");
    if (n.size() > static_cast<std::size_t>(kMaxMcDim)) throw algebra_error("multicube dimension capped at 8");
    for (int v : n) {
      if (v < 0) throw algebra_error("n_i must be ≥ 0");
      if (v > kMaxMcRadius) throw algebra_error("n_i capped at 4");
    }
  }

  int dim() const { return static_cast<int>(n.size()); }
  Mask omega() const { return (Mask{1} << dim()) - 1; }
  int modulus(int i) const { return 2 * n[static_cast<std::size_t>(i)] + 1; }
  bool in_range(int i, int v) const { return v >= -n[static_cast<std::size_t>(i)] && v <= n[static_cast<std::size_t>(i)]; }

  /// prod (2 n_i + 2).
  std::size_t expected_size() const {
    std::size_t s = 1;
    for (int v : n) s *= static_cast<std::size_t>(2 * v + 2);
    return s;
  }
  friend bool operator==(const McSpec&, const McSpec&) = default;
};

using McVec = std::vector<int>;

/// Flat Gamma + X_sigma with Gamma sigma-critical (zero on sigma).
struct McElt {
  McVec gamma;
  Mask sigma = 0;
  friend auto operator<=>(const McElt&, const McElt&) = default;
};

inline std::string to_string(const McElt& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.gamma.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e.gamma[i]);
  }
  return s + ")+X" + set_to_string(e.sigma);
}

inline Mask support(const McVec& v) {
  Mask m = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) m |= Mask{1} << i;
  return m;
}

/// [a, b] = {i | a_i != b_i}.
inline Mask diff_set(const McVec& a, const McVec& b) {
  if (a.size() != b.size()) throw algebra_error("vector length mismatch");
  Mask m = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) m |= Mask{1} << i;
  return m;
}

/// Representation (Gamma, sigma) of v + X_A: v zeroed on A.
inline McElt canonicalize(const McSpec& spec, const McVec& v, Mask A) {
  if (static_cast<int>(v.size()) != spec.dim()) throw algebra_error("vector length does not match the spec");
  if (A & ~spec.omega()) throw algebra_error("subset outside Omega");
  McElt e{v, A};
  for (int i = 0; i < spec.dim(); ++i) {
    if (!spec.in_range(i, v[static_cast<std::size_t>(i)])) throw algebra_error("vector entry out of range");
    if ((A >> i) & 1U) e.gamma[static_cast<std::size_t>(i)] = 0;
  }
  return e;
}

inline McElt mc_top(const McSpec& spec) { return {McVec(spec.n.size(), 0), spec.omega()}; }

/// A subset of B and Gamma(y) - Gamma(x) in X_B.
inline bool mc_leq(const McElt& x, const McElt& y) {
  return (x.sigma & ~y.sigma) == 0 && (diff_set(x.gamma, y.gamma) & ~y.sigma) == 0;
}

inline McElt mc_join(const McSpec& spec, const McElt& x, const McElt& y) {
  return canonicalize(spec, x.gamma, x.sigma | y.sigma | diff_set(x.gamma, y.gamma));
}

/// c + X_{A n B} for a common point c; nullopt when the flats are disjoint.
inline std::optional<McElt> mc_meet(const McSpec& spec, const McElt& x, const McElt& y) {
  const Mask both_free = x.sigma | y.sigma;
  if (diff_set(x.gamma, y.gamma) & ~both_free) return std::nullopt;
  McVec c(x.gamma.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = ((x.sigma >> i) & 1U) ? y.gamma[i] : x.gamma[i];
  return canonicalize(spec, c, x.sigma & y.sigma);
}

/// 2 Gamma(a) - Gamma(b), evaluated in Z, for b <= a.
inline McVec mc_delta_vector(const McElt& a, const McElt& b) {
  McVec r(a.gamma.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = 2 * a.gamma[i] - b.gamma[i];
  return r;
}

inline McElt mc_delta_partial(const McSpec& spec, const McElt& a, const McElt& b) {
  if (!mc_leq(b, a)) throw algebra_error("partial multicube Delta needs b <= a");
  McVec r = mc_delta_vector(a, b);
  for (int i = 0; i < spec.dim(); ++i)
    if (!spec.in_range(i, r[static_cast<std::size_t>(i)]))
      throw std::logic_error("internal: 2Gamma(a)-Gamma(b) left M_" + std::to_string(i + 1));
  return canonicalize(spec, r, b.sigma);
}

/// Totalized: Delta(a, b) = Delta(a v b, b).
inline McElt mc_delta(const McSpec& spec, const McElt& a, const McElt& b) {
  return mc_delta_partial(spec, mc_join(spec, a, b), b);
}

/// c(a, b) = Gamma(a) + X_{sigma(a) u complement sigma(b)}, for a <= b.
inline McElt mc_complement(const McSpec& spec, const McElt& a, const McElt& b) {
  if (!mc_leq(a, b)) throw algebra_error("complement needs a <= b");
  return canonicalize(spec, a.gamma, a.sigma | (spec.omega() & ~b.sigma));
}

inline McElt mc_T(const McSpec& spec, const McElt& b) {
  McVec r(b.gamma.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = -b.gamma[i];
  return canonicalize(spec, r, b.sigma);
}

/// Closed form: complement of sigma(u) is inside the support of Gamma(u).
inline bool mc_is_nowhere_invariant(const McSpec& spec, const McElt& u) {
  return ((spec.omega() & ~u.sigma) & ~support(u.gamma)) == 0;
}

/// Every flat of a multicube, indexed. Elements are ordered by sigma, then
/// lexicographically by Gamma; the top comes last.
class Multicube {
 public:
  explicit Multicube(McSpec spec) : spec_(std::move(spec)) {
    const int d = spec_.dim();
    for (Mask s = 0; s <= spec_.omega(); ++s) {
      McVec g(static_cast<std::size_t>(d), 0);
      std::vector<int> free;
      for (int i = 0; i < d; ++i)
        if (!((s >> i) & 1U)) free.push_back(i);
      for (int i : free) g[static_cast<std::size_t>(i)] = -spec_.n[static_cast<std::size_t>(i)];
      while (true) {
        elems_.push_back({g, s});
        std::size_t k = free.size();
        while (k > 0) {
          auto i = static_cast<std::size_t>(free[k - 1]);
          if (g[i] < spec_.n[i]) {
            ++g[i];
            break;
          }
          g[i] = -spec_.n[i];
          --k;
        }
        if (k == 0) break;
      }
    }
    if (elems_.size() > kMaxElements) throw algebra_error("multicube too large");
    for (Elem i = 0; i < elems_.size(); ++i) index_.emplace(elems_[i], i);
    const Elem top = at(mc_top(spec_));
    FinAlgebra base = FinAlgebra::from_join(elems_.size(), top, [&](Elem x, Elem y) {
      return at(mc_join(spec_, elems_[x], elems_[y]));
    });
    refl_ = CubicAlg::from_partial(std::move(base),
                                   [&](Elem y, Elem x) { return at(mc_delta_partial(spec_, elems_[y], elems_[x])); });
    T_.resize(elems_.size());
    for (Elem i = 0; i < elems_.size(); ++i) T_[i] = at(mc_T(spec_, elems_[i]));
  }

  const McSpec& spec() const { return spec_; }
  std::size_t size() const { return elems_.size(); }
  const McElt& elem(Elem i) const { return elems_.at(i); }
  const std::vector<McElt>& elems() const { return elems_; }
  Elem at(const McElt& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) throw algebra_error("not an element of this multicube: " + to_string(e));
    return it->second;
  }
  std::optional<Elem> find(const McElt& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  const FinAlgebra& order() const { return refl_.base(); }
  /// Join table plus the totalized geometric Delta (not a cubic algebra:
  /// Delta has fixed points).
  const CubicAlg& reflection() const { return refl_; }
  const std::vector<Elem>& T() const { return T_; }
  Elem top() const { return refl_.top(); }

  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    for (const auto& e : elems_) out.push_back(to_string(e));
    return out;
  }

 private:
  McSpec spec_;
  std::vector<McElt> elems_;
  std::map<McElt, Elem> index_;
  CubicAlg refl_;
  std::vector<Elem> T_;
};

/// Nowhere-invariant elements with inherited join and Delta.
inline CubicSub mc_nucleus(const Multicube& P) {
  std::vector<Elem> members;
  for (Elem i = 0; i < P.size(); ++i)
    if (mc_is_nowhere_invariant(P.spec(), P.elem(i))) members.push_back(i);
  return restrict_cubic(P.reflection(), std::move(members));
}

/// a + X_A -> <0 + X_{A u [Gamma a, 0]}, Gamma a + X_{complement [Gamma a, 0]}>.
inline std::pair<McElt, McElt> mc_decompose_elt(const McSpec& spec, const McElt& a) {
  const Mask supp = support(a.gamma);
  return {canonicalize(spec, McVec(a.gamma.size(), 0), a.sigma | supp),
          canonicalize(spec, a.gamma, spec.omega() & ~supp)};
}

inline std::vector<std::pair<McElt, McElt>> mc_decompose(const Multicube& P) {
  std::vector<std::pair<McElt, McElt>> out;
  for (const auto& e : P.elems()) out.push_back(mc_decompose_elt(P.spec(), e));
  return out;
}

/// Embedding into S x N(P): injective, order-embedding, preserves join,
/// Delta (identity on S) and T, lands in S x N(P), upward-closed image.
inline CheckReport check_decompose(const Multicube& P, SuiteOptions opts = SuiteOptions::from_env()) {
  const auto& spec = P.spec();
  const auto img = mc_decompose(P);
  const auto& B = P.order();
  auto pair_leq = [](const std::pair<McElt, McElt>& x, const std::pair<McElt, McElt>& y) {
    return mc_leq(x.first, y.first) && mc_leq(x.second, y.second);
  };
  Suite s("decompose", P.size(), opts);
  s.forall1("codomain", [&](Elem x) {
    return img[x].first.gamma == McVec(img[x].first.gamma.size(), 0) && mc_is_nowhere_invariant(spec, img[x].second);
  });
  s.forall2("injective", [&](Elem x, Elem y) { return x == y || img[x] != img[y]; });
  s.forall2("order-embedding", [&](Elem x, Elem y) { return B.leq(x, y) == pair_leq(img[x], img[y]); });
  s.forall2("join", [&](Elem x, Elem y) {
    const auto& j = img[B.join(x, y)];
    return j.first == mc_join(spec, img[x].first, img[y].first) &&
           j.second == mc_join(spec, img[x].second, img[y].second);
  });
  s.forall2("delta", [&](Elem x, Elem y) {
    if (!B.leq(y, x)) return true;
    const auto& d = img[P.reflection().delta(x, y)];
    return d.first == img[y].first && d.second == mc_delta(spec, img[x].second, img[y].second);
  });
  s.forall1("T", [&](Elem x) {
    const auto& t = img[P.T()[x]];
    return t.first == img[x].first && t.second == mc_T(spec, img[x].second);
  });
  if (s.ok()) {
    std::map<std::pair<McElt, McElt>, Elem> inv;
    for (Elem i = 0; i < img.size(); ++i) inv.emplace(img[i], i);
    std::vector<McElt> S_part, N_part;
    for (const auto& e : P.elems()) {
      if (e.gamma == McVec(e.gamma.size(), 0)) S_part.push_back(e);
      if (mc_is_nowhere_invariant(spec, e)) N_part.push_back(e);
    }
    s.forall1("upward-closed", [&](Elem x) {
      for (const auto& a : S_part) {
        if (!mc_leq(img[x].first, a)) continue;
        for (const auto& b : N_part)
          if (mc_leq(img[x].second, b) && !inv.count({a, b})) return false;
      }
      return true;
    });
  }
  return std::move(s).finish();
}

namespace detail {

inline bool mod_eq(const McSpec& spec, const McVec& a, const McVec& b) {
  for (int i = 0; i < spec.dim(); ++i) {
    int m = spec.modulus(i);
    int d = (a[static_cast<std::size_t>(i)] - b[static_cast<std::size_t>(i)]) % m;
    if (d != 0) return false;
  }
  return true;
}

inline McVec add(const McVec& a, const McVec& b) {
  McVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

}  // namespace detail

/// Proposition on the reflection: clauses (a)-(i), exhaustive.
inline CheckReport check_basicGD(const Multicube& P, SuiteOptions opts = SuiteOptions::from_env()) {
  const auto& spec = P.spec();
  const auto& E = P.elems();
  const auto& B = P.order();
  auto D = [&](Elem a, Elem b) { return P.reflection().delta(a, b); };
  Suite s("basicGD", P.size(), opts);
  s.forall1("(a)", [&](Elem a) { return D(a, a) == a; });
  s.forall2("(b)", [&](Elem a, Elem b) { return !B.leq(b, a) || B.leq(D(a, b), a); });
  s.forall2("(c)", [&](Elem a, Elem b) {
    if (!B.leq(b, a)) return true;
    McVec raw = mc_delta_vector(E[a], E[b]);
    for (int i = 0; i < spec.dim(); ++i)
      if (!spec.in_range(i, raw[static_cast<std::size_t>(i)])) return false;
    return (support(raw) & E[b].sigma) == 0 && E[D(a, b)].gamma == raw;
  });
  s.forall2("(d)", [&](Elem a, Elem b) { return !B.leq(b, a) || D(a, D(a, b)) == b; });
  s.forall3("(e)", [&](Elem a, Elem b, Elem c) {
    return !(B.leq(c, b) && B.leq(b, a)) || B.leq(D(a, c), D(a, b));
  });
  s.forall2("(f)", [&](Elem a, Elem b) { return !B.leq(b, a) || ((D(a, b) == b) == (E[a].gamma == E[b].gamma)); });
  s.forall2("(g)", [&](Elem a, Elem b) {
    if (!B.lt(b, a)) return true;
    return D(a, b) == b || !B.meet(D(a, b), b).has_value();
  });
  s.forall3("(h)", [&](Elem a, Elem b, Elem c) {
    return !(B.leq(c, b) && B.leq(b, a)) || D(a, D(b, c)) == D(D(a, b), D(a, c));
  });
  s.forall3("(i)(a)", [&](Elem a, Elem b, Elem c) {
    if (!(B.leq(c, a) && B.leq(c, b))) return true;
    auto m = B.meet(a, b);
    if (!m) return false;
    return detail::mod_eq(spec, detail::add(E[a].gamma, E[b].gamma),
                          detail::add(E[*m].gamma, E[B.join(a, b)].gamma));
  });
  s.forall3("(i)(b)", [&](Elem a, Elem b, Elem c) {
    if (!(B.leq(c, a) && B.leq(c, b))) return true;
    auto m = B.meet(a, b);
    return m && diff_set(E[a].gamma, E[b].gamma) == diff_set(E[*m].gamma, E[B.join(a, b)].gamma);
  });
  s.forall3("(i)(c)", [&](Elem a, Elem b, Elem c) {
    if (!(B.leq(c, a) && B.leq(c, b))) return true;
    auto m = B.meet(a, b);
    return m && B.join(D(a, c), D(b, c)) == B.join(D(B.join(a, b), c), D(*m, c));
  });
  return std::move(s).finish();
}

/// Local complementation lemma, clauses (a)-(g).
inline CheckReport check_compGD(const Multicube& P, SuiteOptions opts = SuiteOptions::from_env()) {
  const auto& spec = P.spec();
  const auto& E = P.elems();
  const auto& B = P.order();
  const Elem one = P.top();
  auto c = [&](Elem a, Elem b) { return P.at(mc_complement(spec, E[a], E[b])); };
  Suite s("compGD", P.size(), opts);
  s.forall2("(a)", [&](Elem a, Elem b) { return !B.leq(a, b) || B.leq(a, c(a, b)); });
  s.forall2("(b)", [&](Elem a, Elem b) {
    if (!B.leq(a, b)) return true;
    return B.meet(b, c(a, b)) == std::optional<Elem>(a) && B.join(b, c(a, b)) == one;
  });
  s.forall3("(c)", [&](Elem a, Elem b, Elem d) {
    return !(B.leq(a, b) && B.leq(b, d)) || B.leq(c(a, d), c(a, b));
  });
  s.forall2("(d)", [&](Elem a, Elem b) { return !B.leq(a, b) || c(a, c(a, b)) == b; });
  s.forall3("(e)", [&](Elem a, Elem b, Elem d) {
    if (!(B.leq(a, b) && B.leq(a, d))) return true;
    auto m = B.meet(b, d);
    auto m2 = B.meet(c(a, b), c(a, d));
    return m && m2 && c(a, *m) == B.join(c(a, b), c(a, d)) && c(a, B.join(b, d)) == *m2;
  });
  // [a,1] is a Boolean lattice with complement c(a, .).
  s.forall3("(f)", [&](Elem a, Elem x, Elem y) {
    if (!(B.leq(a, x) && B.leq(a, y))) return true;
    auto xy = B.meet(x, y);
    if (!xy) return false;
    if (B.meet(x, c(a, x)) != std::optional<Elem>(a) || B.join(x, c(a, x)) != one) return false;
    for (Elem z = 0; z < P.size(); ++z) {
      if (!B.leq(a, z)) continue;
      auto lhs = B.meet(x, B.join(y, z));
      auto yz = B.meet(y, z);
      auto xz = B.meet(x, z);
      if (!lhs || !yz || !xz || *lhs != B.join(*xy, *xz)) return false;
    }
    return true;
  });
  // <P, v, c> is an implication algebra with x -> y = c(y, x v y), and it is
  // the relative complement of the order.
  auto im = [&](Elem x, Elem y) { return c(y, B.join(x, y)); };
  s.forall2("(g):c=imp", [&](Elem x, Elem y) { return im(x, y) == B.try_imp(x, y); });
  s.forall2("(g):(x->y)->x=x", [&](Elem x, Elem y) { return im(im(x, y), x) == x; });
  s.forall2("(g):(x->y)->y=(y->x)->x", [&](Elem x, Elem y) { return im(im(x, y), y) == im(im(y, x), x); });
  s.forall3("(g):x->(y->z)=y->(x->z)",
            [&](Elem x, Elem y, Elem z) { return im(x, im(y, z)) == im(y, im(x, z)); });
  return std::move(s).finish();
}

/// a v (b ^ c) = (a v b) ^ (a v c) whenever b ^ c exists.
inline CheckReport check_weak_distributivity(const Multicube& P, SuiteOptions opts = SuiteOptions::from_env()) {
  const auto& B = P.order();
  Suite s("weak-distributivity", P.size(), opts);
  s.forall3("a v (b^c)", [&](Elem a, Elem b, Elem c) {
    auto bc = B.meet(b, c);
    if (!bc) return true;
    auto rhs = B.meet(B.join(a, b), B.join(a, c));
    return rhs && *rhs == B.join(a, *bc);
  });
  return std::move(s).finish();
}

/// For a <= b: c(Delta(b,a), b) = Delta(1, c(a,b)) and Delta(b,a) = b ^ Delta(1, c(a,b)).
inline CheckReport check_delta_complement_link(const Multicube& P, SuiteOptions opts = SuiteOptions::from_env()) {
  const auto& spec = P.spec();
  const auto& E = P.elems();
  const auto& B = P.order();
  const Elem one = P.top();
  auto D = [&](Elem a, Elem b) { return P.reflection().delta(a, b); };
  auto c = [&](Elem a, Elem b) { return P.at(mc_complement(spec, E[a], E[b])); };
  Suite s("delta-complement", P.size(), opts);
  s.forall2("(a)", [&](Elem a, Elem b) { return !B.leq(a, b) || c(D(b, a), b) == D(one, c(a, b)); });
  s.forall2("(b)", [&](Elem a, Elem b) {
    return !B.leq(a, b) || B.meet(b, D(one, c(a, b))) == std::optional<Elem>(D(b, a));
  });
  return std::move(s).finish();
}

/// All points of V = prod M_i.
inline std::vector<McVec> mc_points(const McSpec& spec) {
  std::vector<McVec> out;
  McVec v(spec.n.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = -spec.n[i];
  while (true) {
    out.push_back(v);
    std::size_t k = v.size();
    while (k > 0) {
      if (v[k - 1] < spec.n[k - 1]) {
        ++v[k - 1];
        break;
      }
      v[k - 1] = -spec.n[k - 1];
      --k;
    }
    if (k == 0) break;
  }
  return out;
}

inline bool flat_contains(const McElt& x, const McVec& p) { return (diff_set(x.gamma, p) & ~x.sigma) == 0; }

/// Order characterization, checked against flats as point sets; also join
/// as least upper bound and meet as intersection. A coordinate with n_i = 0
/// has a single point, so the oracle also carries sigma restricted to those
/// coordinates.
inline CheckReport check_test_lemma(const Multicube& P, SuiteOptions opts = SuiteOptions::from_env()) {
  const auto& spec = P.spec();
  const auto& E = P.elems();
  const auto& B = P.order();
  const auto pts = mc_points(spec);
  Mask zero_coords = 0;
  for (int i = 0; i < spec.dim(); ++i)
    if (spec.n[static_cast<std::size_t>(i)] == 0) zero_coords |= Mask{1} << i;
  struct Flat {
    std::vector<bool> points;
    Mask tag = 0;
    bool operator==(const Flat&) const = default;
  };
  std::vector<Flat> flat(P.size());
  for (Elem x = 0; x < P.size(); ++x) {
    flat[x].points.resize(pts.size());
    for (std::size_t p = 0; p < pts.size(); ++p) flat[x].points[p] = flat_contains(E[x], pts[p]);
    flat[x].tag = E[x].sigma & zero_coords;
  }
  auto subset = [&](Elem x, Elem y) {
    if (flat[x].tag & ~flat[y].tag) return false;
    for (std::size_t p = 0; p < pts.size(); ++p)
      if (flat[x].points[p] && !flat[y].points[p]) return false;
    return true;
  };
  Suite s("test-lemma", P.size(), opts);
  s.forall1("count", [&](Elem) { return P.size() == spec.expected_size(); });
  s.forall2("(a)", [&](Elem x, Elem y) { return mc_leq(E[x], E[y]) == subset(x, y); });
  s.forall2("(b)", [&](Elem x, Elem y) {
    bool strict = subset(x, y) && !(flat[x] == flat[y]);
    return strict == (mc_leq(E[x], E[y]) && E[x].sigma != E[y].sigma);
  });
  s.forall2("(c)", [&](Elem x, Elem y) {
    if (!mc_leq(E[x], E[y])) return true;
    return canonicalize(spec, E[x].gamma, E[y].sigma) == canonicalize(spec, E[y].gamma, E[y].sigma);
  });
  s.forall2("join-lub", [&](Elem x, Elem y) {
    Elem j = B.join(x, y);
    if (!subset(x, j) || !subset(y, j)) return false;
    for (Elem z = 0; z < P.size(); ++z)
      if (subset(x, z) && subset(y, z) && !subset(j, z)) return false;
    return true;
  });
  s.forall2("meet-intersection", [&](Elem x, Elem y) {
    Flat inter{std::vector<bool>(pts.size()), flat[x].tag & flat[y].tag};
    bool any = false;
    for (std::size_t p = 0; p < pts.size(); ++p) {
      inter.points[p] = flat[x].points[p] && flat[y].points[p];
      any = any || inter.points[p];
    }
    auto m = mc_meet(spec, E[x], E[y]);
    if (!any) return !m.has_value() && !B.meet(x, y).has_value();
    return m && flat[P.at(*m)] == inter && B.meet(x, y) == std::optional<Elem>(P.at(*m));
  });
  s.forall2("gamma-monotone", [&](Elem a, Elem b) {
    if (!B.lt(a, b)) return true;
    for (std::size_t i = 0; i < E[b].gamma.size(); ++i)
      if (E[b].gamma[i] != 0 && E[a].gamma[i] != E[b].gamma[i]) return false;
    return true;
  });
  return std::move(s).finish();
}

/// Closed-form nowhere invariance against the definition, plus upward
/// closure of the nucleus.
inline CheckReport check_nowhere_invariance_mc(const Multicube& P, SuiteOptions opts = SuiteOptions::from_env()) {
  const auto& B = P.order();
  auto brute = [&](Elem u) {
    for (Elem v = 0; v < P.size(); ++v)
      if (B.lt(u, v) && P.reflection().delta(v, u) == u) return false;
    return true;
  };
  Suite s("nowhere-invariance", P.size(), opts);
  s.forall1("closed=brute", [&](Elem u) { return mc_is_nowhere_invariant(P.spec(), P.elem(u)) == brute(u); });
  s.forall2("upward", [&](Elem u, Elem v) {
    return !(B.leq(u, v) && mc_is_nowhere_invariant(P.spec(), P.elem(u))) ||
           mc_is_nowhere_invariant(P.spec(), P.elem(v));
  });
  return std::move(s).finish();
}

}  // namespace mcalg

#endif  // MCALG_MULTICUBE_HPP
