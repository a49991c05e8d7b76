#ifndef MCALG_CORE_HPP
#define MCALG_CORE_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mcalg {

/// Dense index of an element inside a finite algebra.
using Elem = std::uint32_t;
inline constexpr Elem kNone = std::numeric_limits<Elem>::max();

/// Hard limit on universe size for table construction.
inline constexpr std::size_t kMaxElements = 8192;
/// Default cap above which suites switch from exhaustive to sampled tuples.
inline constexpr std::size_t kDefaultExhaustiveCap = 4096;
inline constexpr std::uint64_t kDefaultSeed = 0x6d63616c67ULL;

class algebra_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Failing tuple of a suite: element indices plus the rule that broke.
struct Witness {
  std::vector<Elem> elems;
  std::string rule;
};

/// Outcome of an axiom or theorem suite.
///
/// A report that failed on an applicable input always carries the first
/// witness in lexicographic tuple order. Conditional theorems whose
/// hypothesis does not hold report `applicable == false` without witness.
struct CheckReport {
  std::string suite;
  bool passed = true;
  bool applicable = true;
  std::optional<Witness> witness;
  bool sampled = false;
  std::uint64_t seed = 0;
  std::string note;

  static CheckReport not_applicable(std::string suite, std::string why) {
    CheckReport r;
    r.suite = std::move(suite);
    r.passed = false;
    r.applicable = false;
    r.note = std::move(why);
    return r;
  }
};

/// Combines several reports; the first failure wins.
inline CheckReport merge_reports(std::string suite, const std::vector<CheckReport>& parts) {
  CheckReport out;
  out.suite = std::move(suite);
  for (const auto& p : parts) {
    out.sampled = out.sampled || p.sampled;
    if (p.sampled) out.seed = p.seed;
    if (!p.applicable && out.passed) {
      out.passed = false;
      out.applicable = false;
      out.note = p.suite + ": " + p.note;
      continue;
    }
    if (!p.passed && p.applicable) {
      out.passed = false;
      out.applicable = true;
      out.witness = p.witness;
      if (out.witness) out.witness->rule = p.suite + "/" + out.witness->rule;
      out.note = p.note;
      return out;
    }
  }
  return out;
}

struct SuiteOptions {
  std::size_t exhaustive_cap = kDefaultExhaustiveCap;
  std::uint64_t seed = kDefaultSeed;
  std::size_t samples_per_rule = 200000;

  /// Reads MCALG_MAX_SIZE when set.
  static SuiteOptions from_env() {
    SuiteOptions o;
    if (const char* v = std::getenv("MCALG_MAX_SIZE")) {
      try {
        o.exhaustive_cap = static_cast<std::size_t>(std::stoull(v));
      } catch (const std::exception&) {
        throw algebra_error("MCALG_MAX_SIZE must be a non-negative integer");
      }
    }
    return o;
  }
};

/// Rule-by-rule quantifier engine. Rules run in declaration order; after the
/// first failure the remaining rules are skipped, so the reported witness is
/// the lexicographically first tuple of the first broken rule.
class Suite {
 public:
  Suite(std::string name, std::size_t n, SuiteOptions opts = SuiteOptions::from_env())
      : n_(n), opts_(opts), rng_(opts.seed) {
    report_.suite = std::move(name);
    report_.sampled = n > opts_.exhaustive_cap;
    report_.seed = report_.sampled ? opts_.seed : 0;
  }

  bool ok() const { return report_.passed; }

  void fail(std::string rule, std::vector<Elem> elems) {
    if (!report_.passed) return;
    report_.passed = false;
    report_.witness = Witness{std::move(elems), std::move(rule)};
  }

  template <class Pred>
  void forall1(const std::string& rule, Pred&& pred) {
    if (!ok()) return;
    for (Elem x = 0; x < n_; ++x) {
      if (!pred(x)) return fail(rule, {x});
    }
  }

  template <class Pred>
  void forall2(const std::string& rule, Pred&& pred) {
    if (!ok()) return;
    if (report_.sampled) {
      for (std::size_t s = 0; s < opts_.samples_per_rule; ++s) {
        Elem x = draw(), y = draw();
        if (!pred(x, y)) return fail(rule, {x, y});
      }
      return;
    }
    for (Elem x = 0; x < n_; ++x)
      for (Elem y = 0; y < n_; ++y)
        if (!pred(x, y)) return fail(rule, {x, y});
  }

  template <class Pred>
  void forall3(const std::string& rule, Pred&& pred) {
    if (!ok()) return;
    if (report_.sampled) {
      for (std::size_t s = 0; s < opts_.samples_per_rule; ++s) {
        Elem x = draw(), y = draw(), z = draw();
        if (!pred(x, y, z)) return fail(rule, {x, y, z});
      }
      return;
    }
    for (Elem x = 0; x < n_; ++x)
      for (Elem y = 0; y < n_; ++y)
        for (Elem z = 0; z < n_; ++z)
          if (!pred(x, y, z)) return fail(rule, {x, y, z});
  }

  /// Plain boolean assertion with an explicit witness.
  void require(const std::string& rule, bool cond, std::vector<Elem> elems = {}) {
    if (ok() && !cond) fail(rule, std::move(elems));
  }

  void note(std::string text) { report_.note = std::move(text); }

  CheckReport finish() && { return std::move(report_); }
  const CheckReport& report() const { return report_; }

 private:
  Elem draw() { return static_cast<Elem>(std::uniform_int_distribution<std::size_t>(0, n_ - 1)(rng_)); }

  std::size_t n_;
  SuiteOptions opts_;
  std::mt19937_64 rng_;
  CheckReport report_;
};

namespace detail {

class BitRows {
 public:
  BitRows() = default;
  explicit BitRows(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  void set(std::size_t r, std::size_t c) { bits_[r * words_ + c / 64] |= std::uint64_t{1} << (c % 64); }
  bool test(std::size_t r, std::size_t c) const { return (bits_[r * words_ + c / 64] >> (c % 64)) & 1U; }
  const std::uint64_t* row(std::size_t r) const { return bits_.data() + r * words_; }
  std::size_t words() const { return words_; }
  std::size_t popcount(std::size_t r) const {
    std::size_t c = 0;
    for (std::size_t w = 0; w < words_; ++w) c += static_cast<std::size_t>(std::popcount(row(r)[w]));
    return c;
  }

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace detail

/// Explicit finite implication algebra: a join table on {0..n-1} with a top.
///
/// The order, partial meets and relative complements are derived from the
/// join table once, at construction. Nothing about the table is trusted:
/// corrupt tables still construct, and the checkers report the violation.
class FinAlgebra {
 public:
  FinAlgebra() = default;

  FinAlgebra(std::size_t n, std::vector<Elem> join, Elem top) : n_(n), top_(top), join_(std::move(join)) {
    if (n_ == 0) throw algebra_error("algebra must have at least one element");
    if (n_ > kMaxElements) throw algebra_error("algebra exceeds " + std::to_string(kMaxElements) + " elements");
    if (join_.size() != n_ * n_) throw algebra_error("join table must have n*n entries");
    if (top_ >= n_) throw algebra_error("top index out of range");
    for (Elem v : join_)
      if (v >= n_) throw algebra_error("join table entry out of range");
    derive();
  }

  /// Builds the table by evaluating `join_fn` on every pair.
  template <class F>
  static FinAlgebra from_join(std::size_t n, Elem top, F&& join_fn) {
    std::vector<Elem> t(n * n);
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) t[x * n + y] = join_fn(x, y);
    return FinAlgebra(n, std::move(t), top);
  }

  std::size_t size() const { return n_; }
  Elem top() const { return top_; }
  const std::vector<Elem>& join_table() const { return join_; }

  Elem join(Elem x, Elem y) const {
    check_index(x);
    check_index(y);
    return join_[x * n_ + y];
  }

  /// x <= y iff x v y = y.
  bool leq(Elem x, Elem y) const {
    check_index(x);
    check_index(y);
    return join_[x * n_ + y] == y;
  }
  bool lt(Elem x, Elem y) const { return x != y && leq(x, y); }

  /// Greatest common lower bound when the lower-bound set has a maximum.
  std::optional<Elem> meet(Elem x, Elem y) const {
    check_index(x);
    check_index(y);
    Elem m = meet_[x * n_ + y];
    if (m == kNone) return std::nullopt;
    return m;
  }

  bool has_common_lower_bound(Elem x, Elem y) const {
    check_index(x);
    check_index(y);
    const auto* a = down_.row(x);
    const auto* b = down_.row(y);
    for (std::size_t w = 0; w < down_.words(); ++w)
      if (a[w] & b[w]) return true;
    return false;
  }

  /// Relative complement of x v y over y in [y, 1].
  Elem imp(Elem x, Elem y) const {
    Elem r = try_imp(x, y);
    if (r == kNone) throw algebra_error("not an implication algebra: no unique relative complement");
    return r;
  }
  /// As imp(), but returns kNone instead of throwing.
  Elem try_imp(Elem x, Elem y) const {
    check_index(x);
    check_index(y);
    return imp_[x * n_ + y];
  }

  std::vector<Elem> up_set(Elem x) const {
    std::vector<Elem> r;
    for (Elem z = 0; z < n_; ++z)
      if (leq(x, z)) r.push_back(z);
    return r;
  }
  std::vector<Elem> down_set(Elem x) const {
    std::vector<Elem> r;
    for (Elem z = 0; z < n_; ++z)
      if (leq(z, x)) r.push_back(z);
    return r;
  }
  std::vector<Elem> minimal_elements() const {
    std::vector<Elem> r;
    for (Elem x = 0; x < n_; ++x)
      if (down_.popcount(x) == 1) r.push_back(x);
    return r;
  }

 private:
  void check_index(Elem x) const {
    if (x >= n_) throw algebra_error("element index " + std::to_string(x) + " out of range");
  }

  void derive() {
    down_ = detail::BitRows(n_);
    for (Elem x = 0; x < n_; ++x)
      for (Elem z = 0; z < n_; ++z)
        if (join_[z * n_ + x] == x) down_.set(x, z);

    std::vector<std::size_t> height(n_);
    for (Elem x = 0; x < n_; ++x) height[x] = down_.popcount(x);

    meet_.assign(n_ * n_, kNone);
    std::vector<std::uint64_t> common(down_.words());
    for (Elem x = 0; x < n_; ++x) {
      for (Elem y = x; y < n_; ++y) {
        const auto* a = down_.row(x);
        const auto* b = down_.row(y);
        Elem best = kNone;
        for (std::size_t w = 0; w < common.size(); ++w) {
          common[w] = a[w] & b[w];
          std::uint64_t bits = common[w];
          while (bits) {
            Elem c = static_cast<Elem>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
            bits &= bits - 1;
            if (best == kNone || height[c] > height[best]) best = c;
          }
        }
        if (best != kNone) {
          const auto* d = down_.row(best);
          for (std::size_t w = 0; w < common.size(); ++w) {
            if ((common[w] & ~d[w]) != 0) {
              best = kNone;
              break;
            }
          }
        }
        meet_[x * n_ + y] = best;
        meet_[y * n_ + x] = best;
      }
    }

    imp_.assign(n_ * n_, kNone);
    for (Elem x = 0; x < n_; ++x) {
      for (Elem y = 0; y < n_; ++y) {
        Elem p = join_[x * n_ + y];
        Elem found = kNone;
        bool unique = true;
        for (Elem z = 0; z < n_ && unique; ++z) {
          if (join_[y * n_ + z] != z) continue;  // z >= y
          if (join_[p * n_ + z] != top_) continue;
          if (meet_[p * n_ + z] != y) continue;
          if (found != kNone) unique = false;
          found = z;
        }
        imp_[x * n_ + y] = unique ? found : kNone;
      }
    }
  }

  std::size_t n_ = 0;
  Elem top_ = 0;
  std::vector<Elem> join_;
  detail::BitRows down_;  // row x: elements below x
  std::vector<Elem> meet_;
  std::vector<Elem> imp_;
};

inline bool leq(const FinAlgebra& a, Elem x, Elem y) { return a.leq(x, y); }
inline std::optional<Elem> meet_partial(const FinAlgebra& a, Elem x, Elem y) { return a.meet(x, y); }
inline Elem imp(const FinAlgebra& a, Elem x, Elem y) { return a.imp(x, y); }

/// Semilattice laws, top, and the derived order.
inline CheckReport check_semilattice(const FinAlgebra& A, SuiteOptions opts = SuiteOptions::from_env()) {
  Suite s("semilattice", A.size(), opts);
  s.forall1("idempotent", [&](Elem x) { return A.join(x, x) == x; });
  s.forall2("commutative", [&](Elem x, Elem y) { return A.join(x, y) == A.join(y, x); });
  s.forall3("associative",
            [&](Elem x, Elem y, Elem z) { return A.join(A.join(x, y), z) == A.join(x, A.join(y, z)); });
  s.forall1("top", [&](Elem x) { return A.join(x, A.top()) == A.top(); });
  // The order laws follow from the above; they are kept as independent checks.
  s.forall2("antisymmetric", [&](Elem x, Elem y) { return !(A.leq(x, y) && A.leq(y, x)) || x == y; });
  s.forall3("transitive",
            [&](Elem x, Elem y, Elem z) { return !(A.leq(x, y) && A.leq(y, z)) || A.leq(x, z); });
  return std::move(s).finish();
}

/// The three implication identities, after the semilattice laws and the
/// existence of every relative complement.
inline CheckReport check_implication_axioms(const FinAlgebra& A, SuiteOptions opts = SuiteOptions::from_env()) {
  CheckReport lat = check_semilattice(A, opts);
  if (!lat.passed) {
    lat.suite = "implication";
    return lat;
  }
  Suite s("implication", A.size(), opts);
  s.forall2("relative-complement", [&](Elem x, Elem y) { return A.try_imp(x, y) != kNone; });
  if (!s.ok()) return std::move(s).finish();
  auto im = [&](Elem x, Elem y) { return A.try_imp(x, y); };
  s.forall2("(x->y)->x=x", [&](Elem x, Elem y) { return im(im(x, y), x) == x; });
  s.forall2("(x->y)->y=(y->x)->x", [&](Elem x, Elem y) { return im(im(x, y), y) == im(im(y, x), x); });
  s.forall3("x->(y->z)=y->(x->z)",
            [&](Elem x, Elem y, Elem z) { return im(x, im(y, z)) == im(y, im(x, z)); });
  s.forall2("(x->y)->y=xvy", [&](Elem x, Elem y) { return im(im(x, y), y) == A.join(x, y); });
  return std::move(s).finish();
}

/// f preserves v, -> and 1. `f[x]` is the image of x.
inline CheckReport check_morphism(const std::vector<Elem>& f, const FinAlgebra& A, const FinAlgebra& B,
                                  SuiteOptions opts = SuiteOptions::from_env()) {
  Suite s("morphism", A.size(), opts);
  s.require("total", f.size() == A.size());
  if (!s.ok()) return std::move(s).finish();
  s.forall1("in-range", [&](Elem x) { return f[x] < B.size(); });
  s.require("top", s.ok() && f[A.top()] == B.top(), {A.top()});
  s.forall2("join", [&](Elem x, Elem y) { return f[A.join(x, y)] == B.join(f[x], f[y]); });
  s.forall2("imp", [&](Elem x, Elem y) {
    Elem l = A.try_imp(x, y);
    Elem r = B.try_imp(f[x], f[y]);
    return l != kNone && r != kNone && f[l] == r;
  });
  return std::move(s).finish();
}

/// Sub-universe selection: `members` sorted ascending and closed under join.
/// Returns the restricted algebra; `index_of[x]` maps ambient to sub indices.
struct SubAlgebra {
  FinAlgebra alg;
  std::vector<Elem> members;
  std::vector<Elem> index_of;
};

inline SubAlgebra restrict_to(const FinAlgebra& A, std::vector<Elem> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  std::vector<Elem> index_of(A.size(), kNone);
  for (Elem i = 0; i < members.size(); ++i) index_of[members[i]] = i;
  if (members.empty() || index_of[A.top()] == kNone) throw algebra_error("subset must contain top");
  std::vector<Elem> t(members.size() * members.size());
  for (Elem i = 0; i < members.size(); ++i)
    for (Elem j = 0; j < members.size(); ++j) {
      Elem r = index_of[A.join(members[i], members[j])];
      if (r == kNone) throw algebra_error("subset is not closed under join");
      t[i * members.size() + j] = r;
    }
  FinAlgebra sub(members.size(), std::move(t), index_of[A.top()]);
  return {std::move(sub), std::move(members), std::move(index_of)};
}

inline bool is_upward_closed(const FinAlgebra& A, const std::vector<bool>& in) {
  for (Elem x = 0; x < A.size(); ++x)
    if (in[x])
      for (Elem y = 0; y < A.size(); ++y)
        if (!in[y] && A.leq(x, y)) return false;
  return true;
}

/// Cover relation pairs (lower, upper) of the derived order.
inline std::vector<std::pair<Elem, Elem>> cover_edges(const FinAlgebra& A) {
  std::vector<std::pair<Elem, Elem>> out;
  const auto n = static_cast<Elem>(A.size());
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (!A.lt(x, y)) continue;
      bool cover = true;
      for (Elem z = 0; z < n && cover; ++z)
        if (A.lt(x, z) && A.lt(z, y)) cover = false;
      if (cover) out.emplace_back(x, y);
    }
  return out;
}

/// Two-element chain 0 < 1.
inline FinAlgebra chain2() { return FinAlgebra(2, {0, 1, 1, 1}, 1); }

}  // namespace mcalg

#endif  // MCALG_CORE_HPP
