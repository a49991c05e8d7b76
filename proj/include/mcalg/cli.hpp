#ifndef MCALG_CLI_HPP
#define MCALG_CLI_HPP

#include <chrono>
#include <memory>

#include "mcalg/envelope.hpp"

namespace mcalg::cli {

/// Bad spec text; carries the 1-based line number when known.
class spec_error : public algebra_error {
 public:
  spec_error(int line, const std::string& msg)
      : algebra_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Parsed `key=value` spec. Keys may share a line (whitespace separated).
struct SpecFile {
  std::string kind;  // multicube | signed | interval | presented | product | table
  std::string name;
  std::vector<std::string> suites;

  std::vector<int> sizes;        // multicube
  int ground = -1;               // signed
  int atoms = -1;                // interval, presented
  std::vector<Mask> elements;    // presented
  std::vector<std::pair<Elem, Elem>> T;  // presented (masks) and table (indices)
  std::vector<std::string> factors;      // product
  int n = -1;                    // table
  Elem top = kNone;              // table
  std::vector<Elem> join;        // table
  std::vector<Elem> delta;       // table, optional, totalized n*n

  bool operator==(const SpecFile&) const = default;
};

namespace detail {

inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(trim(cur));
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

inline long long parse_int(const std::string& s, int line, const std::string& key) {
  if (s.empty()) throw spec_error(line, "empty value in " + key);
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos, 10);
  } catch (const std::exception&) {
    throw spec_error(line, "not an integer in " + key + ": '" + s + "'");
  }
  if (pos != s.size()) throw spec_error(line, "not an integer in " + key + ": '" + s + "'");
  return v;
}

inline std::vector<long long> parse_int_list(const std::string& s, int line, const std::string& key) {
  std::vector<long long> out;
  if (s.empty()) return out;
  for (const auto& tok : split(s, ',')) out.push_back(parse_int(tok, line, key));
  return out;
}

inline Elem to_elem(long long v, int line, const std::string& key) {
  if (v < 0 || v > static_cast<long long>(kMaxElements)) throw spec_error(line, "value out of range in " + key);
  return static_cast<Elem>(v);
}

inline std::vector<std::pair<Elem, Elem>> parse_pairs(const std::string& s, int line, const std::string& key) {
  std::vector<std::pair<Elem, Elem>> out;
  if (s.empty()) return out;
  for (const auto& tok : split(s, ',')) {
    auto parts = split(tok, ':');
    if (parts.size() != 2) throw spec_error(line, key + " entries must look like x:y");
    out.emplace_back(to_elem(parse_int(parts[0], line, key), line, key),
                     to_elem(parse_int(parts[1], line, key), line, key));
  }
  return out;
}

template <class T>
std::string join_list(const std::vector<T>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    if constexpr (std::is_same_v<T, std::string>)
      s += v[i];
    else
      s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace detail

inline SpecFile parse_spec(const std::string& text) {
  SpecFile f;
  std::map<std::string, std::pair<std::string, int>> kv;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::istringstream toks(raw);
    std::string tok;
    while (toks >> tok) {
      auto eq = tok.find('=');
      if (eq == std::string::npos || eq == 0) throw spec_error(line, "expected key=value, got '" + tok + "'");
      std::string key = tok.substr(0, eq);
      if (kv.count(key)) throw spec_error(line, "duplicate key '" + key + "'");
      kv[key] = {tok.substr(eq + 1), line};
    }
  }
  auto take = [&](const std::string& key) -> std::optional<std::pair<std::string, int>> {
    auto it = kv.find(key);
    if (it == kv.end()) return std::nullopt;
    auto v = it->second;
    kv.erase(it);
    return v;
  };
  auto need = [&](const std::string& key) {
    auto v = take(key);
    if (!v) throw spec_error(0, "missing key '" + key + "' for kind=" + f.kind);
    return *v;
  };
  auto kind = take("kind");
  if (!kind) throw spec_error(0, "missing key 'kind'");
  f.kind = kind->first;
  if (auto v = take("name")) f.name = v->first;
  if (auto v = take("suites")) f.suites = detail::split(v->first, ',');

  if (f.kind == "multicube") {
    auto [s, l] = need("sizes");
    for (long long v : detail::parse_int_list(s, l, "sizes")) {
      if (v < 0) throw spec_error(l, "n_i must be ≥ 0");
      if (v > kMaxMcRadius) throw spec_error(l, "n_i capped at 4");
      f.sizes.push_back(static_cast<int>(v));
    }
    if (f.sizes.empty()) throw spec_error(l, "sizes must not be empty");
    if (f.sizes.size() > static_cast<std::size_t>(kMaxMcDim)) throw spec_error(l, "at most 8 coordinates");
  } else if (f.kind == "signed") {
    auto [s, l] = need("ground");
    long long g = detail::parse_int(s, l, "ground");
    if (g < 0 || g > 7) throw spec_error(l, "ground must be in [0, 7]");
    f.ground = static_cast<int>(g);
  } else if (f.kind == "interval") {
    auto [s, l] = need("atoms");
    long long a = detail::parse_int(s, l, "atoms");
    if (a < 0 || a > 7) throw spec_error(l, "atoms must be in [0, 7]");
    f.atoms = static_cast<int>(a);
  } else if (f.kind == "presented") {
    auto [s, l] = need("atoms");
    long long a = detail::parse_int(s, l, "atoms");
    if (a < 1 || a > 16) throw spec_error(l, "atoms must be in [1, 16]");
    f.atoms = static_cast<int>(a);
    auto [es, el] = need("elements");
    for (long long v : detail::parse_int_list(es, el, "elements")) {
      if (v < 0 || v >= (1LL << a)) throw spec_error(el, "element mask out of range: " + std::to_string(v));
      f.elements.push_back(static_cast<Mask>(v));
    }
    if (auto t = take("T")) f.T = detail::parse_pairs(t->first, t->second, "T");
  } else if (f.kind == "product") {
    auto [s, l] = need("factors");
    f.factors = detail::split(s, ',');
    if (f.factors.empty() || f.factors.front().empty()) throw spec_error(l, "factors must not be empty");
  } else if (f.kind == "table") {
    auto [ns, nl] = need("n");
    long long n = detail::parse_int(ns, nl, "n");
    if (n < 1 || n > 512) throw spec_error(nl, "n must be in [1, 512]");
    f.n = static_cast<int>(n);
    auto [ts, tl] = need("top");
    f.top = detail::to_elem(detail::parse_int(ts, tl, "top"), tl, "top");
    auto [js, jl] = need("join");
    for (long long v : detail::parse_int_list(js, jl, "join")) f.join.push_back(detail::to_elem(v, jl, "join"));
    if (f.join.size() != static_cast<std::size_t>(n * n)) throw spec_error(jl, "join needs n*n entries");
    if (auto d = take("delta")) {
      for (long long v : detail::parse_int_list(d->first, d->second, "delta"))
        f.delta.push_back(detail::to_elem(v, d->second, "delta"));
      if (f.delta.size() != static_cast<std::size_t>(n * n)) throw spec_error(d->second, "delta needs n*n entries");
    }
    if (auto t = take("T")) f.T = detail::parse_pairs(t->first, t->second, "T");
  } else {
    throw spec_error(kind->second, "unknown kind '" + f.kind + "'");
  }
  if (!kv.empty()) {
    auto it = kv.begin();
    throw spec_error(it->second.second, "unknown key '" + it->first + "' for kind=" + f.kind);
  }
  return f;
}

/// Canonical text; parse_spec(print_spec(f)) == f.
inline std::string print_spec(const SpecFile& f) {
  std::string s = "kind=" + f.kind + "\n";
  if (!f.name.empty()) s += "name=" + f.name + "\n";
  auto pairs = [](const std::vector<std::pair<Elem, Elem>>& v) {
    std::string r;
    for (std::size_t i = 0; i < v.size(); ++i) r += (i ? "," : "") + std::to_string(v[i].first) + ":" + std::to_string(v[i].second);
    return r;
  };
  if (f.kind == "multicube") s += "sizes=" + detail::join_list(f.sizes) + "\n";
  if (f.kind == "signed") s += "ground=" + std::to_string(f.ground) + "\n";
  if (f.kind == "interval") s += "atoms=" + std::to_string(f.atoms) + "\n";
  if (f.kind == "presented") {
    s += "atoms=" + std::to_string(f.atoms) + "\n";
    s += "elements=" + detail::join_list(f.elements) + "\n";
    if (!f.T.empty()) s += "T=" + pairs(f.T) + "\n";
  }
  if (f.kind == "product") s += "factors=" + detail::join_list(f.factors) + "\n";
  if (f.kind == "table") {
    s += "n=" + std::to_string(f.n) + "\ntop=" + std::to_string(f.top) + "\n";
    s += "join=" + detail::join_list(f.join) + "\n";
    if (!f.delta.empty()) s += "delta=" + detail::join_list(f.delta) + "\n";
    if (!f.T.empty()) s += "T=" + pairs(f.T) + "\n";
  }
  if (!f.suites.empty()) s += "suites=" + detail::join_list(f.suites) + "\n";
  return s;
}

inline SpecFile presented_to_spec(const PresentedSpec& P, std::string name = {}) {
  SpecFile f;
  f.kind = "presented";
  f.name = std::move(name);
  f.atoms = P.atoms;
  f.elements = P.elements;
  for (auto [x, y] : P.T) f.T.emplace_back(x, y);
  return f;
}

/// A constructed algebra plus whatever extra structure its kind carries.
struct Workbench {
  SpecFile spec;
  std::string description;
  FinAlgebra base;
  std::vector<std::string> labels;
  std::optional<std::vector<Elem>> T;     // involution, when the kind defines one
  std::optional<CubicAlg> geometric;      // total Delta given by the model
  std::shared_ptr<const Multicube> mc;    // multicube kind
  bool claims_cubic = false;              // the model is a cubic implication algebra

  std::size_t size() const { return base.size(); }

  /// Symmetric view; throws algebra_error when T is not a valid automorphism.
  SymAlgebra sym() const {
    std::vector<Elem> t = T ? *T : std::vector<Elem>();
    if (!T) {
      t.resize(size());
      for (Elem i = 0; i < size(); ++i) t[i] = i;
    }
    return SymAlgebra(base, std::move(t), labels);
  }

  /// Delta restricted to comparable pairs: geometric when present, else
  /// derived from T. nullopt when neither is available.
  std::optional<DeltaTable> delta_table() const {
    if (geometric) return delta_table_from(*geometric);
    SymAlgebra S = sym();
    if (!is_locally_symmetric(S).passed) return std::nullopt;
    return derived_delta(S);
  }

  /// Total Delta for the cubic suites: geometric, else the derived one totalized.
  std::optional<CubicAlg> cubic() const {
    if (geometric) return geometric;
    auto D = delta_table();
    if (!D) return std::nullopt;
    return CubicAlg::from_partial(base, [&](Elem y, Elem x) { return *D->at(y, x); });
  }

  FixContext fix_context() const {
    auto D = delta_table();
    if (!D) throw algebra_error("no Delta-operator: not locally symmetric");
    return FixContext(sym(), std::move(*D));
  }

  /// Element by exact label, or by index written as #k.
  Elem find(const std::string& ref) const {
    if (!ref.empty() && ref[0] == '#') {
      long long k = detail::parse_int(ref.substr(1), 0, "element index");
      if (k < 0 || static_cast<std::size_t>(k) >= size()) throw algebra_error("element index out of range: " + ref);
      return static_cast<Elem>(k);
    }
    for (Elem i = 0; i < size(); ++i)
      if (labels[i] == ref) return i;
    throw algebra_error("no element labelled '" + ref + "'");
  }
};

namespace detail {

/// One product factor: A2 | A3 | A4 | S<n> | I<k> | M<n1>.<n2>...
inline SymAlgebra factor_algebra(const std::string& tok, bool& cubic) {
  if (tok == "A2" || tok == "A4") {
    cubic = false;
    return builtin(tok);
  }
  if (tok == "A3") return builtin(tok);
  if (tok.size() >= 2 && (tok[0] == 'S' || tok[0] == 'I')) {
    long long k = parse_int(tok.substr(1), 0, "factor " + tok);
    if (k < 0 || k > 5) throw spec_error(0, "factor size must be in [0, 5]: " + tok);
    if (tok[0] == 'S') {
      auto m = signed_algebra(static_cast<int>(k));
      return sym_from_cubic(m.alg, m.labels());
    }
    auto m = interval_algebra(static_cast<int>(k));
    return sym_from_cubic(m.alg, m.labels());
  }
  if (tok.size() >= 2 && tok[0] == 'M') {
    cubic = false;
    std::vector<int> n;
    for (const auto& p : split(tok.substr(1), '.')) {
      long long v = parse_int(p, 0, "factor " + tok);
      if (v < 0) throw spec_error(0, "n_i must be ≥ 0");
      if (v > kMaxMcRadius) throw spec_error(0, "n_i capped at 4");
      n.push_back(static_cast<int>(v));
    }
    return sym_from_multicube(Multicube(McSpec(n)));
  }
  throw spec_error(0, "unknown factor '" + tok + "'");
}

}  // namespace detail

inline Workbench build(const SpecFile& f) {
  Workbench w;
  w.spec = f;
  if (f.kind == "multicube") {
    auto P = std::make_shared<const Multicube>(McSpec(f.sizes));
    w.base = P->order();
    w.labels = P->labels();
    w.T = P->T();
    w.geometric = P->reflection();
    w.mc = P;
    w.description = "multicube n=(" + detail::join_list(f.sizes) + ")";
  } else if (f.kind == "signed") {
    auto m = signed_algebra(f.ground);
    w.base = m.alg.base();
    w.labels = m.labels();
    w.geometric = m.alg;
    w.T = sym_from_cubic(m.alg).T_table();
    w.claims_cubic = true;
    w.description = "S(X) with |X|=" + std::to_string(f.ground);
  } else if (f.kind == "interval") {
    auto m = interval_algebra(f.atoms);
    w.base = m.alg.base();
    w.labels = m.labels();
    w.geometric = m.alg;
    w.T = sym_from_cubic(m.alg).T_table();
    w.claims_cubic = true;
    w.description = "I(B) with " + std::to_string(f.atoms) + " atoms";
  } else if (f.kind == "presented") {
    PresentedSpec P{f.atoms, f.elements, {}};
    for (auto [x, y] : f.T) P.T.emplace_back(static_cast<Mask>(x), static_cast<Mask>(y));
    SymAlgebra S = presented_algebra(P);
    w.base = S.base();
    w.labels = S.labels();
    w.T = S.T_table();
    w.description = "presented family on " + std::to_string(f.atoms) + " atoms";
  } else if (f.kind == "product") {
    bool cubic = true;
    SymAlgebra S = detail::factor_algebra(f.factors[0], cubic);
    for (std::size_t i = 1; i < f.factors.size(); ++i) {
      S = sym_product(S, detail::factor_algebra(f.factors[i], cubic));
      if (S.size() > kMaxElements) throw algebra_error("product exceeds the element limit");
    }
    w.base = S.base();
    w.labels = S.labels();
    w.T = S.T_table();
    w.claims_cubic = cubic;
    w.description = "product " + detail::join_list(f.factors);
  } else if (f.kind == "table") {
    for (Elem v : f.join)
      if (v >= static_cast<Elem>(f.n)) throw algebra_error("join entry out of range");
    w.base = FinAlgebra(static_cast<std::size_t>(f.n), f.join, f.top);
    for (Elem i = 0; i < static_cast<Elem>(f.n); ++i) w.labels.push_back(std::to_string(i));
    if (!f.delta.empty()) {
      w.geometric = CubicAlg(w.base, f.delta);
      w.claims_cubic = true;
    }
    if (!f.T.empty()) {
      std::vector<Elem> t(static_cast<std::size_t>(f.n));
      for (Elem i = 0; i < t.size(); ++i) t[i] = i;
      for (auto [x, y] : f.T) {
        if (x >= t.size() || y >= t.size()) throw algebra_error("T entry out of range");
        t[x] = y;
        t[y] = x;
      }
      w.T = std::move(t);
    } else if (w.geometric) {
      std::vector<Elem> t(static_cast<std::size_t>(f.n));
      for (Elem i = 0; i < t.size(); ++i) t[i] = w.geometric->delta(f.top, i);
      w.T = std::move(t);
    }
    w.description = "explicit table on " + std::to_string(f.n) + " elements";
  } else {
    throw spec_error(0, "unknown kind '" + f.kind + "'");
  }
  if (!f.name.empty()) w.description = f.name;
  return w;
}

// ---- suites ---------------------------------------------------------------

struct SuiteDef {
  std::string name;
  std::function<bool(const Workbench&)> in_all;
  std::function<CheckReport(const Workbench&, const SuiteOptions&)> run;
};

namespace detail {

inline bool is_kind(const Workbench& w, std::initializer_list<const char*> kinds) {
  for (const char* k : kinds)
    if (w.spec.kind == k) return true;
  return false;
}

inline CheckReport need_mc(const Workbench& w, const std::string& suite,
                           const std::function<CheckReport(const Multicube&)>& f) {
  if (!w.mc) return CheckReport::not_applicable(suite, "needs kind=multicube");
  return f(*w.mc);
}

inline CheckReport need_cubic(const Workbench& w, const std::string& suite,
                              const std::function<CheckReport(const CubicAlg&)>& f) {
  auto C = w.cubic();
  if (!C) return CheckReport::not_applicable(suite, "no Delta available");
  return f(*C);
}

inline CheckReport need_sym(const Workbench& w, const std::string& suite,
                            const std::function<CheckReport(const SymAlgebra&)>& f) {
  std::optional<SymAlgebra> S;
  try {
    S = w.sym();
  } catch (const algebra_error& e) {
    return CheckReport::not_applicable(suite, e.what());
  }
  return f(*S);
}

inline CheckReport need_fix(const Workbench& w, const std::string& suite,
                            const std::function<CheckReport(const FixContext&)>& f) {
  std::optional<FixContext> C;
  try {
    C.emplace(w.fix_context());
  } catch (const algebra_error& e) {
    return CheckReport::not_applicable(suite, e.what());
  }
  return f(*C);
}

inline CheckReport universal_all(const SymAlgebra& S, const SuiteOptions& o) {
  EnvelopeResult R = envelope(make_presented(S));
  std::vector<CheckReport> parts;
  for (const char* m : {"A2", "A3", "A4"}) {
    CheckReport r = check_universal_property(S, R, builtin(m), kDefaultMorphismBudget, o);
    r.suite = std::string("universal-property[") + m + "]";
    parts.push_back(r);
  }
  CheckReport out = merge_reports("universal-property", parts);
  for (const auto& p : parts) out.note += (out.note.empty() ? "" : "; ") + p.suite + " " + p.note;
  return out;
}

}  // namespace detail

inline const std::vector<SuiteDef>& suites() {
  using detail::is_kind;
  using W = const Workbench&;
  using O = const SuiteOptions&;
  auto always = [](W) { return true; };
  auto mc = [](W w) { return static_cast<bool>(w.mc); };
  auto cubic = [](W w) { return w.claims_cubic; };
  auto symmetric = [](W w) { return is_kind(w, {"multicube", "signed", "interval", "product"}); };
  static const std::vector<SuiteDef> defs = {
      {"semilattice", always, [](W w, O o) { return check_semilattice(w.base, o); }},
      {"implication", always, [](W w, O o) { return check_implication_axioms(w.base, o); }},
      {"cubic", cubic, [](W w, O o) { return detail::need_cubic(w, "cubic", [&](const CubicAlg& C) { return check_cubic_axioms(C, o); }); }},
      {"mr", cubic, [](W w, O o) { return detail::need_cubic(w, "mr", [&](const CubicAlg& C) { return check_mr(C, o); }); }},
      {"mr-caret", cubic,
       [](W w, O o) { return detail::need_cubic(w, "mr-caret", [&](const CubicAlg& C) { return check_mr_caret_equivalence(C, o); }); }},
      {"localization", cubic,
       [](W w, O o) { return detail::need_cubic(w, "localization", [&](const CubicAlg& C) { return check_localization(C, o); }); }},
      {"signed-interval-iso", [](W w) { return is_kind(w, {"signed", "interval"}); },
       [](W w, O o) {
         if (!is_kind(w, {"signed", "interval"})) return CheckReport::not_applicable("signed-interval-iso", "needs kind=signed or kind=interval");
         return check_signed_interval_iso(w.spec.kind == "signed" ? w.spec.ground : w.spec.atoms, o);
       }},
      {"basicGD", mc, [](W w, O o) { return detail::need_mc(w, "basicGD", [&](const Multicube& P) { return check_basicGD(P, o); }); }},
      {"compGD", mc, [](W w, O o) { return detail::need_mc(w, "compGD", [&](const Multicube& P) { return check_compGD(P, o); }); }},
      {"weak-distributivity", mc,
       [](W w, O o) { return detail::need_mc(w, "weak-distributivity", [&](const Multicube& P) { return check_weak_distributivity(P, o); }); }},
      {"delta-complement", mc,
       [](W w, O o) { return detail::need_mc(w, "delta-complement", [&](const Multicube& P) { return check_delta_complement_link(P, o); }); }},
      {"test-lemma", mc, [](W w, O o) { return detail::need_mc(w, "test-lemma", [&](const Multicube& P) { return check_test_lemma(P, o); }); }},
      {"nowhere-invariance-mc", mc,
       [](W w, O o) { return detail::need_mc(w, "nowhere-invariance-mc", [&](const Multicube& P) { return check_nowhere_invariance_mc(P, o); }); }},
      {"decompose", mc, [](W w, O o) { return detail::need_mc(w, "decompose", [&](const Multicube& P) { return check_decompose(P, o); }); }},
      {"nucleus-mc", mc,
       [](W w, O o) {
         return detail::need_mc(w, "nucleus-mc", [&](const Multicube& P) {
           CheckReport r = check_cubic_axioms(mc_nucleus(P).alg, o);
           r.suite = "nucleus-mc";
           return r;
         });
       }},
      {"multicube-symmetry", mc,
       [](W w, O o) { return detail::need_mc(w, "multicube-symmetry", [&](const Multicube& P) { return check_multicube_symmetry(P, o); }); }},
      {"A2basis", [](W) { return false; },
       [](W w, O o) { return detail::need_sym(w, "A2basis", [&](const SymAlgebra& S) { return eval_identity(S, Identity::A2basis, o); }); }},
      {"A3basis", [](W) { return false; },
       [](W w, O o) { return detail::need_sym(w, "A3basis", [&](const SymAlgebra& S) { return eval_identity(S, Identity::A3basis, o); }); }},
      {"A23basis", symmetric,
       [](W w, O o) { return detail::need_sym(w, "A23basis", [&](const SymAlgebra& S) { return eval_identity(S, Identity::A23basis, o); }); }},
      {"locally-symmetric", symmetric,
       [](W w, O o) { return detail::need_sym(w, "locally-symmetric", [&](const SymAlgebra& S) { return is_locally_symmetric(S, o); }); }},
      {"delta-operator", symmetric,
       [](W w, O o) {
         return detail::need_sym(w, "delta-operator", [&](const SymAlgebra& S) {
           auto D = w.delta_table();
           if (!D) return CheckReport::not_applicable("delta-operator", "not locally symmetric");
           return check_delta_operator(S, *D, o);
         });
       }},
      {"delta-lemmas", symmetric,
       [](W w, O o) { return detail::need_sym(w, "delta-lemmas", [&](const SymAlgebra& S) { return check_delta_lemmas(S, o); }); }},
      {"fixpoints", symmetric,
       [](W w, O o) { return detail::need_fix(w, "fixpoints", [&](const FixContext& C) { return check_fixpoint_lemmas(C, o); }); }},
      {"alpha-iso", symmetric,
       [](W w, O o) { return detail::need_fix(w, "alpha-iso", [&](const FixContext& C) { return check_alpha_iso(C, o); }); }},
      {"nowhere-invariance", symmetric,
       [](W w, O o) { return detail::need_fix(w, "nowhere-invariance", [&](const FixContext& C) { return check_nowhere_invariance(C, o); }); }},
      {"nucleus", symmetric,
       [](W w, O o) { return detail::need_fix(w, "nucleus", [&](const FixContext& C) { return check_nucleus(C, o); }); }},
      {"localizations", symmetric,
       [](W w, O o) { return detail::need_fix(w, "localizations", [&](const FixContext& C) { return check_localizations(C, o); }); }},
      {"psi-iso", symmetric,
       [](W w, O o) { return detail::need_fix(w, "psi-iso", [&](const FixContext& C) { return check_psi(C, o); }); }},
      {"global-embed", symmetric,
       [](W w, O o) { return detail::need_fix(w, "global-embed", [&](const FixContext& C) { return check_global_embed(C, o); }); }},
      {"phi-one-interval", [](W) { return false; },
       [](W w, O o) {
         return detail::need_fix(w, "phi-one-interval", [&](const FixContext& C) {
           auto a = generating_element(C);
           if (!a) return CheckReport::not_applicable("phi-one-interval", "no element a with L*_a = M");
           return check_phi_one_interval(C, *a, o);
         });
       }},
      {"envelope", [](W w) { return is_kind(w, {"presented"}); },
       [](W w, O o) {
         return detail::need_sym(w, "envelope", [&](const SymAlgebra& S) {
           try {
             return check_envelope(S, envelope(make_presented(S)), o);
           } catch (const algebra_error& e) {
             return CheckReport::not_applicable("envelope", e.what());
           }
         });
       }},
      {"universal-property", [](W w) { return is_kind(w, {"presented"}); },
       [](W w, O o) {
         return detail::need_sym(w, "universal-property", [&](const SymAlgebra& S) {
           try {
             return detail::universal_all(S, o);
           } catch (const algebra_error& e) {
             return CheckReport::not_applicable("universal-property", e.what());
           }
         });
       }},
  };
  return defs;
}

inline const SuiteDef& find_suite(const std::string& name) {
  for (const auto& d : suites())
    if (d.name == name) return d;
  throw algebra_error("unknown suite '" + name + "'");
}

/// One suite run, ready for printing.
struct SuiteRun {
  CheckReport report;
  std::string algebra;
  std::size_t size = 0;
  double elapsed_ms = 0;
  std::vector<std::string> witness_labels;
};

inline SuiteRun run_one(const Workbench& w, const SuiteDef& def, const SuiteOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  SuiteRun r;
  r.report = def.run(w, opts);
  r.report.suite = def.name;
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  r.algebra = w.description;
  r.size = w.size();
  if (r.report.witness)
    for (Elem e : r.report.witness->elems) r.witness_labels.push_back(e < w.labels.size() ? w.labels[e] : "#" + std::to_string(e));
  return r;
}

/// Suites named on the command line, or in the spec, or every suite that
/// applies to the kind for "all".
inline std::vector<const SuiteDef*> select_suites(const Workbench& w, const std::string& name) {
  std::vector<const SuiteDef*> out;
  if (name == "all") {
    for (const auto& d : suites())
      if (d.in_all(w)) out.push_back(&d);
  } else {
    for (const auto& n : detail::split(name, ',')) out.push_back(&find_suite(n));
  }
  return out;
}

enum ExitCode { kPass = 0, kViolation = 1, kInputError = 2 };

/// 1 on any violation; otherwise 2 when a single requested suite was not
/// applicable; otherwise 0. In "all" mode not-applicable suites are skipped.
inline int exit_code(const std::vector<SuiteRun>& runs, bool all_mode) {
  bool na = false;
  for (const auto& r : runs) {
    if (!r.report.applicable) {
      na = true;
      continue;
    }
    if (!r.report.passed) return kViolation;
  }
  return (na && !all_mode) ? kInputError : kPass;
}

inline std::string status_word(const CheckReport& r) {
  return !r.applicable ? "N/A" : r.passed ? "PASS" : "FAIL";
}

inline std::string format_run(const SuiteRun& r) {
  std::string s = r.report.suite + ": " + status_word(r.report);
  if (r.report.witness) {
    s += " rule=" + r.report.witness->rule;
    if (!r.witness_labels.empty()) {
      s += " witness=(";
      for (std::size_t i = 0; i < r.witness_labels.size(); ++i) s += (i ? ", " : "") + r.witness_labels[i];
      s += ")";
    }
  }
  if (r.report.sampled) s += " sampled seed=" + std::to_string(r.report.seed);
  if (!r.report.note.empty()) s += " [" + r.report.note + "]";
  return s;
}

// ---- DOT ------------------------------------------------------------------

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

/// Hasse diagram, bottom to top; T as dashed edges between distinct orbit
/// members; T-fixed elements drawn with peripheries=2.
inline std::string export_dot(const Workbench& w) {
  std::ostringstream o;
  o << "graph mcalg {\n  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n";
  for (Elem i = 0; i < w.size(); ++i) {
    o << "  n" << i << " [label=\"" << dot_escape(w.labels[i]) << "\"";
    if (w.T && (*w.T)[i] == i) o << ", peripheries=2";
    o << "];\n";
  }
  for (auto [lo, hi] : cover_edges(w.base)) o << "  n" << lo << " -- n" << hi << ";\n";
  if (w.T)
    for (Elem i = 0; i < w.size(); ++i)
      if (i < (*w.T)[i]) o << "  n" << i << " -- n" << (*w.T)[i] << " [style=dashed, constraint=false];\n";
  o << "}\n";
  return o.str();
}

}  // namespace mcalg::cli

#endif  // MCALG_CLI_HPP
