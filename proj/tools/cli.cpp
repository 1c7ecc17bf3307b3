#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "hopf/errors.hpp"
#include "hopf/graph_algebra.hpp"
#include "hopf/mqsym.hpp"
#include "hopf/nsym.hpp"
#include "hopf/poly.hpp"
#include "hopf/psym.hpp"
#include "hopf/qsym.hpp"
#include "hopf/shuffle_algebra.hpp"
#include "hopf/ssym.hpp"

namespace hopf::cli {

namespace {

using json = nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Bound {
  int antipode;
  int verify;
};

const std::map<std::string, Bound, std::less<>>& bounds() {
  static const std::map<std::string, Bound, std::less<>> b = {
      {"poly", {20, 20}},  {"shuffle", {8, 8}}, {"qsym-m", {8, 8}},   {"qsym-f", {8, 8}},
      {"mqsym", {6, 6}},   {"graph", {6, 5}},   {"nsym-h", {8, 8}},   {"nsym-imm", {8, 8}},
      {"ssym", {7, 6}},    {"psym", {7, 6}},    {"poly-osp", {7, 7}}, {"graph-orientation", {6, 6}},
      {"ssym-singleton", {6, 6}}, {"ssym-pair2", {6, 6}}, {"psym-hook", {6, 6}},
  };
  return b;
}

// The environment may only lower a bound.
int limit(std::string_view name, bool verify) {
  auto it = bounds().find(name);
  if (it == bounds().end()) throw UsageError("unknown name: " + std::string(name));
  int value = verify ? it->second.verify : it->second.antipode;
  if (const char* env = std::getenv("ANTIPODE_MAX_SIZE")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0 && v < value) value = static_cast<int>(v);
  }
  return value;
}

void require_size(std::string_view name, std::size_t size, bool verify, std::string_view what) {
  const int lim = limit(name, verify);
  if (size > static_cast<std::size_t>(lim))
    throw SizeBoundError(std::string(what) + " " + std::to_string(size) + " exceeds the " + std::string(name) +
                         " bound of " + std::to_string(lim));
}

json coeff_json(const Scalar& c) {
  if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
    return static_cast<long long>(c);
  return c.str();
}

template <class K, class Fmt>
json terms_json(const LinComb<K>& a, Fmt&& fmt) {
  json arr = json::array();
  for (const auto& [k, c] : a) arr.push_back({{"key", fmt(k)}, {"coeff", coeff_json(c)}});
  return arr;
}

// One antipode evaluation, already rendered.
struct Outcome {
  json terms = json::array();
  std::string text;
  std::optional<std::string> closed_text;
  json closed_terms;
  std::optional<bool> agree;
};

template <class K, class Fmt>
Outcome outcome(const LinComb<K>& value, Fmt&& fmt) {
  Outcome o;
  o.terms = terms_json(value, fmt);
  o.text = render(value, fmt);
  return o;
}

template <class K, class Fmt>
void attach_closed(Outcome& o, const LinComb<K>& closed, Fmt&& fmt, bool agree) {
  o.closed_text = render(closed, fmt);
  o.closed_terms = terms_json(closed, fmt);
  o.agree = agree;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

// Bare keys follow the plain input grammars, so "1" is the composition (1)
// rather than the unit that rendered sums use.
bool bare_key(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return (c >= '0' && c <= '9') || c == ',' || c == '/'; });
}

template <class H>
Composition composition_key(const H& h, const std::string& key) {
  return bare_key(key) ? parse_composition(key) : h.parse(key);
}

bool is_hook(const Composition& a) {
  if (a.empty()) return false;
  for (std::size_t i = 1; i < a.length(); ++i)
    if (a[i] != 1) return false;
  return true;
}

std::optional<LinComb<Permutation>> ssym_closed(const Permutation& p) {
  const int n = p.n();
  if (n == 0) return std::nullopt;
  if (p == Permutation::identity(n)) return ssym_antipode_identity(n);
  if (p == Permutation(delta(n, 1).letters())) return ssym_antipode_reverse(n);
  for (int k = 1; k < n; ++k) {
    if (p == Permutation(concat(delta(k, 1), eta(k + 1, n)).letters())) return ssym_antipode_hookperm(k, n);
    if (p == Permutation(concat(eta(1, k), delta(n, k + 1)).letters())) return ssym_antipode_hookperm_corollary(k, n);
  }
  return std::nullopt;
}

// Proven cases of the hook formula: one row, one column, and (n-1,1).
std::optional<LinComb<Tableau>> psym_closed(const Tableau& t) {
  if (t.empty()) return std::nullopt;
  const auto lambda = t.shape();
  const int n = t.size();
  const bool row = lambda.size() == 1;
  const bool column = static_cast<int>(lambda.size()) == n;
  const bool near_row = n >= 3 && lambda == std::vector<int>{n - 1, 1};
  if (!(row || column || near_row) || t != column_superstandard(lambda)) return std::nullopt;
  return psym_hook_prediction(lambda);
}

struct Options {
  std::string algebra;
  std::string key;
  std::optional<int> max_degree;
  std::optional<int> max_size;
  std::optional<int> n;
  std::string graph;
  std::optional<std::string> flat;
  std::string format = "text";
};

Outcome antipode_outcome(const Options& o) {
  const std::string& alg = o.algebra;
  const std::string& key = o.key;
  if (alg == "poly") {
    PolyAlgebra h;
    PolyKey k = all_digits(key) ? PolyKey{std::stoi(key.substr(0, 6))} : h.parse(key);
    require_size(alg, h.degree(k), false, "degree");
    auto fmt = [&](const PolyKey& x) { return h.format(x); };
    auto t = takeuchi_antipode(h, k);
    auto c = h.antipode_closed(k);
    auto out = outcome(t, fmt);
    attach_closed(out, c, fmt, t == c);
    return out;
  }
  if (alg == "shuffle") {
    ShuffleAlgebra h;
    Word k = h.parse(key);
    require_size(alg, h.degree(k), false, "length");
    auto fmt = [&](const Word& x) { return h.format(x); };
    auto t = takeuchi_antipode(h, k);
    auto c = h.antipode_closed(k);
    auto out = outcome(t, fmt);
    attach_closed(out, c, fmt, t == c);
    return out;
  }
  if (alg == "qsym-m" || alg == "qsym-f") {
    auto run_one = [&](const auto& h) {
      Composition k = composition_key(h, key);
      require_size(alg, h.degree(k), false, "size");
      auto fmt = [&](const Composition& x) { return h.format(x); };
      auto t = takeuchi_antipode(h, k);
      auto c = h.antipode_closed(k);
      auto out = outcome(t, fmt);
      attach_closed(out, c, fmt, t == c);
      return out;
    };
    return alg == "qsym-m" ? run_one(QSymMonomial{}) : run_one(QSymFundamental{});
  }
  if (alg == "mqsym") {
    if (!o.max_degree) throw UsageError("mqsym needs --max-degree");
    if (*o.max_degree < 0) throw UsageError("--max-degree must be nonnegative");
    require_size(alg, static_cast<std::size_t>(*o.max_degree), false, "degree cap");
    MQSym h(static_cast<std::size_t>(*o.max_degree));
    Composition k = composition_key(h, key);
    if (h.degree(k) > static_cast<std::size_t>(*o.max_degree))
      throw UsageError("composition size exceeds --max-degree");
    auto fmt = [&](const Composition& x) { return h.format(x); };
    auto t = takeuchi_antipode(h, k);
    auto c = h.antipode_closed(k);
    auto out = outcome(t, fmt);
    attach_closed(out, c, fmt, t == c);
    return out;
  }
  if (alg == "graph") {
    GraphAlgebra h;
    const Graph g = parse_graph(key.rfind("G[", 0) == 0 ? key.substr(2, key.size() - 3) : key);
    require_size(alg, static_cast<std::size_t>(g.n()), false, "vertex count");
    CanonGraph k = canonical_form(g);
    auto fmt = [&](const CanonGraph& x) { return h.format(x); };
    auto t = takeuchi_antipode(h, k);
    auto c = h.antipode_closed(k);
    auto out = outcome(t, fmt);
    attach_closed(out, c, fmt, t == c);
    return out;
  }
  if (alg == "nsym-h") {
    NSymH h;
    Composition k = composition_key(h, key);
    require_size(alg, h.degree(k), false, "size");
    auto t = takeuchi_antipode(h, k);
    auto c = nsym_s_of_h_closed(k);
    auto out = outcome(t, [&](const Composition& x) { return h.format(x); });
    attach_closed(out, c, format_immaculate, h_to_immaculate(t) == c);
    return out;
  }
  if (alg == "nsym-imm") {
    NSymH h;
    Composition k = bare_key(key) ? parse_composition(key) : parse_immaculate(key);
    require_size(alg, h.degree(k), false, "size");
    TakeuchiEvaluator<NSymH> ev(h);
    auto t = nsym_antipode_immaculate(ev, k);
    auto out = outcome(t, format_immaculate);
    if (is_hook(k)) {
      auto c = nsym_antipode_hook(k[0], static_cast<int>(k.length()) - 1);
      attach_closed(out, c, format_immaculate, t == c);
    } else if (k.length() == 2) {
      auto c = nsym_antipode_tworow(k[0], k[1]);
      attach_closed(out, c, format_immaculate, t == c);
    }
    return out;
  }
  if (alg == "ssym") {
    SSym h;
    Permutation k = h.parse(key);
    require_size(alg, h.degree(k), false, "size");
    auto fmt = [&](const Permutation& x) { return h.format(x); };
    auto t = takeuchi_antipode(h, k);
    auto out = outcome(t, fmt);
    if (auto c = ssym_closed(k)) attach_closed(out, *c, fmt, t == *c);
    return out;
  }
  if (alg == "psym") {
    PSym h;
    Tableau k = bare_key(key) ? h.parse(std::string("P[") + key + "]") : h.parse(key);
    require_size(alg, h.degree(k), false, "size");
    auto fmt = [&](const Tableau& x) { return h.format(x); };
    SSym s;
    TakeuchiEvaluator<SSym> ev(s);
    auto t = psym_antipode(ev, k);
    auto out = outcome(t, fmt);
    if (auto c = psym_closed(k)) attach_closed(out, *c, fmt, t == *c);
    return out;
  }
  throw UsageError("unknown algebra: " + alg);
}

// Per-key verification record.
struct Check {
  std::string key;
  std::optional<bool> agree;
  bool axiom = true;
  std::string note;
  bool ok() const { return axiom && agree.value_or(true); }
};

template <class H, class Keys, class Closed>
std::vector<Check> verify_instance(const H& h, const Keys& keys, Closed&& closed) {
  std::vector<Check> out;
  TakeuchiEvaluator<H> ev(h);
  for (const auto& k : keys) {
    Check c;
    c.key = h.format(k);
    auto t = ev.antipode(k);
    if (auto expected = closed(k)) c.agree = t == *expected;
    c.axiom = antipode_axiom_check(h, k, [&](const auto& x) { return ev.antipode(x); });
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Check> verify_checks(const Options& o, int n) {
  const std::string& alg = o.algebra;
  if (alg == "poly") {
    PolyAlgebra h;
    std::vector<PolyKey> keys;
    for (int i = 0; i <= n; ++i) keys.push_back({i});
    return verify_instance(h, keys, [&](const PolyKey& k) { return std::optional(h.antipode_closed(k)); });
  }
  if (alg == "shuffle") {
    ShuffleAlgebra h;
    std::vector<Word> keys = words_up_to(2, n);
    for (int len = 3; len <= std::min(n, 5); ++len)
      for (const auto& p : permutations_of(len)) keys.push_back(p.as_word());
    return verify_instance(h, keys, [&](const Word& k) { return std::optional(h.antipode_closed(k)); });
  }
  if (alg == "qsym-m") {
    QSymMonomial h;
    return verify_instance(h, compositions_up_to(n),
                           [&](const Composition& k) { return std::optional(h.antipode_closed(k)); });
  }
  if (alg == "qsym-f") {
    QSymFundamental h;
    QSymMonomial m;
    auto checks = verify_instance(h, compositions_up_to(n),
                                  [&](const Composition& k) { return std::optional(h.antipode_closed(k)); });
    // The change of basis must intertwine the two antipodes.
    TakeuchiEvaluator<QSymMonomial> ev(m);
    auto comps = compositions_up_to(n);
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const auto lhs = ev.antipode(fundamental_to_monomial(LinComb<Composition>::term(comps[i])));
      const auto rhs = fundamental_to_monomial(h.antipode_closed(comps[i]));
      if (lhs != rhs) {
        checks[i].agree = false;
        checks[i].note = "change of basis does not intertwine";
      }
    }
    return checks;
  }
  if (alg == "mqsym") {
    std::vector<Check> out;
    for (int size = 1; size <= n; ++size) {
      const int cap = o.max_degree ? *o.max_degree : size + 2;
      if (cap < size) throw UsageError("--max-degree is below the composition size");
      require_size(alg, static_cast<std::size_t>(cap), true, "degree cap");
      MQSym h(static_cast<std::size_t>(cap));
      auto part = verify_instance(h, compositions_of(size),
                                  [&](const Composition& k) { return std::optional(h.antipode_closed(k)); });
      for (auto& c : part) c.note = "cap=" + std::to_string(cap);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  if (alg == "graph") {
    GraphAlgebra h;
    std::vector<CanonGraph> keys;
    for (int v = 0; v <= n; ++v)
      for (const auto& g : all_graphs(v)) keys.push_back(g);
    return verify_instance(h, keys, [&](const CanonGraph& k) { return std::optional(h.antipode_closed(k)); });
  }
  if (alg == "nsym-h") {
    NSymH h;
    std::vector<Check> out;
    TakeuchiEvaluator<NSymH> ev(h);
    for (const auto& k : compositions_up_to(n)) {
      Check c;
      c.key = h.format(k);
      c.agree = h_to_immaculate(ev.antipode(k)) == nsym_s_of_h_closed(k);
      c.axiom = antipode_axiom_check(h, k, [&](const auto& x) { return ev.antipode(x); });
      out.push_back(std::move(c));
    }
    return out;
  }
  if (alg == "nsym-imm") {
    NSymH h;
    std::vector<Check> out;
    TakeuchiEvaluator<NSymH> ev(h);
    auto record = [&](const Composition& k, const LinComb<Composition>& expected, const std::string& note) {
      Check c;
      c.key = format_immaculate(k);
      c.note = note;
      c.agree = nsym_antipode_immaculate(ev, k) == expected;
      for (const auto& [hk, coeff] : immaculate_to_h(k))
        c.axiom = c.axiom && antipode_axiom_check(h, hk, [&](const auto& x) { return ev.antipode(x); });
      out.push_back(std::move(c));
    };
    for (int size = 1; size <= n; ++size)
      for (int k = 0; k < size; ++k) {
        std::vector<int> parts{size - k};
        parts.insert(parts.end(), k, 1);
        record(Composition(parts), nsym_antipode_hook(size - k, k), "hook");
      }
    for (int size = 2; size <= n; ++size)
      for (int m = 1; m < size; ++m) record(Composition{m, size - m}, nsym_antipode_tworow(m, size - m), "two-row");
    return out;
  }
  if (alg == "ssym") {
    SSym h;
    std::vector<Permutation> keys;
    for (int len = 0; len <= n; ++len)
      for (const auto& p : permutations_of(len)) keys.push_back(p);
    return verify_instance(h, keys, ssym_closed);
  }
  if (alg == "psym") {
    PSym h;
    SSym s;
    TakeuchiEvaluator<SSym> ev(s);
    std::vector<Check> out;
    auto antipode = [&](const Tableau& t) {
      if (t.empty()) return LinComb<Tableau>::term(t);
      return psym_antipode(ev, t);
    };
    for (int size = 0; size <= n; ++size)
      for (const auto& t : size == 0 ? std::vector<Tableau>{Tableau{}} : standard_tableaux(size)) {
        Check c;
        c.key = h.format(t);
        try {
          auto value = antipode(t);
          if (auto expected = psym_closed(t)) c.agree = value == *expected;
          c.axiom = antipode_axiom_check(h, t, antipode);
        } catch (const std::runtime_error& e) {
          c.agree = false;
          c.note = e.what();
        }
        out.push_back(std::move(c));
      }
    return out;
  }
  throw UsageError("unknown algebra: " + alg);
}

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

json base_report(const std::string& command, const std::string& algebra, json inputs) {
  return {{"command", command}, {"algebra", algebra}, {"inputs", std::move(inputs)}, {"terms", json::array()}};
}

json inputs_of(const Options& o) {
  json in = json::object();
  if (!o.key.empty()) in["key"] = o.key;
  if (o.max_degree) in["max_degree"] = *o.max_degree;
  if (o.max_size) in["max_size"] = *o.max_size;
  if (o.n) in["n"] = *o.n;
  if (!o.graph.empty()) in["graph"] = o.graph;
  if (o.flat) in["flat"] = *o.flat;
  return in;
}

int cmd_antipode(const Options& o, std::ostream& out) {
  const auto start = Clock::now();
  Outcome r = antipode_outcome(o);
  if (o.format == "json") {
    json j = base_report("antipode", o.algebra, inputs_of(o));
    j["terms"] = r.terms;
    if (r.closed_text) j["closed_terms"] = r.closed_terms;
    j["agree"] = r.agree ? json(*r.agree) : json(nullptr);
    j["elapsed_ms"] = elapsed_ms(start);
    out << j.dump(2) << "\n";
  } else {
    out << r.text << "\n";
    if (r.closed_text) out << "closed form: " << *r.closed_text << "\n";
    out << "agree: " << (r.agree ? (*r.agree ? "true" : "false") : "n/a") << "\n";
  }
  return r.agree.value_or(true) ? kOk : kMismatch;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto start = Clock::now();
  const int lim = limit(o.algebra, true);
  const int n = o.max_size.value_or(std::min(lim, 4));
  if (n < 0) throw UsageError("--max-size must be nonnegative");
  require_size(o.algebra, static_cast<std::size_t>(n), true, "max size");
  const auto checks = verify_checks(o, n);
  const bool pass = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok(); });
  if (o.format == "json") {
    json j = base_report("verify", o.algebra, inputs_of(o));
    json arr = json::array();
    for (const auto& c : checks) {
      json e = {{"key", c.key}, {"axiom", c.axiom}, {"agree", c.agree ? json(*c.agree) : json(nullptr)}};
      if (!c.note.empty()) e["note"] = c.note;
      arr.push_back(std::move(e));
    }
    j["checked"] = std::move(arr);
    j["agree"] = pass;
    j["elapsed_ms"] = elapsed_ms(start);
    out << j.dump(2) << "\n";
  } else {
    for (const auto& c : checks) {
      out << c.key << ": closed=" << (c.agree ? (*c.agree ? "ok" : "MISMATCH") : "n/a")
          << " axiom=" << (c.axiom ? "ok" : "FAIL");
      if (!c.note.empty()) out << " (" << c.note << ")";
      out << "\n";
    }
    out << "verified " << checks.size() << " keys: " << (pass ? "pass" : "FAIL") << "\n";
  }
  return pass ? kOk : kMismatch;
}

int cmd_conjecture(const Options& o, std::ostream& out) {
  const auto start = Clock::now();
  const std::string& name = o.algebra;
  const int n = o.n.value_or(5);
  if (n < 1) throw UsageError("--n must be positive");
  require_size(name, static_cast<std::size_t>(n), false, "n");
  SSym s;
  TakeuchiEvaluator<SSym> ev(s);
  PSym p;
  auto fs = [&](const Permutation& x) { return s.format(x); };
  auto fp = [&](const Tableau& x) { return p.format(x); };
  struct Row {
    std::string label;
    bool pass;
    json expected, computed;
    std::string expected_text, computed_text;
  };
  std::vector<Row> rows;
  if (name == "psym-hook") {
    for (const auto& inst : psym_hook_check(ev, n))
      rows.push_back({"lambda=(" + format_comma(inst.lambda) + ")", inst.pass, terms_json(inst.predicted, fp),
                      terms_json(inst.computed, fp), render(inst.predicted, fp), render(inst.computed, fp)});
  } else if (name == "ssym-singleton" || name == "ssym-pair2") {
    for (const auto& inst : ssym_conjecture_check(ev, name, n))
      rows.push_back({inst.label, inst.pass, terms_json(inst.conjectured, fs), terms_json(inst.computed, fs),
                      render(inst.conjectured, fs), render(inst.computed, fs)});
  } else {
    throw UsageError("unknown conjecture: " + name);
  }
  const bool pass = std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.pass; });
  if (o.format == "json") {
    json j = base_report("conjecture", name, inputs_of(o));
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back({{"instance", r.label}, {"pass", r.pass}, {"conjectured", r.expected}, {"computed", r.computed}});
    j["instances"] = std::move(arr);
    j["agree"] = pass;
    j["elapsed_ms"] = elapsed_ms(start);
    out << j.dump(2) << "\n";
  } else {
    for (const auto& r : rows) {
      out << r.label << ": " << (r.pass ? "pass" : "FAIL") << "\n";
      if (!r.pass) out << "  conjectured: " << r.expected_text << "\n  computed:    " << r.computed_text << "\n";
    }
    out << rows.size() << " instances: " << (pass ? "pass" : "FAIL") << "\n";
  }
  return pass ? kOk : kMismatch;
}

int cmd_involution(const Options& o, std::ostream& out) {
  const auto start = Clock::now();
  const std::string& name = o.algebra;
  InvolutionReport<OrderedSetPartition> report;
  std::optional<std::uint64_t> expected_fixed;
  if (name == "poly-osp") {
    const int n = o.n.value_or(4);
    if (n < 0) throw UsageError("--n must be nonnegative");
    require_size(name, static_cast<std::size_t>(n), false, "n");
    report = verify_involution(poly_signed_set(n));
    expected_fixed = 1;
  } else if (name == "graph-orientation") {
    if (o.graph.empty()) throw UsageError("graph-orientation needs --graph");
    const Graph g = parse_graph(o.graph);
    require_size(name, static_cast<std::size_t>(g.n()), false, "vertex count");
    std::vector<Edge> f = parse_edge_list(o.flat.value_or(""));
    for (auto [u, v] : f)
      if (u < 1 || v > g.n() || !g.adjacent(u, v)) throw UsageError("--flat contains an edge that is not in the graph");
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    if (!is_flat(g, f)) throw UsageError("--flat is not a flat of the graph");
    SignedSet<OrderedSetPartition> set;
    set.elements = partitions_inducing(g, f);
    set.sign = [](const OrderedSetPartition& pi) { return pi.num_blocks() % 2 == 0 ? 1 : -1; };
    set.involution = [g, f](const OrderedSetPartition& pi) { return graph_involution_step(g, f, pi); };
    report = verify_involution(set);
    expected_fixed = acyclic_orientation_count(contract(g, f).graph());
  } else {
    throw UsageError("unknown involution: " + name);
  }
  const bool count_ok = !expected_fixed || report.fixed_points.size() == *expected_fixed;
  const bool pass = report.ok && count_ok;
  if (o.format == "json") {
    json j = base_report("involution", name, inputs_of(o));
    json fixed = json::array();
    for (const auto& pi : report.fixed_points) fixed.push_back(format(pi));
    j["fixed_points"] = std::move(fixed);
    j["signed_sum"] = coeff_json(report.signed_sum);
    j["fixed_sum"] = coeff_json(report.fixed_sum);
    if (expected_fixed) j["expected_fixed_points"] = *expected_fixed;
    if (!report.message.empty()) j["message"] = report.message;
    j["agree"] = pass;
    j["elapsed_ms"] = elapsed_ms(start);
    out << j.dump(2) << "\n";
  } else {
    out << "fixed points (" << report.fixed_points.size() << "):";
    for (const auto& pi : report.fixed_points) out << " " << format(pi);
    out << "\nsigned sum: " << report.signed_sum << "\nfixed-point sum: " << report.fixed_sum << "\n";
    if (!report.message.empty()) out << "violation: " << report.message << "\n";
    if (!count_ok) out << "expected " << *expected_fixed << " fixed points\n";
    out << (pass ? "pass" : "FAIL") << "\n";
  }
  return pass ? kOk : kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Antipodes of combinatorial Hopf algebras", "hopfkit"};
  app.require_subcommand(1);
  Options o;
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* antipode = app.add_subcommand("antipode", "Antipode of one basis element by Takeuchi's formula");
  antipode->add_option("algebra", o.algebra, "poly, shuffle, qsym-m, qsym-f, mqsym, graph, nsym-h, nsym-imm, ssym, psym")
      ->required();
  antipode->add_option("key", o.key, "Basis key")->required();
  antipode->add_option("--max-degree", o.max_degree, "Degree cap (mqsym only)");
  add_format(antipode);

  auto* verify = app.add_subcommand("verify", "Check closed forms and the antipode axiom on all small keys");
  verify->add_option("algebra", o.algebra, "Algebra name")->required();
  verify->add_option("--max-size", o.max_size, "Largest key size to check");
  verify->add_option("--max-degree", o.max_degree, "Degree cap for mqsym (default size + 2)");
  add_format(verify);

  auto* conjecture = app.add_subcommand("conjecture", "Evidence for an open conjecture");
  conjecture->add_option("name", o.algebra, "ssym-singleton, ssym-pair2, psym-hook")->required();
  conjecture->add_option("--n", o.n, "Size");
  add_format(conjecture);

  auto* involution = app.add_subcommand("involution", "Check a sign-reversing involution");
  involution->add_option("name", o.algebra, "poly-osp, graph-orientation")->required();
  involution->add_option("--n", o.n, "Ground set size (poly-osp)");
  involution->add_option("--graph", o.graph, "Graph, e.g. \"n=3;edges=1-2,2-3\"");
  involution->add_option("--flat", o.flat, "Flat as an edge list, e.g. \"1-2\"");
  add_format(involution);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (antipode->parsed()) return cmd_antipode(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (conjecture->parsed()) return cmd_conjecture(o, out);
    return cmd_involution(o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
  } catch (const SizeBoundError& e) {
    err << "size bound: " << e.what() << "\n";
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
  } catch (const std::out_of_range& e) {
    err << "size bound: " << e.what() << "\n";
  }
  return kUsage;
}

}  // namespace hopf::cli
