#include "loghh/problem.hpp"

#include <algorithm>
#include <chrono>
#include <initializer_list>

#include <json.hpp>

#include "loghh/cyclic.hpp"
#include "loghh/hochschild.hpp"
#include "loghh/oracle.hpp"
#include "loghh/theta.hpp"

namespace loghh {

namespace {

using nlohmann::json;

[[noreturn]] void schema(const std::string& where, const std::string& what) {
  fail(ErrorKind::SchemaError, where + ": " + what);
}

// ---- strict readers ---------------------------------------------------------

void check_keys(const json& j, const std::string& where,
                std::initializer_list<const char*> allowed) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : allowed) known = known || it.key() == k;
    if (!known) schema(where, "unknown key \"" + it.key() + "\"");
  }
}

const json& member(const json& j, const std::string& where, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) schema(where, std::string("missing key \"") + key + "\"");
  return *it;
}

const json* opt_member(const json& j, const char* key) {
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

long read_long(const json& j, const std::string& where) {
  if (!j.is_number_integer()) schema(where, "expected an integer");
  return j.get<long>();
}

std::string read_string(const json& j, const std::string& where) {
  if (!j.is_string()) schema(where, "expected a string");
  return j.get<std::string>();
}

std::vector<std::string> read_strings(const json& j, const std::string& where) {
  if (!j.is_array()) schema(where, "expected an array of strings");
  std::vector<std::string> out;
  for (size_t i = 0; i < j.size(); ++i)
    out.push_back(read_string(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    size_t off = e.byte > 0 ? e.byte - 1 : 0;
    if (off > text.size()) off = text.size();
    long line = 1, col = 1;
    for (size_t i = 0; i < off; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    fail(ErrorKind::ParseError,
         "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + e.what());
  }
}

AffineMonoid read_monoid(const json& j, const std::string& where) {
  if (!j.is_object()) schema(where, "expected an object");
  check_keys(j, where, {"rank", "gens"});
  AffineMonoid m;
  m.ambient_rank = read_long(member(j, where, "rank"), where + ".rank");
  if (m.ambient_rank < 0) schema(where + ".rank", "negative rank");
  const json& g = member(j, where, "gens");
  if (!g.is_array()) schema(where + ".gens", "expected an array");
  for (size_t i = 0; i < g.size(); ++i) {
    std::string at = where + ".gens[" + std::to_string(i) + "]";
    if (!g[i].is_array() || (long)g[i].size() != m.ambient_rank)
      schema(at, "expected " + std::to_string(m.ambient_rank) + " coordinates");
    std::vector<Int> v;
    for (size_t c = 0; c < g[i].size(); ++c)
      v.push_back(Int(read_long(g[i][c], at + "[" + std::to_string(c) + "]")));
    m.gens.push_back(std::move(v));
  }
  return m;
}

Field read_field(const json& j) {
  std::string name = read_string(j, "field");
  if (name == "Q") return Field::rationals();
  if (name.size() > 1 && name[0] == 'F') {
    long p = 0;
    for (size_t i = 1; i < name.size(); ++i) {
      if (name[i] < '0' || name[i] > '9') schema("field", "expected \"Q\" or \"F<prime>\"");
      p = p * 10 + (name[i] - '0');
    }
    return Field::prime(p);  // rejects non-primes itself
  }
  schema("field", "expected \"Q\" or \"F<prime>\"");
}

// which keys each op consumes, and its default window
struct OpShape {
  bool n, m_max, degree_box, backend, sequence;
  long default_n;
};

OpShape shape_of(const std::string& op, const std::string& where) {
  if (op == "hh") return {true, false, true, true, true, 3};
  if (op == "hc") return {false, true, false, false, false, 3};
  if (op == "omega") return {false, false, true, false, false, 3};
  if (op == "derham") return {false, true, true, false, false, 3};
  if (op == "hkr") return {true, false, true, false, false, 1};
  if (op == "sbi") return {false, true, false, false, false, 3};
  if (op == "adams") return {true, false, false, false, false, 3};
  if (op == "theta_complex") return {true, false, false, false, false, 3};
  if (op == "oracle") return {true, false, false, false, false, 3};
  schema(where, "unknown op \"" + op + "\"");
}

Task read_task(const json& j, const std::string& where) {
  if (!j.is_object()) schema(where, "expected an object");
  check_keys(j, where, {"op", "N", "m_max", "degree_box", "backend", "regular_sequence"});
  Task t;
  t.op = read_string(member(j, where, "op"), where + ".op");
  OpShape sh = shape_of(t.op, where + ".op");
  t.n = sh.default_n;

  if (const json* v = opt_member(j, "N")) {
    if (!sh.n) schema(where, "op \"" + t.op + "\" does not take N");
    t.n = read_long(*v, where + ".N");
    if (t.n < 0) schema(where + ".N", "negative window");
  }
  if (const json* v = opt_member(j, "m_max")) {
    if (!sh.m_max) schema(where, "op \"" + t.op + "\" does not take m_max");
    t.m_max = read_long(*v, where + ".m_max");
    if (t.m_max < 0) schema(where + ".m_max", "negative window");
  }
  if (const json* v = opt_member(j, "degree_box")) {
    if (!sh.degree_box) schema(where, "op \"" + t.op + "\" does not take degree_box");
    if (!v->is_array() || v->size() != 2) schema(where + ".degree_box", "expected [lo, hi]");
    long lo = read_long((*v)[0], where + ".degree_box[0]");
    long hi = read_long((*v)[1], where + ".degree_box[1]");
    if (lo < 0 || hi < lo) schema(where + ".degree_box", "expected 0 <= lo <= hi");
    for (long d = lo; d <= hi; ++d) t.degree_box.push_back(d);
  }
  if (const json* v = opt_member(j, "backend")) {
    if (!sh.backend) schema(where, "op \"" + t.op + "\" does not take backend");
    t.backend = read_string(*v, where + ".backend");
    if (t.backend != "bar" && t.backend != "koszul" && t.backend != "resolution")
      schema(where + ".backend", "expected bar, koszul or resolution");
  }
  if (t.op == "hh" && t.backend.empty()) t.backend = "resolution";
  if (const json* v = opt_member(j, "regular_sequence")) {
    if (!sh.sequence) schema(where, "op \"" + t.op + "\" does not take regular_sequence");
    t.regular_sequence = read_strings(*v, where + ".regular_sequence");
  }
  if (t.backend == "koszul" && t.regular_sequence.empty())
    schema(where, "the koszul backend needs a regular_sequence");
  if (t.backend != "koszul" && !t.regular_sequence.empty())
    schema(where, "regular_sequence is only read by the koszul backend");
  return t;
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = digits[v & 0xf];
    v >>= 4;
  }
  return s;
}

// ---- task execution ---------------------------------------------------------

void emit_hh(const HHResult& r, TaskReport& tr) {
  if (!r.dims.empty()) {
    std::map<long, long> d;
    for (size_t i = 0; i < r.dims.size(); ++i) d[(long)i] = r.dims[i];
    tr.tables.push_back({"dims", std::move(d)});
  }
  for (size_t i = 0; i < r.tables.size(); ++i)
    if (!r.tables[i].empty())
      tr.tables.push_back({"degree_table_" + std::to_string(i), r.tables[i]});
}

void vector_table(const std::string& name, const std::vector<long>& v, TaskReport& tr) {
  std::map<long, long> t;
  for (size_t i = 0; i < v.size(); ++i) t[(long)i] = v[i];
  tr.tables.push_back({name, std::move(t)});
}

void run_one(const LogRingSpec& s, const Task& t, const Budget& budget, TaskReport& tr) {
  if (t.op == "hh") {
    if (t.backend == "bar")
      emit_hh(hh_bar(s, t.n), tr);
    else if (t.backend == "koszul")
      emit_hh(hh_koszul(s, t.regular_sequence, t.n, t.degree_box, budget), tr);
    else
      emit_hh(hh_resolution(s, t.n, t.degree_box, budget), tr);
  } else if (t.op == "hc") {
    vector_table("dims", hc(s, t.m_max, t.m_max + 2), tr);
    tr.notes.push_back(
        "standard first-quadrant totalization: the cyclic groups of a point "
        "stay one-dimensional in every even degree");
  } else if (t.op == "omega") {
    LogDifferentials om = log_differentials(s);
    if (!t.degree_box.empty()) {
      tr.tables.push_back({"hilbert", hilbert_function(om.module, t.degree_box)});
    } else {
      QuotientRing a(om.module.ring, om.module.ring_relations);
      tr.tables.push_back({"total", {{0, total_dim(a, om.module)}}});
    }
    std::string gens;
    for (const std::string& g : om.gen_names) gens += (gens.empty() ? "" : ", ") + g;
    tr.notes.push_back("generators: " + gens);
  } else if (t.op == "derham") {
    HcResult r = hc_de_rham(s, t.m_max, t.degree_box);
    if (!r.dims.empty()) vector_table("dims", r.dims, tr);
    for (size_t m = 0; m < r.tables.size(); ++m)
      if (!r.tables[m].empty())
        tr.tables.push_back({"degree_table_" + std::to_string(m), r.tables[m]});
  } else if (t.op == "hkr") {
    HkrReport r = hkr_map(s, t.n, t.degree_box, budget);
    std::map<long, long> src, tgt, rank;
    for (const auto& [d, v] : r.by_degree) {
      src[d] = v[0];
      tgt[d] = v[1];
      rank[d] = v[2];
    }
    if (!src.empty()) {
      tr.tables.push_back({"source_dim", std::move(src)});
      tr.tables.push_back({"target_dim", std::move(tgt)});
      tr.tables.push_back({"rank", std::move(rank)});
    }
    if (r.total[0] || r.total[1] || r.total[2])
      tr.tables.push_back({"total", {{0, r.total[0]}, {1, r.total[1]}, {2, r.total[2]}}});
    tr.checks.push_back({"well_defined", r.well_defined});
    tr.checks.push_back({"injective", r.injective});
    tr.checks.push_back({"surjective", r.surjective});
    if (!r.well_defined) {
      tr.status = "failed";
      tr.detail = "comparison map does not kill the module relations";
    }
  } else if (t.op == "sbi") {
    SbiReport r = sbi_sequence(s, t.m_max);
    vector_table("hh", r.hh, tr);
    vector_table("hc", r.hc, tr);
    vector_table("rank_i", r.rank_i, tr);
    vector_table("rank_s", r.rank_s, tr);
    vector_table("rank_b", r.rank_b, tr);
    tr.checks.push_back({"exact", r.exact});
    for (const std::string& f : r.failures) tr.notes.push_back(f);
    if (!r.exact) {
      tr.status = "failed";
      tr.detail = r.failures.empty() ? "sequence not exact" : r.failures.front();
    }
  } else if (t.op == "adams") {
    for (long n = 0; n <= t.n; ++n) {
      AdamsReport r = adams(s, 2, n);
      std::map<long, long> e;
      for (size_t i = 0; i < r.eigen_dims.size(); ++i) e[(long)i] = r.eigen_dims[i];
      tr.tables.push_back({"weights_" + std::to_string(n), std::move(e)});
      bool mult = adams_multiplicative(s, 2, 3, n);
      tr.checks.push_back({"psi2_psi3_is_psi6_deg" + std::to_string(n), mult});
      if (!mult && tr.status == "ok") {
        tr.status = "failed";
        tr.detail = "power operations fail to multiply in degree " + std::to_string(n);
      }
    }
  } else if (t.op == "theta_complex") {
    ThetaComplex th(s, t.n);
    for (long n = 0; n <= t.n; ++n) th.verify_identities(n);
    tr.checks.push_back({"identities", true});
    try {
      std::map<long, long> dims;
      for (long n = 0; n <= t.n; ++n) dims[n] = th.level(n).quotient.dim();
      tr.tables.push_back({"level_dims", std::move(dims)});
    } catch (const Error& e) {
      if (e.kind != ErrorKind::NotFiniteDimensional) throw;
      tr.notes.push_back("levels are infinite-dimensional; identities verified symbolically");
    }
  } else {  // oracle
    OracleResult o = oracle_homology(s, t.n);
    vector_table("hh", o.hh, tr);
    vector_table("hc", o.hc, tr);
    bool hh_ok = o.hh == hh_bar(s, t.n).dims;
    bool hc_ok = o.hc == hc(s, t.n, t.n + 2);
    tr.checks.push_back({"hh_matches", hh_ok});
    tr.checks.push_back({"hc_matches", hc_ok});
    if (!(hh_ok && hc_ok)) {
      tr.status = "failed";
      tr.detail = "independent recomputation disagrees with the main path";
    }
  }
}

enum class FailClass { none, input, budget, check };

FailClass classify(ErrorKind k) {
  switch (k) {
    case ErrorKind::BudgetExceeded:
      return FailClass::budget;
    case ErrorKind::Internal:
    case ErrorKind::UnstableTruncation:
    case ErrorKind::RelationNotKilled:
    case ErrorKind::CompositionNonzero:
      return FailClass::check;
    default:
      return FailClass::input;
  }
}

}  // namespace

ProblemFile parse_problem(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object()) schema("problem", "expected an object");
  check_keys(j, "problem",
             {"schema_version", "field", "base", "total", "grading", "budget", "tasks"});
  if (const json* v = opt_member(j, "schema_version"))
    if (read_long(*v, "schema_version") != kSchemaVersion)
      schema("schema_version", "this tool reads version " + std::to_string(kSchemaVersion));

  ProblemFile p;
  p.spec.field = read_field(member(j, "problem", "field"));

  const json& base = member(j, "problem", "base");
  if (!base.is_object()) schema("base", "expected an object");
  check_keys(base, "base", {"monoid", "ring", "chart"});
  const json& total = member(j, "problem", "total");
  if (!total.is_object()) schema("total", "expected an object");
  check_keys(total, "total", {"monoid", "theta", "ring", "chart"});

  p.spec.theta.source = read_monoid(member(base, "base", "monoid"), "base.monoid");
  p.spec.theta.target = read_monoid(member(total, "total", "monoid"), "total.monoid");

  const json& th = member(total, "total", "theta");
  if (!th.is_array() || th.size() != p.spec.theta.source.gens.size())
    schema("total.theta", "expected one image row per base-monoid generator");
  for (size_t i = 0; i < th.size(); ++i) {
    std::string at = "total.theta[" + std::to_string(i) + "]";
    if (!th[i].is_array() || th[i].size() != p.spec.theta.target.gens.size())
      schema(at, "expected one coefficient per total-monoid generator");
    std::vector<Int> row;
    for (size_t c = 0; c < th[i].size(); ++c) {
      long e = read_long(th[i][c], at + "[" + std::to_string(c) + "]");
      if (e < 0) schema(at, "image of base generator " + std::to_string(i + 1) +
                                " lies outside the target monoid");
      row.push_back(Int(e));
    }
    p.spec.theta.images.push_back(std::move(row));
  }

  const json& bring = member(base, "base", "ring");
  if (!bring.is_object()) schema("base.ring", "expected an object");
  check_keys(bring, "base.ring", {"vars"});
  std::vector<std::string> vars = read_strings(member(bring, "base.ring", "vars"), "base.ring.vars");
  p.spec.base_vars = (long)vars.size();

  const json& tring = member(total, "total", "ring");
  if (!tring.is_object()) schema("total.ring", "expected an object");
  check_keys(tring, "total.ring", {"vars", "relations"});
  for (std::string& v : read_strings(member(tring, "total.ring", "vars"), "total.ring.vars"))
    vars.push_back(std::move(v));
  for (size_t i = 0; i < vars.size(); ++i)
    for (size_t k = i + 1; k < vars.size(); ++k)
      if (vars[i] == vars[k]) schema("total.ring.vars", "duplicate variable \"" + vars[i] + "\"");

  p.spec.ring = PolyRing(p.spec.field, vars);
  if (p.spec.ring.nvars() > 0)
    p.spec.ring.set_order(MonomialOrder::degrevlex(p.spec.ring.nvars()));

  if (const json* g = opt_member(j, "grading")) {
    if (!g->is_object()) schema("grading", "expected an object");
    check_keys(*g, "grading", {"weights"});
    const json& w = member(*g, "grading", "weights");
    if (!w.is_array() || (long)w.size() != p.spec.ring.nvars())
      schema("grading.weights", "expected one weight per ring variable");
    std::vector<long> weights;
    for (size_t i = 0; i < w.size(); ++i)
      weights.push_back(read_long(w[i], "grading.weights[" + std::to_string(i) + "]"));
    p.spec.ring.set_weights(std::move(weights));
  } else if (p.spec.ring.nvars() == 0) {
    p.spec.ring.set_weights({});
  }

  if (const json* rel = opt_member(tring, "relations"))
    for (const std::string& r : read_strings(*rel, "total.ring.relations"))
      p.spec.relations.push_back(p_parse(p.spec.ring, r));
  for (const std::string& c : read_strings(member(base, "base", "chart"), "base.chart"))
    p.spec.base_chart.push_back(p_parse(p.spec.ring, c));
  for (const std::string& c : read_strings(member(total, "total", "chart"), "total.chart"))
    p.spec.total_chart.push_back(p_parse(p.spec.ring, c));

  if (const json* b = opt_member(j, "budget")) {
    if (!b->is_object()) schema("budget", "expected an object");
    check_keys(*b, "budget", {"max_spairs", "max_terms", "max_degree"});
    if (const json* v = opt_member(*b, "max_spairs"))
      p.budget.max_spairs = read_long(*v, "budget.max_spairs");
    if (const json* v = opt_member(*b, "max_terms"))
      p.budget.max_terms = read_long(*v, "budget.max_terms");
    if (const json* v = opt_member(*b, "max_degree"))
      p.budget.max_degree = read_long(*v, "budget.max_degree");
  }

  const json& tasks = member(j, "problem", "tasks");
  if (!tasks.is_array()) schema("tasks", "expected an array");
  for (size_t i = 0; i < tasks.size(); ++i)
    p.tasks.push_back(read_task(tasks[i], "tasks[" + std::to_string(i) + "]"));

  require_valid(p.spec);
  return p;
}

std::string serialize_problem(const ProblemFile& p) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["field"] = p.spec.field.name();

  auto monoid_json = [](const AffineMonoid& m) {
    json o;
    o["rank"] = m.ambient_rank;
    o["gens"] = json::array();
    for (const auto& g : m.gens) {
      json row = json::array();
      for (const Int& e : g) row.push_back(e.convert_to<long long>());
      o["gens"].push_back(std::move(row));
    }
    return o;
  };

  const std::vector<std::string>& names = p.spec.ring.var_names();
  json base;
  base["monoid"] = monoid_json(p.spec.theta.source);
  base["ring"]["vars"] =
      std::vector<std::string>(names.begin(), names.begin() + p.spec.base_vars);
  base["chart"] = json::array();
  for (const Poly& c : p.spec.base_chart) base["chart"].push_back(p_string(p.spec.ring, c));
  j["base"] = std::move(base);

  json total;
  total["monoid"] = monoid_json(p.spec.theta.target);
  total["theta"] = json::array();
  for (const auto& row : p.spec.theta.images) {
    json r = json::array();
    for (const Int& e : row) r.push_back(e.convert_to<long long>());
    total["theta"].push_back(std::move(r));
  }
  total["ring"]["vars"] = std::vector<std::string>(names.begin() + p.spec.base_vars, names.end());
  total["ring"]["relations"] = json::array();
  for (const Poly& r : p.spec.relations)
    total["ring"]["relations"].push_back(p_string(p.spec.ring, r));
  total["chart"] = json::array();
  for (const Poly& c : p.spec.total_chart) total["chart"].push_back(p_string(p.spec.ring, c));
  j["total"] = std::move(total);

  if (p.spec.ring.graded() && p.spec.ring.nvars() > 0)
    j["grading"]["weights"] = p.spec.ring.weights();

  j["budget"]["max_spairs"] = p.budget.max_spairs;
  j["budget"]["max_terms"] = p.budget.max_terms;
  j["budget"]["max_degree"] = p.budget.max_degree;

  j["tasks"] = json::array();
  for (const Task& t : p.tasks) {
    OpShape sh = shape_of(t.op, "tasks");
    json o;
    o["op"] = t.op;
    if (sh.n) o["N"] = t.n;
    if (sh.m_max) o["m_max"] = t.m_max;
    if (sh.degree_box && !t.degree_box.empty())
      o["degree_box"] = {t.degree_box.front(), t.degree_box.back()};
    if (sh.backend) o["backend"] = t.backend;
    if (sh.sequence && !t.regular_sequence.empty()) o["regular_sequence"] = t.regular_sequence;
    j["tasks"].push_back(std::move(o));
  }
  return j.dump(2) + "\n";
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

Report run_problem(const ProblemFile& p, bool with_oracle, long threads) {
  Report rep;
  rep.field = p.spec.field.name();
  rep.input_digest = "fnv1a64:" + hex64(fnv1a64(serialize_problem(p)));
  rep.threads = threads < 1 ? 1 : threads;

  struct Item {
    Task task;
    bool appended = false;
  };
  std::vector<Item> items;
  for (const Task& t : p.tasks) items.push_back({t, false});
  if (with_oracle) {
    Task t;
    t.op = "oracle";
    for (const Task& u : p.tasks)
      if (u.op == "hh") t.n = std::max(t.n, u.n);
    items.push_back({std::move(t), true});
  }

  FailClass worst = FailClass::none;
  for (const Item& it : items) {
    TaskReport tr;
    tr.op = it.task.op;
    tr.status = "ok";
    FailClass cls = FailClass::none;
    auto start = std::chrono::steady_clock::now();
    try {
      run_one(p.spec, it.task, p.budget, tr);
      if (tr.status == "failed") cls = FailClass::check;
    } catch (const Error& e) {
      tr.detail = std::string(error_kind_name(e.kind)) + ": " + e.what();
      cls = classify(e.kind);
      if (cls == FailClass::budget) {
        tr.status = "budget";
      } else if (it.appended && e.kind == ErrorKind::NotFiniteDimensional) {
        // best-effort verification pass: record that it could not run
        tr.status = "unverified";
        cls = FailClass::none;
      } else {
        tr.status = "failed";
      }
    }
    tr.time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
    worst = std::max(worst, cls);
    rep.tasks.push_back(std::move(tr));
  }
  switch (worst) {
    case FailClass::none: rep.exit_code = 0; break;
    case FailClass::input: rep.exit_code = 1; break;
    case FailClass::budget: rep.exit_code = 2; break;
    case FailClass::check: rep.exit_code = 3; break;
  }
  return rep;
}

std::string report_json(const Report& r) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["tool"] = "loghh";
  j["tool_version"] = kToolVersion;
  j["field"] = r.field;
  j["input_digest"] = r.input_digest;
  j["threads"] = r.threads;
  j["exit_code"] = r.exit_code;
  j["tasks"] = json::array();
  for (const TaskReport& t : r.tasks) {
    json o;
    o["op"] = t.op;
    o["status"] = t.status;
    if (!t.detail.empty()) o["detail"] = t.detail;
    if (!t.tables.empty()) {
      json tables;
      for (const auto& [name, tab] : t.tables) {
        json rows = json::array();
        for (const auto& [d, v] : tab) rows.push_back({d, v});
        tables[name] = std::move(rows);
      }
      o["tables"] = std::move(tables);
    }
    if (!t.checks.empty()) {
      json checks = json::array();
      for (const auto& [name, ok] : t.checks) checks.push_back({{"name", name}, {"ok", ok}});
      o["checks"] = std::move(checks);
    }
    if (!t.notes.empty()) o["notes"] = t.notes;
    o["time_ms"] = t.time_ms;
    j["tasks"].push_back(std::move(o));
  }
  return j.dump(2) + "\n";
}

}  // namespace loghh
