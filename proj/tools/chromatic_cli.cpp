// chromatic: generalized chromatic polynomials, gadgets and identity checks.
//
//   chromatic poly --graph k3.el --prop proper --basis monomial
//   chromatic eval --graph p3.el --prop convex --at 2
//   chromatic gadget certify nae_mcc --cnf one_clause.cnf --t 2
//   chromatic identity run --name harm_eq1 --max-n 4 --seed 7 --json
//   chromatic audit --graph p3.el --prop surjective-proper --kmax 3
//   chromatic cocircuits --graph c4.el --list
//
// Exit codes: 0 ok, 2 bad input, 3 budget exceeded, 4 check failed.

#include "chromatic/chromatic.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace chromatic;
using json = nlohmann::ordered_json;

namespace {

constexpr int kInputError = 2;
constexpr int kBudget = 3;
constexpr int kFailed = 4;

struct Config {
  std::uint64_t budget = 100'000'000;
  int workers = 1;
  std::uint64_t seed = 0;
  std::string format = "json";
};

std::uint64_t env_budget() {
  const char* v = std::getenv("CHROMATIC_BUDGET");
  if (!v || !*v) return 100'000'000;
  char* end = nullptr;
  unsigned long long b = std::strtoull(v, &end, 10);
  if (*end != '\0') throw InputError(std::string("CHROMATIC_BUDGET is not an integer: ") + v);
  return b;
}

CountOptions options(const Config& c) {
  if (c.budget < 10'000) throw InputError("budget must be >= 10000");
  if (c.workers < 1) throw InputError("workers must be >= 1");
  return {c.budget, c.workers};
}

Graph load_graph(const std::string& path) {
  if (path == "-") {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    return parse_graph_text(buf.str());
  }
  return read_graph_file(path);
}

CnfInstance load_cnf(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open cnf file '" + path + "'");
  return parse_cnf(in);
}

void print_text(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      print_text(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    }
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) print_text(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else if (j.is_string()) {
    std::string s = j.get<std::string>();
    for (auto& ch : s)
      if (ch == '\n') ch = ';';
    out << prefix << ": " << s << '\n';
  } else {
    out << prefix << ": " << j.dump() << '\n';
  }
}

void emit(const Config& c, const json& j) {
  if (c.format == "text") {
    print_text(j, "", std::cout);
  } else {
    std::cout << j.dump(2) << '\n';
  }
}

json counts_json(const std::vector<BigInt>& v) {
  json j = json::object();
  for (std::size_t k = 0; k < v.size(); ++k) j[std::to_string(k)] = to_string(v[k]);
  return j;
}

json audit_json(const ZilberReport& r) {
  json j;
  j["kmax"] = std::to_string(r.k_max);
  j["condition_A"] = r.condition_a ? "holds" : "violated";
  j["condition_B"] = r.condition_b ? "holds" : "violated";
  if (!r.condition_a) j["witness_A"] = r.witness_a;
  if (!r.condition_b) j["witness_B"] = r.witness_b;
  j["counts_at"] = counts_json(r.totals);
  return j;
}

/// Counts at k = 0..3 by direct enumeration, or nullopt past the budget.
std::optional<std::vector<BigInt>> brute_counts(const Graph& g, const ColoringProperty& prop, const CountOptions& opt) {
  std::vector<BigInt> out;
  try {
    for (int k = 0; k <= 3; ++k) out.push_back(brute_count_at(g, prop, k, opt));
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  }
  return out;
}

// ---------------------------------------------------------------------------

int cmd_poly(const Config& c, const std::string& path, const std::string& token, const std::string& basis) {
  const auto opt = options(c);
  Graph g = load_graph(path);
  auto prop = parse_property(token);
  const Basis b = parse_basis(basis);
  json j;
  j["graph"] = fingerprint(g);
  j["property"] = prop.name;
  try {
    Poly p = chi_polynomial(g, prop, opt).in_basis(b);
    auto pj = to_json(p);
    j["basis"] = pj["basis"];
    j["coeffs"] = pj["coeffs"];
    std::vector<BigInt> at;
    for (int k = 0; k <= 3; ++k) at.push_back(boost::multiprecision::numerator(p(Rational(k))));
    j["counts_at"] = counts_json(at);
    auto brute = brute_counts(g, prop, opt);
    if (!brute) {
      j["crosscheck"] = "skipped";
    } else if (*brute == at) {
      j["crosscheck"] = "agrees";
    } else {
      j["crosscheck"] = "disagrees";
      j["brute_counts_at"] = counts_json(*brute);
      emit(c, j);
      return kFailed;
    }
    emit(c, j);
    return 0;
  } catch (const NotPolynomial& e) {
    j["polynomial"] = "no";
    auto a = audit_json(e.report());
    for (auto it = a.begin(); it != a.end(); ++it) j[it.key()] = it.value();
    emit(c, j);
    return kFailed;
  }
}

int cmd_eval(const Config& c, const std::string& path, const std::string& token, const std::string& at_text) {
  const auto opt = options(c);
  Graph g = load_graph(path);
  auto prop = parse_property(token);
  const Rational at = parse_rational(at_text);
  const bool integral = boost::multiprecision::denominator(at) == 1;
  std::optional<long long> k;
  if (integral && at >= 0 && at <= 64) k = static_cast<long long>(boost::multiprecision::numerator(at));

  json j;
  j["graph"] = fingerprint(g);
  j["property"] = prop.name;
  j["at"] = to_string(at);
  std::optional<Rational> value;
  try {
    value = chi_polynomial(g, prop, opt)(at);
    j["value"] = to_string(*value);
  } catch (const NotPolynomial& e) {
    if (!k) {
      j["polynomial"] = "no";
      j["condition_A"] = e.report().condition_a ? "holds" : "violated";
      j["condition_B"] = e.report().condition_b ? "holds" : "violated";
      emit(c, j);
      return kFailed;
    }
    j["polynomial"] = "no";
  }
  if (!k) {
    j["check"] = "none";
    emit(c, j);
    return 0;
  }
  std::optional<BigInt> direct;
  std::string method = "brute";
  try {
    if (prop.name == "harmonious") {
      direct = harmonious_fast(g, static_cast<int>(*k), opt);
      method = "fast=T(k)";
    } else if (prop.name == "convex" && *k <= 2) {
      direct = convex_fast(g, static_cast<int>(*k), opt);
      method = "fast=cocircuit";
    } else {
      direct = brute_count_at(g, prop, static_cast<int>(*k), opt);
    }
  } catch (const BudgetExceeded&) {
    if (!value) throw;
    j["check"] = "skipped";
    emit(c, j);
    return 0;
  }
  j["check"] = method;
  if (!value) {
    j["value"] = to_string(*direct);
    emit(c, j);
    return 0;
  }
  const bool agrees = Rational(*direct) == *value;
  j["agrees"] = agrees;
  if (!agrees) j["direct"] = to_string(*direct);
  emit(c, j);
  return agrees ? 0 : kFailed;
}

json certification_json(const Certification& cert) {
  json j;
  j["kind"] = cert.kind;
  j["vertices"] = std::to_string(cert.vertices);
  j["edges"] = std::to_string(cert.edges);
  j["models"] = to_string(cert.models);
  j["colorings"] = to_string(cert.colorings);
  if (cert.ratio) j["ratio"] = to_string(*cert.ratio);
  if (cert.per_clause) j["per_clause"] = std::to_string(*cert.per_clause);
  j["match"] = cert.match;
  return j;
}

struct GadgetArgs {
  std::vector<std::string> words;
  std::string cnf;
  std::string graph;
  std::string out;
  int t = 2;
  int k = 0;
};

int cmd_gadget(const Config& c, const GadgetArgs& a) {
  const auto opt = options(c);
  std::string action = "emit";
  std::string kind;
  if (a.words.size() == 1) {
    kind = a.words[0];
  } else if (a.words.size() == 2 && (a.words[0] == "emit" || a.words[0] == "certify")) {
    action = a.words[0];
    kind = a.words[1];
  } else {
    throw InputError("usage: gadget [emit|certify] <nae_mcc|alpha_du|monotone_maxcut|maxcut_cocircuits>");
  }
  const bool from_graph = kind == "maxcut_cocircuits";
  if (from_graph && a.graph.empty()) throw InputError("maxcut_cocircuits needs --graph");
  if (!from_graph && a.cnf.empty()) throw InputError(kind + " needs --cnf");

  if (action == "certify") {
    Certification cert;
    if (kind == "nae_mcc") {
      cert = certify_nae_mcc(load_cnf(a.cnf), a.t, opt);
    } else if (kind == "alpha_du") {
      cert = certify_alpha_du(load_cnf(a.cnf), opt);
    } else if (kind == "monotone_maxcut") {
      cert = certify_maxcut(load_cnf(a.cnf), opt);
    } else if (kind == "maxcut_cocircuits") {
      cert = certify_cocircuits(load_graph(a.graph), a.k, opt);
    } else {
      throw InputError("unknown gadget '" + kind + "'");
    }
    emit(c, certification_json(cert));
    return cert.match ? 0 : kFailed;
  }

  Graph g;
  std::optional<int> target;
  if (kind == "nae_mcc") {
    g = nae_to_mcc(load_cnf(a.cnf), a.t);
  } else if (kind == "alpha_du") {
    g = alpha_sat_to_du(load_cnf(a.cnf));
  } else if (kind == "monotone_maxcut") {
    auto inst = monotone2sat_to_maxcut(load_cnf(a.cnf));
    g = inst.graph;
    target = inst.k;
  } else if (kind == "maxcut_cocircuits") {
    auto inst = maxcut_to_cocircuits(load_graph(a.graph), a.k);
    g = inst.graph;
    target = inst.k;
  } else {
    throw InputError("unknown gadget '" + kind + "'");
  }
  json j;
  j["kind"] = kind;
  j["vertices"] = std::to_string(g.order());
  j["edges"] = std::to_string(g.size());
  if (target) j["k"] = std::to_string(*target);
  j["graph6"] = to_graph6(g);
  if (!a.out.empty()) {
    std::ofstream out(a.out);
    if (!out) throw InputError("cannot write '" + a.out + "'");
    out << to_graph6(g) << '\n';
    std::ofstream side(a.out + ".labels");
    side << write_label_sidecar(g);
    j["out"] = a.out;
    j["labels"] = a.out + ".labels";
  } else {
    json labels = json::array();
    if (g.labels())
      for (const auto& l : *g.labels()) labels.push_back(l);
    j["labels"] = labels;
  }
  emit(c, j);
  return 0;
}

struct IdentityArgs {
  std::string name;
  Bounds bounds;
  bool timing = false;
};

int cmd_identity(const Config& c, const IdentityArgs& a, bool all) {
  const auto opt = options(c);
  std::vector<IdentityVerdict> verdicts;
  if (all) {
    verdicts = run_all(a.bounds, c.seed, opt);
  } else {
    verdicts.push_back(run_identity(a.name, a.bounds, c.seed, opt));
  }
  json list = json::array();
  int failed = 0;
  for (const auto& v : verdicts) {
    list.push_back(to_json(v, a.timing));
    failed += !v.pass;
  }
  json j;
  j["seed"] = std::to_string(c.seed);
  j["identities"] = list;
  j["passed"] = std::to_string(verdicts.size() - failed);
  j["failed"] = std::to_string(failed);
  emit(c, j);
  return failed ? kFailed : 0;
}

int cmd_audit(const Config& c, const std::string& path, const std::string& token, int kmax) {
  const auto opt = options(c);
  Graph g = load_graph(path);
  auto prop = parse_property(token);
  json j;
  j["graph"] = fingerprint(g);
  j["property"] = prop.name;
  auto a = audit_json(zilber_audit(g, prop, kmax, opt));
  for (auto it = a.begin(); it != a.end(); ++it) j[it.key()] = it.value();
  emit(c, j);
  return 0;
}

int cmd_cocircuits(const Config& c, const std::string& path, bool list) {
  const auto opt = options(c);
  Graph g = load_graph(path);
  auto census = enumerate_cocircuits(g, list, opt.budget);
  json j;
  j["graph"] = fingerprint(g);
  j["total"] = std::to_string(census.total);
  json sizes = json::object();
  for (auto [size, count] : census.by_size) sizes[std::to_string(size)] = std::to_string(count);
  j["by_size"] = sizes;
  if (list) {
    json cuts = json::array();
    for (const auto& r : census.reports) {
      json x = json::array();
      json y = json::array();
      for (int v : mask_vertices(r.x)) x.push_back(std::to_string(v));
      for (int v : mask_vertices(r.y)) y.push_back(std::to_string(v));
      cuts.push_back({{"x", x}, {"y", y}, {"size", std::to_string(r.crossing_size)}});
    }
    j["cocircuits"] = cuts;
  }
  emit(c, j);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized chromatic polynomials: exact counting, gadgets and identity checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  try {
    cfg.budget = env_budget();
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  app.add_option("--budget", cfg.budget, "Enumeration budget (operations); overrides CHROMATIC_BUDGET");
  app.add_option("--workers", cfg.workers, "Worker threads");
  app.add_option("--seed", cfg.seed, "Seed for sampled families");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::string graph;
  std::string prop;
  std::string basis = "binomial";
  std::string at;
  int kmax = 4;
  bool list = false;

  auto* poly = app.add_subcommand("poly", "Generalized chromatic polynomial of a graph");
  poly->add_option("--graph", graph, "Edge list or graph6 file ('-' for stdin)")->required();
  poly->add_option("--prop", prop, "Property token")->required();
  poly->add_option("--basis", basis, "binomial or monomial")->check(CLI::IsMember({"binomial", "monomial"}));

  auto* eval = app.add_subcommand("eval", "Evaluate at an exact rational point");
  eval->add_option("--graph", graph)->required();
  eval->add_option("--prop", prop)->required();
  eval->add_option("--at", at, "Point, e.g. 3, -1 or 7/2")->required();

  GadgetArgs gadget_args;
  auto* gadget = app.add_subcommand("gadget", "Build or certify a reduction gadget");
  gadget->add_option("words", gadget_args.words, "[emit|certify] <kind>")->required()->expected(1, 2);
  gadget->add_option("--cnf", gadget_args.cnf, "DIMACS file with a 'c semantics' line");
  gadget->add_option("--graph", gadget_args.graph, "Input graph for maxcut_cocircuits");
  gadget->add_option("--t", gadget_args.t, "Component bound for nae_mcc");
  gadget->add_option("--k", gadget_args.k, "Cut size for maxcut_cocircuits");
  gadget->add_option("--out", gadget_args.out, "Write graph6 here and labels to <out>.labels");

  IdentityArgs id_args;
  bool json_flag = false;
  auto* identity = app.add_subcommand("identity", "Run identity checks");
  identity->require_subcommand(1);
  auto add_bounds = [&](CLI::App* sub) {
    Bounds& b = id_args.bounds;
    sub->add_option("--min-n", b.min_n);
    sub->add_option("--max-n", b.max_n);
    sub->add_option("--exhaustive-n", b.exhaustive_n, "Enumerate all graphs up to this order");
    sub->add_option("--max-e", b.max_e);
    sub->add_option("--max-k", b.max_k);
    sub->add_option("--max-join", b.max_join);
    sub->add_option("--max-m", b.max_m);
    sub->add_option("--max-l", b.max_l);
    sub->add_option("--connected-n", b.connected_n);
    sub->add_option("--samples", b.samples, "Extra random graphs per identity");
    sub->add_flag("--literal", b.literal, "Drop the side conditions and test the statements as printed");
    sub->add_flag("--timing", id_args.timing, "Include wall time (not deterministic)");
    sub->add_flag("--json", json_flag);
    sub->add_option("--seed", cfg.seed);
  };
  auto* id_run = identity->add_subcommand("run", "Run one identity");
  id_run->add_option("--name", id_args.name)->required();
  add_bounds(id_run);
  auto* id_all = identity->add_subcommand("run-all", "Run every identity");
  add_bounds(id_all);

  auto* audit = app.add_subcommand("audit", "Check conditions (A) and (B) on one graph");
  audit->add_option("--graph", graph)->required();
  audit->add_option("--prop", prop)->required();
  audit->add_option("--kmax", kmax);

  auto* cocircuits = app.add_subcommand("cocircuits", "Count cocircuits by size");
  cocircuits->add_option("--graph", graph)->required();
  cocircuits->add_flag("--list", list, "List every cocircuit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kInputError;
  }
  if (json_flag) cfg.format = "json";

  try {
    if (poly->parsed()) return cmd_poly(cfg, graph, prop, basis);
    if (eval->parsed()) return cmd_eval(cfg, graph, prop, at);
    if (gadget->parsed()) return cmd_gadget(cfg, gadget_args);
    if (id_run->parsed()) return cmd_identity(cfg, id_args, false);
    if (id_all->parsed()) return cmd_identity(cfg, id_args, true);
    if (audit->parsed()) return cmd_audit(cfg, graph, prop, kmax);
    if (cocircuits->parsed()) return cmd_cocircuits(cfg, graph, list);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  }
  return kInputError;
}
