#pragma once

#include "mckaykit/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace mckaykit::cli {

using nlohmann::json;

enum ExitCode { kOk = 0, kFailure = 1, kUsage = 2, kCap = 3 };

struct RunConfig {
  std::string command;
  std::string group;
  std::string suite;
  std::string format = "json";
  int window = 8;
  std::size_t cap = 3000000;
  std::uint64_t seed = 0;
  int k = 2;
  int degree = -1;
  unsigned long long max_order = 0;
  std::string groups;
  std::string type = "A1";
};

namespace detail {

inline std::string str(const Rational& r) { return r.str(); }

inline json classes_json(const MatrixGroup& G) {
  json cls = json::array();
  for (std::size_t c = 0; c < G.classes().size(); ++c) {
    const auto& k = G.classes()[c];
    long long ord = 1;
    for (auto g = k.rep; g != G.identity(); g = G.mul(g, k.rep)) ++ord;
    cls.push_back({{"index", c}, {"size", k.size()}, {"degree", k.degree}, {"element_order", ord}});
  }
  return cls;
}

inline json catalog_json(unsigned long long max_order) {
  json rows = json::array();
  for (const auto& spec : catalog_specs(~0ULL)) {
    if (spec.rfind("weyl:", 0) != 0) continue;
    char t = spec[5];
    int r = std::stoi(spec.substr(6));
    auto info = root_system(t, r);
    if (max_order && info.weyl_order > max_order) continue;
    rows.push_back({{"type", info.label()},
                    {"rank", r},
                    {"cartan", info.cartan},
                    {"weyl_order", info.weyl_order},
                    {"coxeter_number", coxeter_number(t, r)},
                    {"resolution_exists", info.resolution_exists},
                    {"resolution", resolution_citation(t)}});
  }
  json specs = json::array();
  for (const auto& s : catalog_specs(max_order ? max_order : ~0ULL)) specs.push_back({{"spec", s}, {"order", known_order(s)}});
  return {{"root_systems", rows}, {"groups", specs}};
}

inline std::pair<char, int> weyl_type(const std::string& spec) {
  if (spec.rfind("weyl:", 0) != 0 || spec.size() < 7 || spec.find('*') != std::string::npos)
    throw std::invalid_argument("exponents needs a weyl:Xr spec, got '" + spec + "'");
  int r = mckaykit::detail::parse_positive(spec.substr(6), "rank");
  if (!valid_root_type(spec[5], r)) throw std::invalid_argument("no root system " + spec.substr(5));
  return {spec[5], r};
}

inline std::vector<std::pair<std::string, std::string>> parse_pairs(const std::string& s) {
  std::vector<std::pair<std::string, std::string>> out;
  std::size_t start = 0;
  for (;;) {
    auto semi = s.find(';', start);
    std::string item = s.substr(start, semi - start);
    auto comma = item.find(',');
    if (comma == std::string::npos || item.find(',', comma + 1) != std::string::npos)
      throw std::invalid_argument("--groups takes G1,G2 pairs separated by ';', got '" + item + "'");
    out.emplace_back(item.substr(0, comma), item.substr(comma + 1));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return out;
}

inline json report_json(const VerifyReport& r) {
  json j = {{"suite", r.suite}, {"pass", r.pass}, {"checks", r.checks}, {"data", r.data}};
  if (!r.pass) j["counterexample"] = r.counterexample;
  return j;
}

inline json mc_json(const McExtension& x) {
  json j = {{"obstructed", x.obstructed}, {"corrections", x.correction.size()}};
  if (x.obstructed) j["residual"] = x.residual;
  return j;
}

inline void emit(std::ostream& out, const json& j, const std::string& format) {
  if (format == "text") {
    for (const auto& [k, v] : j.items()) out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  } else {
    out << j.dump(2) << "\n";
  }
}

// Executes one parsed command; returns the exit code.
inline int execute(const RunConfig& c, std::ostream& out) {
  auto group = [&] { return group_from_spec(c.group, c.cap); };
  json j;
  int code = kOk;
  const std::string& cmd = c.command;
  if (cmd == "classes") {
    auto G = group();
    j = {{"group", c.group}, {"order", G.order()}, {"classes", classes_json(G)}};
  } else if (cmd == "reflections") {
    auto G = group();
    auto refl = symplectic_reflections(G);
    std::size_t elements = 0;
    for (auto i : refl) elements += G.classes()[i].size();
    j = {{"group", c.group}, {"count", refl.size()}, {"classes", refl}, {"elements", elements}};
  } else if (cmd == "grcenter") {
    auto G = group();
    auto gc = gr_center(G);
    json cs = json::array();
    for (const auto& s : gc.constants) cs.push_back({s.i, s.j, s.k, str(s.c)});
    j = {{"group", c.group}, {"degrees", gc.degrees}, {"poincare", gc.poincare}, {"constants", cs}};
  } else if (cmd == "orbifold-poincare") {
    j = {{"group", c.group}, {"poincare", orbifold_poincare(group())}};
  } else if (cmd == "betti") {
    j = {{"group", c.group}, {"betti", betti_of_resolution(gr_center(group()))}};
  } else if (cmd == "rees") {
    auto G = group();
    json ts = json::array();
    for (const auto& t : rees_center(G, class_algebra(G))) ts.push_back({t.i, t.j, t.k, t.c, t.u_power});
    j = {{"group", c.group}, {"terms", ts}, {"format", {"i", "j", "k", "coefficient", "u_power"}}};
  } else if (cmd == "molien") {
    int D = c.degree >= 0 ? c.degree : c.window;
    json coeffs = json::array();
    for (const auto& x : molien(group(), static_cast<std::size_t>(D))) coeffs.push_back(str(x));
    j = {{"group", c.group}, {"degree", D}, {"coefficients", coeffs}};
  } else if (cmd == "exponents") {
    auto [t, r] = weyl_type(c.group);
    if (known_order(c.group) > c.cap) throw CapExceeded(c.cap);
    auto ex = exponents(t, r, c.cap);
    std::vector<int> degs;
    for (int e : ex) degs.push_back(e + 1);
    j = {{"group", c.group}, {"exponents", ex}, {"degrees", degs}, {"coxeter_number", coxeter_number(t, r)}};
  } else if (cmd == "catalog") {
    j = catalog_json(c.max_order);
  } else if (cmd == "hp") {
    if (c.k < 0 || c.k > 2) throw std::invalid_argument("--k must be 0, 1 or 2");
    auto A = build_truncated(group(), c.window, c.seed);
    j = hp_json(c.k == 0 ? hp0(A) : c.k == 1 ? hp1(A) : hp2_first_order(A));
  } else if (cmd == "mc-extend") {
    auto A = build_truncated(group(), c.window, c.seed);
    auto h2 = hp2_first_order(A);
    json each = json::array();
    bool obstructed = false;
    for (const auto& g : h2.basis) {
      auto x = mc_extend(A, g);
      obstructed |= x.obstructed;
      auto e = mc_json(x);
      e["m"] = g.m;
      each.push_back(e);
    }
    j = {{"group", c.group}, {"window", c.window}, {"basis", each}};
    if (h2.basis.size() > 1) {
      auto x = mc_extend(A, h2.basis);
      obstructed |= x.obstructed;
      j["sum"] = mc_json(x);
    }
    j["obstructed"] = obstructed;
    if (obstructed) code = kFailure;
  } else if (cmd == "verify") {
    const std::string& s = c.suite;
    VerifyReport r;
    if (s == "lemma-easy")
      r = verify_lemma_easy(c.max_order ? c.max_order : 2000, c.cap);
    else if (s == "grcenter-axioms")
      r = verify_grcenter_axioms(c.max_order ? c.max_order : 2000, c.cap);
    else if (s == "kunneth")
      r = verify_kunneth(c.groups.empty() ? default_kunneth_pairs() : parse_pairs(c.groups), c.cap);
    else if (s == "schouten")
      r = verify_schouten(c.seed);
    else if (s == "gerstenhaber")
      r = verify_gerstenhaber(c.seed);
    else if (s == "hp-duval")
      r = verify_hp_duval(c.type, c.window, c.cap);
    else if (s == "molien-cross")
      r = verify_molien_cross(c.max_order ? c.max_order : 500, c.degree >= 0 ? c.degree : 8, c.cap);
    else
      throw std::invalid_argument("unknown suite '" + s + "'");
    j = report_json(r);
    if (!r.pass) code = kFailure;
  }
  emit(out, j, c.format);
  return code;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Invariants of symplectic quotient singularities V/G, computed exactly"};
  app.require_subcommand(1);
  app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--cap", c.cap, "Largest group order to enumerate");

  auto with_group = [&](const std::string& name, const std::string& help) {
    auto* s = app.add_subcommand(name, help);
    s->add_option("group", c.group, "cyclic:n, binary-dihedral:n, weyl:Xr, symmetric:n, matrix-file:PATH, or A*B")
        ->required();
    s->fallthrough();
    return s;
  };
  with_group("classes", "Conjugacy classes with sizes and rank(id - g)");
  with_group("reflections", "Symplectic reflection classes");
  with_group("grcenter", "Associated graded center for the rank filtration");
  with_group("orbifold-poincare", "Orbifold Poincare polynomial");
  with_group("betti", "Betti numbers of a symplectic resolution (when one exists)");
  with_group("rees", "Rees algebra structure constants with powers of u");
  with_group("molien", "Molien series coefficients")->add_option("--degree", c.degree, "Highest degree (default: window)");
  with_group("exponents", "Exponents of a Weyl group");
  auto* hp = with_group("hp", "Truncated Poisson cohomology of the invariant ring");
  hp->add_option("--k", c.k, "Cohomological degree 0, 1 or 2");
  hp->add_option("--window", c.window, "Truncation degree D");
  hp->add_option("--seed", c.seed, "Seed for randomized basis steps");
  auto* mc = with_group("mc-extend", "Extend every HP^2 class to second order");
  mc->add_option("--window", c.window, "Truncation degree D");
  mc->add_option("--seed", c.seed, "Seed for randomized basis steps");
  auto* cat = app.add_subcommand("catalog", "Root system table and catalog groups");
  std::string action = "list";
  cat->add_option("action", action)->check(CLI::IsMember({"list"}));
  cat->add_option("--max-order", c.max_order, "Only groups up to this order");
  cat->fallthrough();
  auto* ver = app.add_subcommand("verify", "Property suites");
  ver->add_option("suite", c.suite)
      ->required()
      ->check(CLI::IsMember(
          {"lemma-easy", "grcenter-axioms", "kunneth", "schouten", "gerstenhaber", "hp-duval", "molien-cross"}));
  ver->add_option("--max-order", c.max_order, "Catalog groups up to this order");
  ver->add_option("--groups", c.groups, "Pairs G1,G2 separated by ';'");
  ver->add_option("--type", c.type, "du Val type A<n> or D<n>");
  ver->add_option("--window", c.window, "Truncation degree D");
  ver->add_option("--seed", c.seed, "Seed for randomized suites");
  ver->add_option("--degree", c.degree, "Highest Molien degree");
  ver->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kUsage;
  }
  c.command = app.get_subcommands().front()->get_name();

  try {
    return detail::execute(c, out);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kCap;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace mckaykit::cli
