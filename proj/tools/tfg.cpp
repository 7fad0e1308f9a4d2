// command line front end: load a system, run computations, verify identities

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "tfg/config.hpp"
#include "tfg/expr.hpp"
#include "tfg/generators.hpp"
#include "tfg/report.hpp"

namespace {

using namespace tfg;

struct Session {
  std::string config_path;
  std::string format = "human";
  long seed = 0;
  long cap_order = 0;
  long cap_span = 0;
  SystemPtr sys;

  SystemPtr system() {
    if (!sys) {
      require(!config_path.empty(), errc::bad_config, "this command needs --config");
      json j = load_json(config_path);
      if (cap_order > 0) j["caps"]["order"] = cap_order;
      if (cap_span > 0) j["caps"]["span"] = cap_span;
      sys = system_from_json(j);
    }
    return sys;
  }
};

void emit(const Session& s, const Report& rep, const std::string& command) {
  if (s.format == "json") {
    json out;
    out["command"] = command;
    out["seed"] = s.seed;
    out["checks"] = json::array();
    for (const auto& c : rep.checks)
      out["checks"].push_back({{"name", c.name},
                               {"ref", c.ref},
                               {"verdict", verdict_name(c.verdict)},
                               {"witness", c.witness}});
    out["passed"] = rep.all_passed();
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& c : rep.checks)
      std::cout << verdict_name(c.verdict) << "  " << c.name << "  (" << c.ref << ")"
                << (c.witness.empty() ? "" : "  [" + c.witness + "]") << "\n";
    std::cout << (rep.all_passed() ? "all checks passed" : "FAILURES PRESENT") << "\n";
  }
}

void emit_value(const Session& s, const std::string& command, const json& payload) {
  if (s.format == "json") {
    json out = payload;
    out["command"] = command;
    out["seed"] = s.seed;
    std::cout << out.dump(2) << "\n";
  } else {
    for (auto& [k, v] : payload.items()) {
      if (v.is_string())
        std::cout << k << ": " << v.get<std::string>() << "\n";
      else
        std::cout << k << ": " << v.dump() << "\n";
    }
  }
}

int run_verify_file(Session& s, const std::string& path) {
  std::ifstream in(path);
  require(in.good(), errc::bad_config, "cannot open " + path);
  ExprParser parser(s.system());
  Report rep;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = line;
    size_t h = t.find('#');
    if (h != std::string::npos) t = t.substr(0, h);
    while (!t.empty() && std::isspace((unsigned char)t.back())) t.pop_back();
    size_t b = 0;
    while (b < t.size() && std::isspace((unsigned char)t[b])) ++b;
    t = t.substr(b);
    if (t.empty()) continue;
    std::string name = "line" + std::to_string(lineno);
    size_t colon = t.find(':');
    std::string body = t;
    if (colon != std::string::npos && t.find("==") > colon) {
      name = t.substr(0, colon);
      body = t.substr(colon + 1);
    }
    size_t eq = body.find("==");
    require(eq != std::string::npos, errc::parse_error,
            path + ":" + std::to_string(lineno) + ": expected 'lhs == rhs'");
    FullGroupElement lhs = parser.parse_element(body.substr(0, eq));
    FullGroupElement rhs = parser.parse_element(body.substr(eq + 2));
    bool ok = equal(lhs, rhs);
    std::string wit;
    if (!ok) {
      auto d = disagreement_witness(lhs, rhs);
      if (d)
        wit = d->first.str(s.system()->alphabet()) + " at offset " +
              std::to_string(d->second);
    }
    rep.add(name, body, ok, wit);
  }
  emit(s, rep, "verify");
  return rep.all_passed() ? 0 : 1;
}

SystemPtr bundled_substitution() {
  Alphabet ab({"0", "1"});
  return SubshiftSystem::make_substitution(
      ab, {Word::parse(ab, "0011"), Word::parse(ab, "0101")},
      {PointHandle::seed(1, 0, 1), PointHandle::address({{0, 1}})});
}

std::vector<SystemPtr> bundled_sturmian() {
  return {SubshiftSystem::make_sturmian(QuadReal(Rational(-1), Rational(1), 2)),
          SubshiftSystem::make_sturmian(QuadReal(Rational(0), Rational(1, 5), 2))};
}

std::string rationals_str(const std::vector<Rational>& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].get_str();
  }
  return out + ")";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in topological full groups of minimal subshifts"};
  app.require_subcommand(1);
  app.fallthrough();
  Session session;
  app.add_option("--config", session.config_path, "system description (json)");
  app.add_option("--seed", session.seed, "rng seed recorded in reports");
  app.add_option("--cap-order", session.cap_order, "override the order cap");
  app.add_option("--cap-span", session.cap_span, "override the span cap");
  app.add_option("--format", session.format, "human or json")
      ->check(CLI::IsMember({"human", "json"}));

  int n_words = 1;
  auto* cmd_words = app.add_subcommand("words", "list the length-n words of the language");
  cmd_words->add_option("--n", n_words, "word length")->required();

  std::string set_expr;
  auto* cmd_measure = app.add_subcommand("measure", "invariant measure of a clopen set");
  cmd_measure->add_option("--set", set_expr, "clopen-set expression")->required();

  std::string elem_expr;
  auto* cmd_index = app.add_subcommand("index", "index of an element");
  cmd_index->add_option("--elem", elem_expr, "element expression")->required();

  long order_cap_arg = 0;
  auto* cmd_order = app.add_subcommand("order", "order of an element (with cap)");
  cmd_order->add_option("--elem", elem_expr, "element expression")->required();
  cmd_order->add_option("--cap", order_cap_arg, "order cap");

  auto* cmd_sgn = app.add_subcommand("sgn", "signature of an index-zero element");
  cmd_sgn->add_option("--elem", elem_expr, "element expression")->required();

  auto* cmd_class = app.add_subcommand("class", "coordinates of a clopen-set class");
  cmd_class->add_option("--set", set_expr, "clopen-set expression")->required();

  auto* cmd_decompose =
      app.add_subcommand("decompose", "split an index-zero element at the marked points");
  cmd_decompose->add_option("--elem", elem_expr, "element expression")->required();

  std::string verify_path;
  auto* cmd_verify = app.add_subcommand("verify", "check a file of element identities");
  cmd_verify->add_option("--file", verify_path, "identity file")->required();

  std::string diagram_path;
  int depth = 64;
  auto* cmd_bratteli = app.add_subcommand("bratteli-report", "diagram invariants");
  cmd_bratteli->add_option("--diagram", diagram_path, "diagram description (json)")->required();
  cmd_bratteli->add_option("--depth", depth, "horizon for limit computations");

  int which = 1;
  auto* cmd_examples = app.add_subcommand("examples", "run a bundled identity suite");
  cmd_examples->add_option("--which", which, "1: substitution suite, 2: sturmian suites")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_words->parsed()) {
      auto sys = session.system();
      json payload;
      payload["n"] = n_words;
      json arr = json::array();
      for (const Word& w : sys->words(n_words)) arr.push_back(w.str(sys->alphabet()));
      payload["count"] = arr.size();
      payload["words"] = arr;
      emit_value(session, "words", payload);
      return 0;
    }
    if (cmd_measure->parsed()) {
      auto sys = session.system();
      ClopenSet A = ExprParser(sys).parse_clopen(set_expr);
      json payload;
      payload["set"] = set_expr;
      payload["measure"] = measure(sys, A).str();
      emit_value(session, "measure", payload);
      return 0;
    }
    if (cmd_index->parsed()) {
      auto sys = session.system();
      FullGroupElement g = ExprParser(sys).parse_element(elem_expr);
      json payload;
      payload["elem"] = elem_expr;
      payload["index"] = index(g);
      emit_value(session, "index", payload);
      return 0;
    }
    if (cmd_order->parsed()) {
      auto sys = session.system();
      FullGroupElement g = ExprParser(sys).parse_element(elem_expr);
      long cap = order_cap_arg > 0 ? order_cap_arg : sys->caps().order_cap;
      auto k = order(g, cap);
      json payload;
      payload["elem"] = elem_expr;
      payload["cap"] = cap;
      if (k)
        payload["order"] = *k;
      else
        payload["order"] = "exceeds-cap";
      emit_value(session, "order", payload);
      return 0;
    }
    if (cmd_sgn->parsed()) {
      auto sys = session.system();
      FullGroupElement g = ExprParser(sys).parse_element(elem_expr);
      K0Presentation pres(sys);
      Mod2Class s = sgn(g, pres);
      json payload;
      payload["elem"] = elem_expr;
      payload["sgn"] = s.str();
      payload["basis"] = pres.trace_class() == K0Presentation::TraceClass::Quadratic
                             ? "([1_X], [1_U]) mod 2"
                             : "trivial mod-2 group";
      emit_value(session, "sgn", payload);
      return 0;
    }
    if (cmd_class->parsed()) {
      auto sys = session.system();
      ClopenSet A = ExprParser(sys).parse_clopen(set_expr);
      K0Presentation pres(sys);
      json payload;
      payload["set"] = set_expr;
      payload["coordinates"] = rationals_str(pres.class_of(A));
      payload["mod2"] = pres.class_mod2(A).str();
      emit_value(session, "class", payload);
      return 0;
    }
    if (cmd_decompose->parsed()) {
      auto sys = session.system();
      FullGroupElement g = ExprParser(sys).parse_element(elem_expr);
      const auto& pts = sys->distinguished_points();
      require(pts.size() >= 2, errc::bad_config, "system needs two distinguished points");
      Decomposition dec = decompose(g, pts[0], pts[1]);
      json payload;
      payload["elem"] = elem_expr;
      payload["crossings_down"] = dec.crossings_down;
      payload["crossings_up"] = dec.crossings_up;
      payload["neighborhood"] = dec.neighborhood.str();
      payload["part_x"] = dec.part_x.str();
      payload["part_y"] = dec.part_y.str();
      payload["product_checks"] = equal(compose(dec.part_x, dec.part_y), g);
      emit_value(session, "decompose", payload);
      return 0;
    }
    if (cmd_verify->parsed()) return run_verify_file(session, verify_path);
    if (cmd_bratteli->parsed()) {
      BratteliDiagram d = load_diagram(diagram_path);
      auto dptr = std::make_shared<BratteliDiagram>(d);
      json payload;
      payload["stationary"] = d.is_stationary();
      try {
        payload["simple"] = d.is_simple(depth);
      } catch (const Error& e) {
        payload["simple"] = "inconclusive";
      }
      json hs = json::array();
      for (int l = 1; l <= std::min(6, d.known_depth()); ++l) {
        json level = json::array();
        for (const auto& h : d.path_counts(l)) level.push_back(h.get_str());
        hs.push_back(level);
      }
      payload["path_counts"] = hs;
      try {
        Mod2Limit lim(dptr, depth);
        payload["mod2_dimension"] = lim.dim();
        payload["mod2_certified"] = lim.certified();
      } catch (const Error& e) {
        payload["mod2_dimension"] = "inconclusive";
      }
      emit_value(session, "bratteli-report", payload);
      return 0;
    }
    if (cmd_examples->parsed()) {
      Report rep;
      if (which == 1) {
        rep = verify_example1(bundled_substitution());
      } else if (which == 2) {
        for (const auto& sys : bundled_sturmian()) {
          Report r = verify_example2(sys);
          std::string tag = sys->sturmian_alpha().str();
          for (auto& c : r.checks) c.name = "[alpha=" + tag + "] " + c.name;
          rep.merge(r);
        }
      } else {
        fail(errc::bad_config, "--which must be 1 or 2");
      }
      emit(session, rep, "examples");
      return rep.all_passed() ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
