#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "tfg/bratteli.hpp"
#include "tfg/subshift.hpp"

namespace tfg {

using json = nlohmann::json;

inline json load_json(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), errc::bad_config, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(errc::bad_config, path + ": " + e.what());
  }
  return j;
}

inline QuadReal quadreal_from_json(const json& j) {
  // (p + q*sqrt(d)) / r, all integers
  long p = j.value("p", 0L), q = j.value("q", 0L), r = j.value("r", 1L);
  long d = j.value("d", 0L);
  require(r != 0, errc::bad_config, "zero denominator in number literal");
  return QuadReal(Rational(p, r), Rational(q, r), q == 0 ? 0 : d);
}

inline Caps caps_from_json(const json& j) {
  Caps caps;
  if (!j.contains("caps")) return caps;
  const json& c = j["caps"];
  caps.language_max_len = c.value("language", caps.language_max_len);
  caps.order_cap = c.value("order", caps.order_cap);
  caps.span_cap = c.value("span", caps.span_cap);
  caps.evolve_cap = c.value("evolve", caps.evolve_cap);
  caps.measure_block_cap = c.value("blocks", caps.measure_block_cap);
  caps.recognizability_cap = c.value("recognizability", caps.recognizability_cap);
  return caps;
}

/// Build a subshift system from its JSON description. The grammar is
/// documented in the README.
inline SystemPtr system_from_json(const json& root) {
  require(root.contains("system"), errc::bad_config, "missing 'system' object");
  const json& j = root["system"];
  Caps caps = caps_from_json(root);
  std::string kind = j.value("kind", "");
  if (kind == "sturmian") {
    require(j.contains("alpha"), errc::bad_config, "sturmian system needs 'alpha'");
    QuadReal alpha = quadreal_from_json(j["alpha"]);
    std::vector<PointHandle> pts;
    if (j.contains("points"))
      for (const json& p : j["points"]) {
        require(p.contains("t"), errc::bad_config, "sturmian point needs 't'");
        pts.push_back(PointHandle::sturmian(quadreal_from_json(p["t"])));
      }
    return SubshiftSystem::make_sturmian(alpha, std::move(pts), caps);
  }
  if (kind == "substitution") {
    require(j.contains("rules"), errc::bad_config, "substitution system needs 'rules'");
    std::vector<std::string> symbols;
    for (auto& [k, v] : j["rules"].items()) symbols.push_back(k);
    std::sort(symbols.begin(), symbols.end());
    Alphabet ab(symbols);
    std::vector<Word> rules(symbols.size());
    for (auto& [k, v] : j["rules"].items())
      rules[ab.letter(k)] = Word::parse(ab, v.get<std::string>());
    std::vector<PointHandle> pts;
    if (j.contains("points"))
      for (const json& p : j["points"]) {
        if (p.contains("seed")) {
          const json& s = p["seed"];
          pts.push_back(PointHandle::seed(ab.letter(s.at("left").get<std::string>()),
                                          ab.letter(s.at("right").get<std::string>()),
                                          s.value("power", 1)));
        } else if (p.contains("address")) {
          std::vector<std::pair<Letter, int>> cyc;
          for (const json& e : p["address"])
            cyc.push_back({ab.letter(e.at("letter").get<std::string>()),
                           e.at("index").get<int>()});
          pts.push_back(PointHandle::address(std::move(cyc)));
        } else {
          fail(errc::bad_config, "substitution point needs 'seed' or 'address'");
        }
      }
    return SubshiftSystem::make_substitution(std::move(ab), std::move(rules),
                                             std::move(pts), caps);
  }
  if (kind == "sft") {
    require(j.contains("alphabet"), errc::bad_config, "sft system needs 'alphabet'");
    std::vector<std::string> symbols;
    for (const json& s : j["alphabet"]) symbols.push_back(s.get<std::string>());
    Alphabet ab(symbols);
    std::vector<Word> forbidden;
    if (j.contains("forbidden"))
      for (const json& f : j["forbidden"]) forbidden.push_back(Word::parse(ab, f.get<std::string>()));
    return SubshiftSystem::make_sft(std::move(ab), std::move(forbidden), caps);
  }
  fail(errc::bad_config, "unknown system kind '" + kind + "'");
}

inline SystemPtr load_system(const std::string& path) {
  return system_from_json(load_json(path));
}

/// Diagram description: vertex counts per level via the multiplicity
/// matrices; stationary diagrams give one repeating matrix.
inline BratteliDiagram diagram_from_json(const json& root) {
  require(root.contains("diagram"), errc::bad_config, "missing 'diagram' object");
  const json& j = root["diagram"];
  std::vector<long> level1;
  for (const json& v : j.at("level1")) level1.push_back(v.get<long>());
  auto matrix_of = [](const json& m) {
    std::vector<std::vector<long>> out;
    for (const json& row : m) {
      std::vector<long> r;
      for (const json& x : row) r.push_back(x.get<long>());
      out.push_back(std::move(r));
    }
    return out;
  };
  if (j.value("stationary", true)) {
    return BratteliDiagram::stationary(std::move(level1), matrix_of(j.at("matrix")));
  }
  std::vector<std::vector<std::vector<long>>> levels;
  for (const json& m : j.at("levels")) levels.push_back(matrix_of(m));
  return BratteliDiagram::general(std::move(level1), std::move(levels));
}

inline BratteliDiagram load_diagram(const std::string& path) {
  return diagram_from_json(load_json(path));
}

}  // namespace tfg
