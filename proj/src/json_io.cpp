#include "lss/json_io.hpp"

#include <memory>

#include "lss/errors.hpp"

namespace lss {

using nlohmann::json;

namespace {

const char* layout_name(VariableSpace::Layout l) {
  switch (l) {
    case VariableSpace::Layout::Block: return "block";
    case VariableSpace::Layout::Generic: return "generic";
    case VariableSpace::Layout::Symmetric: return "symmetric";
    case VariableSpace::Layout::Skew: return "skew";
    case VariableSpace::Layout::Plain: return "plain";
  }
  return "plain";
}

std::string symbol_of(const VariableSpace& s) {
  if (s.size() == 0) return "x";
  const std::string& first = s.name(0);
  return first.substr(0, first.find('['));
}

Verdict parse_verdict(const std::string& s) {
  if (s == "TRUE") return Verdict::True;
  if (s == "FALSE") return Verdict::False;
  if (s == "UNKNOWN") return Verdict::Unknown;
  throw ParseError("unknown verdict '" + s + "'");
}

template <typename F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

json to_json(const VariableSpace& space) {
  json j;
  j["layout"] = layout_name(space.layout());
  const int base = space.size() - space.auxiliary_count();
  if (space.layout() == VariableSpace::Layout::Plain) {
    json names = json::array();
    for (int i = 0; i < base; ++i) names.push_back(space.name(i));
    j["names"] = names;
  } else {
    j["symbol"] = symbol_of(space);
    j["rows"] = space.rows();
    j["cols"] = space.cols();
  }
  json aux = json::array();
  for (int i = base; i < space.size(); ++i) aux.push_back(space.name(i));
  j["auxiliary"] = aux;
  return j;
}

SpacePtr space_from_json(const json& j) {
  return guarded([&] {
    const std::string layout = j.at("layout").get<std::string>();
    VariableSpace s = VariableSpace::plain({});
    if (layout == "plain") {
      s = VariableSpace::plain(j.at("names").get<std::vector<std::string>>());
    } else {
      const std::string sym = j.value("symbol", std::string("x"));
      const int rows = j.at("rows").get<int>();
      const int cols = j.at("cols").get<int>();
      if (layout == "block") {
        s = VariableSpace::block(rows, cols, sym);
      } else if (layout == "generic") {
        s = VariableSpace::generic(rows, cols, sym);
      } else if (layout == "symmetric") {
        s = VariableSpace::symmetric(rows, sym);
      } else if (layout == "skew") {
        s = VariableSpace::skew(rows, sym);
      } else {
        throw ParseError("unknown layout '" + layout + "'");
      }
    }
    if (j.contains("auxiliary")) {
      for (const auto& name : j.at("auxiliary")) s = s.with_auxiliary(name.get<std::string>());
    }
    return std::make_shared<const VariableSpace>(std::move(s));
  });
}

json to_json(const PmdResult& r) {
  json j;
  json parts = json::array();
  json certs = json::array();
  if (r.decomposition) {
    for (const auto& part : r.decomposition->parts) parts.push_back(part);
    for (const auto& w : r.decomposition->certificates) {
      json c = json::object();
      for (std::size_t v = 0; v < w.weights.size(); ++v) c[std::to_string(v + 1)] = to_string(w.weights[v]);
      certs.push_back(c);
    }
  }
  j["parts"] = parts;
  j["certificates"] = certs;
  j["exact"] = r.exact;
  j["lower"] = r.lower;
  j["upper"] = r.upper;
  return j;
}

PmdResult pmd_result_from_json(const json& j, int n) {
  return guarded([&] {
    PmdResult r;
    r.exact = j.at("exact").get<bool>();
    r.lower = j.at("lower").get<int>();
    r.upper = j.at("upper").get<int>();
    PmDecomposition d;
    for (const auto& part : j.at("parts")) d.parts.push_back(part.get<EdgeSet>());
    for (const auto& c : j.at("certificates")) {
      WeightCertificate w;
      w.weights.assign(n, Rational(0));
      for (const auto& [key, value] : c.items()) {
        const int v = std::stoi(key);
        if (v < 1 || v > n) throw ParseError("certificate vertex out of range: " + key);
        try {
          w.weights[v - 1] = parse_rational(value.get<std::string>());
        } catch (const std::invalid_argument& e) {
          throw ParseError(e.what());
        }
      }
      d.certificates.push_back(std::move(w));
    }
    if (d.parts.size() != d.certificates.size()) throw ParseError("parts and certificates differ in number");
    if (!d.parts.empty() || r.upper == 0) r.decomposition = std::move(d);
    return r;
  });
}

json to_json(const Classification& c) {
  json just = json::array();
  for (const auto& x : c.justifications) just.push_back({{"rule", x.rule}, {"cite", x.cite}, {"evidence", x.evidence}});
  return {{"property", to_string(c.property)}, {"d", c.d}, {"verdict", to_string(c.verdict)}, {"justifications", just}};
}

Classification classification_from_json(const json& j) {
  return guarded([&] {
    Classification c;
    c.property = parse_property(j.at("property").get<std::string>());
    c.d = j.at("d").get<int>();
    c.verdict = parse_verdict(j.at("verdict").get<std::string>());
    for (const auto& x : j.at("justifications")) {
      c.justifications.push_back(
          {x.at("rule").get<std::string>(), x.at("cite").get<std::string>(), x.at("evidence").get<std::string>()});
    }
    return c;
  });
}

json to_json(const AsymBounds& b) {
  return {{"property", to_string(b.property)},
          {"lower", b.lower},
          {"upper", b.upper},
          {"upper_exact", b.upper_exact},
          {"notes", b.notes}};
}

json to_json(const GeneratorSet& g) {
  json gens = json::array();
  for (const auto& f : g.generators) {
    json p = to_json(f);
    p["text"] = to_string(f);
    gens.push_back(p);
  }
  return {{"provenance", g.provenance}, {"space", g.space ? to_json(*g.space) : json(nullptr)}, {"generators", gens}};
}

GeneratorSet generator_set_from_json(const json& j) {
  return guarded([&] {
    GeneratorSet g;
    g.provenance = j.value("provenance", std::string());
    g.space = space_from_json(j.at("space"));
    for (const auto& p : j.at("generators")) g.generators.push_back(polynomial_from_json(p, g.space));
    return g;
  });
}

json to_json(const GroebnerBasis& gb) {
  GeneratorSet g{gb.basis, gb.space, "reduced Groebner basis"};
  json j = to_json(g);
  j["unit"] = gb.is_unit();
  return j;
}

json to_json(const WitnessReport& r) {
  json j;
  j["provenance"] = r.provenance;
  j["g"] = to_string(r.g);
  j["verdict"] = r.verdict;
  j["colon_g"] = to_json(r.colon_g);
  j["colon_g2"] = to_json(r.colon_g2);
  j["separating"] = r.separating ? json(to_string(*r.separating)) : json(nullptr);
  j["seconds"] = r.seconds;
  return j;
}

}  // namespace lss
