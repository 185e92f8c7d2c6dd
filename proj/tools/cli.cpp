#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <optional>
#include <ostream>

#include "lss/classifier.hpp"
#include "lss/errors.hpp"
#include "lss/graph_io.hpp"
#include "lss/groebner.hpp"
#include "lss/ideal_forge.hpp"
#include "lss/json_io.hpp"
#include "lss/named_instances.hpp"
#include "lss/posmatch.hpp"
#include "lss/witness.hpp"

namespace lss::cli {

namespace {

struct RunConfig {
  std::string command;
  std::string positional;
  std::string named;
  std::string graph_file;
  std::optional<std::string> edges;
  int d = 0;
  std::string prop;
  std::string characteristic = "any";
  std::string format = "human";
  std::optional<std::size_t> gb_budget;
  std::size_t pmd_budget = kDefaultPmdNodeBudget;
  bool strict = false;
  std::string lss;
  std::string lss_example;
  std::string pool;
  std::string gens;
  std::string g;
  std::string order = "degrevlex";
  bool twisted = false;
};

/// Raised for missing or conflicting options; maps to the parse-error status.
struct UsageError : ParseError {
  using ParseError::ParseError;
};

bool json_out(const RunConfig& c) { return c.format == "json"; }

Clutter clutter_from_source(const std::string& source) {
  if (is_named_graph(source)) return Clutter(named_graph(source));
  if (std::filesystem::is_regular_file(source)) return read_clutter_file(source);
  return parse_inline_edges(source);
}

Clutter input_clutter(const RunConfig& c) {
  int given = !c.positional.empty() + !c.named.empty() + !c.graph_file.empty() + c.edges.has_value();
  if (given == 0) throw UsageError("no graph given (use a name, --named, --graph or --edges)");
  if (given > 1) throw UsageError("give exactly one graph input");
  if (!c.named.empty()) return Clutter(named_graph(c.named));
  if (!c.graph_file.empty()) return read_clutter_file(c.graph_file);
  if (c.edges) return parse_inline_edges(*c.edges);
  return Clutter(named_graph(c.positional));
}

Graph as_graph(const Clutter& h) {
  if (!h.is_graph()) throw ParseError("this command needs a graph, not a clutter");
  return h.as_graph();
}

Graph input_graph(const RunConfig& c) { return as_graph(input_clutter(c)); }

void require_d(const RunConfig& c) {
  if (c.d < 1) throw UsageError("--d is required and must be positive");
}

std::string edge_text(const Clutter& h, std::size_t e) {
  std::string s = "{";
  for (std::size_t k = 0; k < h.edge(e).size(); ++k) s += (k ? "," : "") + std::to_string(h.edge(e)[k]);
  return s + "}";
}

int cmd_pmd(const RunConfig& c, std::ostream& out) {
  const Clutter h = input_clutter(c);
  const PmdResult r = exact_pmd(h, c.pmd_budget);
  if (json_out(c)) {
    out << to_json(r).dump(2) << '\n';
  } else {
    if (r.exact) {
      out << "pmd = " << r.upper << " (exact)\n";
    } else {
      out << "pmd in [" << r.lower << ", " << r.upper << "] (node budget exhausted)\n";
    }
    if (r.decomposition) {
      for (std::size_t l = 0; l < r.decomposition->size(); ++l) {
        out << "part " << l + 1 << ":";
        for (std::size_t e : r.decomposition->parts[l]) out << ' ' << edge_text(h, e);
        out << "\n  weights:";
        const auto& w = r.decomposition->certificates[l].weights;
        for (std::size_t v = 0; v < w.size(); ++v) out << ' ' << v + 1 << '=' << to_string(w[v]);
        out << '\n';
      }
    }
  }
  return !r.exact && c.strict ? kExitBudget : kExitOk;
}

int cmd_classify(const RunConfig& c, std::ostream& out) {
  require_d(c);
  if (c.prop.empty()) throw UsageError("--prop is required");
  Classifier k(input_graph(c), parse_field(c.characteristic), c.pmd_budget);
  const Classification r = k.classify(c.d, parse_property(c.prop));
  if (json_out(c)) {
    out << to_json(r).dump(2) << '\n';
  } else {
    out << to_string(r.property) << " at d=" << r.d << ": " << to_string(r.verdict) << '\n';
    for (const auto& j : r.justifications) out << "  [" << j.rule << "] " << j.cite << "; " << j.evidence << '\n';
  }
  return kExitOk;
}

int cmd_asym(const RunConfig& c, std::ostream& out) {
  const Property p = c.prop.empty() ? Property::Prime : parse_property(c.prop);
  const AsymBounds b = asym_bounds(input_graph(c), p, parse_field(c.characteristic), c.pmd_budget);
  if (json_out(c)) {
    out << to_json(b).dump(2) << '\n';
  } else {
    out << "asym(" << to_string(p) << ") in [" << b.lower << ", " << b.upper << "]\n";
    for (const auto& n : b.notes) out << "  " << n << '\n';
  }
  return kExitOk;
}

int cmd_transfer(const RunConfig& c, std::ostream& out) {
  require_d(c);
  const TransferReport r = transfer_report(input_graph(c), c.d, parse_field(c.characteristic), c.pmd_budget);
  if (json_out(c)) {
    out << nlohmann::json{{"applicable", r.applicable}, {"statements", r.statements}}.dump(2) << '\n';
  } else {
    for (const auto& s : r.statements) out << s << '\n';
  }
  return kExitOk;
}

GeneratorSet ideal_from_config(const RunConfig& c) {
  if (!c.lss_example.empty()) return nonradical_example(c.lss_example).ideal;
  if (!c.lss.empty()) {
    require_d(c);
    const Clutter h = clutter_from_source(c.lss);
    if (c.twisted) return twisted_lss_generators(as_graph(h), c.d);
    return lss_generators(h, c.d);
  }
  if (!c.gens.empty()) {
    std::vector<Polynomial> polys = parse_polynomial_list(c.gens);
    GeneratorSet s;
    s.provenance = "explicit generators";
    for (const auto& f : polys) {
      if (f.space()) {
        s.space = f.space();
        break;
      }
    }
    if (!s.space) s.space = std::make_shared<const VariableSpace>(VariableSpace::plain({}));
    // Constants carry no space; rebuild everything over the common one.
    for (const auto& f : polys) s.generators.push_back(f.space() ? f : Polynomial(s.space) + f);
    return s;
  }
  throw UsageError("no ideal given (use --lss, --lss-example or --gens)");
}

void print_generators(const GeneratorSet& s, std::ostream& out) {
  out << "# " << s.provenance << '\n';
  for (const auto& f : s.generators) out << to_string(f) << '\n';
}

int cmd_gens(const RunConfig& c, std::ostream& out) {
  const GeneratorSet s = ideal_from_config(c);
  if (json_out(c)) {
    out << to_json(s).dump(2) << '\n';
  } else {
    print_generators(s, out);
  }
  return kExitOk;
}

int cmd_gb(const RunConfig& c, std::ostream& out) {
  const GeneratorSet s = ideal_from_config(c);
  const int n = s.space->size();
  MonomialOrder order = MonomialOrder::degrevlex(n);
  if (c.order == "lex") {
    order = MonomialOrder::lex(n);
  } else if (c.order != "degrevlex") {
    throw UsageError("--order must be degrevlex or lex");
  }
  const GroebnerBasis gb = buchberger(s, order, c.gb_budget);
  if (json_out(c)) {
    out << to_json(gb).dump(2) << '\n';
  } else {
    out << "# reduced Groebner basis, " << c.order << ", " << gb.basis.size() << " elements\n";
    for (const auto& f : gb.basis) out << to_string(f) << '\n';
  }
  return kExitOk;
}

int cmd_witness(const RunConfig& c, std::ostream& out) {
  const GeneratorSet j = ideal_from_config(c);
  if (c.g.empty() && c.pool.empty() && c.lss_example.empty()) {
    throw UsageError("give a candidate with --g or a pool with --pool");
  }
  std::optional<WitnessReport> report;
  std::size_t tried = 0;
  std::size_t inconclusive = 0;
  if (!c.g.empty() || c.pool.empty()) {
    ++tried;
    try {
      const Polynomial g =
          c.g.empty() ? nonradical_example(c.lss_example).witness : parse_polynomial(c.g, j.space);
      report = witness_test(j, g, c.gb_budget);
    } catch (const BudgetExhausted&) {
      ++inconclusive;
    }
  } else {
    GeneratorSet pool = parse_pool(c.pool, j);
    if (!c.lss_example.empty()) {
      const Polynomial w = nonradical_example(c.lss_example).witness;
      auto& gens = pool.generators;
      gens.erase(std::remove_if(gens.begin(), gens.end(),
                                [&](const Polynomial& f) { return f == w || f == -w; }),
                 gens.end());
      gens.insert(gens.begin(), w);
    }
    WitnessSearch search = search_witness(j, pool, c.gb_budget);
    tried = search.tried;
    inconclusive = search.inconclusive;
    report = std::move(search.found);
  }
  const bool certified = report && report->verdict;
  const bool exhausted = !certified && inconclusive > 0;
  if (json_out(c)) {
    nlohmann::json o;
    o["tried"] = tried;
    o["inconclusive"] = inconclusive;
    o["status"] = certified ? "witness" : (exhausted ? "inconclusive" : "no witness");
    o["report"] = report ? to_json(*report) : nlohmann::json(nullptr);
    out << o.dump(2) << '\n';
  } else if (certified) {
    out << "verdict: true (not radical)\n"
        << "g = " << to_string(report->g) << '\n'
        << "separating element: " << to_string(*report->separating) << '\n'
        << "seconds: " << report->seconds << '\n';
  } else if (exhausted) {
    out << "inconclusive: the Groebner budget ran out for " << inconclusive << " of " << tried << " candidates\n";
  } else {
    out << "verdict: false (no candidate separates J : g from J : g^2)\n";
  }
  return exhausted && c.strict ? kExitBudget : kExitOk;
}

void add_graph_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("name", c.positional, "Named graph such as K5, K3,4, B4, C6, P5, nrad1");
  sub->add_option("--named", c.named, "Named graph");
  sub->add_option("--graph", c.graph_file, "Graph or clutter file (text or JSON)");
  sub->add_option("--edges", c.edges, "Inline edges such as 1-2,2-3 or 'empty'");
}

void add_ideal_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--lss", c.lss, "Graph for L_G(d): a name, a file or inline edges");
  sub->add_option("--lss-example", c.lss_example, "nrad1, nrad2 or nrad3 at d=3")
      ->check(CLI::IsMember({"nrad1", "nrad2", "nrad3"}));
  sub->add_option("--gens", c.gens, "Comma-separated polynomials");
  sub->add_flag("--twisted", c.twisted, "Twisted generators instead of L_G(d)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Positive matching decompositions and LSS ideals", "lsstool"};
  app.require_subcommand(1);
  app.add_option("--d", c.d, "Dimension parameter d")->check(CLI::Range(1, 1 << 20));
  app.add_option("--prop", c.prop, "radical, ci or prime")->check(CLI::IsMember({"radical", "ci", "prime"}));
  app.add_option("--char", c.characteristic, "0, 2, p or any")->check(CLI::IsMember({"0", "2", "p", "any"}));
  app.add_option("--format", c.format, "human or json")->check(CLI::IsMember({"human", "json"}));
  app.add_option("--gb-budget", c.gb_budget, "Maximum S-pair reductions per Groebner basis")
      ->check(CLI::PositiveNumber);
  app.add_option("--pmd-budget", c.pmd_budget, "Search nodes for exact pmd")->check(CLI::PositiveNumber);
  app.add_flag("--strict", c.strict, "Exit with status 3 when a budget runs out");
  app.fallthrough();

  auto* pmd = app.add_subcommand("pmd", "Positive matching decomposition number");
  auto* cls = app.add_subcommand("classify", "Radical / ci / prime verdict for L_G(d)");
  auto* asym = app.add_subcommand("asym", "Bounds on the stabilisation point of ci or prime");
  auto* transfer = app.add_subcommand("transfer", "Consequences for determinantal coordinate sections");
  auto* gens = app.add_subcommand("gens", "Generators of an ideal");
  auto* gb = app.add_subcommand("gb", "Reduced Groebner basis");
  auto* witness = app.add_subcommand("witness", "Non-radicality witness test J : g != J : g^2");
  for (auto* sub : {pmd, cls, asym, transfer}) add_graph_options(sub, c);
  for (auto* sub : {gens, gb, witness}) add_ideal_options(sub, c);
  gb->add_option("--order", c.order, "degrevlex or lex");
  witness->add_option("--g", c.g, "Candidate polynomial");
  witness->add_option("--pool", c.pool, "Candidate pool, minors:k");
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitParse;
  }

  try {
    if (pmd->parsed()) return cmd_pmd(c, out);
    if (cls->parsed()) return cmd_classify(c, out);
    if (asym->parsed()) return cmd_asym(c, out);
    if (transfer->parsed()) return cmd_transfer(c, out);
    if (gens->parsed()) return cmd_gens(c, out);
    if (gb->parsed()) return cmd_gb(c, out);
    if (witness->parsed()) return cmd_witness(c, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const BudgetExhausted& e) {
    err << "budget exhausted: " << e.what() << '\n';
    if (c.strict) return kExitBudget;
    out << "inconclusive: " << e.what() << '\n';
    return kExitOk;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  }
  return kExitOk;
}

}  // namespace lss::cli
