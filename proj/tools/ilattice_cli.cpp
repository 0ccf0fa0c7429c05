// ilattice: audits, counterexample search and logic queries on finite
// universes of indistinguishable atoms.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ilattice/ilattice.hpp"

namespace {

  using namespace ilattice;

  struct Options {
    std::string              universe;
    std::string              mode = "both";
    std::string              law = "all";
    bool                     exhaustive = false;
    std::optional<std::uint64_t> samples;
    std::uint64_t            seed = 0;
    std::size_t              max_atoms = 4;
    std::optional<std::string> formula;
    std::optional<std::string> valuation;
    std::optional<std::string> gamma;
    std::string              format = "table";
    std::size_t              depth = 2;
    bool                     closed_valuations = false;
  };

  /// Bad flag value found after parsing.
  struct UsageError : Error {
    using Error::Error;
  };

  void add_universe(CLI::App& app, Options& o) {
    app.add_option("--universe", o.universe,
                   "universe file (default: one block {x1,x2})");
  }

  void add_mode(CLI::App& app, Options& o) {
    app.add_option("--mode", o.mode, "meet reading")
        ->check(CLI::IsMember({"literal", "closure", "both"}));
  }

  void add_format(CLI::App& app, Options& o) {
    app.add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "table"}));
  }

  void add_strategy(CLI::App& app, Options& o) {
    auto* ex = app.add_flag("--exhaustive", o.exhaustive, "walk every case (default)");
    auto* n  = app.add_option("--samples", o.samples, "number of random cases")
                  ->check(CLI::PositiveNumber);
    ex->excludes(n);
    app.add_option("--seed", o.seed, "seed for --samples");
  }

  void add_domain(CLI::App& app, Options& o) {
    app.add_flag("--closed-valuations", o.closed_valuations,
                 "assign only closed qsets to atoms");
  }

  Universe universe_of(Options const& o) {
    if (o.universe.empty()) {
      return Universe::build({{"x1", AtomKind::m}, {"x2", AtomKind::m}},
                             {{"x1", "x2"}});
    }
    return load_universe(o.universe);
  }

  std::vector<OpMode> modes_of(Options const& o) {
    if (o.mode == "both") {
      return {OpMode::literal, OpMode::closure};
    }
    return {*parse_mode(o.mode)};
  }

  CheckStrategy strategy_of(Options const& o) {
    return o.samples ? CheckStrategy::sampled(*o.samples, o.seed)
                     : CheckStrategy::exhaustive();
  }

  ValuationDomain domain_of(Options const& o) {
    return o.closed_valuations ? ValuationDomain::closed_only
                               : ValuationDomain::all_subsets;
  }

  Formula formula_of(Options const& o) {
    if (!o.formula) {
      throw UsageError("--formula is required");
    }
    try {
      return parse_formula(*o.formula);
    } catch (ParseError const& e) {
      throw UsageError(std::string("--formula: ") + e.what());
    }
  }

  std::vector<LawSpec> laws_of(Options const& o) {
    if (o.law == "all") {
      return law_registry();
    }
    try {
      return {find_law(o.law)};
    } catch (Error const& e) {
      throw UsageError(std::string("--law: ") + e.what());
    }
  }

  void emit(Options const& o, Json doc, std::string const& table) {
    if (o.format == "json") {
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << table;
    }
  }

  Json with_command(std::string const& command, Json body) {
    Json doc{{"schema", kReportSchema}, {"command", command}};
    for (auto& [key, value] : body.items()) {
      doc[key] = value;
    }
    return doc;
  }

  void run_audit(Options const& o, std::string const& command) {
    auto const u     = universe_of(o);
    auto const table = audit(u, modes_of(o), strategy_of(o),
                             BudgetPolicy::propagate, laws_of(o));
    std::string text = "universe " + u.digest() + "\n" + render_table(table);
    Json        doc  = audit_to_json(table);
    emit(o, with_command(command, doc), text);
  }

  void run_search(Options const& o) {
    if (o.law == "all") {
      throw UsageError("--law must name one law");
    }
    auto const law = laws_of(o).front();
    if (o.max_atoms < 1 || o.max_atoms > kMaxPartitionAtoms) {
      throw UsageError("--max-atoms must be in 1.."
                       + std::to_string(kMaxPartitionAtoms));
    }
    auto modes = modes_of(o);
    if (law.mode_sensitivity == ModeSensitivity::mode_free) {
      modes = {OpMode::closure};
    }
    AuditTable                            found;
    Json                                  searched = Json::array();
    std::vector<std::vector<std::string>> rows{
        {"law", "mode", "result", "universe", "counterexample"}};
    for (auto mode : modes) {
      auto const result = search_counterexample(law, mode, o.max_atoms);
      auto const label  = mode_label(law.mode_sensitivity == ModeSensitivity::per_mode
                                         ? std::optional{mode}
                                         : std::nullopt);
      if (result) {
        found.rows.push_back(result->report);
        std::string witness;
        for (std::size_t i = 0; i < result->report.counterexample->size(); ++i) {
          witness += (i ? " " : "") + variable_name(i) + "="
                     + render_qset((*result->report.counterexample)[i]);
        }
        rows.push_back({law.name, label, "found", result->universe.digest(), witness});
        searched.push_back({{"mode", label},
                            {"found", true},
                            {"universe", universe_to_json(result->universe)}});
      } else {
        rows.push_back({law.name, label, "none found", "-", "-"});
        searched.push_back({{"mode", label}, {"found", false}});
      }
    }
    Json doc        = audit_to_json(found);
    doc["max_atoms"] = o.max_atoms;
    doc["searched"] = searched;
    emit(o, with_command("search", doc), render_columns(rows));
  }

  void run_eval(Options const& o) {
    auto const u = universe_of(o);
    auto const f = formula_of(o);
    if (!o.valuation) {
      throw UsageError("--valuation is required");
    }
    auto const v = load_valuation(*o.valuation, u);
    for (auto const& name : f.atoms()) {
      if (!v.assignment().contains(name)) {
        throw UsageError(*o.valuation + ": no value for atom '" + name + "'");
      }
    }
    Json                                  results = Json::array();
    std::vector<std::vector<std::string>> rows{{"mode", "value", "true"}};
    for (auto mode : modes_of(o)) {
      auto const value = eval(f, v, mode);
      bool const truth = value == one(u);
      results.push_back({{"mode", to_string(mode)},
                         {"value", qset_to_json(value)},
                         {"true", truth}});
      rows.push_back({to_string(mode), render_qset(value), truth ? "yes" : "no"});
    }
    emit(o,
         with_command("eval", {{"universe_digest", u.digest()},
                               {"formula", render(f)},
                               {"valuation", valuation_to_json(v)},
                               {"results", results}}),
         render(f) + "\n" + render_columns(rows));
  }

  void run_valid(Options const& o) {
    auto const u = universe_of(o);
    auto const f = formula_of(o);
    Json       results = Json::array();
    std::vector<std::vector<std::string>> rows{
        {"mode", "verdict", "valuations", "witness"}};
    for (auto mode : modes_of(o)) {
      auto const r = is_valid(u, f, strategy_of(o), mode, domain_of(o));
      Json       row{{"mode", to_string(mode)},
                     {"verdict", r.verdict ? "valid" : "invalid"},
                     {"valuations_checked", r.valuations_checked}};
      if (r.witness) {
        row["witness"] = valuation_to_json(*r.witness);
      }
      results.push_back(row);
      rows.push_back({to_string(mode), r.verdict ? "valid" : "invalid",
                      std::to_string(r.valuations_checked),
                      r.witness ? render_valuation(*r.witness) : "-"});
    }
    emit(o,
         with_command("valid", {{"universe_digest", u.digest()},
                                {"formula", render(f)},
                                {"closed_valuations", o.closed_valuations},
                                {"results", results}}),
         render(f) + "\n" + render_columns(rows));
  }

  Json formula_list(std::vector<Formula> const& fs) {
    Json out = Json::array();
    for (auto const& f : fs) {
      out.push_back(render(f));
    }
    return out;
  }

  void run_consequence(Options const& o) {
    auto const u     = universe_of(o);
    auto const gamma = o.gamma ? load_gamma(*o.gamma) : std::vector<Formula>{};
    Json       results = Json::array();
    std::string text;
    if (o.formula) {
      auto const alpha = formula_of(o);
      std::vector<std::vector<std::string>> rows{
          {"mode", "verdict", "valuations", "witness"}};
      for (auto mode : modes_of(o)) {
        auto const r = semantic_consequence(u, gamma, alpha, strategy_of(o),
                                            mode, domain_of(o));
        Json row{{"mode", to_string(mode)},
                 {"relation", to_string(r.relation)},
                 {"verdict", r.verdict},
                 {"valuations_checked", r.valuations_checked}};
        if (r.witness) {
          row["witness"] = valuation_to_json(*r.witness);
        }
        results.push_back(row);
        rows.push_back({to_string(mode), r.verdict ? "follows" : "does not follow",
                        std::to_string(r.valuations_checked),
                        r.witness ? render_valuation(*r.witness) : "-"});
      }
      text = render_columns(rows);
      emit(o,
           with_command("consequence", {{"universe_digest", u.digest()},
                                        {"gamma", formula_list(gamma)},
                                        {"formula", render(alpha)},
                                        {"results", results}}),
           text);
      return;
    }
    std::set<std::string> names;
    for (auto const& g : gamma) {
      names.merge(g.atoms());
    }
    if (names.empty()) {
      names.insert("a");
    }
    auto const f0 = generate_formulas({names.begin(), names.end()}, o.depth);
    for (auto mode : modes_of(o)) {
      auto const closure = cn(u, gamma, f0, strategy_of(o), mode, domain_of(o));
      results.push_back({{"mode", to_string(mode)}, {"cn", formula_list(closure)}});
      text += std::string(to_string(mode)) + ": " + std::to_string(closure.size())
              + " of " + std::to_string(f0.size()) + " formulas\n";
      for (auto const& f : closure) {
        text += "  " + render(f) + "\n";
      }
    }
    emit(o,
         with_command("consequence", {{"universe_digest", u.digest()},
                                      {"gamma", formula_list(gamma)},
                                      {"depth", o.depth},
                                      {"formula_count", f0.size()},
                                      {"results", results}}),
         text);
  }

  void run_probe(Options const& o) {
    auto const u        = universe_of(o);
    auto const strategy = strategy_of(o);
    auto const table    = audit(u, modes_of(o), strategy, BudgetPolicy::propagate,
                                {find_law("modularity-probe")});
    auto const f0       = generate_formulas({"a", "b"}, o.depth);

    Json deduction = Json::array();
    std::vector<std::vector<std::string>> rows{
        {"mode", "result", "gamma", "alpha", "beta"}};
    for (auto mode : modes_of(o)) {
      ConsequenceOperator const op(u, f0, strategy, mode, domain_of(o));
      auto const                r = deduction_theorem_probe(op);
      Json row{{"mode", to_string(mode)},
               {"value_classes", r.value_classes},
               {"triples_checked", r.triples_checked}};
      if (r.witness) {
        row["result"] = "witness";
        row["gamma"]  = formula_list(r.witness->gamma);
        row["alpha"]  = render(r.witness->alpha);
        row["beta"]   = render(r.witness->beta);
        rows.push_back({to_string(mode), "witness",
                        r.witness->gamma.empty() ? "{}"
                                                 : "{" + render(r.witness->gamma[0]) + "}",
                        render(r.witness->alpha), render(r.witness->beta)});
      } else {
        row["result"] = "none found";
        rows.push_back({to_string(mode), "none found", "-", "-", "-"});
      }
      deduction.push_back(row);
    }
    Json doc        = audit_to_json(table);
    doc["depth"]     = o.depth;
    doc["deduction"] = deduction;
    emit(o, with_command("probe", doc),
         "universe " + u.digest() + "\n" + render_table(table)
             + "\ndeduction theorem over " + std::to_string(f0.size())
             + " formulas\n" + render_columns(rows));
  }

}  // namespace

int main(int argc, char** argv) {
  Options  o;
  CLI::App app{"Audits and logic queries on finite universes of indistinguishable atoms",
               "ilattice"};
  app.require_subcommand(0, 1);
  add_universe(app, o);
  add_mode(app, o);
  add_format(app, o);
  add_strategy(app, o);

  auto* check = app.add_subcommand("check", "check laws on one universe");
  auto* aud   = app.add_subcommand("audit", "check the whole registry");
  auto* srch  = app.add_subcommand("search", "find the smallest universe violating a law");
  auto* ev    = app.add_subcommand("eval", "evaluate a formula under a valuation");
  auto* val   = app.add_subcommand("valid", "decide validity of a formula");
  auto* cons  = app.add_subcommand("consequence", "semantic consequence and Cn");
  auto* probe = app.add_subcommand("probe", "modularity and deduction theorem probes");

  for (auto* sub : {check, aud, srch, ev, val, cons, probe}) {
    add_mode(*sub, o);
    add_format(*sub, o);
    if (sub != srch) {
      add_universe(*sub, o);
    }
    if (sub != srch && sub != ev) {
      add_strategy(*sub, o);
    }
  }
  check->add_option("--law", o.law, "law name or 'all'");
  srch->add_option("--law", o.law, "law name")->required();
  srch->add_option("--max-atoms", o.max_atoms, "largest universe tried");
  ev->add_option("--formula", o.formula, "formula text");
  ev->add_option("--valuation", o.valuation, "valuation file");
  for (auto* sub : {val, cons}) {
    sub->add_option("--formula", o.formula, "formula text");
    add_domain(*sub, o);
  }
  cons->add_option("--gamma", o.gamma, "premise file, one formula per line");
  cons->add_option("--depth", o.depth, "formula depth for Cn");
  probe->add_option("--depth", o.depth, "formula depth");
  add_domain(*probe, o);

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    std::cerr << "ilattice: " << e.what() << "\n";
    return 1;
  }

  try {
    if (check->parsed()) {
      run_audit(o, "check");
    } else if (srch->parsed()) {
      run_search(o);
    } else if (ev->parsed()) {
      run_eval(o);
    } else if (val->parsed()) {
      run_valid(o);
    } else if (cons->parsed()) {
      run_consequence(o);
    } else if (probe->parsed()) {
      run_probe(o);
    } else {
      run_audit(o, "audit");
    }
  } catch (BudgetExceeded const& e) {
    std::cerr << "ilattice: " << e.what() << "\n";
    return 2;
  } catch (std::exception const& e) {
    std::cerr << "ilattice: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
