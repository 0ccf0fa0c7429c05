#pragma once

/// @file
/// Universe, valuation and premise files, JSON reports and plain-text
/// tables.
///
/// Universe file:
///
///     {"atoms": [{"id": "x1", "kind": "m"}, ...],
///      "blocks": [["x1", "x2"], ...]}
///
/// Valuation file: {"a": ["x1"], "b": []}. Premise file: one formula per
/// line, blank lines ignored.

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ilattice/error.hpp"
#include "ilattice/formula.hpp"
#include "ilattice/logic.hpp"
#include "ilattice/universe.hpp"
#include "ilattice/verifier.hpp"

namespace ilattice {

  using Json = nlohmann::ordered_json;

  inline constexpr int kReportSchema = 1;

  /// Malformed or unreadable input file.
  class InputError : public Error {
   public:
    using Error::Error;
  };

  namespace detail {
    inline void require_fields(Json const&                   object,
                               std::set<std::string> const&  allowed,
                               std::string const&            where) {
      if (!object.is_object()) {
        throw InputError(where + ": expected an object");
      }
      for (auto const& [key, _] : object.items()) {
        if (!allowed.contains(key)) {
          throw InputError(where + ": unknown field '" + key + "'");
        }
      }
      for (auto const& key : allowed) {
        if (!object.contains(key)) {
          throw InputError(where + ": missing field '" + key + "'");
        }
      }
    }

    inline std::string read_text(std::string const& path) {
      std::ifstream in(path);
      if (!in) {
        throw InputError(path + ": cannot open file");
      }
      std::ostringstream buffer;
      buffer << in.rdbuf();
      return buffer.str();
    }

    inline Json parse_json(std::string const& text, std::string const& where) {
      try {
        return Json::parse(text);
      } catch (Json::parse_error const& e) {
        throw InputError(where + ": malformed JSON (" + e.what() + ")");
      }
    }

    inline std::vector<std::string> id_list(Json const& value,
                                            std::string const& where) {
      if (!value.is_array()) {
        throw InputError(where + ": expected a list of atom ids");
      }
      std::vector<std::string> ids;
      for (auto const& id : value) {
        if (!id.is_string()) {
          throw InputError(where + ": atom ids must be strings");
        }
        ids.push_back(id.get<std::string>());
      }
      return ids;
    }
  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Universes
  ////////////////////////////////////////////////////////////////////////

  inline Universe universe_from_json(Json const& doc, std::string const& where = "universe") {
    detail::require_fields(doc, {"atoms", "blocks"}, where);
    if (!doc["atoms"].is_array()) {
      throw InputError(where + ": 'atoms' must be a list");
    }
    std::vector<Atom> atoms;
    for (auto const& a : doc["atoms"]) {
      detail::require_fields(a, {"id", "kind"}, where + " atom");
      if (!a["id"].is_string() || !a["kind"].is_string()) {
        throw InputError(where + ": atom id and kind must be strings");
      }
      auto const kind = a["kind"].get<std::string>();
      if (kind != "m" && kind != "M") {
        throw InputError(where + ": atom kind must be \"m\" or \"M\", got \""
                         + kind + "\"");
      }
      atoms.push_back({a["id"].get<std::string>(),
                       kind == "m" ? AtomKind::m : AtomKind::M});
    }
    if (!doc["blocks"].is_array()) {
      throw InputError(where + ": 'blocks' must be a list");
    }
    std::vector<std::vector<std::string>> blocks;
    for (auto const& b : doc["blocks"]) {
      blocks.push_back(detail::id_list(b, where + " block"));
    }
    try {
      return Universe::build(std::move(atoms), std::move(blocks));
    } catch (UniverseError const& e) {
      throw InputError(where + ": " + e.what());
    }
  }

  inline Json universe_to_json(Universe const& u) {
    Json atoms = Json::array();
    for (auto const& a : u.atoms()) {
      atoms.push_back({{"id", a.id}, {"kind", to_string(a.kind)}});
    }
    Json blocks = Json::array();
    for (std::size_t b = 0; b < u.block_count(); ++b) {
      blocks.push_back(u.from_mask(u.block_mask(b)).ids());
    }
    return {{"atoms", atoms}, {"blocks", blocks}};
  }

  inline Universe load_universe(std::string const& path) {
    return universe_from_json(detail::parse_json(detail::read_text(path), path), path);
  }

  ////////////////////////////////////////////////////////////////////////
  // Valuations and premises
  ////////////////////////////////////////////////////////////////////////

  inline Valuation valuation_from_json(Json const&        doc,
                                       Universe const&    u,
                                       std::string const& where = "valuation") {
    if (!doc.is_object()) {
      throw InputError(where + ": expected an object mapping atoms to id lists");
    }
    Valuation v(u);
    for (auto const& [name, ids] : doc.items()) {
      auto const list = detail::id_list(ids, where + " '" + name + "'");
      for (auto const& id : list) {
        if (!u.contains_id(id)) {
          throw InputError(where + ": '" + name + "' names unknown atom '"
                           + id + "'");
        }
      }
      v.assign(name, u.qset(list));
    }
    return v;
  }

  inline Valuation load_valuation(std::string const& path, Universe const& u) {
    return valuation_from_json(detail::parse_json(detail::read_text(path), path), u, path);
  }

  inline std::vector<Formula> parse_gamma(std::string const& text,
                                          std::string const& where = "premises") {
    std::vector<Formula> out;
    std::istringstream   in(text);
    std::string          line;
    std::size_t          number = 0;
    while (std::getline(in, line)) {
      ++number;
      if (std::ranges::all_of(line, [](unsigned char c) { return std::isspace(c); })) {
        continue;
      }
      try {
        out.push_back(parse_formula(line));
      } catch (ParseError const& e) {
        throw InputError(where + ":" + std::to_string(number) + ": " + e.what());
      }
    }
    return out;
  }

  inline std::vector<Formula> load_gamma(std::string const& path) {
    return parse_gamma(detail::read_text(path), path);
  }

  ////////////////////////////////////////////////////////////////////////
  // Reports
  ////////////////////////////////////////////////////////////////////////

  inline Json qset_to_json(QSet const& q) {
    return q.ids();
  }

  inline Json valuation_to_json(Valuation const& v) {
    Json out = Json::object();
    for (auto const& [name, value] : v.assignment()) {
      out[name] = qset_to_json(value);
    }
    return out;
  }

  inline Json report_to_json(LawReport const& r) {
    Json row{{"law", r.law},
             {"mode", mode_label(r.mode)},
             {"universe_digest", r.universe_digest},
             {"status", to_string(r.status)},
             {"cases_checked", r.cases_checked}};
    if (r.status == LawStatus::fails && r.counterexample) {
      Json tuple = Json::object();
      for (std::size_t i = 0; i < r.counterexample->size(); ++i) {
        tuple[variable_name(i)] = qset_to_json((*r.counterexample)[i]);
      }
      row["counterexample"] = tuple;
    }
    row["minimal"] = r.minimal;
    return row;
  }

  inline Json audit_to_json(AuditTable const& table) {
    Json rows = Json::array();
    for (auto const& r : table.rows) {
      rows.push_back(report_to_json(r));
    }
    return {{"schema", kReportSchema}, {"rows", rows}};
  }

  /// Problems with a report document; empty when it conforms to the
  /// schema.
  inline std::vector<std::string> validate_report(Json const& doc) {
    std::vector<std::string> problems;
    auto problem = [&](std::string text) { problems.push_back(std::move(text)); };
    if (!doc.is_object()) {
      problem("document is not an object");
      return problems;
    }
    if (!doc.contains("schema") || doc["schema"] != kReportSchema) {
      problem("'schema' must be 1");
    }
    if (!doc.contains("rows") || !doc["rows"].is_array()) {
      problem("'rows' must be a list");
      return problems;
    }
    static std::set<std::string> const fields{"law", "mode", "universe_digest",
                                              "status", "cases_checked",
                                              "counterexample", "minimal"};
    std::size_t index = 0;
    for (auto const& row : doc["rows"]) {
      std::string const at = "row " + std::to_string(index++) + ": ";
      if (!row.is_object()) {
        problem(at + "not an object");
        continue;
      }
      for (auto const& [key, _] : row.items()) {
        if (!fields.contains(key)) {
          problem(at + "unknown field '" + key + "'");
        }
      }
      for (auto const* key : {"law", "mode", "universe_digest", "status"}) {
        if (!row.contains(key) || !row[key].is_string()) {
          problem(at + "'" + key + "' must be a string");
        }
      }
      if (!row.contains("cases_checked") || !row["cases_checked"].is_number_unsigned()) {
        problem(at + "'cases_checked' must be a non-negative integer");
      }
      if (!row.contains("minimal") || !row["minimal"].is_boolean()) {
        problem(at + "'minimal' must be a boolean");
      }
      if (row.contains("mode") && row["mode"].is_string()) {
        auto const mode = row["mode"].get<std::string>();
        if (mode != "literal" && mode != "closure" && mode != "n/a") {
          problem(at + "unknown mode '" + mode + "'");
        }
      }
      if (row.contains("status") && row["status"].is_string()) {
        auto const status = row["status"].get<std::string>();
        if (status != "holds" && status != "fails" && status != "skipped") {
          problem(at + "unknown status '" + status + "'");
        }
        bool const has_tuple = row.contains("counterexample");
        if ((status == "fails") != has_tuple) {
          problem(at + "'counterexample' must be present iff status is fails");
        }
        if (has_tuple) {
          auto const& tuple = row["counterexample"];
          bool        ok    = tuple.is_object() && !tuple.empty();
          if (ok) {
            for (auto const& [name, ids] : tuple.items()) {
              ok = ok && name.size() == 1 && ids.is_array()
                   && std::ranges::all_of(ids, [](auto const& id) { return id.is_string(); });
            }
          }
          if (!ok) {
            problem(at + "'counterexample' must map variable names to id lists");
          }
        }
      }
    }
    return problems;
  }

  ////////////////////////////////////////////////////////////////////////
  // Tables
  ////////////////////////////////////////////////////////////////////////

  inline std::string render_qset(QSet const& q) {
    std::string out = "{";
    auto const  ids = q.ids();
    for (std::size_t i = 0; i < ids.size(); ++i) {
      out += (i ? "," : "") + ids[i];
    }
    return out + "}";
  }

  /// Left-aligned columns separated by two spaces.
  inline std::string render_columns(std::vector<std::vector<std::string>> const& rows) {
    std::vector<std::size_t> width;
    for (auto const& row : rows) {
      width.resize(std::max(width.size(), row.size()), 0);
      for (std::size_t c = 0; c < row.size(); ++c) {
        width[c] = std::max(width[c], row[c].size());
      }
    }
    std::string out;
    for (auto const& row : rows) {
      std::string line;
      for (std::size_t c = 0; c < row.size(); ++c) {
        line += row[c];
        if (c + 1 < row.size()) {
          line += std::string(width[c] - row[c].size() + 2, ' ');
        }
      }
      out += line + "\n";
    }
    return out;
  }

  inline std::string render_table(AuditTable const& table) {
    std::vector<std::vector<std::string>> rows{
        {"law", "mode", "status", "cases", "counterexample"}};
    for (auto const& r : table.rows) {
      std::string witness = "-";
      if (r.status == LawStatus::fails && r.counterexample) {
        witness.clear();
        for (std::size_t i = 0; i < r.counterexample->size(); ++i) {
          witness += (i ? " " : "") + variable_name(i) + "="
                     + render_qset((*r.counterexample)[i]);
        }
      }
      rows.push_back({r.law, mode_label(r.mode), to_string(r.status),
                      std::to_string(r.cases_checked), witness});
    }
    return render_columns(rows);
  }

  inline std::string render_valuation(Valuation const& v) {
    std::string out;
    for (auto const& [name, value] : v.assignment()) {
      out += (out.empty() ? "" : " ") + name + "=" + render_qset(value);
    }
    return out;
  }

}  // namespace ilattice
