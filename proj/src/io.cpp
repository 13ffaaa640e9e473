#include "fairdiv/io.hpp"

#include <json.hpp>

#include "fairdiv/errors.hpp"
#include "fairdiv/normalized_solver.hpp"
#include "fairdiv/normalized_three.hpp"
#include "fairdiv/predicates.hpp"
#include "fairdiv/unnormalized_three.hpp"

namespace fairdiv {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ValidationError("document: not valid JSON");
  return doc;
}

Rational field_rational(const json& value, const std::string& where) {
  if (!value.is_string()) throw ValidationError(where + ": rational must be a string");
  auto parsed = parse_rational(value.get<std::string>());
  if (!parsed) throw ValidationError(where + ": malformed or negative rational");
  return *parsed;
}

std::vector<Rational> field_row(const json& doc, const std::string& key, int m) {
  if (!doc.contains(key) || !doc[key].is_array())
    throw ValidationError(key + ": missing or not an array");
  if (static_cast<int>(doc[key].size()) != m)
    throw ValidationError(key + ": expected exactly m entries");
  std::vector<Rational> row;
  row.reserve(doc[key].size());
  for (std::size_t i = 0; i < doc[key].size(); ++i) {
    row.push_back(field_rational(doc[key][i], key + "[" + std::to_string(i) + "]"));
  }
  return row;
}

int field_int(const json& doc, const std::string& key) {
  if (!doc.contains(key) || !doc[key].is_number_integer())
    throw ValidationError(key + ": missing or not an integer");
  return doc[key].get<int>();
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

Instance parse_instance(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ValidationError("document: expected a JSON object");

  Instance inst;
  const int m = field_int(doc, "m");
  if (m < 0) throw ValidationError("m: must be non-negative");
  inst.n = field_int(doc, "n");
  inst.type_split = field_int(doc, "type_split");
  if (!doc.contains("normalized") || !doc["normalized"].is_boolean())
    throw ValidationError("normalized: missing or not a boolean");
  inst.normalized = doc["normalized"].get<bool>();
  inst.u_first = field_row(doc, "u_first", m);
  inst.u_second = field_row(doc, "u_second", m);
  validate_instance(inst);
  return inst;
}

std::string serialize_instance(const Instance& inst) {
  json doc;
  doc["m"] = inst.item_count();
  doc["n"] = inst.n;
  doc["normalized"] = inst.normalized;
  doc["type_split"] = inst.type_split;
  auto row = [](const std::vector<Rational>& values) {
    json arr = json::array();
    for (const auto& v : values) arr.push_back(format_rational(v));
    return arr;
  };
  doc["u_first"] = row(inst.u_first);
  doc["u_second"] = row(inst.u_second);
  return dump(doc);
}

Allocation parse_allocation(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("bundles") || !doc["bundles"].is_array())
    throw ValidationError("bundles: missing or not an array");

  Allocation alloc;
  std::set<int> seen;
  for (std::size_t i = 0; i < doc["bundles"].size(); ++i) {
    const auto& bundle = doc["bundles"][i];
    const std::string where = "bundles[" + std::to_string(i) + "]";
    if (!bundle.is_array()) throw ValidationError(where + ": not an array");
    std::set<int> items;
    for (const auto& entry : bundle) {
      if (!entry.is_number_integer() || entry.get<int>() < 0)
        throw ValidationError(where + ": item indices must be non-negative integers");
      const int g = entry.get<int>();
      if (!seen.insert(g).second)
        throw ValidationError(where + ": item " + std::to_string(g) +
                              " appears in more than one bundle or twice");
      items.insert(g);
    }
    alloc.bundles.push_back(std::move(items));
  }
  return alloc;
}

std::string serialize_allocation(const Allocation& alloc) {
  json doc;
  doc["bundles"] = json::array();
  for (const auto& bundle : alloc.bundles) {
    doc["bundles"].push_back(json(std::vector<int>(bundle.begin(), bundle.end())));
  }
  return dump(doc);
}

std::string serialize_solve_report(const SolveReport& report) {
  json doc;
  doc["algorithm"] = report.algorithm;
  doc["allocation"] = json::parse(serialize_allocation(report.allocation));
  doc["complete"] = report.complete;
  doc["ef1"] = report.ef1;
  if (report.oracle_opt) doc["oracle_opt"] = format_rational(*report.oracle_opt);
  if (report.ratio_bound_satisfied) doc["ratio_bound_satisfied"] = *report.ratio_bound_satisfied;
  doc["welfare"] = format_rational(report.welfare);
  return dump(doc);
}

SolveReport parse_solve_report(const std::string& text) {
  const json doc = parse_json(text);
  SolveReport report;
  if (!doc.contains("algorithm") || !doc["algorithm"].is_string())
    throw ValidationError("algorithm: missing or not a string");
  report.algorithm = doc["algorithm"].get<std::string>();
  report.welfare = field_rational(doc.value("welfare", json()), "welfare");
  if (doc.contains("oracle_opt"))
    report.oracle_opt = field_rational(doc["oracle_opt"], "oracle_opt");
  if (doc.contains("ratio_bound_satisfied")) {
    if (!doc["ratio_bound_satisfied"].is_boolean())
      throw ValidationError("ratio_bound_satisfied: not a boolean");
    report.ratio_bound_satisfied = doc["ratio_bound_satisfied"].get<bool>();
  }
  if (!doc.contains("ef1") || !doc["ef1"].is_boolean())
    throw ValidationError("ef1: missing or not a boolean");
  report.ef1 = doc["ef1"].get<bool>();
  if (!doc.contains("complete") || !doc["complete"].is_boolean())
    throw ValidationError("complete: missing or not a boolean");
  report.complete = doc["complete"].get<bool>();
  if (!doc.contains("allocation"))
    throw ValidationError("allocation: missing");
  report.allocation = parse_allocation(doc["allocation"].dump());
  return report;
}

std::string serialize_oracle_report(const OracleReport& report) {
  json doc;
  doc["best_allocation"] = json::parse(serialize_allocation(report.best_alloc));
  doc["ef1_count"] = report.ef1_count;
  doc["opt_ef1"] = format_rational(report.opt_ef1);
  doc["unconstrained_max"] = format_rational(report.unconstrained_max);
  return dump(doc);
}

OracleReport parse_oracle_report(const std::string& text) {
  const json doc = parse_json(text);
  OracleReport report;
  report.opt_ef1 = field_rational(doc.value("opt_ef1", json()), "opt_ef1");
  report.unconstrained_max =
      field_rational(doc.value("unconstrained_max", json()), "unconstrained_max");
  if (!doc.contains("ef1_count") || !doc["ef1_count"].is_number_integer())
    throw ValidationError("ef1_count: missing or not an integer");
  report.ef1_count = doc["ef1_count"].get<long long>();
  if (!doc.contains("best_allocation")) throw ValidationError("best_allocation: missing");
  report.best_alloc = parse_allocation(doc["best_allocation"].dump());
  return report;
}

std::string choose_algorithm(const Instance& inst, const std::string& requested) {
  if (requested == "approx1" || requested == "three-unnorm" || requested == "three-norm")
    return requested;
  if (requested != "auto")
    throw ValidationError("algo: unknown algorithm '" + requested + "'");
  if (inst.n == 3) return inst.normalized ? "three-norm" : "three-unnorm";
  if (inst.normalized) return "approx1";
  throw ValidationError("algo: no algorithm applies to unnormalized utilities with n != 3");
}

SolveReport run_solve(const Instance& inst, const std::string& algorithm, bool with_oracle,
                      const SolverHooks& hooks) {
  SolveReport report;
  report.algorithm = algorithm;
  if (algorithm == "approx1") {
    report.allocation = solve_normalized(inst, hooks);
  } else if (algorithm == "three-unnorm") {
    report.allocation = solve_three_unnormalized(inst, hooks).alloc;
  } else if (algorithm == "three-norm") {
    report.allocation = solve_three_normalized(inst, hooks);
  } else {
    throw ValidationError("algo: unknown algorithm '" + algorithm + "'");
  }

  report.welfare = social_welfare(inst, report.allocation);
  report.ef1 = is_ef1(inst, report.allocation);
  report.complete = is_complete(report.allocation, inst.item_count());
  if (with_oracle) {
    const auto oracle = brute_force_opt_ef1(inst);
    report.oracle_opt = oracle.opt_ef1;
    report.ratio_bound_satisfied = algorithm == "three-norm"
                                       ? 5 * report.welfare >= 3 * oracle.opt_ef1
                                       : 2 * report.welfare >= oracle.opt_ef1;
  }
  return report;
}

}  // namespace fairdiv
