#include "fixspace/json_io.hpp"

#include <fstream>
#include <sstream>

#include "fixspace/error.hpp"

namespace fixspace::json_io {

namespace {

std::int64_t as_i64(std::size_t v) { return static_cast<std::int64_t>(v); }

[[noreturn]] void parse_error(const std::string& message, Error::Witness witness = {}) {
  throw Error("ParseError", message, std::move(witness));
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) parse_error(std::string("expected an object with key '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) parse_error(std::string("missing key '") + key + "'");
  return *it;
}

std::size_t index_value(const Json& j, const std::string& what) {
  if (!j.is_number_unsigned()) parse_error(what + " must be a non-negative integer");
  return j.get<std::size_t>();
}

std::vector<std::size_t> index_array(const Json& j, const std::string& what) {
  if (!j.is_array()) parse_error(what + " must be an array");
  std::vector<std::size_t> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(index_value(v, what + " entry"));
  return out;
}

std::vector<std::vector<std::size_t>> index_matrix(const Json& j, const std::string& what) {
  if (!j.is_array()) parse_error(what + " must be an array of arrays");
  std::vector<std::vector<std::size_t>> out;
  out.reserve(j.size());
  for (const auto& row : j) out.push_back(index_array(row, what + " row"));
  return out;
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  parse_error("a scalar part must be a string \"p/q\" or an integer");
}

}  // namespace

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    parse_error(std::string("invalid JSON: ") + e.what(), {{"byte", as_i64(e.byte)}});
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str());
}

Report scalar_to_json(const GaussianRational& z) { return Report::array({z.re().to_string(), z.im().to_string()}); }

GaussianRational scalar_from_json(const Json& j) {
  if (j.is_array()) {
    if (j.size() != 2) parse_error("a scalar pair must have exactly two parts");
    return {rational_from_json(j[0]), rational_from_json(j[1])};
  }
  return GaussianRational(rational_from_json(j));
}

Report scalars_to_json(const std::vector<GaussianRational>& values) {
  Report out = Report::array();
  for (const auto& v : values) out.push_back(scalar_to_json(v));
  return out;
}

FiniteGroup group_from_json(const Json& j, std::size_t cap) {
  const Json& kind = field(j, "kind");
  if (kind == "table") {
    GroupTable t;
    t.mul = index_matrix(field(j, "mul"), "mul");
    if (j.contains("labels")) {
      if (!j["labels"].is_array()) parse_error("labels must be an array of strings");
      for (const auto& l : j["labels"]) {
        if (!l.is_string()) parse_error("labels must be an array of strings");
        t.labels.push_back(l.get<std::string>());
      }
    }
    return FiniteGroup::validate(t);
  }
  if (kind == "permutation") {
    const std::size_t degree = index_value(field(j, "degree"), "degree");
    const auto gens = index_matrix(field(j, "generators"), "generators");
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (gens[i].size() != degree)
        throw Error("ShapeMismatch", "generator length differs from degree",
                    {{"generator", as_i64(i)}, {"length", as_i64(gens[i].size())}});
    return FiniteGroup::from_generators(degree, gens, cap);
  }
  parse_error("group kind must be \"table\" or \"permutation\"");
}

Report group_to_json(const FiniteGroup& g) {
  Report out;
  if (g.is_permutation_group()) {
    out["kind"] = "permutation";
    out["degree"] = g.degree();
    out["generators"] = g.generators();
  } else {
    out["kind"] = "table";
    out["mul"] = g.table();
  }
  return out;
}

bool is_action_document(const Json& j) {
  return j.is_object() && j.contains("group") && (j.contains("act") || j.value("kind", "") == "evaluation");
}

GroupAction action_from_json(const Json& j, std::size_t cap) {
  FiniteGroup g = group_from_json(field(j, "group"), cap);
  if (j.contains("kind")) {
    if (j["kind"] != "evaluation") parse_error("action kind must be \"evaluation\"");
    return evaluation_action(g);
  }
  auto table = index_matrix(field(j, "act"), "act");
  if (j.contains("degree")) {
    const std::size_t degree = index_value(j["degree"], "degree");
    for (std::size_t a = 0; a < table.size(); ++a)
      if (table[a].size() != degree)
        throw Error("ShapeMismatch", "action row length differs from degree",
                    {{"element", as_i64(a)}, {"length", as_i64(table[a].size())}});
  }
  return GroupAction::validate(std::move(g), std::move(table));
}

Report action_to_json(const GroupAction& act) {
  Report out;
  out["group"] = group_to_json(act.group());
  out["degree"] = act.degree();
  out["act"] = act.table();
  return out;
}

FunctionOnX function_from_json(const Json& j, std::size_t degree) {
  const Json& values = field(j, "values");
  if (!values.is_array()) parse_error("values must be an array of scalars");
  if (values.size() != degree)
    throw Error("DegreeMismatch", "value count differs from the action degree",
                {{"values", as_i64(values.size())}, {"degree", as_i64(degree)}});
  std::vector<GaussianRational> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(scalar_from_json(v));
  return FunctionOnX(std::move(out));
}

Report function_to_json(const FunctionOnX& f) { return scalars_to_json(f.values()); }

bool has_subset(const Json& j) { return j.is_object() && j.contains("subset"); }

FunctionOnY function_on_subset_from_json(const Json& j, const GroupAction& act) {
  const auto points = index_array(field(j, "subset"), "subset");
  const InvariantSubset y = invariant_subset(act, points);
  if (y.size() != points.size()) parse_error("subset lists a point twice");
  const Json& values = field(j, "values");
  if (!values.is_array()) parse_error("values must be an array of scalars");
  if (values.size() != points.size())
    throw Error("DegreeMismatch", "value count differs from subset size",
                {{"values", as_i64(values.size())}, {"subset", as_i64(points.size())}});
  // Values follow the order in which the subset was listed.
  std::vector<GaussianRational> ordered(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) ordered[*y.position(points[i])] = scalar_from_json(values[i]);
  return make_function_on(y, std::move(ordered));
}

FunctionOnY function_on_subset_from_json(const Json& j, const InvariantSubset& y) {
  const Json& values = field(j, "values");
  if (!values.is_array()) parse_error("values must be an array of scalars");
  std::vector<GaussianRational> out;
  for (const auto& v : values) out.push_back(scalar_from_json(v));
  return make_function_on(y, std::move(out));
}

Partition partition_from_json(const Json& j) {
  return Partition::from_cells(index_value(field(j, "degree"), "degree"), index_matrix(field(j, "cells"), "cells"));
}

Report partition_to_json(const Partition& p) { return Report(p.cells()); }

std::vector<std::size_t> parse_index_list(const std::string& text, const std::string& what) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.size() > 9 || item.find_first_not_of("0123456789") != std::string::npos)
      parse_error(what + " must be a comma-separated list of indices");
    out.push_back(std::stoul(item));
  }
  return out;
}

}  // namespace fixspace::json_io
