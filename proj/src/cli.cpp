#include "fixspace/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "fixspace/corpus.hpp"
#include "fixspace/error.hpp"
#include "fixspace/json_io.hpp"
#include "fixspace/partition_group.hpp"
#include "fixspace/res_ind.hpp"

namespace fixspace::cli {

namespace {

using json_io::Json;
using json_io::Report;

struct Options {
  std::vector<std::string> inputs;
  std::vector<std::string> functions;
  std::string output;
  std::string subgroup;
  std::string subset;
  std::string params;
  std::string corpus_name;
  std::optional<std::size_t> cap;
  bool minimal_generators = false;
  bool csv = false;
};

std::size_t default_cap() {
  const char* env = std::getenv("FIXSPACE_CLOSURE_CAP");
  if (env == nullptr || *env == '\0') return kDefaultClosureCap;
  const std::string text(env);
  if (text.size() > 12 || text.find_first_not_of("0123456789") != std::string::npos)
    throw Error("ParseError", "FIXSPACE_CLOSURE_CAP must be a positive integer");
  return std::stoull(text);
}

class Session {
 public:
  explicit Session(const Options& o) : o_(o), cap_(o.cap ? *o.cap : default_cap()) {}

  const std::string& input(std::size_t i = 0) const {
    if (o_.inputs.size() <= i) throw Error("ParseError", "missing --input");
    return o_.inputs[i];
  }

  GroupAction action(std::size_t i = 0) const { return json_io::action_from_json(json_io::read_file(input(i)), cap_); }

  Subgroup subgroup(const GroupAction& act) const {
    const FiniteGroup& g = act.group();
    if (o_.subgroup.empty()) return Subgroup::whole(g);
    const auto seeds = json_io::parse_index_list(o_.subgroup, "--subgroup");
    for (Element s : seeds)
      if (s >= g.order()) throw Error("InvalidElement", "subgroup element out of range", {{"element", (std::int64_t)s}});
    return subgroup_generated(g, seeds);
  }

  FunctionOnX function(const GroupAction& act) const {
    if (o_.functions.empty()) throw Error("ParseError", "missing --function");
    return json_io::function_from_json(json_io::read_file(o_.functions.front()), act.degree());
  }

  std::size_t cap() const { return cap_; }
  const Options& options() const { return o_; }

 private:
  const Options& o_;
  std::size_t cap_;
};

Report cells_report(const Partition& p) { return json_io::partition_to_json(p); }

Report cmd_validate(const Session& s) {
  const Json doc = json_io::read_file(s.input());
  Report r;
  if (json_io::is_action_document(doc)) {
    const GroupAction act = json_io::action_from_json(doc, s.cap());
    r["valid"] = true;
    r["object"] = "action";
    r["group_order"] = act.group().order();
    r["degree"] = act.degree();
  } else {
    const FiniteGroup g = json_io::group_from_json(doc, s.cap());
    r["valid"] = true;
    r["object"] = "group";
    r["group_order"] = g.order();
    r["abelian"] = g.is_abelian();
  }
  return r;
}

Report cmd_orbits(const Session& s) {
  const GroupAction act = s.action();
  const Subgroup h = s.subgroup(act);
  const Partition p = orbits(act, h);
  Report stabilizers = Report::array();
  for (const auto& cell : p.cells()) stabilizers.push_back(h.order() / cell.size());
  Report r;
  r["group_order"] = h.order();
  r["degree"] = act.degree();
  r["orbit_count"] = p.size();
  r["orbits"] = cells_report(p);
  r["stabilizer_orders"] = stabilizers;
  r["transitive"] = p.size() == 1;
  r["trivial"] = p.size() == act.degree();
  return r;
}

Report cmd_dimension(const Session& s) {
  const GroupAction act = s.action();
  const Subgroup whole = Subgroup::whole(act.group());
  Report r;
  r["dim"] = burnside_dimension(act, whole).to_int64();
  r["burnside_sum"] = burnside_sum(act, whole);
  r["group_order"] = act.group().order();
  if (!s.options().subgroup.empty()) {
    const Subgroup h = s.subgroup(act);
    const DimensionDifference d = dimension_difference(act, h);
    Report sub;
    sub["elements"] = h.members();
    sub["dim"] = burnside_dimension(act, h).to_int64();
    sub["burnside_sum"] = burnside_sum(act, h);
    sub["order"] = h.order();
    r["subgroup"] = sub;
    r["difference"] = {{"dimension_side", d.dimension_side.to_string()},
                       {"fixed_point_side", d.fixed_point_side.to_string()}};
  }
  return r;
}

Report cmd_free_check(const Session& s) {
  const GroupAction act = s.action();
  const auto witness = non_free_witness(act);
  Report r;
  r["free"] = !witness.has_value();
  r["order_divides_degree"] = act.degree() % act.group().order() == 0;
  if (witness)
    r["witness"] = {{"element", witness->first}, {"point", witness->second}};
  else
    r["witness"] = nullptr;
  if (!witness && !s.options().subgroup.empty()) {
    const FreeRatio fr = free_ratio_check(act, s.subgroup(act));
    r["ratio"] = fr.ratio.to_string();
    r["index"] = fr.index;
  }
  return r;
}

std::string csv_fourier(const std::vector<FourierCoefficient>& coeffs) {
  std::string out = "cell,size,raw_sum_re,raw_sum_im,coefficient_norm_sq\n";
  for (const auto& c : coeffs)
    out += std::to_string(c.cell.front()) + "," + std::to_string(c.cell.size()) + "," + c.raw_sum.re().to_string() +
           "," + c.raw_sum.im().to_string() + "," + c.coefficient_norm_sq.to_string() + "\n";
  return out;
}

Report fourier_report(const GroupAction& act, const FunctionOnX& f, const std::vector<FourierCoefficient>& coeffs) {
  Report table = Report::array();
  for (const auto& c : coeffs) {
    Report row;
    row["cell"] = c.cell.front();
    row["size"] = c.cell.size();
    row["raw_sum"] = json_io::scalar_to_json(c.raw_sum);
    row["coefficient_norm_sq"] = c.coefficient_norm_sq.to_string();
    table.push_back(row);
  }
  Report r;
  r["coefficients"] = table;
  r["projection"] = json_io::function_to_json(fourier_projection(act, f));
  return r;
}

Report cmd_bessel(const Session& s) {
  const GroupAction act = s.action();
  const bool given = !s.options().functions.empty();
  const FunctionOnX f = given ? s.function(act) : strict_bessel_witness(act);
  const BesselCheck b = bessel_check(act, f);
  Report r;
  if (!given) r["witness"] = json_io::function_to_json(f);
  r["orbit_side"] = b.orbit_side.to_string();
  r["total_side"] = b.total_side.to_string();
  r["strict"] = b.strict();
  r["invariant"] = is_invariant(act, f).has_value();
  return r;
}

Report cmd_decompose(const Session& s) {
  const GroupAction act = s.action();
  const FunctionOnX f = s.function(act);
  const Decomposition d = decompose(act, f);
  Report r;
  r["sigma"] = json_io::scalar_to_json(sigma(f));
  r["invariant_part"] = json_io::function_to_json(d.invariant_part);
  r["perp_part"] = json_io::function_to_json(d.perp_part);
  r["mean_part"] = json_io::function_to_json(d.mean_part);
  r["kernel_part"] = json_io::function_to_json(d.kernel_part);
  r["invariant_kernel_part"] = json_io::function_to_json(d.invariant_kernel_part);
  return r;
}

Report cmd_reciprocity(const Session& s) {
  const GroupAction act = s.action();
  const auto& paths = s.options().functions;
  if (paths.size() != 2) throw Error("ParseError", "reciprocity needs two --function files (f on Y, g on X)");
  const Json first = json_io::read_file(paths[0]);
  const Json second = json_io::read_file(paths[1]);

  std::optional<FunctionOnY> f;
  const Json* g_doc = nullptr;
  if (json_io::has_subset(first) && !json_io::has_subset(second)) {
    f = json_io::function_on_subset_from_json(first, act);
    g_doc = &second;
  } else if (json_io::has_subset(second) && !json_io::has_subset(first)) {
    f = json_io::function_on_subset_from_json(second, act);
    g_doc = &first;
  } else if (!json_io::has_subset(first) && !json_io::has_subset(second) && !s.options().subset.empty()) {
    const InvariantSubset y = invariant_subset(act, json_io::parse_index_list(s.options().subset, "--subset"));
    f = json_io::function_on_subset_from_json(first, y);
    g_doc = &second;
  } else {
    throw Error("ParseError", "exactly one function must carry a \"subset\" (or pass --subset)");
  }
  const FunctionOnX g = json_io::function_from_json(*g_doc, act.degree());
  const ReciprocityReport rep = reciprocity_check(*f, g);
  Report r;
  r["lhs"] = json_io::scalar_to_json(rep.induced_side);
  r["rhs"] = json_io::scalar_to_json(rep.restricted_side);
  r["equal"] = rep.equal();
  r["f_invariant"] = rep.f_invariant;
  r["g_invariant"] = rep.g_invariant;
  r["induced"] = json_io::function_to_json(induce(*f));
  return r;
}

Report cmd_from_partition(const Session& s) {
  const Partition p = json_io::partition_from_json(json_io::read_file(s.input()));
  const PartitionGroup pg = group_from_partition(p, s.cap(), s.options().minimal_generators);
  Report r;
  r["group"] = {{"kind", "permutation"}, {"degree", p.degree()}, {"generators", pg.generators}};
  r["order"] = pg.group.order();
  r["orbits"] = cells_report(orbits(pg.action));
  r["round_trip"] = "ok";
  return r;
}

Report cmd_equivalence(const Session& s) {
  const GroupAction lhs = s.action(0);
  const GroupAction rhs = s.action(1);
  // Both files may describe the same permutation group independently.
  GroupAction rhs_on_lhs = rhs;
  if (!lhs.group().same_as(rhs.group())) {
    if (lhs.group().table() != rhs.group().table())
      throw Error("GroupMismatch", "the two actions are not over the same group table");
    rhs_on_lhs = GroupAction::validate(lhs.group(), rhs.table());
  }
  const auto phi = are_equivalent(lhs, rhs_on_lhs);
  Report r;
  r["equivalent"] = phi.has_value();
  r["bijection"] = phi ? Report(*phi) : Report(nullptr);
  r["dimensions"] = {burnside_dimension(lhs).to_int64(), burnside_dimension(rhs_on_lhs).to_int64()};
  return r;
}

CorpusParams parse_params(const std::string& text) {
  CorpusParams out;
  std::stringstream ss(text);
  std::string item;
  // Values may themselves contain commas (subgroup lists), so a segment
  // without '=' continues the previous value.
  std::string last_key;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      if (last_key.empty()) throw Error("ParseError", "--params expects key=value pairs");
      out[last_key] += "," + item;
      continue;
    }
    last_key = item.substr(0, eq);
    if (last_key.empty()) throw Error("ParseError", "--params expects key=value pairs");
    out[last_key] = item.substr(eq + 1);
  }
  return out;
}

Report cmd_corpus_list() {
  Report r = Report::array();
  for (const auto& info : corpus_list()) {
    Report entry;
    entry["name"] = info.name;
    entry["description"] = info.description;
    entry["defaults"] = info.defaults;
    entry["non_free_family"] = info.non_free_family;
    r.push_back(entry);
  }
  return r;
}

Report cmd_corpus_build(const Session& s) {
  const CorpusEntry e = build(s.options().corpus_name, parse_params(s.options().params));
  Report expected;
  if (e.expected.orbit_count) expected["orbit_count"] = *e.expected.orbit_count;
  if (e.expected.is_free) expected["is_free"] = *e.expected.is_free;
  if (e.expected.is_transitive) expected["is_transitive"] = *e.expected.is_transitive;
  if (e.expected.is_trivial) expected["is_trivial"] = *e.expected.is_trivial;
  if (expected.is_null()) expected = Report::object();
  Report r;
  r["name"] = e.name;
  r["description"] = e.description;
  r["params"] = e.params;
  r["expected"] = expected;
  r["order_divides_degree"] = e.order_divides_degree;
  const Report act = json_io::action_to_json(e.action);
  for (auto it = act.begin(); it != act.end(); ++it) r[it.key()] = it.value();
  return r;
}

Report error_report(const Error& e) {
  Report witness = Report::object();
  for (const auto& [k, v] : e.witness()) witness[k] = v;
  Report r;
  r["error"] = e.kind();
  r["message"] = e.message();
  r["witness"] = witness;
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Fixed function spaces of finite group actions"};
  app.require_subcommand(1);

  auto add_input = [&](CLI::App* c, bool required) {
    auto* opt = c->add_option("--input,-i", o.inputs, "input JSON file");
    if (required) opt->required();
  };
  auto add_common = [&](CLI::App* c) {
    c->add_option("--output,-o", o.output, "write the report here instead of stdout");
    c->add_option("--cap", o.cap, "closure size limit for permutation generators");
  };

  std::string text;  // rendered report for commands that are not JSON
  std::function<Report(const Session&)> handler;

  auto command = [&](const std::string& name, const std::string& help, auto fn) {
    CLI::App* c = app.add_subcommand(name, help);
    add_common(c);
    c->callback([&, fn] { handler = fn; });
    return c;
  };

  add_input(command("validate", "validate a group or action", cmd_validate), true);
  {
    auto* c = command("orbits", "orbit partition and stabilizer orders", cmd_orbits);
    add_input(c, true);
    c->add_option("--subgroup", o.subgroup, "comma-separated elements generating H");
  }
  {
    auto* c = command("dimension", "dimension of the fixed space by averaging fixed points", cmd_dimension);
    add_input(c, true);
    c->add_option("--subgroup", o.subgroup, "comma-separated elements generating H");
  }
  {
    auto* c = command("free-check", "freeness with a witness", cmd_free_check);
    add_input(c, true);
    c->add_option("--subgroup", o.subgroup, "report dim ratio and index for H when free");
  }
  {
    auto* c = command("fourier", "orbit Fourier coefficients and projection", [&](const Session& s) {
      const GroupAction act = s.action();
      const FunctionOnX f = s.function(act);
      const auto coeffs = fourier_coefficients(act, f);
      if (o.csv) text = csv_fourier(coeffs);
      return fourier_report(act, f, coeffs);
    });
    add_input(c, true);
    c->add_option("--function,-f", o.functions, "function JSON")->required();
    c->add_flag("--csv", o.csv, "emit the coefficient table as CSV");
  }
  {
    auto* c = command("bessel", "Bessel inequality (witness function if none given)", cmd_bessel);
    add_input(c, true);
    c->add_option("--function,-f", o.functions, "function JSON");
  }
  {
    auto* c = command("decompose", "orthogonal decompositions of a function", cmd_decompose);
    add_input(c, true);
    c->add_option("--function,-f", o.functions, "function JSON")->required();
  }
  {
    auto* c = command("reciprocity", "compare <Ind f, g> with <f, Res g>", cmd_reciprocity);
    add_input(c, true);
    c->add_option("--function,-f", o.functions, "f on Y (with \"subset\") and g on X")->required();
    c->add_option("--subset", o.subset, "points of Y when f has no \"subset\" key");
  }
  {
    auto* c = command("from-partition", "group whose orbits are the given cells", cmd_from_partition);
    add_input(c, true);
    c->add_flag("--minimal-generators", o.minimal_generators, "adjacent transpositions only");
  }
  add_input(command("equivalence", "search for an equivariant bijection", cmd_equivalence), true);

  CLI::App* corpus = app.add_subcommand("corpus", "named example actions");
  corpus->require_subcommand(1);
  {
    CLI::App* list = corpus->add_subcommand("list", "list corpus entries");
    list->add_option("--output,-o", o.output, "write the report here instead of stdout");
    list->callback([&] { handler = [](const Session&) { return cmd_corpus_list(); }; });
    CLI::App* b = corpus->add_subcommand("build", "build a corpus action");
    add_common(b);
    b->add_option("name", o.corpus_name, "entry name")->required();
    b->add_option("--params,-p", o.params, "key=value pairs separated by commas");
    b->callback([&] { handler = cmd_corpus_build; });
  }

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  auto emit = [&](const std::string& body) -> bool {
    if (o.output.empty()) {
      out << body;
      return true;
    }
    std::ofstream file(o.output, std::ios::binary);
    if (!file) return false;
    file << body;
    return static_cast<bool>(file);
  };

  try {
    const Session session(o);
    const Report report = handler(session);
    const std::string body = text.empty() ? report.dump() + "\n" : text;
    if (!emit(body)) {
      err << "cannot write '" << o.output << "'\n";
      return kValidation;
    }
    return kOk;
  } catch (const Error& e) {
    err << e.what() << "\n";
    emit(error_report(e).dump() + "\n");
    return e.kind() == "ParseError" ? kParse : kValidation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kValidation;
  }
}

}  // namespace fixspace::cli
