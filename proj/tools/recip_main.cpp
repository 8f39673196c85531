// recip: exact-arithmetic Pythagorean triple and reciprocal-property tool.
// Emits one self-describing record per line (JSON or TSV); see README.

#include <array>
#include <charconv>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "recip/oracles.hpp"

namespace {

using nlohmann::ordered_json;
using recip::i64;

constexpr const char* kSchemaVersion = "1";

enum class OutputMode { kLineRecords, kTsv };

std::string tsv_scalar(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "null";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.dump();
}

// TSV rendering: the kind, then tab-separated key=value tokens in record
// order. Lists of tuples join tuples with ';' and elements with ','.
void emit(const ordered_json& rec, OutputMode mode) {
  if (mode == OutputMode::kLineRecords) {
    std::cout << rec.dump() << "\n";
    return;
  }
  std::string line = rec.at("kind").get<std::string>();
  for (const auto& [key, value] : rec.items()) {
    if (key == "kind") continue;
    line += "\t";
    line += key;
    line += "=";
    if (value.is_array()) {
      bool first_tuple = true;
      for (const auto& tuple : value) {
        if (!first_tuple) line += ";";
        first_tuple = false;
        bool first = true;
        for (const auto& elem : tuple) {
          if (!first) line += ",";
          first = false;
          line += tsv_scalar(elem);
        }
      }
    } else {
      line += tsv_scalar(value);
    }
  }
  std::cout << line << "\n";
}

ordered_json base_record(const char* kind) {
  ordered_json rec;
  rec["kind"] = kind;
  rec["schema_version"] = kSchemaVersion;
  return rec;
}

i64 parse_positive(const std::string& text, const char* what) {
  i64 value = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || value < 1)
    throw std::domain_error(std::string(what) + ": expected a positive integer, got '" + text + "'");
  return value;
}

std::array<i64, 3> parse_tuple3(const std::string& text, const char* what) {
  std::array<i64, 3> out{};
  size_t start = 0;
  for (int i = 0; i < 3; ++i) {
    const size_t comma = text.find(',', start);
    const bool last = (i == 2);
    if (last != (comma == std::string::npos))
      throw std::domain_error(std::string(what) + ": expected three comma-separated integers, got '" +
                              text + "'");
    const std::string part = text.substr(start, last ? std::string::npos : comma - start);
    out[static_cast<size_t>(i)] = parse_positive(part, what);
    start = comma + 1;
  }
  return out;
}

ordered_json solution_record(const recip::SolutionRecord& rec) {
  ordered_json j = base_record("solution");
  j["v"] = rec.spec.v();
  j["k"] = rec.spec.k();
  j["l"] = rec.spec.l();
  j["d"] = rec.generator.d;
  j["m"] = rec.generator.m;
  j["n"] = rec.generator.n;
  j["a"] = rec.triple.a;
  j["b"] = rec.triple.b;
  j["c"] = rec.triple.c;
  return j;
}

int cmd_enumerate(i64 max_c, bool primitive_only, OutputMode mode) {
  int count = 0;
  for (const recip::Generator& g : recip::enumerate_generators(max_c)) {
    if (primitive_only && g.d != 1) continue;
    const recip::Triple t = recip::triple_from_generator(g);
    ordered_json rec = base_record("triple");
    rec["d"] = g.d;
    rec["m"] = g.m;
    rec["n"] = g.n;
    rec["a"] = t.a;
    rec["b"] = t.b;
    rec["c"] = t.c;
    rec["primitive"] = (g.d == 1);
    emit(rec, mode);
    ++count;
  }
  return count > 0 ? 0 : 1;
}

int cmd_check(const std::string& triple_arg, const std::string& spec_arg, OutputMode mode) {
  const auto [a, b, c] = parse_tuple3(triple_arg, "--triple");
  const auto [v, k, l] = parse_tuple3(spec_arg, "--spec");
  const recip::Triple t{a, b, c};
  if (!recip::is_pythagorean(t))
    throw std::domain_error("--triple: (" + triple_arg + ") is not a Pythagorean triple");
  const recip::ReciprocalSpec s(v, k, l);
  const bool holds = recip::has_property(t, s);
  ordered_json rec = base_record("check");
  rec["a"] = t.a;
  rec["b"] = t.b;
  rec["c"] = t.c;
  rec["v"] = s.v();
  rec["k"] = s.k();
  rec["l"] = s.l();
  rec["holds"] = holds;
  rec["altitude"] = recip::altitude(t).str();
  emit(rec, mode);
  return holds ? 0 : 1;
}

int cmd_solve(const std::string& spec_arg, i64 max_m, OutputMode mode) {
  const auto [v, k, l] = parse_tuple3(spec_arg, "--spec");
  const recip::ReciprocalSpec s(v, k, l);
  const auto records = recip::find_triples(s, max_m);
  for (const recip::SolutionRecord& rec : records) emit(solution_record(rec), mode);
  if (records.empty()) {
    if (const auto note = recip::obstruction_note(s)) std::cerr << "note: " << *note << "\n";
    return 1;
  }
  return 0;
}

int cmd_classify(const std::string& spec_arg, OutputMode mode) {
  const auto [v, k, l] = parse_tuple3(spec_arg, "--spec");
  const recip::ReciprocalSpec s(v, k, l);
  const auto cls = recip::classify_345(s);
  ordered_json rec = base_record("classification");
  rec["v"] = s.v();
  rec["k"] = s.k();
  rec["l"] = s.l();
  rec["group"] = cls ? ordered_json(cls->group_id) : ordered_json(nullptr);
  rec["t"] = cls ? ordered_json(cls->t) : ordered_json(nullptr);
  emit(rec, mode);
  return cls ? 0 : 1;
}

int cmd_groups(i64 t_max, bool include_noncoprime, OutputMode mode) {
  const auto members = recip::group_members(t_max, include_noncoprime);
  for (const recip::GroupMember& m : members) {
    ordered_json rec = base_record("group-member");
    rec["group"] = m.group_id;
    rec["t"] = m.t;
    rec["v"] = m.v;
    rec["k"] = m.k;
    rec["l"] = m.l;
    rec["coprime"] = m.coprime;
    emit(rec, mode);
  }
  return members.empty() ? 1 : 0;
}

int cmd_verify(const std::string& claim, i64 bound, double max_seconds, OutputMode mode) {
  recip::Deadline deadline;
  if (max_seconds > 0)
    deadline = std::chrono::steady_clock::now() +
               std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                   std::chrono::duration<double>(max_seconds));
  const recip::SweepReport report = recip::run_claim(claim, bound, deadline);
  ordered_json rec = base_record("sweep-report");
  rec["claim"] = report.claim_id;
  rec["bound"] = report.bound;
  rec["cases_checked"] = report.cases_checked;
  rec["counterexample_count"] = report.counterexample_count;
  rec["counterexamples"] = report.counterexamples;
  rec["partial"] = report.partial;
  emit(rec, mode);
  if (report.partial) return 1;
  return report.counterexample_count == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic Pythagorean triple and reciprocal-property tool"};
  app.require_subcommand(1);

  std::string output_mode_name = "line-records";
  double max_seconds = 0.0;
  app.add_option("--output", output_mode_name, "record format: line-records | tsv")
      ->check(CLI::IsMember({"line-records", "tsv"}));
  app.add_option("--max-seconds", max_seconds,
                 "soft time limit for verification sweeps (0 = unlimited)");

  i64 max_c = 0;
  bool primitive_only = false;
  auto* enumerate = app.add_subcommand("enumerate", "list Pythagorean triples with c <= max-c");
  enumerate->add_option("--max-c", max_c, "hypotenuse bound")->required()->check(CLI::PositiveNumber);
  enumerate->add_flag("--primitive", primitive_only, "primitive triples (d = 1) only");

  std::string check_triple, check_spec;
  auto* check = app.add_subcommand("check", "decide the reciprocal property for one triple");
  check->add_option("--triple", check_triple, "a,b,c")->required();
  check->add_option("--spec", check_spec, "v,k,l with gcd(k,l) = 1")->required();

  std::string solve_spec;
  i64 max_m = 100;
  auto* solve = app.add_subcommand("solve", "enumerate all solutions for a spec");
  solve->add_option("--spec", solve_spec, "v,k,l with gcd(k,l) = 1")->required();
  solve->add_option("--max-m", max_m, "search bound on m (default 100)")->check(CLI::PositiveNumber);

  std::string classify_spec;
  auto* classify = app.add_subcommand("classify-345", "locate a spec in the (3,4,5) groups");
  classify->add_option("--spec", classify_spec, "v,k,l with gcd(k,l) = 1")->required();

  i64 t_max = 10;
  bool include_noncoprime = false;
  auto* groups = app.add_subcommand("groups-345", "list members of the six (3,4,5) groups");
  groups->add_option("--t-max", t_max, "largest t per group (default 10)")
      ->check(CLI::NonNegativeNumber);
  groups->add_flag("--include-noncoprime", include_noncoprime,
                   "also emit members with gcd(k,l) > 1");

  std::string claim;
  i64 bound = 100;
  auto* verify = app.add_subcommand("verify", "run a bounded exhaustive claim sweep");
  verify->add_option("--claim", claim, "claim id (see README)")->required();
  verify->add_option("--bound", bound, "sweep bound (default 100)")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const OutputMode mode =
      output_mode_name == "tsv" ? OutputMode::kTsv : OutputMode::kLineRecords;

  try {
    if (enumerate->parsed()) return cmd_enumerate(max_c, primitive_only, mode);
    if (check->parsed()) return cmd_check(check_triple, check_spec, mode);
    if (solve->parsed()) return cmd_solve(solve_spec, max_m, mode);
    if (classify->parsed()) return cmd_classify(classify_spec, mode);
    if (groups->parsed()) return cmd_groups(t_max, include_noncoprime, mode);
    if (verify->parsed()) return cmd_verify(claim, bound, max_seconds, mode);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
