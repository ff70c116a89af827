// Copyright 2026 The arrangeops Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// arrangeops: command-line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "arrangeops/catalog.hpp"
#include "arrangeops/figure.hpp"
#include "arrangeops/io.hpp"
#include "arrangeops/table1.hpp"

namespace {

using namespace arrangeops;

constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kUsageError = 2;

struct Globals {
  std::string field;
  std::string out;
  std::string manifest;
  int threads = 1;
  int precision_bits = 64;
};

class Clock {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::optional<Field> field_option(const Globals& g) {
  if (g.field.empty()) return std::nullopt;
  return parse_field(g.field);
}

int thread_count(const Globals& g) {
  if (const char* env = std::getenv("ARRANGEOPS_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n >= 1) return n;
    } catch (const std::exception&) {
    }
    throw ParseError(std::string("ARRANGEOPS_THREADS must be a positive integer, got '") + env + "'");
  }
  if (g.threads < 1) throw ParseError("--threads must be positive");
  return g.threads;
}

void emit(const Globals& g, RunManifest& manifest, const std::string& text) {
  write_text(g.out, text);
  if (!g.out.empty() && g.out != "-") manifest.outputs.push_back(g.out);
}

void write_manifest(const Globals& g, const RunManifest& manifest) {
  const std::string text = manifest.to_json().dump(2) + "\n";
  if (!g.manifest.empty()) {
    write_text(g.manifest, text);
  } else if (!g.out.empty() && g.out != "-") {
    write_text(g.out + ".manifest.json", text);
  } else {
    std::cerr << manifest.to_json().dump() << "\n";
  }
}

std::vector<long> parse_rows(const std::string& text) {
  if (text.empty()) return default_periodic_rows();
  std::vector<long> rows;
  if (text == "all") {
    for (const auto& r : periodic_rows()) rows.push_back(r.n);
    return rows;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      const long n = std::stol(item);
      periodic_row(n);
      rows.push_back(n);
    } catch (const std::exception&) {
      throw ParseError("unknown row '" + item + "'");
    }
  }
  return rows;
}

std::set<int> parse_marks(const std::string& text) {
  std::set<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.insert(std::stoi(item));
    } catch (const std::exception&) {
      throw ParseError("bad multiplicity '" + item + "'");
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact line-arrangement operators, unassuming arrangements and their dynamics"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--field", g.field, "Field for expressions: Q, zetaN, cyclotomic:N, sqrtD, quadratic:D");
  app.add_option("--out", g.out, "Primary output file (default stdout)");
  app.add_option("--threads", g.threads, "Worker threads for subset searches");
  app.add_option("--precision-bits", g.precision_bits, "Floating precision for figures")->check(CLI::Range(16, 4096));
  app.add_option("--manifest", g.manifest, "Run manifest path (default <out>.manifest.json, else stderr)");

  std::string spec;
  auto* gen = app.add_subcommand("gen", "Write an arrangement as JSON");
  gen->add_option("spec", spec, "Arrangement spec, e.g. c0:t=2, ceva:4, cabc:1,1,zeta5")->required();

  int steps = 64;
  bool detect_period = false;
  auto* iter = app.add_subcommand("iterate", "Iterate Lambda and report the orbit");
  iter->add_option("spec", spec)->required();
  iter->add_option("--steps", steps, "Maximum number of Lambda steps")->check(CLI::PositiveNumber);
  iter->add_flag("--detect-period", detect_period, "Fail when no period or termination is found");

  std::string rows_text;
  auto* table = app.add_subcommand("table1", "Periodic orbits of c0(zeta_n) against published values");
  table->add_option("--rows", rows_text, "Comma-separated n, or 'all' (default 3,5,7,9,11)");

  std::string format = "svg", marks_text;
  double window = 0;
  auto* exp = app.add_subcommand("export", "Draw an arrangement (svg, tikz) or write it as json");
  exp->add_option("spec", spec)->required();
  exp->add_option("--format", format)->check(CLI::IsMember({"svg", "tikz", "json"}));
  exp->add_option("--window", window, "Half-width of the drawing window")->check(CLI::PositiveNumber);
  exp->add_option("--marks", marks_text, "Comma-separated multiplicities to mark (default all)");

  int size = 6;
  std::string predicate = "unassuming";
  auto* search = app.add_subcommand("search", "Sub-arrangements with a property");
  search->add_option("spec", spec)->required();
  search->add_option("--size", size)->check(CLI::Range(1, 64));
  search->add_option("--predicate", predicate)->check(CLI::IsMember({"unassuming", "nodal"}));

  auto* moduli = app.add_subcommand("moduli", "Moduli class and value of six lines");
  moduli->add_option("spec", spec)->required();

  bool real_only = false;
  auto* pre = app.add_subcommand("preimage", "Antecedents of C(u, v, w) under Lambda");
  pre->add_option("spec", spec)->required();
  pre->add_flag("--real", real_only, "Only the antecedent defined over the reals");

  std::vector<std::string> properties;
  auto* check = app.add_subcommand("check", "Verify properties of an arrangement");
  check->add_option("spec", spec)->required();
  check->add_option("--property", properties,
                    "unassuming, ceva, ceva=N, nb1, nb2, nonbases=FILE, profile=\"t2=15\", lines=N")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsageError;
  }

  Clock clock;
  RunManifest manifest;
  manifest.command = app.get_subcommands().front()->get_name();
  manifest.inputs["field"] = g.field.empty() ? Json(nullptr) : Json(g.field);
  if (!spec.empty()) manifest.inputs["spec"] = spec;
  int status = kOk;
  try {
    const auto field = field_option(g);
    if (gen->parsed()) {
      const Arrangement a = parse_arrangement_spec(spec, field);
      emit(g, manifest, to_json(a).dump(2) + "\n");
      std::cerr << a.size() << " lines over " << describe(a.field()) << ", " << profile(a).to_string() << "\n";
    } else if (iter->parsed()) {
      manifest.inputs["steps"] = steps;
      const OrbitReport r = iterate(parse_arrangement_spec(spec, field), steps);
      emit(g, manifest, to_json(r).dump(2) + "\n");
      std::cerr << r.terms.size() << " terms";
      if (r.period) std::cerr << ", period " << *r.period << ", preperiod " << *r.preperiod;
      if (r.terminated) std::cerr << ", terminates with the empty arrangement at step " << r.terms.size() - 1;
      std::cerr << ", union " << r.union_arrangement.size() << " lines " << r.union_profile.to_string() << "\n";
      if (detect_period && !r.period && !r.terminated) status = kVerificationFailure;
    } else if (table->parsed()) {
      const auto rows = parse_rows(rows_text);
      manifest.inputs["rows"] = rows;
      std::ostringstream os;
      for (long n : rows) {
        const PeriodicResult r = run_periodic_row(n);
        os << format_result(r) << "\n";
        manifest.timings["zeta" + std::to_string(n)] = r.seconds;
        if (!r.pass()) status = kVerificationFailure;
      }
      emit(g, manifest, os.str());
    } else if (exp->parsed()) {
      manifest.inputs["format"] = format;
      const Arrangement a = parse_arrangement_spec(spec, field);
      if (format == "json") {
        emit(g, manifest, to_json(a).dump(2) + "\n");
      } else {
        FigureOptions opt;
        opt.format = format == "svg" ? FigureFormat::kSvg : FigureFormat::kTikz;
        if (window > 0) opt.window = window;
        opt.precision_bits = g.precision_bits;
        opt.marks = parse_marks(marks_text);
        manifest.inputs["precision_bits"] = g.precision_bits;
        const Figure fig = render(a, opt);
        emit(g, manifest, fig.text);
        std::cerr << fig.lines << " lines, " << fig.points << " marked points\n";
      }
    } else if (search->parsed()) {
      manifest.inputs["size"] = size;
      manifest.inputs["predicate"] = predicate;
      const Arrangement a = parse_arrangement_spec(spec, field);
      SubsetSearchOptions opt;
      opt.threads = thread_count(g);
      opt.nodal_only = size == 6;
      ArrangementPredicate pred = [](const Arrangement& s) { return is_unassuming(s); };
      if (predicate == "nodal") {
        opt.nodal_only = true;
        pred = [](const Arrangement&) { return true; };
      }
      const auto found = subsets_with_property(a, size, pred, opt);
      Json results = Json::array();
      for (const auto& idx : found) {
        const Arrangement s = subarrangement(a, idx);
        Json item{{"indices", idx}};
        if (size == 6) {
          const bool u = is_unassuming(s);
          item["unassuming"] = u;
          if (u) item["moduli"] = to_json(moduli_invariant(s));
        }
        results.push_back(item);
      }
      emit(g, manifest, Json{{"count", found.size()}, {"subsets", results}}.dump(2) + "\n");
      std::cerr << found.size() << " subsets\n";
    } else if (moduli->parsed()) {
      const ModuliPoint m = moduli_invariant(parse_arrangement_spec(spec, field));
      emit(g, manifest, to_json(m).dump(2) + "\n");
      std::cerr << to_string(m.klass);
      if (m.value) std::cerr << " " << m.value->to_string();
      std::cerr << "\n";
    } else if (pre->parsed()) {
      manifest.inputs["real"] = real_only;
      const Arrangement a = parse_arrangement_spec(spec, field);
      std::vector<Antecedent> ants;
      if (real_only) {
        ants.push_back(real_preimage(a));
      } else {
        ants = preimages(a);
      }
      Json list = Json::array();
      for (const auto& x : ants) {
        const std::string text =
            "cabc:" + x.params.a.to_string() + "," + x.params.b.to_string() + "," + x.params.c.to_string();
        list.push_back(Json{{"params", {to_json(x.params.a), to_json(x.params.b), to_json(x.params.c)}},
                            {"spec", text},
                            {"arrangement", to_json(x.arrangement)}});
        std::cerr << text << " over " << describe(x.extension.field) << "\n";
      }
      emit(g, manifest, Json{{"antecedents", list}}.dump(2) + "\n");
    } else if (check->parsed()) {
      const Arrangement a = parse_arrangement_spec(spec, field);
      std::ostringstream os;
      for (const auto& prop : properties) {
        const auto eq = prop.find('=');
        const std::string key = prop.substr(0, eq), val = eq == std::string::npos ? "" : prop.substr(eq + 1);
        bool ok = false;
        std::string detail;
        if (key == "unassuming") {
          ok = is_unassuming(a);
        } else if (key == "ceva") {
          const RecognitionResult r =
              val.empty() ? recognize_ceva(a) : contained_in_ceva(a, std::stol(val));
          ok = r.relation == Relation::kEqual;
          detail = (r.name ? *r.name : "none") + " " + to_string(r.relation);
        } else if (key == "nb1" || key == "nb2" || key == "nonbases") {
          const NonBasisSpec nb =
              key == "nb1" ? nb1() : key == "nb2" ? nb2() : non_basis_spec_from_json(read_json_file(val));
          const auto labels = find_labeling(a, nb);
          ok = labels.has_value();
          if (labels) {
            std::ostringstream l;
            for (size_t i = 0; i < labels->size(); ++i) l << (i ? "," : "") << (*labels)[i];
            detail = "labels " + l.str();
          }
        } else if (key == "profile") {
          ok = profile(a) == SingularityProfile::parse(val);
          detail = profile(a).to_string();
        } else if (key == "lines") {
          ok = static_cast<long>(a.size()) == std::stol(val);
          detail = std::to_string(a.size());
        } else {
          throw ParseError("unknown property '" + prop + "'");
        }
        os << (ok ? "PASS " : "FAIL ") << prop;
        if (!detail.empty()) os << " (" << detail << ")";
        os << "\n";
        if (!ok) status = kVerificationFailure;
      }
      emit(g, manifest, os.str());
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ExportError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerificationFailure;
  }
  manifest.timings["total"] = clock.seconds();
  manifest.inputs["threads"] = g.threads;
  try {
    write_manifest(g, manifest);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return status;
}
