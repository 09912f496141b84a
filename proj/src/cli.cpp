// Copyright 2026 The c2mcollab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "c2m/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "c2m/errors.hpp"
#include "json.hpp"

namespace c2m {

namespace fs = std::filesystem;
using nlohmann::json;

SuiteSpec default_suite_spec(std::uint64_t seed) {
  SuiteSpec spec;
  const int products[] = {1, 1, 5, 5, 10, 10};
  const int manufacturers[] = {5, 10, 5, 10, 5, 10};
  for (int s = 0; s < 6; ++s) {
    ShapeSpec shape;
    shape.label = std::to_string(products[s]) + "x" + std::to_string(manufacturers[s]);
    shape.product_count = products[s];
    shape.manufacturer_count = manufacturers[s];
    shape.count = 10;
    shape.base_seed = seed + 1000ull * static_cast<std::uint64_t>(s);
    spec.shapes.push_back(std::move(shape));
  }
  return spec;
}

InstanceReport solve_instance(const Instance& inst, const std::string& name,
                              const SimplexOptions& opts) {
  InstanceReport report;
  report.name = name;
  report.cf = compute_characteristic(inst);
  report.plan = report.cf.grand_plan;
  report.order_values = compute_order_values(inst, report.plan);
  try {
    report.allocation = allocate(report.cf, report.order_values, opts);
    report.allocation_ok = true;
  } catch (const AllocationInfeasibleError& e) {
    report.allocation_error = e.what();
  }
  report.shapley_values = shapley(report.cf);
  if (report.allocation_ok) {
    report.allocation_membership = core_membership(report.cf, report.allocation.profits);
  }
  report.shapley_membership = core_membership(report.cf, report.shapley_values.values);
  return report;
}

namespace {

std::string format_gamma_value(double gamma, bool in_core) {
  if (in_core) return "1";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", gamma);
  return buf;
}

void summarize(const std::vector<SuiteRow>& rows, std::vector<ShapeSummary>& out) {
  for (const SuiteRow& row : rows) {
    ShapeSummary* summary = nullptr;
    for (ShapeSummary& s : out) {
      if (s.label == row.label) { summary = &s; break; }
    }
    if (summary == nullptr) {
      out.push_back(ShapeSummary{row.label, 0, 0.0, 0, 0});
      summary = &out.back();
    }
    summary->count += 1;
    summary->mean_profit += static_cast<double>(row.total_profit);  // sum for now
    if (row.in_core) summary->core_count += 1;
    if (row.shortage) summary->shortage_count += 1;
  }
  for (ShapeSummary& s : out) {
    if (s.count > 0) s.mean_profit /= s.count;
  }
}

}  // namespace

SuiteReport run_suite(const std::vector<SuiteInstanceInput>& instances,
                      double scale_factor, const SimplexOptions& opts) {
  SuiteReport report;
  auto run_pass = [&](bool scaled, std::vector<SuiteRow>& rows,
                      std::vector<ShapeSummary>& summaries) {
    for (const SuiteInstanceInput& input : instances) {
      const Instance inst =
          scaled ? scale_order_quantity(input.instance, scale_factor) : input.instance;
      const std::string name = input.label + "_" + std::to_string(input.index);
      const InstanceReport r = solve_instance(inst, name, opts);
      SuiteRow row;
      row.label = input.label;
      row.index = input.index;
      row.total_profit = r.plan.total_profit;
      row.allocation_ok = r.allocation_ok;
      row.gamma = r.allocation_ok ? r.allocation.gamma : 0.0;
      row.in_core = r.allocation_ok && r.allocation.in_core;
      row.degenerate = r.allocation_ok && r.allocation.degenerate;
      row.shortage = r.plan.total_shortage() > 0;
      rows.push_back(std::move(row));
    }
    summarize(rows, summaries);
  };

  run_pass(false, report.rows, report.summaries);
  if (scale_factor > 0.0) {
    report.scale_factor = scale_factor;
    run_pass(true, report.scaled_rows, report.scaled_summaries);
  }
  return report;
}

std::string format_money(double value) {
  double rounded = std::round(value * 100.0) / 100.0;
  if (rounded == 0.0) rounded = 0.0;  // avoid "-0"
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", rounded);
  std::string s = buf;
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

std::string format_gamma(const AllocationResult& result) {
  return format_gamma_value(result.gamma, result.in_core);
}

std::string render_instance_report(const InstanceReport& report) {
  const int n = report.plan.manufacturer_count;
  std::ostringstream os;
  os << "Instance\t" << report.name << "\n";
  os << "Post-collaboration total profit\t" << report.plan.total_profit << "\n";
  os << "The value of \xce\xb3\t"
     << (report.allocation_ok ? format_gamma(report.allocation) : "-") << "\n";
  os << "Product shortage\t" << (report.plan.total_shortage() > 0 ? "Y" : "N") << "\n";
  os << "\n";

  os << "Manufacturer";
  for (int k = 0; k < n; ++k) os << "\t" << (k + 1);
  os << "\n";
  os << "Order value";
  for (int k = 0; k < n; ++k) os << "\t" << report.order_values[k];
  os << "\n";
  if (report.allocation_ok) {
    os << "Post-collaboration profit";
    for (int k = 0; k < n; ++k) os << "\t" << format_money(report.allocation.profits[k]);
    os << "\n";
  } else {
    os << "Post-collaboration profit\t(" << report.allocation_error << ")\n";
  }
  os << "Shapley value";
  for (int k = 0; k < n; ++k) os << "\t" << format_money(report.shapley_values.values[k]);
  os << "\n\n";

  if (report.allocation_ok) {
    os << "\xce\xb3-core allocation in core\t"
       << (report.allocation_membership.in_core ? "Y" : "N") << "\n";
  }
  os << "Shapley allocation in core\t" << (report.shapley_membership.in_core ? "Y" : "N")
     << "\n";
  if (report.allocation_ok && report.allocation.degenerate) {
    os << "\nwarning: the best attainable \xce\xb3 is not positive; "
          "the coalition guarantees are vacuous\n";
  }
  return os.str();
}

namespace {

json membership_json(const CoreMembership& m) {
  return json{{"in_core", m.in_core},
              {"worst_coalition", m.worst_coalition},
              {"worst_deficit", m.worst_deficit}};
}

json shapley_json(const ShapleyVector& v) {
  return json{{"values", v.values},
              {"empty_coalition_value", kShapleyEmptyCoalitionValue}};
}

json suite_rows_json(const std::vector<SuiteRow>& rows) {
  json arr = json::array();
  for (const SuiteRow& row : rows) {
    json j{{"label", row.label},
           {"index", row.index},
           {"total_profit", row.total_profit},
           {"allocation_ok", row.allocation_ok},
           {"in_core", row.in_core},
           {"degenerate", row.degenerate},
           {"shortage", row.shortage}};
    if (row.allocation_ok) {
      j["gamma"] = row.gamma;
    } else {
      j["gamma"] = nullptr;
    }
    arr.push_back(std::move(j));
  }
  return arr;
}

json suite_summaries_json(const std::vector<ShapeSummary>& summaries) {
  json arr = json::array();
  for (const ShapeSummary& s : summaries) {
    arr.push_back(json{{"label", s.label},
                       {"count", s.count},
                       {"mean_profit", s.mean_profit},
                       {"core_count", s.core_count},
                       {"shortage_count", s.shortage_count}});
  }
  return arr;
}

std::string render_suite_section(const std::vector<SuiteRow>& rows,
                                 const std::vector<ShapeSummary>& summaries,
                                 const std::string& suffix) {
  std::ostringstream os;
  for (const ShapeSummary& s : summaries) {
    os << "Results of instance set " << s.label << suffix << "\n";
    os << "Instance";
    for (const SuiteRow& row : rows) {
      if (row.label == s.label) os << "\t" << row.index;
    }
    os << "\n";
    os << "Post-collaboration total profit";
    for (const SuiteRow& row : rows) {
      if (row.label == s.label) os << "\t" << row.total_profit;
    }
    os << "\n";
    os << "The value of \xce\xb3";
    for (const SuiteRow& row : rows) {
      if (row.label == s.label) {
        os << "\t" << (row.allocation_ok ? format_gamma_value(row.gamma, row.in_core) : "-");
      }
    }
    os << "\n";
    os << "Product shortage";
    for (const SuiteRow& row : rows) {
      if (row.label == s.label) os << "\t" << (row.shortage ? "Y" : "N");
    }
    os << "\n\n";
  }

  os << "Summary" << suffix << "\n";
  os << "Set\tInstances\tMean profit\tCore\tShortage\n";
  int total_count = 0;
  double profit_sum = 0.0;
  int total_core = 0;
  int total_shortage = 0;
  for (const ShapeSummary& s : summaries) {
    os << s.label << "\t" << s.count << "\t" << format_money(s.mean_profit) << "\t"
       << s.core_count << "\t" << s.shortage_count << "\n";
    total_count += s.count;
    profit_sum += s.mean_profit * s.count;
    total_core += s.core_count;
    total_shortage += s.shortage_count;
  }
  os << "Total\t" << total_count << "\t"
     << format_money(total_count > 0 ? profit_sum / total_count : 0.0) << "\t"
     << total_core << "\t" << total_shortage << "\n";
  return os.str();
}

}  // namespace

std::string instance_report_to_json(const InstanceReport& report) {
  json j;
  j["name"] = report.name;
  j["plan"] = json::parse(plan_to_json(report.plan));
  j["characteristic_function"] = json::parse(characteristic_to_json(report.cf));
  j["order_values"] = report.order_values;
  if (report.allocation_ok) {
    j["allocation"] = json::parse(allocation_to_json(report.allocation));
    j["allocation_membership"] = membership_json(report.allocation_membership);
  } else {
    j["allocation_error"] = report.allocation_error;
  }
  j["shapley"] = shapley_json(report.shapley_values);
  j["shapley_membership"] = membership_json(report.shapley_membership);
  return j.dump(2) + "\n";
}

std::string render_suite_report(const SuiteReport& report) {
  std::string out = render_suite_section(report.rows, report.summaries, "");
  if (report.scale_factor > 0.0) {
    const std::string suffix = " (order quantities x" + format_money(report.scale_factor) + ")";
    out += "\n" + render_suite_section(report.scaled_rows, report.scaled_summaries, suffix);
  }
  return out;
}

std::string suite_report_to_json(const SuiteReport& report) {
  json j;
  j["rows"] = suite_rows_json(report.rows);
  j["summaries"] = suite_summaries_json(report.summaries);
  if (report.scale_factor > 0.0) {
    j["scale_factor"] = report.scale_factor;
    j["scaled_rows"] = suite_rows_json(report.scaled_rows);
    j["scaled_summaries"] = suite_summaries_json(report.scaled_summaries);
  }
  return j.dump(2) + "\n";
}

std::string render_comparison(const MechanismComparison& cmp) {
  const int n = cmp.cf.manufacturer_count;
  std::ostringstream os;
  os << "Manufacturer";
  for (int k = 0; k < n; ++k) os << "\t" << (k + 1);
  os << "\n";
  os << "\xce\xb3-core profit";
  for (int k = 0; k < n; ++k) os << "\t" << format_money(cmp.allocation.profits[k]);
  os << "\n";
  os << "Shapley value";
  for (int k = 0; k < n; ++k) os << "\t" << format_money(cmp.shapley_values.values[k]);
  os << "\n\n";
  os << "The value of \xce\xb3\t" << format_gamma(cmp.allocation) << "\n";
  os << "\xce\xb3-core allocation in core\t"
     << (cmp.allocation_membership.in_core ? "Y" : "N") << "\n";
  os << "Shapley allocation in core\t" << (cmp.shapley_membership.in_core ? "Y" : "N")
     << "\n";
  return os.str();
}

std::string comparison_to_json(const MechanismComparison& cmp) {
  json j;
  j["allocation"] = json::parse(allocation_to_json(cmp.allocation));
  j["allocation_membership"] = membership_json(cmp.allocation_membership);
  j["shapley"] = shapley_json(cmp.shapley_values);
  j["shapley_membership"] = membership_json(cmp.shapley_membership);
  return j.dump(2) + "\n";
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << content;
  if (!f) throw std::runtime_error("cannot write " + path);
}

void emit(const std::string& text, const std::string& out_file) {
  if (out_file.empty()) {
    std::cout << text;
  } else {
    write_file(out_file, text);
  }
}

Instance load_instance(const std::string& path) {
  try {
    return read_instance(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Instance load_valid_instance(const std::string& path) {
  Instance inst = load_instance(path);
  const std::vector<std::string> violations = validate_instance(inst);
  if (!violations.empty()) {
    std::string msg = path + ": invalid instance";
    for (const std::string& v : violations) msg += "\n  " + v;
    throw ParseError(msg);
  }
  return inst;
}

int cmd_generate(const std::string& out_dir, std::uint64_t seed) {
  fs::create_directories(out_dir);
  const SuiteSpec spec = default_suite_spec(seed);

  json manifest;
  manifest["base_seed"] = seed;
  json shapes = json::array();
  json instances = json::array();
  int total = 0;
  for (const ShapeSpec& shape : spec.shapes) {
    shapes.push_back(json{{"label", shape.label},
                          {"product_count", shape.product_count},
                          {"manufacturer_count", shape.manufacturer_count},
                          {"count", shape.count},
                          {"base_seed", shape.base_seed}});
    for (int k = 1; k <= shape.count; ++k) {
      GeneratorConfig cfg;
      cfg.seed = shape.base_seed + static_cast<std::uint64_t>(k);
      cfg.product_count = shape.product_count;
      cfg.manufacturer_count = shape.manufacturer_count;
      const Instance inst = generate_instance(cfg);
      const std::string fname = shape.label + "_" + std::to_string(k) + ".json";
      write_file((fs::path(out_dir) / fname).string(), write_instance(inst));
      instances.push_back(json{{"file", fname},
                               {"label", shape.label},
                               {"index", k},
                               {"seed", cfg.seed}});
      ++total;
    }
  }
  manifest["shapes"] = std::move(shapes);
  manifest["instances"] = std::move(instances);
  write_file((fs::path(out_dir) / "manifest.json").string(), manifest.dump(2) + "\n");
  std::cout << "wrote " << total << " instances to " << out_dir << "\n";
  return 0;
}

int cmd_solve(const std::string& path, double scale, bool json_out,
              const std::string& out_file, const SimplexOptions& opts) {
  Instance inst = load_valid_instance(path);
  if (scale > 0.0) inst = scale_order_quantity(inst, scale);
  const std::string name = fs::path(path).stem().string();
  const InstanceReport report = solve_instance(inst, name, opts);
  emit(json_out ? instance_report_to_json(report) : render_instance_report(report), out_file);
  if (!report.allocation_ok) {
    std::cerr << "error: " << report.allocation_error << "\n";
    return 2;
  }
  if (report.allocation.degenerate) {
    std::cerr << "warning: degenerate allocation (gamma <= 0)\n";
    return 2;
  }
  return 0;
}

int cmd_suite(const std::string& dir, double scale, bool json_out,
              const std::string& out_file, const SimplexOptions& opts) {
  const fs::path manifest_path = fs::path(dir) / "manifest.json";
  if (!fs::exists(manifest_path)) {
    throw std::runtime_error("missing manifest: " + manifest_path.string());
  }
  json manifest;
  try {
    manifest = json::parse(read_file(manifest_path.string()));
  } catch (const json::parse_error& e) {
    throw ParseError(manifest_path.string() + ": " + e.what());
  }
  if (!manifest.contains("instances") || !manifest["instances"].is_array() ||
      manifest["instances"].empty()) {
    throw ParseError(manifest_path.string() + ": no instances listed");
  }

  std::vector<SuiteInstanceInput> inputs;
  for (const json& entry : manifest["instances"]) {
    if (!entry.contains("file") || !entry.contains("label") || !entry.contains("index")) {
      throw ParseError(manifest_path.string() + ": instance entry missing file/label/index");
    }
    SuiteInstanceInput input;
    input.label = entry["label"].get<std::string>();
    input.index = entry["index"].get<int>();
    input.instance = load_valid_instance((fs::path(dir) / entry["file"].get<std::string>()).string());
    inputs.push_back(std::move(input));
  }

  const SuiteReport report = run_suite(inputs, scale, opts);
  emit(json_out ? suite_report_to_json(report) : render_suite_report(report), out_file);

  for (const std::vector<SuiteRow>* rows : {&report.rows, &report.scaled_rows}) {
    for (const SuiteRow& row : *rows) {
      if (!row.allocation_ok || row.degenerate) {
        std::cerr << "warning: " << row.label << "_" << row.index
                  << (row.allocation_ok ? " has a degenerate allocation"
                                        : " has no feasible allocation")
                  << "\n";
        return 2;
      }
    }
  }
  return 0;
}

int cmd_compare(const std::string& path, bool json_out, const std::string& out_file,
                const SimplexOptions& opts) {
  const Instance inst = load_valid_instance(path);
  const MechanismComparison cmp = compare(inst, opts);
  emit(json_out ? comparison_to_json(cmp) : render_comparison(cmp), out_file);
  if (cmp.allocation.degenerate) {
    std::cerr << "warning: degenerate allocation (gamma <= 0)\n";
    return 2;
  }
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Coalition production planning and profit allocation"};
  app.require_subcommand(1);

  std::string gen_out;
  std::uint64_t seed = 42;
  CLI::App* gen = app.add_subcommand("generate", "Write a seeded instance suite");
  gen->add_option("--out", gen_out, "Output directory")->required();
  gen->add_option("--seed", seed, "Base seed for the suite");

  std::string solve_file;
  std::string solve_out;
  bool solve_json = false;
  double solve_scale = 0.0;
  bool solve_dump = false;
  CLI::App* solve = app.add_subcommand("solve", "Solve one instance file");
  solve->add_option("file", solve_file, "Instance JSON file")->required();
  solve->add_flag("--json", solve_json, "Emit JSON instead of tables");
  solve->add_option("--out", solve_out, "Write output to a file");
  solve->add_option("--scale-oq", solve_scale, "Scale order quantities first")
      ->check(CLI::PositiveNumber);
  solve->add_flag("--dump-lp", solve_dump, "Trace the LP solves on stderr");

  std::string suite_dir;
  std::string suite_out;
  bool suite_json = false;
  double suite_scale = 0.0;
  bool suite_dump = false;
  CLI::App* suite = app.add_subcommand("suite", "Solve a generated suite directory");
  suite->add_option("dir", suite_dir, "Directory with manifest.json")->required();
  suite->add_flag("--json", suite_json, "Emit JSON instead of tables");
  suite->add_option("--out", suite_out, "Write output to a file");
  suite->add_option("--scale-oq", suite_scale,
                    "Also run the suite with scaled order quantities")
      ->check(CLI::PositiveNumber);
  suite->add_flag("--dump-lp", suite_dump, "Trace the LP solves on stderr");

  std::string cmp_file;
  std::string cmp_out;
  bool cmp_json = false;
  bool cmp_dump = false;
  CLI::App* cmp = app.add_subcommand("compare", "Compare allocation mechanisms");
  cmp->add_option("file", cmp_file, "Instance JSON file")->required();
  cmp->add_flag("--json", cmp_json, "Emit JSON instead of tables");
  cmp->add_option("--out", cmp_out, "Write output to a file");
  cmp->add_flag("--dump-lp", cmp_dump, "Trace the LP solves on stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    SimplexOptions opts;
    if (*gen) return cmd_generate(gen_out, seed);
    if (*solve) {
      if (solve_dump) opts.log = &std::cerr;
      return cmd_solve(solve_file, solve_scale, solve_json, solve_out, opts);
    }
    if (*suite) {
      if (suite_dump) opts.log = &std::cerr;
      return cmd_suite(suite_dir, suite_scale, suite_json, suite_out, opts);
    }
    if (*cmp) {
      if (cmp_dump) opts.log = &std::cerr;
      return cmd_compare(cmp_file, cmp_json, cmp_out, opts);
    }
    return 1;
  } catch (const AllocationInfeasibleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const SimplexError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const GuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace c2m
