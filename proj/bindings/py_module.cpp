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

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "c2m/cli.hpp"
#include "c2m/coalition_values.hpp"
#include "c2m/core_allocator.hpp"
#include "c2m/cpp_planner.hpp"
#include "c2m/errors.hpp"
#include "c2m/game_toolkit.hpp"
#include "c2m/model.hpp"
#include "c2m/simplex_lp.hpp"

namespace py = pybind11;

using namespace c2m;

PYBIND11_MODULE(_c2mcollab, m) {
  m.doc() =
      "Customer-to-manufacturer collaboration: production planning, "
      "core-based profit allocation, and a Shapley comparator.";
  m.attr("__version__") = "0.1.0";
  m.attr("MAX_MANUFACTURERS") = kMaxManufacturers;

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<GuardError>(m, "GuardError", PyExc_RuntimeError);
  py::register_exception<SimplexError>(m, "SimplexError", PyExc_RuntimeError);
  py::register_exception<AllocationInfeasibleError>(m, "AllocationInfeasibleError",
                                                    PyExc_RuntimeError);

  py::class_<Coalition>(m, "Coalition", "Manufacturer subset, one bit per index.")
      .def(py::init<>())
      .def(py::init([](std::uint32_t mask) { return Coalition{mask}; }), py::arg("mask"))
      .def_readwrite("mask", &Coalition::mask)
      .def_static("all", &Coalition::all, py::arg("manufacturer_count"))
      .def_static("single", &Coalition::single, py::arg("n"))
      .def("contains", &Coalition::contains, py::arg("n"))
      .def("empty", &Coalition::empty)
      .def("size", &Coalition::size)
      .def(py::self == py::self)
      .def("__repr__", [](const Coalition& c) {
        return "Coalition(mask=" + std::to_string(c.mask) + ")";
      });

  py::class_<IntRange>(m, "IntRange", "Inclusive integer interval for generator draws.")
      .def(py::init<>())
      .def(py::init([](std::int64_t lo, std::int64_t hi) { return IntRange{lo, hi}; }),
           py::arg("lo"), py::arg("hi"))
      .def_readwrite("lo", &IntRange::lo)
      .def_readwrite("hi", &IntRange::hi);

  py::class_<GeneratorConfig>(m, "GeneratorConfig",
                              "Seeded synthetic-instance generator configuration.")
      .def(py::init<>())
      .def_readwrite("seed", &GeneratorConfig::seed)
      .def_readwrite("product_count", &GeneratorConfig::product_count)
      .def_readwrite("manufacturer_count", &GeneratorConfig::manufacturer_count)
      .def_readwrite("manufacturing_cost", &GeneratorConfig::manufacturing_cost)
      .def_readwrite("production_capacity", &GeneratorConfig::production_capacity)
      .def_readwrite("shortage_cost", &GeneratorConfig::shortage_cost)
      .def_readwrite("ask_price", &GeneratorConfig::ask_price)
      .def_readwrite("order_quantity", &GeneratorConfig::order_quantity)
      .def_readwrite("order_delivery_time", &GeneratorConfig::order_delivery_time);

  py::class_<Instance>(m, "Instance",
                       "A production-planning instance; matrices are product-major.")
      .def(py::init<>())
      .def_readwrite("product_count", &Instance::product_count)
      .def_readwrite("manufacturer_count", &Instance::manufacturer_count)
      .def_readwrite("manufacturing_cost", &Instance::manufacturing_cost)
      .def_readwrite("production_capacity", &Instance::production_capacity)
      .def_readwrite("shortage_cost", &Instance::shortage_cost)
      .def_readwrite("ask_price", &Instance::ask_price)
      .def_readwrite("order_quantity", &Instance::order_quantity)
      .def_readwrite("order_delivery_time", &Instance::order_delivery_time)
      .def("mc", &Instance::mc, py::arg("i"), py::arg("n"))
      .def("pc", &Instance::pc, py::arg("i"), py::arg("n"))
      .def("capacity", &Instance::capacity, py::arg("i"), py::arg("n"))
      .def("margin", &Instance::margin, py::arg("i"), py::arg("n"))
      .def(py::self == py::self)
      .def("__repr__", [](const Instance& inst) {
        return "Instance(" + std::to_string(inst.product_count) + " products, " +
               std::to_string(inst.manufacturer_count) + " manufacturers)";
      });

  m.def("validate_instance", &validate_instance, py::arg("instance"),
        "Every invariant violation as 'field: message'; empty means valid.");
  m.def("generate_instance", &generate_instance, py::arg("config"),
        "Deterministic seeded instance; the output always validates.");
  m.def("read_instance", &read_instance, py::arg("bytes"),
        "Parse the JSON instance format; raises ParseError with a location.");
  m.def("write_instance", &write_instance, py::arg("instance"),
        "Canonical JSON form: write(read(write(x))) == write(x) byte for byte.");
  m.def("scale_order_quantity", &scale_order_quantity, py::arg("instance"),
        py::arg("factor"),
        "Copy with each order quantity scaled and rounded to the nearest unit.");

  py::class_<ProductionPlan>(m, "ProductionPlan",
                             "An order allocation and its exact integer profit.")
      .def_readonly("product_count", &ProductionPlan::product_count)
      .def_readonly("manufacturer_count", &ProductionPlan::manufacturer_count)
      .def_readonly("allocation", &ProductionPlan::allocation)
      .def_readonly("shortage", &ProductionPlan::shortage)
      .def_readonly("total_profit", &ProductionPlan::total_profit)
      .def("q", &ProductionPlan::q, py::arg("i"), py::arg("n"))
      .def("total_shortage", &ProductionPlan::total_shortage);

  m.def("solve_cpp", &solve_cpp, py::arg("instance"), py::arg("coalition"),
        "Optimal integer plan for the coalition's manufacturers.");
  m.def("brute_force_cpp", &brute_force_cpp, py::arg("instance"), py::arg("coalition"),
        "Exhaustive verification oracle; raises GuardError on large search spaces.");
  m.def("plan_to_json", &plan_to_json, py::arg("plan"));

  py::class_<CharacteristicFunction>(m, "CharacteristicFunction",
                                     "values[mask] is the coalition's planning profit.")
      .def_readonly("manufacturer_count", &CharacteristicFunction::manufacturer_count)
      .def_readonly("values", &CharacteristicFunction::values)
      .def_readonly("grand_plan", &CharacteristicFunction::grand_plan)
      .def("value", &CharacteristicFunction::value, py::arg("coalition"))
      .def("grand_value", &CharacteristicFunction::grand_value)
      .def_static("from_values", &CharacteristicFunction::from_values,
                  py::arg("manufacturer_count"), py::arg("values"),
                  "Hand-built game for tests and comparator work; no production plan.");

  m.def("compute_characteristic", &compute_characteristic, py::arg("instance"),
        "Solves the planning model once per nonempty coalition.");

  py::class_<SuperadditivityViolation>(m, "SuperadditivityViolation")
      .def_readonly("a", &SuperadditivityViolation::a)
      .def_readonly("b", &SuperadditivityViolation::b)
      .def_readonly("value_a", &SuperadditivityViolation::value_a)
      .def_readonly("value_b", &SuperadditivityViolation::value_b)
      .def_readonly("value_union", &SuperadditivityViolation::value_union);

  m.def("superadditivity_report", &superadditivity_report, py::arg("cf"),
        "Disjoint coalition pairs whose raw values sum above their union's value.");
  m.def("characteristic_to_json", &characteristic_to_json, py::arg("cf"));

  py::class_<SimplexOptions>(m, "SimplexOptions")
      .def(py::init<>())
      .def_readwrite("feasibility_tol", &SimplexOptions::feasibility_tol)
      .def_readwrite("pivot_tol", &SimplexOptions::pivot_tol)
      .def_readwrite("max_tableau_bytes", &SimplexOptions::max_tableau_bytes);

  py::class_<AllocationResult>(m, "AllocationResult",
                               "Maximin profit split at the best rationality factor.")
      .def_readonly("profits", &AllocationResult::profits)
      .def_readonly("gamma", &AllocationResult::gamma)
      .def_readonly("order_values", &AllocationResult::order_values)
      .def_readonly("binding_coalitions", &AllocationResult::binding_coalitions)
      .def_readonly("in_core", &AllocationResult::in_core)
      .def_readonly("degenerate", &AllocationResult::degenerate);

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("failures", &VerificationReport::failures)
      .def("ok", &VerificationReport::ok);

  m.def("compute_order_values", &compute_order_values, py::arg("instance"),
        py::arg("plan"), "The value of the orders each manufacturer fulfils.");
  m.def("allocate",
        py::overload_cast<const CharacteristicFunction&, const std::vector<Money>&,
                          const SimplexOptions&>(&allocate),
        py::arg("cf"), py::arg("order_values"), py::arg("opts") = SimplexOptions{},
        "Allocation for an explicit characteristic function and ranking values.");
  m.def("allocate",
        py::overload_cast<const Instance&, const CharacteristicFunction&,
                          const SimplexOptions&>(&allocate),
        py::arg("instance"), py::arg("cf"), py::arg("opts") = SimplexOptions{},
        "Allocation with ranking values taken from the grand-coalition plan.");
  m.def("verify_allocation",
        py::overload_cast<const CharacteristicFunction&, const AllocationResult&>(
            &verify_allocation),
        py::arg("cf"), py::arg("result"),
        "Independent recheck of every allocation invariant.");
  m.def("verify_allocation",
        py::overload_cast<const Instance&, const CharacteristicFunction&,
                          const AllocationResult&>(&verify_allocation),
        py::arg("instance"), py::arg("cf"), py::arg("result"),
        "Recheck that also recomputes order values from the instance.");
  m.def("allocation_to_json", &allocation_to_json, py::arg("result"));

  py::class_<ShapleyVector>(m, "ShapleyVector")
      .def_readonly("values", &ShapleyVector::values);

  py::class_<CoreMembership>(m, "CoreMembership")
      .def_readonly("in_core", &CoreMembership::in_core)
      .def_readonly("worst_coalition", &CoreMembership::worst_coalition)
      .def_readonly("worst_deficit", &CoreMembership::worst_deficit);

  py::class_<MechanismComparison>(m, "MechanismComparison")
      .def_readonly("cf", &MechanismComparison::cf)
      .def_readonly("allocation", &MechanismComparison::allocation)
      .def_readonly("shapley_values", &MechanismComparison::shapley_values)
      .def_readonly("allocation_membership", &MechanismComparison::allocation_membership)
      .def_readonly("shapley_membership", &MechanismComparison::shapley_membership);

  m.def("shapley", &shapley, py::arg("cf"),
        "Exact marginal-contribution average; the empty coalition counts as 0.");
  m.def("core_membership", &core_membership, py::arg("cf"), py::arg("profits"),
        "Exact deficit scan of all nonempty coalitions.");
  m.def("compare", &compare, py::arg("instance"), py::arg("opts") = SimplexOptions{},
        "Full pipeline: plan, coalition values, both mechanisms, membership.");

  py::class_<ShapeSpec>(m, "ShapeSpec")
      .def(py::init<>())
      .def_readwrite("label", &ShapeSpec::label)
      .def_readwrite("product_count", &ShapeSpec::product_count)
      .def_readwrite("manufacturer_count", &ShapeSpec::manufacturer_count)
      .def_readwrite("count", &ShapeSpec::count)
      .def_readwrite("base_seed", &ShapeSpec::base_seed);

  py::class_<SuiteSpec>(m, "SuiteSpec")
      .def(py::init<>())
      .def_readwrite("shapes", &SuiteSpec::shapes);

  m.def("default_suite_spec", &default_suite_spec, py::arg("seed") = 42,
        "Six shapes of ten instances each, 1x5 through 10x10.");

  py::class_<InstanceReport>(m, "InstanceReport",
                             "Everything the pipeline produces for one instance.")
      .def_readonly("name", &InstanceReport::name)
      .def_readonly("plan", &InstanceReport::plan)
      .def_readonly("cf", &InstanceReport::cf)
      .def_readonly("order_values", &InstanceReport::order_values)
      .def_readonly("allocation_ok", &InstanceReport::allocation_ok)
      .def_readonly("allocation", &InstanceReport::allocation)
      .def_readonly("allocation_error", &InstanceReport::allocation_error)
      .def_readonly("shapley_values", &InstanceReport::shapley_values)
      .def_readonly("allocation_membership", &InstanceReport::allocation_membership)
      .def_readonly("shapley_membership", &InstanceReport::shapley_membership);

  m.def("solve_instance", &solve_instance, py::arg("instance"), py::arg("name"),
        py::arg("opts") = SimplexOptions{});

  py::class_<SuiteInstanceInput>(m, "SuiteInstanceInput")
      .def(py::init<>())
      .def(py::init([](std::string label, int index, Instance instance) {
             return SuiteInstanceInput{std::move(label), index, std::move(instance)};
           }),
           py::arg("label"), py::arg("index"), py::arg("instance"))
      .def_readwrite("label", &SuiteInstanceInput::label)
      .def_readwrite("index", &SuiteInstanceInput::index)
      .def_readwrite("instance", &SuiteInstanceInput::instance);

  py::class_<SuiteRow>(m, "SuiteRow")
      .def_readonly("label", &SuiteRow::label)
      .def_readonly("index", &SuiteRow::index)
      .def_readonly("total_profit", &SuiteRow::total_profit)
      .def_readonly("gamma", &SuiteRow::gamma)
      .def_readonly("allocation_ok", &SuiteRow::allocation_ok)
      .def_readonly("in_core", &SuiteRow::in_core)
      .def_readonly("degenerate", &SuiteRow::degenerate)
      .def_readonly("shortage", &SuiteRow::shortage);

  py::class_<ShapeSummary>(m, "ShapeSummary")
      .def_readonly("label", &ShapeSummary::label)
      .def_readonly("count", &ShapeSummary::count)
      .def_readonly("mean_profit", &ShapeSummary::mean_profit)
      .def_readonly("core_count", &ShapeSummary::core_count)
      .def_readonly("shortage_count", &ShapeSummary::shortage_count);

  py::class_<SuiteReport>(m, "SuiteReport")
      .def_readonly("rows", &SuiteReport::rows)
      .def_readonly("summaries", &SuiteReport::summaries)
      .def_readonly("scale_factor", &SuiteReport::scale_factor)
      .def_readonly("scaled_rows", &SuiteReport::scaled_rows)
      .def_readonly("scaled_summaries", &SuiteReport::scaled_summaries);

  m.def("run_suite", &run_suite, py::arg("instances"), py::arg("scale_factor") = 0.0,
        py::arg("opts") = SimplexOptions{},
        "Solves every instance; scale_factor > 0 re-runs with scaled orders.");

  m.def("format_money", &format_money, py::arg("value"));
  m.def("format_gamma", &format_gamma, py::arg("result"));
  m.def("render_instance_report", &render_instance_report, py::arg("report"));
  m.def("instance_report_to_json", &instance_report_to_json, py::arg("report"));
  m.def("render_suite_report", &render_suite_report, py::arg("report"));
  m.def("suite_report_to_json", &suite_report_to_json, py::arg("report"));
  m.def("render_comparison", &render_comparison, py::arg("comparison"));
  m.def("comparison_to_json", &comparison_to_json, py::arg("comparison"));

  // The CLI entry point, callable as c2mcollab.main(["solve", "file.json"]).
  m.def(
      "main",
      [](const std::vector<std::string>& args) {
        std::vector<const char*> argv;
        argv.reserve(args.size() + 1);
        argv.push_back("c2mcollab");
        for (const std::string& arg : args) argv.push_back(arg.c_str());
        return run_cli(static_cast<int>(argv.size()), argv.data());
      },
      py::arg("args"), "Run the command-line front end; returns the exit code.");
}
