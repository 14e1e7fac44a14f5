#include "airslot/scenario_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "airslot/allocator.hpp"
#include "airslot/payments.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace airslot;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "airslot_tests" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

void write_minimal_fixture(const fs::path& dir) {
  write_file(dir / "slots.csv", "slot_id,capacity\n0,5\n");
  write_file(dir / "cities.csv", "city_id,name,spi,population,class\n0,alpha,52.50,400000,remote\n");
  write_file(dir / "movements.csv", "movement_id,airline,city_id,requested_slot_id,alpha\n0,AL0,0,0,\n");
  write_file(dir / "valuations.csv", "movement_id,slot_id,valuation\n0,0,1250.75\n");
  write_file(dir / "current.csv", "movement_id,slot_id\n0,0\n");
  write_file(dir / "config.txt", "lambda=0.2\ng=100\ndelta=1e-06\ndefault_alpha=0.5\nscale=1000000\nseed=77\n");
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("minimal fixture loads and validates") {
  fs::path dir = fresh_dir("minimal");
  write_minimal_fixture(dir);
  LoadResult result = load_scenario(ScenarioFiles::in_dir(dir));
  REQUIRE_MESSAGE(result.ok(), (result.errors.empty() ? "" : result.errors.front()));
  CHECK(result.scenario->instance.num_movements() == 1);
  CHECK(result.scenario->instance.num_slots() == 1);
  CHECK(result.scenario->instance.slots[0].threshold == 4);
  CHECK(result.scenario->seed == 77);
  REQUIRE(result.scenario->current.slot_of[0].has_value());
  CHECK(*result.scenario->current.slot_of[0] == 0);
}

TEST_CASE("explicit alpha overrides the config default") {
  fs::path dir = fresh_dir("explicit_alpha");
  write_minimal_fixture(dir);
  write_file(dir / "movements.csv",
             "movement_id,airline,city_id,requested_slot_id,alpha\n0,AL0,0,0,0.700000\n");
  LoadResult result = load_scenario(ScenarioFiles::in_dir(dir));
  REQUIRE(result.ok());
  REQUIRE(result.scenario->instance.movements[0].alpha.has_value());
  CHECK(*result.scenario->instance.movements[0].alpha == doctest::Approx(0.7));
}

TEST_CASE("missing valuations default to zero with a warning") {
  fs::path dir = fresh_dir("missing_valuation");
  write_minimal_fixture(dir);
  write_file(dir / "slots.csv", "slot_id,capacity\n0,5\n1,5\n");
  // Only slot 0 is priced; slot 1 falls back to 0.
  LoadResult result = load_scenario(ScenarioFiles::in_dir(dir));
  REQUIRE(result.ok());
  CHECK(result.scenario->instance.valuations.at(0, 1) == 0.0);
  CHECK(test::any_error_contains(result.scenario->warnings, "defaulted to 0"));
}

TEST_CASE("malformed capacity is reported with its row") {
  fs::path dir = fresh_dir("bad_capacity");
  write_minimal_fixture(dir);
  write_file(dir / "slots.csv", "slot_id,capacity\n0,-3\n");
  LoadResult result = load_scenario(ScenarioFiles::in_dir(dir));
  REQUIRE(!result.ok());
  CHECK(test::any_error_contains(result.errors, "capacity must be >= 1"));
}

TEST_CASE("unparseable fields carry file and line") {
  fs::path dir = fresh_dir("bad_parse");
  write_minimal_fixture(dir);
  write_file(dir / "slots.csv", "slot_id,capacity\n0,abc\n");
  LoadResult result = load_scenario(ScenarioFiles::in_dir(dir));
  REQUIRE(!result.ok());
  CHECK(test::any_error_contains(result.errors, "slots.csv:2"));
}

TEST_CASE("histogram sampling") {
  SUBCASE("degenerate bin always returns its value") {
    ValuationHistogram h;
    h.per_slot = {{{100.0, 100.0, 1.0}}};
    ValuationMatrix v = sample_valuations(h, 4, 1, 9);
    for (int i = 0; i < 4; ++i) CHECK(v.at(i, 0) == 100.0);
  }
  SUBCASE("same seed, same matrix") {
    ValuationHistogram h;
    h.per_slot = {{{0.0, 1.0, 1.0}, {9.0, 10.0, 1.0}}, {{5.0, 6.0, 2.0}}};
    CHECK(sample_valuations(h, 6, 2, 31) == sample_valuations(h, 6, 2, 31));
    CHECK(sample_valuations(h, 6, 2, 31) != sample_valuations(h, 6, 2, 32));
  }
  SUBCASE("empirical mean approaches the analytic mean") {
    // Equal-frequency bins [0,1] and [9,10]: mean 5.0.
    ValuationHistogram h;
    h.per_slot = {{{0.0, 1.0, 1.0}, {9.0, 10.0, 1.0}}};
    ValuationMatrix v = sample_valuations(h, 100'000, 1, 123);
    double sum = 0.0;
    for (double x : v.data) sum += x;
    CHECK(std::abs(sum / 100'000 - 5.0) < 0.05);
  }
  SUBCASE("empty histograms are rejected") {
    ValuationHistogram h;
    h.per_slot = {{}};
    CHECK_THROWS_AS(sample_valuations(h, 1, 1, 0), std::invalid_argument);
  }
}

TEST_CASE("synth scenarios") {
  SUBCASE("empty spec is valid") {
    SynthSpec spec;
    spec.num_movements = 0;
    spec.num_slots = 2;
    spec.capacities = {3};
    SynthScenario s = synth_scenario(spec);
    fs::path dir = fresh_dir("synth_empty");
    write_scenario(s, dir);
    LoadResult result = load_scenario(ScenarioFiles::in_dir(dir));
    REQUIRE_MESSAGE(result.ok(), (result.errors.empty() ? "" : result.errors.front()));
    CHECK(result.scenario->instance.num_movements() == 0);
  }
  SUBCASE("same spec and seed produce byte-identical files") {
    SynthSpec spec;
    spec.num_movements = 40;
    spec.num_slots = 6;
    spec.capacities = {5};
    spec.seed = 2024;
    fs::path a = fresh_dir("synth_a");
    fs::path b = fresh_dir("synth_b");
    write_scenario(synth_scenario(spec), a);
    write_scenario(synth_scenario(spec), b);
    for (const char* name :
         {"slots.csv", "cities.csv", "movements.csv", "histograms.csv", "current.csv", "config.txt"})
      CHECK_MESSAGE(slurp(a / name) == slurp(b / name), name);
  }
  SUBCASE("generated scenarios load, validate and solve") {
    SynthSpec spec;
    spec.num_movements = 30;
    spec.num_slots = 5;
    spec.capacities = {4};
    spec.seed = 99;
    fs::path dir = fresh_dir("synth_solve");
    write_scenario(synth_scenario(spec), dir);
    LoadResult result = load_scenario(ScenarioFiles::in_dir(dir));
    REQUIRE(result.ok());
    const Instance& instance = result.scenario->instance;
    CHECK(instance.num_movements() == 30);
    // Current allocation honours capacities by construction.
    FixedEvalReport eval = evaluate_fixed_allocation(instance, result.scenario->current);
    CHECK(eval.feasible);
    SolveResult solved = solve_allocation(instance);
    CHECK(scaled_objective_value(instance, solved.allocation) >= eval.scaled_objective);
  }
  SUBCASE("demand beyond capacity is flagged, not fatal") {
    SynthSpec spec;
    spec.num_movements = 10;
    spec.num_slots = 2;
    spec.capacities = {2};
    SynthScenario s = synth_scenario(spec);
    CHECK(test::any_error_contains(s.warnings, "exceeds total capacity"));
  }
}

TEST_CASE("result files round-trip") {
  fs::path dir = fresh_dir("results");
  Instance instance = test::make_instance(2, {1, 1}, 0.0, 0.0, {0.5, 0.25},
                                          {{1000.0, 400.0}, {800.0, 300.0}});
  MechanismResult result = run_mechanism(instance);
  write_results(result, dir);

  SUBCASE("allocation.json reproduces the assignment") {
    Allocation reloaded = read_allocation_json(dir / "allocation.json", 2);
    CHECK(reloaded == result.allocation);
  }
  SUBCASE("payments.csv reproduces six-decimal payments") {
    std::vector<double> reloaded = read_payments_csv(dir / "payments.csv");
    REQUIRE(reloaded.size() == result.payments.size());
    for (std::size_t i = 0; i < reloaded.size(); ++i) {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.6f", result.payments[i]);
      CHECK(reloaded[i] == std::strtod(buf, nullptr));
    }
  }
  SUBCASE("rewriting reloaded results is byte-identical") {
    fs::path dir2 = fresh_dir("results_again");
    write_results(result, dir2);
    for (const char* name : {"allocation.json", "payments.csv", "metrics.json"})
      CHECK_MESSAGE(slurp(dir / name) == slurp(dir2 / name), name);
  }
}

TEST_CASE("comparison and sweep files have the declared shapes") {
  fs::path dir = fresh_dir("reports");
  Instance instance = test::make_instance(2, {1, 1}, 0.2, 10.0, {0.5, 0.25},
                                          {{1000.0, 400.0}, {800.0, 300.0}});
  Allocation current = displacement_minimizing_allocate(instance);
  ComparisonReport report = compare(instance, current, {10.0, 20.0});
  write_comparison(report, dir);
  std::string comparison = slurp(dir / "comparison.csv");
  CHECK(comparison.find("scenario,g,mechanism_social_utility") == 0);
  CHECK(std::count(comparison.begin(), comparison.end(), '\n') == 3);  // header + 2 rows

  std::vector<SweepRow> rows;
  for (double g : {10.0, 20.0})
    for (const char* method : {"mechanism", "current", "iata"}) {
      SweepRow row;
      row.g = g;
      row.method = method;
      rows.push_back(row);
    }
  write_sweep(rows, dir);
  std::string sweep = slurp(dir / "sweep.csv");
  CHECK(std::count(sweep.begin(), sweep.end(), '\n') == 7);  // header + 2x3 rows
  CHECK(sweep.find("n/a") != std::string::npos);
}
