#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "housesim/scenario.hpp"
#include "housesim/sim.hpp"

namespace {

constexpr int kExitExpectFailed = 2;
constexpr int kExitParseError = 3;
constexpr int kExitIoError = 4;

int run_simulate(const std::string& scenario_path, housesim::SimOptions opts,
                 const std::string& trace_path, bool report_json) {
  std::ifstream in(scenario_path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open scenario file '" << scenario_path << "'\n";
    return kExitIoError;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  if (in.bad()) {
    std::cerr << "error: failed reading '" << scenario_path << "'\n";
    return kExitIoError;
  }

  housesim::Scenario scenario;
  try {
    scenario = housesim::parse_scenario(buf.str());
  } catch (const housesim::ScenarioParseError& e) {
    std::cerr << scenario_path << ": " << e.what() << "\n";
    return kExitParseError;
  }

  std::ofstream trace_file;
  std::ostream* trace_out = nullptr;
  if (trace_path == "-") {
    trace_out = &std::cout;
  } else if (!trace_path.empty()) {
    trace_file.open(trace_path, std::ios::binary);
    if (!trace_file) {
      std::cerr << "error: cannot open trace file '" << trace_path << "'\n";
      return kExitIoError;
    }
    trace_out = &trace_file;
  }

  housesim::Simulation sim(std::move(scenario), opts);
  const housesim::SimReport report = sim.run(trace_out);

  if (trace_out) {
    trace_out->flush();
    if (trace_out->fail()) {
      std::cerr << "error: trace write failed\n";
      return kExitIoError;
    }
  }

  if (report_json)
    std::cout << housesim::report_to_json(report, opts, scenario_path);
  else
    housesim::print_report(std::cout, report, opts, scenario_path);
  if (std::cout.fail()) return kExitIoError;

  return report.all_passed() ? 0 : kExitExpectFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dual-node greenhouse telemetry simulator"};
  app.require_subcommand(1);

  auto* sim_cmd = app.add_subcommand("simulate", "Run one scenario");
  std::string scenario_path;
  std::string trace_path;
  bool report_json = false;
  housesim::SimOptions opts;

  sim_cmd->add_option("--scenario", scenario_path, "Scenario file")->required();
  sim_cmd->add_option("--duration-ms", opts.duration_ms, "Simulated duration in ms")
      ->required()
      ->check(CLI::PositiveNumber);
  sim_cmd->add_option("--seed", opts.seed, "Link PRNG seed")->default_val(1);
  sim_cmd->add_option("--baud", opts.baud, "Serial baud rate")
      ->default_val(9600)
      ->check(CLI::PositiveNumber);
  sim_cmd->add_option("--latency-ms", opts.latency_ms, "Link latency in ms")
      ->default_val(0)
      ->check(CLI::NonNegativeNumber);
  sim_cmd->add_option("--drop-prob", opts.drop_prob, "Per-byte drop probability")
      ->default_val(0.0)
      ->check(CLI::Range(0.0, 1.0));
  sim_cmd->add_option("--bit-error-prob", opts.bit_error_prob, "Per-byte bit-flip probability")
      ->default_val(0.0)
      ->check(CLI::Range(0.0, 1.0));
  sim_cmd->add_option("--trace", trace_path, "Trace output path, or - for stdout");
  sim_cmd->add_option("--snapshot-every", opts.snapshot_every_ms,
                      "Emit display snapshots every N ms")
      ->check(CLI::NonNegativeNumber);
  sim_cmd->add_flag("--skip-config", opts.skip_config, "Start pre-paired, skip the AT phase");
  sim_cmd->add_flag("--report-json", report_json, "Machine-readable report on stdout");

  CLI11_PARSE(app, argc, argv);

  return run_simulate(scenario_path, opts, trace_path, report_json);
}
