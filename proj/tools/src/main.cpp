#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "noneq/cli/runner.hpp"

int main(int argc, char** argv) {
  using namespace noneq::cli;

  CLI::App app{"Frequency-domain optical signals of nonequilibrium multilevel systems",
               "noneq-spectra"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kArtifactVersion);

  std::string scenario;
  std::string outdir = ".";
  bool svg = false, dry_run = false;
  std::optional<unsigned> threads;

  auto common = [&](CLI::App* sub) {
    sub->add_option("scenario", scenario, "scenario file")->required();
    sub->add_option("-o,--output", outdir, "output directory");
    sub->add_flag("--svg", svg, "also write an SVG rendering");
    sub->add_option("--threads", threads,
                    "worker threads (fallback: NONEQ_SPECTRA_THREADS)")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--dry-run", dry_run, "parse and validate only");
  };

  CLI::App* run_cmd = app.add_subcommand("run", "run a scenario");
  common(run_cmd);

  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "run a scenario over a parameter axis");
  common(sweep_cmd);
  std::string axis;
  SweepSpec sweep;
  sweep_cmd->add_option("--axis", axis, "phi2, Omega or omega0")
      ->required()
      ->check(CLI::IsMember({"phi2", "Omega", "omega0"}));
  sweep_cmd->add_option("--min", sweep.min, "first axis value")->required();
  sweep_cmd->add_option("--max", sweep.max, "last axis value")->required();
  sweep_cmd->add_option("--points", sweep.points, "number of axis values")
      ->required()
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kParse;
  }

  RunOptions opt;
  opt.output_dir = outdir;
  opt.svg = svg;
  opt.dry_run = dry_run;
  opt.threads = resolve_threads(threads);
  if (sweep_cmd->parsed()) {
    sweep.axis = *parse_axis(axis);
    opt.sweep = sweep;
  }
  return run(scenario, opt, std::cout, std::cerr);
}
