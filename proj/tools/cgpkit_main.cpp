/*
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

// cgpkit: coherence generating power of quantum channels.
//
//   cgpkit exact <unitary.json>          closed-form CGP of a unitary gate
//   cgpkit estimate <channel.json>       seeded Monte Carlo CGP of a channel
//   cgpkit bound <channel.json>          unital upper bound Q(B^T)
//   cgpkit sweep --gate ... --out f.csv  parameter sweep of the closed curves
//   cgpkit gate <name> --out f.json      write a gate file
//   cgpkit verify                        run the integral-identity battery
//
// Exit codes: 0 ok, 1 verification failure, 2 parse error, 3 validation
// failure, 4 precondition failure, 5 I/O failure.

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cgpkit/cgpkit.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitPrecondition = 4;
constexpr int kExitIo = 5;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("CGPKIT_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw cgpkit::BadParameter(std::string("CGPKIT_SEED is not a valid seed: ") + env);
    }
  }
  return 0;
}

int run_exact(const std::string& file, const std::string& format) {
  const cgpkit::GateDocument doc = cgpkit::load_gate_document(file);
  if (!doc.unitary) {
    throw cgpkit::ParseError(file + ": expected a \"unitary\" gate file");
  }
  cgpkit::UnitaryMatrix u = [&] {
    try {
      return cgpkit::UnitaryMatrix(*doc.unitary);
    } catch (const cgpkit::NotUnitary& e) {
      throw cgpkit::NotUnitary(file + ": " + e.what());
    }
  }();

  const double value = cgpkit::exact_cgp(u);
  const double ceiling = cgpkit::max_cgp(u.dim());
  const bool maximal = cgpkit::is_max_cgp_unitary(u, 1e-10);
  if (format == "csv") {
    std::printf("dim,cgp,max_cgp,is_max\n");
    std::printf("%d,%.17g,%.17g,%s\n", u.dim(), value, ceiling, maximal ? "true" : "false");
  } else {
    nlohmann::json out;
    out["dim"] = u.dim();
    out["cgp"] = value;
    out["max_cgp"] = ceiling;
    out["is_max"] = maximal;
    std::cout << out.dump() << "\n";
  }
  return kExitOk;
}

int run_estimate(const std::string& file, std::uint64_t samples, std::uint64_t seed,
                 int workers) {
  const cgpkit::KrausChannel phi = cgpkit::channel_from_file(file);
  const cgpkit::CgpEstimate est = cgpkit::mc_cgp(phi, samples, seed, workers);
  nlohmann::json out;
  out["mean"] = est.mean;
  out["std_error"] = est.std_error;
  out["samples"] = est.samples;
  out["seed"] = est.seed;
  std::cout << out.dump() << "\n";
  return kExitOk;
}

int run_bound(const std::string& file) {
  const cgpkit::KrausChannel phi = cgpkit::channel_from_file(file);
  const double bound = cgpkit::unital_bound(phi); // throws NotUnital first
  nlohmann::json out;
  out["bound"] = bound;
  out["unital"] = true;
  std::cout << out.dump() << "\n";
  return kExitOk;
}

int run_sweep(const std::string& gate, double from, double to, int steps,
              const std::string& out_path) {
  if (steps < 2) throw cgpkit::BadParameter("sweep needs at least 2 steps");
  if (!(from < to)) throw cgpkit::BadParameter("sweep needs from < to");

  double (*curve)(double) = nullptr;
  if (gate == "rotation") {
    curve = cgpkit::cgp_curve_rotation;
  } else if (gate == "partial-swap") {
    curve = cgpkit::cgp_curve_partial_swap;
    if (from < 0.0 || to > 1.0) {
      throw cgpkit::BadParameter("partial-swap sweep range must stay inside [0, 1]");
    }
  } else {
    throw cgpkit::BadParameter("unknown sweep gate: " + gate);
  }

  std::FILE* f = std::fopen(out_path.c_str(), "wb");
  if (!f) throw cgpkit::IoError("cannot write " + out_path);
  std::fprintf(f, "param,cgp\n");
  for (int i = 0; i < steps; ++i) {
    const double param = from + (to - from) * static_cast<double>(i) / (steps - 1);
    std::fprintf(f, "%.17g,%.17g\n", param, curve(param));
  }
  if (std::fclose(f) != 0) throw cgpkit::IoError("write failed: " + out_path);
  return kExitOk;
}

int run_gate(const std::string& name, const std::string& out_path) {
  const cgpkit::GateSpec spec = cgpkit::GateSpec::parse(name);
  const cgpkit::UnitaryMatrix u = cgpkit::make_gate(spec);
  cgpkit::save_unitary_file(out_path, u.matrix());
  return kExitOk;
}

int run_verify(std::uint64_t seed, std::uint64_t samples) {
  const auto reports = cgpkit::run_identity_battery(seed, samples);
  std::cout << cgpkit::reports_to_json(reports).dump(2) << "\n";
  for (const auto& r : reports) {
    if (!r.passed) {
      std::cerr << "verification failed: " << r.name << " (|" << r.lhs << " - "
                << r.rhs << "| = " << r.abs_diff << " > " << r.tolerance << ")\n";
      return kExitVerifyFailed;
    }
  }
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"coherence generating power of quantum channels"};
  app.require_subcommand(1);

  std::string exact_file, exact_format = "json";
  auto* exact = app.add_subcommand("exact", "closed-form CGP of a unitary gate file");
  exact->add_option("file", exact_file, "unitary gate JSON file")->required();
  exact->add_option("--format", exact_format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));

  std::string est_file;
  std::uint64_t est_samples = 100000;
  std::uint64_t est_seed = 0;
  bool est_seed_given = false;
  int est_workers = 0;
  auto* estimate = app.add_subcommand("estimate", "Monte Carlo CGP of a channel file");
  estimate->add_option("file", est_file, "channel JSON file")->required();
  estimate->add_option("--samples", est_samples, "number of incoherent inputs");
  estimate->add_option("--seed", est_seed, "RNG seed")
      ->each([&est_seed_given](const std::string&) { est_seed_given = true; });
  estimate->add_option("--workers", est_workers, "worker threads (0 = auto)");

  std::string bound_file;
  auto* bound = app.add_subcommand("bound", "unital upper bound Q(B^T) of a channel file");
  bound->add_option("file", bound_file, "channel JSON file")->required();

  std::string sweep_gate, sweep_out;
  double sweep_from = 0.0, sweep_to = 1.0;
  int sweep_steps = 101;
  auto* sweep = app.add_subcommand("sweep", "write a CSV parameter sweep of a gate family");
  sweep->add_option("--gate", sweep_gate, "rotation or partial-swap")->required();
  sweep->add_option("--from", sweep_from, "range start")->required();
  sweep->add_option("--to", sweep_to, "range end")->required();
  sweep->add_option("--steps", sweep_steps, "number of rows");
  sweep->add_option("--out", sweep_out, "output CSV path")->required();

  std::string gate_name, gate_out;
  auto* gate = app.add_subcommand("gate", "write a gate JSON file");
  gate->add_option("name", gate_name, "gate spec, e.g. hadamard, rotation:0.785, fourier:4")
      ->required();
  gate->add_option("--out", gate_out, "output path")->required();

  std::uint64_t verify_seed = 0;
  bool verify_seed_given = false;
  std::uint64_t verify_samples = 100000;
  auto* verify = app.add_subcommand("verify", "run the integral-identity battery");
  verify->add_option("--seed", verify_seed, "RNG seed")
      ->each([&verify_seed_given](const std::string&) { verify_seed_given = true; });
  verify->add_option("--samples", verify_samples, "samples per Monte Carlo identity");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitParse;
  }

  try {
    if (exact->parsed()) return run_exact(exact_file, exact_format);
    if (estimate->parsed()) {
      const std::uint64_t seed = est_seed_given ? est_seed : default_seed();
      return run_estimate(est_file, est_samples, seed, est_workers);
    }
    if (bound->parsed()) return run_bound(bound_file);
    if (sweep->parsed()) return run_sweep(sweep_gate, sweep_from, sweep_to, sweep_steps, sweep_out);
    if (gate->parsed()) return run_gate(gate_name, gate_out);
    if (verify->parsed()) {
      const std::uint64_t seed = verify_seed_given ? verify_seed : default_seed();
      return run_verify(seed, verify_samples);
    }
  } catch (const cgpkit::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const cgpkit::BadParameter& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const cgpkit::NotUnital& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const cgpkit::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const cgpkit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitParse;
}
