// Command-line front end: validate | verify | generate | operators.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tdpair/leonard.hpp"
#include "tdpair/pipeline.hpp"

using namespace tdpair;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Usage, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Error(ErrorCode::Usage, "cannot write " + path);
}

std::vector<Scalar> parse_list(Field f, const std::string& text, const char* what) {
  std::vector<Scalar> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(f.parse(item));
    } catch (const Error& e) {
      throw Error(ErrorCode::ParseError, std::string(what) + ": " + e.what());
    }
  }
  if (out.empty()) throw Error(ErrorCode::ParseError, std::string(what) + ": empty list");
  return out;
}

/// Prints the report or writes it and prints a one-line summary.
int emit_report(const Report& r, const std::string& json_out) {
  if (json_out.empty()) {
    std::cout << r.json;
  } else {
    write_file(json_out, r.json);
    std::cout << (r.exit_code == kExitOk ? "ok" : "failed") << " (exit " << r.exit_code << "), report in " << json_out
              << "\n";
  }
  return r.exit_code;
}

int exit_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::Usage:
    case ErrorCode::ParseError:
      return kExitUsage;
    default:
      return kExitInvalid;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tridiagonal pair toolkit: validation, split decompositions, Delta and Psi"};
  app.require_subcommand(1);

  std::string path, json_out, checks, emit = "psi", preset, out_path, theta, theta_star, phi;
  bool timing = false;
  std::uint64_t reduce_p = 0, prime = 0;
  std::size_t d = 0;

  auto* validate = app.add_subcommand("validate", "Validate an instance file");
  validate->add_option("path", path, "Instance file")->required();
  validate->add_option("--json", json_out, "Write the report here instead of stdout");
  validate->add_flag("--timing", timing, "Record phase timings");

  auto* verify = app.add_subcommand("verify", "Validate and run the identity suites");
  verify->add_option("path", path, "Instance file")->required();
  verify->add_option("--checks", checks, "Comma-separated check ids (default: all)");
  verify->add_option("--field-reduce", reduce_p, "Reduce a rational instance into GF(p) first");
  verify->add_option("--json", json_out, "Write the report here instead of stdout");
  verify->add_flag("--timing", timing, "Record phase timings");

  auto* generate = app.add_subcommand("generate", "Write a validated instance file");
  generate->add_option("preset", preset, "Preset family");
  generate->add_option("--d", d, "Diameter for a preset");
  generate->add_option("--theta", theta, "Comma-separated eigenvalues of A");
  generate->add_option("--theta-star", theta_star, "Comma-separated eigenvalues of A*");
  generate->add_option("--phi", phi, "Comma-separated superdiagonal of A*");
  generate->add_option("--prime", prime, "Work over GF(p) instead of Q");
  generate->add_option("-o,--out", out_path, "Output file (default: stdout)");

  auto* operators = app.add_subcommand("operators", "Print an operator matrix");
  operators->add_option("path", path, "Instance file")->required();
  operators->add_option("--emit", emit, "delta | delta-inv | psi | commutator-LPsi")
      ->check(CLI::IsMember({"delta", "delta-inv", "psi", "commutator-LPsi"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*validate || *verify || *operators) {
      const std::string bytes = read_file(path);
      Instance inst = parse_instance(bytes);
      RunOptions options;
      options.seed = resolve_seed(bytes);
      options.timing = timing;
      if (*operators) {
        std::cout << format_matrix(select_operator(build_all(inst, options.seed), emit));
        return kExitOk;
      }
      if (*validate) return emit_report(validate_report(inst, options), json_out);
      if (reduce_p != 0) {
        try {
          inst = reduce_instance(inst, reduce_p);
          validate_td_pair(inst.pair);
        } catch (const Error& e) {
          if (e.code() == ErrorCode::ReductionFailed) throw;
          throw Error(ErrorCode::ReductionFailed, "p = " + std::to_string(reduce_p) + ": " + e.what());
        }
        options.reduced_mod = reduce_p;
      }
      if (!checks.empty()) {
        std::vector<std::string> ids;
        std::stringstream ss(checks);
        for (std::string id; std::getline(ss, id, ',');)
          if (!id.empty()) ids.push_back(id);
        options.checks = ids;
      }
      return emit_report(verify_report(inst, options), json_out);
    }

    // generate
    Instance inst;
    const bool custom = !theta.empty() || !theta_star.empty() || !phi.empty();
    if (custom == !preset.empty()) throw Error(ErrorCode::Usage, "give either a preset name or --theta/--theta-star/--phi");
    if (custom) {
      const Field f = prime ? Field::prime(prime) : Field::rational();
      LeonardParameters params{parse_list(f, theta, "--theta"), parse_list(f, theta_star, "--theta-star"),
                               parse_list(f, phi, "--phi")};
      inst.pair = leonard_generator(params);
      inst.name = "custom";
    } else {
      LeonardParameters params = preset_parameters(preset, d);
      if (prime) params = reduce_parameters(params, Field::prime(prime));
      inst.pair = leonard_generator(params);
      inst.name = preset + "_d" + std::to_string(d) + (prime ? "_gf" + std::to_string(prime) : "");
    }
    const TDSystem s = validate_td_pair(inst.pair).front();
    inst.expected_d = s.d;
    if (s.d >= 3) inst.expected_beta = compute_base(s).beta.str();
    const std::string text = write_instance(inst);
    if (out_path.empty()) {
      std::cout << text;
    } else {
      write_file(out_path, text);
    }
    return kExitOk;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_for(e);
  }
}
