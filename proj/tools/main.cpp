#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "biquat/scenarios.hpp"
#include "biquat/serialization.hpp"

namespace sc = biquat::scenarios;

namespace {

sc::json load_config(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::invalid_argument("cannot open config file: " + path);
  return sc::json::parse(is);
}

sc::json config_from_flags(const std::string& scenario, const std::vector<std::string>& params,
                           std::optional<uint64_t> seed) {
  sc::json cfg;
  cfg["scenario"] = scenario;
  if (seed) cfg["seed"] = *seed;
  sc::json p = sc::json::object();
  for (const auto& kv : params) {
    const auto pos = kv.find('=');
    if (pos == std::string::npos)
      throw std::invalid_argument("expected key=value, got '" + kv + "'");
    const std::string key = kv.substr(0, pos), value = kv.substr(pos + 1);
    char* end = nullptr;
    const double num = std::strtod(value.c_str(), &end);
    if (end != value.c_str() && *end == '\0')
      p[key] = num;
    else
      p[key] = value;  // quantity string like "100 yr", or an enum value
  }
  cfg["params"] = p;
  return cfg;
}

void print_report(const sc::RunReport& rep, const std::string& format) {
  if (format == "csv") {
    std::cout << "name,value,threshold,pass\n";
    for (const auto& c : rep.checks)
      std::cout << c.name << "," << c.value << "," << c.threshold << ","
                << (c.pass ? "true" : "false") << "\n";
  } else {
    std::cout << rep.to_json().dump(2) << "\n";
  }
}

int run_config(const sc::json& config, const std::string& out_dir, const std::string& format) {
  try {
    const auto start = std::chrono::steady_clock::now();
    sc::RunReport rep = sc::run(config, out_dir);
    rep.duration_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    print_report(rep, format);
    std::cerr << "scenario " << rep.scenario << ": " << (rep.pass ? "PASS" : "FAIL") << " ("
              << rep.duration_ms << " ms)\n";
    return rep.pass ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}

int delegate(const std::string& scenario, const std::vector<std::string>& params,
             std::optional<uint64_t> seed, const std::string& out_dir,
             const std::string& format) {
  try {
    return run_config(config_from_flags(scenario, params, seed), out_dir, format);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quaternion and biquaternion numerics harness"};
  app.require_subcommand(1);

  std::string config_path, out_dir, format = "json";
  std::optional<uint64_t> seed;
  std::vector<std::string> params;
  std::string scenario_name;

  auto* run_cmd = app.add_subcommand("run", "run a scenario from a config file");
  run_cmd->add_option("--config", config_path, "JSON config file");
  run_cmd->add_option("--scenario", scenario_name, "scenario name (instead of a config file)");
  run_cmd->add_option("--param", params, "parameter override key=value");
  run_cmd->add_option("--seed", seed, "random seed");
  run_cmd->add_option("--out-dir", out_dir, "directory for report.json and CSV series");
  run_cmd->add_option("--format", format, "stdout format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* list_cmd = app.add_subcommand("list", "list scenarios and their parameters");
  bool list_json = false;
  list_cmd->add_flag("--json", list_json, "machine-readable catalog");

  auto* validate_cmd = app.add_subcommand("validate", "validate a config file");
  std::string validate_path;
  validate_cmd->add_option("--config", validate_path, "JSON config file")->required();

  auto* transform_cmd =
      app.add_subcommand("transform", "build a rotor from an angle triple and inspect it");
  std::vector<double> angles, imag_angles;
  transform_cmd->add_option("--angles", angles, "real parts of A, B, Gamma")->expected(3);
  transform_cmd->add_option("--imag", imag_angles, "imaginary parts of A, B, Gamma")
      ->expected(3);

  auto* mech_cmd = app.add_subcommand("mech", "mechanics scenarios (oscillator, chasing)");
  std::string mech_scenario;
  mech_cmd->add_option("scenario", mech_scenario, "oscillator or chasing")->required();
  mech_cmd->add_option("--param", params, "parameter override key=value");
  mech_cmd->add_option("--seed", seed, "random seed");
  mech_cmd->add_option("--out-dir", out_dir, "output directory");
  mech_cmd->add_option("--format", format, "stdout format: json or csv");

  auto* rel_cmd =
      app.add_subcommand("rel", "relativity scenarios (boost, circular, thomas, satellite, "
                                "hyperbolic)");
  std::string rel_scenario;
  rel_cmd->add_option("scenario", rel_scenario, "scenario name")->required();
  rel_cmd->add_option("--param", params, "parameter override key=value");
  rel_cmd->add_option("--seed", seed, "random seed");
  rel_cmd->add_option("--out-dir", out_dir, "output directory");
  rel_cmd->add_option("--format", format, "stdout format: json or csv");

  auto* field_cmd =
      app.add_subcommand("field", "field checks (fueter, maxwell, pauli, yangmills)");
  std::string field_scenario;
  field_cmd->add_option("check", field_scenario, "check name")->required();
  field_cmd->add_option("--param", params, "parameter override key=value");
  field_cmd->add_option("--seed", seed, "random seed");
  field_cmd->add_option("--out-dir", out_dir, "output directory");
  field_cmd->add_option("--format", format, "stdout format: json or csv");

  CLI11_PARSE(app, argc, argv);

  if (run_cmd->parsed()) {
    if (config_path.empty() && scenario_name.empty()) {
      std::cerr << "run: either --config or --scenario is required\n";
      return 2;
    }
    try {
      sc::json config = config_path.empty() ? config_from_flags(scenario_name, params, seed)
                                            : load_config(config_path);
      if (!config_path.empty()) {
        if (seed) config["seed"] = *seed;
        if (!params.empty()) {
          sc::json overrides = config_from_flags("x", params, std::nullopt)["params"];
          for (const auto& [k, v] : overrides.items()) config["params"][k] = v;
        }
      }
      return run_config(config, out_dir, format);
    } catch (const std::exception& e) {
      std::cerr << e.what() << "\n";
      return 2;
    }
  }

  if (list_cmd->parsed()) {
    if (list_json) {
      sc::json out = sc::json::array();
      for (const auto& s : sc::catalog()) {
        sc::json entry;
        entry["name"] = s.name;
        entry["summary"] = s.summary;
        sc::json ps = sc::json::array();
        for (const auto& p : s.params)
          ps.push_back(sc::json{{"key", p.key},
                                {"description", p.description},
                                {"unit", sc::canonical_unit(p.dim)},
                                {"default", p.def},
                                {"min", p.min},
                                {"max", p.max}});
        for (const auto& p : s.string_params)
          ps.push_back(sc::json{{"key", p.key},
                                {"description", p.description},
                                {"allowed", p.allowed},
                                {"default", p.def}});
        entry["params"] = ps;
        entry["covers"] = s.covered_ops;
        out.push_back(entry);
      }
      std::cout << out.dump(2) << "\n";
    } else {
      for (const auto& s : sc::catalog()) {
        std::cout << s.name << "\n    " << s.summary << "\n";
        for (const auto& p : s.params)
          std::cout << "    --param " << p.key << "=" << p.def << " ["
                    << sc::canonical_unit(p.dim) << "] " << p.description << "\n";
        for (const auto& p : s.string_params) {
          std::cout << "    --param " << p.key << "=" << p.def << " {";
          for (size_t i = 0; i < p.allowed.size(); ++i)
            std::cout << (i ? "|" : "") << p.allowed[i];
          std::cout << "} " << p.description << "\n";
        }
      }
    }
    return 0;
  }

  if (validate_cmd->parsed()) {
    try {
      const sc::json config = load_config(validate_path);
      const auto violations = sc::validate_config(config);
      if (violations.empty()) {
        std::cout << "config is valid\n";
        return 0;
      }
      for (const auto& v : violations)
        std::cout << (v.param.empty() ? "config" : v.param) << ": " << v.message << "\n";
      return 2;
    } catch (const std::exception& e) {
      std::cerr << e.what() << "\n";
      return 2;
    }
  }

  if (transform_cmd->parsed()) {
    if (angles.size() != 3) {
      std::cerr << "transform: --angles A B Gamma is required\n";
      return 2;
    }
    std::array<biquat::cplx, 3> abc;
    for (int i = 0; i < 3; ++i)
      abc[i] = {angles[i], imag_angles.size() == 3 ? imag_angles[i] : 0.0};
    try {
      const biquat::Rotor rotor = biquat::rotor_from_angles(abc[0], abc[1], abc[2]);
      sc::json out;
      out["rotor"] = biquat::to_json(rotor);
      const biquat::UnitTriad moved =
          biquat::vector_transform(rotor, biquat::pauli_triad());
      out["triad_rule_deviation"] = biquat::verify_triad(moved).worst();
      if (std::abs(rotor.o.trace() + 1.0) > 1e-6)
        out["spinor"] = biquat::to_json(biquat::u_from_o(rotor));
      std::cout << out.dump(2) << "\n";
      return 0;
    } catch (const std::exception& e) {
      std::cerr << e.what() << "\n";
      return 2;
    }
  }

  if (mech_cmd->parsed()) {
    if (mech_scenario != "oscillator" && mech_scenario != "chasing") {
      std::cerr << "mech: scenario must be oscillator or chasing\n";
      return 2;
    }
    return delegate(mech_scenario, params, seed, out_dir, format);
  }
  if (rel_cmd->parsed()) {
    const std::vector<std::string> allowed{"boost", "circular", "thomas", "satellite",
                                           "hyperbolic"};
    if (std::find(allowed.begin(), allowed.end(), rel_scenario) == allowed.end()) {
      std::cerr << "rel: unknown scenario '" << rel_scenario << "'\n";
      return 2;
    }
    return delegate(rel_scenario, params, seed, out_dir, format);
  }
  if (field_cmd->parsed()) {
    const std::vector<std::string> allowed{"fueter", "maxwell", "pauli", "yangmills"};
    if (std::find(allowed.begin(), allowed.end(), field_scenario) == allowed.end()) {
      std::cerr << "field: unknown check '" << field_scenario << "'\n";
      return 2;
    }
    return delegate(field_scenario, params, seed, out_dir, format);
  }
  return 2;
}
