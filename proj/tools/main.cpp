#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "realbezout/deform.hpp"
#include "realbezout/poly_io.hpp"

using namespace rbz;
using namespace rbz::cli;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Polynomial> read_polys(const std::string& path) {
  try {
    return parse_system(read_file(path));
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Real Bezout bounds, component counts and deformation audits"};
  app.require_subcommand(1);

  std::string json_path;
  std::uint64_t seed = 0;
  std::string constant_base = "1";
  int depth = 12;
  app.add_option("--json", json_path, "Write the report to this file");
  app.add_option("--seed", seed, "Seed for every generic construction");
  app.add_option("--constant-base", constant_base, "Constant c in c^k * structural sum, as P/Q");
  app.add_option("--depth", depth, "Maximum subdivision depth");

  std::string profile_path, mode = "components", family_degs;
  BoundArgs bound;
  auto* bound_cmd = app.add_subcommand("bound", "Evaluate a bound for a degree/dimension profile");
  bound_cmd->add_option("--profile", profile_path, "Profile JSON file")->required();
  bound_cmd->add_option("--mode", mode, "components, sign-conditions or subsets")
      ->check(CLI::IsMember({"components", "sign-conditions", "subsets"}));
  bound_cmd->add_option("--s", bound.s, "Family size (sign-conditions)");
  bound_cmd->add_option("--d", bound.d, "Family degree (sign-conditions)");
  bound_cmd->add_option("--family-degs", family_degs, "Family degrees, comma separated (subsets)");

  VerifyArgs verify;
  std::string dims, degs;
  auto* verify_cmd = app.add_subcommand("verify", "Count a tightness family and compare with its bound");
  verify_cmd->alias("verify-family");
  verify_cmd->add_option("--example", verify.example, "11 or 15")->required();
  verify_cmd->add_option("--d", verify.d, "Degree parameter (example 11)");
  verify_cmd->add_option("--k", verify.k, "Ambient dimension (example 15)");
  verify_cmd->add_option("--dims", dims, "k_0,...,k_ell (example 15)");
  verify_cmd->add_option("--degs", degs, "d_1,...,d_ell (example 15)");

  std::string system_path, family_path, box_text, census_profile;
  auto* census_cmd = app.add_subcommand("census", "Components per sign condition on a variety");
  census_cmd->add_option("--system", system_path, "Equations, polynomial text format")->required();
  census_cmd->add_option("--pfamily", family_path, "Sign family, polynomial text format");
  census_cmd->add_option("--box", box_text, "lo:hi per axis, comma separated")->required();
  census_cmd->add_option("--profile", census_profile, "Profile JSON for the bound comparison");

  std::string tau_text, schedule_text, schedule_base, deform_system;
  DeformArgs deform;
  bool summary = false;
  auto* deform_cmd = app.add_subcommand("deform-audit", "Build approximating tuples and audit their structure");
  deform_cmd->add_option("--profile", profile_path, "Profile JSON file")->required();
  deform_cmd->add_option("--tau", tau_text, "Chain k,tau_1,...,tau_j")->required();
  deform_cmd->add_option("--system", deform_system, "Q_1..Q_ell, polynomial text format");
  deform_cmd->add_option("--schedule", schedule_text, "Infinitesimal values in decreasing order, comma separated");
  deform_cmd->add_option("--schedule-base", schedule_base, "Ratio of the geometric schedule, as P/Q");
  deform_cmd->add_flag("--square", deform.square, "Square every Q_i first");
  deform_cmd->add_flag("--summary", summary, "Omit the polynomials from the report");

  for (auto* sub : {bound_cmd, verify_cmd, census_cmd, deform_cmd}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  std::string command = app.get_subcommands().front()->get_name();
  Json report;
  try {
    GlobalOptions g;
    g.seed = seed;
    g.depth = depth;
    try {
      g.constant_base = parse_rational(constant_base);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--constant-base: ") + e.what());
    }
    if (g.constant_base <= 0) throw UsageError("--constant-base must be positive");

    if (*bound_cmd) {
      bound.profile_text = read_file(profile_path);
      bound.mode = mode == "components"        ? BoundMode::kComponents
                   : mode == "sign-conditions" ? BoundMode::kSignConditions
                                               : BoundMode::kSubsets;
      if (!family_degs.empty()) bound.family_degs = parse_int_list(family_degs);
      report = cmd_bound(bound, g);
    } else if (*verify_cmd) {
      if (!dims.empty()) verify.dims = parse_int_list(dims);
      if (!degs.empty()) verify.degs = parse_int_list(degs);
      report = cmd_verify(verify, g);
    } else if (*census_cmd) {
      CensusArgs c;
      c.system = read_polys(system_path);
      c.system_label = system_path;
      if (!family_path.empty()) {
        c.family = read_polys(family_path);
        c.family_label = family_path;
      }
      c.box = parse_box(box_text);
      if (!census_profile.empty()) c.profile_text = read_file(census_profile);
      report = cmd_census(c, g);
    } else {
      deform.profile_text = read_file(profile_path);
      deform.chain = parse_int_list(tau_text);
      if (!deform_system.empty()) deform.system = read_polys(deform_system);
      if (!schedule_text.empty()) deform.schedule = parse_rational_list(schedule_text);
      if (!schedule_base.empty()) deform.schedule_base = parse_rational_list(schedule_base).at(0);
      deform.emit_polynomials = !summary;
      report = cmd_deform_audit(deform, g);
    }
  } catch (const UsageError& e) {
    report = error_report(command, e.what());
  } catch (const ScheduleError& e) {
    report = error_report(command, e.what());
  }

  if (report.contains("error")) std::cerr << "error: " << report["error"].get<std::string>() << "\n";
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) {
      std::cerr << "error: cannot write " << json_path << "\n";
      return kExitUsage;
    }
    out << render(report);
  } else {
    std::cout << render(report);
  }
  if (!report.contains("error")) {
    for (const auto& v : report["verdicts"]) {
      std::cerr << (v["pass"].get<bool>() ? "pass  " : "FAIL  ") << v["name"].get<std::string>() << ": "
                << v["statement"].get<std::string>() << "\n";
    }
  }
  return exit_code(report);
}
