// conesing: valuations, classification and jumping numbers of cone
// singularities over polarized surfaces.
//
// Exit codes: 0 success, 2 input/validation, 3 mathematical infeasibility,
// 4 internal assertion.

#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "conesing/config.hpp"
#include "conesing/error.hpp"
#include "conesing/presets.hpp"
#include "conesing/report.hpp"
#include "conesing/singularity.hpp"

namespace {

using namespace conesing;

constexpr int kUsage = 2;

struct OutputFormat {
  bool json = false;
  bool text = false;
};

void add_format(CLI::App* cmd, OutputFormat& fmt) {
  auto* j = cmd->add_flag("--json", fmt.json, "Emit JSON");
  auto* t = cmd->add_flag("--text", fmt.text, "Emit aligned text (default)");
  j->excludes(t);
}

std::string render(const SingularityReport& r, const OutputFormat& fmt) {
  return fmt.json ? to_json(r).dump(2) + "\n" : render_text(r);
}

int report_error(const Error& e) {
  std::cerr << "conesing: " << to_string(e.code()) << ": " << e.what() << "\n";
  return exit_code_for(e.code());
}

int run_analyze(const std::vector<std::string>& paths, const OutputFormat& fmt) {
  // Configs are independent; analyze them concurrently, print in order.
  std::vector<std::future<SingularityReport>> jobs;
  for (const auto& path : paths) {
    jobs.push_back(std::async(std::launch::async, [path] { return analyze(build_cone(load_config(path))); }));
  }
  std::vector<SingularityReport> reports;
  std::optional<Error> first_error;
  for (auto& job : jobs) {
    try {
      reports.push_back(job.get());
    } catch (const Error& e) {
      if (!first_error) first_error = e;
    }
  }
  if (first_error) throw *first_error;
  if (fmt.json && reports.size() > 1) {
    nlohmann::ordered_json all = nlohmann::ordered_json::array();
    for (const auto& r : reports) all.push_back(to_json(r));
    std::cout << all.dump(2) << "\n";
    return 0;
  }
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (i) std::cout << "\n";
    std::cout << render(reports[i], fmt);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact valuations, singularity classes and jumping numbers of cone singularities"};
  app.require_subcommand(1);

  OutputFormat analyze_fmt, jumping_fmt, limit_fmt, preset_fmt;

  std::vector<std::string> analyze_paths;
  auto* analyze_cmd = app.add_subcommand("analyze", "Full report for one or more surface configs");
  analyze_cmd->add_option("--config", analyze_paths, "Surface config JSON (repeatable)")->required();
  add_format(analyze_cmd, analyze_fmt);

  std::string jumping_path;
  long jumping_count = 10;
  auto* jumping_cmd = app.add_subcommand("jumping", "List jumping numbers of the vertex");
  jumping_cmd->add_option("--config", jumping_path, "Surface config JSON")->required();
  jumping_cmd->add_option("--count", jumping_count, "How many jumping numbers");
  add_format(jumping_cmd, jumping_fmt);

  std::string limit_path;
  long max_m = 16;
  auto* limit_cmd = app.add_subcommand("limit", "Limiting m-valuations for m = 1..M");
  limit_cmd->add_option("--config", limit_path, "Surface config JSON")->required();
  limit_cmd->add_option("--max-m", max_m, "Largest m");
  add_format(limit_cmd, limit_fmt);

  std::string preset_name;
  bool emit_config = false;
  bool run_preset = false;
  auto* preset_cmd = app.add_subcommand("preset", "Built-in examples: abelian-cover, p1xE[:d], quadrant-synthetic[:k1,k2]");
  preset_cmd->add_option("id", preset_name, "Preset id")->required();
  auto* emit_flag = preset_cmd->add_flag("--emit-config", emit_config, "Write the equivalent config JSON");
  auto* run_flag = preset_cmd->add_flag("--run", run_preset, "Analyze the preset");
  emit_flag->excludes(run_flag);
  add_format(preset_cmd, preset_fmt);

  std::string plot_path;
  std::string plane = "0,1";
  long samples = 64;
  auto* plot_cmd = app.add_subcommand("plotdata", "CSV of the cone slice boundary and the K- pencil");
  plot_cmd->add_option("--config", plot_path, "Surface config JSON")->required();
  plot_cmd->add_option("--plane", plane, "Two basis indices, e.g. 0,1");
  plot_cmd->add_option("--samples", samples, "Samples per curve");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (analyze_cmd->parsed()) return run_analyze(analyze_paths, analyze_fmt);

    if (jumping_cmd->parsed()) {
      if (jumping_count < 1) throw Error(Errc::InvalidArgument, "--count must be >= 1");
      const auto cone = build_cone(load_config(jumping_path));
      const auto jumps = jumping_numbers(cone, static_cast<std::size_t>(jumping_count));
      std::cout << (jumping_fmt.json ? jumping_json(cone.label, jumps).dump(2) + "\n" : jumping_text(cone.label, jumps));
      return 0;
    }

    if (limit_cmd->parsed()) {
      if (max_m < 1) throw Error(Errc::InvalidArgument, "--max-m must be >= 1");
      const auto cone = build_cone(load_config(limit_path));
      const QuadNum t = minus_threshold(cone).t;
      const auto rows = limit_table(t, max_m);
      std::cout << (limit_fmt.json ? limit_json(cone.label, t, rows).dump(2) + "\n" : limit_text(cone.label, t, rows));
      return 0;
    }

    if (preset_cmd->parsed()) {
      const auto id = PresetId::parse(preset_name);
      if (emit_config) {
        std::cout << to_json(preset_config(id)).dump(2) << "\n";
        return 0;
      }
      if (!run_preset) throw Error(Errc::InvalidArgument, "preset needs --emit-config or --run");
      std::cout << render(analyze(build(id)), preset_fmt);
      return 0;
    }

    if (plot_cmd->parsed()) {
      const auto comma = plane.find(',');
      if (comma == std::string::npos) throw Error(Errc::InvalidArgument, "--plane expects i,j");
      std::size_t i = 0, j = 0;
      try {
        i = std::stoul(plane.substr(0, comma));
        j = std::stoul(plane.substr(comma + 1));
      } catch (const std::exception&) {
        throw Error(Errc::InvalidArgument, "--plane expects two non-negative integers");
      }
      if (samples < 1) throw Error(Errc::InvalidArgument, "--samples must be >= 1");
      const auto cone = build_cone(load_config(plot_path));
      std::cout << plot_csv(plot_data(cone, i, j, static_cast<std::size_t>(samples)));
      return 0;
    }
  } catch (const Error& e) {
    return report_error(e);
  } catch (const std::exception& e) {
    std::cerr << "conesing: internal error: " << e.what() << "\n";
    return 4;
  }
  return kUsage;
}
