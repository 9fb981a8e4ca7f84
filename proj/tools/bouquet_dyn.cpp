// bouquet-dyn: periodic-point, Lefschetz and entropy report for a map on a
// bouquet of circles given by its action on the fundamental group.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bouquet/error.hpp"
#include "bouquet/report.hpp"
#include "bouquet/spec_document.hpp"

namespace fs = std::filesystem;
using namespace bouquet;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitMismatch = 2;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cli::read", "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int analyze(const std::string& file, const ReportOptions& options, const std::string& format) {
  const MapSpecDocument doc = parse_spec(read_file(file));
  const AnalysisReport report = run_report(doc, options);
  std::cout << (format == "json" ? to_json(report) : to_text(report));
  return report.all_checks_passed() ? kExitOk : kExitMismatch;
}

int fixtures(const fs::path& dir, bool update) {
  std::vector<fs::path> maps;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.path().extension() == ".map") maps.push_back(entry.path());
  std::sort(maps.begin(), maps.end());
  if (maps.empty()) throw InputError("cli::fixtures", "no .map files in " + dir.string());

  int status = kExitOk;
  for (const auto& path : maps) {
    const std::string name = path.stem().string();
    const AnalysisReport report = run_report(parse_spec(read_file(path)));
    const std::string json = to_json(report);
    const fs::path expected = dir / "expected" / (name + ".json");
    std::string verdict = "ok";
    if (update) {
      fs::create_directories(expected.parent_path());
      std::ofstream(expected, std::ios::binary) << json;
      verdict = "updated";
    } else if (!fs::exists(expected)) {
      verdict = "MISSING expected output";
      status = kExitMismatch;
    } else if (read_file(expected) != json) {
      verdict = "DIFF against " + expected.string();
      status = kExitMismatch;
    }
    if (!report.all_checks_passed()) {
      verdict += " (cross-check failures)";
      status = kExitMismatch;
    }
    std::cout << name << ": " << verdict << '\n';
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Periodic points, Lefschetz numbers and entropy of bouquet maps"};
  app.require_subcommand(1);

  ReportOptions options;
  std::string file;
  std::string format = "text";
  std::uint64_t horizon = 0;
  bool no_oracle = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze one map file");
  analyze_cmd->add_option("file", file, "Map description")->required()->check(CLI::ExistingFile);
  analyze_cmd->add_option("--horizon", horizon, "Largest iterate m (overrides the file)")
      ->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--oracle-depth", options.oracle_depth,
                          "Iterates checked against the exact lift")
      ->capture_default_str();
  analyze_cmd->add_flag("--no-oracle", no_oracle, "Skip the exact lift checks");
  analyze_cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  analyze_cmd->add_option("--entropy-horizon", options.entropy_horizon,
                          "Iterate used for the norm-growth entropy estimate")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string dir = "fixtures";
  bool update = false;
  auto* fixtures_cmd = app.add_subcommand("fixtures", "Run the fixture corpus");
  fixtures_cmd->add_option("--dir", dir, "Directory of .map files")->capture_default_str();
  fixtures_cmd->add_flag("--update", update, "Rewrite the expected outputs");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze_cmd) {
      if (horizon) options.horizon = horizon;
      options.oracle = !no_oracle;
      return analyze(file, options, format);
    }
    return fixtures(dir, update);
  } catch (const ConsistencyError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMismatch;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
}
