#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mvstone/runner.hpp"

namespace {

// Exit status contract: 0 all-pass, 1 verdict failure, 2 usage/parse error,
// 3 enumeration bound exceeded.
enum ExitCode { kOk = 0, kVerdictFailure = 1, kUsage = 2, kResource = 3 };

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw mvstone::InvalidArgumentError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_file(const std::string& path, const std::string& format,
             const mvstone::RunOptions& opts, bool timings) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const mvstone::MvError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  mvstone::SpecDocument doc;
  try {
    doc = mvstone::parse_spec(text);
  } catch (const mvstone::ParseError& e) {
    std::cerr << path << ":" << e.what() << "\n";
    return kUsage;
  } catch (const mvstone::ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  }
  auto start = std::chrono::steady_clock::now();
  mvstone::Report report;
  try {
    report = mvstone::run_document(doc, opts);
  } catch (const mvstone::ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  }
  if (format == "kv")
    std::cout << report.to_kv();
  else
    std::cout << report.to_text();
  if (timings) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cerr << "elapsed: " << ms << " ms\n";
  }
  return report.failures() == 0 ? kOk : kVerdictFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mvstone: exact finite MV-algebra / MV-topology duality checker"};
  app.set_version_flag("--version", std::string("mvstone ") + mvstone::kToolVersion);

  mvstone::RunOptions opts;
  bool timings = false;
  app.add_option("--seed", opts.seed, "Seed echoed into reports");
  app.add_option("--bound", opts.bound, "Enumeration cap (default 64)");
  app.add_flag("--timings", timings, "Print elapsed time to stderr");

  std::string check_file;
  CLI::App* check = app.add_subcommand("check", "Run a spec file, text report");
  check->add_option("file", check_file, "spec file")->required();

  std::string report_file;
  std::string format = "text";
  CLI::App* report = app.add_subcommand("report", "Run a spec file, pick a format");
  report->add_option("file", report_file, "spec file")->required();
  report->add_option("--format", format, "text or kv")
      ->check(CLI::IsMember({"text", "kv"}));

  app.require_subcommand(0, 1);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (check->parsed()) return run_file(check_file, "text", opts, timings);
  if (report->parsed()) return run_file(report_file, format, opts, timings);
  std::cerr << app.help();
  return kUsage;
}
