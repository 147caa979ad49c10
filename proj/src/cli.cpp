#include "lamglass/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "lamglass/errors.hpp"
#include "lamglass/model_io.hpp"
#include "lamglass/report.hpp"

namespace lamglass::cli {

namespace {

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error(fmt::format("cannot open output file '{}'", path));
  file << content;
  if (!file) throw std::runtime_error(fmt::format("failed writing '{}'", path));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Layered Timoshenko beam solver for laminated glass"};
  app.require_subcommand(1);

  std::string model_path;
  std::string out_path;
  std::string format = "text";
  int elements = 0;
  std::vector<int> element_counts;

  auto* solve_cmd = app.add_subcommand("solve", "Analyse one model document");
  solve_cmd->add_option("--model", model_path, "Model document (JSON)")->required();
  solve_cmd->add_option("--elements", elements, "Override the element count")->check(CLI::Range(2, 1000000));
  solve_cmd->add_option("--out", out_path, "Write nodal results as CSV");
  solve_cmd->add_option("--format", format, "Standard output format")->check(CLI::IsMember({"text", "csv"}));

  auto* bench_cmd = app.add_subcommand("bench", "Run the embedded three-point bending benchmark");
  bench_cmd->add_option("--out", out_path, "Write benchmark table as CSV");
  bench_cmd->add_option("--format", format, "Standard output format")->check(CLI::IsMember({"text", "csv"}));

  auto* converge_cmd = app.add_subcommand("converge", "Midspan deflection for several element counts");
  converge_cmd->add_option("--model", model_path, "Model document (JSON)")->required();
  converge_cmd->add_option("--elements", element_counts, "Element counts, e.g. 10,20,40")
      ->required()
      ->delimiter(',')
      ->check(CLI::Range(2, 1000000));
  converge_cmd->add_option("--out", out_path, "Write the table as CSV");
  converge_cmd->add_option("--format", format, "Standard output format")->check(CLI::IsMember({"text", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kUsageOrIo;
  }

  try {
    if (*solve_cmd) {
      BeamModel model = load_model(model_path);
      if (elements != 0) model = with_elements(model, elements);
      const auto analysis = analyze(model);
      std::ostringstream csv;
      write_solution_csv(csv, analysis);
      if (!out_path.empty()) write_file(out_path, csv.str());
      if (format == "csv") {
        out << csv.str();
      } else {
        write_report_text(out, make_report(analysis));
      }
      return kOk;
    }
    if (*bench_cmd) {
      const auto outcome = run_benchmark();
      if (!out_path.empty()) write_file(out_path, outcome.csv);
      out << (format == "csv" ? outcome.csv : outcome.text);
      return outcome.within_tolerance ? kOk : kToleranceFailure;
    }
    if (*converge_cmd) {
      const auto rows = convergence_study(load_model(model_path), element_counts);
      std::ostringstream csv;
      write_convergence_csv(csv, rows);
      if (!out_path.empty()) write_file(out_path, csv.str());
      if (format == "csv") {
        out << csv.str();
      } else {
        fmt::print(out, "{:>10} {:>12}\n", "elements", "w_mid [mm]");
        for (const auto& r : rows) fmt::print(out, "{:10d} {:12.5f}\n", r.elements, r.midspan_deflection * 1e3);
      }
      return kOk;
    }
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << '\n';
    return kValidation;
  } catch (const SingularSystemError& e) {
    err << "error: " << e.what() << '\n';
    return kSingular;
  } catch (const std::domain_error& e) {
    err << "validation error: " << e.what() << '\n';
    return kValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageOrIo;
  }
  return kUsageOrIo;
}

}  // namespace lamglass::cli
