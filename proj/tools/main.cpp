#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "copoisson/cli.hpp"

namespace {

bool read_input(const std::string& path, std::string& text) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    buf << in.rdbuf();
  }
  text = buf.str();
  return true;
}

int emit(const copoisson::CommandResult& r) {
  std::cout << r.output;
  if (!r.error.empty()) std::cerr << r.error << "\n";
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  using copoisson::OutputFormat;

  CLI::App app{"Exact checks for Poisson and co-Poisson structures on polynomial Hopf algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  std::optional<std::size_t> max_degree;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--max-degree", max_degree, "Degree bound N (overrides the file)");

  std::string check_file;
  std::vector<std::string> checks;
  auto* check = app.add_subcommand("check", "Run checks on a structure file");
  check->add_option("file", check_file, "Structure file, or - for stdin")->required();
  check->add_option("--checks", checks, "Checks to run (comma separated, or all)")->delimiter(',');

  std::string transform_file, to;
  auto* transform = app.add_subcommand("transform", "Convert between equivalent descriptions");
  transform->add_option("file", transform_file, "Structure file, or - for stdin")->required();
  transform->add_option("--to", to, "Target: q, i, p, j, copoisson, series")->required();

  std::string structure;
  bool hopf = false;
  auto* classify = app.add_subcommand("classify-h4", "Classify structures on the Sweedler algebra");
  classify->add_option("--structure", structure, "poisson or copoisson")->required();
  classify->add_flag("--hopf", hopf, "Impose Hopf compatibility");

  long dim = 0;
  auto* relations = app.add_subcommand("relations", "List co-Jacobi relations on structure constants");
  relations->add_option("--dim", dim, "Number of variables")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return copoisson::kExitUsage;
  }

  OutputFormat fmt = format == "text" ? OutputFormat::text : OutputFormat::json;

  if (*check || *transform) {
    const std::string& path = *check ? check_file : transform_file;
    std::string text;
    if (!read_input(path, text)) {
      std::cerr << "error: cannot read " << path << "\n";
      return copoisson::kExitUsage;
    }
    if (*check) {
      copoisson::CheckRequest req;
      req.input_text = std::move(text);
      req.max_degree = max_degree;
      req.checks = checks;
      req.format = fmt;
      return emit(copoisson::cmd_check(req));
    }
    copoisson::TransformRequest req;
    req.input_text = std::move(text);
    req.to = to;
    req.format = fmt;
    return emit(copoisson::cmd_transform(req));
  }
  if (*classify) return emit(copoisson::cmd_classify_h4(structure, hopf, fmt));
  return emit(copoisson::cmd_relations(dim, fmt));
}
