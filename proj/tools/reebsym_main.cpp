#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "reebsym/report.hpp"

namespace {

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw reebsym::Error(reebsym::ErrorCode::InvalidInput, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reeb graphs, symmetry groups and lifted sections for scalar fields on triangulated surfaces"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 0;
  std::size_t size_limit = 10000;
  app.add_option("--seed", seed, "Jitter seed for generated fixtures");
  app.add_option("--size-limit", size_limit, "Largest group or search size to enumerate")->check(CLI::PositiveNumber);

  std::string input;

  auto* analyze = app.add_subcommand("analyze", "Classify vertices and report Euler characteristic and genus");
  analyze->add_option("input", input, "SRF file")->required();

  std::string format = "dot";
  auto* reeb = app.add_subcommand("reeb", "Emit the Reeb graph");
  reeb->add_option("input", input, "SRF file")->required();
  reeb->add_option("--format", format, "Output format")->check(CLI::IsMember({"dot", "json"}));

  int vertex = -1;
  std::string subgroup_path;
  auto* lift = app.add_subcommand("lift", "Lift a subgroup of the local stabilizer at a Reeb vertex");
  lift->add_option("input", input, "SRF file")->required();
  lift->add_option("--vertex", vertex, "Reeb vertex id")->required();
  lift->add_option("--subgroup", subgroup_path, "File of generators in cycle notation over germ indices");

  std::string fixture_name;
  int k = 0;
  std::string output;
  auto* fixture = app.add_subcommand("fixture", "Write a generated fixture as SRF");
  fixture->add_option("name", fixture_name, "sphere_height, torus_height, beachball or flower, e.g. beachball(3)")
      ->required();
  fixture->add_option("--k", k, "Fixture parameter");
  fixture->add_option("-o,--output", output, "Write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : reebsym::kExitInputError;
  }

  try {
    reebsym::CommandOutput result;
    if (*analyze) {
      result = reebsym::run_analyze(reebsym::read_srf_file(input));
    } else if (*reeb) {
      result = reebsym::run_reeb(reebsym::read_srf_file(input),
                                 format == "json" ? reebsym::ReebFormat::Json : reebsym::ReebFormat::Dot);
    } else if (*lift) {
      std::optional<std::string> subgroup;
      if (!subgroup_path.empty()) subgroup = read_text(subgroup_path);
      result = reebsym::run_lift(reebsym::read_srf_file(input), vertex, subgroup, size_limit);
    } else if (*fixture) {
      result = reebsym::run_fixture(reebsym::FixtureSpec::parse(fixture_name, k, seed));
      if (!output.empty()) {
        std::ofstream out(output, std::ios::binary);
        if (!out) throw reebsym::Error(reebsym::ErrorCode::InvalidInput, "cannot write '" + output + "'");
        out << result.text;
        return result.exit_code;
      }
    }
    std::cout << result.text;
    return result.exit_code;
  } catch (const reebsym::Error& e) {
    std::cerr << reebsym::error_report(e);
    return reebsym::kExitInputError;
  }
}
