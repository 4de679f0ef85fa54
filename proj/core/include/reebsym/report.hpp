#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reebsym/error.hpp"
#include "reebsym/fixtures.hpp"
#include "reebsym/permutation.hpp"
#include "reebsym/srf.hpp"

namespace reebsym {

inline constexpr std::string_view kSchema = "reeb-sym/1";

/// Process exit codes of the command line tool.
enum ExitCode : int { kExitOk = 0, kExitInputError = 1, kExitNegative = 2 };

struct CommandOutput {
  int exit_code = kExitOk;
  std::string text;
};

enum class ReebFormat { Dot, Json };

/// Vertex census, Euler characteristic, genus and genericity. Exits 1 when
/// the field is not level-generic.
CommandOutput run_analyze(const SrfDocument& doc);

CommandOutput run_reeb(const SrfDocument& doc, ReebFormat format);

/// Generators, one per line in cycle notation over germ indices; '#' starts
/// a comment. An empty list yields the trivial group.
std::vector<Permutation> parse_subgroup(std::string_view text, int germ_count);

/// Full lifting pipeline at a Reeb vertex. `subgroup` is the generator file
/// text; without it H is the whole local stabilizer. Exits 2 on a negative
/// result (not special, condition (C) fails, no section).
CommandOutput run_lift(const SrfDocument& doc, int reeb_vertex, const std::optional<std::string>& subgroup,
                       std::size_t size_limit = 10000);

/// SRF text of the fixture.
CommandOutput run_fixture(const FixtureSpec& spec);

/// JSON object describing an error.
std::string error_report(const Error& error);

}  // namespace reebsym
