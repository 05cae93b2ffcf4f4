#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "possreason/fuzzy_set.hpp"

namespace possreason::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kParse = 2,
    kSchedule = 3,
    kResource = 4,
    kOracleMismatch = 5,
};

enum class Format { text, machine };

struct RunConfig {
    /// File path, or builtin name when `builtin` is set.
    std::string input;
    bool builtin = false;
    /// Empty: use the KB's query statements (all variables if it has none). "all" selects every variable.
    std::vector<std::string> queries;
    bool trace = false;
    bool oracle_check = false;
    std::optional<Grade> threshold;
    std::optional<std::size_t> max_cells;
    Format format = Format::text;
};

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Print the canonical DSL form of the input.
int print(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command line: `possreason run|print ...`.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace possreason::cli
