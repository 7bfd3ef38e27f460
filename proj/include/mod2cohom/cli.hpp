#pragma once

// Command-line front end. Every subcommand builds a JSON report document
// (schema "mod2cohom/1"), prints a human-readable rendering of it and can
// write the document itself with --json.

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace mod2cohom::cli {

inline constexpr const char* kSchema = "mod2cohom/1";

enum ExitCode : int {
    kPass = 0,
    kVerificationFailed = 1,
    kUsageError = 2,
    kResourceError = 3,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Canonical serialization of a report: two-space indent, sorted keys,
// trailing newline.
std::string render_json(const nlohmann::json& doc);

}  // namespace mod2cohom::cli
