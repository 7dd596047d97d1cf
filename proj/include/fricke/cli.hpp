#pragma once

// The `fricke` command line. Every command builds a JSON array of records;
// text output is rendered from that array, so both formats carry the same data.

#include <ostream>
#include <string>

namespace fricke::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// argv[0] is the program name. Results go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Text form of a JSON document produced with --json.
std::string render_text(const std::string& json_document);

}  // namespace fricke::cli
