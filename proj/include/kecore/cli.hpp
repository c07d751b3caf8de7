#ifndef KECORE_CLI_HPP
#define KECORE_CLI_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "kecore/core_solver.hpp"
#include "kecore/generator.hpp"
#include "kecore/graph.hpp"

namespace kecore::cli {

enum class OutputFormat { Text, Json };

/// Parsed command line. `input` names an edge-list file, or "-" for the
/// input stream handed to run().
struct RunConfig {
    std::string command; // core | is-ke | matching | alpha | unique-mis | verify | gen
    std::string input = "-";
    CoreMode mode = CoreMode::Auto;
    int workers = 1;
    OutputFormat format = OutputFormat::Text;
    GenSpec gen;
};

/// Exit codes produced by run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitPrecondition = 3;
inline constexpr int kExitTooLarge = 4;
inline constexpr int kExitMismatch = 5;

/// Executes one command. The result document goes to `out`; diagnostics go
/// to `err` only. Output is deterministic: JSON objects have sorted keys,
/// id arrays ascend, and worker count never changes a byte.
int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

/// JSON document for a core computation (also used by run).
nlohmann::json core_result_to_json(const Graph& g, const CoreResult& result);

} // namespace kecore::cli

#endif
