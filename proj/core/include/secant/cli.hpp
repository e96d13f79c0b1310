#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace secant::cli {

enum class Command {
    Invariants,
    Lct,
    ZhuangCheck,
    CylinderVerify,
    ChowEval,
    HigherSecant,
    LedgerReplay,
};

enum class DMode { Single, Range, Symbolic };
enum class Output { Table, Json, Csv };

struct RunSpec {
    Command command = Command::Invariants;
    DMode d_mode = DMode::Symbolic;
    long long d_single = 0;
    long long d_lo = 0;
    long long d_hi = 0;
    Output output = Output::Table;
    std::optional<std::string> config_path; // lct / ledger-replay
    std::optional<std::string> expr;        // chow-eval
    unsigned k = 1;                         // higher-secant

    /// Parses "symbolic", "N", or "LO..HI" into the three d fields.
    void set_d(const std::string& text);
};

/// Executes a parsed spec. Exit status 0 on success, 1 when a
/// verification fails or cannot be decided, 2 on usage or domain errors.
int run(const RunSpec& spec, std::ostream& out, std::ostream& err);

/// Full command-line entry point (argv without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace secant::cli
