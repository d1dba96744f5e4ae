#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wgc {

inline constexpr const char* kVersion = "0.1.0";

enum class Command { Validate, Generate, Partition, Analyze, Spectrum, Det, Table, Raa };

enum class OutputFormat { Json, Csv, Raw };

/// One resolved CLI invocation. p and q are required for every command
/// except Table; csv is valid only for Table and raw only for Generate.
struct RunConfig {
    Command command = Command::Validate;
    std::uint64_t p = 0;
    std::uint64_t q = 0;
    std::uint64_t g_override = 0;
    bool strict = true;
    OutputFormat format = OutputFormat::Json;
    std::optional<std::string> output_path;
    // Table: pair list override (defaults to the built-in ten pairs).
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
    // Table: determinant verification is run only for periods up to this cap.
    std::uint64_t det_max = 200;
    // Raa: prefix length; 0 means two periods.
    std::uint64_t prefix_bits = 0;
};

/// Exit codes: 0 ok, 1 verification failure, 2 invalid input.
struct RunResult {
    int exit_code = 0;
    std::string output;
};

/// Execute one command and render its report. Identical configs produce
/// byte-identical output.
RunResult run(const RunConfig& config);

/// The ten built-in (p, q) reference pairs of the table command.
const std::vector<std::pair<std::uint64_t, std::uint64_t>>& builtin_table_pairs();

}  // namespace wgc
