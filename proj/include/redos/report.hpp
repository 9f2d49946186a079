#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "redos/dynamic.hpp"
#include "redos/strimp.hpp"

namespace redos::report {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

enum ExitCode : int {
    kExitLinear = 0,
    kExitError = 1,
    kExitSuperLinear = 2,
    kExitWarnings = 2,
    kExitExponential = 3,
    kExitUnknown = 4,
    kExitNotVulnerable = 5,
};

struct Options {
    bool dynamic = true;
    std::uint64_t threshold = kDefaultThreshold;
    std::size_t budget = kDefaultComplementBudget;
    double deadline_seconds = 10.0;
    bool timings = false;
};

struct RegexReport {
    Json json;
    int exit_code = kExitLinear;
};

/// Failure to parse or compile is reported in the JSON with exit code 1.
RegexReport analyze_regex(const std::string& regex, const Options& opts = {});

struct ProgramReport {
    Json json;
    int exit_code = kExitLinear;
};

/// `subject` is only used as the report's subject field.
ProgramReport analyze_program(const std::string& source, const std::string& subject, const Options& opts = {});

struct CurvePoint {
    std::size_t pattern = 0;
    std::size_t pumps = 0;
    std::size_t length = 0;
    std::uint64_t steps = 0;
    bool exhausted = false;
};

/// Matcher cost of synthesized attacks for pump counts 1..max_pumps, per
/// pattern, each run capped at `budget` steps.
std::vector<CurvePoint> attack_curve(const std::string& regex, std::size_t max_pumps, std::uint64_t budget,
                                     const Options& opts = {});
std::string curve_csv(const std::vector<CurvePoint>& points);

struct AttackString {
    std::optional<std::u32string> value;  // absent when the regex is linear
    Verdict verdict = Verdict::Linear;
};

/// Attack of the first pattern pumped `k` times. Throws on regex errors.
AttackString gen_attack(const std::string& regex, std::size_t k, const Options& opts = {});

/// Human-readable rendering of either report kind.
std::string render_text(const Json& report);

/// Printable form of an attack string: escapes controls, truncates long runs.
std::string display_string(const std::u32string& s, std::size_t max_chars = 80);

/// One-line message for the "error" object of a report.
std::string describe_error(const Json& error);

AnalysisOptions analysis_options(const Options& opts);

}  // namespace redos::report
