#pragma once

// Orchestration behind the `folia` command-line tool: run analyses on parsed
// documents and render deterministic reports.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "folia/dsl.hpp"

namespace folia::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_input_error = 2;
inline constexpr int exit_resource_limit = 3;

enum class Command { check, ideals, compare, decompose, unfold };

std::optional<Command> parse_command(std::string_view name);
std::string to_string(Command command);

struct Options {
    Limits limits;
    /// Degree bound for the graded comparison; deg(ω) + 3 when unset.
    std::optional<std::uint32_t> max_degree;
    MonomialOrder order = MonomialOrder::degrevlex;
    bool json = false;
    /// When false, timing_ms is reported as null so that output is byte-stable.
    bool timing = true;
    /// Restrict the analysis to one named form.
    std::optional<std::string> form;
};

/// Applies comma-separated key=value settings (max_spairs, max_degree,
/// order), as found in FOLIA_LIMITS. Throws SemanticError on bad input.
void apply_limits_spec(Options& options, std::string_view spec);

struct Result {
    int exit_code = exit_ok;
    std::string output;
};

Result run_analysis(const InputDocument& doc, std::string_view source, Command command, const Options& options);
/// Parses `text` first; parse and semantic errors give exit code 2.
Result run_text(std::string_view text, std::string_view source, Command command, const Options& options);

struct CorpusExpectation {
    bool plucker = true;
    bool frobenius = true;
    std::optional<bool> descent{};
    /// Generators of the expected J, K, rad(I) and defect (unchecked when empty).
    std::vector<std::string> singular{};
    std::vector<std::string> kupka{};
    std::vector<std::string> persistent_radical{};
    std::vector<std::string> defect{};
    bool kupka_unit = false;
    bool closed = false;
    bool one_not_in_persistent = false;
    /// tangent_frame generates the same module as the declared frame.
    bool frame_matches = false;
    bool consistent_inclusions = false;
    bool radical_persistent_equals_kupka = false;
    /// Graded pieces of I agree with the truncation oracle up to deg(ω) + 3.
    bool oracle = false;
    bool unfolds = false;
};

struct CorpusCase {
    std::string name;
    std::string text;
    CorpusExpectation expect;
};

const std::vector<CorpusCase>& builtin_corpus();
const CorpusCase* find_corpus_case(std::string_view name);

/// Failures of a single corpus case (empty when it passes).
std::vector<std::string> check_corpus_case(const CorpusCase& c, const Options& options);

/// Runs every corpus case; exit code 1 names the first failing case.
Result run_corpus(const Options& options);

} // namespace folia::cli
