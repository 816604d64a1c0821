#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "abelkit/deciders.hpp"

namespace abelkit {

struct HarnessConfig {
    /// 0 means "use each suite's default order bound".
    Int max_order = 0;
    Int hom_budget = default_hom_budget();
    std::uint64_t random_seed = 1729;
    int sample_count = 200;
    bool paranoid = true;
};

struct SuiteFailure {
    std::string instance;  // which group/morphism/sample broke
    std::string detail;    // what was expected and what came out
    std::optional<Morphism> witness;
    std::string replay;    // one CLI command that reproduces the failure
};

struct SuiteResult {
    std::string suite;
    std::string summary;
    long instances = 0;
    std::vector<SuiteFailure> failures;
    std::vector<std::string> skipped;  // budget-limited instances, never silent
    std::vector<std::string> notes;
    long elapsed_ms = 0;
    HarnessConfig config;

    bool passed() const { return failures.empty(); }
};

/// Suite ids with one-line summaries, in registry order.
const std::vector<std::pair<std::string, std::string>>& suite_catalog();

/// Runs one suite. Deterministic for a fixed config. Unknown ids throw
/// UnknownSuiteError; budget overruns inside a suite become skipped-instance
/// notes, never silent passes.
SuiteResult run_suite(const std::string& suite_id, const HarnessConfig& cfg = {});

/// Every registered suite, in catalog order.
std::vector<SuiteResult> run_all(const HarnessConfig& cfg = {});

/// One-page plain-text dossier for a group expression: canonical form, order,
/// endomorphism count, decider verdicts within budget, classification.
std::string explain_group(const std::string& expr, const HarnessConfig& cfg = {});

}  // namespace abelkit
