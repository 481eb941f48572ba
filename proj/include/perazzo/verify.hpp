#pragma once

#include "perazzo/io.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace perazzo {

/// (n, m) pairs of the default grid.
std::vector<std::pair<int, int>> default_grid_pairs();

struct VerifyOptions {
    std::vector<std::pair<int, int>> pairs = default_grid_pairs();
    int d_min = 4;
    int d_max = 10;
    /// Upper degree for the formula-only checks (unimodality, extremes-coincide).
    int formula_d_max = 64;
    std::uint64_t seed = 42;
    /// Share of items that are also run over Q.
    double rational_fraction = 0.2;
    /// Directory holding betti_min_p4_d<d>.txt; empty skips the golden comparison.
    std::string golden_dir;
    /// Empty runs every check.
    std::vector<std::string> checks;
    int trials = kDefaultTrials;
    /// Random P^4 forms for thm-wlp-p4, spread over degrees 5..8.
    int p4_random = 56;
};

enum class CheckStatus { pass, fail, skip };

struct CheckResult {
    std::string check;
    Json parameters;
    CheckStatus status = CheckStatus::pass;
    std::string details;
};

struct VerifyReport {
    std::uint64_t seed = 0;
    std::vector<CheckResult> results;  // ordered by check name
    double wall_seconds = 0;

    std::size_t count(CheckStatus s) const;
    bool ok() const { return count(CheckStatus::fail) == 0; }
};

const std::vector<std::string>& check_names();

/// Throws std::invalid_argument on unknown check names or an empty degree range.
VerifyReport run_verify(const VerifyOptions& options);

Json to_json(const VerifyReport& report);
std::string render_text(const VerifyReport& report);
std::string to_string(CheckStatus s);

}  // namespace perazzo
