#pragma once

#include "fol/classify.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace fol {

constexpr std::uint64_t kDefaultSeed = 2024;

struct CriterionResult {
    int id = 0;
    std::string suite;
    std::string title;
    bool passed = false;
    // Report-only criteria record an outcome; they still fail if the computation itself breaks.
    bool report_only = false;
    std::vector<std::string> failures;
    nlohmann::json detail = nlohmann::json::object();
    std::vector<DiscrepancyFlag> flags;

    nlohmann::json to_json() const;
};

// "all", "table1", "formulas", "forms", "syzygy", "moduli".
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

// Criteria of the suite, run concurrently, returned sorted by id.
std::vector<CriterionResult> run_suite(const std::string& suite, std::uint64_t seed = kDefaultSeed);

std::vector<CriterionResult> run_criteria(const std::vector<int>& ids, std::uint64_t seed = kDefaultSeed);

}  // namespace fol
