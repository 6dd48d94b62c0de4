#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace latip {

// The acceptance suite: seeded randomized checks of every pipeline stage
// against the brute-force oracles, runnable from ctest and from the CLI.

struct AcceptanceConfig {
    std::uint64_t seed = 42;
    int solver_instances = 200;   // criterion 1 (and 3, 4, 9 reuse the stream)
    int count_instances = 100;    // criterion 2
    int bip_instances = 100;      // criterion 5
    int gap_instances = 30;       // criterion 6
    int random_bases = 50;        // criterion 8
    std::uint64_t node_budget = 100'000'000;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

std::vector<int> acceptance_criteria();
CriterionResult run_criterion(int id, const AcceptanceConfig& cfg = {});
std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& cfg = {});

}  // namespace latip
