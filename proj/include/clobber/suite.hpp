#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "clobber/solver.hpp"

namespace clobber {

struct SuiteOptions {
    std::uint64_t seed = 0;
    int jobs = 1;
    int limit = kDefaultStoneLimit;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

// Reports carry no timings or worker counts, so equal inputs give equal text.
struct SuiteReport {
    std::string suite;
    std::vector<CriterionResult> criteria;

    bool passed() const;
    std::string text() const;
};

const std::vector<std::string>& suite_names();  // table1, thm3, thm4, npc
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts = {});
CriterionResult run_criterion(int id, const SuiteOptions& opts = {});  // ids 1..7

}  // namespace clobber
