#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "clobber/board.hpp"

namespace clobber {

enum class Mode { AlternatingWhiteFirst, AlternatingBlackFirst, AlternatingEither, FreeOrder };

const char* mode_name(Mode mode);
Mode parse_mode(const std::string& text);  // wfirst, bfirst, either, free

constexpr int kDefaultStoneLimit = 16;

struct SolverOptions {
    int limit = kDefaultStoneLimit;
    int jobs = 1;
};

struct SolverStats {
    std::uint64_t nodes = 0;
    std::uint64_t memo_entries = 0;
};

struct SolveResult {
    int k = 0;
    Plan witness;
    SolverStats stats;
};

// Max of the component count, the delta class bound and the size of any
// single-colored component.
int lower_bound(const Configuration& cfg);

SolveResult min_stones(const Configuration& cfg, Mode mode, const SolverOptions& opts = {});

struct OneReducibility {
    bool reducible = false;
    std::optional<Plan> witness;
};

OneReducibility is_one_reducible(const Configuration& cfg, const SolverOptions& opts = {},
                                 Mode mode = Mode::AlternatingEither);

}  // namespace clobber
