#pragma once

#include <vector>

#include "clobber/board.hpp"

namespace clobber {

struct Block {
    int start = 0;
    int length = 0;
};

struct BlockSchedule {
    std::vector<Block> blocks;
};

int line_bound(int n);
BlockSchedule block_split(int n);

// Alternating moves reducing a lone checkerboard block of `length` cells
// (Black at local column 0) to 1 stone, or 2 stones when length is 3.
const std::vector<Move>& block_moves(int length, Color first);

Plan reduce_line(int n, Color first);

}  // namespace clobber
