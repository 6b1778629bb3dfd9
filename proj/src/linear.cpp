#include "clobber/linear.hpp"

#include <algorithm>
#include <string>

namespace clobber {

namespace {

constexpr Color W = Color::White;
constexpr Color B = Color::Black;

Move mv(Color who, int from, int to) { return {who, {0, from}, {0, to}}; }

}  // namespace

int line_bound(int n) {
    if (n <= 0) throw InvalidSize("line length must be positive, got " + std::to_string(n));
    return (n + 3) / 4 + (n % 4 == 3 ? 1 : 0);
}

BlockSchedule block_split(int n) {
    if (n <= 0) throw InvalidSize("line length must be positive, got " + std::to_string(n));
    BlockSchedule s;
    for (int start = 0; start < n; start += 4) s.blocks.push_back({start, std::min(4, n - start)});
    return s;
}

const std::vector<Move>& block_moves(int length, Color first) {
    // Found by exhaustive search over each block; tests re-derive them.
    static const std::vector<Move> kNone;
    static const std::vector<Move> kTwoW{mv(W, 1, 0)};
    static const std::vector<Move> kTwoB{mv(B, 0, 1)};
    static const std::vector<Move> kFourW{mv(W, 3, 2), mv(B, 0, 1), mv(W, 2, 1)};
    static const std::vector<Move> kFourB{mv(B, 0, 1), mv(W, 3, 2), mv(B, 1, 2)};
    switch (length) {
    case 1:
        return kNone;
    case 2:
    case 3:
        return first == W ? kTwoW : kTwoB;
    case 4:
        return first == W ? kFourW : kFourB;
    default:
        throw InvalidSize("block length must be 1..4, got " + std::to_string(length));
    }
}

Plan reduce_line(int n, Color first) {
    BlockSchedule s = block_split(n);
    Plan plan;
    plan.first_mover = first;
    plan.metadata = std::string("reduce_line n=") + std::to_string(n) + " first=" + color_char(first);
    Color due = first;
    for (const Block& b : s.blocks) {
        for (const Move& m : block_moves(b.length, due)) {
            plan.moves.push_back({m.mover, {0, m.from.col + b.start}, {0, m.to.col + b.start}});
            due = opposite(m.mover);
        }
    }
    return plan;
}

}  // namespace clobber
