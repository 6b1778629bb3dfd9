#include "clobber/board.hpp"

#include <cstdlib>

namespace clobber {

namespace {

constexpr Coord kSteps[4] = {{-1, 0}, {0, -1}, {0, 1}, {1, 0}};

std::string cell_text(Coord c) {
    return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

}  // namespace

Color color_from_char(char ch) {
    switch (ch) {
    case 'W':
    case 'w':
        return Color::White;
    case 'B':
    case 'b':
        return Color::Black;
    default:
        throw Error(std::string("not a color: '") + ch + "'");
    }
}

Color square_color(Coord c, int parity_anchor) {
    int parity = ((c.row + c.col) % 2 + 2) % 2;
    return parity == (parity_anchor & 1) ? Color::Black : Color::White;
}

bool is_matching(const Configuration& cfg, Coord c) {
    auto it = cfg.stones.find(c);
    return it != cfg.stones.end() && it->second == square_color(c, cfg.parity_anchor);
}

int clashing_count(const Configuration& cfg) {
    int n = 0;
    for (const auto& [c, col] : cfg.stones)
        if (col != square_color(c, cfg.parity_anchor)) ++n;
    return n;
}

int delta(const Configuration& cfg) { return static_cast<int>(cfg.size()) + clashing_count(cfg); }

bool adjacent(Coord a, Coord b) { return std::abs(a.row - b.row) + std::abs(a.col - b.col) == 1; }

std::vector<Move> legal_moves(const Configuration& cfg, Color mover) {
    std::vector<Move> out;
    Color prey = opposite(mover);
    for (const auto& [from, col] : cfg.stones) {
        if (col != mover) continue;
        for (Coord d : kSteps) {
            Coord to{from.row + d.row, from.col + d.col};
            auto it = cfg.stones.find(to);
            if (it != cfg.stones.end() && it->second == prey) out.push_back({mover, from, to});
        }
    }
    return out;
}

bool is_legal(const Configuration& cfg, const Move& m) {
    if (!adjacent(m.from, m.to)) return false;
    auto f = cfg.stones.find(m.from);
    auto t = cfg.stones.find(m.to);
    return f != cfg.stones.end() && t != cfg.stones.end() && f->second == m.mover &&
           t->second == opposite(m.mover);
}

void apply_move_in_place(Configuration& cfg, const Move& m) {
    if (!is_legal(cfg, m))
        throw IllegalMove(std::string(1, color_char(m.mover)) + " " + cell_text(m.from) + " -> " +
                          cell_text(m.to) + " is not a legal move");
    cfg.stones.erase(m.from);
    cfg.stones[m.to] = m.mover;
}

Configuration apply_move(const Configuration& cfg, const Move& m) {
    Configuration out = cfg;
    apply_move_in_place(out, m);
    return out;
}

Configuration checkerboard(int rows, int cols) {
    if (rows <= 0 || cols <= 0)
        throw InvalidSize("checkerboard needs positive dimensions, got " + std::to_string(rows) + "x" +
                          std::to_string(cols));
    Configuration cfg;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) cfg.stones[{r, c}] = square_color({r, c}, 0);
    return cfg;
}

Configuration psi_line(int n) {
    if (n <= 0) throw InvalidSize("line length must be positive, got " + std::to_string(n));
    return checkerboard(1, n);
}

std::vector<Configuration> connected_components(const Configuration& cfg) {
    std::vector<Configuration> out;
    std::map<Coord, bool> seen;
    for (const auto& [start, col] : cfg.stones) {
        if (seen[start]) continue;
        Configuration comp;
        comp.parity_anchor = cfg.parity_anchor;
        std::vector<Coord> stack{start};
        seen[start] = true;
        while (!stack.empty()) {
            Coord c = stack.back();
            stack.pop_back();
            comp.stones[c] = cfg.stones.at(c);
            for (Coord d : kSteps) {
                Coord n{c.row + d.row, c.col + d.col};
                if (cfg.stones.count(n) && !seen[n]) {
                    seen[n] = true;
                    stack.push_back(n);
                }
            }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

std::pair<Configuration, ReplayReport> replay(const Configuration& cfg, const Plan& plan,
                                              bool require_alternation) {
    ReplayReport rep;
    rep.initial_stones = cfg.size();
    Configuration cur = cfg;
    for (std::size_t i = 0; i < plan.moves.size(); ++i) {
        const Move& m = plan.moves[i];
        bool breaks = i == 0 ? m.mover != plan.first_mover : m.mover == plan.moves[i - 1].mover;
        if (breaks && rep.alternating) {
            rep.alternating = false;
            rep.first_non_alternating = i;
            if (require_alternation)
                throw ReplayError(i, i == 0 ? "first move is not by the plan's first mover"
                                            : "two consecutive moves by the same color");
        }
        try {
            apply_move_in_place(cur, m);
        } catch (const IllegalMove& e) {
            throw ReplayError(i, e.what());
        }
        ++rep.moves_applied;
    }
    rep.final_stones = cur.size();
    rep.final_delta = delta(cur);
    return {std::move(cur), rep};
}

Plan transpose_plan(const Plan& plan) {
    Plan out = plan;
    for (Move& m : out.moves) {
        std::swap(m.from.row, m.from.col);
        std::swap(m.to.row, m.to.col);
    }
    return out;
}

}  // namespace clobber
