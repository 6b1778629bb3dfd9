#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "clobber/errors.hpp"

namespace clobber {

enum class Color : std::uint8_t { White, Black };

constexpr Color opposite(Color c) { return c == Color::White ? Color::Black : Color::White; }
constexpr char color_char(Color c) { return c == Color::White ? 'W' : 'B'; }
Color color_from_char(char ch);  // accepts W/w/B/b, throws Error otherwise

struct Coord {
    int row = 0;
    int col = 0;
    auto operator<=>(const Coord&) const = default;
};

struct Move {
    Color mover = Color::White;
    Coord from;
    Coord to;
    bool operator==(const Move&) const = default;
};

struct Plan {
    Color first_mover = Color::White;
    std::vector<Move> moves;
    std::string metadata;
};

// Sparse stone map. std::map keeps cells in row-major order, which fixes
// every iteration order in the library.
struct Configuration {
    std::map<Coord, Color> stones;
    int parity_anchor = 0;

    std::size_t size() const { return stones.size(); }
    bool empty() const { return stones.empty(); }
    bool operator==(const Configuration&) const = default;
};

Color square_color(Coord c, int parity_anchor = 0);
bool is_matching(const Configuration& cfg, Coord c);
int clashing_count(const Configuration& cfg);
int delta(const Configuration& cfg);
inline int delta_class(const Configuration& cfg) { return delta(cfg) % 3; }

bool adjacent(Coord a, Coord b);

// Row-major by from-cell, then by to-cell.
std::vector<Move> legal_moves(const Configuration& cfg, Color mover);
bool is_legal(const Configuration& cfg, const Move& m);
Configuration apply_move(const Configuration& cfg, const Move& m);
void apply_move_in_place(Configuration& cfg, const Move& m);

Configuration checkerboard(int rows, int cols);
Configuration psi_line(int n);

std::vector<Configuration> connected_components(const Configuration& cfg);

struct ReplayReport {
    std::size_t moves_applied = 0;
    bool legal = true;
    bool alternating = true;
    std::size_t first_non_alternating = 0;  // meaningful when !alternating
    std::size_t initial_stones = 0;
    std::size_t final_stones = 0;
    int final_delta = 0;
};

// Applies every move in order and throws ReplayError at the first illegal
// move, or at the first alternation break when require_alternation is set.
std::pair<Configuration, ReplayReport> replay(const Configuration& cfg, const Plan& plan,
                                              bool require_alternation = false);

Plan transpose_plan(const Plan& plan);

}  // namespace clobber
