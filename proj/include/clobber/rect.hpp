#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "clobber/board.hpp"

namespace clobber {

enum class CaseTag { Small, EE, OE_rotated, EO, OO };

const char* case_name(CaseTag tag);
CaseTag classify_case(int n, int m);

struct MacroMove {
    Color mover = Color::White;
    int pane = 0;
    Coord from;
    Coord to;
};

// One displayed step: a chain of waypoint patterns joined by alternating runs.
// A macro may consist of several panes, each anchored to the left ('L') or
// right ('R') edge of the window it is placed in.
struct StepMacro {
    std::string id;
    std::string anchors;
    std::vector<std::vector<std::vector<std::string>>> waypoints;  // [waypoint][pane][row]
    std::vector<std::pair<Color, int>> runs;
    int final_from = -1;  // index of the first final-only run, -1 if none
    std::vector<MacroMove> resolved;

    int pane_count() const { return static_cast<int>(anchors.size()); }
    int pane_width(int pane) const;
    int pane_height(int pane) const;
    Color first_mover() const { return runs.front().first; }
    int total_moves() const;
    int final_only_moves() const;

    // Stones of a waypoint with panes laid side by side, two empty columns apart.
    Configuration pattern(std::size_t waypoint) const;
    int pane_offset(int pane) const;
};

StepMacro parse_macro(const std::string& id, const std::string& anchors, const std::string& sequence);
void resolve_macro(StepMacro& macro);

// Exhaustive search for a strictly alternating k-move sequence from pre to
// post; the first one in lexicographic move order wins.
std::vector<Move> solve_waypoint_gap(const Configuration& pre, const Configuration& post, Color first,
                                     int k);

const std::vector<StepMacro>& step_library();
const StepMacro& find_macro(const std::string& id);

// Applies the resolved moves to the first waypoint pattern, with or without
// the final-only runs, checking legality and alternation on the way.
Configuration replay_macro(const StepMacro& macro, bool final_step);
// Waypoint the replay must reach: the last one, or the one before the final-only runs.
std::size_t macro_target(const StepMacro& macro, bool final_step);

StepMacro transform_macro(const StepMacro& macro, bool mirror, bool flip, bool swap_colors);
StepMacro with_first_mover(const StepMacro& macro, Color first);

Plan reduce_rect(int n, int m);

}  // namespace clobber
