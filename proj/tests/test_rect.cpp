#include <doctest.h>

#include <cstdlib>

#include "clobber/board.hpp"
#include "clobber/rect.hpp"

using namespace clobber;

namespace {

constexpr Color W = Color::White;
constexpr Color B = Color::Black;

std::size_t expected_final(int n, int m) { return (n * m) % 3 == 0 ? 2 : 1; }

bool one_gap_apart(const Configuration& cfg) {
    if (cfg.size() != 2) return false;
    Coord a = cfg.stones.begin()->first;
    Coord b = std::next(cfg.stones.begin())->first;
    return (a.row == b.row && std::abs(a.col - b.col) == 2) || (a.col == b.col && std::abs(a.row - b.row) == 2);
}

}  // namespace

TEST_CASE("case classification") {
    CHECK(classify_case(4, 4) == CaseTag::Small);
    CHECK(classify_case(2, 6) == CaseTag::Small);
    CHECK(classify_case(6, 6) == CaseTag::Small);
    CHECK(classify_case(8, 8) == CaseTag::EE);
    CHECK(classify_case(2, 7) == CaseTag::EO);
    CHECK(classify_case(3, 8) == CaseTag::OE_rotated);
    CHECK(classify_case(5, 10) == CaseTag::OE_rotated);
    CHECK(classify_case(7, 8) == CaseTag::EO);
    CHECK(classify_case(8, 7) == CaseTag::EO);
    CHECK(classify_case(7, 7) == CaseTag::OO);
    // Both sides odd: the three-row strip family, not a rotation to E3/E5.
    CHECK(classify_case(3, 9) == CaseTag::OO);
    CHECK(classify_case(9, 3) == CaseTag::OO);
    CHECK(std::string(case_name(CaseTag::OE_rotated)) == "OE_rotated");
    CHECK_THROWS_AS(classify_case(1, 8), InvalidSize);
    CHECK_THROWS_AS(classify_case(8, 0), InvalidSize);
}

TEST_CASE("classification is total and symmetric in the small range") {
    for (int n = 2; n <= 30; ++n)
        for (int m = 2; m <= 30; ++m) {
            CaseTag t = classify_case(n, m);
            CHECK((t == CaseTag::Small) == (n <= 6 && m <= 6));
            if (t != CaseTag::Small) CHECK(classify_case(m, n) == t);
        }
}

TEST_CASE("macro library shape") {
    const StepMacro& trim = find_macro("EE.trim0");
    CHECK(trim.pane_count() == 2);
    CHECK(trim.runs == std::vector<std::pair<Color, int>>{{W, 3}, {B, 3}});
    CHECK(trim.first_mover() == W);

    const StepMacro& a22 = find_macro("A.2x2");
    CHECK(a22.total_moves() == 3);
    CHECK(a22.resolved.size() == 3);
    CHECK(a22.first_mover() == W);
    CHECK(a22.pattern(0) == checkerboard(2, 2));

    CHECK_THROWS_AS(find_macro("no.such"), Error);
}

TEST_CASE("macro parsing rejects broken seams") {
    CHECK_NOTHROW(parse_macro("ok", "L", "BW W1 W."));
    // Run 1 ends with White, so run 2 may not start with White.
    CHECK_THROWS_AS(parse_macro("seam", "L", "BWB|W.W W1 B._|W.W W1 ._.|W._"), Error);
    CHECK_THROWS_AS(parse_macro("panes", "LR", "BW W1 W."), Error);
}

TEST_CASE("property: every macro replays to its waypoint and alternates") {
    for (const StepMacro& m : step_library()) {
        CAPTURE(m.id);
        REQUIRE(static_cast<int>(m.resolved.size()) == m.total_moves());
        for (std::size_t i = 1; i < m.resolved.size(); ++i) REQUIRE(m.resolved[i].mover == opposite(m.resolved[i - 1].mover));
        for (std::size_t i = 0; i + 1 < m.runs.size(); ++i) {
            Color last = m.runs[i].second % 2 == 1 ? m.runs[i].first : opposite(m.runs[i].first);
            REQUIRE(m.runs[i + 1].first == opposite(last));
        }
        REQUIRE(replay_macro(m, false) == m.pattern(macro_target(m, false)));
        if (m.final_from >= 0) REQUIRE(replay_macro(m, true) == m.pattern(macro_target(m, true)));
        std::size_t start = m.pattern(0).size();
        REQUIRE(start - m.pattern(m.waypoints.size() - 1).size() == static_cast<std::size_t>(m.total_moves()));
    }
}

TEST_CASE("property: transformed macros stay valid") {
    for (const StepMacro& m : step_library())
        for (int bits = 1; bits < 8; ++bits) {
            StepMacro t = transform_macro(m, bits & 1, bits & 2, bits & 4);
            CAPTURE(t.id);
            REQUIRE(replay_macro(t, false) == t.pattern(macro_target(t, false)));
            if (bits & 4) REQUIRE(t.first_mover() == opposite(m.first_mover()));
        }
}

TEST_CASE("re-solving a macro for the other first mover") {
    const StepMacro& trim = find_macro("EE.trim0");
    StepMacro other = with_first_mover(trim, B);
    CHECK(other.first_mover() == B);
    CHECK(replay_macro(other, false) == trim.pattern(trim.waypoints.size() - 1));
    CHECK(with_first_mover(trim, W).id == trim.id);
}

TEST_CASE("gap solving") {
    Configuration board = checkerboard(2, 2);
    CHECK(solve_waypoint_gap(board, board, W, 0).empty());

    Configuration end;
    end.stones[{1, 0}] = W;
    auto moves = solve_waypoint_gap(board, end, W, 3);
    REQUIRE(moves.size() == 3);
    Plan p;
    p.first_mover = W;
    p.moves = moves;
    CHECK(replay(board, p, true).first == end);

    CHECK_THROWS_AS(solve_waypoint_gap(board, end, W, 2), NoConnectingSequence);
    CHECK_THROWS_AS(solve_waypoint_gap(board, board, W, 1), NoConnectingSequence);
    CHECK_THROWS_AS(solve_waypoint_gap(checkerboard(4, 4), Configuration{}, W, 16), NoConnectingSequence);

    // Same counts, but a lone stone of the wrong color is unreachable.
    Configuration wrong;
    wrong.stones[{0, 0}] = W;
    wrong.stones[{0, 1}] = W;
    CHECK_THROWS_AS(solve_waypoint_gap(checkerboard(2, 2), wrong, W, 2), NoConnectingSequence);
}

TEST_CASE("reduce rect examples") {
    Plan two = reduce_rect(2, 2);
    CHECK(two.moves.size() == 3);
    CHECK(replay(checkerboard(2, 2), two, true).first.size() == 1);

    Plan three = reduce_rect(3, 3);
    CHECK(three.moves.size() == 7);
    Configuration end3 = replay(checkerboard(3, 3), three, true).first;
    CHECK(one_gap_apart(end3));

    Plan big = reduce_rect(4, 8);
    CHECK(replay(checkerboard(4, 8), big, true).first.size() == 1);
    CHECK(big.metadata.find("case=EE") != std::string::npos);

    CHECK_THROWS_AS(reduce_rect(1, 5), InvalidSize);
}

TEST_CASE("property: all rectangles up to 16x16 reduce to the right count") {
    for (int n = 2; n <= 16; ++n)
        for (int m = 2; m <= 16; ++m) {
            CAPTURE(n);
            CAPTURE(m);
            Plan p = reduce_rect(n, m);
            auto [end, rep] = replay(checkerboard(n, m), p, true);
            REQUIRE(rep.alternating);
            REQUIRE(end.size() == expected_final(n, m));
            if (end.size() == 2) REQUIRE(one_gap_apart(end));
            REQUIRE(p.moves.front().mover == p.first_mover);
            // The delta class forbids a single stone when nm is a multiple of 3.
            if ((n * m) % 3 == 0) REQUIRE(delta_class(checkerboard(n, m)) == 0);
        }
}

TEST_CASE("property: transposed plans reduce the transposed board") {
    for (int n = 2; n <= 12; ++n)
        for (int m = 2; m <= 12; ++m) {
            Plan t = transpose_plan(reduce_rect(n, m));
            auto [end, rep] = replay(checkerboard(m, n), t, true);
            REQUIRE(end.size() == expected_final(n, m));
        }
}

TEST_CASE("reduce rect is deterministic") {
    for (auto [n, m] : {std::pair{7, 9}, {10, 12}, {5, 14}}) {
        Plan a = reduce_rect(n, m);
        Plan b = reduce_rect(n, m);
        CHECK(a.moves == b.moves);
    }
}
