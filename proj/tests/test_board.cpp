#include <doctest.h>

#include <random>

#include "clobber/board.hpp"
#include "clobber/io.hpp"

using namespace clobber;

namespace {

constexpr Color W = Color::White;
constexpr Color B = Color::Black;

Configuration random_cfg(std::mt19937_64& rng) {
    Configuration cfg;
    cfg.parity_anchor = static_cast<int>(rng() % 2);
    int rows = 1 + static_cast<int>(rng() % 5);
    int cols = 1 + static_cast<int>(rng() % 5);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            auto v = rng() % 3;
            if (v == 1) cfg.stones[{r, c}] = W;
            if (v == 2) cfg.stones[{r, c}] = B;
        }
    return cfg;
}

std::vector<Move> any_moves(const Configuration& cfg) {
    auto out = legal_moves(cfg, W);
    auto b = legal_moves(cfg, B);
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

}  // namespace

TEST_CASE("square colors follow the parity anchor") {
    CHECK(square_color({0, 0}, 0) == B);
    CHECK(square_color({0, 1}, 0) == W);
    CHECK(square_color({2, 2}, 0) == B);
    CHECK(square_color({0, 0}, 1) == W);
    CHECK(square_color({-1, 0}, 0) == W);
    CHECK(opposite(W) == B);
    CHECK(opposite(B) == W);
}

TEST_CASE("delta counts stones plus clashing stones") {
    CHECK(delta(psi_line(4)) == 4);
    CHECK(delta(checkerboard(3, 3)) == 9);
    CHECK(delta(Configuration{}) == 0);
    Configuration lone;
    lone.stones[{0, 0}] = W;
    CHECK(delta(lone) == 2);
    for (int n = 1; n <= 6; ++n)
        for (int m = 1; m <= 6; ++m) CHECK(delta(checkerboard(n, m)) == n * m);
}

TEST_CASE("legal moves") {
    auto moves = legal_moves(psi_line(2), W);
    REQUIRE(moves.size() == 1);
    CHECK(moves[0] == Move{W, {0, 1}, {0, 0}});

    Configuration lone;
    lone.stones[{3, 3}] = B;
    CHECK(legal_moves(lone, W).empty());
    CHECK(legal_moves(lone, B).empty());

    CHECK(legal_moves(checkerboard(2, 2), W).size() == 4);

    // Row-major by source, then by target.
    auto all = legal_moves(checkerboard(3, 3), B);
    for (std::size_t i = 1; i < all.size(); ++i)
        CHECK((all[i - 1].from < all[i].from || (all[i - 1].from == all[i].from && all[i - 1].to < all[i].to)));
}

TEST_CASE("apply move") {
    Configuration after = apply_move(psi_line(2), {W, {0, 1}, {0, 0}});
    REQUIRE(after.size() == 1);
    CHECK(after.stones.at({0, 0}) == W);
    CHECK(delta(after) == 2);

    CHECK_THROWS_AS(apply_move(psi_line(3), {B, {0, 1}, {0, 0}}), IllegalMove);
    CHECK_THROWS_AS(apply_move(psi_line(3), {B, {0, 0}, {0, 2}}), IllegalMove);
    CHECK_THROWS_AS(apply_move(psi_line(3), {W, {0, 1}, {0, 3}}), IllegalMove);
}

TEST_CASE("constructors reject bad sizes") {
    CHECK_THROWS_AS(checkerboard(0, 3), InvalidSize);
    CHECK_THROWS_AS(checkerboard(2, -1), InvalidSize);
    CHECK_THROWS_AS(psi_line(0), InvalidSize);
    Configuration line = psi_line(4);
    CHECK(line.stones.at({0, 0}) == B);
    CHECK(line.stones.at({0, 1}) == W);
    CHECK(line.stones.at({0, 2}) == B);
    CHECK(line.stones.at({0, 3}) == W);
    CHECK(clashing_count(checkerboard(5, 4)) == 0);
}

TEST_CASE("connected components") {
    Configuration two;
    two.stones[{0, 0}] = B;
    two.stones[{0, 2}] = W;
    CHECK(connected_components(two).size() == 2);
    CHECK(connected_components(psi_line(5)).size() == 1);
    CHECK(connected_components(Configuration{}).empty());
    std::size_t total = 0;
    for (const auto& c : connected_components(two)) total += c.size();
    CHECK(total == 2);
}

TEST_CASE("board text format") {
    Configuration cfg = parse_board("clobber v1 anchor=0\nBW\nWB\n");
    CHECK(cfg == checkerboard(2, 2));
    CHECK(format_board(cfg) == "clobber v1 anchor=0\nBW\nWB\n");
    CHECK(format_board(Configuration{}) == "clobber v1 anchor=0\n");

    CHECK(parse_board("BW\nWB") == checkerboard(2, 2));
    try {
        parse_board("BX");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(e.column == 2);
    }
    CHECK_THROWS_AS(parse_board("clobber v2 anchor=0\nB"), ParseError);
    CHECK_THROWS_AS(parse_board("clobber v1 anchor=3\nB"), ParseError);

    // Short rows are padded; the anchor is kept verbatim.
    Configuration padded = parse_board("clobber v1 anchor=1\nB\n.W\n");
    CHECK(padded.parity_anchor == 1);
    CHECK(padded.size() == 2);

    // An odd offset is absorbed by a leading empty column instead of flipping colors.
    Configuration odd;
    odd.stones[{0, 1}] = W;
    std::string text = format_board(odd);
    CHECK(text == "clobber v1 anchor=0\n.W\n");
    Configuration back = parse_board(text);
    CHECK(is_matching(back, {0, 1}));
}

TEST_CASE("plan text format") {
    Plan p;
    p.metadata = "demo";
    p.moves = {{W, {0, 1}, {0, 0}}, {B, {1, 0}, {1, 1}}};
    std::string text = format_plan(p);
    CHECK(text == "# demo\nW 0 1 0 0\nB 1 0 1 1\n");
    Plan back = parse_plan(text);
    CHECK(back.moves == p.moves);
    CHECK(back.metadata == "demo");
    CHECK(back.first_mover == W);
    CHECK_THROWS_AS(parse_plan("X 0 0 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_plan("W 0 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_plan("W 0 0 0 1 9\n"), ParseError);
}

TEST_CASE("replay") {
    Plan p;
    p.first_mover = W;
    p.moves = {{W, {0, 1}, {1, 1}}, {B, {0, 0}, {1, 0}}, {W, {1, 1}, {1, 0}}};
    auto [end, rep] = replay(checkerboard(2, 2), p, true);
    CHECK(end.size() == 1);
    CHECK(rep.alternating);
    CHECK(rep.initial_stones == 4);
    CHECK(rep.final_stones == 1);

    auto [same, rep0] = replay(checkerboard(2, 2), Plan{}, true);
    CHECK(same == checkerboard(2, 2));
    CHECK(rep0.moves_applied == 0);

    Plan twice;
    twice.first_mover = W;
    twice.moves = {{W, {0, 1}, {0, 0}}, {W, {1, 0}, {1, 1}}};
    try {
        replay(checkerboard(2, 2), twice, true);
        FAIL("expected a replay error");
    } catch (const ReplayError& e) {
        CHECK(e.index == 1);
    }
    auto [loose_end, loose] = replay(checkerboard(2, 2), twice, false);
    CHECK_FALSE(loose.alternating);
    CHECK(loose.first_non_alternating == 1);

    Plan bad;
    bad.moves = {{W, {0, 0}, {0, 1}}};
    try {
        replay(checkerboard(2, 2), bad);
        FAIL("expected a replay error");
    } catch (const ReplayError& e) {
        CHECK(e.index == 0);
    }
}

TEST_CASE("property: every move changes delta by 0 or -3") {
    std::mt19937_64 rng(7);
    int checked = 0;
    while (checked < 10000) {
        Configuration cfg = random_cfg(rng);
        auto moves = any_moves(cfg);
        if (moves.empty()) continue;
        const Move& m = moves[rng() % moves.size()];
        bool matching = is_matching(cfg, m.from);
        Configuration after = apply_move(cfg, m);
        int change = delta(after) - delta(cfg);
        REQUIRE(change == (matching ? 0 : -3));
        REQUIRE(after.size() + 1 == cfg.size());
        REQUIRE(connected_components(after).size() >= connected_components(cfg).size());
        ++checked;
    }
}

TEST_CASE("property: delta mod 3 is invariant along move sequences") {
    std::mt19937_64 rng(11);
    for (int seq = 0; seq < 1000; ++seq) {
        Configuration cfg = random_cfg(rng);
        int cls = delta_class(cfg);
        std::size_t start = cfg.size();
        int applied = 0;
        for (int i = 0; i < 20; ++i) {
            auto moves = any_moves(cfg);
            if (moves.empty()) break;
            apply_move_in_place(cfg, moves[rng() % moves.size()]);
            ++applied;
            REQUIRE(delta_class(cfg) == cls);
        }
        REQUIRE(cfg.size() == start - static_cast<std::size_t>(applied));
    }
}

TEST_CASE("property: moves stay inside one component") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 500; ++i) {
        Configuration cfg = random_cfg(rng);
        auto comps = connected_components(cfg);
        for (const Move& m : any_moves(cfg)) {
            bool together = false;
            for (const auto& c : comps) together = together || (c.stones.count(m.from) && c.stones.count(m.to));
            REQUIRE(together);
        }
    }
}

TEST_CASE("property: parse inverts format") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 500; ++i) {
        Configuration cfg = random_cfg(rng);
        std::string text = format_board(cfg);
        Configuration back = parse_board(text);
        REQUIRE(format_board(back) == text);
        REQUIRE(back.size() == cfg.size());
        REQUIRE(delta(back) == delta(cfg));
    }
}
