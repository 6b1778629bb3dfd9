#include <doctest.h>

#include <optional>
#include <random>

#include "clobber/board.hpp"
#include "clobber/io.hpp"
#include "clobber/linear.hpp"
#include "clobber/solver.hpp"

using namespace clobber;

namespace {

constexpr Color W = Color::White;
constexpr Color B = Color::Black;

Configuration random_cfg(std::mt19937_64& rng, int max_stones) {
    Configuration cfg;
    while (cfg.empty()) {
        int rows = 1 + static_cast<int>(rng() % 4);
        int cols = 1 + static_cast<int>(rng() % 4);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) {
                if (static_cast<int>(cfg.size()) >= max_stones) break;
                auto v = rng() % 3;
                if (v == 1) cfg.stones[{r, c}] = W;
                if (v == 2) cfg.stones[{r, c}] = B;
            }
    }
    return cfg;
}

// Plain exhaustive minimum without memo, pruning or bounds.
int naive_min(const Configuration& cfg, std::optional<Color> turn) {
    int best = static_cast<int>(cfg.size());
    for (Color c : {W, B}) {
        if (turn && *turn != c) continue;
        for (const Move& m : legal_moves(cfg, c)) {
            std::optional<Color> next;
            if (turn) next = opposite(c);
            best = std::min(best, naive_min(apply_move(cfg, m), next));
        }
    }
    return best;
}

void check_witness(const Configuration& cfg, Mode mode, const SolveResult& r) {
    bool alternating = mode != Mode::FreeOrder;
    auto [end, rep] = replay(cfg, r.witness, alternating);
    REQUIRE(static_cast<int>(end.size()) == r.k);
    if (!r.witness.moves.empty()) {
        if (mode == Mode::AlternatingWhiteFirst) REQUIRE(r.witness.moves.front().mover == W);
        if (mode == Mode::AlternatingBlackFirst) REQUIRE(r.witness.moves.front().mover == B);
    }
}

}  // namespace

TEST_CASE("mode names") {
    CHECK(parse_mode("wfirst") == Mode::AlternatingWhiteFirst);
    CHECK(parse_mode("bfirst") == Mode::AlternatingBlackFirst);
    CHECK(parse_mode("either") == Mode::AlternatingEither);
    CHECK(parse_mode("free") == Mode::FreeOrder);
    CHECK_THROWS_AS(parse_mode("sideways"), Error);
    for (Mode m : {Mode::AlternatingWhiteFirst, Mode::AlternatingBlackFirst, Mode::AlternatingEither, Mode::FreeOrder})
        CHECK(parse_mode(mode_name(m)) == m);
}

TEST_CASE("lower bound") {
    CHECK(lower_bound(psi_line(3)) == 2);
    Configuration one;
    one.stones[{0, 0}] = W;
    CHECK(lower_bound(one) == 1);
    Configuration same;
    same.stones[{0, 0}] = W;
    same.stones[{0, 1}] = W;
    CHECK(lower_bound(same) == 2);
    Configuration apart;
    apart.stones[{0, 0}] = W;
    apart.stones[{0, 2}] = B;
    apart.stones[{0, 4}] = B;
    CHECK(lower_bound(apart) == 3);
    CHECK_THROWS_AS(lower_bound(Configuration{}), EmptyConfiguration);
}

TEST_CASE("min stones examples") {
    CHECK(min_stones(psi_line(5), Mode::AlternatingEither).k == 2);
    CHECK(min_stones(psi_line(7), Mode::FreeOrder).k == 3);
    SolveResult r = min_stones(checkerboard(2, 2), Mode::AlternatingWhiteFirst);
    CHECK(r.k == 1);
    check_witness(checkerboard(2, 2), Mode::AlternatingWhiteFirst, r);
    CHECK(r.witness.metadata == "min_stones mode=wfirst");

    Configuration lone;
    lone.stones[{2, 2}] = B;
    CHECK(min_stones(lone, Mode::FreeOrder).k == 1);
    CHECK(min_stones(Configuration{}, Mode::FreeOrder).k == 0);
}

TEST_CASE("limit") {
    CHECK_THROWS_AS(min_stones(checkerboard(5, 6), Mode::FreeOrder), LimitExceeded);
    CHECK_THROWS_AS(min_stones(checkerboard(2, 3), Mode::FreeOrder, {5, 1}), LimitExceeded);
    CHECK_NOTHROW(min_stones(checkerboard(2, 3), Mode::FreeOrder, {6, 1}));
}

TEST_CASE("one reducibility") {
    Configuration lone;
    lone.stones[{0, 0}] = W;
    auto single = is_one_reducible(lone);
    CHECK(single.reducible);
    REQUIRE(single.witness);
    CHECK(single.witness->moves.empty());

    // Delta class 0 is decided before any search, even past the limit.
    CHECK_FALSE(is_one_reducible(checkerboard(3, 4)).reducible);
    CHECK_FALSE(is_one_reducible(checkerboard(6, 6)).reducible);
    CHECK_FALSE(is_one_reducible(psi_line(3)).reducible);

    auto four = is_one_reducible(checkerboard(2, 2));
    CHECK(four.reducible);
    REQUIRE(four.witness);
    CHECK(replay(checkerboard(2, 2), *four.witness, true).first.size() == 1);
    CHECK_FALSE(is_one_reducible(Configuration{}).reducible);
}

TEST_CASE("lines match the bound in every mode") {
    for (int n = 1; n <= 12; ++n)
        for (Mode m : {Mode::AlternatingWhiteFirst, Mode::AlternatingBlackFirst, Mode::AlternatingEither,
                       Mode::FreeOrder}) {
            CAPTURE(n);
            SolveResult r = min_stones(psi_line(n), m);
            CHECK(r.k == line_bound(n));
            check_witness(psi_line(n), m, r);
        }
}

TEST_CASE("small checkerboards reach one stone unless nm is a multiple of 3") {
    for (int n = 1; n <= 14; ++n)
        for (int m = 1; n * m <= 14; ++m) {
            if (n * m < 2) continue;
            CAPTURE(n);
            CAPTURE(m);
            int want = (n * m) % 3 == 0 ? 2 : 1;
            if (n == 1 || m == 1) want = line_bound(n * m);
            CHECK(min_stones(checkerboard(n, m), Mode::AlternatingEither).k == want);
        }
}

TEST_CASE("property: solver agrees with a naive oracle") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        Configuration cfg = random_cfg(rng, 8);
        CAPTURE(format_board(cfg));
        REQUIRE(min_stones(cfg, Mode::FreeOrder).k == naive_min(cfg, std::nullopt));
        REQUIRE(min_stones(cfg, Mode::AlternatingWhiteFirst).k == naive_min(cfg, W));
        REQUIRE(min_stones(cfg, Mode::AlternatingBlackFirst).k == naive_min(cfg, B));
    }
}

TEST_CASE("property: mode ordering, bounds and witnesses") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 300; ++i) {
        Configuration cfg = random_cfg(rng, 12);
        CAPTURE(format_board(cfg));
        SolveResult wf = min_stones(cfg, Mode::AlternatingWhiteFirst);
        SolveResult bf = min_stones(cfg, Mode::AlternatingBlackFirst);
        SolveResult ei = min_stones(cfg, Mode::AlternatingEither);
        SolveResult fr = min_stones(cfg, Mode::FreeOrder);
        REQUIRE(ei.k == std::min(wf.k, bf.k));
        REQUIRE(fr.k <= ei.k);
        REQUIRE(fr.k >= lower_bound(cfg));
        REQUIRE(ei.k >= lower_bound(cfg));
        check_witness(cfg, Mode::AlternatingWhiteFirst, wf);
        check_witness(cfg, Mode::AlternatingBlackFirst, bf);
        check_witness(cfg, Mode::AlternatingEither, ei);
        check_witness(cfg, Mode::FreeOrder, fr);
        REQUIRE(is_one_reducible(cfg).reducible == (ei.k == 1));
    }
}

TEST_CASE("property: free order decomposes over components") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 300; ++i) {
        Configuration cfg = random_cfg(rng, 12);
        int sum = 0;
        for (const Configuration& c : connected_components(cfg)) sum += min_stones(c, Mode::FreeOrder).k;
        REQUIRE(min_stones(cfg, Mode::FreeOrder).k == sum);
    }
}

TEST_CASE("property: worker count changes nothing") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 60; ++i) {
        Configuration cfg = random_cfg(rng, 14);
        for (Mode m : {Mode::AlternatingEither, Mode::FreeOrder}) {
            SolveResult a = min_stones(cfg, m, {16, 1});
            SolveResult b = min_stones(cfg, m, {16, 4});
            REQUIRE(a.k == b.k);
            REQUIRE(a.witness.moves == b.witness.moves);
        }
    }
    SolveResult a = min_stones(checkerboard(3, 4), Mode::AlternatingEither, {16, 1});
    SolveResult b = min_stones(checkerboard(3, 4), Mode::AlternatingEither, {16, 4});
    CHECK(a.k == 2);
    CHECK(a.witness.moves == b.witness.moves);
}
