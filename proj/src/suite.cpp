#include "clobber/suite.hpp"

#include <algorithm>
#include <cstdlib>
#include <iterator>
#include <map>
#include <random>
#include <set>

#include "clobber/gadget.hpp"
#include "clobber/linear.hpp"
#include "clobber/rect.hpp"

namespace clobber {

namespace {

constexpr int kTableOne[12] = {1, 1, 2, 1, 2, 2, 3, 2, 3, 3, 4, 3};

std::string join_failures(const std::vector<std::string>& fails) {
    std::string out;
    for (std::size_t i = 0; i < fails.size() && i < 5; ++i) out += (i ? "; " : "") + fails[i];
    if (fails.size() > 5) out += "; +" + std::to_string(fails.size() - 5) + " more";
    return out;
}

CriterionResult finish(int id, const std::string& name, const std::vector<std::string>& fails,
                       const std::string& summary) {
    return {id, name, fails.empty(), fails.empty() ? summary : join_failures(fails)};
}

// Portable draws: the standard engines are fully specified, the
// distributions are not.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(eng() % n); }
};

Configuration random_configuration(Rng& rng) {
    Configuration cfg;
    cfg.parity_anchor = static_cast<int>(rng.below(2));
    int rows = 1 + static_cast<int>(rng.below(6));
    int cols = 1 + static_cast<int>(rng.below(6));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            std::size_t v = rng.below(3);
            if (v == 1) cfg.stones[{r, c}] = Color::White;
            if (v == 2) cfg.stones[{r, c}] = Color::Black;
        }
    return cfg;
}

std::vector<Move> all_moves(const Configuration& cfg) {
    std::vector<Move> out = legal_moves(cfg, Color::White);
    std::vector<Move> b = legal_moves(cfg, Color::Black);
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

std::string board_name(int n, int m) { return std::to_string(n) + "x" + std::to_string(m); }

CriterionResult table_one(const SuiteOptions& opts) {
    std::vector<std::string> fails;
    SolverOptions so{opts.limit, opts.jobs};
    const Mode modes[] = {Mode::AlternatingWhiteFirst, Mode::AlternatingBlackFirst, Mode::FreeOrder};
    for (int n = 1; n <= 12; ++n) {
        if (line_bound(n) != kTableOne[n - 1]) fails.push_back("line_bound(" + std::to_string(n) + ")");
        for (Mode mode : modes) {
            SolveResult r = min_stones(psi_line(n), mode, so);
            auto [end, rep] = replay(psi_line(n), r.witness, mode != Mode::FreeOrder);
            if (r.k != kTableOne[n - 1] || static_cast<int>(end.size()) != r.k)
                fails.push_back("n=" + std::to_string(n) + " " + mode_name(mode) + " gave " + std::to_string(r.k));
        }
    }
    return finish(1, "table1-exact", fails, "36 minima equal 1,1,2,1,2,2,3,2,3,3,4,3 and line_bound");
}

CriterionResult line_constructive(const SuiteOptions&) {
    std::vector<std::string> fails;
    for (int n = 1; n <= 64; ++n)
        for (Color first : {Color::White, Color::Black}) {
            std::string tag = "n=" + std::to_string(n) + " first=" + color_char(first);
            try {
                Plan p = reduce_line(n, first);
                auto [end, rep] = replay(psi_line(n), p, true);
                if (static_cast<int>(end.size()) != line_bound(n)) fails.push_back(tag + " wrong count");
                BlockSchedule s = block_split(n);
                for (const Move& m : p.moves) {
                    auto inside = [&](const Block& b) {
                        return m.from.col >= b.start && m.from.col < b.start + b.length && m.to.col >= b.start &&
                               m.to.col < b.start + b.length;
                    };
                    if (std::none_of(s.blocks.begin(), s.blocks.end(), inside)) {
                        fails.push_back(tag + " move leaves its block");
                        break;
                    }
                }
            } catch (const Error& e) {
                fails.push_back(tag + " " + e.what());
            }
        }
    return finish(2, "reduce-line", fails, "128 plans alternate and end on line_bound(n)");
}

CriterionResult delta_invariant(const SuiteOptions& opts) {
    std::vector<std::string> fails;
    Rng rng(opts.seed);
    int pairs = 0, clashing_moves = 0;
    while (pairs < 10000) {
        Configuration cfg = random_configuration(rng);
        std::vector<Move> moves = all_moves(cfg);
        if (moves.empty()) continue;
        const Move& m = moves[rng.below(moves.size())];
        bool matching = is_matching(cfg, m.from);
        int change = delta(apply_move(cfg, m)) - delta(cfg);
        if (change != (matching ? 0 : -3))
            fails.push_back("pair " + std::to_string(pairs) + " changed delta by " + std::to_string(change));
        clashing_moves += matching ? 0 : 1;
        ++pairs;
    }
    int sequences = 0, steps = 0;
    while (sequences < 1000) {
        Configuration cfg = random_configuration(rng);
        if (all_moves(cfg).empty()) continue;
        int cls = delta_class(cfg);
        std::size_t len = 1 + rng.below(20);
        for (std::size_t i = 0; i < len; ++i) {
            std::vector<Move> moves = all_moves(cfg);
            if (moves.empty()) break;
            apply_move_in_place(cfg, moves[rng.below(moves.size())]);
            ++steps;
            if (delta_class(cfg) != cls) {
                fails.push_back("sequence " + std::to_string(sequences) + " changed delta mod 3");
                break;
            }
        }
        ++sequences;
    }
    return finish(3, "delta-invariant", fails,
                  "10000 pairs (" + std::to_string(clashing_moves) + " clashing movers), 1000 sequences, " +
                      std::to_string(steps) + " moves, 0 violations");
}

CriterionResult rect_optimal(const SuiteOptions& opts) {
    std::vector<std::string> fails;
    SolverOptions so{opts.limit, opts.jobs};
    int boards = 0;
    for (int n = 2; n * n <= 14; ++n)
        for (int m = n; n * m <= 14; ++m) {
            ++boards;
            int want = (n * m) % 3 == 0 ? 2 : 1;
            SolveResult r = min_stones(checkerboard(n, m), Mode::AlternatingEither, so);
            auto [end, rep] = replay(checkerboard(n, m), r.witness, true);
            if (r.k != want || static_cast<int>(end.size()) != r.k)
                fails.push_back(board_name(n, m) + " gave " + std::to_string(r.k));
        }
    return finish(4, "rect-optimal", fails, std::to_string(boards) + " boards match 2 if nm%3==0 else 1");
}

bool separated(const Configuration& cfg) {
    if (cfg.size() != 2) return false;
    Coord a = cfg.stones.begin()->first;
    Coord b = std::next(cfg.stones.begin())->first;
    bool row = a.row == b.row && std::abs(a.col - b.col) == 2;
    bool col = a.col == b.col && std::abs(a.row - b.row) == 2;
    if (!row && !col) return false;
    return !cfg.stones.count({(a.row + b.row) / 2, (a.col + b.col) / 2});
}

std::string check_rect(int n, int m) {
    try {
        Plan p = reduce_rect(n, m);
        auto [end, rep] = replay(checkerboard(n, m), p, true);
        std::size_t want = (n * m) % 3 == 0 ? 2 : 1;
        if (end.size() != want) return board_name(n, m) + " ended with " + std::to_string(end.size());
        if (want == 2 && !separated(end)) return board_name(n, m) + " survivors not one square apart";
        return "";
    } catch (const Error& e) {
        return board_name(n, m) + " " + e.what();
    }
}

CriterionResult rect_constructive(const SuiteOptions&) {
    std::vector<std::string> fails;
    for (int n = 2; n <= 12; ++n)
        for (int m = 2; m <= 12; ++m) {
            std::string why = check_rect(n, m);
            if (!why.empty()) fails.push_back(why);
        }
    return finish(5, "reduce-rect", fails, "121 boards 2..12 x 2..12 reach the expected count");
}

CriterionResult small_boards(const SuiteOptions&) {
    std::vector<std::string> fails;
    for (int n = 2; n <= 6; ++n)
        for (int m = 2; m <= 6; ++m) {
            if (classify_case(n, m) != CaseTag::Small) fails.push_back(board_name(n, m) + " not Small");
            std::string why = check_rect(n, m);
            if (!why.empty()) fails.push_back(why);
        }
    std::size_t macros = 0;
    for (const StepMacro& mac : step_library()) {
        for (bool final_step : {false, true}) {
            try {
                Configuration end = replay_macro(mac, final_step);
                if (end.stones != mac.pattern(macro_target(mac, final_step)).stones)
                    fails.push_back(mac.id + " misses its waypoint");
            } catch (const Error& e) {
                fails.push_back(mac.id + " " + e.what());
            }
        }
        ++macros;
    }
    return finish(6, "small-boards", fails,
                  "25 boards reduce; " + std::to_string(macros) + " macros replay onto their waypoints");
}

CriterionResult gadget_equivalence(const SuiteOptions& opts) {
    std::vector<std::string> fails;
    SolverOptions so{opts.limit, opts.jobs};
    int graphs = 0, hamiltonian = 0, trivial = 0, white_first_diverge = 0;
    for (const GridGraph& g : connected_graphs_in_window(3, 6)) {
        ++graphs;
        std::string tag = format_circuit(g.vertices);
        std::replace(tag.begin(), tag.end(), '\n', ';');
        std::optional<Circuit> ham = ham_brute(g);
        if (ham) ++hamiltonian;
        if (!pick_anchor(g)) {
            ++trivial;
            if (ham) fails.push_back("{" + tag + "} Hamiltonian without anchor");
            continue;
        }
        Configuration gadget = build_gadget(g);
        std::size_t n = g.size();
        std::size_t whites = 0;
        for (const auto& [c, col] : gadget.stones) whites += col == Color::White ? 1 : 0;
        if (whites != n + 1 || gadget.size() - whites != n + 1) fails.push_back("{" + tag + "} census");
        if (connected_components(gadget).size() != 1) fails.push_back("{" + tag + "} not connected");
        bool reducible = is_one_reducible(gadget, so).reducible;
        bool white_first = is_one_reducible(gadget, so, Mode::AlternatingWhiteFirst).reducible;
        if (white_first != reducible) ++white_first_diverge;
        if (reducible != ham.has_value())
            fails.push_back("{" + tag + "} gadget " + (reducible ? "is" : "is not") + " 1-reducible but graph " +
                            (ham ? "has" : "has no") + " Hamiltonian circuit");
        if (!ham) continue;
        Plan p = circuit_to_plan(g, *ham);
        try {
            auto [end, rep] = replay(gadget, p, true);
            if (end.size() != 1 || p.moves.size() != 2 * n + 1) fails.push_back("{" + tag + "} plan shape");
            Circuit back = plan_to_circuit(g, p);
            if (!is_hamiltonian_circuit(g, back)) fails.push_back("{" + tag + "} round trip");
        } catch (const Error& e) {
            fails.push_back("{" + tag + "} " + e.what());
        }
    }
    return finish(7, "gadget-equivalence", fails,
                  std::to_string(graphs) + " graphs, " + std::to_string(hamiltonian) + " Hamiltonian, " +
                      std::to_string(trivial) + " without anchor, white-first divergences " +
                      std::to_string(white_first_diverge));
}

}  // namespace

bool SuiteReport::passed() const {
    return std::all_of(criteria.begin(), criteria.end(), [](const CriterionResult& c) { return c.pass; });
}

std::string SuiteReport::text() const {
    std::string out = "suite " + suite + "\n";
    for (const CriterionResult& c : criteria)
        out += std::string(c.pass ? "PASS" : "FAIL") + "  " + std::to_string(c.id) + "  " + c.name + "  " +
               c.detail + "\n";
    out += std::string("result: ") + (passed() ? "pass" : "fail") + "\n";
    return out;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"table1", "thm3", "thm4", "npc"};
    return names;
}

CriterionResult run_criterion(int id, const SuiteOptions& opts) {
    switch (id) {
    case 1: return table_one(opts);
    case 2: return line_constructive(opts);
    case 3: return delta_invariant(opts);
    case 4: return rect_optimal(opts);
    case 5: return rect_constructive(opts);
    case 6: return small_boards(opts);
    case 7: return gadget_equivalence(opts);
    default: throw Error("unknown criterion " + std::to_string(id));
    }
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts) {
    static const std::map<std::string, std::vector<int>> kCriteria{
        {"table1", {1, 2}}, {"thm3", {3}}, {"thm4", {4, 5, 6}}, {"npc", {7}}};
    auto it = kCriteria.find(name);
    if (it == kCriteria.end()) throw Error("unknown suite '" + name + "' (expected table1, thm3, thm4 or npc)");
    SuiteReport rep;
    rep.suite = name;
    for (int id : it->second) rep.criteria.push_back(run_criterion(id, opts));
    return rep;
}

}  // namespace clobber
