#include "clobber/rect.hpp"

#include <algorithm>
#include <cstdlib>
#include <iterator>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <unordered_set>

#include "macro_table.hpp"

namespace clobber {

namespace {

constexpr int kMaxGap = 12;

bool is_run_token(const std::string& tok) {
    return tok.size() >= 2 && (tok[0] == 'W' || tok[0] == 'B') &&
           std::all_of(tok.begin() + 1, tok.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

Color last_mover(Color first, int k) { return k % 2 == 1 ? first : opposite(first); }

std::string state_key(const Configuration& cfg, Color mover, int k) {
    std::string key;
    key.reserve(cfg.size() * 9 + 2);
    for (const auto& [c, col] : cfg.stones) {
        key.append(reinterpret_cast<const char*>(&c.row), sizeof c.row);
        key.append(reinterpret_cast<const char*>(&c.col), sizeof c.col);
        key += color_char(col);
    }
    key += color_char(mover);
    key += static_cast<char>(k);
    return key;
}

struct GapSearch {
    const Configuration& post;
    std::unordered_set<std::string> failed;
    std::vector<Move> path;

    bool run(const Configuration& cfg, Color mover, int k) {
        if (k == 0) return cfg.stones == post.stones;
        // A cell never regains a stone once emptied.
        for (const auto& [c, col] : post.stones)
            if (!cfg.stones.count(c)) return false;
        std::string key = state_key(cfg, mover, k);
        if (failed.count(key)) return false;
        for (const Move& m : legal_moves(cfg, mover)) {
            path.push_back(m);
            if (run(apply_move(cfg, m), opposite(mover), k - 1)) return true;
            path.pop_back();
        }
        failed.insert(std::move(key));
        return false;
    }
};

char swap_glyph(char ch) {
    switch (ch) {
    case 'B': return 'W';
    case 'W': return 'B';
    case 'b': return 'w';
    case 'w': return 'b';
    default: return ch;
    }
}

std::vector<std::string> transform_grid(const std::vector<std::string>& rows, int width, bool mirror,
                                        bool flip, bool swap_colors) {
    std::vector<std::string> out;
    for (const std::string& r : rows) {
        std::string row = r;
        row.resize(static_cast<std::size_t>(width), '.');
        if (mirror) std::reverse(row.begin(), row.end());
        if (swap_colors) std::transform(row.begin(), row.end(), row.begin(), swap_glyph);
        out.push_back(row);
    }
    if (flip) std::reverse(out.begin(), out.end());
    return out;
}

std::vector<MacroMove> to_pane_moves(const StepMacro& macro, const std::vector<Move>& moves) {
    std::vector<MacroMove> out;
    auto locate = [&](Coord c) {
        for (int p = macro.pane_count() - 1; p >= 0; --p) {
            int off = macro.pane_offset(p);
            if (c.col >= off) return std::make_pair(p, Coord{c.row, c.col - off});
        }
        throw Error("move outside every pane in " + macro.id);
    };
    for (const Move& m : moves) {
        auto [pf, from] = locate(m.from);
        auto [pt, to] = locate(m.to);
        if (pf != pt) throw Error("move crosses panes in " + macro.id);
        out.push_back({m.mover, pf, from, to});
    }
    return out;
}

std::vector<StepMacro> build_library() {
    std::vector<StepMacro> lib;
    for (std::size_t i = 0; i < detail::kMacroSourceCount; ++i) {
        const auto& src = detail::kMacroSources[i];
        StepMacro m = parse_macro(src.id, src.anchors, src.sequence);
        resolve_macro(m);
        lib.push_back(std::move(m));
    }
    return lib;
}

// Builds a plan by stamping macros onto a board and replaying their moves.
struct Builder {
    Configuration cfg;
    Plan plan;

    Color mover() const { return plan.moves.empty() ? Color::White : opposite(plan.moves.back().mover); }

    void place(const StepMacro& m, int r0, int cl, int cr, bool final_step) {
        auto cell = [&](int pane, Coord c) {
            if (m.anchors[static_cast<std::size_t>(pane)] == 'L') return Coord{r0 + c.row, cl + c.col};
            return Coord{r0 + c.row, cr - (m.pane_width(pane) - 1) + c.col};
        };
        for (int p = 0; p < m.pane_count(); ++p) {
            const auto& rows = m.waypoints.front()[static_cast<std::size_t>(p)];
            for (int r = 0; r < m.pane_height(p); ++r) {
                const std::string& row = rows[static_cast<std::size_t>(r)];
                for (int c = 0; c < m.pane_width(p); ++c) {
                    char ch = c < static_cast<int>(row.size()) ? row[static_cast<std::size_t>(c)] : '.';
                    Coord at = cell(p, {r, c});
                    auto it = cfg.stones.find(at);
                    bool want_stone = ch != '.' && ch != '_';
                    bool ok = want_stone ? it != cfg.stones.end() && it->second == color_from_char(ch)
                                         : it == cfg.stones.end();
                    if (!ok)
                        throw Error(m.id + " does not match the board at (" + std::to_string(at.row) + "," +
                                    std::to_string(at.col) + ")");
                }
            }
        }
        std::size_t count = m.resolved.size() - (final_step ? 0 : static_cast<std::size_t>(m.final_only_moves()));
        for (std::size_t i = 0; i < count; ++i) {
            const MacroMove& mm = m.resolved[i];
            if (mm.mover != mover())
                throw Error(m.id + " breaks alternation at its move " + std::to_string(i));
            Move mv{mm.mover, cell(mm.pane, mm.from), cell(mm.pane, mm.to)};
            apply_move_in_place(cfg, mv);
            plan.moves.push_back(mv);
        }
    }

    void step(const StepMacro& m, int r0, int c0, bool final_step) { place(m, r0, c0, c0, final_step); }
};

class VariantCache {
public:
    const StepMacro& get(const std::string& id, bool mirror, bool flip, bool swap_colors,
                         std::optional<Color> first) {
        std::string key = id + (mirror ? "|m" : "|") + (flip ? "f" : "") + (swap_colors ? "s" : "") +
                          (first ? std::string(1, color_char(*first)) : "");
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        StepMacro m = find_macro(id);
        if (mirror || flip || swap_colors) m = transform_macro(m, mirror, flip, swap_colors);
        if (first) m = with_first_mover(m, *first);
        return cache_.emplace(key, std::move(m)).first->second;
    }

    // Left pane of the three-row trim on its own, for the current mover.
    const StepMacro& left_half_trim(Color first) {
        std::string key = std::string("O3.trim4.left|") + color_char(first);
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        const StepMacro& full = find_macro("O3.trim4");
        StepMacro half;
        half.id = "O3.trim4.left";
        half.anchors = "L";
        half.waypoints = {{full.waypoints.front()[0]}, {full.waypoints.back()[0]}};
        int k = static_cast<int>(half.pattern(0).size() - half.pattern(1).size());
        half.runs = {{first, k}};
        half.resolved = to_pane_moves(half, solve_waypoint_gap(half.pattern(0), half.pattern(1), first, k));
        return cache_.emplace(key, std::move(half)).first->second;
    }

private:
    std::mutex mu_;
    std::map<std::string, StepMacro> cache_;
};

VariantCache& variants() {
    static VariantCache cache;
    return cache;
}

const StepMacro& tr(const std::string& id, bool mirror = false, bool flip = false, bool swap_colors = false,
                    std::optional<Color> first = std::nullopt) {
    return variants().get(id, mirror, flip, swap_colors, first);
}

void two_row_trims(Builder& bd, bool ee, int row, int M, int J, bool upside) {
    const std::string fam = ee ? "EE" : "O2";
    bd.place(tr(fam + ".trim0", false, upside, upside, bd.mover()), row, 0, M - 1, false);
    for (int j = 0; j < J; ++j) {
        bool odd = j % 2 == 1;
        const StepMacro& m = ee ? tr("EE.trim6", odd, upside, upside, bd.mover())
                                : tr("O2.trim6", false, upside, odd != upside, bd.mover());
        bd.place(m, row, 1 + 3 * j, M - 2 - 3 * j, false);
    }
}

void schedule_ee(Builder& bd, int N, int M) {
    int r = M % 3;
    int base = r == 2 ? 6 : r == 1 ? 8 : 10;
    int J = (M - 2 - base) / 6;
    bool mirror = J % 2 == 1;
    int c0 = 1 + 3 * J;
    int strips = N / 2;
    for (int s = 0; s < strips; ++s) {
        two_row_trims(bd, true, 2 * s, M, J, false);
        int idx = s == 0 ? 1 : r != 0 ? 2 + (s - 1) % 3 : 2 + (s - 1) % 2;
        const StepMacro& m = tr("EE.m" + std::to_string(r) + "." + std::to_string(idx), mirror);
        bd.step(m, 2 * s - (idx == 1 ? 0 : 1), c0, s == strips - 1);
    }
}

void schedule_e35(Builder& bd, int N, int M) {
    int strips = N / 2;
    for (int s = 0; s < strips; ++s) {
        int idx = s == 0 ? 1 : M == 3 ? 2 : 2 + (s - 1) % 3;
        const StepMacro& m = tr("E" + std::to_string(M) + "." + std::to_string(idx));
        bd.step(m, 2 * s - (idx == 1 ? 0 : 1), 0, s == strips - 1);
    }
}

struct ThreeRowEnding {
    std::string id;
    int width = 0;
    bool mirror = false;
    int base_offset = 0;
    bool asymmetric = false;
};

ThreeRowEnding three_row_ending(int case_no, char type, int idx, int M) {
    if (idx == 1) {
        bool narrow = (M - 2) % 4 == 3;
        return {narrow ? "O3.1" : "O3.1p", narrow ? 3 : 5};
    }
    struct Row {
        int case_no;
        char type;
        int idx;
        ThreeRowEnding ending;
    };
    static const Row kTable[] = {
        {1, 'a', 2, {"C1.2a3", 7}},       {1, 'b', 2, {"C1.2b3", 5}},
        {1, 'a', 3, {"C1.3a3", 7}},       {1, 'b', 3, {"C1.3b3", 5}},
        {1, 'a', 4, {"C1.4a3", 3}},       {1, 'b', 4, {"C1.4b3", 5}},
        {2, 'a', 2, {"C1.4b3", 5}},       {2, 'b', 2, {"C1.4a3", 3, true}},
        {3, 'a', 2, {"C3.2a3", 7}},       {3, 'b', 2, {"C1.3b3", 5}},
        {3, 'a', 3, {"C3.3a3", 3, false, 1}}, {3, 'b', 3, {"C1.2b3", 5}},
        {3, 'a', 4, {"C3.4a3", 7, false, 0, true}}, {3, 'b', 4, {"C1.4b3", 5}},
    };
    for (const Row& row : kTable)
        if (row.case_no == case_no && row.type == type && row.idx == idx) return row.ending;
    throw Error("no three-row ending for this case");
}

// Boards with an even number of columns below an odd or even number of rows
// of odd width: two-row strips, plus a three-row strip when N is odd.
void schedule_eo(Builder& bd, int N, int M) {
    int r = M % 3;
    int base = r == 1 ? 5 : r == 0 ? 7 : 9;
    int J = (M - 2 - base) / 6;
    char type = J % 2 == 0 ? 'b' : 'a';
    int c2 = 1 + 3 * J;
    bool odd = N % 2 == 1;
    int strips = odd ? (N - 3) / 2 : N / 2;
    int case_no = r == 1 ? 1 : r == 0 ? 2 : 3;
    auto cycle = [&](int s) { return s == 0 ? 1 : r != 0 ? 2 + (s - 1) % 3 : 2; };
    auto two_row_name = [&](int idx) {
        std::string nm = "C" + std::to_string(case_no) + "." + std::to_string(idx) + type;
        bool upside = (case_no == 1 && type == 'b' && idx == 4) || (case_no == 3 && type == 'b' && idx == 3) ||
                      (case_no == 3 && type == 'a' && idx == 4);
        return upside ? nm + "m" : nm;
    };

    ThreeRowEnding ending;
    int b0 = 0;
    if (odd) {
        ending = three_row_ending(case_no, type, cycle(strips), M);
        int row3 = N - 3;
        int K = 0;
        if (ending.asymmetric) {
            b0 = c2 + 3;
            K = (M - 11 - c2) / 2;
        } else {
            b0 = (M - 1) / 2 - (ending.width - 1) / 2;
            if ((M - 2 - ending.width) % 4 != 0) throw Error("three-row window does not fit");
            K = (M - 2 - ending.width) / 4;
        }
        // The three-row trims go first so the strips above stay untouched.
        bd.place(tr("O3.trim0", ending.mirror, false, false, bd.mover()), row3, 0, M - 1, false);
        for (int k = 0; k < K; ++k)
            bd.place(tr("O3.trim4", ending.mirror, false, false, bd.mover()), row3, 1 + 2 * k, M - 2 - 2 * k,
                     false);
        if (ending.asymmetric) {
            bd.step(variants().left_half_trim(bd.mover()), row3, 1 + 2 * K, false);
            bd.step(variants().left_half_trim(bd.mover()), row3, 3 + 2 * K, false);
        }
    }
    for (int s = 0; s < strips; ++s) {
        std::string nm = two_row_name(cycle(s));
        bool last = !odd && s == strips - 1;
        // The shorter displayed ending of (3a) leaves an adjacent pair; this one separates them.
        if (nm == "C3.3a" && last) nm = "C3.3a.fin";
        bool upside = nm.back() == 'm';
        const StepMacro& m = tr(nm);
        two_row_trims(bd, false, 2 * s, M, J, upside);
        int rem = m.pane_height(0) - 2;
        bd.step(m, 2 * s - rem, c2, last);
    }
    if (odd) {
        const StepMacro& m = tr(ending.id, ending.mirror);
        int rem = m.pane_height(0) - 3;
        bd.step(m, N - 3 - rem, b0 - ending.base_offset, true);
    }
}

void schedule_small(Builder& bd, int N, int M) {
    struct Script {
        int n, m;
        std::vector<std::pair<const char*, int>> parts;
    };
    static const Script kScripts[] = {
        {2, 2, {{"A.2x2", 0}}},
        {2, 4, {{"A.2x4", 0}}},
        {2, 6, {{"A.2x6", 0}}},
        {3, 3, {{"A.3x3", 0}}},
        {3, 5, {{"A.3x5", 0}}},
        {4, 4, {{"A.2x4", 0}, {"A.4x4t", 1}}},
        {4, 6, {{"A.2x6", 0}, {"A.4x6t", 1}}},
        {5, 5, {{"A.5x5", 0}}},
        {6, 6, {{"A.2x6", 0}, {"A.4x6t", 1}, {"A.6x6t", 3}}},
    };
    for (const Script& s : kScripts) {
        if (s.n != N || s.m != M) continue;
        for (const auto& [id, row] : s.parts) bd.step(tr(id), row, 0, true);
        return;
    }
    throw Error("no script for " + std::to_string(N) + "x" + std::to_string(M));
}

enum class Family { Script, E35, EE, EO };

struct Layout {
    int N, M;
    bool transposed;
    Family family;
};

Layout layout_for(int n, int m) {
    if (n <= 6 && m <= 6) {
        if ((m == 3 || m == 5) && n % 2 == 0) return {n, m, false, Family::E35};
        if ((n == 3 || n == 5) && m % 2 == 0) return {m, n, true, Family::E35};
        if (n <= m) return {n, m, false, Family::Script};
        return {m, n, true, Family::Script};
    }
    int N = m >= 7 ? n : m;
    int M = m >= 7 ? m : n;
    bool t = m < 7;
    if (N % 2 == 0 && M % 2 == 0) return {N, M, t, Family::EE};
    if (N % 2 == 1 && M % 2 == 0) return {M, N, !t, N < 7 ? Family::E35 : Family::EO};
    return {N, M, t, Family::EO};
}

bool separated_pair(const Configuration& cfg) {
    if (cfg.size() != 2) return false;
    Coord a = cfg.stones.begin()->first;
    Coord b = std::next(cfg.stones.begin())->first;
    return (a.row == b.row && std::abs(a.col - b.col) == 2) || (a.col == b.col && std::abs(a.row - b.row) == 2);
}

}  // namespace

const char* case_name(CaseTag tag) {
    switch (tag) {
    case CaseTag::Small: return "Small";
    case CaseTag::EE: return "EE";
    case CaseTag::OE_rotated: return "OE_rotated";
    case CaseTag::EO: return "EO";
    case CaseTag::OO: return "OO";
    }
    return "?";
}

CaseTag classify_case(int n, int m) {
    if (n < 2 || m < 2)
        throw InvalidSize("rectangles need at least 2 rows and 2 columns, got " + std::to_string(n) + "x" +
                          std::to_string(m));
    if (n <= 6 && m <= 6) return CaseTag::Small;
    int N = m >= 7 ? n : m;
    int M = m >= 7 ? m : n;
    if (N % 2 == 0 && M % 2 == 0) return CaseTag::EE;
    if (N % 2 == 1 && M % 2 == 0) return N < 7 ? CaseTag::OE_rotated : CaseTag::EO;
    if (N % 2 == 0) return CaseTag::EO;
    return CaseTag::OO;
}

int StepMacro::pane_width(int pane) const {
    std::size_t w = 0;
    for (const std::string& row : waypoints.front()[static_cast<std::size_t>(pane)]) w = std::max(w, row.size());
    return static_cast<int>(w);
}

int StepMacro::pane_height(int pane) const {
    return static_cast<int>(waypoints.front()[static_cast<std::size_t>(pane)].size());
}

int StepMacro::pane_offset(int pane) const {
    int off = 0;
    for (int p = 0; p < pane; ++p) off += pane_width(p) + 2;
    return off;
}

int StepMacro::total_moves() const {
    int k = 0;
    for (const auto& run : runs) k += run.second;
    return k;
}

int StepMacro::final_only_moves() const {
    if (final_from < 0) return 0;
    int k = 0;
    for (std::size_t i = static_cast<std::size_t>(final_from); i < runs.size(); ++i) k += runs[i].second;
    return k;
}

Configuration StepMacro::pattern(std::size_t waypoint) const {
    Configuration cfg;
    const auto& panes = waypoints.at(waypoint);
    for (int p = 0; p < pane_count(); ++p) {
        int off = pane_offset(p);
        const auto& rows = panes[static_cast<std::size_t>(p)];
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < rows[r].size(); ++c) {
                char ch = rows[r][c];
                if (ch != '.' && ch != '_')
                    cfg.stones[{static_cast<int>(r), off + static_cast<int>(c)}] = color_from_char(ch);
            }
    }
    return cfg;
}

StepMacro parse_macro(const std::string& id, const std::string& anchors, const std::string& sequence) {
    StepMacro m;
    m.id = id;
    m.anchors = anchors;
    std::istringstream in(sequence);
    std::string tok;
    std::vector<std::vector<std::string>> cur;
    while (in >> tok) {
        if (tok == "~") continue;
        if (tok == "(") {
            m.final_from = static_cast<int>(m.runs.size());
            continue;
        }
        if (is_run_token(tok)) {
            m.waypoints.push_back(std::move(cur));
            cur.clear();
            m.runs.emplace_back(color_from_char(tok[0]), std::stoi(tok.substr(1)));
        } else {
            cur.push_back(split(tok, '|'));
        }
    }
    m.waypoints.push_back(std::move(cur));
    if (m.runs.empty()) throw Error(id + ": no runs");
    for (const auto& wp : m.waypoints) {
        if (wp.size() != anchors.size()) throw Error(id + ": waypoint pane count differs from anchors");
        for (std::size_t p = 0; p < wp.size(); ++p)
            if (wp[p].size() != m.waypoints.front()[p].size()) throw Error(id + ": pane height changes");
    }
    for (std::size_t i = 0; i + 1 < m.runs.size(); ++i)
        if (last_mover(m.runs[i].first, m.runs[i].second) == m.runs[i + 1].first)
            throw Error(id + ": runs " + std::to_string(i) + " and " + std::to_string(i + 1) +
                        " break alternation");
    return m;
}

void resolve_macro(StepMacro& macro) {
    std::vector<Move> all;
    for (std::size_t i = 0; i < macro.runs.size(); ++i) {
        auto [first, k] = macro.runs[i];
        std::vector<Move> part;
        try {
            part = solve_waypoint_gap(macro.pattern(i), macro.pattern(i + 1), first, k);
        } catch (const NoConnectingSequence& e) {
            throw NoConnectingSequence(macro.id + " run " + std::to_string(i) + ": " + e.what());
        }
        all.insert(all.end(), part.begin(), part.end());
    }
    macro.resolved = to_pane_moves(macro, all);
}

std::vector<Move> solve_waypoint_gap(const Configuration& pre, const Configuration& post, Color first, int k) {
    if (k < 0 || k > kMaxGap)
        throw NoConnectingSequence("gap length " + std::to_string(k) + " outside 0.." + std::to_string(kMaxGap));
    if (static_cast<int>(pre.size()) - static_cast<int>(post.size()) != k)
        throw NoConnectingSequence("stone counts differ by " +
                                   std::to_string(static_cast<int>(pre.size()) - static_cast<int>(post.size())) +
                                   ", not " + std::to_string(k));
    GapSearch search{post, {}, {}};
    if (!search.run(pre, first, k)) throw NoConnectingSequence("no alternating sequence connects the waypoints");
    return search.path;
}

Configuration replay_macro(const StepMacro& macro, bool final_step) {
    Plan plan;
    std::size_t count = macro.resolved.size() -
                        (final_step ? 0 : static_cast<std::size_t>(macro.final_only_moves()));
    for (std::size_t i = 0; i < count; ++i) {
        const MacroMove& mm = macro.resolved[i];
        int off = macro.pane_offset(mm.pane);
        plan.moves.push_back({mm.mover, {mm.from.row, mm.from.col + off}, {mm.to.row, mm.to.col + off}});
    }
    plan.first_mover = macro.first_mover();
    return replay(macro.pattern(0), plan, true).first;
}

std::size_t macro_target(const StepMacro& macro, bool final_step) {
    if (final_step || macro.final_from < 0) return macro.waypoints.size() - 1;
    return static_cast<std::size_t>(macro.final_from);
}

const std::vector<StepMacro>& step_library() {
    static const std::vector<StepMacro> lib = build_library();
    return lib;
}

const StepMacro& find_macro(const std::string& id) {
    for (const StepMacro& m : step_library())
        if (m.id == id) return m;
    throw Error("unknown macro " + id);
}

StepMacro transform_macro(const StepMacro& macro, bool mirror, bool flip, bool swap_colors) {
    StepMacro out = macro;
    int panes = macro.pane_count();
    std::vector<int> order(static_cast<std::size_t>(panes));
    for (int p = 0; p < panes; ++p) order[static_cast<std::size_t>(p)] = mirror ? panes - 1 - p : p;
    std::string suffix = std::string(mirror ? "~mirror" : "") + (flip ? "~flip" : "") + (swap_colors ? "~swap" : "");
    out.id = macro.id + suffix;
    for (std::size_t w = 0; w < macro.waypoints.size(); ++w)
        for (int p = 0; p < panes; ++p) {
            int src = order[static_cast<std::size_t>(p)];
            out.waypoints[w][static_cast<std::size_t>(p)] = transform_grid(
                macro.waypoints[w][static_cast<std::size_t>(src)], macro.pane_width(src), mirror, flip, swap_colors);
        }
    if (mirror && panes > 1)
        for (int p = 0; p < panes; ++p)
            out.anchors[static_cast<std::size_t>(p)] =
                macro.anchors[static_cast<std::size_t>(order[static_cast<std::size_t>(p)])] == 'L' ? 'R' : 'L';
    for (auto& run : out.runs)
        if (swap_colors) run.first = opposite(run.first);
    for (MacroMove& mm : out.resolved) {
        int src = mm.pane;
        int w = macro.pane_width(src);
        int h = macro.pane_height(src);
        auto map = [&](Coord c) {
            if (flip) c.row = h - 1 - c.row;
            if (mirror) c.col = w - 1 - c.col;
            return c;
        };
        mm.pane = mirror ? panes - 1 - src : src;
        mm.from = map(mm.from);
        mm.to = map(mm.to);
        if (swap_colors) mm.mover = opposite(mm.mover);
    }
    return out;
}

StepMacro with_first_mover(const StepMacro& macro, Color first) {
    if (macro.first_mover() == first) return macro;
    if (macro.final_from >= 0) throw Error(macro.id + ": cannot re-solve a macro with final-only runs");
    StepMacro out;
    out.id = macro.id + "~" + color_char(first);
    out.anchors = macro.anchors;
    out.waypoints = {macro.waypoints.front(), macro.waypoints.back()};
    int k = macro.total_moves();
    out.runs = {{first, k}};
    out.resolved = to_pane_moves(out, solve_waypoint_gap(out.pattern(0), out.pattern(1), first, k));
    return out;
}

Plan reduce_rect(int n, int m) {
    CaseTag tag = classify_case(n, m);
    Layout lay = layout_for(n, m);
    Builder bd;
    bd.cfg = checkerboard(lay.N, lay.M);
    switch (lay.family) {
    case Family::Script: schedule_small(bd, lay.N, lay.M); break;
    case Family::E35: schedule_e35(bd, lay.N, lay.M); break;
    case Family::EE: schedule_ee(bd, lay.N, lay.M); break;
    case Family::EO: schedule_eo(bd, lay.N, lay.M); break;
    }
    Plan plan = lay.transposed ? transpose_plan(bd.plan) : bd.plan;
    plan.first_mover = plan.moves.empty() ? Color::White : plan.moves.front().mover;
    auto [final_cfg, rep] = replay(checkerboard(n, m), plan, true);
    std::size_t want = (n * m) % 3 == 0 ? 2 : 1;
    if (final_cfg.size() != want)
        throw Error("reduction of " + std::to_string(n) + "x" + std::to_string(m) + " ended with " +
                    std::to_string(final_cfg.size()) + " stones");
    if (want == 2 && !separated_pair(final_cfg))
        throw Error("reduction of " + std::to_string(n) + "x" + std::to_string(m) +
                    " left two stones that are not one empty square apart");
    plan.metadata = "reduce_rect n=" + std::to_string(n) + " m=" + std::to_string(m) + " case=" + case_name(tag) +
                    " first=" + color_char(plan.first_mover);
    return plan;
}

}  // namespace clobber
