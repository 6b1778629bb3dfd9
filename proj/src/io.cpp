#include "clobber/io.hpp"

#include <algorithm>
#include <climits>
#include <fstream>
#include <sstream>

namespace clobber {

namespace {

constexpr const char* kHeaderPrefix = "clobber v1 anchor=";

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

}  // namespace

Configuration parse_board(const std::string& text) {
    Configuration cfg;
    std::vector<std::string> lines = split_lines(text);
    std::size_t first_row = 0;
    if (!lines.empty() && lines[0].rfind("clobber", 0) == 0) {
        const std::string& h = lines[0];
        std::string prefix = kHeaderPrefix;
        if (h.rfind(prefix, 0) != 0 || h.size() != prefix.size() + 1 ||
            (h.back() != '0' && h.back() != '1'))
            throw ParseError(1, 1, "malformed header, expected `clobber v1 anchor=<0|1>`");
        cfg.parity_anchor = h.back() - '0';
        first_row = 1;
    }
    for (std::size_t i = first_row; i < lines.size(); ++i) {
        const std::string& line = lines[i];
        int row = static_cast<int>(i - first_row);
        for (std::size_t j = 0; j < line.size(); ++j) {
            char ch = line[j];
            int col = static_cast<int>(j);
            if (ch == 'B')
                cfg.stones[{row, col}] = Color::Black;
            else if (ch == 'W')
                cfg.stones[{row, col}] = Color::White;
            else if (ch == '.')
                continue;
            else if (ch == '\r' && j + 1 == line.size())
                throw ParseError(static_cast<int>(i) + 1, col + 1, "CR line endings are not accepted");
            else
                throw ParseError(static_cast<int>(i) + 1, col + 1,
                                 std::string("unexpected glyph '") + ch + "'");
        }
    }
    return cfg;
}

std::string format_board(const Configuration& cfg) {
    std::string out = kHeaderPrefix + std::to_string(cfg.parity_anchor & 1) + "\n";
    if (cfg.empty()) return out;
    int min_r = INT_MAX, min_c = INT_MAX, max_r = INT_MIN, max_c = INT_MIN;
    for (const auto& [c, col] : cfg.stones) {
        min_r = std::min(min_r, c.row);
        min_c = std::min(min_c, c.col);
        max_r = std::max(max_r, c.row);
        max_c = std::max(max_c, c.col);
    }
    // Keep the translation vector's coordinate sum even so square colors survive.
    int dr = -min_r;
    int dc = -min_c;
    if (((dr + dc) % 2 + 2) % 2 == 1) ++dc;
    int width = max_c + dc + 1;
    for (int r = min_r; r <= max_r; ++r) {
        std::string line(static_cast<std::size_t>(width), '.');
        for (int c = min_c; c <= max_c; ++c) {
            auto it = cfg.stones.find({r, c});
            if (it != cfg.stones.end()) line[static_cast<std::size_t>(c + dc)] = color_char(it->second);
        }
        out += line + "\n";
    }
    return out;
}

Plan parse_plan(const std::string& text) {
    Plan plan;
    std::vector<std::string> lines = split_lines(text);
    bool in_preamble = true;
    std::string meta;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string& line = lines[i];
        int lineno = static_cast<int>(i) + 1;
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        if (line[start] == '#') {
            if (in_preamble) {
                std::string body = line.substr(start + 1);
                if (!body.empty() && body[0] == ' ') body.erase(0, 1);
                if (!meta.empty()) meta += "\n";
                meta += body;
            }
            continue;
        }
        in_preamble = false;
        char ch = line[start];
        if (ch != 'W' && ch != 'B')
            throw ParseError(lineno, static_cast<int>(start) + 1,
                             std::string("expected mover W or B, found '") + ch + "'");
        std::istringstream in(line.substr(start + 1));
        int v[4];
        for (int k = 0; k < 4; ++k) {
            if (!(in >> v[k]))
                throw ParseError(lineno, static_cast<int>(start) + 1, "expected four integer coordinates");
        }
        std::string rest;
        if (in >> rest) {
            std::size_t pos = line.find(rest, start + 1);
            throw ParseError(lineno, static_cast<int>(pos) + 1, "unexpected token '" + rest + "'");
        }
        plan.moves.push_back({color_from_char(ch), {v[0], v[1]}, {v[2], v[3]}});
    }
    plan.metadata = meta;
    if (!plan.moves.empty()) plan.first_mover = plan.moves.front().mover;
    return plan;
}

std::string format_plan(const Plan& plan) {
    std::string out;
    if (!plan.metadata.empty()) {
        std::istringstream in(plan.metadata);
        std::string line;
        while (std::getline(in, line)) out += "# " + line + "\n";
    }
    for (const Move& m : plan.moves) {
        out += color_char(m.mover);
        out += " " + std::to_string(m.from.row) + " " + std::to_string(m.from.col) + " " +
               std::to_string(m.to.row) + " " + std::to_string(m.to.col) + "\n";
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << text;
    if (!out) throw Error("write failed for " + path);
}

}  // namespace clobber
