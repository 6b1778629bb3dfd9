#include "clobber/gadget.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdlib>
#include <set>
#include <sstream>

namespace clobber {

namespace {

bool unit_step(Vertex a, Vertex b) { return std::abs(a.x - b.x) + std::abs(a.y - b.y) == 1; }

std::vector<Vertex> parse_vertices(const std::string& text) {
    std::vector<Vertex> out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream ls(line);
        long long x = 0, y = 0;
        if (!(ls >> x >> y))
            throw ParseError(lineno, static_cast<int>(start) + 1, "expected two integers `x y`");
        std::string rest;
        if (ls >> rest) {
            std::size_t pos = line.find(rest, start);
            throw ParseError(lineno, static_cast<int>(pos) + 1, "unexpected token '" + rest + "'");
        }
        if (x < INT_MIN / 4 || x > INT_MAX / 4 || y < INT_MIN / 4 || y > INT_MAX / 4)
            throw ParseError(lineno, static_cast<int>(start) + 1, "coordinate out of range");
        out.push_back({static_cast<int>(x), static_cast<int>(y)});
    }
    return out;
}

Anchor require_anchor(const std::optional<Anchor>& a) {
    if (!a) throw AnchorMissing("the top-right vertex has no left neighbor, so no gadget is built");
    return *a;
}

}  // namespace

bool GridGraph::contains(Vertex v) const { return std::binary_search(vertices.begin(), vertices.end(), v); }

GridGraph make_graph(std::vector<Vertex> vertices, std::size_t* duplicates) {
    std::sort(vertices.begin(), vertices.end());
    std::size_t before = vertices.size();
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    if (duplicates) *duplicates = before - vertices.size();
    return GridGraph{std::move(vertices)};
}

std::optional<Anchor> pick_anchor(const GridGraph& g) {
    if (g.vertices.empty()) throw EmptyGraph("graph has no vertices");
    Vertex v = g.vertices.front();
    for (Vertex u : g.vertices)
        if (u.y > v.y || (u.y == v.y && u.x > v.x)) v = u;
    Vertex w{v.x - 1, v.y};
    if (!g.contains(w)) return std::nullopt;
    return Anchor{v, w};
}

GadgetFrame gadget_frame(const GridGraph& g) {
    Anchor a = require_anchor(pick_anchor(g));
    int n = static_cast<int>(g.size());
    int min_x = INT_MAX;
    for (Vertex u : g.vertices) min_x = std::min(min_x, u.x);
    GadgetFrame f;
    f.row_base = a.v.y + n + 1;
    f.col_shift = -min_x;
    // Raw cell is (-y, x); keep the translation's coordinate sum even.
    if (((f.row_base + f.col_shift) % 2 + 2) % 2 == 1) ++f.col_shift;
    return f;
}

Configuration build_gadget(const GridGraph& g) {
    Anchor a = require_anchor(pick_anchor(g));
    GadgetFrame f = gadget_frame(g);
    int n = static_cast<int>(g.size());
    Configuration cfg;
    for (Vertex u : g.vertices) cfg.stones[f.cell(u)] = Color::Black;
    cfg.stones[f.cell({a.w.x, a.w.y + 1})] = Color::White;  // bomb
    for (int k = 1; k <= n; ++k) cfg.stones[f.cell({a.v.x, a.v.y + k})] = Color::White;  // fuse
    cfg.stones[f.cell({a.v.x, a.v.y + n + 1})] = Color::Black;  // fire
    return cfg;
}

bool is_hamiltonian_circuit(const GridGraph& g, const Circuit& c) {
    if (c.size() != g.size() || c.size() < 4) return false;
    std::set<Vertex> seen;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!g.contains(c[i]) || !seen.insert(c[i]).second) return false;
        if (!unit_step(c[i], c[(i + 1) % c.size()])) return false;
    }
    return true;
}

Plan circuit_to_plan(const GridGraph& g, const Circuit& c) {
    Anchor a = require_anchor(pick_anchor(g));
    if (!is_hamiltonian_circuit(g, c)) throw InvalidCircuit("not a Hamiltonian circuit of the graph");
    std::size_t n = c.size();
    std::size_t iw = static_cast<std::size_t>(std::find(c.begin(), c.end(), a.w) - c.begin());
    bool forward = c[(iw + n - 1) % n] == a.v;
    bool backward = c[(iw + 1) % n] == a.v;
    if (!forward && !backward) throw InvalidCircuit("circuit does not use the edge between v and w");
    // Walk from w away from v so the walk ends on v.
    std::vector<Vertex> walk;
    for (std::size_t k = 0; k < n; ++k) walk.push_back(forward ? c[(iw + k) % n] : c[(iw + n - k) % n]);

    GadgetFrame f = gadget_frame(g);
    Plan plan;
    plan.first_mover = Color::White;
    plan.metadata = "circuit_to_plan n=" + std::to_string(n);
    int ni = static_cast<int>(n);
    Coord bomb = f.cell({a.w.x, a.w.y + 1});
    Coord fire = f.cell({a.v.x, a.v.y + ni + 1});
    for (std::size_t k = 0; k < n; ++k) {
        Coord next = f.cell(walk[k]);
        plan.moves.push_back({Color::White, bomb, next});
        bomb = next;
        Coord below{fire.row + 1, fire.col};
        plan.moves.push_back({Color::Black, fire, below});
        fire = below;
    }
    plan.moves.push_back({Color::White, bomb, fire});
    return plan;
}

Circuit plan_to_circuit(const GridGraph& g, const Plan& p) {
    Anchor a = require_anchor(pick_anchor(g));
    Configuration cfg = build_gadget(g);
    Configuration end;
    try {
        end = replay(cfg, p).first;
    } catch (const ReplayError& e) {
        throw NotAOneReduction(std::string("plan does not replay: ") + e.what());
    }
    if (end.size() != 1)
        throw NotAOneReduction("plan leaves " + std::to_string(end.size()) + " stones, not 1");
    GadgetFrame f = gadget_frame(g);
    Coord bomb = f.cell({a.w.x, a.w.y + 1});
    Circuit out;
    for (const Move& m : p.moves) {
        if (m.from == bomb) {
            bomb = m.to;
            Vertex u = f.vertex(bomb);
            if (g.contains(u))
                out.push_back(u);
            else if (!(u.x == a.v.x && u.y > a.v.y))
                throw BombLeftGraph("bomb moved to (" + std::to_string(u.x) + "," + std::to_string(u.y) +
                                    "), which is not a vertex");
        } else if (m.to == bomb) {
            break;
        }
    }
    if (!is_hamiltonian_circuit(g, out)) throw InvalidCircuit("bomb trajectory is not a Hamiltonian circuit");
    return out;
}

std::optional<Circuit> ham_brute(const GridGraph& g) {
    std::size_t n = g.size();
    if (n > kHamBruteLimit)
        throw LimitExceeded(std::to_string(n) + " vertices exceed the brute-force limit of " +
                            std::to_string(kHamBruteLimit));
    if (n < 4 || n % 2 == 1) return std::nullopt;
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (unit_step(g.vertices[i], g.vertices[j])) adj[i].push_back(j);
    std::vector<std::size_t> path{0};
    std::vector<bool> used(n, false);
    used[0] = true;
    auto extend = [&](auto&& self) -> bool {
        if (path.size() == n) return unit_step(g.vertices[path.back()], g.vertices[0]);
        for (std::size_t j : adj[path.back()]) {
            if (used[j]) continue;
            used[j] = true;
            path.push_back(j);
            if (self(self)) return true;
            path.pop_back();
            used[j] = false;
        }
        return false;
    };
    if (!extend(extend)) return std::nullopt;
    Circuit c;
    for (std::size_t i : path) c.push_back(g.vertices[i]);
    return c;
}

GridGraph parse_graph(const std::string& text, std::vector<std::string>* warnings) {
    std::size_t dups = 0;
    GridGraph g = make_graph(parse_vertices(text), &dups);
    if (dups && warnings) warnings->push_back("dropped " + std::to_string(dups) + " duplicate vertices");
    return g;
}

Circuit parse_circuit(const std::string& text) { return parse_vertices(text); }

std::string format_graph(const GridGraph& g) { return format_circuit(g.vertices); }

std::string format_circuit(const Circuit& c) {
    std::string out;
    for (Vertex v : c) out += std::to_string(v.x) + " " + std::to_string(v.y) + "\n";
    return out;
}

std::vector<GridGraph> connected_graphs_in_window(int window, std::size_t max_vertices) {
    std::set<std::vector<Vertex>> found;
    int cells = window * window;
    for (long mask = 1; mask < (1L << cells); ++mask) {
        if (static_cast<std::size_t>(std::popcount(static_cast<unsigned long>(mask))) > max_vertices) continue;
        std::vector<Vertex> vs;
        for (int i = 0; i < cells; ++i)
            if (mask >> i & 1) vs.push_back({i % window, i / window});
        std::vector<bool> seen(vs.size(), false);
        std::vector<std::size_t> stack{0};
        seen[0] = true;
        std::size_t reached = 1;
        while (!stack.empty()) {
            std::size_t i = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < vs.size(); ++j)
                if (!seen[j] && unit_step(vs[i], vs[j])) {
                    seen[j] = true;
                    ++reached;
                    stack.push_back(j);
                }
        }
        if (reached != vs.size()) continue;
        int mx = INT_MAX, my = INT_MAX;
        for (Vertex v : vs) {
            mx = std::min(mx, v.x);
            my = std::min(my, v.y);
        }
        for (Vertex& v : vs) v = {v.x - mx, v.y - my};
        std::sort(vs.begin(), vs.end());
        found.insert(vs);
    }
    std::vector<GridGraph> out;
    for (const auto& vs : found) out.push_back(GridGraph{vs});
    std::stable_sort(out.begin(), out.end(),
                     [](const GridGraph& a, const GridGraph& b) { return a.size() < b.size(); });
    return out;
}

}  // namespace clobber
