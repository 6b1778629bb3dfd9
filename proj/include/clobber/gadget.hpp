#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "clobber/board.hpp"

namespace clobber {

// Graph coordinates: y grows upward.
struct Vertex {
    int x = 0;
    int y = 0;
    auto operator<=>(const Vertex&) const = default;
};

struct GridGraph {
    std::vector<Vertex> vertices;  // sorted, unique

    std::size_t size() const { return vertices.size(); }
    bool contains(Vertex v) const;
};

// Sorts and deduplicates; reports how many duplicates were dropped.
GridGraph make_graph(std::vector<Vertex> vertices, std::size_t* duplicates = nullptr);

struct Anchor {
    Vertex v;  // maximum y, then maximum x
    Vertex w;  // left neighbor of v
};

using Circuit = std::vector<Vertex>;

// Empty optional when v has no left neighbor: the graph cannot be Hamiltonian.
std::optional<Anchor> pick_anchor(const GridGraph& g);

// Maps graph vertices to board cells so that the fire sits on row 0.
struct GadgetFrame {
    int row_base = 0;
    int col_shift = 0;

    Coord cell(Vertex v) const { return {row_base - v.y, v.x + col_shift}; }
    Vertex vertex(Coord c) const { return {c.col - col_shift, row_base - c.row}; }
};

GadgetFrame gadget_frame(const GridGraph& g);
Configuration build_gadget(const GridGraph& g);

bool is_hamiltonian_circuit(const GridGraph& g, const Circuit& c);
Plan circuit_to_plan(const GridGraph& g, const Circuit& c);
Circuit plan_to_circuit(const GridGraph& g, const Plan& p);

constexpr std::size_t kHamBruteLimit = 12;
std::optional<Circuit> ham_brute(const GridGraph& g);

GridGraph parse_graph(const std::string& text, std::vector<std::string>* warnings = nullptr);
Circuit parse_circuit(const std::string& text);
std::string format_graph(const GridGraph& g);
std::string format_circuit(const Circuit& c);

// Connected vertex sets inside a window x window square, up to translation.
std::vector<GridGraph> connected_graphs_in_window(int window, std::size_t max_vertices);

}  // namespace clobber
