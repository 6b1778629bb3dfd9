#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "clobber/gadget.hpp"
#include "clobber/io.hpp"
#include "clobber/linear.hpp"
#include "clobber/rect.hpp"
#include "clobber/solver.hpp"
#include "clobber/suite.hpp"

namespace py = pybind11;
using namespace clobber;

namespace {

using Cell = std::pair<int, int>;

Color to_color(const std::string& s) {
    if (s.size() != 1) throw Error("color must be 'W' or 'B', got '" + s + "'");
    return color_from_char(s[0]);
}

std::string from_color(Color c) { return std::string(1, color_char(c)); }

Cell to_cell(Coord c) { return {c.row, c.col}; }
Coord from_cell(const Cell& c) { return {c.first, c.second}; }

GridGraph to_graph(const std::vector<Cell>& vs) {
    std::vector<Vertex> out;
    for (const auto& [x, y] : vs) out.push_back({x, y});
    return make_graph(std::move(out));
}

std::vector<Cell> from_vertices(const std::vector<Vertex>& vs) {
    std::vector<Cell> out;
    for (Vertex v : vs) out.push_back({v.x, v.y});
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Solitaire Clobber engine: reductions, exact search and hardness gadgets";
    py::register_exception<Error>(m, "ClobberError", PyExc_ValueError);

    py::class_<Configuration>(m, "Configuration")
        .def(py::init<>())
        .def(py::init([](const std::map<Cell, std::string>& stones, int anchor) {
                 Configuration cfg;
                 cfg.parity_anchor = anchor;
                 for (const auto& [c, col] : stones) cfg.stones[from_cell(c)] = to_color(col);
                 return cfg;
             }),
             py::arg("stones"), py::arg("parity_anchor") = 0)
        .def_property_readonly("stones",
                               [](const Configuration& cfg) {
                                   std::map<Cell, std::string> out;
                                   for (const auto& [c, col] : cfg.stones) out[to_cell(c)] = from_color(col);
                                   return out;
                               })
        .def_readwrite("parity_anchor", &Configuration::parity_anchor)
        .def("__len__", &Configuration::size)
        .def("__eq__", [](const Configuration& a, const Configuration& b) { return a == b; })
        .def("__repr__", [](const Configuration& cfg) { return format_board(cfg); });

    py::class_<Move>(m, "Move")
        .def(py::init([](const std::string& mover, const Cell& from, const Cell& to) {
            return Move{to_color(mover), from_cell(from), from_cell(to)};
        }))
        .def_property_readonly("mover", [](const Move& mv) { return from_color(mv.mover); })
        .def_property_readonly("source", [](const Move& mv) { return to_cell(mv.from); })
        .def_property_readonly("target", [](const Move& mv) { return to_cell(mv.to); })
        .def("__eq__", [](const Move& a, const Move& b) { return a == b; })
        .def("__repr__", [](const Move& mv) {
            Plan p;
            p.moves = {mv};
            std::string s = format_plan(p);
            return "Move(" + s.substr(0, s.size() - 1) + ")";
        });

    py::class_<Plan>(m, "Plan")
        .def(py::init<>())
        .def_property_readonly("first_mover", [](const Plan& p) { return from_color(p.first_mover); })
        .def_readonly("moves", &Plan::moves)
        .def_readonly("metadata", &Plan::metadata)
        .def("__len__", [](const Plan& p) { return p.moves.size(); });

    m.def("checkerboard", &checkerboard, py::arg("rows"), py::arg("cols"));
    m.def("psi_line", &psi_line, py::arg("n"));
    m.def("delta", &delta);
    m.def("delta_class", &delta_class);
    m.def("legal_moves", [](const Configuration& cfg, const std::string& mover) {
        return legal_moves(cfg, to_color(mover));
    });
    m.def("apply_move", &apply_move);
    m.def("connected_components", &connected_components);
    m.def("parse_board", &parse_board);
    m.def("format_board", &format_board);
    m.def("parse_plan", &parse_plan);
    m.def("format_plan", &format_plan);
    m.def(
        "replay",
        [](const Configuration& cfg, const Plan& plan, bool alternating) {
            auto [end, rep] = replay(cfg, plan, alternating);
            py::dict d;
            d["alternating"] = rep.alternating;
            d["moves"] = rep.moves_applied;
            d["initial_stones"] = rep.initial_stones;
            d["final_stones"] = rep.final_stones;
            d["final_delta"] = rep.final_delta;
            return py::make_tuple(end, d);
        },
        py::arg("cfg"), py::arg("plan"), py::arg("alternating") = false);

    m.def("line_bound", &line_bound);
    m.def(
        "reduce_line", [](int n, const std::string& first) { return reduce_line(n, to_color(first)); },
        py::arg("n"), py::arg("first") = "W");

    m.def("classify_case", [](int n, int mm) { return std::string(case_name(classify_case(n, mm))); });
    m.def("reduce_rect", &reduce_rect);

    m.def("lower_bound", &lower_bound);
    m.def(
        "min_stones",
        [](const Configuration& cfg, const std::string& mode, int limit, int jobs) {
            SolveResult r = min_stones(cfg, parse_mode(mode), {limit, jobs});
            return py::make_tuple(r.k, r.witness);
        },
        py::arg("cfg"), py::arg("mode") = "either", py::arg("limit") = kDefaultStoneLimit, py::arg("jobs") = 1);
    m.def(
        "is_one_reducible",
        [](const Configuration& cfg, int limit, int jobs) {
            OneReducibility r = is_one_reducible(cfg, {limit, jobs});
            return py::make_tuple(r.reducible, r.witness);
        },
        py::arg("cfg"), py::arg("limit") = kDefaultStoneLimit, py::arg("jobs") = 1);

    m.def("build_gadget", [](const std::vector<Cell>& vs) { return build_gadget(to_graph(vs)); });
    m.def("ham_brute", [](const std::vector<Cell>& vs) -> std::optional<std::vector<Cell>> {
        auto c = ham_brute(to_graph(vs));
        if (!c) return std::nullopt;
        return from_vertices(*c);
    });
    m.def("circuit_to_plan", [](const std::vector<Cell>& vs, const std::vector<Cell>& circuit) {
        Circuit c;
        for (const auto& [x, y] : circuit) c.push_back({x, y});
        return circuit_to_plan(to_graph(vs), c);
    });
    m.def("plan_to_circuit", [](const std::vector<Cell>& vs, const Plan& p) {
        return from_vertices(plan_to_circuit(to_graph(vs), p));
    });

    m.def(
        "run_suite",
        [](const std::string& name, std::uint64_t seed, int jobs) {
            SuiteReport rep = run_suite(name, {seed, jobs, kDefaultStoneLimit});
            return py::make_tuple(rep.passed(), rep.text());
        },
        py::arg("name"), py::arg("seed") = 0, py::arg("jobs") = 1);
}
