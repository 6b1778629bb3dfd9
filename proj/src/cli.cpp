#include "clobber/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <optional>
#include <ostream>

#include "clobber/gadget.hpp"
#include "clobber/io.hpp"
#include "clobber/linear.hpp"
#include "clobber/rect.hpp"
#include "clobber/solver.hpp"
#include "clobber/suite.hpp"

namespace clobber {

namespace {

struct Options {
    int jobs = 1;
    std::uint64_t seed = 0;
    std::optional<int> limit;

    int n = 0;
    int m = 0;
    std::string first = "W";
    std::string mode;
    std::string file;
    std::string second_file;
    std::string out;
    std::string suite;
    bool alternating = false;
    bool stats = false;
};

int resolve_limit(const Options& o) {
    if (o.limit) return *o.limit;
    if (const char* env = std::getenv("CLOBBER_LIMIT")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v <= 0 || v > 64)
            throw CLI::ValidationError("CLOBBER_LIMIT", std::string("expected an integer in 1..64, got '") + env + "'");
        return static_cast<int>(v);
    }
    return kDefaultStoneLimit;
}

void emit(std::ostream& out, const std::string& path, const std::string& text) {
    if (path.empty())
        out << text;
    else
        write_file(path, text);
}

std::string plan_with_count(const Plan& p, std::size_t final_stones) {
    return format_plan(p) + "# final stones: " + std::to_string(final_stones) + "\n";
}

int cmd_reduce_line(const Options& o, std::ostream& out) {
    Color first = color_from_char(o.first.at(0));
    Plan p = reduce_line(o.n, first);
    auto [end, rep] = replay(psi_line(o.n), p, true);
    emit(out, o.out, plan_with_count(p, end.size()));
    if (!o.out.empty()) out << "final stones: " << end.size() << "\n";
    return kExitOk;
}

int cmd_reduce_rect(const Options& o, std::ostream& out) {
    Plan p = reduce_rect(o.n, o.m);
    auto [end, rep] = replay(checkerboard(o.n, o.m), p, true);
    emit(out, o.out, plan_with_count(p, end.size()));
    if (!o.out.empty()) out << "final stones: " << end.size() << "\n";
    return kExitOk;
}

int cmd_minimize(const Options& o, std::ostream& out, std::ostream& err) {
    Configuration cfg = parse_board(read_file(o.file));
    Mode mode = parse_mode(o.mode);
    SolveResult r = min_stones(cfg, mode, {resolve_limit(o), o.jobs});
    out << "min stones: " << r.k << "\n";
    out << "mode: " << mode_name(mode) << "\n";
    if (!o.out.empty()) write_file(o.out, plan_with_count(r.witness, static_cast<std::size_t>(r.k)));
    if (o.stats) err << "nodes: " << r.stats.nodes << "\nmemo entries: " << r.stats.memo_entries << "\n";
    return kExitOk;
}

int cmd_delta(const Options& o, std::ostream& out) {
    Configuration cfg = parse_board(read_file(o.file));
    int d = delta(cfg);
    out << "stones: " << cfg.size() << "\nclashing: " << clashing_count(cfg) << "\ndelta: " << d
        << "\nclass: " << d % 3 << "\n";
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    Configuration cfg = parse_board(read_file(o.file));
    Plan p = parse_plan(read_file(o.second_file));
    try {
        auto [end, rep] = replay(cfg, p, o.alternating);
        out << "legal: yes\n"
            << "alternating: " << (rep.alternating ? "yes" : "no") << "\n"
            << "moves: " << rep.moves_applied << "\n"
            << "initial stones: " << rep.initial_stones << "\n"
            << "final stones: " << rep.final_stones << "\n"
            << "final delta: " << rep.final_delta << "\n";
        return kExitOk;
    } catch (const ReplayError& e) {
        out << "verification failed at move index " << e.index << ": " << e.what() << "\n";
        return kExitNo;
    }
}

GridGraph load_graph(const std::string& path, std::ostream& err) {
    std::vector<std::string> warnings;
    GridGraph g = parse_graph(read_file(path), &warnings);
    for (const std::string& w : warnings) err << "warning: " << w << "\n";
    return g;
}

int cmd_gadget(const Options& o, std::ostream& out, std::ostream& err) {
    GridGraph g = load_graph(o.file, err);
    if (!pick_anchor(g)) {
        out << "not Hamiltonian: the top-right vertex has no left neighbor\n";
        return kExitNo;
    }
    emit(out, o.out, format_board(build_gadget(g)));
    return kExitOk;
}

int cmd_ham2plan(const Options& o, std::ostream& out, std::ostream& err) {
    GridGraph g = load_graph(o.file, err);
    Circuit c = parse_circuit(read_file(o.second_file));
    Plan p = circuit_to_plan(g, c);
    auto [end, rep] = replay(build_gadget(g), p, true);
    emit(out, o.out, plan_with_count(p, end.size()));
    return kExitOk;
}

int cmd_plan2ham(const Options& o, std::ostream& out, std::ostream& err) {
    GridGraph g = load_graph(o.file, err);
    Plan p = parse_plan(read_file(o.second_file));
    emit(out, o.out, format_circuit(plan_to_circuit(g, p)));
    return kExitOk;
}

int cmd_suite(const Options& o, std::ostream& out) {
    SuiteReport rep = run_suite(o.suite, {o.seed, o.jobs, resolve_limit(o)});
    out << rep.text();
    return rep.passed() ? kExitOk : kExitNo;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Solitaire Clobber reductions, exact search and hardness gadgets", "clobber"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--jobs", o.jobs, "solver worker threads")->check(CLI::Range(1, 256));
    app.add_option("--seed", o.seed, "seed for randomized suites");
    app.add_option("--limit", o.limit, "exact-search stone limit (fallback: CLOBBER_LIMIT, default 16)")
        ->check(CLI::Range(1, 64));

    auto* line = app.add_subcommand("reduce-line", "alternating reduction of the 1xN checkerboard line");
    line->add_option("N", o.n)->required();
    line->add_option("--first", o.first, "first mover")->check(CLI::IsMember({"W", "B"}));
    line->add_option("--out", o.out, "write the plan here");

    auto* rect = app.add_subcommand("reduce-rect", "alternating reduction of the NxM checkerboard");
    rect->add_option("N", o.n)->required();
    rect->add_option("M", o.m)->required();
    rect->add_option("--out", o.out, "write the plan here");

    auto* mini = app.add_subcommand("minimize", "exact minimum stone count of a board");
    mini->add_option("FILE", o.file)->required();
    mini->add_option("--mode", o.mode)->required()->check(CLI::IsMember({"wfirst", "bfirst", "either", "free"}));
    mini->add_option("--witness", o.out, "write the witness plan here");
    mini->add_flag("--stats", o.stats, "print search statistics to stderr");

    auto* del = app.add_subcommand("delta", "stone count plus clashing count");
    del->add_option("FILE", o.file)->required();

    auto* ver = app.add_subcommand("verify-plan", "replay a plan on a board");
    ver->add_option("BOARD", o.file)->required();
    ver->add_option("PLAN", o.second_file)->required();
    ver->add_flag("--alternating", o.alternating, "require strict color alternation");

    auto* gad = app.add_subcommand("gadget", "build the Clobber board for a grid graph");
    gad->add_option("GRAPH", o.file)->required();
    gad->add_option("--out", o.out, "write the board here");

    auto* h2p = app.add_subcommand("ham2plan", "turn a Hamiltonian circuit into a 1-reduction plan");
    h2p->add_option("GRAPH", o.file)->required();
    h2p->add_option("CIRCUIT", o.second_file)->required();
    h2p->add_option("--out", o.out, "write the plan here");

    auto* p2h = app.add_subcommand("plan2ham", "extract a Hamiltonian circuit from a 1-reduction plan");
    p2h->add_option("GRAPH", o.file)->required();
    p2h->add_option("PLAN", o.second_file)->required();
    p2h->add_option("--out", o.out, "write the circuit here");

    auto* sui = app.add_subcommand("suite", "run a reproduction suite and print a pass/fail table");
    sui->add_option("NAME", o.suite)->required()->check(CLI::IsMember({"table1", "thm3", "thm4", "npc"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    try {
        if (*line) return cmd_reduce_line(o, out);
        if (*rect) return cmd_reduce_rect(o, out);
        if (*mini) return cmd_minimize(o, out, err);
        if (*del) return cmd_delta(o, out);
        if (*ver) return cmd_verify(o, out);
        if (*gad) return cmd_gadget(o, out, err);
        if (*h2p) return cmd_ham2plan(o, out, err);
        if (*p2h) return cmd_plan2ham(o, out, err);
        if (*sui) return cmd_suite(o, out);
    } catch (const InvalidCircuit& e) {
        err << "invalid circuit: " << e.what() << "\n";
        return kExitNo;
    } catch (const NotAOneReduction& e) {
        err << "not a 1-reduction: " << e.what() << "\n";
        return kExitNo;
    } catch (const BombLeftGraph& e) {
        err << "bomb left the graph: " << e.what() << "\n";
        return kExitNo;
    } catch (const AnchorMissing& e) {
        err << "not Hamiltonian: " << e.what() << "\n";
        return kExitNo;
    } catch (const LimitExceeded& e) {
        err << "limit exceeded: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace clobber
