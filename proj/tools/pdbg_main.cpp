#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "pdbg/io.hpp"
#include "pdbg/oracle.hpp"
#include "pdbg/poly.hpp"
#include "pdbg/reductions.hpp"
#include "pdbg/solver.hpp"

// Exit codes: 0 = yes/valid, 1 = no/invalid, 2 = input error,
// 3 = resource cap exceeded.

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitInputError = 2;
constexpr int kExitResource = 3;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open '" + path + "' for writing");
    out << content;
}

std::size_t default_max_states() {
    if (const char* env = std::getenv("PDBG_MAX_STATES")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return pdbg::solver::SolverOptions{}.max_states;
}

pdbg::io::Instance load_instance(const std::string& path) {
    pdbg::io::Instance inst = pdbg::io::parse_instance_text(read_input(path));
    return inst;
}

int cmd_validate(const std::string& path) {
    pdbg::io::Instance inst = load_instance(path);
    pdbg::ValidationReport report = inst.graph.validate();
    if (report.ok()) {
        std::cout << "VALID\n";
        return kExitYes;
    }
    for (const auto& v : report.violations) std::cout << v << "\n";
    return kExitNo;
}

int cmd_solve(const std::string& path, bool covering, const std::string& engine,
              std::size_t max_states, const std::string& witness_out) {
    pdbg::io::Instance inst = load_instance(path);
    pdbg::ValidationReport report = inst.graph.validate();
    if (!report.ok()) {
        throw std::invalid_argument("invalid instance: " + report.violations.front());
    }

    std::string resolved = engine;
    if (resolved == "auto") {
        if (inst.graph.alphabet().size() == 1) {
            resolved = "unary";
        } else if (inst.graph.order() == 0) {
            resolved = "k0";
        } else {
            resolved = "exact";
        }
    } else if (resolved == "poly") {
        if (inst.graph.alphabet().size() == 1) {
            resolved = "unary";
        } else if (inst.graph.order() == 0) {
            resolved = "k0";
        } else {
            throw std::invalid_argument("poly engine requires |alphabet| = 1 or k = 0");
        }
    }
    if (!witness_out.empty() && resolved != "exact") {
        throw std::invalid_argument("witness output requires the exact engine");
    }

    bool yes = false;
    if (resolved == "unary") {
        yes = pdbg::poly::solve_unary_alphabet(inst.graph, inst.d, covering);
    } else if (resolved == "k0") {
        yes = pdbg::poly::solve_k0(inst.graph, inst.d, covering);
    } else {
        pdbg::solver::SolverOptions opts;
        opts.max_states = max_states;
        auto witness = covering
                           ? pdbg::solver::exists_covering_sound_cycle(inst.graph, inst.d, opts)
                           : pdbg::solver::exists_sound_cycle(inst.graph, inst.d, opts);
        yes = witness.has_value();
        if (yes && !witness_out.empty()) {
            if (!pdbg::is_sound(inst.graph, *witness, inst.d) ||
                (covering && !pdbg::is_covering(inst.graph, *witness))) {
                throw std::logic_error("solver witness failed its own check");
            }
            write_output(witness_out,
                         pdbg::io::serialize_cycle(inst.graph, *witness, covering));
        }
    }
    std::cout << "SOUND-CYCLE: " << (yes ? "yes" : "no") << "\n";
    return yes ? kExitYes : kExitNo;
}

int cmd_reduce(const std::string& path, const std::string& stage, int lift, bool binarize,
               const std::string& out, const std::string& trace_out) {
    if (lift > 0 && binarize) {
        throw std::invalid_argument("--lift and --binarize are mutually exclusive");
    }
    std::optional<pdbg::io::Instance> inst;
    std::optional<pdbg::reductions::ReductionTrace> trace;

    if (stage == "promise") {
        if (lift > 0 || binarize) {
            throw std::invalid_argument("--lift/--binarize need a pdbg-producing stage");
        }
        pdbg::UndirectedGraph g = pdbg::io::parse_ugraph_text(read_input(path));
        pdbg::reductions::DoubledGraph doubled = pdbg::reductions::hc_to_promise(g);
        write_output(out, pdbg::io::serialize_ugraph(doubled.graph));
        if (!trace_out.empty()) {
            throw std::invalid_argument("the promise stage emits no trace file");
        }
        return kExitYes;
    }
    if (stage == "pdbg" || stage == "pipeline") {
        pdbg::UndirectedGraph g = pdbg::io::parse_ugraph_text(read_input(path));
        if (stage == "pipeline") g = pdbg::reductions::hc_to_promise(g).graph;
        pdbg::reductions::ReducedInstance red = pdbg::reductions::promise_to_pdbg(g);
        inst = pdbg::io::Instance{std::move(red.graph), red.d};
        trace = std::move(red.trace);
    } else if (stage.empty()) {
        if (lift <= 0 && !binarize) {
            throw std::invalid_argument("nothing to do: give --stage, --lift or --binarize");
        }
        inst = load_instance(path);
    } else {
        throw std::invalid_argument("unknown stage '" + stage + "'");
    }

    if (lift > 0) {
        pdbg::reductions::ReducedInstance red =
            pdbg::reductions::lift_k(inst->graph, inst->d, lift);
        inst = pdbg::io::Instance{std::move(red.graph), red.d};
        trace = std::move(red.trace);
    } else if (binarize) {
        pdbg::reductions::ReducedInstance red =
            pdbg::reductions::binarize(inst->graph, inst->d);
        inst = pdbg::io::Instance{std::move(red.graph), red.d};
        trace = std::move(red.trace);
    }

    write_output(out, pdbg::io::serialize_instance(inst->graph, inst->d));
    if (!trace_out.empty()) {
        if (!trace) throw std::invalid_argument("no trace available for this invocation");
        write_output(trace_out, pdbg::io::serialize_trace(*trace));
    }
    return kExitYes;
}

int cmd_witness(const std::string& graph_path, const std::string& hc_path,
                const std::string& stage, const std::string& out) {
    pdbg::UndirectedGraph g = pdbg::io::parse_ugraph_text(read_input(graph_path));
    std::istringstream hc_in(read_input(hc_path));
    pdbg::HamCycle c = pdbg::io::parse_hamcycle(hc_in);

    pdbg::UndirectedGraph base = g;
    pdbg::HamCycle cycle = c;
    if (stage == "pipeline") {
        base = pdbg::reductions::hc_to_promise(g).graph;
        cycle = pdbg::reductions::promote_hc_witness(g, c);
    } else if (stage != "pdbg") {
        throw std::invalid_argument("unknown stage '" + stage + "'");
    }

    pdbg::reductions::ReducedInstance red = pdbg::reductions::promise_to_pdbg(base);
    pdbg::CycleWitness w = pdbg::reductions::build_witness_cycle(base, cycle);
    if (!pdbg::is_sound(red.graph, w, red.d) || !pdbg::is_covering(red.graph, w)) {
        throw std::logic_error("constructed witness failed its self-check");
    }
    write_output(out, pdbg::io::serialize_cycle(red.graph, w, /*covering=*/true));
    return kExitYes;
}

int cmd_verify(const std::string& instance_path, const std::string& cycle_path, long d_override,
               bool covering_flag) {
    pdbg::io::Instance inst = load_instance(instance_path);
    pdbg::ValidationReport report = inst.graph.validate();
    if (!report.ok()) {
        throw std::invalid_argument("invalid instance: " + report.violations.front());
    }
    std::istringstream cyc_in(read_input(cycle_path));
    pdbg::io::CycleFile cf = pdbg::io::parse_cycle(cyc_in, inst.graph.alphabet());
    long d = d_override >= 0 ? d_override : cf.witness.shift;
    cf.witness.shift = d;

    // Definition-level audit only: spell the walk and match; no solver.
    try {
        if (!pdbg::is_sound(inst.graph, cf.witness, d)) {
            std::cout << "INVALID: cycle is not sound at d=" << d << "\n";
            return kExitNo;
        }
        if ((covering_flag || cf.covering) && !pdbg::is_covering(inst.graph, cf.witness)) {
            std::cout << "INVALID: cycle does not cover all edges\n";
            return kExitNo;
        }
    } catch (const std::invalid_argument& e) {
        std::cout << "INVALID: " << e.what() << "\n";
        return kExitNo;
    }
    std::cout << "VALID\n";
    return kExitYes;
}

int cmd_export_dot(const std::string& path, const std::string& out) {
    pdbg::io::Instance inst = load_instance(path);
    write_output(out, pdbg::io::to_dot(inst.graph));
    return kExitYes;
}

int cmd_gen(const std::string& family, int n, std::uint64_t seed, int edge_percent,
            const std::string& out) {
    if (family == "random-pdbg") {
        pdbg::io::Instance inst = pdbg::io::make_random_instance(seed);
        write_output(out, pdbg::io::serialize_instance(inst.graph, inst.d));
        return kExitYes;
    }
    pdbg::UndirectedGraph g(0);
    if (family == "k3") {
        g = pdbg::io::make_complete(3);
    } else if (family == "k4") {
        g = pdbg::io::make_complete(4);
    } else if (family == "c4") {
        g = pdbg::io::make_cycle(4);
    } else if (family == "cn") {
        g = pdbg::io::make_cycle(n);
    } else if (family == "pn") {
        g = pdbg::io::make_path(n);
    } else if (family == "p3") {
        g = pdbg::io::make_path(3);
    } else if (family == "bowtie") {
        g = pdbg::io::make_bowtie();
    } else if (family == "k13e") {
        g = pdbg::io::make_star_plus_edge();
    } else if (family == "random") {
        g = pdbg::io::make_random_ugraph(n, seed, edge_percent);
    } else {
        throw std::invalid_argument("unknown family '" + family + "'");
    }
    write_output(out, pdbg::io::serialize_ugraph(g));
    return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"paired de Bruijn sound-cycle toolkit"};
    app.require_subcommand(1);

    // validate
    auto* validate = app.add_subcommand("validate", "check a pdbg instance file");
    std::string validate_path = "-";
    validate->add_option("path", validate_path, "instance file ('-' for stdin)");

    // solve
    auto* solve = app.add_subcommand("solve", "decide sound-cycle existence");
    std::string solve_path = "-";
    bool solve_covering = false;
    std::string solve_engine = "auto";
    std::size_t solve_max_states = default_max_states();
    std::string solve_witness_out;
    solve->add_option("path", solve_path, "instance file ('-' for stdin)");
    solve->add_flag("--covering", solve_covering, "require the cycle to cover every edge");
    solve->add_option("--engine", solve_engine, "exact|poly|auto")
        ->check(CLI::IsMember({"exact", "poly", "auto"}));
    solve->add_option("--max-states", solve_max_states, "state cap for the exact engine");
    solve->add_option("--witness-out", solve_witness_out, "write the witness cycle here");

    // reduce
    auto* reduce = app.add_subcommand("reduce", "run reduction stages");
    std::string reduce_path = "-";
    std::string reduce_stage;
    int reduce_lift = 0;
    bool reduce_binarize = false;
    std::string reduce_out = "-";
    std::string reduce_trace_out;
    reduce->add_option("path", reduce_path, "input file ('-' for stdin)");
    reduce->add_option("--stage", reduce_stage, "promise|pdbg|pipeline (input: ugraph file)")
        ->check(CLI::IsMember({"promise", "pdbg", "pipeline"}));
    reduce->add_option("--lift", reduce_lift, "lift the order-1 result to order k'");
    reduce->add_flag("--binarize", reduce_binarize, "re-encode over the binary alphabet");
    reduce->add_option("-o,--out", reduce_out, "output file ('-' for stdout)");
    reduce->add_option("--trace-out", reduce_trace_out, "write the reduction trace here");

    // witness
    auto* witness = app.add_subcommand("witness", "build the covering witness cycle");
    std::string witness_graph = "-";
    std::string witness_hc;
    std::string witness_stage = "pdbg";
    std::string witness_out = "-";
    witness->add_option("graph", witness_graph, "ugraph file ('-' for stdin)");
    witness->add_option("hamcycle", witness_hc, "hamiltonian cycle file")->required();
    witness->add_option("--stage", witness_stage, "pdbg|pipeline")
        ->check(CLI::IsMember({"pdbg", "pipeline"}));
    witness->add_option("-o,--out", witness_out, "output file ('-' for stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "definition-level witness check");
    std::string verify_instance = "-";
    std::string verify_cycle;
    long verify_d = -1;
    bool verify_covering = false;
    verify->add_option("instance", verify_instance, "instance file ('-' for stdin)");
    verify->add_option("cycle", verify_cycle, "cycle file")->required();
    verify->add_option("--d", verify_d, "override the shift from the cycle file");
    verify->add_flag("--covering", verify_covering, "also require covering");

    // export-dot
    auto* dot = app.add_subcommand("export-dot", "render an instance as DOT");
    std::string dot_path = "-";
    std::string dot_out = "-";
    dot->add_option("path", dot_path, "instance file ('-' for stdin)");
    dot->add_option("-o,--out", dot_out, "output file ('-' for stdout)");

    // gen
    auto* gen = app.add_subcommand("gen", "emit deterministic test instances");
    std::string gen_family;
    int gen_n = 5;
    std::uint64_t gen_seed = 1;
    int gen_edge_percent = 40;
    std::string gen_out = "-";
    gen->add_option("--family", gen_family,
                    "k3|k4|c4|cn|pn|p3|bowtie|k13e|random|random-pdbg")
        ->required();
    gen->add_option("--n", gen_n, "vertex count for cn/pn/random");
    gen->add_option("--seed", gen_seed, "random seed");
    gen->add_option("--edge-percent", gen_edge_percent, "edge probability for random");
    gen->add_option("-o,--out", gen_out, "output file ('-' for stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInputError;
    }

    try {
        if (validate->parsed()) return cmd_validate(validate_path);
        if (solve->parsed()) {
            return cmd_solve(solve_path, solve_covering, solve_engine, solve_max_states,
                             solve_witness_out);
        }
        if (reduce->parsed()) {
            return cmd_reduce(reduce_path, reduce_stage, reduce_lift, reduce_binarize,
                              reduce_out, reduce_trace_out);
        }
        if (witness->parsed()) {
            return cmd_witness(witness_graph, witness_hc, witness_stage, witness_out);
        }
        if (verify->parsed()) {
            return cmd_verify(verify_instance, verify_cycle, verify_d, verify_covering);
        }
        if (dot->parsed()) return cmd_export_dot(dot_path, dot_out);
        if (gen->parsed()) return cmd_gen(gen_family, gen_n, gen_seed, gen_edge_percent, gen_out);
    } catch (const pdbg::solver::ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
