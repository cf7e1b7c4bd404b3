#include "contractk/cli.hpp"

#include "contractk/bench.hpp"
#include "contractk/errors.hpp"
#include "contractk/fpt.hpp"
#include "contractk/io.hpp"
#include "contractk/oracles.hpp"
#include "contractk/reductions.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace contractk {

namespace {

using Clock = std::chrono::steady_clock;

/// Bad flags or arguments; reported with exit code 2.
class UsageError : public Error {
public:
    using Error::Error;
};

auto elapsed_ms(Clock::time_point start) -> double
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

auto contraction_class(const std::string & problem) -> std::optional<GraphClass>
{
    static const std::map<std::string, GraphClass> table{
        {"split-contraction", GraphClass::Split},
        {"threshold-contraction", GraphClass::Threshold},
        {"clique-contraction", GraphClass::Clique},
    };
    auto it = table.find(problem);
    if (it == table.end())
        return std::nullopt;
    return it->second;
}

auto is_bipartite_problem(const std::string & problem) -> bool
{
    return problem == "rbds" || problem == "osds" || problem == "osdomatic";
}

auto input_text(const Command & cmd) -> std::string
{
    if (cmd.input.empty())
        throw UsageError("an input file is required");
    if (cmd.input == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    return read_file(cmd.input);
}

auto load_graph(const Command & cmd) -> Graph
{
    return parse_graph_text(input_text(cmd));
}

auto load_bipartite(const Command & cmd) -> BipartiteInstance
{
    auto inst = parse_bipartite_text(input_text(cmd));
    if (cmd.t)
        inst.t = *cmd.t;
    return inst;
}

auto require_k(const Command & cmd) -> std::size_t
{
    if (!cmd.k)
        throw UsageError(cmd.verb + " " + cmd.target + " needs --k");
    return *cmd.k;
}

auto cap_of(const Command & cmd) -> std::uint64_t
{
    return cmd.cap ? *cmd.cap : enumeration_cap_from_env();
}

void add_solution(Report & r, const std::optional<ContractionSolution> & s)
{
    r.add("decision", s ? "YES" : "NO");
    if (!s)
        return;
    r.add("contractions", s->edges.size());
    for (auto e : s->edges)
        r.add("e", std::to_string(e.u) + " " + std::to_string(e.v));
}

void add_header(Report & r, const Command & cmd, const Graph & g)
{
    r.add("command", cmd.verb);
    r.add("problem", cmd.target);
    r.add("n", g.order());
    r.add("m", g.size());
}

void add_header(Report & r, const Command & cmd, const BipartiteInstance & inst)
{
    r.add("command", cmd.verb);
    r.add("problem", cmd.target);
    r.add("x", inst.x_count);
    r.add("y", inst.y_count);
    r.add("m", inst.edges.size());
    r.add("t", inst.t);
}

auto global_ids(const std::vector<std::size_t> & local, std::size_t offset) -> std::string
{
    std::string out;
    for (auto v : local)
        out += (out.empty() ? "" : " ") + std::to_string(v + offset);
    return out;
}

auto solve_bipartite(const Command & cmd, Report & r) -> int
{
    auto inst = load_bipartite(cmd);
    add_header(r, cmd, inst);
    inst.validate();
    bool yes = false;
    if (cmd.target == "rbds") {
        auto s = oracle_rbds(inst);
        yes = s.has_value();
        r.add("decision", yes ? "YES" : "NO");
        if (s)
            r.add("dominators", global_ids(*s, inst.x_count));
    } else if (cmd.target == "osds") {
        auto s = oracle_osds(inst);
        yes = s.has_value();
        r.add("decision", yes ? "YES" : "NO");
        if (s)
            r.add("dominators", global_ids(*s, 0));
    } else {
        auto s = oracle_osdomatic(inst);
        yes = s.has_value();
        r.add("decision", yes ? "YES" : "NO");
        if (s)
            for (const auto & block : *s)
                r.add("block", global_ids(block, 0));
    }
    return yes ? kExitYes : kExitNo;
}

auto do_recognize(const Command & cmd, Report & r) -> int
{
    auto g = load_graph(cmd);
    r.add("command", cmd.verb);
    r.add("class", cmd.target);
    r.add("n", g.order());
    r.add("m", g.size());
    auto witness = [&](const std::optional<ForbiddenOccurrence> & w) {
        if (w) {
            r.add("pattern", pattern_name(w->pattern));
            r.add("witness", format_ids(w->vertices));
        }
    };
    if (cmd.target == "split") {
        auto c = is_split(g);
        r.add("decision", c.split ? "YES" : "NO");
        if (c.partition) {
            r.add("clique", format_ids(c.partition->clique));
            r.add("independent", format_ids(c.partition->independent));
        }
        witness(c.witness);
        return c.split ? kExitYes : kExitNo;
    }
    if (cmd.target == "threshold") {
        auto c = is_threshold(g);
        r.add("decision", c.threshold ? "YES" : "NO");
        if (c.ordering) {
            r.add("clique_order", format_ids(c.ordering->clique_order));
            r.add("independent_order", format_ids(c.ordering->independent_order));
        }
        witness(c.witness);
        return c.threshold ? kExitYes : kExitNo;
    }
    if (cmd.target == "clique") {
        bool yes = is_clique(g);
        r.add("decision", yes ? "YES" : "NO");
        if (!yes)
            for (std::size_t i = 0; i < g.order(); ++i)
                for (std::size_t j = i + 1; j < g.order(); ++j)
                    if (!g.adjacent_at(i, j)) {
                        r.add("witness", std::to_string(g.vertex(i)) + " " + std::to_string(g.vertex(j)));
                        return kExitNo;
                    }
        return yes ? kExitYes : kExitNo;
    }
    throw UsageError("unknown class '" + cmd.target + "' (split, threshold, clique)");
}

void add_stats(Report & r, const SolverStats & s)
{
    r.add("branch_nodes", s.branch_nodes);
    r.add("leaves", s.leaves);
    r.add("subsolver_calls", s.subsolver_calls);
    r.add("contraction_sets", s.contraction_sets);
    r.add("partitions", s.partitions);
    r.add("max_leaf_r", s.max_leaf_r);
    r.add("kernel_vertices", s.kernel_vertices);
    r.add("max_tree_nodes", s.max_tree_nodes);
}

auto do_solve(const Command & cmd, Report & r) -> int
{
    if (is_bipartite_problem(cmd.target))
        return solve_bipartite(cmd, r);
    auto target = contraction_class(cmd.target);
    if (!target)
        throw UsageError("unknown problem '" + cmd.target + "'");
    auto k = require_k(cmd);
    auto g = load_graph(cmd);
    add_header(r, cmd, g);
    r.add("k", k);
    SolverStats stats;
    auto s = solve_contraction(g, k, *target, &stats, cap_of(cmd));
    add_solution(r, s);
    add_stats(r, stats);
    return s ? kExitYes : kExitNo;
}

auto do_oracle(const Command & cmd, Report & r) -> int
{
    if (is_bipartite_problem(cmd.target))
        return solve_bipartite(cmd, r);
    auto target = contraction_class(cmd.target);
    if (!target)
        throw UsageError("unknown problem '" + cmd.target + "'");
    auto k = require_k(cmd);
    auto g = load_graph(cmd);
    add_header(r, cmd, g);
    r.add("k", k);
    r.add("method", cmd.exact ? "exact" : "enumeration");
    std::optional<ContractionSolution> s;
    if (cmd.exact) {
        ExactStats stats;
        s = exact_contraction(g, k, *target, &stats);
        add_solution(r, s);
        r.add("nodes", stats.nodes);
    } else {
        s = oracle_contraction(g, k, *target, cap_of(cmd));
        add_solution(r, s);
    }
    return s ? kExitYes : kExitNo;
}

void write_to(const std::string & path, const std::string & text)
{
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw UsageError("cannot write '" + path + "'");
    f << text;
}

auto do_generate(const Command & cmd, Report & r, std::ostream & out) -> int
{
    std::ostringstream instance;
    std::vector<std::string> roles;
    r.add("command", cmd.verb);
    r.add("reduction", cmd.target);
    if (cmd.target == "clique-to-split") {
        auto g = load_graph(cmd);
        auto art = gen_split_from_clique(g, require_k(cmd));
        write_graph(instance, art.graph);
        roles = art.roles;
        r.add("n", art.graph.order());
        r.add("m", art.graph.size());
        r.add("k", art.budget);
    } else if (cmd.target == "rbds-to-split" || cmd.target == "osdomatic-to-threshold") {
        auto inst = load_bipartite(cmd);
        auto art = cmd.target == "rbds-to-split" ? gen_split_from_rbds(inst) : gen_threshold_from_osdomatic(inst);
        write_graph(instance, art.graph);
        roles = art.roles;
        r.add("n", art.graph.order());
        r.add("m", art.graph.size());
        r.add("k", art.budget);
    } else if (cmd.target == "osds-to-osdomatic") {
        auto art = gen_osdomatic_from_osds(load_bipartite(cmd));
        write_bipartite(instance, art.instance);
        roles = art.roles;
        r.add("x", art.instance.x_count);
        r.add("y", art.instance.y_count);
        r.add("m", art.instance.edges.size());
        r.add("t", art.instance.t);
    } else {
        throw UsageError("unknown reduction '" + cmd.target + "'");
    }
    if (!cmd.roles.empty()) {
        std::ostringstream ss;
        write_roles(ss, roles);
        write_to(cmd.roles, ss.str());
    }
    if (cmd.out.empty()) {
        // The instance itself is the output; the summary becomes comments.
        std::istringstream summary(r.decision_text());
        for (std::string line; std::getline(summary, line);)
            out << "c " << line << '\n';
        out << instance.str();
        r = Report();
    } else {
        write_to(cmd.out, instance.str());
        r.add("written", cmd.out);
    }
    return kExitYes;
}

auto do_verify(const Command & cmd, Report & r) -> int
{
    auto target = contraction_class(cmd.target);
    if (!target)
        throw UsageError("unknown problem '" + cmd.target + "'");
    auto k = require_k(cmd);
    if (cmd.cert.empty())
        throw UsageError("verify needs --cert");
    auto g = load_graph(cmd);
    std::istringstream cert_text(read_file(cmd.cert));
    auto edges = parse_edge_list(cert_text);
    add_header(r, cmd, g);
    r.add("k", k);
    r.add("contractions", edges.size());
    bool ok = false;
    try {
        ok = verify_certificate(g, edges, *target, k);
        if (!ok)
            r.add("reason", edges.size() > k ? "over budget" : std::string("result is not ") + class_name(*target));
    } catch (const EdgeNotPresent & e) {
        r.add("reason", e.what());
    } catch (const UnknownVertex & e) {
        r.add("reason", e.what());
    }
    r.add("decision", ok ? "VALID" : "INVALID");
    return ok ? kExitYes : kExitNo;
}

auto do_bench(const Command & cmd, Report & r) -> int
{
    r.add("command", cmd.verb);
    r.add("suite", cmd.target);
    std::vector<BenchRow> rows;
    auto k = cmd.k.value_or(2);
    if (cmd.target == "exhaustive" || cmd.target == "random-split") {
        auto target = contraction_class(cmd.problem);
        if (!target)
            throw UsageError("unknown --problem '" + cmd.problem + "'");
        r.add("problem", cmd.problem);
        if (cmd.target == "exhaustive") {
            if (cmd.n > 7)
                throw UsageError("exhaustive bench supports --n up to 7");
            rows = bench_exhaustive(*target, cmd.n, k, cap_of(cmd));
        } else {
            r.add("seed", cmd.seed);
            rows = bench_random_split(*target, cmd.n, k, cmd.count, cmd.seed, cap_of(cmd));
        }
    } else if (cmd.target == "reductions") {
        if (cmd.x_max > 3 || cmd.y_max > 3)
            throw UsageError("reductions bench supports --x and --y up to 3");
        rows = bench_reductions(cmd.x_max, cmd.y_max);
    } else {
        throw UsageError("unknown bench suite '" + cmd.target + "' (exhaustive, random-split, reductions)");
    }
    bool all = true;
    for (const auto & row : rows) {
        r.add("row", row.label + " instances=" + std::to_string(row.instances) +
                         " agree=" + std::to_string(row.agree) + " yes=" + std::to_string(row.yes) +
                         " certified=" + std::to_string(row.certified) + " nodes=" + std::to_string(row.nodes));
        r.add_timing(row.label, row.millis);
        all = all && row.agree == row.instances && row.certified == row.yes;
    }
    r.add("decision", all ? "AGREE" : "DISAGREE");
    return all ? kExitYes : kExitNo;
}

auto dispatch(const Command & cmd, Report & r, std::ostream & out) -> int
{
    if (cmd.format != "text")
        throw UsageError("only --format text is supported");
    if (cmd.verb == "recognize")
        return do_recognize(cmd, r);
    if (cmd.verb == "solve")
        return do_solve(cmd, r);
    if (cmd.verb == "oracle")
        return do_oracle(cmd, r);
    if (cmd.verb == "generate")
        return do_generate(cmd, r, out);
    if (cmd.verb == "verify")
        return do_verify(cmd, r);
    if (cmd.verb == "bench")
        return do_bench(cmd, r);
    throw UsageError("unknown command '" + cmd.verb + "'");
}

} // namespace

auto run(const Command & cmd, std::ostream & out, std::ostream & err) -> int
{
    Report report;
    int code;
    auto start = Clock::now();
    try {
        code = dispatch(cmd, report, out);
    } catch (const UsageError & e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError & e) {
        err << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const PreconditionViolated & e) {
        err << "precondition violated: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NotSplit & e) {
        err << "precondition violated: " << e.what() << '\n';
        return kExitUsage;
    } catch (const BudgetTooLarge & e) {
        err << "budget too large: " << e.what() << '\n';
        return kExitBudget;
    } catch (const Error & e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    auto text = report.decision_text();
    if (!text.empty()) {
        report.add_timing("elapsed_ms", elapsed_ms(start));
        text = report.text();
    }
    if (!cmd.out.empty() && cmd.verb != "generate") {
        try {
            write_to(cmd.out, text);
        } catch (const UsageError & e) {
            err << "error: " << e.what() << '\n';
            return kExitUsage;
        }
    } else {
        out << text;
    }
    return code;
}

} // namespace contractk
