#include "contractk/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

struct Flags {
    std::optional<std::size_t> k;
    std::optional<std::size_t> t;
    std::optional<std::uint64_t> cap;
};

void add_common(CLI::App * sub, contractk::Command & cmd, Flags & flags)
{
    sub->add_option("--k", flags.k, "contraction budget");
    sub->add_option("--t", flags.t, "bipartite budget (overrides the file header)");
    sub->add_option("--cap", flags.cap, "oracle enumeration cap (default: CONTRACTK_CAP or 1e8)");
    sub->add_option("--seed", cmd.seed, "64-bit random seed");
    sub->add_option("--out", cmd.out, "write the report (or generated instance) here");
    sub->add_option("--format", cmd.format, "output format")->check(CLI::IsMember({"text"}));
}

} // namespace

auto main(int argc, char ** argv) -> int
{
    CLI::App app{"Edge contraction to split, threshold and complete graphs"};
    app.require_subcommand(1);
    contractk::Command cmd;
    Flags flags;

    auto recognize = app.add_subcommand("recognize", "test membership in split, threshold or clique");
    recognize->add_option("class", cmd.target, "split | threshold | clique")->required();
    recognize->add_option("input", cmd.input, "graph file, or - for stdin")->required();

    auto solve = app.add_subcommand("solve", "run the parameterized solver");
    solve->add_option("problem", cmd.target,
                      "split-contraction | threshold-contraction | clique-contraction | rbds | osds | osdomatic")
        ->required();
    solve->add_option("input", cmd.input, "instance file, or - for stdin")->required();

    auto oracle = app.add_subcommand("oracle", "run the brute-force oracle");
    oracle->add_option("problem", cmd.target, "same problems as solve")->required();
    oracle->add_option("input", cmd.input, "instance file, or - for stdin")->required();
    oracle->add_flag("--exact", cmd.exact, "use the obstruction-branching exact search");

    auto generate = app.add_subcommand("generate", "build a reduction instance");
    generate
        ->add_option("reduction", cmd.target,
                     "clique-to-split | rbds-to-split | osds-to-osdomatic | osdomatic-to-threshold")
        ->required();
    generate->add_option("input", cmd.input, "source instance, or - for stdin")->required();
    generate->add_option("--roles", cmd.roles, "write the vertex role map here");

    auto verify = app.add_subcommand("verify", "check a contraction certificate");
    verify->add_option("problem", cmd.target, "split-contraction | threshold-contraction | clique-contraction")
        ->required();
    verify->add_option("input", cmd.input, "graph file, or - for stdin")->required();
    verify->add_option("--cert", cmd.cert, "file with one 'e u v' line per contracted edge")->required();

    auto bench = app.add_subcommand("bench", "compare solvers against oracles on instance grids");
    bench->add_option("suite", cmd.target, "exhaustive | random-split | reductions")->required();
    bench->add_option("--problem", cmd.problem, "contraction problem for graph suites");
    bench->add_option("--n", cmd.n, "largest (exhaustive) or exact (random-split) vertex count");
    bench->add_option("--count", cmd.count, "random instances per k");
    bench->add_option("--x", cmd.x_max, "largest |X| for the reductions grid");
    bench->add_option("--y", cmd.y_max, "largest |Y| for the reductions grid");

    for (auto sub : {recognize, solve, oracle, generate, verify, bench})
        add_common(sub, cmd, flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    } catch (const CLI::ParseError & e) {
        app.exit(e);
        return contractk::kExitUsage;
    }
    cmd.verb = app.get_subcommands().front()->get_name();
    cmd.k = flags.k;
    cmd.t = flags.t;
    cmd.cap = flags.cap;
    return contractk::run(cmd, std::cout, std::cerr);
}
