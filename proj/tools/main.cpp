#include <CLI11.hpp>
#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
    using hca::cli::RunConfig;
    CLI::App app{"exact engine for centrally extended current algebras over "
                 "rings C[t,t^-1,u | u^2 = p(t)]"};
    app.require_subcommand(1);

    RunConfig cfg;
    auto add_common = [&cfg](CLI::App* cmd) {
        cmd->add_option("--curve", cfg.curve, "defining polynomial p(t)");
        cmd->add_option("--algebra", cfg.algebra, "sl<m> or file:<path> (default sl2)");
        cmd->add_option("--order", cfg.order, "series truncation order (default 4n+8)")
            ->check(CLI::NonNegativeNumber);
        cmd->add_option("--window", cfg.window, "reduction window radius (default 5n)")
            ->check(CLI::NonNegativeNumber);
        cmd->add_option("--trials", cfg.trials, "randomized trials")->check(CLI::PositiveNumber);
        cmd->add_option("--seed", cfg.seed, "random seed (default 0)");
        cmd->add_option("--format", cfg.format, "text | json | csv")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        cmd->add_option("--out", cfg.out, "write output to a file");
        cmd->add_option("--at", cfg.at, "instantiation point, e.g. b=2,c=1/3");
    };

    auto* basis = app.add_subcommand("basis", "list the central basis forms");
    add_common(basis);

    auto* series = app.add_subcommand("series", "coefficient generating series");
    add_common(series);
    std::string family = "p";
    long index = -1;
    series->add_option("family", family, "p or q")->required();
    series->add_option("i", index, "column index in [-n,-1]")->required();
    series->add_flag("--both-routes", cfg.both_routes,
                     "also compute the integral route and compare");

    auto* bracket = app.add_subcommand("bracket", "bracket of two loop elements");
    add_common(bracket);
    std::string left, right;
    bracket->add_option("left", left, "e.g. \"e@t^2*u\"")->required();
    bracket->add_option("right", right, "e.g. \"f@t^-1\"")->required();

    auto* reduce = app.add_subcommand("reduce", "reduce a 1-form to the central basis");
    add_common(reduce);
    std::string form, second;
    bool use_oracle = false;
    reduce->add_option("form", form, "monomial 1-form \"t^3*u dt\", or f when g is given")
        ->required();
    reduce->add_option("g", second, "optional second ring element; reduces class(f dg)");
    reduce->add_flag("--oracle", use_oracle, "use exact elimination at --at");

    auto* table = app.add_subcommand("table", "bracket structure table over a monomial range");
    add_common(table);
    long lo = -2, hi = 2;
    std::string parity = "all";
    table->add_option("--lo", lo, "lowest t-exponent");
    table->add_option("--hi", hi, "highest t-exponent");
    table->add_option("--parity", parity, "all | even | odd");

    auto* verify = app.add_subcommand("verify", "run verification suites");
    add_common(verify);
    std::string suite = "all";
    verify->add_option("--suite", suite, "jacobi|cocycle|ode|oracle|bell|routes|all");

    auto* examples = app.add_subcommand("examples", "reproduce the built-in worked examples");
    add_common(examples);
    std::string which;
    examples->add_option("which", which, "quartic or hexic")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;  // usage error
    }

    if (basis->parsed()) return hca::cli::cmd_basis(cfg, std::cout, std::cerr);
    if (series->parsed())
        return hca::cli::cmd_series(cfg, family, index, std::cout, std::cerr);
    if (bracket->parsed())
        return hca::cli::cmd_bracket(cfg, left, right, std::cout, std::cerr);
    if (reduce->parsed())
        return hca::cli::cmd_reduce(cfg, form, second, use_oracle, std::cout, std::cerr);
    if (table->parsed()) return hca::cli::cmd_table(cfg, lo, hi, parity, std::cout, std::cerr);
    if (verify->parsed()) return hca::cli::cmd_verify(cfg, suite, std::cout, std::cerr);
    if (examples->parsed()) return hca::cli::cmd_examples(cfg, which, std::cout, std::cerr);
    return 2;
}
