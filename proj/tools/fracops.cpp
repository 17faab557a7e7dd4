// fracops: evaluate fractional operators, run verification checks and emit
// figure data as CSV.

#include "fracops/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

void add_common(CLI::App* sub, fracops::cli::RunConfig& cfg) {
    sub->add_option("--alpha", cfg.alpha, "Fractional order in (0, 1]")->capture_default_str();
    sub->add_option("--tmax", cfg.t_max, "End of the time grid");
    sub->add_option("--dt", cfg.dt, "Grid step")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    using fracops::cli::RunConfig;
    using fracops::cli::Subcommand;

    CLI::App app{"Fractional operators (Caputo, CF, AB, sine and cosine kernels)"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* eval = app.add_subcommand("eval", "Apply one operator to a preset; writes t,value");
    eval->add_option("--op", cfg.ops, "Operator: c, cf, ab, ds, dc")->required()->expected(1);
    eval->add_option("--norm", cfg.normalization, "Normalization N or B (default 1 - alpha)");
    eval->add_option("--preset", cfg.preset, "cube, negcos, sin, exp")->required();
    eval->add_option("--out", cfg.out, "Output CSV path (default eval.csv)");
    add_common(eval, cfg);

    auto* compare = app.add_subcommand("compare", "DS, DC and Caputo side by side; writes t,ds,dc,caputo");
    compare->add_option("--preset", cfg.preset, "cube, negcos, sin, exp")->required();
    compare->add_option("--norm", cfg.normalization, "Override both DS and DC normalizations");
    compare->add_option("--out", cfg.out, "Output CSV path (default compare.csv)");
    add_common(compare, cfg);

    auto* laplace = app.add_subcommand("laplace-check", "Numerical vs closed-form Laplace transforms of DS/DC");
    laplace->add_option("--op", cfg.ops, "ds and/or dc (default both)");
    laplace->add_option("--norm", cfg.normalization, "Normalization N (default 1 - alpha)");
    laplace->add_option("--preset", cfg.preset, "Restrict to one preset (default all)");
    laplace->add_option("--s", cfg.s_values, "Transform points, e.g. --s 1,2,5")->delimiter(',');
    add_common(laplace, cfg);

    auto* memristor = app.add_subcommand("memristor", "Memristor loop, window curves and linearization report");
    memristor->add_option("--out", cfg.out, "Output directory (default .)");
    add_common(memristor, cfg);

    auto* figures = app.add_subcommand("figures", "Write the full figure data set");
    figures->add_option("--out", cfg.out, "Output directory (default $FRACOPS_FIG_DIR or ./figures)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : fracops::cli::kExitUsage;
    }

    if (eval->parsed()) cfg.subcommand = Subcommand::Eval;
    if (compare->parsed()) cfg.subcommand = Subcommand::Compare;
    if (laplace->parsed()) cfg.subcommand = Subcommand::LaplaceCheck;
    if (memristor->parsed()) cfg.subcommand = Subcommand::Memristor;
    if (figures->parsed()) cfg.subcommand = Subcommand::Figures;

    return fracops::cli::dispatch(cfg, std::cout, std::cerr);
}
