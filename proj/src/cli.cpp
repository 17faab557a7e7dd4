#include "fracops/cli.hpp"

#include "fracops/csv.hpp"
#include "fracops/laplace.hpp"
#include "fracops/memristor.hpp"
#include "fracops/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numbers>

namespace fracops::cli {
namespace {

constexpr double kDefaultTMax = 10.0;
constexpr double kLaplaceDefaultTMax = 40.0;

KernelKind parse_op(const std::string& name) {
    const auto kind = parse_kernel_kind(name);
    if (!kind) throw ConfigError("unknown operator '" + name + "' (expected c, cf, ab, ds, dc)");
    return *kind;
}

Preset require_preset(const RunConfig& config) {
    if (!config.preset) throw ConfigError("--preset is required");
    return parse_preset(*config.preset);
}

FractionalOrder checked_order(double alpha) {
    try {
        return FractionalOrder(alpha);
    } catch (const std::exception& e) {
        throw ConfigError(e.what());
    }
}

TimeGrid checked_grid(double t_max, double dt) {
    try {
        return TimeGrid::spanning(t_max, dt);
    } catch (const std::exception& e) {
        throw ConfigError(e.what());
    }
}

OperatorSpec checked_spec(KernelKind kind, double alpha, double normalization) {
    OperatorSpec spec{kind, checked_order(alpha), normalization};
    try {
        spec.validate();
    } catch (const std::exception& e) {
        throw ConfigError(std::string(to_string(kind)) + ": " + e.what());
    }
    return spec;
}

std::filesystem::path out_path(const RunConfig& config, const char* fallback) {
    return config.out ? *config.out : std::filesystem::path(fallback);
}

csv::Table eval_table(const OperatorSpec& spec, Preset preset, const TimeGrid& grid) {
    const Signal out = apply_operator(spec, preset_function(preset), grid);
    csv::Table table({"t", "value"});
    for (std::size_t i = 0; i < grid.size(); ++i) table.add_row({grid.t(i), out[i]});
    return table;
}

csv::Table compare_table(double alpha, Preset preset, CompareNormalizations norms, const TimeGrid& grid) {
    const SourceFunction f = preset_function(preset);
    const Signal ds = apply_operator(checked_spec(KernelKind::DS, alpha, norms.ds), f, grid);
    const Signal dc = apply_operator(checked_spec(KernelKind::DC, alpha, norms.dc), f, grid);
    const Signal c = apply_operator(checked_spec(KernelKind::C, alpha, 1.0), f, grid);
    csv::Table table({"t", "ds", "dc", "caputo"});
    for (std::size_t i = 0; i < grid.size(); ++i) table.add_row({grid.t(i), ds[i], dc[i], c[i]});
    return table;
}

csv::Table loop_table(const MemristorState& state) {
    csv::Table table({"i", "v"});
    for (const VIPoint& p : vi_curve(state)) table.add_row({p.current, p.voltage});
    return table;
}

csv::Table window_table(double dt) {
    const double lo = 3.0;
    const double hi = 8.0;
    const auto steps = static_cast<std::size_t>(std::llround((hi - lo) / dt));
    csv::Table table({"t", "red", "blue", "green"});
    for (std::size_t k = 0; k <= steps; ++k) {
        const double t = lo + static_cast<double>(k) * dt;
        table.add_row({t, 0.3 * std::sin(2.0 * t), std::pow(t, -8.0 / 9.0), std::pow(t, -43.0 / 70.0)});
    }
    return table;
}

}  // namespace

CompareNormalizations caption_normalizations(Preset p) {
    switch (p) {
        case Preset::Cube: return {0.9, 4.0};
        case Preset::NegCos: return {0.4, 0.6};
        case Preset::Sin: return {0.3, 0.5};
        case Preset::Exp: return {0.8, 1.6};
    }
    throw std::logic_error("unknown preset");
}

int run_eval(const RunConfig& config, std::ostream& log) {
    if (config.ops.size() != 1) throw ConfigError("eval needs exactly one --op");
    const KernelKind kind = parse_op(config.ops.front());
    const Preset preset = require_preset(config);
    const double norm = config.normalization.value_or(1.0 - config.alpha);
    const OperatorSpec spec = checked_spec(kind, config.alpha, norm);
    const TimeGrid grid = checked_grid(config.t_max.value_or(kDefaultTMax), config.dt);
    const auto path = out_path(config, "eval.csv");
    eval_table(spec, preset, grid).write(path);
    log << "wrote " << path.string() << " (" << grid.size() << " rows)\n";
    return kExitOk;
}

int run_compare(const RunConfig& config, std::ostream& log) {
    const Preset preset = require_preset(config);
    CompareNormalizations norms = caption_normalizations(preset);
    if (config.normalization) norms = {*config.normalization, *config.normalization};
    (void)checked_order(config.alpha);
    const TimeGrid grid = checked_grid(config.t_max.value_or(kDefaultTMax), config.dt);
    const auto path = out_path(config, "compare.csv");
    compare_table(config.alpha, preset, norms, grid).write(path);
    log << "wrote " << path.string() << " (ds N=" << norms.ds << ", dc N=" << norms.dc << ")\n";
    return kExitOk;
}

int run_laplace_check(const RunConfig& config, std::ostream& log) {
    std::vector<KernelKind> ops;
    for (const auto& name : config.ops) {
        const KernelKind k = parse_op(name);
        if (k != KernelKind::DS && k != KernelKind::DC) {
            throw ConfigError("laplace-check supports only ds and dc");
        }
        ops.push_back(k);
    }
    if (ops.empty()) ops = {KernelKind::DS, KernelKind::DC};

    std::vector<Preset> presets;
    if (config.preset) {
        presets.push_back(parse_preset(*config.preset));
    } else {
        presets.assign(kAllPresets.begin(), kAllPresets.end());
    }

    const double t_max = config.t_max.value_or(kLaplaceDefaultTMax);
    const TimeGrid grid = checked_grid(t_max, config.dt);
    const double norm = config.normalization.value_or(1.0 - config.alpha);
    const FractionalOrder order = checked_order(config.alpha);
    for (KernelKind k : ops) (void)checked_spec(k, config.alpha, norm);

    // Validate every (preset, s) pair before computing anything.
    std::map<Preset, std::vector<double>> s_lists;
    for (Preset p : presets) {
        std::vector<double> s_values = config.s_values;
        if (s_values.empty()) {
            s_values = p == Preset::Exp ? std::vector<double>{2.0, 5.0} : std::vector<double>{1.0, 2.0, 5.0};
        }
        const double growth = p == Preset::Exp ? 1.0 : 0.0;
        for (double s : s_values) {
            if (!(s > growth) || (s - growth) * grid.duration() < kLaplaceTruncation) {
                throw ConfigError("laplace-check: s = " + csv::format(s) + " violates the truncation contract (s - " +
                                  csv::format(growth) + ") * T >= 20 for preset " + std::string(to_string(p)));
            }
        }
        s_lists[p] = std::move(s_values);
    }

    double worst = 0.0;
    for (Preset p : presets) {
        const SourceFunction f = preset_function(p);
        for (KernelKind k : ops) {
            const Signal out = apply_operator(OperatorSpec{k, order, norm}, f, grid);
            for (double s : s_lists[p]) {
                const LaplaceQuery q{s, preset_transform(p, s), f.f0()};
                const double exact = k == KernelKind::DS ? ds_transform(order, norm, q) : dc_transform(order, norm, q);
                const double numeric = numerical_laplace(out, s);
                const double gap = relative_gap(numeric, exact);
                worst = std::max(worst, gap);
                log << "preset=" << to_string(p) << " op=" << to_string(k) << " s=" << csv::format(s)
                    << " numeric=" << csv::format(numeric) << " exact=" << csv::format(exact)
                    << " rel_gap=" << csv::format(gap) << (gap <= kLaplaceTolerance ? " ok" : " FAIL") << '\n';
            }
        }
    }
    const bool pass = worst <= kLaplaceTolerance;
    log << "max_rel_gap=" << csv::format(worst) << " tolerance=" << csv::format(kLaplaceTolerance)
        << (pass ? " PASS" : " FAIL") << '\n';
    return pass ? kExitOk : kExitVerificationFailed;
}

int run_memristor(const RunConfig& config, std::ostream& log) {
    const double t_max = config.t_max.value_or(kDefaultTMax);
    if (t_max < 2.0 * std::numbers::pi) throw ConfigError("memristor needs --tmax >= 2 pi");
    const TimeGrid grid = checked_grid(t_max, config.dt);

    const auto dir = out_path(config, ".");
    std::filesystem::create_directories(dir);
    const MemristorState state = build_memristor(grid);
    loop_table(state).write(dir / "memristor_loop.csv");
    window_table(config.dt).write(dir / "memristor_windows.csv");

    const double err = verify_ds_linearization(grid);
    log << "eq8_max_error=" << csv::format(err) << '\n';
    if (grid.n() % 2 == 0) {
        const double coarse = verify_ds_linearization(TimeGrid(2.0 * grid.dt(), grid.n() / 2));
        log << "eq8_max_error_2dt=" << csv::format(coarse) << '\n';
        log << "eq8_order=" << csv::format(std::log2(coarse / err)) << '\n';
    }

    for (const WindowApprox& w : {early_window(), late_window()}) {
        log << "window=[" << csv::format(w.t_lo) << "," << csv::format(w.t_hi) << "] exponent="
            << csv::format(w.exponent);
        if (w.t_hi > grid.duration()) {
            log << " skipped (beyond --tmax)\n";
            continue;
        }
        const WindowReport r = caputo_window_check(w, grid);
        const double g = gamma(1.0 - w.exponent);
        log << " c0=" << csv::format(w.c0) << " kernel_gap=" << csv::format(r.kernel_gap)
            << " voltage_gap=" << csv::format(r.voltage_gap) << " fitted_c0=" << csv::format(r.fitted_c0)
            << " fitted_c0_over_gamma=" << csv::format(r.fitted_c0 / g)
            << " fitted_voltage_gap=" << csv::format(r.fitted_voltage_gap) << '\n';
    }
    const bool pass = err <= kLinearizationTolerance;
    log << (pass ? "PASS" : "FAIL") << '\n';
    return pass ? kExitOk : kExitVerificationFailed;
}

std::vector<std::string> figure_manifest() {
    return {"fig1_ds.csv",   "fig1_dc.csv",     "fig2_ds.csv", "fig2_dc.csv",    "fig3_ds.csv",
            "fig3_dc.csv",   "fig4_ds.csv",     "fig4_dc.csv", "fig5_cube.csv",  "fig5_negcos.csv",
            "fig6_sin.csv",  "fig6_exp.csv",    "fig7_loop.csv", "fig7_windows.csv"};
}

int run_figures(const std::filesystem::path& dir, std::ostream& log) {
    constexpr double alpha = 2.0 / 3.0;
    constexpr double dt = 1e-3;
    const TimeGrid grid = TimeGrid::spanning(kDefaultTMax, dt);
    std::filesystem::create_directories(dir);

    auto emit = [&](const std::string& name, const csv::Table& table) {
        table.write(dir / name);
        log << "wrote " << (dir / name).string() << '\n';
    };

    // Figures 1-4: N(alpha) = 1 - alpha.
    const double norm = 1.0 - alpha;
    const Preset single[] = {Preset::Cube, Preset::NegCos, Preset::Sin, Preset::Exp};
    for (int k = 0; k < 4; ++k) {
        const std::string stem = "fig" + std::to_string(k + 1);
        emit(stem + "_ds.csv", eval_table(checked_spec(KernelKind::DS, alpha, norm), single[k], grid));
        emit(stem + "_dc.csv", eval_table(checked_spec(KernelKind::DC, alpha, norm), single[k], grid));
    }

    // Figures 5-6: caption normalizations.
    const std::pair<const char*, Preset> compared[] = {
        {"fig5_cube.csv", Preset::Cube}, {"fig5_negcos.csv", Preset::NegCos},
        {"fig6_sin.csv", Preset::Sin},   {"fig6_exp.csv", Preset::Exp}};
    for (const auto& [name, preset] : compared) {
        emit(name, compare_table(alpha, preset, caption_normalizations(preset), grid));
    }

    emit("fig7_loop.csv", loop_table(build_memristor(grid)));
    emit("fig7_windows.csv", window_table(dt));
    return kExitOk;
}

std::filesystem::path figures_dir(const RunConfig& config) {
    if (config.out) return *config.out;
    if (const char* env = std::getenv("FRACOPS_FIG_DIR"); env && *env) return env;
    return "figures";
}

int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (!(config.dt > 0.0) || !std::isfinite(config.dt)) throw ConfigError("--dt must be positive");
        if (config.t_max && !(*config.t_max >= config.dt)) throw ConfigError("--tmax must be >= --dt");
        switch (config.subcommand) {
            case Subcommand::Eval: return run_eval(config, out);
            case Subcommand::Compare: return run_compare(config, out);
            case Subcommand::LaplaceCheck: return run_laplace_check(config, out);
            case Subcommand::Memristor: return run_memristor(config, out);
            case Subcommand::Figures: return run_figures(figures_dir(config), out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace fracops::cli
