#pragma once

#include "fracops/kernels.hpp"
#include "fracops/quadrature.hpp"

#include <filesystem>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fracops::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Relative tolerance of laplace-check.
inline constexpr double kLaplaceTolerance = 1e-4;
/// Bound on the memristor linearization error reported by `memristor`.
inline constexpr double kLinearizationTolerance = 1e-6;

class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Subcommand { Eval, Compare, LaplaceCheck, Memristor, Figures };

struct RunConfig {
    Subcommand subcommand = Subcommand::Eval;
    std::vector<std::string> ops;             // --op; eval takes exactly one
    double alpha = 2.0 / 3.0;
    std::optional<double> normalization;      // --norm
    std::optional<std::string> preset;        // --preset
    std::optional<double> t_max;              // --tmax; 10 (40 for laplace-check)
    double dt = 1e-3;
    std::optional<std::filesystem::path> out; // --out
    std::vector<double> s_values;             // --s
};

/// DS and DC normalizations used by the comparison figures for each preset.
struct CompareNormalizations {
    double ds;
    double dc;
};
CompareNormalizations caption_normalizations(Preset p);

/// File names written by run_figures, in emission order.
std::vector<std::string> figure_manifest();

/// Each run_* returns the process exit status and writes diagnostics to `log`.
/// Configuration problems throw ConfigError (and friends); dispatch() maps
/// exceptions onto exit statuses.
int run_eval(const RunConfig& config, std::ostream& log);
int run_compare(const RunConfig& config, std::ostream& log);
int run_laplace_check(const RunConfig& config, std::ostream& log);
int run_memristor(const RunConfig& config, std::ostream& log);
int run_figures(const std::filesystem::path& dir, std::ostream& log);

/// --out, else $FRACOPS_FIG_DIR, else ./figures.
std::filesystem::path figures_dir(const RunConfig& config);

/// Runs the configured subcommand: 0 success, 1 verification failure,
/// 2 usage or I/O error.
int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace fracops::cli
