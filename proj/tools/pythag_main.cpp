#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "pythag/report.hpp"
#include "pythag/simulate.hpp"

namespace {

using namespace pythag;

constexpr std::uint64_t kDefaultSeed = 42;

Unit parse_unit(const std::string& s) {
    if (s == "per-game") return Unit::PerGame;
    if (s == "total") return Unit::SeasonTotal;
    throw UsageError("unknown unit '" + s + "' (use per-game or total)");
}

Format parse_format(const std::string& s) {
    if (s == "csv") return Format::Csv;
    if (s == "markdown") return Format::Markdown;
    throw UsageError("unknown format '" + s + "' (use csv or markdown)");
}

InterceptMode parse_intercept(const std::string& s) {
    if (s == "free") return InterceptMode::Free;
    if (s == "fixed") return InterceptMode::FixedAtHalf;
    throw UsageError("unknown intercept mode '" + s + "' (use free or fixed)");
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("PYTHAG_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0') {
            throw UsageError(std::string("PYTHAG_SEED is not an integer: ") + env);
        }
        return v;
    }
    return kDefaultSeed;
}

std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

void cmd_predict(double rs, double ra, std::optional<double> gamma,
                 std::optional<double> beta, std::optional<double> r_ave, Unit unit) {
    if (gamma.has_value() == beta.has_value()) {
        throw UsageError("provide exactly one of --gamma or --beta");
    }
    const RunRate rrs{rs, unit};
    const RunRate rra{ra, unit};
    if (beta) {
        const WinPct wp = linear_wp(rrs, rra, Slope{*beta, unit});
        std::cout << "linear      " << fmt6(wp.value) << "\n";
        return;
    }
    const Exponent g{*gamma};
    std::cout << "exact       " << fmt6(pythagorean_wp(rrs, rra, g).value) << "\n";
    if (r_ave) {
        const LeagueAverage avg{*r_ave, unit};
        std::cout << "taylor1     " << fmt6(taylor1_wp(rrs, rra, g, avg).value) << "\n";
        std::cout << "taylor2     " << fmt6(taylor2_wp(rrs, rra, g, avg).value) << "\n";
        std::cout << "log-form    " << fmt6(appendix_log_form(rrs, rra, g).value) << "\n";
        std::cout << "ratio-form  " << fmt6(appendix_ratio_form(rrs, rra, g).value) << "\n";
    }
}

int cmd_table(const std::string& input, double level, std::optional<int> m,
              InterceptMode mode, Format format) {
    const auto records = load_standings(input);
    const auto datasets = split_seasons(records);
    const auto rows = fit_all_seasons(datasets, mode, level, m);
    std::cout << render_table(rows, format);
    for (const auto& row : rows) {
        if (!row.ok) return 1;
    }
    return 0;
}

void cmd_fit(const std::string& input, int season, double level, int m,
             InterceptMode mode) {
    const auto records = load_standings(input);
    const auto ds = build_season_dataset(records, season);
    std::cout << render_fit_detail(fit_dataset(ds, mode, level, m));
}

void cmd_approx_grid(double gamma, double r_ave, double rs_min, double rs_max,
                     double ra_min, double ra_max, double step, Unit unit,
                     Format format) {
    ApproxGridSpec spec;
    spec.gamma = {gamma};
    spec.r_ave = {r_ave, unit};
    spec.rs_min = rs_min;
    spec.rs_max = rs_max;
    spec.ra_min = ra_min;
    spec.ra_max = ra_max;
    spec.step = step;
    spec.unit = unit;
    std::cout << render_grid(evaluate_approx_grid(spec), format);
}

void cmd_simulate(const SimConfig& cfg, double level) {
    const SeasonDataset ds = simulate_season(cfg);
    const SeasonFitRow row = fit_dataset(ds, InterceptMode::Free, 1.0 - level, 1);
    std::cout << "teams=" << cfg.n_teams << " games=" << cfg.games
              << " true_gamma=" << fmt6(cfg.true_gamma) << " r_ave=" << fmt6(cfg.r_ave)
              << " spread=" << fmt6(cfg.spread) << " balance=" << (cfg.balance ? 1 : 0)
              << " seed=" << cfg.seed << "\n";
    std::cout << "r_ave_sim=" << fmt6(ds.r_ave.value)
              << " beta=" << fmt6(row.fit.beta_hat.beta)
              << " gamma=" << fmt6(row.gamma.gamma_hat.gamma) << " ci=["
              << fmt6(row.gamma.ci_low) << ", " << fmt6(row.gamma.ci_high)
              << "] r_squared=" << fmt6(row.fit.r_squared) << "\n";
}

void cmd_coverage(const SimConfig& cfg, int runs, double level) {
    const CoverageResult res = coverage_experiment(cfg, runs, level);
    std::cout << "teams=" << cfg.n_teams << " games=" << cfg.games
              << " true_gamma=" << fmt6(cfg.true_gamma) << " r_ave=" << fmt6(cfg.r_ave)
              << " spread=" << fmt6(cfg.spread) << " balance=" << (cfg.balance ? 1 : 0)
              << " seed=" << cfg.seed << " runs=" << res.runs
              << " level=" << fmt6(level) << "\n";
    std::cout << "covered=" << res.covered << " coverage=" << fmt6(res.fraction) << "\n";
}

void cmd_plot(const std::string& input, int season, const std::string& output) {
    const auto records = load_standings(input);
    const auto ds = build_season_dataset(records, season);
    const SeasonFitRow row = fit_dataset(ds, InterceptMode::Free, 0.05, 1);
    std::ofstream out(output);
    if (!out) throw Error("cannot write " + output);
    out << render_svg_scatter(ds, row);
}

int run(int argc, char** argv) {
    CLI::App app{"Pythagorean won-loss toolkit: exact formula, linear approximants, "
                 "per-season least-squares estimation, simulation"};
    app.require_subcommand(1);

    // predict
    auto* predict = app.add_subcommand("predict", "winning percentage for one rs/ra pair");
    double p_rs = 0.0, p_ra = 0.0;
    std::optional<double> p_gamma, p_beta, p_rave;
    std::string p_unit = "per-game";
    predict->add_option("--rs", p_rs, "runs scored")->required();
    predict->add_option("--ra", p_ra, "runs allowed")->required();
    predict->add_option("--gamma", p_gamma, "exponent for the exact formula");
    predict->add_option("--beta", p_beta, "slope for the linear model");
    predict->add_option("--r-ave", p_rave, "league average runs (enables approximants)");
    predict->add_option("--unit", p_unit, "per-game or total");
    predict->callback([&] {
        cmd_predict(p_rs, p_ra, p_gamma, p_beta, p_rave, parse_unit(p_unit));
    });

    // fit
    auto* fit = app.add_subcommand("fit", "detailed least-squares fit of one season");
    std::string f_input;
    int f_season = 0;
    double f_level = 0.05;
    int f_m = 1;
    std::string f_intercept = "free";
    fit->add_option("--input", f_input, "standings CSV ('-' for stdin)")->required();
    fit->add_option("--season", f_season, "season year")->required();
    fit->add_option("--level", f_level, "significance level (default 0.05)");
    fit->add_option("--m", f_m, "Bonferroni family size (default 1)");
    fit->add_option("--intercept", f_intercept, "free or fixed");
    fit->callback([&] {
        cmd_fit(f_input, f_season, f_level, f_m, parse_intercept(f_intercept));
    });

    // table
    auto* table = app.add_subcommand("table", "per-season coefficient table");
    std::string t_input, t_intercept = "free", t_format = "markdown";
    double t_level = 0.05;
    std::optional<int> t_m;
    table->add_option("--input", t_input, "standings CSV ('-' for stdin)")->required();
    table->add_option("--level", t_level, "significance level (default 0.05)");
    table->add_option("--m", t_m, "Bonferroni family size (default 1)");
    table->add_option("--intercept", t_intercept, "free or fixed");
    table->add_option("--format", t_format, "csv or markdown");
    int table_rc = 0;
    table->callback([&] {
        table_rc = cmd_table(t_input, t_level, t_m.has_value() ? t_m : std::optional<int>(1),
                             parse_intercept(t_intercept), parse_format(t_format));
    });

    // approx-grid
    auto* grid = app.add_subcommand("approx-grid",
                                    "approximation error of each linearization over an rs x ra grid");
    double g_gamma = 1.82, g_rave = 0.0, g_rs_min = 0.0, g_rs_max = 0.0;
    double g_ra_min = 0.0, g_ra_max = 0.0, g_step = 1.0;
    std::string g_unit = "per-game", g_format = "markdown";
    grid->add_option("--gamma", g_gamma, "exponent")->required();
    grid->add_option("--r-ave", g_rave, "league average runs")->required();
    grid->add_option("--rs-min", g_rs_min)->required();
    grid->add_option("--rs-max", g_rs_max)->required();
    grid->add_option("--ra-min", g_ra_min)->required();
    grid->add_option("--ra-max", g_ra_max)->required();
    grid->add_option("--step", g_step, "grid step")->required();
    grid->add_option("--unit", g_unit, "per-game or total");
    grid->add_option("--format", g_format, "csv or markdown");
    grid->callback([&] {
        cmd_approx_grid(g_gamma, g_rave, g_rs_min, g_rs_max, g_ra_min, g_ra_max, g_step,
                        parse_unit(g_unit), parse_format(g_format));
    });

    // simulate / coverage share config flags
    SimConfig cfg;
    std::optional<std::uint64_t> seed_flag;
    double s_level = 0.95;
    auto add_sim_flags = [&](CLI::App* cmd) {
        cmd->add_option("--teams", cfg.n_teams, "number of teams (default 30)");
        cmd->add_option("--games", cfg.games, "games per team (default 162)");
        cmd->add_option("--gamma", cfg.true_gamma, "true exponent (default 1.82)");
        cmd->add_option("--r-ave", cfg.r_ave, "league average runs per game (default 4.5)");
        cmd->add_option("--spread", cfg.spread, "team run-rate dispersion (default 0.35)")
            ->check(CLI::NonNegativeNumber);
        cmd->add_flag("--balance,!--no-balance", cfg.balance,
                      "force league runs scored == runs allowed (default on)");
        cmd->add_option("--seed", seed_flag, "RNG seed (or env PYTHAG_SEED)");
        cmd->add_option("--level", s_level, "confidence level (default 0.95)");
    };

    auto* simulate = app.add_subcommand("simulate", "one synthetic season, fitted");
    add_sim_flags(simulate);
    simulate->callback([&] {
        cfg.seed = resolve_seed(seed_flag);
        cmd_simulate(cfg, s_level);
    });

    auto* coverage = app.add_subcommand("coverage", "confidence-interval coverage experiment");
    add_sim_flags(coverage);
    int c_runs = 0;
    coverage->add_option("--runs", c_runs, "number of simulated seasons (>= 100)")
        ->required();
    coverage->callback([&] {
        cfg.seed = resolve_seed(seed_flag);
        cmd_coverage(cfg, c_runs, s_level);
    });

    // plot
    auto* plot = app.add_subcommand("plot", "SVG scatter with fitted line");
    std::string pl_input, pl_output;
    int pl_season = 0;
    plot->add_option("--input", pl_input, "standings CSV ('-' for stdin)")->required();
    plot->add_option("--season", pl_season, "season year")->required();
    plot->add_option("--output", pl_output, "output SVG path")->required();
    plot->callback([&] { cmd_plot(pl_input, pl_season, pl_output); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return table_rc;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const pythag::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const pythag::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
