#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pythag/core.hpp"

namespace pythag {

struct SeasonDataset;

/// One team-season observation: x = run differential per game, y = winning
/// percentage. weight carries games played for diagnostics; the default fit
/// is unweighted.
struct RegressionPoint {
    double x = 0.0;
    double y = 0.0;
    double weight = 0.0;
};

enum class InterceptMode { Free, FixedAtHalf };

struct LinearFit {
    double alpha_hat = 0.0;
    Slope beta_hat;
    double se_beta = 0.0;
    int df = 0;  // n-2 free, n-1 fixed
    double r_squared = 0.0;
    int n = 0;
    InterceptMode intercept_mode = InterceptMode::Free;
};

/// Ordinary least squares of y on x. Free mode estimates the intercept;
/// fixed mode regresses (y - 0.5) on x through the origin. R^2 is always
/// 1 - RSS/TSS with TSS about the y mean.
LinearFit fit_season(std::span<const RegressionPoint> points,
                     InterceptMode mode = InterceptMode::Free,
                     Unit x_unit = Unit::PerGame);

/// p-quantile of Student's t with df degrees of freedom, by numerical
/// inversion of the CDF written through the regularized incomplete beta
/// function. Absolute accuracy better than 1e-8.
double t_quantile(double p, long df);

/// CDF of Student's t with df degrees of freedom.
double t_cdf(double t, long df);

/// Regularized incomplete beta function I_x(a, b).
double ibeta_reg(double a, double b, double x);

struct Interval {
    double low = 0.0;
    double high = 0.0;
};

/// Two-sided t interval for the slope at significance `level`, Bonferroni
/// corrected for a family of m tests: beta_hat +/- t(1 - level/(2m), df) * se.
Interval beta_ci(const LinearFit& fit, double level, int m);

struct GammaEstimate {
    Exponent gamma_hat;
    double ci_low = 0.0;
    double ci_high = 0.0;
    double level = 0.05;  // significance level before the Bonferroni correction
    int m = 1;
    LeagueAverage r_ave_used;
};

/// gamma_hat = 4 * beta_hat * r_ave, with the slope interval scaled by the
/// same constant. r_ave is treated as known (no uncertainty propagated).
GammaEstimate gamma_estimate(const LinearFit& fit, LeagueAverage r_ave,
                             double level, int m);

/// Two-sided p-value for beta_hat = 0; diagnostic only.
double beta_p_value(const LinearFit& fit);

struct SeasonFitRow {
    int season = 0;
    bool ok = false;
    LinearFit fit;
    GammaEstimate gamma;
    std::string error;
};

/// Fit one dataset end to end (points, OLS, gamma interval).
SeasonFitRow fit_dataset(const SeasonDataset& ds, InterceptMode mode,
                         double level, int m);

/// One row per season, sorted by season. A per-season failure is reported in
/// its row without aborting the others. m defaults to the number of seasons
/// in the run when not given.
std::vector<SeasonFitRow> fit_all_seasons(const std::vector<SeasonDataset>& datasets,
                                          InterceptMode mode, double level,
                                          std::optional<int> m = std::nullopt);

}  // namespace pythag
