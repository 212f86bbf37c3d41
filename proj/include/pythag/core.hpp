#pragma once

#include <string>

#include "pythag/errors.hpp"

namespace pythag {

/// Whether a runs quantity is expressed per game or as a season total.
/// Conversions are explicit; operations that combine runs quantities require
/// matching units and throw UnitError otherwise.
enum class Unit { PerGame, SeasonTotal };

const char* to_string(Unit unit);

/// Runs scored or allowed at a stated unit. Formula inputs must be > 0.
struct RunRate {
    double value = 0.0;
    Unit unit = Unit::PerGame;
};

inline RunRate per_game(double value) { return {value, Unit::PerGame}; }
inline RunRate season_total(double value) { return {value, Unit::SeasonTotal}; }

/// Convert between per-game and season-total scales; games must be > 0.
RunRate to_per_game(RunRate rate, double games);
RunRate to_season_total(RunRate rate, double games);

/// The exponent of the won-loss formula. Estimation can produce values that
/// are not usable as formula inputs (e.g. 0 from a zero slope), so validity
/// is a query rather than a construction-time constraint.
struct Exponent {
    double gamma = 0.0;
    bool valid() const;
};

/// Slope of the linear model, per unit of run differential in `unit`.
struct Slope {
    double beta = 0.0;
    Unit unit = Unit::PerGame;
};

/// League-average runs scored per team, at a stated unit.
struct LeagueAverage {
    double value = 0.0;
    Unit unit = Unit::PerGame;
};

/// Which model produced a winning percentage. Only Exact is guaranteed to
/// stay inside (0, 1); approximants are never clamped.
enum class WpSource { Exact, Linear, Taylor1, Taylor2, LogApprox, RatioApprox };

const char* to_string(WpSource source);

struct WinPct {
    double value = 0.0;
    WpSource source = WpSource::Exact;
};

/// Exact won-loss formula rs^g / (rs^g + ra^g). Scale invariant, so either
/// unit works as long as rs and ra agree.
WinPct pythagorean_wp(RunRate rs, RunRate ra, Exponent gamma);

/// Linear model 0.500 + beta * (rs - ra). Output is not clamped to [0, 1].
WinPct linear_wp(RunRate rs, RunRate ra, Slope beta);

/// gamma = 4 * beta * r_ave. A zero or negative slope yields an Exponent
/// with valid() == false.
Exponent gamma_from_beta(Slope beta, LeagueAverage r_ave);

/// beta = gamma / (4 * r_ave); exact algebraic inverse of gamma_from_beta.
Slope beta_from_gamma(Exponent gamma, LeagueAverage r_ave);

/// r_ave = gamma / (4 * beta), in the unit of beta's denominator.
LeagueAverage r_ave_from_beta_gamma(Slope beta, Exponent gamma);

/// Tangent-plane approximation about (r_ave, r_ave):
/// 0.500 + (gamma / (4 r_ave)) * (rs - ra).
WinPct taylor1_wp(RunRate rs, RunRate ra, Exponent gamma, LeagueAverage r_ave);

/// Second-order expansion about (r_ave, r_ave). The pure second-order terms
/// form -(gamma / (8 r_ave^2)) * ((rs - r_ave)^2 - (ra - r_ave)^2); the mixed
/// partial vanishes at the expansion point. See the finite-difference oracle
/// tests that gate these closed forms.
WinPct taylor2_wp(RunRate rs, RunRate ra, Exponent gamma, LeagueAverage r_ave);

/// Log-differential form 0.5 + (gamma / 4) * (ln rs - ln ra).
WinPct appendix_log_form(RunRate rs, RunRate ra, Exponent gamma);

/// Ratio form 0.5 + (gamma / 4) * (rs - ra) / ra.
WinPct appendix_ratio_form(RunRate rs, RunRate ra, Exponent gamma);

/// Logistic rewrite (1 + exp(-gamma (ln rs - ln ra)))^-1 of the exact
/// formula. Algebraically identical to pythagorean_wp; kept as a cross-check
/// computed through an independent floating-point path.
WinPct exact_logit_identity(RunRate rs, RunRate ra, Exponent gamma);

}  // namespace pythag
