#include "pythag/core.hpp"

#include <cmath>

namespace pythag {

namespace {

void require_positive(double value, const char* what) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw DomainError(std::string(what) + " must be positive and finite");
    }
}

void require_same_unit(Unit a, Unit b, const char* what) {
    if (a != b) {
        throw UnitError(std::string("unit mismatch in ") + what + ": " + to_string(a) +
                        " vs " + to_string(b));
    }
}

void require_valid_gamma(Exponent gamma) {
    if (!gamma.valid()) {
        throw DomainError("exponent must be positive and finite");
    }
}

}  // namespace

const char* to_string(Unit unit) {
    return unit == Unit::PerGame ? "per-game" : "total";
}

const char* to_string(WpSource source) {
    switch (source) {
        case WpSource::Exact: return "exact";
        case WpSource::Linear: return "linear";
        case WpSource::Taylor1: return "taylor1";
        case WpSource::Taylor2: return "taylor2";
        case WpSource::LogApprox: return "log-form";
        case WpSource::RatioApprox: return "ratio-form";
    }
    return "?";
}

bool Exponent::valid() const { return gamma > 0.0 && std::isfinite(gamma); }

RunRate to_per_game(RunRate rate, double games) {
    require_positive(games, "games");
    if (rate.unit == Unit::PerGame) return rate;
    return {rate.value / games, Unit::PerGame};
}

RunRate to_season_total(RunRate rate, double games) {
    require_positive(games, "games");
    if (rate.unit == Unit::SeasonTotal) return rate;
    return {rate.value * games, Unit::SeasonTotal};
}

WinPct pythagorean_wp(RunRate rs, RunRate ra, Exponent gamma) {
    require_same_unit(rs.unit, ra.unit, "pythagorean_wp");
    require_positive(rs.value, "runs scored");
    require_positive(ra.value, "runs allowed");
    require_valid_gamma(gamma);
    const double ps = std::pow(rs.value, gamma.gamma);
    const double pa = std::pow(ra.value, gamma.gamma);
    return {ps / (ps + pa), WpSource::Exact};
}

WinPct linear_wp(RunRate rs, RunRate ra, Slope beta) {
    require_same_unit(rs.unit, ra.unit, "linear_wp");
    require_same_unit(rs.unit, beta.unit, "linear_wp");
    return {0.500 + beta.beta * (rs.value - ra.value), WpSource::Linear};
}

Exponent gamma_from_beta(Slope beta, LeagueAverage r_ave) {
    require_same_unit(beta.unit, r_ave.unit, "gamma_from_beta");
    require_positive(r_ave.value, "league average");
    return {4.0 * beta.beta * r_ave.value};
}

Slope beta_from_gamma(Exponent gamma, LeagueAverage r_ave) {
    require_valid_gamma(gamma);
    require_positive(r_ave.value, "league average");
    return {gamma.gamma / (4.0 * r_ave.value), r_ave.unit};
}

LeagueAverage r_ave_from_beta_gamma(Slope beta, Exponent gamma) {
    require_positive(beta.beta, "slope");
    require_valid_gamma(gamma);
    return {gamma.gamma / (4.0 * beta.beta), beta.unit};
}

WinPct taylor1_wp(RunRate rs, RunRate ra, Exponent gamma, LeagueAverage r_ave) {
    require_same_unit(rs.unit, ra.unit, "taylor1_wp");
    require_same_unit(rs.unit, r_ave.unit, "taylor1_wp");
    require_positive(rs.value, "runs scored");
    require_positive(ra.value, "runs allowed");
    require_valid_gamma(gamma);
    require_positive(r_ave.value, "league average");
    const double slope = gamma.gamma / (4.0 * r_ave.value);
    return {0.500 + slope * (rs.value - ra.value), WpSource::Taylor1};
}

WinPct taylor2_wp(RunRate rs, RunRate ra, Exponent gamma, LeagueAverage r_ave) {
    require_same_unit(rs.unit, ra.unit, "taylor2_wp");
    require_same_unit(rs.unit, r_ave.unit, "taylor2_wp");
    require_positive(rs.value, "runs scored");
    require_positive(ra.value, "runs allowed");
    require_valid_gamma(gamma);
    require_positive(r_ave.value, "league average");
    const double a = r_ave.value;
    const double g = gamma.gamma;
    const double ds = rs.value - a;
    const double da = ra.value - a;
    const double first = (g / (4.0 * a)) * (rs.value - ra.value);
    const double second = -(g / (8.0 * a * a)) * (ds * ds - da * da);
    return {0.500 + first + second, WpSource::Taylor2};
}

WinPct appendix_log_form(RunRate rs, RunRate ra, Exponent gamma) {
    require_same_unit(rs.unit, ra.unit, "appendix_log_form");
    require_positive(rs.value, "runs scored");
    require_positive(ra.value, "runs allowed");
    require_valid_gamma(gamma);
    return {0.5 + (gamma.gamma / 4.0) * (std::log(rs.value) - std::log(ra.value)),
            WpSource::LogApprox};
}

WinPct appendix_ratio_form(RunRate rs, RunRate ra, Exponent gamma) {
    require_same_unit(rs.unit, ra.unit, "appendix_ratio_form");
    require_positive(rs.value, "runs scored");
    require_positive(ra.value, "runs allowed");
    require_valid_gamma(gamma);
    return {0.5 + (gamma.gamma / 4.0) * (rs.value - ra.value) / ra.value,
            WpSource::RatioApprox};
}

WinPct exact_logit_identity(RunRate rs, RunRate ra, Exponent gamma) {
    require_same_unit(rs.unit, ra.unit, "exact_logit_identity");
    require_positive(rs.value, "runs scored");
    require_positive(ra.value, "runs allowed");
    require_valid_gamma(gamma);
    const double u = std::log(rs.value) - std::log(ra.value);
    return {1.0 / (1.0 + std::exp(-gamma.gamma * u)), WpSource::Exact};
}

}  // namespace pythag
