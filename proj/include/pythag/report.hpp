#pragma once

#include <string>
#include <vector>

#include "pythag/estimator.hpp"
#include "pythag/ingest.hpp"

namespace pythag {

enum class Format { Csv, Markdown };

/// Season table with the usual column order: season, alpha, beta, r_ave,
/// gamma, gamma CI bounds, R^2. CSV carries 6 decimals, markdown 3. Output
/// is deterministic (no timestamps).
std::string render_table(const std::vector<SeasonFitRow>& rows, Format format);

/// Detailed single-season report (key: value lines).
std::string render_fit_detail(const SeasonFitRow& row);

struct ApproxGridSpec {
    Exponent gamma;
    LeagueAverage r_ave;
    double rs_min = 0.0;
    double rs_max = 0.0;
    double ra_min = 0.0;
    double ra_max = 0.0;
    double step = 0.0;
    Unit unit = Unit::PerGame;
};

struct ApproximantStats {
    WpSource source = WpSource::Exact;
    double max_abs_err = 0.0;  // vs the exact formula
    double argmax_rs = 0.0;
    double argmax_ra = 0.0;
    double wp_min = 0.0;
    double wp_max = 0.0;
};

struct ApproxGridReport {
    ApproxGridSpec spec;
    long long points = 0;
    std::vector<ApproximantStats> rows;  // exact first, then each approximant
};

/// Evaluate the exact formula and every approximant over the rectangle.
/// Grids above 10^7 points are rejected with ResourceError.
ApproxGridReport evaluate_approx_grid(const ApproxGridSpec& spec);

std::string render_grid(const ApproxGridReport& report, Format format);

/// Standalone SVG scatter of (run differential per game, winning pct) with
/// the fitted line overlaid; one <circle> per team and exactly one <line>.
std::string render_svg_scatter(const SeasonDataset& ds, const SeasonFitRow& row);

}  // namespace pythag
