#include "pythag/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace pythag {

namespace {

std::string fmt(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
    return buf;
}

WinPct eval_approximant(WpSource source, RunRate rs, RunRate ra, Exponent gamma,
                        LeagueAverage r_ave) {
    switch (source) {
        case WpSource::Exact: return pythagorean_wp(rs, ra, gamma);
        case WpSource::Taylor1: return taylor1_wp(rs, ra, gamma, r_ave);
        case WpSource::Taylor2: return taylor2_wp(rs, ra, gamma, r_ave);
        case WpSource::LogApprox: return appendix_log_form(rs, ra, gamma);
        case WpSource::RatioApprox: return appendix_ratio_form(rs, ra, gamma);
        case WpSource::Linear: break;
    }
    throw DomainError("unsupported approximant");
}

}  // namespace

std::string render_table(const std::vector<SeasonFitRow>& rows, Format format) {
    std::ostringstream out;
    if (format == Format::Csv) {
        out << "season,alpha,beta,r_ave,gamma,gamma_lo,gamma_hi,r_squared\n";
        for (const auto& row : rows) {
            if (!row.ok) {
                out << row.season << ",error: " << row.error << "\n";
                continue;
            }
            out << row.season << ',' << fmt(row.fit.alpha_hat, 6) << ','
                << fmt(row.fit.beta_hat.beta, 6) << ',' << fmt(row.gamma.r_ave_used.value, 6)
                << ',' << fmt(row.gamma.gamma_hat.gamma, 6) << ','
                << fmt(row.gamma.ci_low, 6) << ',' << fmt(row.gamma.ci_high, 6) << ','
                << fmt(row.fit.r_squared, 6) << "\n";
        }
        return out.str();
    }

    out << "| season | alpha | beta  | R_ave | gamma | gamma_lo | gamma_hi | R^2   |\n";
    out << "|--------|-------|-------|-------|-------|----------|----------|-------|\n";
    for (const auto& row : rows) {
        if (!row.ok) {
            out << "| " << row.season << " | error: " << row.error << " |\n";
            continue;
        }
        out << "| " << row.season << " | " << fmt(row.fit.alpha_hat, 3) << " | "
            << fmt(row.fit.beta_hat.beta, 3) << " | " << fmt(row.gamma.r_ave_used.value, 3)
            << " | " << fmt(row.gamma.gamma_hat.gamma, 3) << " | "
            << fmt(row.gamma.ci_low, 3) << "    | " << fmt(row.gamma.ci_high, 3)
            << "    | " << fmt(row.fit.r_squared, 3) << " |\n";
    }
    return out.str();
}

std::string render_fit_detail(const SeasonFitRow& row) {
    std::ostringstream out;
    out << "season:     " << row.season << "\n";
    if (!row.ok) {
        out << "error:      " << row.error << "\n";
        return out.str();
    }
    out << "n_teams:    " << row.fit.n << "\n";
    out << "intercept:  "
        << (row.fit.intercept_mode == InterceptMode::Free ? "free" : "fixed at 0.500")
        << "\n";
    out << "alpha:      " << fmt(row.fit.alpha_hat, 6) << "\n";
    out << "beta:       " << fmt(row.fit.beta_hat.beta, 6) << " per run differential ("
        << to_string(row.fit.beta_hat.unit) << ")\n";
    out << "se_beta:    " << fmt(row.fit.se_beta, 6) << "\n";
    out << "df:         " << row.fit.df << "\n";
    out << "r_squared:  " << fmt(row.fit.r_squared, 6) << "\n";
    out << "p_value:    " << fmt(beta_p_value(row.fit), 9) << "\n";
    out << "r_ave:      " << fmt(row.gamma.r_ave_used.value, 6) << " ("
        << to_string(row.gamma.r_ave_used.unit) << ")\n";
    out << "gamma:      " << fmt(row.gamma.gamma_hat.gamma, 6) << "\n";
    out << "gamma_ci:   [" << fmt(row.gamma.ci_low, 6) << ", "
        << fmt(row.gamma.ci_high, 6) << "]  (level " << fmt(row.gamma.level, 4)
        << ", m=" << row.gamma.m << ")\n";
    return out.str();
}

ApproxGridReport evaluate_approx_grid(const ApproxGridSpec& spec) {
    if (!(spec.step > 0.0)) throw DomainError("grid step must be positive");
    if (!(spec.rs_min > 0.0) || !(spec.ra_min > 0.0)) {
        throw DomainError("grid bounds must be positive");
    }
    if (spec.rs_max < spec.rs_min || spec.ra_max < spec.ra_min) {
        throw DomainError("grid upper bounds below lower bounds");
    }
    const long long nx =
        static_cast<long long>(std::floor((spec.rs_max - spec.rs_min) / spec.step + 1e-9)) + 1;
    const long long ny =
        static_cast<long long>(std::floor((spec.ra_max - spec.ra_min) / spec.step + 1e-9)) + 1;
    if (nx * ny > 10'000'000LL) {
        throw ResourceError("grid has " + std::to_string(nx * ny) +
                            " points, cap is 10^7");
    }

    const WpSource sources[] = {WpSource::Exact, WpSource::Taylor1, WpSource::Taylor2,
                                WpSource::LogApprox, WpSource::RatioApprox};
    ApproxGridReport report;
    report.spec = spec;
    report.points = nx * ny;
    for (WpSource s : sources) {
        ApproximantStats st;
        st.source = s;
        st.max_abs_err = 0.0;
        st.argmax_rs = spec.rs_min;
        st.argmax_ra = spec.ra_min;
        st.wp_min = std::numeric_limits<double>::infinity();
        st.wp_max = -std::numeric_limits<double>::infinity();
        report.rows.push_back(st);
    }

    for (long long i = 0; i < nx; ++i) {
        const double rs = spec.rs_min + static_cast<double>(i) * spec.step;
        for (long long j = 0; j < ny; ++j) {
            const double ra = spec.ra_min + static_cast<double>(j) * spec.step;
            const RunRate rrs{rs, spec.unit};
            const RunRate rra{ra, spec.unit};
            const double exact = pythagorean_wp(rrs, rra, spec.gamma).value;
            for (auto& st : report.rows) {
                const double wp = st.source == WpSource::Exact
                                      ? exact
                                      : eval_approximant(st.source, rrs, rra, spec.gamma,
                                                         spec.r_ave)
                                            .value;
                const double err = std::fabs(wp - exact);
                if (err > st.max_abs_err) {
                    st.max_abs_err = err;
                    st.argmax_rs = rs;
                    st.argmax_ra = ra;
                }
                st.wp_min = std::min(st.wp_min, wp);
                st.wp_max = std::max(st.wp_max, wp);
            }
        }
    }
    return report;
}

std::string render_grid(const ApproxGridReport& report, Format format) {
    std::ostringstream out;
    if (format == Format::Csv) {
        out << "approximant,max_abs_err,argmax_rs,argmax_ra,wp_min,wp_max\n";
        for (const auto& st : report.rows) {
            out << to_string(st.source) << ',' << fmt(st.max_abs_err, 6) << ','
                << fmt(st.argmax_rs, 6) << ',' << fmt(st.argmax_ra, 6) << ','
                << fmt(st.wp_min, 6) << ',' << fmt(st.wp_max, 6) << "\n";
        }
        return out.str();
    }
    out << "grid: rs in [" << fmt(report.spec.rs_min, 3) << ", "
        << fmt(report.spec.rs_max, 3) << "], ra in [" << fmt(report.spec.ra_min, 3)
        << ", " << fmt(report.spec.ra_max, 3) << "], step " << fmt(report.spec.step, 3)
        << " (" << to_string(report.spec.unit) << ", " << report.points << " points)\n";
    out << "| approximant | max_abs_err | argmax_rs | argmax_ra | wp_min | wp_max |\n";
    out << "|-------------|-------------|-----------|-----------|--------|--------|\n";
    for (const auto& st : report.rows) {
        out << "| " << to_string(st.source) << " | " << fmt(st.max_abs_err, 6) << " | "
            << fmt(st.argmax_rs, 3) << " | " << fmt(st.argmax_ra, 3) << " | "
            << fmt(st.wp_min, 3) << " | " << fmt(st.wp_max, 3) << " |\n";
    }
    return out.str();
}

std::string render_svg_scatter(const SeasonDataset& ds, const SeasonFitRow& row) {
    if (!row.ok) throw DomainError("cannot plot a failed fit: " + row.error);
    const auto points = to_regression_points(ds);

    const double width = 640.0;
    const double height = 480.0;
    const double ml = 60.0, mr = 20.0, mt = 40.0, mb = 50.0;

    double xmin = points[0].x, xmax = points[0].x;
    double ymin = points[0].y, ymax = points[0].y;
    for (const auto& p : points) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    const double xpad = std::max(0.05, 0.08 * (xmax - xmin));
    const double ypad = std::max(0.02, 0.08 * (ymax - ymin));
    xmin -= xpad; xmax += xpad;
    ymin -= ypad; ymax += ypad;

    auto sx = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (width - ml - mr); };
    auto sy = [&](double y) { return height - mb - (y - ymin) / (ymax - ymin) * (height - mt - mb); };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // axes drawn as paths so the fitted line is the only <line> element
    svg << "<path d=\"M " << ml << " " << mt << " L " << ml << " " << (height - mb)
        << " L " << (width - mr) << " " << (height - mb)
        << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
    svg << "<text x=\"" << (width / 2) << "\" y=\"" << (height - 12)
        << "\" text-anchor=\"middle\" font-size=\"13\">run differential per game</text>\n";
    svg << "<text x=\"16\" y=\"" << (height / 2)
        << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 16 "
        << (height / 2) << ")\">winning percentage</text>\n";
    svg << "<text x=\"" << (width / 2) << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">season "
        << ds.season << "</text>\n";

    const double y0 = row.fit.alpha_hat + row.fit.beta_hat.beta * xmin;
    const double y1 = row.fit.alpha_hat + row.fit.beta_hat.beta * xmax;
    svg << "<line x1=\"" << fmt(sx(xmin), 2) << "\" y1=\"" << fmt(sy(y0), 2) << "\" x2=\""
        << fmt(sx(xmax), 2) << "\" y2=\"" << fmt(sy(y1), 2)
        << "\" stroke=\"#c0392b\" stroke-width=\"1.5\"/>\n";

    for (const auto& p : points) {
        svg << "<circle cx=\"" << fmt(sx(p.x), 2) << "\" cy=\"" << fmt(sy(p.y), 2)
            << "\" r=\"3\" fill=\"#2c3e50\"/>\n";
    }

    svg << "<text x=\"" << (ml + 10) << "\" y=\"" << (mt + 16)
        << "\" font-size=\"12\">beta=" << fmt(row.fit.beta_hat.beta, 4) << "  gamma="
        << fmt(row.gamma.gamma_hat.gamma, 3) << "  R2=" << fmt(row.fit.r_squared, 3)
        << "</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace pythag
