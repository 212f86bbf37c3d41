#include "pythag/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pythag/ingest.hpp"

namespace pythag {

namespace {

// Continued fraction for the incomplete beta function (modified Lentz).
double ibeta_cf(double a, double b, double x) {
    constexpr int kMaxIter = 10000;
    constexpr double kEps = 1e-15;
    constexpr double kFpMin = 1e-300;

    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kFpMin) d = kFpMin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kFpMin) d = kFpMin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) return h;
    }
    throw DomainError("incomplete beta continued fraction failed to converge");
}

// xc = 1 - x passed explicitly so callers can avoid cancellation near x = 1.
double ibeta_reg_impl(double a, double b, double x, double xc) {
    if (x <= 0.0) return 0.0;
    if (xc <= 0.0) return 1.0;
    const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                            a * std::log(x) + b * std::log(xc);
    const double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return front * ibeta_cf(a, b, x) / a;
    }
    return 1.0 - front * ibeta_cf(b, a, xc) / b;
}

double t_pdf(double t, long df) {
    constexpr double kPi = 3.14159265358979323846;
    const double nu = static_cast<double>(df);
    const double ln =
        std::lgamma((nu + 1.0) / 2.0) - std::lgamma(nu / 2.0) -
        0.5 * std::log(nu * kPi) - (nu + 1.0) / 2.0 * std::log1p(t * t / nu);
    return std::exp(ln);
}

// Acklam's rational approximation to the standard normal quantile; used only
// as a Newton starting point.
double normal_quantile_approx(double p) {
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425;
    if (p < plow) {
        const double q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (p > 1.0 - plow) {
        const double q = std::sqrt(-2.0 * std::log(1.0 - p));
        return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    const double q = p - 0.5;
    const double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

}  // namespace

double ibeta_reg(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0)) throw DomainError("ibeta_reg requires a, b > 0");
    if (x < 0.0 || x > 1.0) throw DomainError("ibeta_reg requires x in [0, 1]");
    return ibeta_reg_impl(a, b, x, 1.0 - x);
}

double t_cdf(double t, long df) {
    if (df < 1) throw DomainError("degrees of freedom must be >= 1");
    if (!std::isfinite(t)) return t > 0.0 ? 1.0 : 0.0;
    const double nu = static_cast<double>(df);
    const double x = nu / (nu + t * t);
    const double xc = t * t / (nu + t * t);
    const double tail = 0.5 * ibeta_reg_impl(nu / 2.0, 0.5, x, xc);
    return t >= 0.0 ? 1.0 - tail : tail;
}

double t_quantile(double p, long df) {
    if (!(p > 0.0) || !(p < 1.0)) throw DomainError("quantile probability must be in (0, 1)");
    if (df < 1) throw DomainError("degrees of freedom must be >= 1");
    if (p == 0.5) return 0.0;
    if (p < 0.5) return -t_quantile(1.0 - p, df);

    // Bracket the root, then safeguarded Newton.
    double lo = 0.0;
    double hi = std::max(1.0, normal_quantile_approx(p) * 2.0);
    while (t_cdf(hi, df) < p) {
        hi *= 2.0;
        if (hi > 1e300) throw DomainError("t_quantile bracket overflow");
    }
    double t = std::min(std::max(normal_quantile_approx(p), lo), hi);
    for (int iter = 0; iter < 200; ++iter) {
        const double err = t_cdf(t, df) - p;
        if (err > 0.0) {
            hi = t;
        } else {
            lo = t;
        }
        const double deriv = t_pdf(t, df);
        double next = deriv > 0.0 ? t - err / deriv : t;
        if (!(next > lo) || !(next < hi)) next = 0.5 * (lo + hi);
        if (std::fabs(next - t) <= 1e-14 * std::max(1.0, std::fabs(t))) {
            return next;
        }
        t = next;
    }
    return t;
}

LinearFit fit_season(std::span<const RegressionPoint> points, InterceptMode mode,
                     Unit x_unit) {
    const int n = static_cast<int>(points.size());
    if (n < 3) throw InsufficientDataError("need at least 3 points to fit");

    double xmin = points[0].x;
    double xmax = points[0].x;
    double sx = 0.0;
    double sy = 0.0;
    for (const auto& p : points) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        sx += p.x;
        sy += p.y;
    }
    if (xmin == xmax) {
        throw DegenerateDesignError("regressor has zero variance");
    }
    const double xbar = sx / n;
    const double ybar = sy / n;

    LinearFit fit;
    fit.n = n;
    fit.intercept_mode = mode;
    fit.beta_hat.unit = x_unit;

    double denom = 0.0;  // Sxx about the mean (free) or the origin (fixed)
    if (mode == InterceptMode::Free) {
        double sxy = 0.0;
        for (const auto& p : points) {
            denom += (p.x - xbar) * (p.x - xbar);
            sxy += (p.x - xbar) * (p.y - ybar);
        }
        fit.beta_hat.beta = sxy / denom;
        fit.alpha_hat = ybar - fit.beta_hat.beta * xbar;
        fit.df = n - 2;
    } else {
        double sxy = 0.0;
        for (const auto& p : points) {
            denom += p.x * p.x;
            sxy += p.x * (p.y - 0.5);
        }
        if (denom == 0.0) throw DegenerateDesignError("regressor is identically zero");
        fit.beta_hat.beta = sxy / denom;
        fit.alpha_hat = 0.5;
        fit.df = n - 1;
    }

    double rss = 0.0;
    double tss = 0.0;
    for (const auto& p : points) {
        const double resid = p.y - (fit.alpha_hat + fit.beta_hat.beta * p.x);
        rss += resid * resid;
        tss += (p.y - ybar) * (p.y - ybar);
    }
    const double sigma2 = rss / fit.df;
    fit.se_beta = std::sqrt(sigma2 / denom);
    // A fixed intercept can push RSS past TSS; the reported R^2 stays in [0, 1].
    fit.r_squared = tss > 0.0 ? std::clamp(1.0 - rss / tss, 0.0, 1.0) : 1.0;
    return fit;
}

Interval beta_ci(const LinearFit& fit, double level, int m) {
    if (!(level > 0.0) || !(level < 1.0)) throw DomainError("level must be in (0, 1)");
    if (m < 1) throw DomainError("Bonferroni family size must be >= 1");
    const double adjusted = level / m;
    const double tq = t_quantile(1.0 - adjusted / 2.0, fit.df);
    return {fit.beta_hat.beta - tq * fit.se_beta, fit.beta_hat.beta + tq * fit.se_beta};
}

GammaEstimate gamma_estimate(const LinearFit& fit, LeagueAverage r_ave, double level,
                             int m) {
    if (fit.beta_hat.unit != r_ave.unit) {
        throw UnitError("fit x unit does not match league-average unit");
    }
    if (!(r_ave.value > 0.0)) throw DomainError("league average must be positive");
    const Interval bi = beta_ci(fit, level, m);
    GammaEstimate est;
    est.gamma_hat = gamma_from_beta(fit.beta_hat, r_ave);
    est.ci_low = 4.0 * r_ave.value * bi.low;
    est.ci_high = 4.0 * r_ave.value * bi.high;
    est.level = level;
    est.m = m;
    est.r_ave_used = r_ave;
    return est;
}

double beta_p_value(const LinearFit& fit) {
    if (fit.se_beta == 0.0) return fit.beta_hat.beta == 0.0 ? 1.0 : 0.0;
    const double tstat = std::fabs(fit.beta_hat.beta / fit.se_beta);
    return 2.0 * (1.0 - t_cdf(tstat, fit.df));
}

SeasonFitRow fit_dataset(const SeasonDataset& ds, InterceptMode mode, double level,
                         int m) {
    SeasonFitRow row;
    row.season = ds.season;
    const auto points = to_regression_points(ds);
    row.fit = fit_season(points, mode);
    row.gamma = gamma_estimate(row.fit, ds.r_ave, level, m);
    row.ok = true;
    return row;
}

std::vector<SeasonFitRow> fit_all_seasons(const std::vector<SeasonDataset>& datasets,
                                          InterceptMode mode, double level,
                                          std::optional<int> m) {
    const int m_used = m.value_or(std::max<int>(1, static_cast<int>(datasets.size())));
    std::vector<SeasonFitRow> rows;
    rows.reserve(datasets.size());
    for (const auto& ds : datasets) {
        try {
            rows.push_back(fit_dataset(ds, mode, level, m_used));
        } catch (const Error& e) {
            SeasonFitRow row;
            row.season = ds.season;
            row.ok = false;
            row.error = e.what();
            rows.push_back(row);
        }
    }
    std::sort(rows.begin(), rows.end(),
              [](const SeasonFitRow& a, const SeasonFitRow& b) { return a.season < b.season; });
    return rows;
}

}  // namespace pythag
