// Acceptance suite: each criterion prints one pass/fail line and fails its
// doctest case on any violation. Criteria run on the bundled standings
// fixture and fixed seeds, so results are deterministic.

#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include <doctest.h>

#include "pythag/report.hpp"
#include "pythag/simulate.hpp"

using namespace pythag;

namespace {

struct Criterion {
    explicit Criterion(std::string name) : name_(std::move(name)) {}

    void expect(bool ok, const std::string& what) {
        if (!ok) failures_.push_back(what);
    }
    void expect_close(double got, double want, double tol, const std::string& what) {
        if (!(std::fabs(got - want) <= tol)) {
            char buf[160];
            std::snprintf(buf, sizeof(buf), "%s: got %.6f want %.6f +- %.4f", what.c_str(),
                          got, want, tol);
            failures_.push_back(buf);
        }
    }
    bool finish() const {
        if (failures_.empty()) {
            std::printf("[PASS] %s\n", name_.c_str());
            return true;
        }
        std::printf("[FAIL] %s\n", name_.c_str());
        for (const auto& f : failures_) std::printf("       - %s\n", f.c_str());
        std::fflush(stdout);
        return false;
    }
    std::string joined() const {
        std::string all;
        for (const auto& f : failures_) all += f + "; ";
        return all;
    }

private:
    std::string name_;
    std::vector<std::string> failures_;
};

double exact(double rs, double ra, double g) {
    return pythagorean_wp(per_game(rs), per_game(ra), {g}).value;
}

// The published per-season estimates the fixture is checked against.
struct TableRow {
    int season;
    double beta, r_ave, gamma, lo, hi, r2;
};
const TableRow kTable[] = {
    {1991, 0.119, 4.308, 2.058, 1.807, 2.310, 0.922},
    {1992, 0.126, 4.117, 2.076, 1.710, 2.442, 0.851},
    {1993, 0.109, 4.598, 2.001, 1.645, 2.359, 0.851},
    {1994, 0.084, 4.923, 1.658, 1.366, 1.951, 0.836},
    {1995, 0.094, 4.847, 1.826, 1.466, 2.185, 0.807},
    {1996, 0.091, 5.036, 1.825, 1.564, 2.085, 0.889},
    {1997, 0.087, 4.767, 1.668, 1.345, 1.991, 0.813},
    {1998, 0.098, 4.790, 1.881, 1.667, 2.095, 0.920},
    {1999, 0.099, 5.085, 2.010, 1.794, 2.226, 0.929},
    {2000, 0.092, 5.140, 1.893, 1.626, 2.160, 0.883},
    {2001, 0.104, 4.775, 1.978, 1.743, 2.215, 0.913},
    {2002, 0.103, 4.618, 1.908, 1.682, 2.134, 0.914},
    {2003, 0.103, 4.728, 1.949, 1.716, 2.181, 0.913},
    {2004, 0.109, 4.814, 2.108, 1.843, 2.374, 0.905},
    {2005, 0.095, 4.586, 1.737, 1.436, 2.040, 0.833},
    {2006, 0.098, 4.858, 1.901, 1.567, 2.235, 0.829},
    {2007, 0.085, 4.797, 1.640, 1.330, 1.951, 0.807},
    {2008, 0.104, 4.651, 1.931, 1.619, 2.244, 0.851},
    {2009, 0.106, 4.613, 1.963, 1.642, 2.284, 0.848},
    {2010, 0.094, 4.366, 1.634, 1.489, 1.780, 0.950},
    {2011, 0.104, 4.283, 1.775, 1.506, 2.045, 0.867},
};

}  // namespace

TEST_CASE("criterion 1") {
    Criterion c("criterion 1: beta/gamma/r_ave conversion anchors");
    const Slope jt{0.00065, Unit::SeasonTotal};
    c.expect_close(gamma_from_beta(jt, {721.0, Unit::SeasonTotal}).gamma, 1.8746, 0.005,
                   "gamma from beta=0.00065, r_ave=721");
    c.expect_close(r_ave_from_beta_gamma(jt, {1.81}).value, 696.15, 0.2,
                   "r_ave from beta=0.00065, gamma=1.81");
    CHECK_MESSAGE(c.finish(), c.joined());
}

TEST_CASE("criterion 2") {
    Criterion c("criterion 2: per-season table reproduction, 1991-2011");
    const auto rec = load_standings(PYTHAG_DATA_FILE);
    const auto rows = fit_all_seasons(split_seasons(rec), InterceptMode::Free, 0.05, 1);
    c.expect(rows.size() == 21, "expected 21 season rows");
    for (const auto& want : kTable) {
        const SeasonFitRow* got = nullptr;
        for (const auto& row : rows) {
            if (row.season == want.season) got = &row;
        }
        if (got == nullptr || !got->ok) {
            c.expect(false, "season " + std::to_string(want.season) + " missing or failed");
            continue;
        }
        const std::string tag = std::to_string(want.season);
        c.expect_close(got->fit.alpha_hat, 0.500, 0.002, tag + " alpha");
        c.expect_close(got->fit.beta_hat.beta, want.beta, 0.003, tag + " beta");
        c.expect_close(got->gamma.r_ave_used.value, want.r_ave, 0.02, tag + " r_ave");
        c.expect_close(got->gamma.gamma_hat.gamma, want.gamma, 0.06, tag + " gamma");
        c.expect_close(got->gamma.ci_low, want.lo, 0.06, tag + " ci low");
        c.expect_close(got->gamma.ci_high, want.hi, 0.06, tag + " ci high");
        c.expect_close(got->fit.r_squared, want.r2, 0.02, tag + " r_squared");
    }
    CHECK_MESSAGE(c.finish(), c.joined());
}

TEST_CASE("criterion 3") {
    Criterion c("criterion 3: Bonferroni-corrected 2010 interval (m=20)");
    const auto rec = load_standings(PYTHAG_DATA_FILE);
    const SeasonDataset ds = build_season_dataset(rec, 2010);
    const SeasonFitRow row = fit_dataset(ds, InterceptMode::Free, 0.05, 20);
    c.expect_close(row.gamma.ci_low, 1.399, 0.06, "2010 m=20 ci low");
    c.expect_close(row.gamma.ci_high, 1.870, 0.06, "2010 m=20 ci high");
    CHECK_MESSAGE(c.finish(), c.joined());
}

TEST_CASE("criterion 4") {
    Criterion c("criterion 4: taylor remainder orders (e1 ~ 1/4, e2 ~ 1/8)");
    const LeagueAverage R{4.5, Unit::PerGame};
    auto e1 = [&](double d) {
        return std::fabs(exact(4.5 + d, 4.5, 1.82) -
                         taylor1_wp(per_game(4.5 + d), per_game(4.5), {1.82}, R).value);
    };
    auto e2 = [&](double d) {
        return std::fabs(exact(4.5 + d, 4.5, 1.82) -
                         taylor2_wp(per_game(4.5 + d), per_game(4.5), {1.82}, R).value);
    };
    double d = 0.4;
    for (int k = 0; k < 4; ++k, d /= 2.0) {
        c.expect(e1(d) > 1e-10 && e2(d) > 1e-10, "errors above the floating floor");
        const double r1 = e1(d / 2.0) / e1(d);
        const double r2 = e2(d / 2.0) / e2(d);
        char buf[96];
        std::snprintf(buf, sizeof(buf), "halving at d=%.4f: e1 ratio %.4f", d, r1);
        c.expect(r1 >= 0.2 && r1 <= 0.3, buf);
        std::snprintf(buf, sizeof(buf), "halving at d=%.4f: e2 ratio %.4f", d, r2);
        c.expect(r2 >= 0.1 && r2 <= 0.16, buf);
    }
    CHECK_MESSAGE(c.finish(), c.joined());
}

TEST_CASE("criterion 5") {
    Criterion c("criterion 5: finite-difference partials match +-gamma/(4 r_ave)");
    for (double g : {1.0, 1.82, 2.0}) {
        for (double a : {4.0, 5.1}) {
            const double h = 1e-4 * a;
            const double fx = (exact(a + h, a, g) - exact(a - h, a, g)) / (2.0 * h);
            const double fy = (exact(a, a + h, g) - exact(a, a - h, g)) / (2.0 * h);
            const double want = g / (4.0 * a);
            char buf[96];
            std::snprintf(buf, sizeof(buf), "df/dx at gamma=%.2f r_ave=%.1f", g, a);
            c.expect(std::fabs(fx - want) / want <= 1e-6, buf);
            std::snprintf(buf, sizeof(buf), "df/dy at gamma=%.2f r_ave=%.1f", g, a);
            c.expect(std::fabs(fy + want) / want <= 1e-6, buf);
        }
    }
    CHECK_MESSAGE(c.finish(), c.joined());
}

TEST_CASE("criterion 6") {
    Criterion c("criterion 6: logistic identity, complement, scale invariance");
    std::mt19937_64 rng(20100403);
    std::uniform_real_distribution<double> runs(2.5, 7.0);
    std::uniform_real_distribution<double> gam(0.7, 2.6);
    for (int i = 0; i < 100; ++i) {
        const double rs = runs(rng), ra = runs(rng), g = gam(rng);
        const double wp = exact(rs, ra, g);
        const double logit = exact_logit_identity(per_game(rs), per_game(ra), {g}).value;
        c.expect(std::fabs(wp - logit) <= 1e-12, "logit identity within 1e-12");
        c.expect(std::fabs(wp + exact(ra, rs, g) - 1.0) <= 1e-12,
                 "complement symmetry within 1e-12");
        for (double s : {0.1, 1.0, 10.0, 162.0}) {
            c.expect(std::fabs(exact(s * rs, s * ra, g) - wp) <= 1e-12,
                     "scale invariance within 1e-12");
        }
    }
    CHECK_MESSAGE(c.finish(), c.joined());
}

// Known statistical shortfall, kept at its stated thresholds: with 30 teams
// the fitted exponent's sampling spread is ~0.035 even at 16,200 games per
// team (binomial noise ~0.004 in WP plus run-rate configuration noise that
// does not shrink with games), so |gamma_hat - 1.82| <= 0.02 holds in only
// ~40-55% of runs, not >= 95%. The check is reported honestly rather than
// widened; the unit suite demonstrates recovery of 1.82 in the mean across
// runs at the same scale.
TEST_CASE("criterion 7") {
    Criterion c("criterion 7: per-run recovery |gamma_hat - 1.82| <= 0.02 at 16200 games");
    SimConfig cfg;
    cfg.n_teams = 30;
    cfg.games = 16200;
    cfg.true_gamma = 1.82;
    cfg.r_ave = 4.5;
    cfg.spread = 0.35;
    cfg.seed = 7;
    int hits = 0;
    for (int k = 0; k < 100; ++k) {
        SimConfig run_cfg = cfg;
        run_cfg.seed = cfg.seed ^ static_cast<std::uint64_t>(k);
        const SeasonDataset ds = simulate_season(run_cfg);
        const LinearFit fit = fit_season(to_regression_points(ds));
        const double g = gamma_estimate(fit, ds.r_ave, 0.05, 1).gamma_hat.gamma;
        if (std::fabs(g - 1.82) <= 0.02) ++hits;
    }
    char buf[96];
    std::snprintf(buf, sizeof(buf), "runs within +-0.02: %d/100 (need >= 95)", hits);
    c.expect(hits >= 95, buf);
    CHECK_MESSAGE(c.finish(), c.joined());
}

TEST_CASE("criterion 8") {
    Criterion c("criterion 8: 95% interval coverage over 2000 seasons in [0.90, 0.985]");
    SimConfig cfg;
    cfg.n_teams = 30;
    cfg.games = 162;
    cfg.true_gamma = 1.82;
    cfg.r_ave = 4.5;
    cfg.spread = 0.35;
    cfg.seed = 424242;
    const CoverageResult res = coverage_experiment(cfg, 2000, 0.95);
    char buf[96];
    std::snprintf(buf, sizeof(buf), "coverage %.4f (%d/%d)", res.fraction, res.covered,
                  res.runs);
    c.expect(res.fraction >= 0.90 && res.fraction <= 0.985, buf);
    CHECK_MESSAGE(c.finish(), c.joined());
}

TEST_CASE("criterion 9") {
    Criterion c("criterion 9: t-quantile accuracy and antisymmetry");
    c.expect_close(t_quantile(0.975, 28), 2.04841, 1e-4, "t(0.975, 28)");
    c.expect_close(t_quantile(0.975, 1000000), 1.95997, 1e-4, "t(0.975, 1e6)");
    for (long df : {1L, 7L, 28L, 240L}) {
        for (double p : {0.51, 0.8, 0.975, 0.999}) {
            c.expect(std::fabs(t_quantile(1.0 - p, df) + t_quantile(p, df)) <= 1e-9,
                     "antisymmetry within 1e-9");
        }
    }
    CHECK_MESSAGE(c.finish(), c.joined());
}
