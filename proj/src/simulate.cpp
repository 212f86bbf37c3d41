#include "pythag/simulate.hpp"

#include <cmath>
#include <cstdio>
#include <random>

#include "pythag/estimator.hpp"

namespace pythag {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Deterministic across platforms: the standard pins mt19937_64's output, and
// the transforms below avoid implementation-defined std distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // uniform in [0, 1), 53-bit resolution
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform();  // (0, 1]
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(kTwoPi * u2);
        have_spare_ = true;
        return r * std::cos(kTwoPi * u2);
    }

    int binomial(int trials, double p) {
        int wins = 0;
        for (int g = 0; g < trials; ++g) {
            if (uniform() < p) ++wins;
        }
        return wins;
    }

private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

void validate(const SimConfig& cfg) {
    if (cfg.n_teams < 3) throw DomainError("simulation needs at least 3 teams");
    if (cfg.games < 1) throw DomainError("games must be positive");
    if (!(cfg.true_gamma > 0.0)) throw DomainError("true gamma must be positive");
    if (!(cfg.r_ave > 0.0)) throw DomainError("league average must be positive");
    if (cfg.spread < 0.0) throw DomainError("spread must be non-negative");
    if (!(cfg.r_ave - 3.0 * cfg.spread > 0.0)) {
        throw DomainError("r_ave - 3*spread must stay positive");
    }
}

}  // namespace

SeasonDataset simulate_season(const SimConfig& cfg) {
    validate(cfg);
    Rng rng(cfg.seed);

    const int n = cfg.n_teams;
    std::vector<double> rs_rate(n);
    std::vector<double> ra_rate(n);
    for (int i = 0; i < n; ++i) {
        do {
            rs_rate[i] = cfg.r_ave + cfg.spread * rng.normal();
        } while (rs_rate[i] <= 0.0);
        do {
            ra_rate[i] = cfg.r_ave + cfg.spread * rng.normal();
        } while (ra_rate[i] <= 0.0);
    }

    if (cfg.balance) {
        double sum_rs = 0.0;
        double sum_ra = 0.0;
        for (int i = 0; i < n; ++i) {
            sum_rs += rs_rate[i];
            sum_ra += ra_rate[i];
        }
        const double shift = (sum_ra - sum_rs) / (2.0 * n);
        for (int i = 0; i < n; ++i) {
            rs_rate[i] += shift;
            ra_rate[i] -= shift;
            if (rs_rate[i] <= 0.0 || ra_rate[i] <= 0.0) {
                throw DomainError("balance shift drove a run rate non-positive");
            }
        }
    }

    std::vector<TeamSeason> records;
    records.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double p = pythagorean_wp(per_game(rs_rate[i]), per_game(ra_rate[i]),
                                        {cfg.true_gamma})
                             .value;
        const int wins = rng.binomial(cfg.games, p);

        TeamSeason t;
        t.season = 0;
        char name[16];
        std::snprintf(name, sizeof(name), "T%03d", i + 1);
        t.team = name;
        t.league = "SIM";
        t.games = cfg.games;
        t.wins = wins;
        t.losses = cfg.games - wins;
        t.runs_scored = static_cast<int>(std::llround(rs_rate[i] * cfg.games));
        t.runs_allowed = static_cast<int>(std::llround(ra_rate[i] * cfg.games));
        records.push_back(std::move(t));
    }
    return build_season_dataset(records, 0);
}

CoverageResult coverage_experiment(const SimConfig& cfg, int runs, double level) {
    validate(cfg);
    if (runs < 100) throw DomainError("coverage experiment needs at least 100 runs");
    if (!(level > 0.0) || !(level < 1.0)) throw DomainError("level must be in (0, 1)");

    const double alpha = 1.0 - level;  // level is the nominal confidence level
    CoverageResult result;
    result.runs = runs;
    for (int k = 0; k < runs; ++k) {
        SimConfig run_cfg = cfg;
        run_cfg.seed = cfg.seed ^ static_cast<std::uint64_t>(k);
        const SeasonDataset ds = simulate_season(run_cfg);
        const auto points = to_regression_points(ds);
        const LinearFit fit = fit_season(points);
        const GammaEstimate est = gamma_estimate(fit, ds.r_ave, alpha, 1);
        if (est.ci_low <= cfg.true_gamma && cfg.true_gamma <= est.ci_high) {
            ++result.covered;
        }
    }
    result.fraction = static_cast<double>(result.covered) / runs;
    return result;
}

}  // namespace pythag
