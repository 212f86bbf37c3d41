#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "pythag/core.hpp"
#include "pythag/estimator.hpp"

namespace pythag {

/// One team's season line. Runs are season totals. wins + losses may fall
/// short of games (ties / unplayed decisions), never exceed it.
struct TeamSeason {
    int season = 0;
    std::string team;
    std::string league;
    int games = 0;
    int wins = 0;
    int losses = 0;
    int runs_scored = 0;
    int runs_allowed = 0;
};

/// All team lines for one season plus the pooled league average
/// (total runs scored / total games, runs per game).
struct SeasonDataset {
    int season = 0;
    std::vector<TeamSeason> records;
    LeagueAverage r_ave;
    int n_teams = 0;
};

inline constexpr const char* kStandingsHeader =
    "season,team,league,games,wins,losses,runs_scored,runs_allowed";

/// Parse the CSV standings schema. The header line is required; data rows
/// are returned in file order. Throws SchemaError / ParseError /
/// ValidationError with the offending line.
std::vector<TeamSeason> parse_standings(std::istream& in);

/// Load from a path; "-" reads standard input.
std::vector<TeamSeason> load_standings(const std::string& path);

/// Inverse of parse_standings for the data rows (header included).
std::string serialize_standings(std::span<const TeamSeason> records);

/// Sorted distinct seasons in the records.
std::vector<int> seasons_present(std::span<const TeamSeason> records);

/// Filter to one season and derive the league average. Requires >= 3 teams.
SeasonDataset build_season_dataset(std::span<const TeamSeason> records, int season);

/// Split a multi-season record set into per-season datasets, sorted by season.
std::vector<SeasonDataset> split_seasons(std::span<const TeamSeason> records);

/// Per team: y = wins / (wins + losses), x = run differential per game,
/// weight = games.
std::vector<RegressionPoint> to_regression_points(const SeasonDataset& ds);

}  // namespace pythag
