#include "pythag/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

namespace pythag {

namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    fields.push_back(cur);
    return fields;
}

int parse_int(const std::string& field, const char* what, std::size_t line_no) {
    int value = 0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw ParseError(std::string("bad integer for ") + what + ": '" + field + "'",
                         line_no);
    }
    return value;
}

void validate_record(const TeamSeason& r, std::size_t line_no) {
    auto fail = [&](const std::string& why) {
        throw ValidationError("record " + r.team + "/" + std::to_string(r.season) +
                              " invalid: " + why + " (line " + std::to_string(line_no) +
                              ")");
    };
    if (r.games < 1) fail("games must be positive");
    if (r.wins < 0 || r.losses < 0) fail("negative wins or losses");
    if (r.wins + r.losses > r.games) fail("wins + losses exceed games");
    if (r.wins + r.losses < 1) fail("no decisions");
    if (r.runs_scored < 0 || r.runs_allowed < 0) fail("negative run totals");
}

}  // namespace

std::vector<TeamSeason> parse_standings(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw SchemaError("empty input: missing header");
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kStandingsHeader) {
        throw SchemaError(std::string("unexpected header, want '") + kStandingsHeader +
                          "'");
    }

    std::vector<TeamSeason> records;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto fields = split_csv(line);
        if (fields.size() != 8) {
            throw SchemaError("expected 8 columns, got " + std::to_string(fields.size()) +
                              " (line " + std::to_string(line_no) + ")");
        }
        TeamSeason r;
        r.season = parse_int(fields[0], "season", line_no);
        r.team = fields[1];
        r.league = fields[2];
        r.games = parse_int(fields[3], "games", line_no);
        r.wins = parse_int(fields[4], "wins", line_no);
        r.losses = parse_int(fields[5], "losses", line_no);
        r.runs_scored = parse_int(fields[6], "runs_scored", line_no);
        r.runs_allowed = parse_int(fields[7], "runs_allowed", line_no);
        validate_record(r, line_no);
        records.push_back(std::move(r));
    }
    return records;
}

std::vector<TeamSeason> load_standings(const std::string& path) {
    if (path == "-") {
        return parse_standings(std::cin);
    }
    std::ifstream in(path);
    if (!in) {
        throw NotFoundError("cannot open standings file: " + path);
    }
    return parse_standings(in);
}

std::string serialize_standings(std::span<const TeamSeason> records) {
    std::ostringstream out;
    out << kStandingsHeader << '\n';
    for (const auto& r : records) {
        out << r.season << ',' << r.team << ',' << r.league << ',' << r.games << ','
            << r.wins << ',' << r.losses << ',' << r.runs_scored << ','
            << r.runs_allowed << '\n';
    }
    return out.str();
}

std::vector<int> seasons_present(std::span<const TeamSeason> records) {
    std::vector<int> years;
    years.reserve(records.size());
    for (const auto& r : records) years.push_back(r.season);
    std::sort(years.begin(), years.end());
    years.erase(std::unique(years.begin(), years.end()), years.end());
    return years;
}

SeasonDataset build_season_dataset(std::span<const TeamSeason> records, int season) {
    SeasonDataset ds;
    ds.season = season;
    long long total_runs = 0;
    long long total_games = 0;
    for (const auto& r : records) {
        if (r.season != season) continue;
        ds.records.push_back(r);
        total_runs += r.runs_scored;
        total_games += r.games;
    }
    if (ds.records.empty()) {
        throw NotFoundError("no records for season " + std::to_string(season));
    }
    if (ds.records.size() < 3) {
        throw InsufficientDataError("season " + std::to_string(season) +
                                    " has fewer than 3 teams");
    }
    ds.n_teams = static_cast<int>(ds.records.size());
    ds.r_ave = {static_cast<double>(total_runs) / static_cast<double>(total_games),
                Unit::PerGame};
    return ds;
}

std::vector<SeasonDataset> split_seasons(std::span<const TeamSeason> records) {
    std::vector<SeasonDataset> out;
    for (int year : seasons_present(records)) {
        out.push_back(build_season_dataset(records, year));
    }
    return out;
}

std::vector<RegressionPoint> to_regression_points(const SeasonDataset& ds) {
    std::vector<RegressionPoint> points;
    points.reserve(ds.records.size());
    for (const auto& r : ds.records) {
        const int decisions = r.wins + r.losses;
        if (decisions == 0) {
            throw ValidationError("record " + r.team + "/" + std::to_string(r.season) +
                                  " has no decisions");
        }
        RegressionPoint p;
        p.y = static_cast<double>(r.wins) / decisions;
        p.x = static_cast<double>(r.runs_scored - r.runs_allowed) / r.games;
        p.weight = r.games;
        points.push_back(p);
    }
    return points;
}

}  // namespace pythag
