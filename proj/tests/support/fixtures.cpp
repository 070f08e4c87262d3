#include "fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>

namespace fixtures {

namespace {

Generated from_weights(const Eigen::MatrixXd& archetypes, const Eigen::MatrixXd& weights,
                       std::vector<std::string> column_names, std::vector<std::string> labels,
                       bool round_values) {
    Generated g;
    g.design_archetypes = archetypes;
    g.weights = weights;
    g.data.values = weights * archetypes;
    if (round_values) g.data.values = g.data.values.array().round();
    g.data.column_names = std::move(column_names);
    g.data.row_labels = std::move(labels);
    return g;
}

std::vector<std::string> make_labels(const char* stem, int n, int first = 1) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::string num = std::to_string(first + i);
        if (num.size() < 2) num.insert(num.begin(), '0');
        labels.push_back(stem + num);
    }
    return labels;
}

Eigen::MatrixXd triangle_weights() {
    Eigen::MatrixXd w(23, 3);
    w << 1.00, 0.00, 0.00,  //
        0.00, 1.00, 0.00,   //
        0.00, 0.00, 1.00,   //
        0.90, 0.06, 0.04,   // heavy on vertex 1
        0.85, 0.05, 0.10,   //
        0.83, 0.12, 0.05,   //
        0.05, 0.88, 0.07,   // heavy on vertex 2
        0.08, 0.84, 0.08,   //
        0.04, 0.06, 0.90,   // heavy on vertex 3
        0.10, 0.05, 0.85,   //
        0.60, 0.25, 0.15,   //
        0.55, 0.15, 0.30,   //
        0.45, 0.45, 0.10,   //
        0.33, 0.34, 0.33,   //
        0.25, 0.50, 0.25,   //
        0.20, 0.30, 0.50,   //
        0.15, 0.70, 0.15,   //
        0.12, 0.28, 0.60,   //
        0.40, 0.20, 0.40,   //
        0.50, 0.40, 0.10,   //
        0.30, 0.60, 0.10,   //
        0.22, 0.18, 0.60,   //
        0.70, 0.10, 0.20;
    return w;
}

}  // namespace

Generated unit_triangle() {
    Eigen::MatrixXd vertices(3, 2);
    vertices << 0, 0, 1, 0, 0, 1;
    auto labels = make_labels("P", 23);
    labels[0] = "V1";
    labels[1] = "V2";
    labels[2] = "V3";
    return from_weights(vertices, triangle_weights(), {"x", "y"}, std::move(labels), false);
}

Generated triangle() {
    Eigen::MatrixXd vertices(3, 2);
    vertices << 0, 0, 2, 0, 0, 1;
    auto labels = make_labels("P", 23);
    labels[0] = "V1";
    labels[1] = "V2";
    labels[2] = "V3";
    return from_weights(vertices, triangle_weights(), {"x", "y"}, std::move(labels), false);
}

Generated nba2d() {
    Eigen::MatrixXd archetypes(3, 2);
    archetypes << 3200, 800,  // heavy-minutes scorer
        8, 0,                 // benchwarmer
        2700, 250;            // many minutes, few goals
    Eigen::MatrixXd w(30, 3);
    w << 1.00, 0.00, 0.00,  //
        0.00, 1.00, 0.00,   //
        0.00, 0.00, 1.00,   //
        0.93, 0.05, 0.02,   //
        0.89, 0.09, 0.02,   //
        0.89, 0.06, 0.05,   //
        0.85, 0.10, 0.05,   //
        0.06, 0.02, 0.92,   //
        0.05, 0.10, 0.85,   //
        0.02, 0.95, 0.03,   //
        0.05, 0.90, 0.05,   //
        0.03, 0.88, 0.09,   //
        0.44, 0.23, 0.33,   //
        0.28, 0.31, 0.41,   //
        0.21, 0.48, 0.31,   //
        0.35, 0.23, 0.42,   //
        0.44, 0.16, 0.40,   //
        0.60, 0.20, 0.20,   //
        0.15, 0.60, 0.25,   //
        0.30, 0.30, 0.40,   //
        0.25, 0.25, 0.50,   //
        0.50, 0.25, 0.25,   //
        0.10, 0.70, 0.20,   //
        0.20, 0.55, 0.25,   //
        0.40, 0.40, 0.20,   //
        0.55, 0.05, 0.40,   //
        0.12, 0.40, 0.48,   //
        0.33, 0.33, 0.34,   //
        0.18, 0.22, 0.60,   //
        0.65, 0.15, 0.20;

    const std::vector<std::string> names = {
        "Avery Cole",    "Dex Whitman",  "Jonas Petty",   "Maro Quint",   "Ellis Trane",
        "Ben Okoro",     "Silas Verde",  "Ty Marchetti",  "Ruben Falk",   "Cody Branch",
        "Omar Wilde",    "Pete Sorrel",  "Vince Adler",   "Andre Mott",   "Carl Jessup",
        "Paul Mirek",    "Rod Stacker",  "Leon Vance",    "Gil Arroyo",   "Marc Teller",
        "Iver Holt",     "Drew Kessler", "Sam Littleton", "Noel Pryce",   "Abe Corwin",
        "Hugh Ferris",   "Ward Ellison", "Rey Solano",    "Kip Draven",   "Niles Crowe"};
    const std::vector<std::string> teams = {
        "OKC", "PHX", "DAL", "CLE", "LAL", "MIA", "DEN", "NYK", "CHI", "UTA",
        "GSW", "POR", "ORL", "SAS", "TOR", "BOS", "MEM", "HOU", "ATL", "MIN",
        "SAC", "WAS", "DET", "IND", "MIL", "PHI", "BKN", "CHA", "NOP", "LAC"};
    const std::vector<std::string> roles = {
        "SF", "C",  "PG", "SF", "SG", "SG", "PF", "PG", "C",  "PF",
        "SG", "C",  "SG", "SG", "SF", "PF", "PG", "SF", "PG", "SG",
        "C",  "PF", "SG", "PG", "SF", "C",  "PF", "SG", "PG", "SF"};

    Generated g = from_weights(archetypes, w, {"Min", "FGM"}, names, true);
    g.meta.column_names = {"Team", "Role"};
    for (std::size_t i = 0; i < names.size(); ++i) g.meta.rows.push_back({teams[i], roles[i]});
    return g;
}

Generated nba19() {
    const std::vector<std::string> stats = {"G",   "GS",  "Min", "FGM", "FGA", "TPM", "TPA",
                                            "FTM", "FTA", "OR",  "DR",  "TR",  "AST", "STL",
                                            "BLK", "TO",  "PF",  "DQ",  "PTS"};
    Eigen::MatrixXd archetypes(4, 19);
    // star scorer, benchwarmer, rebounder/defender, three-point shooter
    archetypes << 80, 80, 3100, 790, 1660, 120, 330, 620, 740, 110, 460, 570, 400, 110, 60, 230, 170, 1, 2310,
        10, 0, 70, 8, 25, 1, 5, 4, 8, 4, 9, 13, 4, 2, 1, 6, 12, 0, 21,
        78, 70, 2500, 380, 760, 2, 9, 210, 330, 310, 640, 950, 110, 70, 170, 140, 260, 5, 970,
        76, 60, 2400, 440, 1000, 210, 500, 150, 170, 40, 230, 270, 220, 80, 25, 110, 150, 1, 1240;

    Eigen::MatrixXd w(48, 4);
    w << 1.00, 0.00, 0.00, 0.00,  //
        0.00, 1.00, 0.00, 0.00,   //
        0.00, 0.00, 1.00, 0.00,   //
        0.00, 0.00, 0.00, 1.00,   //
        0.96, 0.04, 0.00, 0.00,   //
        0.90, 0.05, 0.05, 0.00,   //
        0.88, 0.02, 0.00, 0.10,   //
        0.03, 0.97, 0.00, 0.00,   //
        0.05, 0.90, 0.02, 0.03,   //
        0.00, 0.03, 0.97, 0.00,   //
        0.04, 0.05, 0.88, 0.03,   //
        0.00, 0.02, 0.02, 0.96,   //
        0.05, 0.06, 0.02, 0.87,   //
        0.40, 0.20, 0.25, 0.15,   //
        0.30, 0.25, 0.25, 0.20,   //
        0.25, 0.25, 0.25, 0.25,   //
        0.55, 0.15, 0.20, 0.10,   //
        0.15, 0.55, 0.20, 0.10,   //
        0.10, 0.20, 0.55, 0.15,   //
        0.10, 0.15, 0.20, 0.55,   //
        0.45, 0.10, 0.35, 0.10,   //
        0.45, 0.10, 0.10, 0.35,   //
        0.20, 0.40, 0.20, 0.20,   //
        0.35, 0.30, 0.20, 0.15,   //
        0.28, 0.22, 0.28, 0.22,   //
        0.60, 0.10, 0.10, 0.20,   //
        0.12, 0.48, 0.25, 0.15,   //
        0.18, 0.32, 0.35, 0.15,   //
        0.22, 0.18, 0.15, 0.45,   //
        0.33, 0.17, 0.33, 0.17,   //
        0.50, 0.20, 0.15, 0.15,   //
        0.14, 0.36, 0.14, 0.36,   //
        0.26, 0.24, 0.36, 0.14,   //
        0.38, 0.12, 0.26, 0.24,   //
        0.08, 0.62, 0.15, 0.15,   //
        0.16, 0.44, 0.24, 0.16,   //
        0.24, 0.16, 0.44, 0.16,   //
        0.16, 0.24, 0.16, 0.44,   //
        0.42, 0.28, 0.14, 0.16,   //
        0.36, 0.14, 0.28, 0.22,   //
        0.12, 0.26, 0.38, 0.24,   //
        0.30, 0.10, 0.40, 0.20,   //
        0.20, 0.30, 0.10, 0.40,   //
        0.48, 0.22, 0.18, 0.12,   //
        0.10, 0.45, 0.30, 0.15,   //
        0.34, 0.26, 0.22, 0.18,   //
        0.27, 0.23, 0.27, 0.23,   //
        0.52, 0.12, 0.24, 0.12;

    Generated g = from_weights(archetypes, w, stats, make_labels("Player ", 48), true);
    g.meta.column_names = {"Team", "Role"};
    const std::vector<std::string> teams = {"OKC", "PHX", "CHI", "GSW", "CLE", "MIA", "LAL", "DAL"};
    const std::vector<std::string> roles = {"SF", "C", "PG", "SG", "PF"};
    for (int i = 0; i < 48; ++i)
        g.meta.rows.push_back({teams[static_cast<std::size_t>(i % 8)],
                               roles[static_cast<std::size_t>(i % 5)]});
    return g;
}

Generated soccer25() {
    const std::vector<std::string> skills = {
        "attack",           "defence",          "balance",        "stamina",
        "top_speed",        "acceleration",     "response",       "agility",
        "dribble_accuracy", "dribble_speed",    "pass_accuracy",  "pass_speed",
        "long_pass_accuracy", "long_pass_speed", "shot_accuracy", "shot_power",
        "shot_technique",   "free_kick_accuracy", "curling",      "header",
        "jump",             "technique",        "aggression",     "mentality",
        "teamwork"};

    Eigen::MatrixXd archetypes(4, 25);
    // offensive playmaker, center forward, weak runner, defender
    archetypes << 92, 48, 62, 80, 84, 88, 85, 90, 93, 90, 91, 88, 86, 84, 88, 85, 90, 86, 88, 58, 60, 94, 55, 86, 82,
        90, 45, 72, 76, 82, 90, 82, 80, 78, 80, 62, 60, 58, 60, 92, 94, 88, 74, 70, 92, 90, 80, 72, 84, 70,
        42, 40, 55, 78, 76, 70, 55, 60, 40, 45, 42, 44, 40, 42, 38, 45, 40, 35, 36, 48, 50, 40, 58, 48, 55,
        55, 93, 88, 80, 72, 70, 84, 68, 48, 50, 62, 64, 70, 72, 40, 60, 42, 40, 42, 90, 92, 58, 88, 80, 84;

    Eigen::MatrixXd w(40, 4);
    w << 1.00, 0.00, 0.00, 0.00,  //
        0.00, 1.00, 0.00, 0.00,   //
        0.00, 0.00, 1.00, 0.00,   //
        0.00, 0.00, 0.00, 1.00,   //
        0.82, 0.18, 0.00, 0.00,   // "best player" query targets
        0.79, 0.21, 0.00, 0.00,   //
        0.68, 0.32, 0.00, 0.00,   //
        0.60, 0.40, 0.00, 0.00,   //
        0.53, 0.47, 0.00, 0.00,   //
        0.40, 0.60, 0.00, 0.00,   // forward-leaning, excluded (w1 < w2)
        0.45, 0.55, 0.00, 0.00,   //
        0.50, 0.30, 0.20, 0.00,   // excluded (w3 > 0)
        0.55, 0.25, 0.00, 0.20,   // excluded (w4 > 0)
        0.05, 0.05, 0.00, 0.90,   // defenders
        0.00, 0.08, 0.05, 0.87,   //
        0.10, 0.00, 0.06, 0.84,   //
        0.02, 0.10, 0.10, 0.78,   //
        0.05, 0.12, 0.13, 0.70,   //
        0.03, 0.04, 0.93, 0.00,   // weak players
        0.05, 0.05, 0.85, 0.05,   //
        0.00, 0.10, 0.82, 0.08,   //
        0.88, 0.12, 0.00, 0.00,   //
        0.30, 0.55, 0.10, 0.05,   // center-forward leaning
        0.15, 0.75, 0.05, 0.05,   //
        0.10, 0.82, 0.04, 0.04,   //
        0.25, 0.35, 0.25, 0.15,   //
        0.30, 0.25, 0.25, 0.20,   //
        0.25, 0.25, 0.25, 0.25,   //
        0.35, 0.15, 0.30, 0.20,   //
        0.20, 0.30, 0.30, 0.20,   //
        0.15, 0.20, 0.40, 0.25,   //
        0.10, 0.15, 0.35, 0.40,   //
        0.20, 0.20, 0.20, 0.40,   //
        0.30, 0.20, 0.10, 0.40,   //
        0.12, 0.28, 0.25, 0.35,   //
        0.18, 0.22, 0.35, 0.25,   //
        0.40, 0.30, 0.15, 0.15,   //
        0.22, 0.38, 0.22, 0.18,   //
        0.28, 0.16, 0.28, 0.28,   //
        0.16, 0.28, 0.16, 0.40;

    const std::vector<std::string> names = {
        "Wren Rooke",     "Levi Marsh",    "Timo Weiss",     "Carlo Benn",    "Dario Flint",
        "Enzo Marek",     "Ciro Valdes",   "Anton Dray",     "Luis Ferro",    "Milan Kovar",
        "Jorge Sable",    "Piet Hansen",   "Ugo Bellini",    "Ray Thorpe",    "Sven Acker",
        "Noel Gracia",    "Ivo Tanner",    "Bram Voss",      "Kai Ostler",    "Rolf Brandt",
        "Dane Mercer",    "Mateo Lyle",    "Theo Quade",     "Jens Fabri",    "Emil Soren",
        "Aldo Pinto",     "Remy Calder",   "Otis Vaughn",    "Nico Strand",   "Egon Halle",
        "Paolo Reyes",    "Stefan Molnar", "Dries Kamp",     "Armin Zoller",  "Yanik Brody",
        "Lars Eckert",    "Tomas Villar",  "Bruno Castel",   "Marco Deluca",  "Henrik Staal"};
    const std::vector<std::string> clubs = {
        "Rotbach United",  "Eastfield FC",   "Calcio Verona",  "Norden 04",     "Albion Rovers",
        "Real Montavo",    "Sporting Elva",  "FC Drachental",  "Viola Parma",   "Union Calda"};
    const std::vector<std::string> positions_by_kind = {"Forward", "Forward", "Midfielder",
                                                        "Defender"};

    Generated g = from_weights(archetypes, w, skills, names, false);
    g.meta.column_names = {"Club", "Position"};
    for (int i = 0; i < 40; ++i) {
        // position follows the dominant design archetype
        int dominant = 0;
        for (int j = 1; j < 4; ++j)
            if (w(i, j) > w(i, dominant)) dominant = j;
        std::string position = positions_by_kind[static_cast<std::size_t>(dominant)];
        if (dominant == 2) position = "Midfielder";
        g.meta.rows.push_back({clubs[static_cast<std::size_t>(i % 10)], position});
    }
    return g;
}

std::vector<int> sorted_design_order(const Eigen::MatrixXd& design_archetypes) {
    std::vector<int> order(static_cast<std::size_t>(design_archetypes.rows()));
    std::iota(order.begin(), order.end(), 0);
    const Eigen::VectorXd sums = design_archetypes.rowwise().sum();
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return sums(a) > sums(b); });
    return order;
}

void write_csv(const Generated& fixture, const std::string& path, const std::string& label_column) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write fixture: " + path);

    std::vector<std::string> header = {label_column};
    for (const auto& c : fixture.meta.column_names) header.push_back(c);
    for (const auto& c : fixture.data.column_names) header.push_back(c);
    archetypes::write_csv_row(out, header);

    for (Eigen::Index i = 0; i < fixture.data.n(); ++i) {
        std::vector<std::string> row = {fixture.data.row_labels[static_cast<std::size_t>(i)]};
        if (!fixture.meta.rows.empty())
            for (const auto& cell : fixture.meta.rows[static_cast<std::size_t>(i)]) row.push_back(cell);
        for (Eigen::Index c = 0; c < fixture.data.m(); ++c)
            row.push_back(archetypes::format_double(fixture.data.values(i, c)));
        archetypes::write_csv_row(out, row);
    }
}

}  // namespace fixtures
