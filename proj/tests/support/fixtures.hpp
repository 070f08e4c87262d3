#pragma once

#include <string>
#include <vector>

#include "archetypes/csv.hpp"
#include "archetypes/data_matrix.hpp"

namespace fixtures {

// A synthetic data set generated from known archetypes: every row is a convex
// combination with the recorded weights, so fitted alpha values have exact
// expected counterparts.
struct Generated {
    archetypes::DataMatrix data;
    Eigen::MatrixXd design_archetypes;  // k x m, design order
    Eigen::MatrixXd weights;            // n x k, design order
    archetypes::TableMeta meta;         // extra string columns for CSV output
};

// Spec instance: unit triangle (0,0), (1,0), (0,1) plus 20 interior points.
Generated unit_triangle();

// Asymmetric triangle (0,0), (2,0), (0,1): distinct archetype row sums give a
// deterministic sorted output order (used for cohort/assignment expectations).
Generated triangle();

// NBA-two-column schema (Name, Team, Role, Min, FGM), 30 players from three
// archetypes, values rounded to whole numbers (all rows stay inside the hull).
Generated nba2d();

// 19-statistic basketball schema, 48 players from four archetypes, integers.
Generated nba19();

// 25-skill soccer schema (Name, Club, Position + skills), 40 players from four
// archetypes. Values are exact convex combinations (not rounded), so zero
// weights stay exactly zero in an exact fit.
Generated soccer25();

// Output slot -> design archetype index after the library's row-sum sort.
std::vector<int> sorted_design_order(const Eigen::MatrixXd& design_archetypes);

// Writes label column, metadata columns, then the numeric columns.
void write_csv(const Generated& fixture, const std::string& path,
               const std::string& label_column = "Name");

}  // namespace fixtures
