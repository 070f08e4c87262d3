#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

#include "archetypes/data_matrix.hpp"
#include "archetypes/model.hpp"

namespace archetypes {

// k x m matrix of empirical percentiles: entry (j, c) is the share of
// observations with value <= the archetype's value in column c, times 100.
struct PercentileProfile {
    Eigen::MatrixXd values;
    std::vector<std::string> column_names;
};

// Computed on original-units data; archetypes are unscaled first when the
// model was fitted on standardized values.
PercentileProfile percentile_profile(const ArchetypalModel& model, const DataMatrix& data);

struct AssignmentRow {
    std::string row_label;
    Eigen::VectorXd alpha;
    int nearest_archetype = 0;  // 1-based argmax of alpha, ties to the lowest index
    double max_alpha = 0.0;
};

struct AssignmentTable {
    std::vector<AssignmentRow> rows;  // in data row order
};

AssignmentTable assignments(const ArchetypalModel& model, const DataMatrix& data);

// For each archetype, the observation with the largest alpha weight on it.
// Ties go to the smaller Euclidean distance to the archetype, then row order.
// `data` must be in the same space as model.archetypes (the fitted space).
std::vector<Eigen::Index> nearest_observations(const ArchetypalModel& model, const DataMatrix& data);

struct CohortRow {
    Eigen::Index index = 0;
    std::string row_label;
    Eigen::VectorXd alpha;
    double weight = 0.0;  // alpha on the queried archetype
};

// Rows whose alpha on archetype_index (0-based) exceeds t, sorted by
// descending weight; ties keep row order.
std::vector<CohortRow> threshold_cohort(const ArchetypalModel& model, const DataMatrix& data,
                                        int archetype_index, double t);

// Rows whose alpha vector satisfies the predicate, ordered by descending
// alpha on sort_archetype (0-based).
std::vector<CohortRow> composition_query(const ArchetypalModel& model, const DataMatrix& data,
                                         const std::function<bool(const Eigen::VectorXd&)>& predicate,
                                         int sort_archetype);

// Seeded sample of count rows from a cohort (reports stay reproducible).
// Preserves the cohort's ordering; returns everything when count >= size.
std::vector<CohortRow> sample_cohort(const std::vector<CohortRow>& cohort, std::size_t count,
                                     std::uint64_t seed);

// Barycentric-to-Cartesian map of the alpha rows onto the triangle with
// corners (0,0), (1,0), (0.5, sqrt(3)/2). Requires k = 3.
Eigen::MatrixX2d ternary_coordinates(const ArchetypalModel& model);

struct HullInfo {
    std::vector<Eigen::Index> vertex_indices;  // counter-clockwise, strictly convex
    Eigen::Index N = 0;                        // number of hull-defining points
};

// Monotone-chain convex hull; collinear boundary points are dropped.
// Degenerate inputs yield 1- or 2-vertex hulls.
HullInfo convex_hull_2d(const Eigen::MatrixX2d& points);

enum class HullPosition { inside, on, outside };

HullPosition point_in_hull(const HullInfo& hull, const Eigen::MatrixX2d& points,
                           const Eigen::Vector2d& query, double tol = 1e-9);

}  // namespace archetypes
