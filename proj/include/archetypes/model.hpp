#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "archetypes/scaling.hpp"

namespace archetypes {

enum class InitStrategy { random_beta, furthest_sum };

struct FitConfig {
    int k = 1;
    int restarts = 10;
    int max_iterations = 100;
    double rel_tolerance = 1e-6;
    std::optional<double> penalty_weight;  // unset -> per-problem default
    InitStrategy init = InitStrategy::furthest_sum;
    std::uint64_t seed = 42;
};

// How a single restart went; fit() keeps one of these per restart.
struct RestartDiagnostics {
    std::uint64_t seed = 0;
    std::string init;  // "random-beta", "furthest-sum", "mean-seeded", "warm-start"
    double rss = 0.0;
    int iterations = 0;
    bool converged = false;
    std::vector<double> rss_log;  // non-increasing within each restart
    std::string error;            // non-empty if the restart failed outright
};

struct ArchetypalModel {
    int k = 0;
    Eigen::MatrixXd archetypes;  // k x m, rows sorted by descending row sum
    Eigen::MatrixXd alpha;       // n x k, rows on the simplex
    Eigen::MatrixXd beta;        // k x n, rows on the simplex; archetypes == beta * X
    double rss = 0.0;            // Frobenius norm of X - alpha * archetypes
    double rss_rel = 0.0;        // rss / ||X||_F
    int iterations = 0;
    bool converged = false;
    std::uint64_t seed = 0;  // seed of the winning restart

    std::vector<std::string> column_names;
    std::vector<std::string> row_labels;
    std::optional<ScalingParams> scaling;  // standardization applied before fitting

    std::vector<RestartDiagnostics> restarts;
    std::vector<std::string> warnings;
};

}  // namespace archetypes
