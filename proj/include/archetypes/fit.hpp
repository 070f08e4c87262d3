#pragma once

#include <Eigen/Dense>
#include <optional>

#include "archetypes/data_matrix.hpp"
#include "archetypes/model.hpp"
#include "archetypes/simplex_ls.hpp"

namespace archetypes {

// Frobenius norm of X - alpha * archetypes. Row residuals are accumulated in
// row order so the result does not depend on the parallel schedule.
double compute_rss(const DataMatrix& data, const Eigen::MatrixXd& alpha,
                   const Eigen::MatrixXd& archetypes);

// Alpha half-step: per observation, the best simplex weights over the current
// archetypes. Rows are independent and solved in parallel. When previous_alpha
// is given, a row is only replaced if its residual does not get worse, which
// makes the per-iteration RSS log non-increasing by construction.
Eigen::MatrixXd update_alpha(const DataMatrix& data, const Eigen::MatrixXd& archetypes,
                             std::optional<double> penalty_weight = std::nullopt,
                             const Eigen::MatrixXd* previous_alpha = nullptr);

// Beta half-step: the unconstrained optimum Z~ given alpha, then each of its
// rows expressed as a simplex combination of data rows. Returns (beta, beta*X).
// When previous = {beta, archetypes} is given and the candidate does not
// lower the RSS at the current alpha, the previous pair is returned instead.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> update_beta(
    const DataMatrix& data, const Eigen::MatrixXd& alpha,
    std::optional<double> penalty_weight = std::nullopt,
    const std::pair<Eigen::MatrixXd, Eigen::MatrixXd>* previous = nullptr);

// Initial beta: k simplex-feasible rows.
//   random-beta   — k distinct data indices as unit rows.
//   furthest-sum  — greedy max-sum-of-distances picks, seeded by a random
//                   point that is dropped after the first pick.
Eigen::MatrixXd init_beta(const DataMatrix& data, int k, InitStrategy strategy, std::uint64_t seed);

// Multi-restart alternating constrained least squares. Restarts run
// independently (in parallel when OpenMP is available) and the best RSS wins;
// ties within 1e-12 go to the lower restart seed. The last restart is seeded
// from the k=1 mean solution padded with random rows so the fit never loses
// to the single-archetype optimum.
ArchetypalModel fit(const DataMatrix& data, const FitConfig& config);

namespace detail {

// A warm start injected by the scree pipeline: beta rows of a previous
// solution plus one random extra archetype, with the matching alpha (padded
// with a zero column) as the safeguard baseline.
struct WarmStart {
    Eigen::MatrixXd beta;
    Eigen::MatrixXd alpha;
};

ArchetypalModel fit_impl(const DataMatrix& data, const FitConfig& config,
                         const WarmStart* warm, bool parallel_restarts);

}  // namespace detail

}  // namespace archetypes
