#pragma once

#include "archetypes/fit.hpp"

namespace archetypes::reference {

// Serial counterparts of the OpenMP kernels, written as straight-line loops.
// They are the ground truth the parallel paths are tested against and the
// baseline the benchmark tool compares with.

double compute_rss(const DataMatrix& data, const Eigen::MatrixXd& alpha,
                   const Eigen::MatrixXd& archetypes);

Eigen::MatrixXd update_alpha(const DataMatrix& data, const Eigen::MatrixXd& archetypes,
                             std::optional<double> penalty_weight = std::nullopt,
                             const Eigen::MatrixXd* previous_alpha = nullptr);

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> update_beta(
    const DataMatrix& data, const Eigen::MatrixXd& alpha,
    std::optional<double> penalty_weight = std::nullopt,
    const std::pair<Eigen::MatrixXd, Eigen::MatrixXd>* previous = nullptr);

// Same restart schedule as fit(), executed one restart at a time.
ArchetypalModel fit(const DataMatrix& data, const FitConfig& config);

}  // namespace archetypes::reference
