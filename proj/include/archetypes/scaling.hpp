#pragma once

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

#include "archetypes/data_matrix.hpp"

namespace archetypes {

enum class ScaleMethod { none, zscore, minmax };

ScaleMethod scale_method_from_string(const std::string& name);
std::string to_string(ScaleMethod method);

// Per-column affine map: scaled = (raw - offset) / divisor. Divisors are
// always positive; constant columns get divisor 1 and a warning flag.
struct ScalingParams {
    ScaleMethod method = ScaleMethod::none;
    Eigen::VectorXd offset;
    Eigen::VectorXd divisor;
    std::vector<int> constant_columns;  // column indices that could not be scaled
};

std::pair<DataMatrix, ScalingParams> standardize(const DataMatrix& data, ScaleMethod method);

// Re-applies stored parameters to fresh data in the same column space.
DataMatrix apply_scaling(const DataMatrix& data, const ScalingParams& params);

// Maps archetypes (rows in scaled space) back to original units.
Eigen::MatrixXd unscale_archetypes(const Eigen::MatrixXd& archetypes, const ScalingParams& params);

}  // namespace archetypes
