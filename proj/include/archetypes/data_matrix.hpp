#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "archetypes/errors.hpp"

namespace archetypes {

// An n x m observation matrix with named columns and optional row labels.
// Rows are the observations (athletes), columns the measured attributes.
struct DataMatrix {
    Eigen::MatrixXd values;
    std::vector<std::string> column_names;
    std::vector<std::string> row_labels;  // empty or size n

    Eigen::Index n() const { return values.rows(); }
    Eigen::Index m() const { return values.cols(); }

    void validate() const;
};

}  // namespace archetypes
