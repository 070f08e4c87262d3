#include "archetypes/scaling.hpp"

#include <cmath>

namespace archetypes {

ScaleMethod scale_method_from_string(const std::string& name) {
    if (name == "none") return ScaleMethod::none;
    if (name == "zscore") return ScaleMethod::zscore;
    if (name == "minmax") return ScaleMethod::minmax;
    throw ConfigError("unknown scaling method: " + name);
}

std::string to_string(ScaleMethod method) {
    switch (method) {
        case ScaleMethod::none: return "none";
        case ScaleMethod::zscore: return "zscore";
        case ScaleMethod::minmax: return "minmax";
    }
    return "none";
}

std::pair<DataMatrix, ScalingParams> standardize(const DataMatrix& data, ScaleMethod method) {
    data.validate();
    const Eigen::Index n = data.n();
    const Eigen::Index m = data.m();

    ScalingParams params;
    params.method = method;
    params.offset = Eigen::VectorXd::Zero(m);
    params.divisor = Eigen::VectorXd::Ones(m);

    if (method == ScaleMethod::zscore) {
        for (Eigen::Index c = 0; c < m; ++c) {
            const double mean = data.values.col(c).mean();
            double sd = 0.0;
            if (n > 1) {
                sd = std::sqrt((data.values.col(c).array() - mean).square().sum() /
                               static_cast<double>(n - 1));
            }
            params.offset(c) = mean;
            if (sd > 1e-12) {
                params.divisor(c) = sd;
            } else {
                params.constant_columns.push_back(static_cast<int>(c));
            }
        }
    } else if (method == ScaleMethod::minmax) {
        for (Eigen::Index c = 0; c < m; ++c) {
            const double lo = data.values.col(c).minCoeff();
            const double hi = data.values.col(c).maxCoeff();
            params.offset(c) = lo;
            if (hi - lo > 1e-12) {
                params.divisor(c) = hi - lo;
            } else {
                params.constant_columns.push_back(static_cast<int>(c));
            }
        }
    }

    return {apply_scaling(data, params), params};
}

DataMatrix apply_scaling(const DataMatrix& data, const ScalingParams& params) {
    if (params.offset.size() != data.m() || params.divisor.size() != data.m())
        throw InputError("apply_scaling: parameter width differs from the data");
    DataMatrix scaled = data;
    for (Eigen::Index c = 0; c < data.m(); ++c)
        scaled.values.col(c) = (data.values.col(c).array() - params.offset(c)) / params.divisor(c);
    return scaled;
}

Eigen::MatrixXd unscale_archetypes(const Eigen::MatrixXd& archetypes, const ScalingParams& params) {
    if (params.offset.size() != archetypes.cols())
        throw InputError("unscale_archetypes: parameter width differs from the archetypes");
    Eigen::MatrixXd out = archetypes;
    for (Eigen::Index c = 0; c < archetypes.cols(); ++c)
        out.col(c) = archetypes.col(c).array() * params.divisor(c) + params.offset(c);
    return out;
}

}  // namespace archetypes
