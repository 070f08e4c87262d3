#include "archetypes/reference.hpp"

#include <cmath>

namespace archetypes::reference {

double compute_rss(const DataMatrix& data, const Eigen::MatrixXd& alpha,
                   const Eigen::MatrixXd& archetypes) {
    const Eigen::Index n = data.n();
    const Eigen::Index m = data.m();
    const Eigen::Index k = archetypes.rows();
    if (alpha.rows() != n || alpha.cols() != k || archetypes.cols() != m)
        throw std::invalid_argument("compute_rss: dimension mismatch");
    double acc = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index c = 0; c < m; ++c) {
            double recon = 0.0;
            for (Eigen::Index j = 0; j < k; ++j) recon += alpha(i, j) * archetypes(j, c);
            const double d = data.values(i, c) - recon;
            acc += d * d;
        }
    }
    return std::sqrt(acc);
}

Eigen::MatrixXd update_alpha(const DataMatrix& data, const Eigen::MatrixXd& archetypes,
                             std::optional<double> penalty_weight,
                             const Eigen::MatrixXd* previous_alpha) {
    const Eigen::Index n = data.n();
    const Eigen::Index k = archetypes.rows();
    if (archetypes.cols() != data.m()) throw std::invalid_argument("update_alpha: archetype width mismatch");

    const Eigen::MatrixXd At = archetypes.transpose();
    const double penalty = penalty_weight ? *penalty_weight : default_penalty_weight(At);

    Eigen::MatrixXd alpha(n, k);
    for (Eigen::Index i = 0; i < n; ++i) {
        const Eigen::VectorXd target = data.values.row(i).transpose();
        SimplexLsResult sol = solve_simplex_ls({At, target, penalty});
        if (previous_alpha) {
            const Eigen::VectorXd prev = previous_alpha->row(i).transpose();
            if ((At * prev - target).norm() < sol.residual) {
                alpha.row(i) = prev.transpose();
                continue;
            }
        }
        alpha.row(i) = sol.weights.transpose();
    }
    return alpha;
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> update_beta(
    const DataMatrix& data, const Eigen::MatrixXd& alpha, std::optional<double> penalty_weight,
    const std::pair<Eigen::MatrixXd, Eigen::MatrixXd>* previous) {
    const Eigen::Index n = data.n();
    const Eigen::Index k = alpha.cols();
    if (alpha.rows() != n) throw std::invalid_argument("update_beta: alpha row count mismatch");

    const Eigen::MatrixXd ideal = alpha.completeOrthogonalDecomposition().solve(data.values);
    const Eigen::MatrixXd Xt = data.values.transpose();
    const double penalty = penalty_weight ? *penalty_weight : default_penalty_weight(Xt);

    Eigen::MatrixXd beta(k, n);
    for (Eigen::Index j = 0; j < k; ++j) {
        SimplexLsResult sol = solve_simplex_ls({Xt, ideal.row(j).transpose(), penalty});
        beta.row(j) = sol.weights.transpose();
    }
    Eigen::MatrixXd archetypes = beta * data.values;

    if (previous && archetypes::compute_rss(data, alpha, archetypes) >
                        archetypes::compute_rss(data, alpha, previous->second))
        return *previous;
    return {std::move(beta), std::move(archetypes)};
}

ArchetypalModel fit(const DataMatrix& data, const FitConfig& config) {
    return detail::fit_impl(data, config, nullptr, false);
}

}  // namespace archetypes::reference
