#pragma once

#include <Eigen/Dense>
#include <optional>

#include "archetypes/errors.hpp"

namespace archetypes {

struct NnlsOptions {
    int max_iterations = 0;  // 0 -> 10 * unknown count
    double tol = 1e-10;      // dual (KKT) tolerance
};

struct NnlsResult {
    Eigen::VectorXd x;
    int iterations = 0;
    bool converged = true;
    double max_dual = 0.0;  // largest dual residual over the active set at exit
};

// Lawson-Hanson active-set non-negative least squares:
//   minimize ||A x - b||_2  subject to  x >= 0.
// At exit the passive components solve the unconstrained subsystem and the
// active components have dual residual <= tol. If the outer-iteration cap is
// reached first, the best (feasible) iterate is returned with converged=false.
NnlsResult nnls(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                NnlsOptions options = {});

// One convex least-squares subproblem of the alternating algorithm:
//   minimize ||A x - b||_2  subject to  x >= 0, sum(x) = 1.
struct SimplexLsProblem {
    Eigen::MatrixXd coefficient_matrix;
    Eigen::VectorXd target;
    // Weight of the penalty row embedding the sum-to-one constraint.
    // Unset -> 200 * max(1, max|A|).
    std::optional<double> penalty_weight;
};

struct SimplexLsResult {
    Eigen::VectorXd weights;       // x >= 0, sum(x) == 1 up to fp rounding
    double residual = 0.0;         // ||A x - b||_2 of the returned weights
    double raw_sum_violation = 0;  // |sum - 1| of the penalty-NNLS iterate, pre-cleanup
    bool polished = false;         // support polish accepted
    int nnls_iterations = 0;
    bool nnls_converged = true;
};

double default_penalty_weight(const Eigen::MatrixXd& A);

// Solves the problem by the penalty embedding: a row of penalty_weight is
// appended to A and penalty_weight to b, and the augmented system is handed
// to nnls(). The raw iterate only meets the sum constraint to O(1/penalty^2),
// so the support is then re-solved with the equality constraint exact
// (Lagrange system on the passive set) and the better of the candidates is
// returned; the simplex vertices are swept as a floor so the result never
// loses to a pure single-column solution.
SimplexLsResult solve_simplex_ls(const SimplexLsProblem& problem);

}  // namespace archetypes
