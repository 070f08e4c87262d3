#include "archetypes/simplex_ls.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace archetypes {

namespace {

void check_finite(const Eigen::MatrixXd& A, const Eigen::VectorXd& b) {
    if (!A.allFinite() || !b.allFinite())
        throw InputError("nnls: non-finite entries in coefficient matrix or target");
}

// Least-squares solve restricted to the passive columns.
Eigen::VectorXd solve_passive(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                              const std::vector<int>& passive) {
    Eigen::MatrixXd Ap(A.rows(), static_cast<Eigen::Index>(passive.size()));
    for (std::size_t j = 0; j < passive.size(); ++j) Ap.col(static_cast<Eigen::Index>(j)) = A.col(passive[j]);
    return Ap.colPivHouseholderQr().solve(b);
}

}  // namespace

NnlsResult nnls(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, NnlsOptions options) {
    const Eigen::Index m = A.rows();
    const Eigen::Index k = A.cols();
    if (k < 1) throw std::invalid_argument("nnls: coefficient matrix needs at least one column");
    if (b.size() != m) throw std::invalid_argument("nnls: target length does not match row count");
    check_finite(A, b);

    const int cap = options.max_iterations > 0 ? options.max_iterations : 10 * static_cast<int>(k);
    const double tol = options.tol;

    NnlsResult res;
    res.x = Eigen::VectorXd::Zero(k);

    std::vector<bool> in_passive(static_cast<std::size_t>(k), false);
    std::vector<int> passive;
    Eigen::VectorXd w = A.transpose() * b;  // dual residual at x = 0

    int outer = 0;
    while (outer < cap) {
        // Pick the most violated dual among active components.
        int best = -1;
        double best_w = tol;
        for (Eigen::Index i = 0; i < k; ++i) {
            if (!in_passive[static_cast<std::size_t>(i)] && w(i) > best_w) {
                best_w = w(i);
                best = static_cast<int>(i);
            }
        }
        if (best < 0) break;  // KKT satisfied
        ++outer;

        in_passive[static_cast<std::size_t>(best)] = true;
        passive.push_back(best);

        // Inner loop: restore feasibility of the passive solve.
        int inner_guard = 0;
        while (true) {
            Eigen::VectorXd z = solve_passive(A, b, passive);
            double zmin = std::numeric_limits<double>::infinity();
            for (Eigen::Index j = 0; j < z.size(); ++j) zmin = std::min(zmin, z(j));
            if (zmin > 0.0) {
                for (std::size_t j = 0; j < passive.size(); ++j) res.x(passive[j]) = z(static_cast<Eigen::Index>(j));
                break;
            }
            // Step toward z until the first passive component hits zero.
            double alpha = std::numeric_limits<double>::infinity();
            for (std::size_t j = 0; j < passive.size(); ++j) {
                const double zj = z(static_cast<Eigen::Index>(j));
                if (zj <= 0.0) {
                    const double xj = res.x(passive[j]);
                    const double denom = xj - zj;
                    if (denom > 0.0) alpha = std::min(alpha, xj / denom);
                }
            }
            if (!std::isfinite(alpha)) alpha = 0.0;
            for (std::size_t j = 0; j < passive.size(); ++j) {
                const int col = passive[j];
                res.x(col) += alpha * (z(static_cast<Eigen::Index>(j)) - res.x(col));
            }
            // Retire every component that reached (or crossed) zero.
            std::vector<int> still;
            still.reserve(passive.size());
            for (int col : passive) {
                if (res.x(col) <= 1e-14) {
                    res.x(col) = 0.0;
                    in_passive[static_cast<std::size_t>(col)] = false;
                } else {
                    still.push_back(col);
                }
            }
            passive.swap(still);
            if (passive.empty()) break;
            if (++inner_guard > static_cast<int>(k) + 1) break;  // stalled; duals re-checked outside
        }

        w = A.transpose() * (b - A * res.x);
    }

    res.iterations = outer;
    double max_dual = 0.0;
    for (Eigen::Index i = 0; i < k; ++i)
        if (!in_passive[static_cast<std::size_t>(i)]) max_dual = std::max(max_dual, w(i));
    res.max_dual = max_dual;
    res.converged = max_dual <= tol;

    for (Eigen::Index i = 0; i < k; ++i)
        if (res.x(i) > -1e-12 && res.x(i) < 0.0) res.x(i) = 0.0;
    return res;
}

double default_penalty_weight(const Eigen::MatrixXd& A) {
    const double amax = A.size() > 0 ? A.cwiseAbs().maxCoeff() : 0.0;
    return 200.0 * std::max(1.0, amax);
}

namespace {

double residual_norm(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, const Eigen::VectorXd& x) {
    return (A * x - b).norm();
}

// Exact minimizer of ||A_P z - b|| subject to sum(z) = 1 on the given support,
// via the bordered normal equations. Returns nullopt when the solve is junk.
std::optional<Eigen::VectorXd> equality_polish(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                                               const std::vector<int>& support) {
    const auto p = static_cast<Eigen::Index>(support.size());
    Eigen::MatrixXd Ap(A.rows(), p);
    for (Eigen::Index j = 0; j < p; ++j) Ap.col(j) = A.col(support[static_cast<std::size_t>(j)]);

    Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(p + 1, p + 1);
    kkt.topLeftCorner(p, p) = 2.0 * Ap.transpose() * Ap;
    kkt.topRightCorner(p, 1).setOnes();
    kkt.bottomLeftCorner(1, p).setOnes();
    Eigen::VectorXd rhs(p + 1);
    rhs.head(p) = 2.0 * Ap.transpose() * b;
    rhs(p) = 1.0;

    Eigen::VectorXd sol = kkt.fullPivLu().solve(rhs);
    if (!sol.allFinite()) return std::nullopt;
    if ((kkt * sol - rhs).norm() > 1e-6 * std::max(1.0, rhs.norm())) return std::nullopt;

    Eigen::VectorXd z = Eigen::VectorXd::Zero(A.cols());
    for (Eigen::Index j = 0; j < p; ++j) {
        const double v = sol(j);
        if (v < -1e-12) return std::nullopt;  // support would change sign; keep penalty iterate
        z(support[static_cast<std::size_t>(j)]) = std::max(v, 0.0);
    }
    const double s = z.sum();
    if (s <= 0.0) return std::nullopt;
    z /= s;
    return z;
}

}  // namespace

namespace {

// Penalty-embedded NNLS on an (already normalized) problem.
NnlsResult penalty_nnls(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, double penalty) {
    Eigen::MatrixXd A_aug(A.rows() + 1, A.cols());
    A_aug.topRows(A.rows()) = A;
    A_aug.bottomRows(1).setConstant(penalty);
    Eigen::VectorXd b_aug(b.size() + 1);
    b_aug.head(b.size()) = b;
    b_aug(b.size()) = penalty;

    NnlsOptions opt;
    // Dual tolerance on the data scale; the penalty-row duals pass through
    // the same gate once the sum constraint has been driven in.
    opt.tol = 1e-9 * std::max(1.0, (A.transpose() * b).cwiseAbs().maxCoeff());
    return nnls(A_aug, b_aug, opt);
}

// Nonzero pattern with fp-noise components dropped.
std::vector<int> solution_support(const Eigen::VectorXd& x) {
    std::vector<int> support;
    for (Eigen::Index i = 0; i < x.size(); ++i)
        if (x(i) > 1e-12) support.push_back(static_cast<int>(i));
    return support;
}

}  // namespace

SimplexLsResult solve_simplex_ls(const SimplexLsProblem& problem) {
    const Eigen::MatrixXd& A = problem.coefficient_matrix;
    const Eigen::VectorXd& b = problem.target;
    const Eigen::Index k = A.cols();
    if (k < 1) throw std::invalid_argument("solve_simplex_ls: at least one unknown required");
    if (b.size() != A.rows()) throw std::invalid_argument("solve_simplex_ls: target length does not match row count");
    check_finite(A, b);

    const double penalty = problem.penalty_weight ? *problem.penalty_weight : default_penalty_weight(A);
    if (!(penalty > 0.0) || !std::isfinite(penalty))
        throw std::invalid_argument("solve_simplex_ls: penalty_weight must be positive and finite");

    // The solution is invariant under a joint scaling of A and b; solving in
    // normalized units keeps the augmented system well-conditioned when the
    // data is very small or very large relative to the penalty.
    double scale = std::max(A.size() > 0 ? A.cwiseAbs().maxCoeff() : 0.0,
                            b.size() > 0 ? b.cwiseAbs().maxCoeff() : 0.0);
    if (!(scale > 0.0)) scale = 1.0;
    const Eigen::MatrixXd An = A / scale;
    const Eigen::VectorXd bn = b / scale;

    NnlsResult raw = penalty_nnls(An, bn, penalty / scale);

    SimplexLsResult out;
    out.nnls_iterations = raw.iterations;
    out.nnls_converged = raw.converged;

    const double raw_sum = raw.x.sum();
    out.raw_sum_violation = std::abs(raw_sum - 1.0);

    std::vector<std::vector<int>> supports;
    supports.push_back(solution_support(raw.x));

    // When the requested penalty towers over the data (the default's floor on
    // small-magnitude problems), its nnls run can misread the support. A
    // second run at a data-proportionate weight feeds the polish as well; the
    // residual comparison below keeps whichever support wins.
    const double balanced = default_penalty_weight(An);
    if (penalty / scale > 2.0 * balanced) {
        NnlsResult detect = penalty_nnls(An, bn, balanced);
        auto support = solution_support(detect.x);
        if (support != supports.front()) supports.push_back(std::move(support));
    }

    // Candidate 1: renormalized penalty iterate.
    Eigen::VectorXd best;
    if (raw_sum > 1e-8) {
        for (Eigen::Index i = 0; i < k; ++i)
            if (raw.x(i) <= 1e-12) raw.x(i) = 0.0;
        best = raw.x / raw.x.sum();
    } else {
        best = Eigen::VectorXd::Zero(k);
        best(0) = 1.0;  // degenerate all-zero iterate; vertex sweep decides below
    }
    double best_res = residual_norm(An, bn, best);

    // Candidate 2: exact equality-constrained solves on the detected supports.
    for (const auto& support : supports) {
        if (support.empty()) continue;
        if (auto polished = equality_polish(An, bn, support)) {
            const double r = residual_norm(An, bn, *polished);
            if (r < best_res) {
                best = *polished;
                best_res = r;
                out.polished = true;
            }
        }
    }

    // Candidate 3: best simplex vertex.
    for (Eigen::Index i = 0; i < k; ++i) {
        const double r = (An.col(i) - bn).norm();
        if (r < best_res) {
            best = Eigen::VectorXd::Zero(k);
            best(i) = 1.0;
            best_res = r;
            out.polished = false;
        }
    }

    for (Eigen::Index i = 0; i < k; ++i)
        if (best(i) > -1e-12 && best(i) < 1e-12) best(i) = 0.0;
    best /= best.sum();

    out.weights = best;
    out.residual = residual_norm(A, b, best);
    return out;
}

}  // namespace archetypes
