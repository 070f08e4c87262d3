#include "archetypes/fit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

#include "archetypes/rng.hpp"

namespace archetypes {

double compute_rss(const DataMatrix& data, const Eigen::MatrixXd& alpha,
                   const Eigen::MatrixXd& archetypes) {
    const Eigen::Index n = data.n();
    const Eigen::Index m = data.m();
    if (alpha.rows() != n || alpha.cols() != archetypes.rows() || archetypes.cols() != m)
        throw std::invalid_argument("compute_rss: dimension mismatch");
    const Eigen::MatrixXd recon = alpha * archetypes;
    double acc = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
        acc += (data.values.row(i) - recon.row(i)).squaredNorm();
    return std::sqrt(acc);
}

Eigen::MatrixXd update_alpha(const DataMatrix& data, const Eigen::MatrixXd& archetypes,
                             std::optional<double> penalty_weight,
                             const Eigen::MatrixXd* previous_alpha) {
    const Eigen::Index n = data.n();
    const Eigen::Index k = archetypes.rows();
    if (archetypes.cols() != data.m()) throw std::invalid_argument("update_alpha: archetype width mismatch");
    if (previous_alpha && (previous_alpha->rows() != n || previous_alpha->cols() != k))
        throw std::invalid_argument("update_alpha: previous alpha shape mismatch");

    const Eigen::MatrixXd At = archetypes.transpose();  // m x k
    const double penalty = penalty_weight ? *penalty_weight : default_penalty_weight(At);

    Eigen::MatrixXd alpha(n, k);
#pragma omp parallel for schedule(static)
    for (Eigen::Index i = 0; i < n; ++i) {
        const Eigen::VectorXd target = data.values.row(i).transpose();
        SimplexLsResult sol = solve_simplex_ls({At, target, penalty});
        if (previous_alpha) {
            const Eigen::VectorXd prev = previous_alpha->row(i).transpose();
            const double prev_res = (At * prev - target).norm();
            if (prev_res < sol.residual) {
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

    // Unconstrained optimum for the archetypes given alpha (min-norm solution
    // keeps unused archetypes harmless).
    const Eigen::MatrixXd ideal = alpha.completeOrthogonalDecomposition().solve(data.values);

    const Eigen::MatrixXd Xt = data.values.transpose();  // m x n
    const double penalty = penalty_weight ? *penalty_weight : default_penalty_weight(Xt);

    Eigen::MatrixXd beta(k, n);
#pragma omp parallel for schedule(static)
    for (Eigen::Index j = 0; j < k; ++j) {
        SimplexLsResult sol = solve_simplex_ls({Xt, ideal.row(j).transpose(), penalty});
        beta.row(j) = sol.weights.transpose();
    }
    Eigen::MatrixXd archetypes = beta * data.values;

    if (previous &&
        compute_rss(data, alpha, archetypes) > compute_rss(data, alpha, previous->second))
        return *previous;
    return {std::move(beta), std::move(archetypes)};
}

Eigen::MatrixXd init_beta(const DataMatrix& data, int k, InitStrategy strategy, std::uint64_t seed) {
    const Eigen::Index n = data.n();
    if (k < 1) throw ConfigError("init_beta: k must be >= 1");
    if (k > n) throw ConfigError("init_beta: k exceeds observation count");

    Rng rng(seed);
    std::vector<std::size_t> picks;

    if (strategy == InitStrategy::random_beta || n == 1) {
        picks = rng.sample_without_replacement(static_cast<std::size_t>(n), static_cast<std::size_t>(k));
    } else {
        // Furthest-sum: greedy max of summed distances to the picked set. The
        // random starting point only steers the first pick and is then dropped.
        const std::size_t nn = static_cast<std::size_t>(n);
        const std::size_t j0 = rng.uniform_index(nn);
        auto dist = [&](std::size_t a, std::size_t b) {
            return (data.values.row(static_cast<Eigen::Index>(a)) -
                    data.values.row(static_cast<Eigen::Index>(b)))
                .norm();
        };
        std::vector<double> score(nn);
        for (std::size_t i = 0; i < nn; ++i) score[i] = dist(i, j0);
        std::vector<bool> chosen(nn, false);

        std::size_t first = j0 == 0 ? 1 : 0;
        for (std::size_t i = 0; i < nn; ++i)
            if (i != j0 && score[i] > score[first]) first = i;
        picks.push_back(first);
        chosen[first] = true;
        for (std::size_t i = 0; i < nn; ++i) score[i] = dist(i, first);

        while (picks.size() < static_cast<std::size_t>(k)) {
            std::size_t best = nn;
            for (std::size_t i = 0; i < nn; ++i) {
                if (chosen[i]) continue;
                if (best == nn || score[i] > score[best]) best = i;
            }
            picks.push_back(best);
            chosen[best] = true;
            for (std::size_t i = 0; i < nn; ++i) score[i] += dist(i, best);
        }
    }

    Eigen::MatrixXd beta = Eigen::MatrixXd::Zero(k, n);
    for (int j = 0; j < k; ++j) beta(j, static_cast<Eigen::Index>(picks[static_cast<std::size_t>(j)])) = 1.0;
    return beta;
}

namespace {

struct RestartOutcome {
    Eigen::MatrixXd alpha;
    Eigen::MatrixXd beta;
    Eigen::MatrixXd archetypes;
    RestartDiagnostics diag;
    bool failed = false;
};

RestartOutcome run_restart(const DataMatrix& data, const FitConfig& config,
                           Eigen::MatrixXd beta0, std::string init_name, std::uint64_t seed,
                           const Eigen::MatrixXd* baseline_alpha) {
    RestartOutcome out;
    out.diag.seed = seed;
    out.diag.init = std::move(init_name);

    out.beta = std::move(beta0);
    out.archetypes = out.beta * data.values;
    out.alpha = update_alpha(data, out.archetypes, config.penalty_weight, baseline_alpha);
    double rss = compute_rss(data, out.alpha, out.archetypes);
    out.diag.rss_log.push_back(rss);

    for (int iter = 1; iter <= config.max_iterations; ++iter) {
        const std::pair<Eigen::MatrixXd, Eigen::MatrixXd> current{out.beta, out.archetypes};
        std::tie(out.beta, out.archetypes) =
            update_beta(data, out.alpha, config.penalty_weight, &current);

        out.alpha = update_alpha(data, out.archetypes, config.penalty_weight, &out.alpha);
        const double rss_new = compute_rss(data, out.alpha, out.archetypes);

        const double prev = out.diag.rss_log.back();
        out.diag.rss_log.push_back(rss_new);
        out.diag.iterations = iter;
        rss = rss_new;
        if ((prev - rss_new) / std::max(prev, 1e-30) < config.rel_tolerance) {
            out.diag.converged = true;
            break;
        }
    }
    out.diag.rss = rss;
    if (!std::isfinite(rss)) {
        out.failed = true;
        out.diag.error = "non-finite residual";
    }
    return out;
}

Eigen::MatrixXd mean_seeded_beta(const DataMatrix& data, int k, std::uint64_t seed) {
    const Eigen::Index n = data.n();
    Eigen::MatrixXd beta = Eigen::MatrixXd::Zero(k, n);
    beta.row(0).setConstant(1.0 / static_cast<double>(n));
    if (k > 1) {
        Rng rng(seed);
        auto picks = rng.sample_without_replacement(static_cast<std::size_t>(n),
                                                    static_cast<std::size_t>(k - 1));
        for (int j = 1; j < k; ++j) beta(j, static_cast<Eigen::Index>(picks[static_cast<std::size_t>(j - 1)])) = 1.0;
    }
    return beta;
}

}  // namespace

namespace detail {

ArchetypalModel fit_impl(const DataMatrix& data, const FitConfig& config,
                         const WarmStart* warm, bool parallel_restarts) {
    data.validate();
    const Eigen::Index n = data.n();
    if (config.k < 1) throw ConfigError("fit: k must be >= 1");
    if (config.k > n) throw ConfigError("fit: k exceeds observation count");
    if (config.restarts < 1) throw ConfigError("fit: restarts must be >= 1");
    if (config.max_iterations < 1) throw ConfigError("fit: max_iterations must be >= 1");
    if (!(config.rel_tolerance > 0)) throw ConfigError("fit: rel_tolerance must be positive");

    const int total = config.restarts + (warm ? 1 : 0);
    std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(total));

#pragma omp parallel for schedule(dynamic) if (parallel_restarts)
    for (int r = 0; r < total; ++r) {
        auto& slot = outcomes[static_cast<std::size_t>(r)];
        const std::uint64_t seed_r = config.seed + static_cast<std::uint64_t>(r);
        try {
            if (warm && r == total - 1) {
                slot = run_restart(data, config, warm->beta, "warm-start", seed_r, &warm->alpha);
            } else if (r == config.restarts - 1) {
                slot = run_restart(data, config, mean_seeded_beta(data, config.k, seed_r),
                                   "mean-seeded", seed_r, nullptr);
            } else {
                const char* name =
                    config.init == InitStrategy::furthest_sum ? "furthest-sum" : "random-beta";
                slot = run_restart(data, config, init_beta(data, config.k, config.init, seed_r),
                                   name, seed_r, nullptr);
            }
        } catch (const std::exception& e) {
            slot.failed = true;
            slot.diag.seed = seed_r;
            slot.diag.error = e.what();
        }
    }

    int best = -1;
    for (int r = 0; r < total; ++r) {
        const auto& o = outcomes[static_cast<std::size_t>(r)];
        if (o.failed) continue;
        if (best < 0 || o.diag.rss < outcomes[static_cast<std::size_t>(best)].diag.rss - 1e-12) best = r;
    }
    if (best < 0) {
        std::ostringstream msg;
        msg << "fit: all " << total << " restarts failed:";
        for (const auto& o : outcomes) msg << " [" << o.diag.error << "]";
        throw ConvergenceError(msg.str());
    }

    RestartOutcome& win = outcomes[static_cast<std::size_t>(best)];

    // Stable output order: archetypes sorted by descending row sum.
    std::vector<Eigen::Index> order(static_cast<std::size_t>(config.k));
    std::iota(order.begin(), order.end(), 0);
    const Eigen::VectorXd row_sums = win.archetypes.rowwise().sum();
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index a, Eigen::Index b) { return row_sums(a) > row_sums(b); });

    ArchetypalModel model;
    model.k = config.k;
    model.archetypes.resize(config.k, data.m());
    model.alpha.resize(n, config.k);
    model.beta.resize(config.k, n);
    for (int j = 0; j < config.k; ++j) {
        model.archetypes.row(j) = win.archetypes.row(order[static_cast<std::size_t>(j)]);
        model.beta.row(j) = win.beta.row(order[static_cast<std::size_t>(j)]);
        model.alpha.col(j) = win.alpha.col(order[static_cast<std::size_t>(j)]);
    }
    model.rss = compute_rss(data, model.alpha, model.archetypes);
    const double data_norm = data.values.norm();
    model.rss_rel = data_norm > 0 ? model.rss / data_norm : 0.0;
    model.iterations = win.diag.iterations;
    model.converged = win.diag.converged;
    model.seed = win.diag.seed;
    model.column_names = data.column_names;
    model.row_labels = data.row_labels;
    for (auto& o : outcomes) model.restarts.push_back(std::move(o.diag));

    const double dup_tol = 1e-12 * std::max(1.0, model.archetypes.cwiseAbs().maxCoeff());
    for (int a = 0; a < config.k; ++a)
        for (int b = a + 1; b < config.k; ++b)
            if ((model.archetypes.row(a) - model.archetypes.row(b)).cwiseAbs().maxCoeff() <= dup_tol)
                model.warnings.push_back("archetypes " + std::to_string(a + 1) + " and " +
                                         std::to_string(b + 1) + " coincide");
    return model;
}

}  // namespace detail

ArchetypalModel fit(const DataMatrix& data, const FitConfig& config) {
    return detail::fit_impl(data, config, nullptr, true);
}

}  // namespace archetypes
