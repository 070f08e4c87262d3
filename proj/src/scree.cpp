#include "archetypes/scree.hpp"

#include <cmath>

#include "archetypes/rng.hpp"

namespace archetypes {

ScreeSeries scree(const DataMatrix& data, int k_max, const FitConfig& config_template) {
    data.validate();
    if (k_max < 1) throw ConfigError("scree: k_max must be >= 1");
    if (k_max > data.n()) throw ConfigError("scree: k_max exceeds observation count");

    ScreeSeries series;
    series.k_max = k_max;
    series.entries.reserve(static_cast<std::size_t>(k_max));

    const ArchetypalModel* prev_best = nullptr;
    ArchetypalModel best_model;

    for (int k = 1; k <= k_max; ++k) {
        FitConfig config = config_template;
        config.k = k;

        ScreeEntry entry;
        entry.k = k;
        try {
            ArchetypalModel model;
            if (prev_best) {
                // Previous best solution plus random extra archetypes (one in
                // the normal case; more if an intermediate k failed). The seed
                // offset keeps these clear of the regular restart seeds.
                const Eigen::Index prev_k = prev_best->beta.rows();
                detail::WarmStart warm;
                warm.beta = Eigen::MatrixXd::Zero(k, data.n());
                warm.beta.topRows(prev_k) = prev_best->beta;
                Rng rng(config.seed + static_cast<std::uint64_t>(config.restarts) +
                        static_cast<std::uint64_t>(k) * 7919u);
                for (Eigen::Index j = prev_k; j < k; ++j)
                    warm.beta(j, static_cast<Eigen::Index>(rng.uniform_index(
                                     static_cast<std::size_t>(data.n())))) = 1.0;
                warm.alpha = Eigen::MatrixXd::Zero(data.n(), k);
                warm.alpha.leftCols(prev_k) = prev_best->alpha;
                model = detail::fit_impl(data, config, &warm, true);
            } else {
                model = detail::fit_impl(data, config, nullptr, true);
            }

            entry.best_rss = model.rss;
            entry.best_rss_rel = model.rss_rel;
            double lo = model.rss, hi = model.rss;
            int converged = 0, counted = 0;
            for (const auto& r : model.restarts) {
                if (!r.error.empty()) continue;
                lo = std::min(lo, r.rss);
                hi = std::max(hi, r.rss);
                if (r.converged) ++converged;
                ++counted;
            }
            entry.restart_rss_spread = hi - lo;
            entry.converged_fraction = counted > 0 ? static_cast<double>(converged) / counted : 0.0;

            best_model = std::move(model);
            prev_best = &best_model;
        } catch (const Error& e) {
            entry.error = e.what();  // record and keep going; the warm chain reuses the last good fit
        }
        series.entries.push_back(std::move(entry));
    }
    return series;
}

ElbowSuggestion suggest_elbow(const ScreeSeries& series) {
    const auto& e = series.entries;
    if (e.size() < 3) throw ConfigError("suggest_elbow: need at least 3 scree entries");
    for (const auto& entry : e)
        if (!entry.error.empty())
            throw ConfigError("suggest_elbow: scree entry k=" + std::to_string(entry.k) + " failed");

    ElbowSuggestion out;
    double best_score = 0.0;
    for (std::size_t i = 1; i + 1 < e.size(); ++i) {
        const double score = e[i - 1].best_rss - 2.0 * e[i].best_rss + e[i + 1].best_rss;
        out.scores.emplace_back(e[i].k, score);
        if (out.suggested_k == 0 || score > best_score) {
            best_score = score;
            out.suggested_k = e[i].k;
        }
    }
    return out;
}

}  // namespace archetypes
