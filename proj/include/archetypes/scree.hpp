#pragma once

#include <string>
#include <vector>

#include "archetypes/fit.hpp"

namespace archetypes {

struct ScreeEntry {
    int k = 0;
    double best_rss = 0.0;
    double best_rss_rel = 0.0;
    double restart_rss_spread = 0.0;  // max - min final RSS over restarts
    double converged_fraction = 0.0;
    std::string error;  // non-empty when the fit for this k failed
};

struct ScreeSeries {
    std::vector<ScreeEntry> entries;  // k = 1..k_max, no gaps
    int k_max = 0;
};

// Fits k = 1..k_max, each a full multi-restart fit. From k = 2 on, one extra
// restart is warm-started from the previous best solution plus one random
// archetype, which makes best_rss non-increasing in k.
ScreeSeries scree(const DataMatrix& data, int k_max, const FitConfig& config_template);

struct ElbowSuggestion {
    int suggested_k = 0;
    // Discrete second difference rss(k-1) - 2 rss(k) + rss(k+1) per interior k.
    std::vector<std::pair<int, double>> scores;
};

// Largest curvature of the scree curve; ties go to the smaller k.
ElbowSuggestion suggest_elbow(const ScreeSeries& series);

}  // namespace archetypes
