#include "archetypes/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "archetypes/rng.hpp"
#include "archetypes/scaling.hpp"

namespace archetypes {

PercentileProfile percentile_profile(const ArchetypalModel& model, const DataMatrix& data) {
    data.validate();
    if (data.m() != model.archetypes.cols())
        throw InputError("percentile_profile: column count differs from the fitted model");
    if (data.column_names != model.column_names)
        throw InputError("percentile_profile: column names differ from the fitted model");

    Eigen::MatrixXd z = model.archetypes;
    if (model.scaling && model.scaling->method != ScaleMethod::none)
        z = unscale_archetypes(z, *model.scaling);

    const Eigen::Index n = data.n();
    PercentileProfile profile;
    profile.column_names = data.column_names;
    profile.values.resize(model.k, data.m());
    for (int j = 0; j < model.k; ++j) {
        for (Eigen::Index c = 0; c < data.m(); ++c) {
            Eigen::Index count = 0;
            for (Eigen::Index i = 0; i < n; ++i)
                if (data.values(i, c) <= z(j, c)) ++count;
            profile.values(j, c) = 100.0 * static_cast<double>(count) / static_cast<double>(n);
        }
    }
    return profile;
}

namespace {

std::string label_or_index(const DataMatrix& data, Eigen::Index i) {
    if (!data.row_labels.empty()) return data.row_labels[static_cast<std::size_t>(i)];
    return "row_" + std::to_string(i + 1);
}

}  // namespace

AssignmentTable assignments(const ArchetypalModel& model, const DataMatrix& data) {
    if (model.alpha.rows() != data.n())
        throw InputError("assignments: alpha row count differs from the data");

    AssignmentTable table;
    table.rows.reserve(static_cast<std::size_t>(data.n()));
    for (Eigen::Index i = 0; i < data.n(); ++i) {
        AssignmentRow row;
        row.row_label = label_or_index(data, i);
        row.alpha = model.alpha.row(i).transpose();
        int best = 0;
        for (int j = 1; j < model.k; ++j)
            if (row.alpha(j) > row.alpha(best)) best = j;
        row.nearest_archetype = best + 1;
        row.max_alpha = row.alpha(best);
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::vector<Eigen::Index> nearest_observations(const ArchetypalModel& model, const DataMatrix& data) {
    if (model.alpha.rows() != data.n())
        throw InputError("nearest_observations: alpha row count differs from the data");
    if (data.m() != model.archetypes.cols())
        throw InputError("nearest_observations: column count differs from the fitted model");

    std::vector<Eigen::Index> nearest(static_cast<std::size_t>(model.k));
    for (int j = 0; j < model.k; ++j) {
        Eigen::Index best = 0;
        double best_alpha = -1.0;
        double best_dist = std::numeric_limits<double>::infinity();
        for (Eigen::Index i = 0; i < data.n(); ++i) {
            const double a = model.alpha(i, j);
            if (a < best_alpha) continue;
            const double d = (data.values.row(i) - model.archetypes.row(j)).norm();
            if (a > best_alpha || d < best_dist) {
                best = i;
                best_alpha = a;
                best_dist = d;
            }
        }
        nearest[static_cast<std::size_t>(j)] = best;
    }
    return nearest;
}

std::vector<CohortRow> threshold_cohort(const ArchetypalModel& model, const DataMatrix& data,
                                        int archetype_index, double t) {
    if (archetype_index < 0 || archetype_index >= model.k)
        throw ConfigError("threshold_cohort: archetype index out of range");
    if (t < 0.0 || t > 1.0) throw ConfigError("threshold_cohort: threshold must be in [0, 1]");
    if (model.alpha.rows() != data.n())
        throw InputError("threshold_cohort: alpha row count differs from the data");

    std::vector<CohortRow> rows;
    for (Eigen::Index i = 0; i < data.n(); ++i) {
        const double a = model.alpha(i, archetype_index);
        if (a > t) {
            CohortRow row;
            row.index = i;
            row.row_label = label_or_index(data, i);
            row.alpha = model.alpha.row(i).transpose();
            row.weight = a;
            rows.push_back(std::move(row));
        }
    }
    std::stable_sort(rows.begin(), rows.end(),
                     [](const CohortRow& a, const CohortRow& b) { return a.weight > b.weight; });
    return rows;
}

std::vector<CohortRow> composition_query(const ArchetypalModel& model, const DataMatrix& data,
                                         const std::function<bool(const Eigen::VectorXd&)>& predicate,
                                         int sort_archetype) {
    if (sort_archetype < 0 || sort_archetype >= model.k)
        throw ConfigError("composition_query: sort archetype out of range");
    if (model.alpha.rows() != data.n())
        throw InputError("composition_query: alpha row count differs from the data");

    std::vector<CohortRow> rows;
    for (Eigen::Index i = 0; i < data.n(); ++i) {
        Eigen::VectorXd a = model.alpha.row(i).transpose();
        if (!predicate(a)) continue;
        CohortRow row;
        row.index = i;
        row.row_label = label_or_index(data, i);
        row.weight = a(sort_archetype);
        row.alpha = std::move(a);
        rows.push_back(std::move(row));
    }
    std::stable_sort(rows.begin(), rows.end(),
                     [](const CohortRow& a, const CohortRow& b) { return a.weight > b.weight; });
    return rows;
}

std::vector<CohortRow> sample_cohort(const std::vector<CohortRow>& cohort, std::size_t count,
                                     std::uint64_t seed) {
    if (count >= cohort.size()) return cohort;
    Rng rng(seed);
    auto picks = rng.sample_without_replacement(cohort.size(), count);
    std::sort(picks.begin(), picks.end());
    std::vector<CohortRow> out;
    out.reserve(count);
    for (const auto p : picks) out.push_back(cohort[p]);
    return out;
}

Eigen::MatrixX2d ternary_coordinates(const ArchetypalModel& model) {
    if (model.k != 3) throw ConfigError("ternary_coordinates: requires a k = 3 model");
    const double h = std::sqrt(3.0) / 2.0;
    Eigen::MatrixX2d coords(model.alpha.rows(), 2);
    for (Eigen::Index i = 0; i < model.alpha.rows(); ++i) {
        const double a2 = model.alpha(i, 1);
        const double a3 = model.alpha(i, 2);
        coords(i, 0) = a2 + 0.5 * a3;
        coords(i, 1) = h * a3;
    }
    return coords;
}

namespace {

double cross(const Eigen::Vector2d& o, const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
    return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

Eigen::Vector2d point_at(const Eigen::MatrixX2d& pts, Eigen::Index i) {
    return {pts(i, 0), pts(i, 1)};
}

}  // namespace

HullInfo convex_hull_2d(const Eigen::MatrixX2d& points) {
    const Eigen::Index n = points.rows();
    if (n < 1) throw InputError("convex_hull_2d: need at least one point");
    if (!points.allFinite()) throw InputError("convex_hull_2d: non-finite coordinates");

    std::vector<Eigen::Index> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](Eigen::Index a, Eigen::Index b) {
        if (points(a, 0) != points(b, 0)) return points(a, 0) < points(b, 0);
        if (points(a, 1) != points(b, 1)) return points(a, 1) < points(b, 1);
        return a < b;  // duplicates keep the lowest index first
    });
    idx.erase(std::unique(idx.begin(), idx.end(),
                          [&](Eigen::Index a, Eigen::Index b) {
                              return points(a, 0) == points(b, 0) && points(a, 1) == points(b, 1);
                          }),
              idx.end());

    const std::size_t d = idx.size();
    if (d == 1) return {{idx[0]}, 1};
    if (d == 2) return {{idx[0], idx[1]}, 2};

    std::vector<Eigen::Index> hull(2 * d);
    std::size_t h = 0;
    for (std::size_t i = 0; i < d; ++i) {  // lower chain
        while (h >= 2 &&
               cross(point_at(points, hull[h - 2]), point_at(points, hull[h - 1]),
                     point_at(points, idx[i])) <= 0)
            --h;
        hull[h++] = idx[i];
    }
    for (std::size_t i = d - 1, lower = h + 1; i-- > 0;) {  // upper chain
        while (h >= lower &&
               cross(point_at(points, hull[h - 2]), point_at(points, hull[h - 1]),
                     point_at(points, idx[i])) <= 0)
            --h;
        hull[h++] = idx[i];
    }
    hull.resize(h - 1);  // last point equals the first; collinear inputs collapse to 2

    HullInfo info;
    info.vertex_indices = std::move(hull);
    info.N = static_cast<Eigen::Index>(info.vertex_indices.size());
    return info;
}

HullPosition point_in_hull(const HullInfo& hull, const Eigen::MatrixX2d& points,
                           const Eigen::Vector2d& query, double tol) {
    const auto& v = hull.vertex_indices;
    if (v.empty()) throw InputError("point_in_hull: empty hull");

    if (v.size() == 1) {
        const Eigen::Vector2d p = point_at(points, v[0]);
        return (query - p).norm() <= tol ? HullPosition::on : HullPosition::outside;
    }
    if (v.size() == 2) {
        const Eigen::Vector2d a = point_at(points, v[0]);
        const Eigen::Vector2d b = point_at(points, v[1]);
        const Eigen::Vector2d ab = b - a;
        const double len2 = ab.squaredNorm();
        const double s = len2 > 0 ? std::clamp((query - a).dot(ab) / len2, 0.0, 1.0) : 0.0;
        const double dist = (query - (a + s * ab)).norm();
        return dist <= tol ? HullPosition::on : HullPosition::outside;
    }

    // CCW polygon: signed distance to each edge; the minimum decides.
    double min_signed = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Eigen::Vector2d a = point_at(points, v[i]);
        const Eigen::Vector2d b = point_at(points, v[(i + 1) % v.size()]);
        const double len = (b - a).norm();
        if (len <= 0) continue;
        min_signed = std::min(min_signed, cross(a, b, query) / len);
    }
    if (min_signed < -tol) return HullPosition::outside;
    if (min_signed <= tol) return HullPosition::on;
    return HullPosition::inside;
}

}  // namespace archetypes
