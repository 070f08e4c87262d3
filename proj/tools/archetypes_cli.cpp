// Command-line front end: fit archetypes to CSV data and emit the analysis
// artifacts (model, scree series, percentile profiles, assignments, ternary
// coordinates, hull polylines) as plot-ready CSV/JSON files.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "archetypes/analytics.hpp"
#include "archetypes/csv.hpp"
#include "archetypes/fit.hpp"
#include "archetypes/model_io.hpp"
#include "archetypes/scaling.hpp"
#include "archetypes/scree.hpp"

namespace fs = std::filesystem;
using namespace archetypes;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitConvergence = 4;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("ARCHETYPES_SEED")) {
        char* end = nullptr;
        const auto v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return v;
    }
    return 42;
}

std::vector<std::string> split_columns(const std::string& spec) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(spec);
    while (std::getline(in, item, ',')) out.push_back(item);
    return out;
}

struct CommonFitFlags {
    std::string input;
    std::string columns;
    std::string label_column;
    std::string scale = "zscore";
    std::string init = "furthest-sum";
    std::string out_dir = ".";
    std::string delimiter = ",";
    int restarts = 10;
    int max_iter = 100;
    double tol = 1e-6;
    std::uint64_t seed = default_seed();

    void attach_io(CLI::App* cmd) {
        cmd->add_option("--input", input, "input CSV file")->required();
        cmd->add_option("--label-column", label_column, "column holding row labels");
        cmd->add_option("--delimiter", delimiter, "field delimiter (default ,)");
        cmd->add_option("--out-dir", out_dir, "output directory (default .)");
    }

    void attach_columns(CLI::App* cmd) {
        cmd->add_option("--columns", columns, "comma-separated numeric columns")->required();
    }

    void attach_fit_knobs(CLI::App* cmd) {
        cmd->add_option("--scale", scale, "none|zscore|minmax (default zscore)");
        cmd->add_option("--init", init, "furthest-sum|random-beta");
        cmd->add_option("--restarts", restarts, "random restarts (default 10)");
        cmd->add_option("--seed", seed, "random seed (default $ARCHETYPES_SEED or 42)");
        cmd->add_option("--max-iter", max_iter, "iteration cap per restart");
        cmd->add_option("--tol", tol, "relative RSS improvement threshold");
    }

    char delim() const {
        if (delimiter.size() != 1) throw ConfigError("delimiter must be a single character");
        return delimiter[0];
    }

    FitConfig fit_config(int k) const {
        FitConfig config;
        config.k = k;
        config.restarts = restarts;
        config.max_iterations = max_iter;
        config.rel_tolerance = tol;
        config.seed = seed;
        if (init == "furthest-sum")
            config.init = InitStrategy::furthest_sum;
        else if (init == "random-beta")
            config.init = InitStrategy::random_beta;
        else
            throw ConfigError("unknown init strategy: " + init);
        return config;
    }
};

std::ofstream open_output(const fs::path& dir, const std::string& name) {
    fs::create_directories(dir);
    std::ofstream out(dir / name, std::ios::binary);
    if (!out) throw InputError("cannot write " + (dir / name).string());
    return out;
}

ArchetypalModel fit_standardized(const IngestResult& ingested, const CommonFitFlags& flags, int k) {
    const ScaleMethod method = scale_method_from_string(flags.scale);
    auto [scaled, params] = standardize(ingested.data, method);
    ArchetypalModel model = fit(scaled, flags.fit_config(k));
    model.scaling = params;
    return model;
}

RunManifest make_manifest(const std::string& command, const CommonFitFlags& flags,
                          const std::vector<std::string>& columns, const FitConfig& config,
                          std::vector<std::string> outputs) {
    RunManifest manifest;
    manifest.command = command;
    manifest.input_path = flags.input;
    manifest.input_sha256 = sha256_file(flags.input);
    manifest.columns = columns;
    manifest.label_column = flags.label_column;
    manifest.scale = flags.scale;
    manifest.fit_config = config;
    manifest.created_utc = current_timestamp_utc();
    manifest.outputs = std::move(outputs);
    return manifest;
}

std::string row_label(const ArchetypalModel& model, Eigen::Index i) {
    if (static_cast<std::size_t>(i) < model.row_labels.size())
        return model.row_labels[static_cast<std::size_t>(i)];
    return "row_" + std::to_string(i + 1);
}

// ---- subcommand bodies ----

int run_fit(const CommonFitFlags& flags, int k) {
    const auto columns = split_columns(flags.columns);
    const IngestResult ingested = ingest_csv(flags.input, columns, flags.label_column, flags.delim());
    const ArchetypalModel model = fit_standardized(ingested, flags, k);

    const fs::path dir(flags.out_dir);
    fs::create_directories(dir);
    save_model(model, (dir / "model.json").string());
    auto manifest = make_manifest("fit", flags, columns, flags.fit_config(k), {"model.json"});
    open_output(dir, "manifest.json") << manifest_to_json(manifest);

    std::cout << "model.json: k=" << model.k << " rss=" << format_double(model.rss)
              << " rss_rel=" << format_double(model.rss_rel)
              << " converged=" << (model.converged ? "true" : "false") << "\n";
    return 0;
}

int run_scree(const CommonFitFlags& flags, int k_max) {
    const auto columns = split_columns(flags.columns);
    const IngestResult ingested = ingest_csv(flags.input, columns, flags.label_column, flags.delim());
    const ScaleMethod method = scale_method_from_string(flags.scale);
    auto [scaled, params] = standardize(ingested.data, method);

    const ScreeSeries series = scree(scaled, k_max, flags.fit_config(1));

    const fs::path dir(flags.out_dir);
    {
        auto out = open_output(dir, "scree.csv");
        write_csv_row(out, {"k", "rss", "rss_rel", "spread", "converged_fraction"});
        for (const auto& e : series.entries) {
            if (!e.error.empty()) {
                write_csv_row(out, {std::to_string(e.k), "", "", "", ""});
                continue;
            }
            write_csv_row(out, {std::to_string(e.k), format_double(e.best_rss),
                                format_double(e.best_rss_rel), format_double(e.restart_rss_spread),
                                format_double(e.converged_fraction)});
        }
    }

    nlohmann::json elbow{{"k_max", series.k_max},
                         {"suggested_k", nullptr},
                         {"scores", nlohmann::json::array()},
                         {"series", nlohmann::json::array()}};
    for (const auto& e : series.entries) {
        nlohmann::json entry{{"k", e.k}};
        if (e.error.empty()) {
            entry["rss"] = e.best_rss;
            entry["rss_rel"] = e.best_rss_rel;
            entry["spread"] = e.restart_rss_spread;
            entry["converged_fraction"] = e.converged_fraction;
        } else {
            entry["error"] = e.error;
        }
        elbow["series"].push_back(std::move(entry));
    }
    if (series.entries.size() >= 3) {
        try {
            const ElbowSuggestion suggestion = suggest_elbow(series);
            elbow["suggested_k"] = suggestion.suggested_k;
            for (const auto& [k, score] : suggestion.scores)
                elbow["scores"].push_back({{"k", k}, {"score", score}});
            std::cout << "suggested k = " << suggestion.suggested_k << "\n";
        } catch (const Error& e) {
            elbow["error"] = e.what();
        }
    } else {
        elbow["error"] = "need at least 3 entries for an elbow suggestion";
    }
    open_output(dir, "elbow.json") << elbow.dump(2) << "\n";
    return 0;
}

int run_profile(const std::string& model_path, const CommonFitFlags& flags) {
    const ArchetypalModel model = load_model(model_path);
    const IngestResult ingested =
        ingest_csv(flags.input, model.column_names, flags.label_column, flags.delim());
    const PercentileProfile profile = percentile_profile(model, ingested.data);

    Eigen::MatrixXd original = model.archetypes;
    if (model.scaling && model.scaling->method != ScaleMethod::none)
        original = unscale_archetypes(model.archetypes, *model.scaling);

    auto out = open_output(fs::path(flags.out_dir), "percentiles.csv");
    write_csv_row(out, {"archetype", "column", "value", "percentile"});
    for (int j = 0; j < model.k; ++j)
        for (Eigen::Index c = 0; c < profile.values.cols(); ++c)
            write_csv_row(out, {std::to_string(j + 1), profile.column_names[static_cast<std::size_t>(c)],
                                format_double(original(j, c)), format_double(profile.values(j, c))});
    return 0;
}

int run_assign(const std::string& model_path, const CommonFitFlags& flags,
               std::optional<int> archetype, std::optional<double> threshold) {
    if (archetype.has_value() != threshold.has_value())
        throw ConfigError("--archetype and --threshold must be given together");

    const ArchetypalModel model = load_model(model_path);
    const IngestResult ingested =
        ingest_csv(flags.input, model.column_names, flags.label_column, flags.delim());
    if (ingested.data.n() != model.alpha.rows())
        throw InputError("assign: input row count differs from the fitted model");

    DataMatrix data = ingested.data;
    if (data.row_labels.empty()) data.row_labels = model.row_labels;

    std::vector<std::string> alpha_headers;
    for (int j = 0; j < model.k; ++j) alpha_headers.push_back("alpha_" + std::to_string(j + 1));

    const fs::path dir(flags.out_dir);
    if (!archetype) {
        const AssignmentTable table = assignments(model, data);
        auto out = open_output(dir, "assignments.csv");
        std::vector<std::string> header = {"label"};
        for (const auto& c : ingested.meta.column_names) header.push_back(c);
        header.insert(header.end(), alpha_headers.begin(), alpha_headers.end());
        header.push_back("nearest_archetype");
        header.push_back("max_alpha");
        write_csv_row(out, header);
        for (std::size_t i = 0; i < table.rows.size(); ++i) {
            const auto& r = table.rows[i];
            std::vector<std::string> fields = {r.row_label};
            for (const auto& cell : ingested.meta.rows[i]) fields.push_back(cell);
            for (int j = 0; j < model.k; ++j) fields.push_back(format_double(r.alpha(j)));
            fields.push_back(std::to_string(r.nearest_archetype));
            fields.push_back(format_double(r.max_alpha));
            write_csv_row(out, fields);
        }
        return 0;
    }

    if (*archetype < 1 || *archetype > model.k)
        throw ConfigError("assign: --archetype must be in 1.." + std::to_string(model.k));
    const auto cohort = threshold_cohort(model, data, *archetype - 1, *threshold);
    auto out = open_output(dir, "cohort.csv");
    std::vector<std::string> header = {"label"};
    for (const auto& c : ingested.meta.column_names) header.push_back(c);
    header.insert(header.end(), alpha_headers.begin(), alpha_headers.end());
    write_csv_row(out, header);
    for (const auto& r : cohort) {
        std::vector<std::string> fields = {r.row_label};
        for (const auto& cell : ingested.meta.rows[static_cast<std::size_t>(r.index)])
            fields.push_back(cell);
        for (int j = 0; j < model.k; ++j) fields.push_back(format_double(r.alpha(j)));
        write_csv_row(out, fields);
    }
    return 0;
}

int run_ternary(const std::string& model_path, const std::string& out_dir) {
    const ArchetypalModel model = load_model(model_path);
    if (model.k != 3) throw ConfigError("ternary: requires a k = 3 model");
    const Eigen::MatrixX2d coords = ternary_coordinates(model);

    auto out = open_output(fs::path(out_dir), "ternary.csv");
    write_csv_row(out, {"label", "alpha_1", "alpha_2", "alpha_3", "x", "y"});
    for (Eigen::Index i = 0; i < coords.rows(); ++i)
        write_csv_row(out, {row_label(model, i), format_double(model.alpha(i, 0)),
                            format_double(model.alpha(i, 1)), format_double(model.alpha(i, 2)),
                            format_double(coords(i, 0)), format_double(coords(i, 1))});
    return 0;
}

int run_hull(const CommonFitFlags& flags, const std::string& model_path) {
    const auto columns = split_columns(flags.columns);
    if (columns.size() != 2) throw ConfigError("hull: --columns must name exactly 2 columns");
    const IngestResult ingested = ingest_csv(flags.input, columns, flags.label_column, flags.delim());

    const Eigen::MatrixX2d pts = ingested.data.values;
    const HullInfo hull = convex_hull_2d(pts);

    auto out = open_output(fs::path(flags.out_dir), "hull.csv");
    write_csv_row(out, {"type", "index", "label", "x", "y"});
    for (const Eigen::Index v : hull.vertex_indices) {
        std::string label = ingested.data.row_labels.empty()
                                ? "row_" + std::to_string(v + 1)
                                : ingested.data.row_labels[static_cast<std::size_t>(v)];
        write_csv_row(out, {"vertex", std::to_string(v + 1), label, format_double(pts(v, 0)),
                            format_double(pts(v, 1))});
    }

    if (!model_path.empty()) {
        const ArchetypalModel model = load_model(model_path);
        Eigen::MatrixXd original = model.archetypes;
        if (model.scaling && model.scaling->method != ScaleMethod::none)
            original = unscale_archetypes(model.archetypes, *model.scaling);
        for (int j = 0; j < model.k; ++j) {
            Eigen::Vector2d z;
            for (int c = 0; c < 2; ++c) {
                const auto it = std::find(model.column_names.begin(), model.column_names.end(),
                                          columns[static_cast<std::size_t>(c)]);
                if (it == model.column_names.end())
                    throw InputError("hull: model does not contain column '" +
                                     columns[static_cast<std::size_t>(c)] + "'");
                z(c) = original(j, it - model.column_names.begin());
            }
            write_csv_row(out, {"archetype", std::to_string(j + 1),
                                "archetype_" + std::to_string(j + 1), format_double(z(0)),
                                format_double(z(1))});
        }
    }
    return 0;
}

void emit_error(int code, const std::string& type, const std::string& message) {
    nlohmann::json err{{"error", {{"code", code}, {"type", type}, {"message", message}}}};
    std::cerr << err.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"archetypal analysis of multivariate (sports) data"};
    app.require_subcommand(1);

    CommonFitFlags fit_flags, scree_flags, profile_flags, assign_flags, hull_flags;
    int k = 0, k_max = 0;
    std::string model_path, ternary_model, ternary_out = ".", hull_model;
    std::optional<int> archetype;
    std::optional<double> threshold;

    auto* cmd_fit = app.add_subcommand("fit", "fit k archetypes, write model.json + manifest.json");
    fit_flags.attach_io(cmd_fit);
    fit_flags.attach_columns(cmd_fit);
    fit_flags.attach_fit_knobs(cmd_fit);
    cmd_fit->add_option("--k", k, "number of archetypes")->required();

    auto* cmd_scree = app.add_subcommand("scree", "fit k = 1..k_max, write scree.csv + elbow.json");
    scree_flags.attach_io(cmd_scree);
    scree_flags.attach_columns(cmd_scree);
    scree_flags.attach_fit_knobs(cmd_scree);
    cmd_scree->add_option("--k-max", k_max, "largest k to fit")->required();

    auto* cmd_profile = app.add_subcommand("profile", "percentile profiles, write percentiles.csv");
    cmd_profile->add_option("--model", model_path, "model.json from fit")->required();
    profile_flags.attach_io(cmd_profile);

    auto* cmd_assign =
        app.add_subcommand("assign", "alpha table or threshold cohort, write assignments.csv/cohort.csv");
    cmd_assign->add_option("--model", model_path, "model.json from fit")->required();
    assign_flags.attach_io(cmd_assign);
    cmd_assign->add_option("--archetype", archetype, "1-based archetype for the cohort");
    cmd_assign->add_option("--threshold", threshold, "alpha threshold in [0,1)");

    auto* cmd_ternary = app.add_subcommand("ternary", "k=3 alpha coordinates, write ternary.csv");
    cmd_ternary->add_option("--model", ternary_model, "model.json from fit")->required();
    cmd_ternary->add_option("--out-dir", ternary_out, "output directory (default .)");

    auto* cmd_hull = app.add_subcommand("hull", "2-D convex hull, write hull.csv");
    hull_flags.attach_io(cmd_hull);
    hull_flags.attach_columns(cmd_hull);
    cmd_hull->add_option("--model", hull_model, "optional model.json overlay");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit_error(kExitUsage, "usage", e.what());
        return kExitUsage;
    }

    try {
        if (cmd_fit->parsed()) return run_fit(fit_flags, k);
        if (cmd_scree->parsed()) return run_scree(scree_flags, k_max);
        if (cmd_profile->parsed()) return run_profile(model_path, profile_flags);
        if (cmd_assign->parsed()) return run_assign(model_path, assign_flags, archetype, threshold);
        if (cmd_ternary->parsed()) return run_ternary(ternary_model, ternary_out);
        if (cmd_hull->parsed()) return run_hull(hull_flags, hull_model);
    } catch (const ConfigError& e) {
        emit_error(kExitUsage, "usage", e.what());
        return kExitUsage;
    } catch (const ConvergenceError& e) {
        emit_error(kExitConvergence, "convergence", e.what());
        return kExitConvergence;
    } catch (const InputError& e) {
        emit_error(kExitData, "data", e.what());
        return kExitData;
    } catch (const std::exception& e) {
        emit_error(1, "internal", e.what());
        return 1;
    }
    return 0;
}
