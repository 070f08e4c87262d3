#include "archetypes/model_io.hpp"

#include <openssl/evp.h>

#include <cstdlib>
#include <ctime>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "archetypes/scaling.hpp"

namespace archetypes {

using nlohmann::json;

namespace {

json matrix_to_json(const Eigen::MatrixXd& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

Eigen::MatrixXd matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) return Eigen::MatrixXd(0, 0);
    const auto rows = static_cast<Eigen::Index>(j.size());
    const auto cols = static_cast<Eigen::Index>(j.at(0).size());
    Eigen::MatrixXd m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index c = 0; c < cols; ++c) m(i, c) = j.at(i).at(c).get<double>();
    return m;
}

json vector_to_json(const Eigen::VectorXd& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
    return out;
}

Eigen::VectorXd vector_from_json(const json& j) {
    Eigen::VectorXd v(static_cast<Eigen::Index>(j.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = j.at(i).get<double>();
    return v;
}

json scaling_to_json(const ScalingParams& params) {
    return json{{"method", to_string(params.method)},
                {"offset", vector_to_json(params.offset)},
                {"divisor", vector_to_json(params.divisor)},
                {"constant_columns", params.constant_columns}};
}

ScalingParams scaling_from_json(const json& j) {
    ScalingParams params;
    params.method = scale_method_from_string(j.at("method").get<std::string>());
    params.offset = vector_from_json(j.at("offset"));
    params.divisor = vector_from_json(j.at("divisor"));
    params.constant_columns = j.at("constant_columns").get<std::vector<int>>();
    return params;
}

}  // namespace

std::string model_to_json(const ArchetypalModel& model) {
    json restarts = json::array();
    for (const auto& r : model.restarts) {
        restarts.push_back(json{{"seed", r.seed},
                                {"init", r.init},
                                {"rss", r.rss},
                                {"iterations", r.iterations},
                                {"converged", r.converged},
                                {"rss_log", r.rss_log},
                                {"error", r.error}});
    }

    Eigen::MatrixXd original = model.archetypes;
    if (model.scaling && model.scaling->method != ScaleMethod::none)
        original = unscale_archetypes(model.archetypes, *model.scaling);

    json doc{{"schema_version", kModelSchemaVersion},
             {"k", model.k},
             {"columns", model.column_names},
             {"row_labels", model.row_labels},
             {"archetypes_scaled", matrix_to_json(model.archetypes)},
             {"archetypes", matrix_to_json(original)},
             {"alpha", matrix_to_json(model.alpha)},
             {"beta", matrix_to_json(model.beta)},
             {"rss", model.rss},
             {"rss_rel", model.rss_rel},
             {"iterations", model.iterations},
             {"converged", model.converged},
             {"seed", model.seed},
             {"scaling", model.scaling ? scaling_to_json(*model.scaling) : json(nullptr)},
             {"restarts", std::move(restarts)},
             {"warnings", model.warnings}};
    return doc.dump(2) + "\n";
}

ArchetypalModel model_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("model JSON parse error: ") + e.what());
    }
    try {
        if (doc.at("schema_version").get<int>() != kModelSchemaVersion)
            throw InputError("unsupported model schema_version");
        ArchetypalModel model;
        model.k = doc.at("k").get<int>();
        model.column_names = doc.at("columns").get<std::vector<std::string>>();
        model.row_labels = doc.at("row_labels").get<std::vector<std::string>>();
        model.archetypes = matrix_from_json(doc.at("archetypes_scaled"));
        model.alpha = matrix_from_json(doc.at("alpha"));
        model.beta = matrix_from_json(doc.at("beta"));
        model.rss = doc.at("rss").get<double>();
        model.rss_rel = doc.at("rss_rel").get<double>();
        model.iterations = doc.at("iterations").get<int>();
        model.converged = doc.at("converged").get<bool>();
        model.seed = doc.at("seed").get<std::uint64_t>();
        if (!doc.at("scaling").is_null()) model.scaling = scaling_from_json(doc.at("scaling"));
        for (const auto& r : doc.at("restarts")) {
            RestartDiagnostics diag;
            diag.seed = r.at("seed").get<std::uint64_t>();
            diag.init = r.at("init").get<std::string>();
            diag.rss = r.at("rss").get<double>();
            diag.iterations = r.at("iterations").get<int>();
            diag.converged = r.at("converged").get<bool>();
            diag.rss_log = r.at("rss_log").get<std::vector<double>>();
            diag.error = r.at("error").get<std::string>();
            model.restarts.push_back(std::move(diag));
        }
        model.warnings = doc.at("warnings").get<std::vector<std::string>>();
        return model;
    } catch (const json::exception& e) {
        throw InputError(std::string("model JSON field error: ") + e.what());
    }
}

void save_model(const ArchetypalModel& model, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write file: " + path);
    out << model_to_json(model);
}

ArchetypalModel load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open model file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return model_from_json(buf.str());
}

std::string manifest_to_json(const RunManifest& m) {
    json doc{{"schema_version", kModelSchemaVersion},
             {"tool", "archetypes"},
             {"version", kToolVersion},
             {"command", m.command},
             {"input", json{{"path", m.input_path}, {"sha256", m.input_sha256}}},
             {"columns", m.columns},
             {"label_column", m.label_column},
             {"scale", m.scale},
             {"fit_config",
              json{{"k", m.fit_config.k},
                   {"restarts", m.fit_config.restarts},
                   {"max_iterations", m.fit_config.max_iterations},
                   {"rel_tolerance", m.fit_config.rel_tolerance},
                   {"penalty_weight",
                    m.fit_config.penalty_weight ? json(*m.fit_config.penalty_weight) : json(nullptr)},
                   {"init", m.fit_config.init == InitStrategy::furthest_sum ? "furthest-sum"
                                                                            : "random-beta"},
                   {"seed", m.fit_config.seed}}},
             {"created_utc", m.created_utc},
             {"outputs", m.outputs}};
    return doc.dump(2) + "\n";
}

RunManifest manifest_from_json(const std::string& text) {
    try {
        const json doc = json::parse(text);
        RunManifest m;
        m.command = doc.at("command").get<std::string>();
        m.input_path = doc.at("input").at("path").get<std::string>();
        m.input_sha256 = doc.at("input").at("sha256").get<std::string>();
        m.columns = doc.at("columns").get<std::vector<std::string>>();
        m.label_column = doc.at("label_column").get<std::string>();
        m.scale = doc.at("scale").get<std::string>();
        const json& fc = doc.at("fit_config");
        m.fit_config.k = fc.at("k").get<int>();
        m.fit_config.restarts = fc.at("restarts").get<int>();
        m.fit_config.max_iterations = fc.at("max_iterations").get<int>();
        m.fit_config.rel_tolerance = fc.at("rel_tolerance").get<double>();
        if (!fc.at("penalty_weight").is_null())
            m.fit_config.penalty_weight = fc.at("penalty_weight").get<double>();
        m.fit_config.init = fc.at("init").get<std::string>() == "random-beta"
                                ? InitStrategy::random_beta
                                : InitStrategy::furthest_sum;
        m.fit_config.seed = fc.at("seed").get<std::uint64_t>();
        m.created_utc = doc.at("created_utc").get<std::string>();
        m.outputs = doc.at("outputs").get<std::vector<std::string>>();
        return m;
    } catch (const json::exception& e) {
        throw InputError(std::string("manifest JSON error: ") + e.what());
    }
}

std::string sha256_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file for digest: " + path);

    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    if (!ctx) throw Error("sha256: context allocation failed");
    EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
    char buf[1 << 16];
    while (in.read(buf, sizeof(buf)) || in.gcount() > 0)
        EVP_DigestUpdate(ctx, buf, static_cast<std::size_t>(in.gcount()));
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx, digest, &len);
    EVP_MD_CTX_free(ctx);

    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 0xf]);
    }
    return out;
}

std::string current_timestamp_utc() {
    std::time_t t = 0;
    if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"))
        t = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace archetypes
