#include "archetypes/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace archetypes {

CsvTable read_csv(std::istream& in, char delimiter) {
    CsvTable table;
    std::vector<std::string> record;
    std::string field;
    bool quoted = false;
    bool any_field = false;

    auto end_field = [&] {
        record.push_back(std::move(field));
        field.clear();
        any_field = true;
    };
    auto end_record = [&] {
        end_field();
        if (table.header.empty())
            table.header = std::move(record);
        else
            table.rows.push_back(std::move(record));
        record.clear();
        any_field = false;
    };

    char c;
    while (in.get(c)) {
        if (quoted) {
            if (c == '"') {
                if (in.peek() == '"') {
                    in.get(c);
                    field.push_back('"');
                } else {
                    quoted = false;
                }
            } else {
                field.push_back(c);
            }
        } else if (c == '"' && field.empty()) {
            quoted = true;
        } else if (c == delimiter) {
            end_field();
        } else if (c == '\n') {
            if (!field.empty() && field.back() == '\r') field.pop_back();
            if (field.empty() && !any_field && record.empty()) continue;  // blank line
            end_record();
        } else {
            field.push_back(c);
        }
    }
    if (!field.empty() || any_field) end_record();

    if (table.header.empty()) throw InputError("CSV is empty: header row required");
    for (const auto& row : table.rows)
        if (row.size() != table.header.size())
            throw InputError("CSV row has " + std::to_string(row.size()) + " fields, expected " +
                             std::to_string(table.header.size()));
    return table;
}

CsvTable read_csv_file(const std::string& path, char delimiter) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path);
    return read_csv(in, delimiter);
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields, char delimiter) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) out.put(delimiter);
        const std::string& f = fields[i];
        const bool needs_quotes = f.find_first_of("\"\r\n") != std::string::npos ||
                                  f.find(delimiter) != std::string::npos;
        if (!needs_quotes) {
            out << f;
            continue;
        }
        out.put('"');
        for (char c : f) {
            if (c == '"') out.put('"');
            out.put(c);
        }
        out.put('"');
    }
    out.put('\n');
}

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace {

double parse_cell(const std::string& cell, std::size_t row_1based, const std::string& column) {
    const auto bad = [&](const char* what) {
        return InputError(std::string(what) + " in row " + std::to_string(row_1based) +
                          ", column '" + column + "'");
    };
    std::string trimmed = cell;
    const auto first = trimmed.find_first_not_of(" \t");
    const auto last = trimmed.find_last_not_of(" \t");
    trimmed = first == std::string::npos ? "" : trimmed.substr(first, last - first + 1);
    if (trimmed.empty()) throw bad("missing value");

    double value = 0.0;
    const char* begin = trimmed.data();
    const char* end = begin + trimmed.size();
    auto res = std::from_chars(begin, end, value);
    if (res.ec != std::errc{} || res.ptr != end) throw bad("unparsable numeric cell");
    if (!std::isfinite(value)) throw bad("non-finite value");
    return value;
}

}  // namespace

IngestResult ingest_csv(const std::string& path, const std::vector<std::string>& columns,
                        const std::string& label_column, char delimiter) {
    if (columns.empty()) throw InputError("ingest_csv: empty column selection");

    const CsvTable table = read_csv_file(path, delimiter);
    if (table.rows.empty()) throw InputError("ingest_csv: no data rows in " + path);

    auto find_column = [&](const std::string& name) {
        const auto it = std::find(table.header.begin(), table.header.end(), name);
        if (it == table.header.end()) throw InputError("ingest_csv: missing column '" + name + "'");
        return static_cast<std::size_t>(it - table.header.begin());
    };

    std::vector<std::size_t> selected;
    selected.reserve(columns.size());
    for (const auto& name : columns) {
        if (!label_column.empty() && name == label_column)
            throw InputError("ingest_csv: label column '" + name + "' cannot be selected as numeric");
        selected.push_back(find_column(name));
    }
    std::size_t label_idx = table.header.size();
    if (!label_column.empty()) label_idx = find_column(label_column);

    IngestResult out;
    out.data.column_names = columns;
    out.data.values.resize(static_cast<Eigen::Index>(table.rows.size()),
                           static_cast<Eigen::Index>(columns.size()));

    std::vector<std::size_t> meta_idx;
    for (std::size_t c = 0; c < table.header.size(); ++c) {
        if (c == label_idx) continue;
        if (std::find(selected.begin(), selected.end(), c) != selected.end()) continue;
        meta_idx.push_back(c);
        out.meta.column_names.push_back(table.header[c]);
    }

    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const auto& row = table.rows[r];
        for (std::size_t c = 0; c < selected.size(); ++c)
            out.data.values(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                parse_cell(row[selected[c]], r + 1, columns[c]);
        if (label_idx < table.header.size()) out.data.row_labels.push_back(row[label_idx]);
        std::vector<std::string> meta_row;
        meta_row.reserve(meta_idx.size());
        for (std::size_t c : meta_idx) meta_row.push_back(row[c]);
        out.meta.rows.push_back(std::move(meta_row));
    }

    out.data.validate();
    return out;
}

}  // namespace archetypes
