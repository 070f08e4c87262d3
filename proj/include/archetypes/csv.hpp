#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "archetypes/data_matrix.hpp"

namespace archetypes {

// A parsed CSV: header plus string cells. Quoted fields may contain the
// delimiter, doubled quotes, and newlines.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

CsvTable read_csv(std::istream& in, char delimiter = ',');
CsvTable read_csv_file(const std::string& path, char delimiter = ',');

// Writes one CSV record with RFC-style quoting (fields containing the
// delimiter, quotes, or newlines are quoted; quotes are doubled).
void write_csv_row(std::ostream& out, const std::vector<std::string>& fields, char delimiter = ',');

// Shortest round-trip decimal form of a double (to_chars).
std::string format_double(double v);

// Non-selected, non-label columns kept as strings for report joins.
struct TableMeta {
    std::vector<std::string> column_names;
    std::vector<std::vector<std::string>> rows;  // one per data row
};

struct IngestResult {
    DataMatrix data;
    TableMeta meta;
};

// Loads the selected columns of a CSV file into a DataMatrix. All selected
// cells must parse as finite numbers; failures name the offending cell.
IngestResult ingest_csv(const std::string& path, const std::vector<std::string>& columns,
                        const std::string& label_column = "", char delimiter = ',');

}  // namespace archetypes
