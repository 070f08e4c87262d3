#include "archetypes/data_matrix.hpp"

#include <unordered_set>

namespace archetypes {

void DataMatrix::validate() const {
    if (values.rows() < 1 || values.cols() < 1)
        throw InputError("data matrix must have at least one row and one column");
    if (!values.allFinite()) throw InputError("data matrix contains non-finite entries");
    if (static_cast<Eigen::Index>(column_names.size()) != values.cols())
        throw InputError("column name count does not match column count");
    std::unordered_set<std::string> seen;
    for (const auto& name : column_names)
        if (!seen.insert(name).second) throw InputError("duplicate column name: " + name);
    if (!row_labels.empty() && static_cast<Eigen::Index>(row_labels.size()) != values.rows())
        throw InputError("row label count does not match row count");
}

}  // namespace archetypes
