#pragma once

#include <string>
#include <vector>

#include "hazecast/series.hpp"

namespace hazecast {

/// Column sets for the two station schemas. The target column is always
/// "PV Power Generation"; a "generic" schema accepts any header and takes
/// the declared target column, treating a "Timestamp" column (if present)
/// as row labels rather than a feature.
std::vector<std::string> schema_columns(const std::string& schema_id);

Dataset load_dataset(const std::string& path, const std::string& schema_id,
                     const std::string& target_column = "PV Power Generation");

void write_dataset_csv(const Dataset& d, const std::string& path);

}  // namespace hazecast
