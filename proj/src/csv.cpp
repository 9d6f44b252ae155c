#include "hazecast/csv.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "hazecast/errors.hpp"

namespace hazecast {

namespace {

const char* kTarget = "PV Power Generation";

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    fields.push_back(cur);
    return fields;
}

double parse_cell(const std::string& cell, size_t row, const std::string& column) {
    size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(cell, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    // trailing junk after the number is as bad as no number
    if (pos == 0 || cell.find_first_not_of(" \t", pos) != std::string::npos)
        throw ParseError("non-numeric cell at row " + std::to_string(row) + ", column '" + column +
                         "': '" + cell + "'");
    return v;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::vector<std::string> schema_columns(const std::string& schema_id) {
    if (schema_id == "jiangsu2015")
        return {"Direct Normal Irradiance", "Global Horizontal Irradiance",
                "Diffuse Horizontal Irradiance", "Temperature of Component", "Ambient Temperature",
                "Atmospheric Pressure", "Relative Humidity", kTarget};
    if (schema_id == "beijing2019")
        return {"Air Temperature",
                "Precipitation",
                "Snowfall",
                "Snow Mass",
                "Air Density",
                "Ground-level Solar Irradiance",
                "Top of Atmosphere Solar Irradiance",
                "Cloud Cover Fraction",
                kTarget};
    if (schema_id == "generic") return {};
    throw ValidationError("unknown schema '" + schema_id + "'");
}

Dataset load_dataset(const std::string& path, const std::string& schema_id,
                     const std::string& target_column) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");

    std::string line;
    if (!std::getline(in, line) || line.empty()) throw EmptyFile("'" + path + "' has no header");
    std::vector<std::string> header = split_csv_line(line);

    const std::string target =
        schema_id == "generic" ? target_column : std::string(kTarget);
    const std::vector<std::string> expected = schema_columns(schema_id);
    if (!expected.empty()) {
        for (const auto& col : expected)
            if (std::find(header.begin(), header.end(), col) == header.end())
                throw MissingColumn("schema '" + schema_id + "' requires column '" + col + "'");
        for (const auto& col : header)
            if (std::find(expected.begin(), expected.end(), col) == expected.end())
                throw MissingColumn("column '" + col + "' is not part of schema '" + schema_id +
                                    "'");
    }
    if (std::find(header.begin(), header.end(), target) == header.end())
        throw MissingColumn("target column '" + target + "' not found");

    int timestamp_col = -1;
    if (schema_id == "generic") {
        auto it = std::find(header.begin(), header.end(), "Timestamp");
        if (it != header.end()) timestamp_col = static_cast<int>(it - header.begin());
    }

    std::vector<std::vector<double>> columns(header.size());
    std::vector<std::string> timestamps;
    size_t row = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ++row;
        const std::vector<std::string> cells = split_csv_line(line);
        if (cells.size() != header.size())
            throw ParseError("row " + std::to_string(row) + " has " +
                             std::to_string(cells.size()) + " cells, expected " +
                             std::to_string(header.size()));
        for (size_t c = 0; c < cells.size(); ++c) {
            if (static_cast<int>(c) == timestamp_col)
                timestamps.push_back(cells[c]);
            else
                columns[c].push_back(parse_cell(cells[c], row, header[c]));
        }
    }
    if (row == 0) throw EmptyFile("'" + path + "' contains no data rows");

    Dataset d;
    d.schema_id = schema_id;
    for (size_t c = 0; c < header.size(); ++c) {
        if (static_cast<int>(c) == timestamp_col) continue;
        Series s;
        s.name = header[c];
        s.values = std::move(columns[c]);
        if (header[c] == target) {
            s.timestamps = timestamps;
            d.target = std::move(s);
        } else {
            d.features.push_back(std::move(s));
        }
    }
    d.validate();
    return d;
}

void write_dataset_csv(const Dataset& d, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write '" + path + "'");

    const bool with_ts = !d.target.timestamps.empty();
    if (with_ts) out << "Timestamp,";
    for (const auto& f : d.features) out << f.name << ',';
    out << d.target.name << '\n';
    for (size_t i = 0; i < d.n_rows(); ++i) {
        if (with_ts) out << d.target.timestamps[i] << ',';
        for (const auto& f : d.features) out << format_double(f.values[i]) << ',';
        out << format_double(d.target.values[i]) << '\n';
    }
    if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace hazecast
