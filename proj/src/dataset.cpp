// Copyright 2026 The progmeas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "progmeas/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "progmeas/errors.hpp"

namespace progmeas {

namespace {

std::vector<std::string> split(const std::string &line, char delimiter) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream stream(line);
    while (std::getline(stream, cell, delimiter)) {
        out.push_back(cell);
    }
    if (!line.empty() && line.back() == delimiter) {
        out.emplace_back();
    }
    return out;
}

std::string trim(std::string s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_number(const std::string &text, std::size_t line, const std::string &column) {
    const std::string t = trim(text);
    if (t == "nan" || t == "NaN") {
        return std::nan("");
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
        throw SchemaError("line " + std::to_string(line) + ", column '" + column + "': not a number: '" + t + "'");
    }
    return value;
}

}  // namespace

Dataset::Dataset(std::vector<std::string> columns) : columns_(std::move(columns)) {
}

bool Dataset::has_column(const std::string &name) const {
    return std::find(columns_.begin(), columns_.end(), name) != columns_.end();
}

std::size_t Dataset::column_index(const std::string &name) const {
    const auto it = std::find(columns_.begin(), columns_.end(), name);
    if (it == columns_.end()) {
        throw SchemaError("missing column '" + name + "'");
    }
    return static_cast<std::size_t>(it - columns_.begin());
}

std::vector<double> Dataset::column(const std::string &name) const {
    const auto k = column_index(name);
    std::vector<double> out;
    out.reserve(rows_.size());
    for (const auto &row : rows_) {
        out.push_back(row[k]);
    }
    return out;
}

double Dataset::at(std::size_t row, const std::string &name) const {
    return rows_.at(row)[column_index(name)];
}

void Dataset::add_row(std::vector<double> row) {
    if (row.size() != columns_.size()) {
        throw InvalidArgument("row has " + std::to_string(row.size()) + " values, dataset has " +
                              std::to_string(columns_.size()) + " columns");
    }
    rows_.push_back(std::move(row));
}

std::string format_number(double value) {
    if (std::isnan(value)) {
        return "nan";
    }
    char buffer[64];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, ptr);
}

void Dataset::write_table(std::ostream &out) const {
    for (std::size_t k = 0; k < columns_.size(); ++k) {
        out << (k ? "," : "") << columns_[k];
    }
    out << '\n';
    for (const auto &row : rows_) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            out << (k ? "," : "") << format_number(row[k]);
        }
        out << '\n';
    }
}

Dataset Dataset::read_table(std::istream &in) {
    std::string line;
    std::size_t line_no = 1;
    while (std::getline(in, line) && trim(line).empty()) {
        ++line_no;
    }
    if (trim(line).empty()) {
        throw SchemaError("table is empty: no header row");
    }
    std::vector<std::string> header;
    for (auto &cell : split(line, ',')) {
        header.push_back(trim(cell));
    }
    Dataset dataset(header);
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) {
            continue;
        }
        const auto cells = split(line, ',');
        if (cells.size() != header.size()) {
            throw SchemaError("line " + std::to_string(line_no) + ": expected " + std::to_string(header.size()) +
                              " values, got " + std::to_string(cells.size()));
        }
        std::vector<double> row;
        row.reserve(cells.size());
        for (std::size_t k = 0; k < cells.size(); ++k) {
            row.push_back(parse_number(cells[k], line_no, header[k]));
        }
        dataset.rows_.push_back(std::move(row));
    }
    return dataset;
}

std::filesystem::path Dataset::sidecar_path(const std::filesystem::path &path) {
    return std::filesystem::path(path.string() + ".meta.json");
}

void Dataset::save(const std::filesystem::path &path) const {
    std::ofstream table(path);
    if (!table) {
        throw Error("cannot open '" + path.string() + "' for writing");
    }
    write_table(table);
    std::ofstream sidecar(sidecar_path(path));
    if (!sidecar) {
        throw Error("cannot open '" + sidecar_path(path).string() + "' for writing");
    }
    sidecar << metadata_.dump(2) << '\n';
    if (!table || !sidecar) {
        throw Error("write to '" + path.string() + "' failed");
    }
}

Dataset Dataset::load(const std::filesystem::path &path) {
    std::ifstream table(path);
    if (!table) {
        throw Error("cannot open '" + path.string() + "' for reading");
    }
    auto dataset = read_table(table);
    std::ifstream sidecar(sidecar_path(path));
    if (sidecar) {
        dataset.metadata_ = nlohmann::json::parse(sidecar);
    }
    return dataset;
}

}  // namespace progmeas
