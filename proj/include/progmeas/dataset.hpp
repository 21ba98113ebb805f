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

// Plot-ready tabular output: a delimited text table of named numeric
// columns plus a JSON metadata sidecar (<table>.meta.json).

#pragma once

#include <nlohmann/json.hpp>

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace progmeas {

class Dataset {
   public:
    Dataset() = default;
    explicit Dataset(std::vector<std::string> columns);

    const std::vector<std::string> &columns() const {
        return columns_;
    }
    const std::vector<std::vector<double>> &rows() const {
        return rows_;
    }
    std::size_t size() const {
        return rows_.size();
    }
    bool has_column(const std::string &name) const;
    /// Throws SchemaError naming the column when absent.
    std::size_t column_index(const std::string &name) const;
    std::vector<double> column(const std::string &name) const;
    double at(std::size_t row, const std::string &name) const;

    /// Throws InvalidArgument when the row width does not match.
    void add_row(std::vector<double> row);

    nlohmann::json &metadata() {
        return metadata_;
    }
    const nlohmann::json &metadata() const {
        return metadata_;
    }

    /// Comma-separated, header row first, doubles in round-trip precision.
    void write_table(std::ostream &out) const;
    static Dataset read_table(std::istream &in);

    /// Writes `path` and `sidecar_path(path)`.
    void save(const std::filesystem::path &path) const;
    /// Reads `path`; the sidecar is loaded when present.
    static Dataset load(const std::filesystem::path &path);

    static std::filesystem::path sidecar_path(const std::filesystem::path &path);

   private:
    std::vector<std::string> columns_;
    std::vector<std::vector<double>> rows_;
    nlohmann::json metadata_ = nlohmann::json::object();
};

/// Shortest decimal text that parses back to the same double; "nan" for NaN.
std::string format_number(double value);

}  // namespace progmeas
