// Copyright 2026 The stabgibbs Authors
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


#ifndef STABGIBBS_IO_HPP
#define STABGIBBS_IO_HPP

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "stabgibbs/types.hpp"

namespace stabgibbs {

inline constexpr const char* kSchema = "stabgibbs/1";

// 17 significant digits; inf/nan spelled out.
std::string format_double(double x);

// Write to a sibling temporary, then rename over the target.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);
std::string read_file(const std::filesystem::path& path);

class CsvTable {
 public:
  using Cell = std::variant<std::string, double, long long>;

  explicit CsvTable(std::vector<std::string> header);
  void add_row(std::vector<Cell> row);
  const std::vector<std::string>& header() const { return header_; }
  std::size_t num_rows() const { return rows_.size(); }
  std::string str() const;
  void save(const std::filesystem::path& path) const { write_file_atomic(path, str()); }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<Cell>> rows_;
};

// Object documents gain a "schema" key when missing.
void write_json(const std::filesystem::path& path, nlohmann::json doc);
nlohmann::json read_json(const std::filesystem::path& path);

// Coordinate export: CSV lines "row,col,re,im", or a binary record stream
// (int64 rows, cols, nnz; then nnz x {int64 row, int64 col, double re, double im}).
void export_coo_csv(const std::filesystem::path& path, const SpMat& m);
void export_coo_binary(const std::filesystem::path& path, const SpMat& m);
SpMat import_coo_binary(const std::filesystem::path& path);
// Dense row-major CSV.
void export_dense_csv(const std::filesystem::path& path, const DMatR& m);

}  // namespace stabgibbs

#endif  // STABGIBBS_IO_HPP
