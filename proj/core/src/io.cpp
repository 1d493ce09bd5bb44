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


#include "stabgibbs/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <random>
#include <sstream>

namespace stabgibbs {

namespace fs = std::filesystem;

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_file_atomic(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::random_device rd;
  fs::path tmp = path;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("cannot rename onto " + path.string() + ": " + ec.message());
  }
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvTable::add_row(std::vector<Cell> row) {
  if (row.size() != header_.size()) throw InvalidArgument("CsvTable: row width does not match header");
  rows_.push_back(std::move(row));
}

std::string CsvTable::str() const {
  std::string out;
  auto join = [&out](const auto& cells, auto&& render) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += render(cells[i]);
    }
    out += '\n';
  };
  join(header_, [](const std::string& s) { return s; });
  for (const auto& row : rows_) {
    join(row, [](const Cell& c) {
      if (const auto* s = std::get_if<std::string>(&c)) return *s;
      if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
      return std::to_string(std::get<long long>(c));
    });
  }
  return out;
}

void write_json(const fs::path& path, nlohmann::json doc) {
  if (doc.is_object() && !doc.contains("schema")) doc["schema"] = kSchema;
  write_file_atomic(path, doc.dump(2) + "\n");
}

nlohmann::json read_json(const fs::path& path) {
  try {
    return nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument("malformed JSON in " + path.string() + ": " + e.what());
  }
}

void export_coo_csv(const fs::path& path, const SpMat& m) {
  std::string out = "row,col,re,im\n";
  for (Index c = 0; c < m.outerSize(); ++c) {
    for (SpMat::InnerIterator it(m, c); it; ++it) {
      out += std::to_string(it.row()) + ',' + std::to_string(c) + ',' + format_double(it.value().real()) + ',' +
             format_double(it.value().imag()) + '\n';
    }
  }
  write_file_atomic(path, out);
}

namespace {

template <class T>
void put(std::string& s, T v) {
  char buf[sizeof(T)];
  std::memcpy(buf, &v, sizeof(T));
  s.append(buf, sizeof(T));
}

template <class T>
T take(const std::string& s, std::size_t& pos) {
  if (pos + sizeof(T) > s.size()) throw InvalidArgument("truncated COO stream");
  T v;
  std::memcpy(&v, s.data() + pos, sizeof(T));
  pos += sizeof(T);
  return v;
}

}  // namespace

void export_coo_binary(const fs::path& path, const SpMat& m) {
  std::string out;
  put<std::int64_t>(out, m.rows());
  put<std::int64_t>(out, m.cols());
  put<std::int64_t>(out, m.nonZeros());
  for (Index c = 0; c < m.outerSize(); ++c) {
    for (SpMat::InnerIterator it(m, c); it; ++it) {
      put<std::int64_t>(out, it.row());
      put<std::int64_t>(out, c);
      put<double>(out, it.value().real());
      put<double>(out, it.value().imag());
    }
  }
  write_file_atomic(path, out);
}

SpMat import_coo_binary(const fs::path& path) {
  const std::string s = read_file(path);
  std::size_t pos = 0;
  const auto rows = take<std::int64_t>(s, pos);
  const auto cols = take<std::int64_t>(s, pos);
  const auto nnz = take<std::int64_t>(s, pos);
  if (rows < 0 || cols < 0 || nnz < 0) throw InvalidArgument("corrupt COO header");
  std::vector<Triplet> t;
  t.reserve(static_cast<std::size_t>(nnz));
  for (std::int64_t k = 0; k < nnz; ++k) {
    const auto r = take<std::int64_t>(s, pos);
    const auto c = take<std::int64_t>(s, pos);
    const auto re = take<double>(s, pos);
    const auto im = take<double>(s, pos);
    if (r < 0 || r >= rows || c < 0 || c >= cols) throw InvalidArgument("COO entry out of range");
    t.emplace_back(r, c, cplx(re, im));
  }
  SpMat m(rows, cols);
  m.setFromTriplets(t.begin(), t.end());
  return m;
}

void export_dense_csv(const fs::path& path, const DMatR& m) {
  std::string out;
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) {
      if (c) out += ',';
      out += format_double(m(r, c));
    }
    out += '\n';
  }
  write_file_atomic(path, out);
}

}  // namespace stabgibbs
