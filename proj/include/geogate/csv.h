// Copyright 2026 The geogate Authors
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

#ifndef GEOGATE_CSV_H_
#define GEOGATE_CSV_H_

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace geogate {

// Fixed 12-significant-digit formatting so reruns produce byte-identical files.
std::string format_number(double value);

class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header);

  void row(std::span<const double> values);
  void row(std::initializer_list<double> values) { row(std::span<const double>(values.begin(), values.size())); }
  // First cell is a label, remaining cells numeric.
  void row(const std::string& label, std::span<const double> values);

 private:
  std::ofstream out_;
  std::size_t columns_;
};

}  // namespace geogate

#endif  // GEOGATE_CSV_H_
