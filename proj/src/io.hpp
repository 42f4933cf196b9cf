// Copyright 2026 The lambda-phonon authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LAMBDAPHONON_CLI_IO_HPP
#define LAMBDAPHONON_CLI_IO_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lambdaphonon/types.hpp"

namespace lambdaphonon::cli {

inline constexpr const char* kVersion = "0.1.0";

/// FNV-1a 64-bit hash, hex-encoded; keys the run manifest.
std::string fnv1a_hex(const std::string& text);

struct GateRecord {
  std::string observable;
  int cutoff = 0;
  double value = 0.0;
  double reference = 0.0;
  double relative_change = 0.0;
  bool passed = true;
};

struct RunManifest {
  std::string config_hash;
  std::string version = kVersion;
  std::string scenario;
  double wall_clock_seconds = 0.0;
  double rtol = 0.0;
  double atol = 0.0;
  int cutoff_used = 0;
  std::vector<GateRecord> gates;
  std::vector<std::string> outputs;
  long seed = 0;  // reserved; nothing in the pipeline is stochastic

  std::string to_json() const;
  void write(const std::string& path) const;
};

struct CsvTable {
  std::map<std::string, std::string> metadata;  // '#'-prefixed header lines
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// Writes a CSV with '#'-prefixed metadata lines (manifest hash included by
/// the runner), one header row, and %.17g-formatted values.
void write_csv(const std::string& path, const CsvTable& table);

/// Parses a CSV written by write_csv; the round-trip partner of the writer.
CsvTable read_csv(const std::string& path);

/// Minimal standalone SVG polyline plot of one or more named series over a
/// shared axis.
void write_svg_curve(const std::string& path, const RealVector& axis,
                     const std::vector<std::pair<std::string, RealVector>>& series,
                     const std::string& title, const std::string& xlabel,
                     const std::string& ylabel);

/// Heat-map SVG of a matrix over two axes.
void write_svg_map(const std::string& path, const RealVector& x,
                   const RealVector& y, const RealMatrix& value_xy,
                   const std::string& title, const std::string& xlabel,
                   const std::string& ylabel, bool log_scale = false);

/// One scenario process at a time per output directory. Creating the guard
/// claims <dir>/.lambda-phonon.lock exclusively; the destructor releases it.
class DirectoryLock {
 public:
  explicit DirectoryLock(const std::string& directory);
  ~DirectoryLock();
  DirectoryLock(const DirectoryLock&) = delete;
  DirectoryLock& operator=(const DirectoryLock&) = delete;

 private:
  std::string path_;
  int fd_ = -1;
};

}  // namespace lambdaphonon::cli

#endif  // LAMBDAPHONON_CLI_IO_HPP
