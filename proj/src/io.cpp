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

#include "io.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace lambdaphonon::cli {

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

std::string RunManifest::to_json() const {
  nlohmann::json j;
  j["config_hash"] = config_hash;
  j["version"] = version;
  j["scenario"] = scenario;
  j["wall_clock_seconds"] = wall_clock_seconds;
  j["solver"] = {{"rtol", rtol}, {"atol", atol}};
  j["cutoff_used"] = cutoff_used;
  j["seed"] = seed;
  j["gates"] = nlohmann::json::array();
  for (const auto& g : gates) {
    j["gates"].push_back({{"observable", g.observable},
                          {"cutoff", g.cutoff},
                          {"value", g.value},
                          {"reference", g.reference},
                          {"relative_change", g.relative_change},
                          {"passed", g.passed}});
  }
  j["outputs"] = outputs;
  return j.dump(2);
}

void RunManifest::write(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write manifest '" + path + "'");
  out << to_json() << "\n";
}

void write_csv(const std::string& path, const CsvTable& table) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  for (const auto& [key, value] : table.metadata) {
    out << "# " << key << ": " << value << "\n";
  }
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    out << table.columns[c] << (c + 1 < table.columns.size() ? "," : "\n");
  }
  char buf[32];
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size()) {
      throw std::runtime_error("csv row width mismatch");
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      std::snprintf(buf, sizeof(buf), "%.17g", row[c]);
      out << buf << (c + 1 < row.size() ? "," : "\n");
    }
  }
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  CsvTable table;
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      const std::size_t start = line.find_first_not_of("# ");
      const std::size_t colon = line.find(':', start);
      if (colon != std::string::npos) {
        std::string key = line.substr(start, colon - start);
        std::string value = line.substr(colon + 1);
        const std::size_t vstart = value.find_first_not_of(' ');
        table.metadata[key] = vstart == std::string::npos ? "" : value.substr(vstart);
      }
      continue;
    }
    std::stringstream row(line);
    std::string cell;
    if (!header_seen) {
      while (std::getline(row, cell, ',')) table.columns.push_back(cell);
      header_seen = true;
    } else {
      std::vector<double> values;
      while (std::getline(row, cell, ',')) values.push_back(std::stod(cell));
      table.rows.push_back(std::move(values));
    }
  }
  return table;
}

namespace {

struct PlotFrame {
  double x0, x1, y0, y1;     // data ranges
  static constexpr int kW = 720, kH = 480;
  static constexpr int kL = 70, kR = 20, kT = 40, kB = 50;
  double px(double x) const {
    return kL + (x - x0) / (x1 - x0) * (kW - kL - kR);
  }
  double py(double y) const {
    return kH - kB - (y - y0) / (y1 - y0) * (kH - kT - kB);
  }
};

const char* kSeriesColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};

void svg_header(std::ofstream& out, const std::string& title,
                const std::string& xlabel, const std::string& ylabel,
                const PlotFrame& f) {
  out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << f.kW
      << "' height='" << f.kH << "'>\n"
      << "<rect width='100%' height='100%' fill='white'/>\n"
      << "<text x='" << f.kW / 2 << "' y='24' text-anchor='middle' "
         "font-family='sans-serif' font-size='15'>" << title << "</text>\n"
      << "<text x='" << f.kW / 2 << "' y='" << f.kH - 12
      << "' text-anchor='middle' font-family='sans-serif' font-size='12'>"
      << xlabel << "</text>\n"
      << "<text x='16' y='" << f.kH / 2
      << "' text-anchor='middle' font-family='sans-serif' font-size='12' "
         "transform='rotate(-90 16 " << f.kH / 2 << ")'>" << ylabel << "</text>\n"
      << "<rect x='" << f.kL << "' y='" << f.kT << "' width='"
      << f.kW - f.kL - f.kR << "' height='" << f.kH - f.kT - f.kB
      << "' fill='none' stroke='black'/>\n";
  char buf[64];
  for (int i = 0; i <= 4; ++i) {
    const double x = f.x0 + (f.x1 - f.x0) * i / 4.0;
    const double y = f.y0 + (f.y1 - f.y0) * i / 4.0;
    std::snprintf(buf, sizeof(buf), "%.4g", x);
    out << "<text x='" << f.px(x) << "' y='" << f.kH - f.kB + 16
        << "' text-anchor='middle' font-family='sans-serif' font-size='10'>"
        << buf << "</text>\n";
    std::snprintf(buf, sizeof(buf), "%.4g", y);
    out << "<text x='" << f.kL - 6 << "' y='" << f.py(y) + 3
        << "' text-anchor='end' font-family='sans-serif' font-size='10'>" << buf
        << "</text>\n";
  }
}

}  // namespace

void write_svg_curve(const std::string& path, const RealVector& axis,
                     const std::vector<std::pair<std::string, RealVector>>& series,
                     const std::string& title, const std::string& xlabel,
                     const std::string& ylabel) {
  if (axis.size() < 2 || series.empty()) {
    throw std::invalid_argument("svg curve needs an axis and at least one series");
  }
  PlotFrame f{axis.minCoeff(), axis.maxCoeff(), 0.0, 0.0};
  double lo = series[0].second.minCoeff(), hi = series[0].second.maxCoeff();
  for (const auto& [name, v] : series) {
    lo = std::min(lo, v.minCoeff());
    hi = std::max(hi, v.maxCoeff());
  }
  if (hi <= lo) hi = lo + 1.0;
  const double pad = 0.05 * (hi - lo);
  f.y0 = lo - pad;
  f.y1 = hi + pad;

  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  svg_header(out, title, xlabel, ylabel, f);
  int color = 0;
  for (const auto& [name, v] : series) {
    out << "<polyline fill='none' stroke='" << kSeriesColors[color % 4]
        << "' stroke-width='1.2' points='";
    for (int i = 0; i < axis.size(); ++i) {
      out << f.px(axis[i]) << "," << f.py(v[i]) << " ";
    }
    out << "'/>\n";
    out << "<text x='" << f.kW - f.kR - 8 << "' y='" << f.kT + 16 + 14 * color
        << "' text-anchor='end' font-family='sans-serif' font-size='11' fill='"
        << kSeriesColors[color % 4] << "'>" << name << "</text>\n";
    ++color;
  }
  out << "</svg>\n";
}

void write_svg_map(const std::string& path, const RealVector& x,
                   const RealVector& y, const RealMatrix& value_xy,
                   const std::string& title, const std::string& xlabel,
                   const std::string& ylabel, bool log_scale) {
  if (value_xy.rows() != x.size() || value_xy.cols() != y.size()) {
    throw std::invalid_argument("svg map dimensions mismatch");
  }
  PlotFrame f{x.minCoeff(), x.maxCoeff(), y.minCoeff(), y.maxCoeff()};
  double lo = INFINITY, hi = -INFINITY;
  for (int i = 0; i < value_xy.rows(); ++i) {
    for (int j = 0; j < value_xy.cols(); ++j) {
      const double v = value_xy(i, j);
      if (std::isnan(v)) continue;
      const double t = log_scale ? std::log10(std::max(v, 1e-300)) : v;
      lo = std::min(lo, t);
      hi = std::max(hi, t);
    }
  }
  if (!(hi > lo)) { lo = 0.0; hi = 1.0; }

  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  svg_header(out, title, xlabel, ylabel, f);
  const double cw = double(PlotFrame::kW - f.kL - f.kR) / x.size();
  const double ch = double(PlotFrame::kH - f.kT - f.kB) / y.size();
  for (int i = 0; i < x.size(); ++i) {
    for (int j = 0; j < y.size(); ++j) {
      const double v = value_xy(i, j);
      std::string fill = "#bbbbbb";  // NaN hole
      if (!std::isnan(v)) {
        const double t0 = log_scale ? std::log10(std::max(v, 1e-300)) : v;
        const double t = std::clamp((t0 - lo) / (hi - lo), 0.0, 1.0);
        const int r = int(255 * t), b = int(255 * (1.0 - t));
        char buf[8];
        std::snprintf(buf, sizeof(buf), "#%02x20%02x", r, b);
        fill = buf;
      }
      out << "<rect x='" << f.kL + i * cw << "' y='" << f.kT + (y.size() - 1 - j) * ch
          << "' width='" << cw + 0.5 << "' height='" << ch + 0.5 << "' fill='"
          << fill << "'/>\n";
    }
  }
  out << "</svg>\n";
}

DirectoryLock::DirectoryLock(const std::string& directory)
    : path_(directory + "/.lambda-phonon.lock") {
  fd_ = ::open(path_.c_str(), O_CREAT | O_EXCL | O_WRONLY, 0644);
  if (fd_ < 0) {
    throw std::runtime_error(
        "output directory is locked by another run (" + path_ +
        " exists); remove the stale lock if no process is active");
  }
  const std::string pid = std::to_string(::getpid()) + "\n";
  [[maybe_unused]] ssize_t n = ::write(fd_, pid.c_str(), pid.size());
}

DirectoryLock::~DirectoryLock() {
  if (fd_ >= 0) {
    ::close(fd_);
    ::unlink(path_.c_str());
  }
}

}  // namespace lambdaphonon::cli
