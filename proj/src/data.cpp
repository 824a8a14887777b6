#include "lsx/data.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "lsx/util.hpp"

namespace lsx {

Dataset generate_half_moons(const HalfMoonsSpec& spec) {
  if (spec.n < 2) throw std::invalid_argument("half-moons: n must be >= 2");
  if (spec.noise < 0.0) throw std::invalid_argument("half-moons: negative noise");

  const std::size_t n0 = (spec.n + 1) / 2;
  const std::size_t n1 = spec.n / 2;

  Dataset data;
  data.feature_names = {"x1", "x2"};
  data.rows.reserve(spec.n);
  data.labels.reserve(spec.n);

  auto arc_param = [](std::size_t i, std::size_t m) {
    return m <= 1 ? 0.0 : std::numbers::pi * static_cast<double>(i) /
                              static_cast<double>(m - 1);
  };
  for (std::size_t i = 0; i < n0; ++i) {
    const double t = arc_param(i, n0);
    data.rows.push_back({std::cos(t), std::sin(t)});
    data.labels.push_back(0);
  }
  for (std::size_t i = 0; i < n1; ++i) {
    const double t = arc_param(i, n1);
    data.rows.push_back({1.0 - std::cos(t), 0.5 - std::sin(t)});
    data.labels.push_back(1);
  }

  if (spec.noise > 0.0) {
    Rng rng(spec.seed);
    std::normal_distribution<double> gauss(0.0, spec.noise);
    for (auto& row : data.rows) {
      for (auto& v : row) v += gauss(rng);
    }
  }
  refresh_meta(data);
  return data;
}

std::vector<int> decision_grid(const BlackBoxModel& model,
                               const GridBounds& bounds,
                               std::size_t resolution) {
  if (resolution == 0) throw std::invalid_argument("decision_grid: resolution 0");
  const double dx = (bounds.xmax - bounds.xmin) / static_cast<double>(resolution);
  const double dy = (bounds.ymax - bounds.ymin) / static_cast<double>(resolution);
  std::vector<int> grid(resolution * resolution);
  for (std::size_t r = 0; r < resolution; ++r) {
    const double y = bounds.ymin + (static_cast<double>(r) + 0.5) * dy;
    for (std::size_t c = 0; c < resolution; ++c) {
      const double x = bounds.xmin + (static_cast<double>(c) + 0.5) * dx;
      grid[r * resolution + c] = model.predict_label({x, y});
    }
  }
  return grid;
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

double parse_number(const std::string& cell, std::size_t line_no) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(cell.c_str(), &end);
  if (cell.empty() || end != cell.c_str() + cell.size() || errno == ERANGE ||
      !std::isfinite(v)) {
    throw std::runtime_error("csv: non-numeric cell '" + cell + "' at line " +
                             std::to_string(line_no));
  }
  return v;
}

bool looks_like_header(const std::vector<std::string>& cells) {
  for (const auto& c : cells) {
    char* end = nullptr;
    std::strtod(c.c_str(), &end);
    if (c.empty() || end != c.c_str() + c.size()) return true;
  }
  return false;
}

}  // namespace

Dataset load_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("csv: cannot open " + path);

  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("csv: empty file " + path);
  auto header = split_line(line);
  if (!looks_like_header(header)) {
    throw std::runtime_error("csv: missing header row in " + path);
  }

  const bool has_label = !header.empty() && header.back() == "label";
  const std::size_t d = header.size() - (has_label ? 1 : 0);
  if (d == 0) throw std::runtime_error("csv: no feature columns in " + path);

  Dataset data;
  data.feature_names.assign(header.begin(), header.begin() + static_cast<long>(d));

  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto cells = split_line(line);
    if (cells.size() != header.size()) {
      throw std::runtime_error("csv: ragged row at line " + std::to_string(line_no));
    }
    Instance row(d);
    for (std::size_t j = 0; j < d; ++j) row[j] = parse_number(cells[j], line_no);
    data.rows.push_back(std::move(row));
    if (has_label) {
      const double lv = parse_number(cells.back(), line_no);
      if (lv != 0.0 && lv != 1.0) {
        throw std::runtime_error("csv: unknown label value '" + cells.back() +
                                 "' at line " + std::to_string(line_no));
      }
      data.labels.push_back(static_cast<int>(lv));
    }
  }
  if (data.rows.empty()) throw std::runtime_error("csv: no data rows in " + path);

  // Integer-valued low-cardinality columns are treated as categorical codes.
  refresh_meta(data);
  for (std::size_t j = 0; j < d; ++j) {
    std::set<double> distinct;
    bool integral = true;
    for (const auto& row : data.rows) {
      if (row[j] != std::floor(row[j])) {
        integral = false;
        break;
      }
      distinct.insert(row[j]);
    }
    if (integral && distinct.size() <= 20 && distinct.size() < data.rows.size()) {
      data.meta[j].kind = FeatureKind::categorical;
    }
  }
  return data;
}

void save_csv(const Dataset& data, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("csv: cannot write " + path);
  for (std::size_t j = 0; j < data.feature_names.size(); ++j) {
    out << (j ? "," : "") << data.feature_names[j];
  }
  if (data.labeled()) out << ",label";
  out << "\n";
  for (std::size_t i = 0; i < data.rows.size(); ++i) {
    for (std::size_t j = 0; j < data.rows[i].size(); ++j) {
      out << (j ? "," : "") << format_double(data.rows[i][j]);
    }
    if (data.labeled()) out << "," << data.labels[i];
    out << "\n";
  }
  if (!out) throw std::runtime_error("csv: write failed for " + path);
}

}  // namespace lsx
