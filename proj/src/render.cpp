#include "lsx/render.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

#include "lsx/util.hpp"

namespace lsx {

namespace {

constexpr double kPlot = 300.0;   // inner plot square, px
constexpr double kTitle = 24.0;
constexpr double kPad = 14.0;

constexpr const char* kClass0Area = "#f6d3d3";
constexpr const char* kClass1Area = "#d3ddf6";
constexpr const char* kClass0Dot = "#d62728";
constexpr const char* kClass1Dot = "#1f77b4";
constexpr const char* kNeighFlat = "#1f77b4";
constexpr const char* kNeighDark = "#10104f";
constexpr const char* kStarFill = "#e41a1c";

const char* kMethodPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c",
                                "#d62728", "#9467bd", "#8c564b"};

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

struct Transform {
  GridBounds b;
  double to_px_x(double x) const {
    return (x - b.xmin) / (b.xmax - b.xmin) * kPlot;
  }
  double to_px_y(double y) const {
    return kPlot - (y - b.ymin) / (b.ymax - b.ymin) * kPlot;
  }
  bool contains(const Instance& p) const {
    return p[0] >= b.xmin && p[0] <= b.xmax && p[1] >= b.ymin && p[1] <= b.ymax;
  }
};

std::string star_path(double cx, double cy) {
  // Five-pointed star, outer radius 8, inner radius 3.2.
  std::ostringstream d;
  constexpr double pi = 3.14159265358979323846;
  for (int i = 0; i < 10; ++i) {
    const double r = i % 2 == 0 ? 8.0 : 3.2;
    const double a = -pi / 2.0 + i * pi / 5.0;
    d << (i == 0 ? "M" : "L") << px(cx + r * std::cos(a)) << " "
      << px(cy + r * std::sin(a));
  }
  d << "Z";
  return d.str();
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("svg: cannot write " + path);
  out << body;
  if (!out) throw std::runtime_error("svg: write failed for " + path);
}

std::string svg_header(double width, double height, const std::string& provenance) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  if (!provenance.empty()) {
    std::string safe = provenance;
    std::string::size_type pos;
    while ((pos = safe.find("--")) != std::string::npos) safe.replace(pos, 2, "- ");
    out << "<!-- " << safe << " -->\n";
  }
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px(width)
      << "\" height=\"" << px(height) << "\" viewBox=\"0 0 " << px(width) << " "
      << px(height) << "\">\n";
  return out.str();
}

}  // namespace

GridBounds shared_bounds(const std::vector<Panel>& panels, double pad_frac) {
  double xmin = std::numeric_limits<double>::infinity();
  double xmax = -xmin, ymin = xmin, ymax = -xmin;
  auto include = [&](const Instance& p) {
    xmin = std::min(xmin, p[0]);
    xmax = std::max(xmax, p[0]);
    ymin = std::min(ymin, p[1]);
    ymax = std::max(ymax, p[1]);
  };
  for (const auto& panel : panels) {
    if (panel.star.size() != 2) {
      throw std::invalid_argument("render: panels require 2-D data");
    }
    include(panel.star);
    for (const auto& p : panel.data_points) include(p);
    for (const auto& p : panel.neigh_points) include(p);
  }
  const double dx = std::max(1e-9, (xmax - xmin) * pad_frac);
  const double dy = std::max(1e-9, (ymax - ymin) * pad_frac);
  return {xmin - dx, xmax + dx, ymin - dy, ymax + dy};
}

void render_neighbourhood_panels(const std::vector<Panel>& panels,
                                 std::size_t rows, std::size_t cols,
                                 const std::string& path,
                                 const std::string& provenance) {
  if (panels.empty()) throw std::invalid_argument("render: no panels");
  if (rows * cols < panels.size()) {
    throw std::invalid_argument("render: layout smaller than panel count");
  }
  const Transform b{panels.front().bounds};
  for (const auto& panel : panels) {
    if (panel.star.size() != 2) {
      throw std::invalid_argument("render: panels require 2-D data");
    }
    if (!b.contains(panel.star)) {
      throw std::invalid_argument("render: bounds do not enclose the star");
    }
    for (const auto& p : panel.neigh_points) {
      if (!b.contains(p)) {
        throw std::invalid_argument("render: bounds do not enclose every point");
      }
    }
    for (const auto& p : panel.data_points) {
      if (!b.contains(p)) {
        throw std::invalid_argument("render: bounds do not enclose the data");
      }
    }
  }

  const double width = cols * kPlot + (cols + 1) * kPad;
  const double height = rows * (kPlot + kTitle) + (rows + 1) * kPad;
  std::ostringstream svg;
  svg << svg_header(width, height, provenance);
  svg << "<rect x=\"0\" y=\"0\" width=\"" << px(width) << "\" height=\""
      << px(height) << "\" fill=\"#ffffff\"/>\n";

  for (std::size_t i = 0; i < panels.size(); ++i) {
    const Panel& panel = panels[i];
    const std::size_t r = i / cols, c = i % cols;
    const double tx = kPad + c * (kPlot + kPad);
    const double ty = kPad + r * (kPlot + kTitle + kPad);
    svg << "<g class=\"panel\" transform=\"translate(" << px(tx) << " " << px(ty)
        << ")\">\n";
    svg << "<text class=\"title\" x=\"" << px(kPlot / 2.0)
        << "\" y=\"16\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"14\">"
        << xml_escape(panel.title) << "</text>\n";

    // Decision raster: class-0 background, run-length rects for class-1 cells.
    svg << "<g class=\"boundary\">\n";
    svg << "<rect x=\"0\" y=\"" << px(kTitle) << "\" width=\"" << px(kPlot)
        << "\" height=\"" << px(kPlot) << "\" fill=\"" << kClass0Area << "\"/>\n";
    const std::size_t res = panel.grid_resolution;
    if (res > 0 && panel.grid.size() == res * res) {
      const double cell = kPlot / static_cast<double>(res);
      for (std::size_t gr = 0; gr < res; ++gr) {
        const double ypix = kTitle + kPlot - (gr + 1) * cell;
        std::size_t gc = 0;
        while (gc < res) {
          if (panel.grid[gr * res + gc] != 1) {
            ++gc;
            continue;
          }
          std::size_t run = gc;
          while (run < res && panel.grid[gr * res + run] == 1) ++run;
          svg << "<rect x=\"" << px(gc * cell) << "\" y=\"" << px(ypix)
              << "\" width=\"" << px((run - gc) * cell) << "\" height=\""
              << px(cell) << "\" fill=\"" << kClass1Area << "\"/>\n";
          gc = run;
        }
      }
    }
    svg << "</g>\n";

    svg << "<g class=\"train\">\n";
    for (std::size_t p = 0; p < panel.data_points.size(); ++p) {
      const auto& pt = panel.data_points[p];
      const int label = p < panel.data_labels.size() ? panel.data_labels[p] : 0;
      svg << "<circle cx=\"" << px(b.to_px_x(pt[0])) << "\" cy=\""
          << px(kTitle + b.to_px_y(pt[1])) << "\" r=\"2.2\" fill=\""
          << (label ? kClass1Dot : kClass0Dot) << "\"/>\n";
    }
    svg << "</g>\n";

    // Weighted points: fill-opacity affine in the weight, so parsed opacity
    // ordering reproduces weight ordering. Flat colour otherwise.
    svg << "<g class=\"neigh\">\n";
    double scale = 1.0;
    for (double w : panel.neigh_weights) scale = std::max(scale, w);
    for (std::size_t p = 0; p < panel.neigh_points.size(); ++p) {
      const auto& pt = panel.neigh_points[p];
      svg << "<circle class=\"np\" cx=\"" << px(b.to_px_x(pt[0])) << "\" cy=\""
          << px(kTitle + b.to_px_y(pt[1])) << "\" r=\"1.5\" ";
      if (!panel.neigh_weights.empty()) {
        const double opacity = 0.06 + 0.94 * (panel.neigh_weights[p] / scale);
        svg << "fill=\"" << kNeighDark << "\" fill-opacity=\""
            << format_double(opacity) << "\"/>\n";
      } else {
        svg << "fill=\"" << kNeighFlat << "\"/>\n";
      }
    }
    svg << "</g>\n";

    svg << "<path class=\"star\" d=\""
        << star_path(b.to_px_x(panel.star[0]), kTitle + b.to_px_y(panel.star[1]))
        << "\" fill=\"" << kStarFill << "\" stroke=\"#7a0d0e\" stroke-width=\"1\"/>\n";
    svg << "<rect x=\"0\" y=\"" << px(kTitle) << "\" width=\"" << px(kPlot)
        << "\" height=\"" << px(kPlot)
        << "\" fill=\"none\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
    svg << "</g>\n";
  }
  svg << "</svg>\n";
  write_file(path, svg.str());
}

void render_attribution_bars(const std::vector<Explanation>& explanations,
                             const std::vector<std::string>& feature_names,
                             const std::string& path,
                             const std::string& provenance) {
  if (explanations.empty()) throw std::invalid_argument("bars: no explanations");
  const std::size_t d = feature_names.size();
  for (const auto& e : explanations) {
    if (!e.attribution || e.attribution->size() != d) {
      throw std::invalid_argument("bars: explanations must carry attributions of "
                                  "matching dimension");
    }
  }
  const std::size_t methods = explanations.size();

  // Features ordered by the largest attribution magnitude across methods.
  std::vector<double> max_abs(d, 0.0);
  double global_max = 0.0;
  for (const auto& e : explanations) {
    for (std::size_t j = 0; j < d; ++j) {
      max_abs[j] = std::max(max_abs[j], std::abs((*e.attribution)[j]));
      global_max = std::max(global_max, max_abs[j]);
    }
  }
  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&max_abs](std::size_t a, std::size_t b) {
    return max_abs[a] > max_abs[b];
  });
  if (global_max <= 0.0) global_max = 1.0;

  constexpr double kLabelW = 110.0;
  constexpr double kHalf = 220.0;
  constexpr double kBarH = 10.0;
  constexpr double kGroupGap = 12.0;
  constexpr double kLegendH = 26.0;
  const double group_h = methods * kBarH + kGroupGap;
  const double width = kLabelW + 2 * kHalf + 2 * kPad;
  const double height = kLegendH + d * group_h + 2 * kPad;
  const double x0 = kLabelW + kHalf;  // zero line

  std::ostringstream svg;
  svg << svg_header(width, height, provenance);
  svg << "<rect x=\"0\" y=\"0\" width=\"" << px(width) << "\" height=\""
      << px(height) << "\" fill=\"#ffffff\"/>\n";

  for (std::size_t m = 0; m < methods; ++m) {
    svg << "<text class=\"legend\" x=\"" << px(kLabelW + m * 90.0) << "\" y=\""
        << px(kPad + 10.0) << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\""
        << kMethodPalette[m % 6] << "\">" << xml_escape(explanations[m].method)
        << "</text>\n";
  }

  for (std::size_t row = 0; row < d; ++row) {
    const std::size_t j = order[row];
    const double gy = kPad + kLegendH + row * group_h;
    svg << "<text class=\"feature\" x=\"" << px(kLabelW - 8.0) << "\" y=\""
        << px(gy + methods * kBarH / 2.0 + 4.0)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">"
        << xml_escape(feature_names[j]) << "</text>\n";
    for (std::size_t m = 0; m < methods; ++m) {
      const double v = (*explanations[m].attribution)[j];
      const double len = std::abs(v) / global_max * (kHalf - 10.0);
      const double bx = v >= 0.0 ? x0 : x0 - len;
      svg << "<rect class=\"bar\" x=\"" << px(bx) << "\" y=\""
          << px(gy + m * kBarH) << "\" width=\"" << px(len) << "\" height=\""
          << px(kBarH - 2.0) << "\" fill=\"" << kMethodPalette[m % 6] << "\"/>\n";
    }
  }

  svg << "<path class=\"zero\" d=\"M" << px(x0) << " " << px(kPad + kLegendH)
      << "L" << px(x0) << " " << px(kPad + kLegendH + d * group_h)
      << "\" stroke=\"#222222\" stroke-width=\"1\"/>\n";
  svg << "</svg>\n";
  write_file(path, svg.str());
}

}  // namespace lsx
