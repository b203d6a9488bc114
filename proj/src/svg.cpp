#include "kgng/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "kgng/io.hpp"

namespace kgng {

namespace {

struct Box {
  double x_min = 0.0, x_max = 0.0, y_min = 0.0, y_max = 0.0;
  void include(double x, double y) {
    x_min = std::min(x_min, x);
    x_max = std::max(x_max, x);
    y_min = std::min(y_min, y);
    y_max = std::max(y_max, y);
  }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

}  // namespace

std::string render_svg(const GngNetwork& net, const Dataset& data) {
  if (net.dimension() < 2) {
    throw std::invalid_argument("rendering needs dimension >= 2");
  }
  if (data.rows > 0 && data.cols != net.dimension()) {
    throw std::invalid_argument("dataset and network dimensions differ");
  }

  Box box;
  if (data.rows > 0) {
    box = {data.at(0, 0), data.at(0, 0), data.at(0, 1), data.at(0, 1)};
    for (std::size_t i = 1; i < data.rows; ++i) {
      box.include(data.at(i, 0), data.at(i, 1));
    }
  } else {
    const auto& w0 = net.units().front().weight;
    box = {w0[0], w0[0], w0[1], w0[1]};
    for (const Unit& u : net.units()) box.include(u.weight[0], u.weight[1]);
  }

  double span_x = box.x_max - box.x_min;
  double span_y = box.y_max - box.y_min;
  if (span_x <= 0.0) span_x = 1.0;
  if (span_y <= 0.0) span_y = 1.0;
  const double x0 = box.x_min - 0.05 * span_x;
  const double y0 = box.y_min - 0.05 * span_y;
  const double width = 1.1 * span_x;
  const double height = 1.1 * span_y;

  const double canvas_w = 800.0;
  const double canvas_h = canvas_w * height / width;
  auto px = [&](double x) { return (x - x0) / width * canvas_w; };
  // SVG y grows downward; flip so the plot reads like the data.
  auto py = [&](double y) { return canvas_h - (y - y0) / height * canvas_h; };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(canvas_w)
      << "\" height=\"" << fmt(canvas_h) << "\" viewBox=\"0 0 "
      << fmt(canvas_w) << ' ' << fmt(canvas_h) << "\">\n";

  for (std::size_t i = 0; i < data.rows; ++i) {
    out << "  <circle cx=\"" << fmt(px(data.at(i, 0))) << "\" cy=\""
        << fmt(py(data.at(i, 1))) << "\" r=\"2\" fill=\"gray\"/>\n";
  }
  for (const EdgeRecord& e : net.edges()) {
    const auto& wu = net.unit(e.u).weight;
    const auto& wv = net.unit(e.v).weight;
    out << "  <line x1=\"" << fmt(px(wu[0])) << "\" y1=\"" << fmt(py(wu[1]))
        << "\" x2=\"" << fmt(px(wv[0])) << "\" y2=\"" << fmt(py(wv[1]))
        << "\" stroke=\"black\" stroke-width=\"1.2\"/>\n";
  }
  for (const Unit& u : net.units()) {
    out << "  <circle cx=\"" << fmt(px(u.weight[0])) << "\" cy=\""
        << fmt(py(u.weight[1])) << "\" r=\"3.5\" fill=\"black\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

void write_svg(const GngNetwork& net, const Dataset& data,
               const std::string& path) {
  atomic_write_text(path, render_svg(net, data));
}

}  // namespace kgng
