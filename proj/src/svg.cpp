#include "knaster/svg.hpp"

#include <cstdio>

namespace knaster {

namespace {

constexpr int margin = 24;

std::string fixed(double v)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string escape(const std::string& s)
{
  std::string out;
  for (char c : s) {
    switch (c) {
    case '&': out += "&amp;"; break;
    case '<': out += "&lt;"; break;
    case '>': out += "&gt;"; break;
    case '"': out += "&quot;"; break;
    default: out += c;
    }
  }
  return out;
}

} // namespace

std::string render_svg(const PlotSpec& spec)
{
  if (spec.maps.empty()) throw InvalidInput("plot needs at least one map");
  if (spec.width <= 0 || spec.height <= 0) throw InvalidInput("plot size must be positive");
  if (spec.grid && *spec.grid == 0) throw InvalidInput("grid must be >= 1");

  const int panels = static_cast<int>(spec.maps.size());
  const int total_w = panels * spec.width;
  const double side_w = spec.width - 2.0 * margin;
  const double side_h = spec.height - 2.0 * margin;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(total_w) + "\" height=\"" + std::to_string(spec.height) +
         "\" viewBox=\"0 0 " + std::to_string(total_w) + " " + std::to_string(spec.height) +
         "\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(total_w) + "\" height=\"" +
         std::to_string(spec.height) + "\" fill=\"white\"/>\n";

  for (int k = 0; k < panels; ++k) {
    const auto& [f, label] = spec.maps[static_cast<std::size_t>(k)];
    const double ox = k * spec.width + margin;
    const double oy = margin;
    const auto px = [&](const Rat& x) { return fixed(ox + x.get_d() * side_w); };
    const auto py = [&](const Rat& y) { return fixed(oy + (1.0 - y.get_d()) * side_h); };

    out += "<g id=\"panel" + std::to_string(k) + "\">\n";
    out += "<rect x=\"" + fixed(ox) + "\" y=\"" + fixed(oy) + "\" width=\"" + fixed(side_w) +
           "\" height=\"" + fixed(side_h) + "\" fill=\"none\" stroke=\"black\"/>\n";
    if (spec.grid) {
      const std::uint64_t g = *spec.grid;
      for (std::uint64_t i = 1; i < g; ++i) {
        const Rat x = make_rat(Int(i), Int(g));
        out += "<line class=\"grid\" x1=\"" + px(x) + "\" y1=\"" + py(Rat(0)) + "\" x2=\"" + px(x) +
               "\" y2=\"" + py(Rat(1)) + "\" stroke=\"#bbbbbb\" stroke-dasharray=\"2,3\"/>\n";
      }
    }
    out += "<polyline fill=\"none\" stroke=\"#1f4e9e\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (const auto& b : f.breakpoints()) {
      if (!first) out += ' ';
      first = false;
      out += px(b.x) + "," + py(b.y);
    }
    out += "\"/>\n";
    out += "<text x=\"" + fixed(ox) + "\" y=\"" + fixed(spec.height - 6.0) +
           "\" font-family=\"sans-serif\" font-size=\"12\">" + escape(label) + "</text>\n";
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

} // namespace knaster
