#include "pamet/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace pamet {

namespace {

constexpr Scalar kWidth = 640, kHeight = 420;
constexpr Scalar kLeft = 64, kRight = 24, kTop = 40, kBottom = 48;

std::string num(Scalar v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string escape(const std::string& text) {
  std::string out;
  for (const char ch : text) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

std::string line_chart_svg(const std::string& title, const std::string& x_label,
                           const std::string& y_label, std::span<const ChartSeries> series) {
  Scalar xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  bool seen = false;
  for (const ChartSeries& s : series)
    for (Index i = 0; i < s.x.size(); ++i) {
      if (std::isnan(s.y(i))) continue;
      if (!seen) {
        xmin = xmax = s.x(i);
        ymin = ymax = s.y(i);
        seen = true;
      } else {
        xmin = std::min(xmin, s.x(i));
        xmax = std::max(xmax, s.x(i));
        ymin = std::min(ymin, s.y(i));
        ymax = std::max(ymax, s.y(i));
      }
    }
  if (xmax == xmin) {
    xmin -= 0.5;
    xmax += 0.5;
  }
  if (ymax == ymin) {
    ymin -= 0.5;
    ymax += 0.5;
  }
  const Scalar ypad = 0.05 * (ymax - ymin);
  ymin -= ypad;
  ymax += ypad;

  const Scalar plot_w = kWidth - kLeft - kRight;
  const Scalar plot_h = kHeight - kTop - kBottom;
  const auto px = [&](Scalar x) { return kLeft + (x - xmin) / (xmax - xmin) * plot_w; };
  const auto py = [&](Scalar y) { return kTop + (ymax - y) / (ymax - ymin) * plot_h; };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + num(kWidth) + " " +
         num(kHeight) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg += "<rect width=\"" + num(kWidth) + "\" height=\"" + num(kHeight) + "\" fill=\"white\"/>\n";
  svg += "<text x=\"" + num(kWidth / 2) + "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">" +
         escape(title) + "</text>\n";

  // frame
  svg += "<rect x=\"" + num(kLeft) + "\" y=\"" + num(kTop) + "\" width=\"" + num(plot_w) +
         "\" height=\"" + num(plot_h) + "\" fill=\"none\" stroke=\"#444\"/>\n";

  const int ticks = 5;
  for (int t = 0; t <= ticks; ++t) {
    const Scalar fx = xmin + (xmax - xmin) * t / ticks;
    const Scalar fy = ymin + (ymax - ymin) * t / ticks;
    svg += "<line x1=\"" + num(px(fx)) + "\" y1=\"" + num(kTop + plot_h) + "\" x2=\"" +
           num(px(fx)) + "\" y2=\"" + num(kTop + plot_h + 5) + "\" stroke=\"#444\"/>\n";
    svg += "<text x=\"" + num(px(fx)) + "\" y=\"" + num(kTop + plot_h + 18) +
           "\" text-anchor=\"middle\">" + num(fx) + "</text>\n";
    svg += "<line x1=\"" + num(kLeft - 5) + "\" y1=\"" + num(py(fy)) + "\" x2=\"" + num(kLeft) +
           "\" y2=\"" + num(py(fy)) + "\" stroke=\"#444\"/>\n";
    svg += "<text x=\"" + num(kLeft - 8) + "\" y=\"" + num(py(fy) + 4) +
           "\" text-anchor=\"end\">" + num(fy) + "</text>\n";
  }
  svg += "<text x=\"" + num(kLeft + plot_w / 2) + "\" y=\"" + num(kHeight - 10) +
         "\" text-anchor=\"middle\">" + escape(x_label) + "</text>\n";
  svg += "<text x=\"16\" y=\"" + num(kTop + plot_h / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
         num(kTop + plot_h / 2) + ")\">" + escape(y_label) + "</text>\n";

  if (ymin < 0 && ymax > 0)
    svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(py(0)) + "\" x2=\"" +
           num(kLeft + plot_w) + "\" y2=\"" + num(py(0)) +
           "\" stroke=\"#999\" stroke-dasharray=\"4 3\"/>\n";

  for (const ChartSeries& s : series) {
    std::string points;
    const auto flush = [&]() {
      if (!points.empty())
        svg += "<polyline fill=\"none\" stroke=\"" + s.color +
               "\" stroke-width=\"1.8\" points=\"" + points + "\"/>\n";
      points.clear();
    };
    for (Index i = 0; i < s.x.size(); ++i) {
      if (std::isnan(s.y(i))) {
        flush();
        continue;
      }
      points += num(px(s.x(i))) + "," + num(py(s.y(i))) + " ";
      svg += "<circle cx=\"" + num(px(s.x(i))) + "\" cy=\"" + num(py(s.y(i))) +
             "\" r=\"2.2\" fill=\"" + s.color + "\"/>\n";
    }
    flush();
  }

  Scalar ly = kTop + 10;
  for (const ChartSeries& s : series) {
    const Scalar lx = kLeft + plot_w - 130;
    svg += "<line x1=\"" + num(lx) + "\" y1=\"" + num(ly - 4) + "\" x2=\"" + num(lx + 22) +
           "\" y2=\"" + num(ly - 4) + "\" stroke=\"" + s.color + "\" stroke-width=\"2\"/>\n";
    svg += "<text x=\"" + num(lx + 28) + "\" y=\"" + num(ly) + "\">" + escape(s.label) +
           "</text>\n";
    ly += 16;
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace pamet
