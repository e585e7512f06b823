#include "qslchan/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace qslchan {

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string to_csv(const FigureDataset& d) {
  std::string out = d.x_name;
  for (const auto& name : d.curve_names) {
    out += ',';
    out += name;
  }
  out += '\n';
  for (size_t i = 0; i < d.x.size(); ++i) {
    out += format_number(d.x[i]);
    for (const auto& cell : d.rows[i]) {
      out += ',';
      if (cell) out += format_number(*cell);
    }
    out += '\n';
  }
  return out;
}

std::string to_svg(const FigureDataset& d, const std::string& title) {
  const int w = 720, h = 480;
  const int ml = 70, mr = 160, mt = 40, mb = 50;
  const double pw = w - ml - mr, ph = h - mt - mb;

  double xmin = d.x.front(), xmax = d.x.back();
  double ymin = 1e300, ymax = -1e300;
  for (const auto& row : d.rows)
    for (const auto& cell : row)
      if (cell) {
        ymin = std::min(ymin, *cell);
        ymax = std::max(ymax, *cell);
      }
  if (ymin > ymax) {
    ymin = 0.0;
    ymax = 1.0;
  }
  if (ymax - ymin < 1e-12) {
    ymin -= 0.5;
    ymax += 0.5;
  }
  const auto px = [&](double x) { return ml + pw * (x - xmin) / (xmax - xmin); };
  const auto py = [&](double y) { return mt + ph * (1.0 - (y - ymin) / (ymax - ymin)); };

  static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                  "#ff7f0e", "#8c564b"};

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
    << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
  s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s << "<text x=\"" << ml << "\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\">" << title
    << "</text>\n";
  s << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << pw << "\" height=\"" << ph
    << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int t = 0; t <= 5; ++t) {
    const double xv = xmin + (xmax - xmin) * t / 5.0;
    const double yv = ymin + (ymax - ymin) * t / 5.0;
    s << "<line x1=\"" << px(xv) << "\" y1=\"" << mt + ph << "\" x2=\"" << px(xv) << "\" y2=\""
      << mt + ph + 5 << "\" stroke=\"black\"/>\n";
    s << "<text x=\"" << px(xv) << "\" y=\"" << mt + ph + 20
      << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">"
      << format_number(std::round(xv * 1e4) / 1e4) << "</text>\n";
    s << "<line x1=\"" << ml - 5 << "\" y1=\"" << py(yv) << "\" x2=\"" << ml << "\" y2=\""
      << py(yv) << "\" stroke=\"black\"/>\n";
    s << "<text x=\"" << ml - 8 << "\" y=\"" << py(yv) + 4
      << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">"
      << format_number(std::round(yv * 1e4) / 1e4) << "</text>\n";
  }
  s << "<text x=\"" << ml + pw / 2 << "\" y=\"" << h - 12
    << "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">" << d.x_name
    << "</text>\n";

  for (size_t k = 0; k < d.curve_names.size(); ++k) {
    const char* color = kColors[k % 6];
    std::ostringstream pts;
    bool in_path = false;
    std::string paths;
    for (size_t i = 0; i < d.x.size(); ++i) {
      const auto& cell = d.rows[i][k];
      if (cell) {
        if (!in_path) {
          pts.str("");
          in_path = true;
        }
        pts << px(d.x[i]) << ',' << py(*cell) << ' ';
      } else if (in_path) {
        paths += "<polyline fill=\"none\" stroke=\"" + std::string(color) + "\" points=\"" +
                 pts.str() + "\"/>\n";
        in_path = false;
      }
    }
    if (in_path) {
      paths += "<polyline fill=\"none\" stroke=\"" + std::string(color) + "\" points=\"" +
               pts.str() + "\"/>\n";
    }
    s << paths;
    const double ly = mt + 16.0 * (k + 1);
    s << "<line x1=\"" << w - mr + 10 << "\" y1=\"" << ly << "\" x2=\"" << w - mr + 34
      << "\" y2=\"" << ly << "\" stroke=\"" << color << "\"/>\n";
    s << "<text x=\"" << w - mr + 40 << "\" y=\"" << ly + 4
      << "\" font-family=\"sans-serif\" font-size=\"12\">" << d.curve_names[k] << "</text>\n";
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace qslchan
