#ifndef BRAIDNOMIAL_SVG_HPP
#define BRAIDNOMIAL_SVG_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "braidnomial/braid.hpp"

namespace braidnomial {

/// Deterministic braid diagram: strands run top to bottom, one crossing per
/// row. The over-strand is drawn as one continuous diagonal; the under-strand
/// is gapped around the crossing point. A positive letter takes the strand
/// entering from the left slot over the one from the right slot. Fixed
/// integer-friendly geometry so outputs are diffable.
inline std::string braid_svg(const BraidWord& w,
                             const std::vector<std::string>& labels = {}) {
  w.validate();
  const long n = w.strand_count;
  const double dx = 48.0, row_h = 48.0, margin = 30.0, label_h = 24.0;
  const double width = 2.0 * margin + double(n - 1) * dx;
  const double height = label_h + margin + double(w.letters.size()) * row_h + margin;
  auto sx = [&](long slot) { return margin + double(slot) * dx; };
  auto sy = [&](size_t row) { return label_h + margin + double(row) * row_h; };

  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(1);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  out << "<style>line{stroke:#000;stroke-width:2;fill:none}text{font-family:monospace;"
         "font-size:13px;text-anchor:middle}</style>\n";

  for (long s = 0; s < n; ++s) {
    std::string label = s < long(labels.size()) ? labels[s] : "Y_" + std::to_string(s);
    out << "<text x=\"" << sx(s) << "\" y=\"" << label_h - 8.0 << "\">" << label << "</text>\n";
  }

  auto vline = [&](long slot, size_t row) {
    out << "<line x1=\"" << sx(slot) << "\" y1=\"" << sy(row) << "\" x2=\"" << sx(slot)
        << "\" y2=\"" << sy(row + 1) << "\"/>\n";
  };
  auto diag = [&](long s0, long s1, size_t row, double u0, double u1) {
    double x0 = sx(s0) + u0 * (sx(s1) - sx(s0)), x1 = sx(s0) + u1 * (sx(s1) - sx(s0));
    double y0 = sy(row) + u0 * row_h, y1 = sy(row) + u1 * row_h;
    out << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x1 << "\" y2=\"" << y1
        << "\"/>\n";
  };

  for (size_t row = 0; row < w.letters.size(); ++row) {
    int letter = w.letters[row];
    long k = letter > 0 ? letter : -letter;  // crossing of slots k-1 and k
    for (long s = 0; s < n; ++s)
      if (s != k - 1 && s != k) vline(s, row);
    out << "<g class=\"crossing " << (letter > 0 ? "positive" : "negative") << "\">\n";
    if (letter > 0) {
      diag(k, k - 1, row, 0.0, 0.38);  // under: right-to-left, gapped
      diag(k, k - 1, row, 0.62, 1.0);
      diag(k - 1, k, row, 0.0, 1.0);   // over: left-to-right, continuous
    } else {
      diag(k - 1, k, row, 0.0, 0.38);  // under: left-to-right, gapped
      diag(k - 1, k, row, 0.62, 1.0);
      diag(k, k - 1, row, 0.0, 1.0);   // over: right-to-left, continuous
    }
    out << "</g>\n";
  }
  if (w.letters.empty())
    for (long s = 0; s < n; ++s)
      out << "<line x1=\"" << sx(s) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(s) << "\" y2=\""
          << sy(0) + row_h << "\"/>\n";
  out << "</svg>\n";
  return out.str();
}

inline void save_svg(const std::string& file, const std::string& content) {
  std::ofstream out(file, std::ios::trunc);
  if (!out) throw BadInput("cannot open SVG file for writing: " + file);
  out << content;
}

}  // namespace braidnomial

#endif
