#pragma once

// Deterministic CSV and SVG emission.  All floating-point text goes through
// one formatter so regenerated files are byte-identical for a fixed config.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "tadpole/errors.hpp"

namespace tadpole {

// Round-trip exact, locale-independent double formatting.
inline std::string fmt_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string fmt_g6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

struct CsvTable {
    std::vector<std::string> comments;  // emitted as leading '# ' lines
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

inline void write_csv(const std::string& path, const CsvTable& table) {
    std::ofstream out(path, std::ios::binary);  // '\n' endings everywhere
    if (!out) throw numerical_error("io: cannot write " + path, 0.0, 0.0);
    for (const std::string& c : table.comments) out << "# " << c << "\n";
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        out << (i ? "," : "") << table.columns[i];
    out << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << row[i];
        out << "\n";
    }
    if (!out) throw numerical_error("io: short write to " + path, 0.0, 0.0);
}

struct SvgSeries {
    std::vector<double> x;
    std::vector<double> y;
    std::string color = "#1f6fb2";
    bool dashed = false;
};

struct SvgPlot {
    std::string title;
    std::string xlabel;
    std::string ylabel;
    std::vector<SvgSeries> series;
    std::vector<double> hlines;  // dotted horizontal reference levels
};

// Minimal self-contained line plot; fixed 800x500 canvas, linear axes.
inline void write_svg(const std::string& path, const SvgPlot& plot) {
    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    bool first = true;
    for (const SvgSeries& s : plot.series)
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (first) {
                xmin = xmax = s.x[i];
                ymin = ymax = s.y[i];
                first = false;
            }
            xmin = std::min(xmin, s.x[i]);
            xmax = std::max(xmax, s.x[i]);
            ymin = std::min(ymin, s.y[i]);
            ymax = std::max(ymax, s.y[i]);
        }
    for (double h : plot.hlines) {
        ymin = std::min(ymin, h);
        ymax = std::max(ymax, h);
    }
    if (xmax == xmin) xmax = xmin + 1.0;
    if (ymax == ymin) ymax = ymin + 1.0;
    const double pad_y = 0.05 * (ymax - ymin);
    ymin -= pad_y;
    ymax += pad_y;
    const double W = 800, H = 500, ml = 70, mr = 20, mt = 40, mb = 50;
    const auto X = [&](double v) {
        return ml + (v - xmin) / (xmax - xmin) * (W - ml - mr);
    };
    const auto Y = [&](double v) {
        return H - mb - (v - ymin) / (ymax - ymin) * (H - mt - mb);
    };
    std::ofstream out(path, std::ios::binary);
    if (!out) throw numerical_error("io: cannot write " + path, 0.0, 0.0);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" "
           "height=\"500\" viewBox=\"0 0 800 500\">\n"
        << "<rect width=\"800\" height=\"500\" fill=\"white\"/>\n";
    out << "<text x=\"400\" y=\"24\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"16\">"
        << plot.title << "</text>\n";
    // axes box and corner labels
    out << "<rect x=\"" << fmt_g6(ml) << "\" y=\"" << fmt_g6(mt)
        << "\" width=\"" << fmt_g6(W - ml - mr) << "\" height=\""
        << fmt_g6(H - mt - mb)
        << "\" fill=\"none\" stroke=\"#444\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << fmt_g6(ml) << "\" y=\"" << fmt_g6(H - mb + 18)
        << "\" font-family=\"sans-serif\" font-size=\"11\">" << fmt_g6(xmin)
        << "</text>\n";
    out << "<text x=\"" << fmt_g6(W - mr) << "\" y=\"" << fmt_g6(H - mb + 18)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
           "font-size=\"11\">"
        << fmt_g6(xmax) << "</text>\n";
    out << "<text x=\"" << fmt_g6(ml - 8) << "\" y=\"" << fmt_g6(H - mb)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
           "font-size=\"11\">"
        << fmt_g6(ymin) << "</text>\n";
    out << "<text x=\"" << fmt_g6(ml - 8) << "\" y=\"" << fmt_g6(mt + 4)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
           "font-size=\"11\">"
        << fmt_g6(ymax) << "</text>\n";
    out << "<text x=\"400\" y=\"" << fmt_g6(H - 12)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"13\">"
        << plot.xlabel << "</text>\n";
    out << "<text x=\"18\" y=\"250\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"13\" "
           "transform=\"rotate(-90 18 250)\">"
        << plot.ylabel << "</text>\n";
    for (double h : plot.hlines)
        out << "<line x1=\"" << fmt_g6(ml) << "\" y1=\"" << fmt_g6(Y(h))
            << "\" x2=\"" << fmt_g6(W - mr) << "\" y2=\"" << fmt_g6(Y(h))
            << "\" stroke=\"#888\" stroke-width=\"1\" "
               "stroke-dasharray=\"2,4\"/>\n";
    for (const SvgSeries& s : plot.series) {
        out << "<polyline fill=\"none\" stroke=\"" << s.color
            << "\" stroke-width=\"1.5\"";
        if (s.dashed) out << " stroke-dasharray=\"6,3\"";
        out << " points=\"";
        for (std::size_t i = 0; i < s.x.size(); ++i)
            out << fmt_g6(X(s.x[i])) << "," << fmt_g6(Y(s.y[i])) << " ";
        out << "\"/>\n";
    }
    out << "</svg>\n";
    if (!out) throw numerical_error("io: short write to " + path, 0.0, 0.0);
}

}  // namespace tadpole
