#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace qcl {

// Shortest round-trippable decimal form, '.' separator, locale-independent.
inline std::string format_double(double v) {
    char buf[32];
    if (v == static_cast<double>(static_cast<long long>(v)) && std::abs(v) < 1e15) {
        std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(v));
        return buf;
    }
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    double parsed = 0.0;
    std::sscanf(buf, "%lf", &parsed);
    if (parsed == v) {
        for (int prec = 1; prec < 17; ++prec) {
            char shorter[32];
            std::snprintf(shorter, sizeof(shorter), "%.*g", prec, v);
            std::sscanf(shorter, "%lf", &parsed);
            if (parsed == v) return shorter;
        }
    }
    return buf;
}

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    void write(const std::filesystem::path& path) const {
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
        for (std::size_t i = 0; i < header.size(); ++i)
            out << (i ? "," : "") << header[i];
        out << "\n";
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                out << (i ? "," : "") << format_double(row[i]);
            out << "\n";
        }
    }

    static CsvTable read(const std::filesystem::path& path) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open: " + path.string());
        CsvTable t;
        std::string line;
        if (!std::getline(in, line)) throw std::runtime_error("empty CSV: " + path.string());
        std::stringstream hs(line);
        std::string cell;
        while (std::getline(hs, cell, ',')) t.header.push_back(cell);
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            std::vector<double> row;
            std::stringstream rs(line);
            while (std::getline(rs, cell, ',')) row.push_back(std::stod(cell));
            if (row.size() != t.header.size())
                throw std::runtime_error("ragged CSV row in " + path.string());
            t.rows.push_back(std::move(row));
        }
        return t;
    }

    int column(const std::string& name) const {
        auto it = std::find(header.begin(), header.end(), name);
        if (it == header.end()) throw std::runtime_error("missing CSV column: " + name);
        return static_cast<int>(it - header.begin());
    }
};

// Minimal standalone-SVG chart: polyline series, scatter points, heat cells.
class SvgPlot {
  public:
    SvgPlot(double xmin, double xmax, double ymin, double ymax, std::string title)
        : xmin_(xmin), xmax_(xmax), ymin_(ymin), ymax_(ymax), title_(std::move(title)) {}

    void add_line(const std::vector<double>& xs, const std::vector<double>& ys,
                  const std::string& color, const std::string& label) {
        std::ostringstream s;
        s << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < xs.size(); ++i)
            s << px(xs[i]) << "," << py(ys[i]) << " ";
        s << "\"/>\n";
        body_ += s.str();
        legend_.emplace_back(color, label);
    }

    void add_points(const std::vector<double>& xs, const std::vector<double>& ys,
                    const std::string& color, const std::string& label) {
        std::ostringstream s;
        for (std::size_t i = 0; i < xs.size(); ++i)
            s << "<circle cx=\"" << px(xs[i]) << "\" cy=\"" << py(ys[i])
              << "\" r=\"3\" fill=\"" << color << "\"/>\n";
        body_ += s.str();
        legend_.emplace_back(color, label);
    }

    // Cell centered at (x, y) with data-space extents (dx, dy); value in [0,1]
    // rendered on a blue-to-red ramp.
    void add_heat_cell(double x, double y, double dx, double dy, double value) {
        const int r = static_cast<int>(255 * std::clamp(value, 0.0, 1.0));
        const int b = 255 - r;
        std::ostringstream s;
        s << "<rect x=\"" << px(x - dx / 2) << "\" y=\"" << py(y + dy / 2) << "\" width=\""
          << px(x + dx / 2) - px(x - dx / 2) << "\" height=\"" << py(y - dy / 2) - py(y + dy / 2)
          << "\" fill=\"rgb(" << r << ",64," << b << ")\" fill-opacity=\"0.5\"/>\n";
        heat_ += s.str();
    }

    std::string render() const {
        std::ostringstream s;
        s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
          << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH
          << "\" viewBox=\"0 0 " << kW << " " << kH << "\">\n"
          << "<rect width=\"" << kW << "\" height=\"" << kH << "\" fill=\"white\"/>\n";
        s << heat_;
        // frame + axis labels
        s << "<rect x=\"" << kPad << "\" y=\"" << kPad << "\" width=\"" << kW - 2 * kPad
          << "\" height=\"" << kH - 2 * kPad
          << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
        s << "<text x=\"" << kW / 2 << "\" y=\"18\" text-anchor=\"middle\" font-size=\"14\">"
          << title_ << "</text>\n";
        for (int i = 0; i <= 4; ++i) {
            const double xv = xmin_ + (xmax_ - xmin_) * i / 4.0;
            const double yv = ymin_ + (ymax_ - ymin_) * i / 4.0;
            s << "<text x=\"" << px(xv) << "\" y=\"" << kH - kPad + 16
              << "\" text-anchor=\"middle\" font-size=\"10\">" << format_double(round3(xv))
              << "</text>\n";
            s << "<text x=\"" << kPad - 6 << "\" y=\"" << py(yv) + 3
              << "\" text-anchor=\"end\" font-size=\"10\">" << format_double(round3(yv))
              << "</text>\n";
        }
        s << body_;
        double ly = kPad + 14;
        for (const auto& [color, label] : legend_) {
            if (label.empty()) continue;
            s << "<rect x=\"" << kW - kPad - 110 << "\" y=\"" << ly - 8
              << "\" width=\"10\" height=\"10\" fill=\"" << color << "\"/>\n";
            s << "<text x=\"" << kW - kPad - 96 << "\" y=\"" << ly
              << "\" font-size=\"11\">" << label << "</text>\n";
            ly += 16;
        }
        s << "</svg>\n";
        return s.str();
    }

    void write(const std::filesystem::path& path) const {
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
        out << render();
    }

  private:
    static constexpr int kW = 640;
    static constexpr int kH = 480;
    static constexpr int kPad = 48;

    static double round3(double v) { return std::round(v * 1000.0) / 1000.0; }

    double px(double x) const { return kPad + (x - xmin_) / (xmax_ - xmin_) * (kW - 2 * kPad); }
    double py(double y) const {
        return kH - kPad - (y - ymin_) / (ymax_ - ymin_) * (kH - 2 * kPad);
    }

    double xmin_, xmax_, ymin_, ymax_;
    std::string title_;
    std::string body_;
    std::string heat_;
    std::vector<std::pair<std::string, std::string>> legend_;
};

}  // namespace qcl
