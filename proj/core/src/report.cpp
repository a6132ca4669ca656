#include "percell/report.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "percell/error.hpp"

namespace percell {

std::string format_double(double v) {
    std::array<char, 64> buf;
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

uint64_t fnv1a64(std::string_view data) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= uint64_t(c);
        h *= 0x100000001b3ull;
    }
    return h;
}

void CsvWriter::set_comment(uint64_t config_hash, uint64_t seed) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(config_hash));
    comment_ = "# config_hash=";
    comment_ += buf;
    comment_ += " seed=";
    comment_ += std::to_string(seed);
}

void CsvWriter::set_header(std::vector<std::string> names) {
    header_ = std::move(names);
}

void CsvWriter::add_row(std::vector<std::string> cells) {
    if (!header_.empty() && cells.size() != header_.size())
        fail(ErrorCode::InvalidConfig, "csv row width does not match header");
    rows_.push_back(std::move(cells));
}

std::string CsvWriter::str() const {
    std::string out;
    if (!comment_.empty()) {
        out += comment_;
        out += '\n';
    }
    auto join = [&out](const std::vector<std::string>& cells) {
        for (size_t i = 0; i < cells.size(); ++i) {
            if (i > 0) out += ',';
            out += cells[i];
        }
        out += '\n';
    };
    if (!header_.empty()) join(header_);
    for (const auto& r : rows_) join(r);
    return out;
}

namespace {

// fixed-decimal text for axis labels; data itself stays in the CSV
std::string axis_label(double v) {
    char buf[48];
    if (v == 0.0) return "0";
    const double a = std::fabs(v);
    if (a >= 0.01 && a < 10000.0)
        std::snprintf(buf, sizeof buf, "%.4g", v);
    else
        std::snprintf(buf, sizeof buf, "%.2e", v);
    return buf;
}

} // namespace

std::string svg_line_chart(const std::vector<SvgSeries>& series,
                           std::string_view x_label, std::string_view y_label) {
    constexpr double W = 800.0, H = 600.0;
    constexpr double ML = 70.0, MR = 160.0, MT = 20.0, MB = 50.0;
    const double pw = W - ML - MR, ph = H - MT - MB;

    double xmin = 0.0, xmax = 1.0;
    bool have = false;
    for (const auto& s : series)
        for (const auto& [x, y] : s.xy) {
            (void)y;
            if (!have) {
                xmin = xmax = x;
                have = true;
            } else {
                xmin = std::min(xmin, x);
                xmax = std::max(xmax, x);
            }
        }
    if (!have || xmax <= xmin) {
        xmin = have ? xmin - 0.5 : 0.0;
        xmax = xmin + 1.0;
    }

    auto sx = [&](double x) { return ML + (x - xmin) / (xmax - xmin) * pw; };
    auto sy = [&](double y) { return MT + (1.0 - y) * ph; };

    static const char* palette[] = {"#1f77b4", "#2ca02c", "#d62728",
                                    "#9467bd", "#8c564b", "#e377c2"};

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" "
          "height=\"600\" viewBox=\"0 0 800 600\">\n";
    os << "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";

    // gridlines and y ticks at fixed probability levels
    for (int i = 0; i <= 4; ++i) {
        const double y = 0.25 * i;
        const double py = sy(y);
        os << "<line x1=\"" << ML << "\" y1=\"" << py << "\" x2=\"" << ML + pw
           << "\" y2=\"" << py << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        os << "<text x=\"" << ML - 8 << "\" y=\"" << py + 4
           << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
              "font-size=\"12\">"
           << axis_label(y) << "</text>\n";
    }
    for (int i = 0; i <= 4; ++i) {
        const double x = xmin + (xmax - xmin) * i / 4.0;
        const double px = sx(x);
        os << "<line x1=\"" << px << "\" y1=\"" << MT + ph << "\" x2=\"" << px
           << "\" y2=\"" << MT + ph + 5
           << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
        os << "<text x=\"" << px << "\" y=\"" << MT + ph + 20
           << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
              "font-size=\"12\">"
           << axis_label(x) << "</text>\n";
    }

    os << "<rect x=\"" << ML << "\" y=\"" << MT << "\" width=\"" << pw
       << "\" height=\"" << ph
       << "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    os << "<text x=\"" << ML + pw / 2 << "\" y=\"" << H - 12
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
          "font-size=\"14\">"
       << x_label << "</text>\n";
    os << "<text x=\"18\" y=\"" << MT + ph / 2
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
          "font-size=\"14\" transform=\"rotate(-90 18 "
       << MT + ph / 2 << ")\">" << y_label << "</text>\n";

    for (size_t si = 0; si < series.size(); ++si) {
        const char* color = palette[si % 6];
        const auto& pts = series[si].xy;
        if (!pts.empty()) {
            os << "<polyline fill=\"none\" stroke=\"" << color
               << "\" stroke-width=\"2\" points=\"";
            for (size_t i = 0; i < pts.size(); ++i) {
                if (i > 0) os << ' ';
                os << sx(pts[i].first) << ',' << sy(pts[i].second);
            }
            os << "\"/>\n";
            for (const auto& [x, y] : pts)
                os << "<circle cx=\"" << sx(x) << "\" cy=\"" << sy(y)
                   << "\" r=\"3\" fill=\"" << color << "\"/>\n";
        }
        const double ly = MT + 16.0 + 20.0 * double(si);
        os << "<line x1=\"" << ML + pw + 14 << "\" y1=\"" << ly << "\" x2=\""
           << ML + pw + 38 << "\" y2=\"" << ly << "\" stroke=\"" << color
           << "\" stroke-width=\"2\"/>\n";
        os << "<text x=\"" << ML + pw + 44 << "\" y=\"" << ly + 4
           << "\" font-family=\"sans-serif\" font-size=\"12\">"
           << series[si].name << "</text>\n";
    }

    os << "</svg>\n";
    return os.str();
}

std::string pgm_bytes(const CoverageGrid& grid) {
    std::string out = "P5\n";
    out += std::to_string(grid.nx);
    out += ' ';
    out += std::to_string(grid.ny);
    out += "\n255\n";
    out.reserve(out.size() + size_t(grid.nx) * size_t(grid.ny));
    // top image row is the largest y so the picture is not mirrored
    for (int iy = grid.ny - 1; iy >= 0; --iy)
        for (int ix = 0; ix < grid.nx; ++ix)
            out += char(grid.covered[size_t(iy) * size_t(grid.nx) + size_t(ix)]
                             ? 255
                             : 0);
    return out;
}

} // namespace percell
