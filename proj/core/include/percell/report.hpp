#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "percell/spatial.hpp"

namespace percell {

// Shortest round-trip decimal representation (std::to_chars); the basis of
// the byte-identical CSV contract.
std::string format_double(double v);

uint64_t fnv1a64(std::string_view bytes);

// CSV with a leading '# config_hash=<16 hex> seed=<n>' comment line, then a
// header row, then data rows; '\n' line endings throughout.
class CsvWriter {
  public:
    void set_comment(uint64_t config_hash, uint64_t seed);
    void set_header(std::vector<std::string> names);
    void add_row(std::vector<std::string> cells);
    std::string str() const;

  private:
    std::string comment_;
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

struct SvgSeries {
    std::string name;
    std::vector<std::pair<double, double>> xy;
};

// Fixed 800x600 line chart, linear axes, one polyline per series.
std::string svg_line_chart(const std::vector<SvgSeries>& series,
                           std::string_view x_label, std::string_view y_label);

// Binary PGM (P5), 0 = uncovered, 255 = covered, top row = largest y.
std::string pgm_bytes(const CoverageGrid& grid);

} // namespace percell
