// CSV emission (incremental, crash leaves a valid prefix) and self-rendered
// SVG line charts; no plotting dependency.

#pragma once

#include <fstream>
#include <string>
#include <vector>

namespace epdw::io {

// Shortest decimal that round-trips the double (<= 17 significant digits).
std::string format_double(double v);

class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::vector<std::string>& columns);

  void row(const std::vector<double>& values);
  void row_cells(const std::vector<std::string>& cells);

  const std::string& path() const { return path_; }
  std::size_t rows_written() const { return rows_; }

 private:
  std::string path_;
  std::ofstream out_;
  std::size_t columns_ = 0;
  std::size_t rows_ = 0;
};

struct SvgSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  std::string color = "#1f77b4";
};

// Log-log line chart; points with nonpositive coordinates are dropped.
void write_loglog_chart(const std::string& path, const std::string& title,
                        const std::string& x_label, const std::string& y_label,
                        const std::vector<SvgSeries>& series);

}  // namespace epdw::io
