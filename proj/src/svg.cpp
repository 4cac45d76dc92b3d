#include "orbitmat/svg.hpp"

#include <fstream>
#include <string>

#include "orbitmat/errors.hpp"

namespace orbitmat {

namespace {

constexpr int kCell = 10;
constexpr const char* kRed = "#d62728";   // +1
constexpr const char* kBlue = "#1f77b4";  // -1

std::string svg_header(index_t n) {
  const std::string edge = std::to_string(static_cast<std::int64_t>(n) * kCell);
  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + edge + "\" height=\"" + edge +
         "\" viewBox=\"0 0 " + edge + " " + edge + "\">\n";
  out += "<rect width=\"" + edge + "\" height=\"" + edge + "\" fill=\"#ffffff\"/>\n";
  return out;
}

void append_cell(std::string& out, index_t row, index_t col, int value) {
  out += "<rect x=\"" + std::to_string(static_cast<std::int64_t>(col - 1) * kCell) + "\" y=\"" +
         std::to_string(static_cast<std::int64_t>(row - 1) * kCell) +
         "\" width=\"10\" height=\"10\" fill=\"";
  out += value > 0 ? kRed : kBlue;
  out += "\"/>\n";
}

void check_size(index_t n) {
  if (n > kMaxSvgDim) {
    throw Error(ErrorCode::SizeLimitExceeded,
                "sparsity plots are capped at n = " + std::to_string(kMaxSvgDim));
  }
}

void write_file(const std::string& content, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot open " + path + " for writing");
  out << content;
}

}  // namespace

std::string render_svg(const SparseSignMatrix& m) {
  check_size(m.n);
  std::string out = svg_header(m.n);
  for (index_t j = 1; j <= m.n; ++j) {
    for (const auto& [row, value] : m.columns[j - 1]) {
      append_cell(out, row, j, value);
    }
  }
  out += "</svg>\n";
  return out;
}

std::string render_svg(const PartialMapMatrix& m) {
  check_size(m.n());
  std::string out = svg_header(m.n());
  for (index_t j = 1; j <= m.n(); ++j) {
    if (m.col_to_row(j) != 0) append_cell(out, m.col_to_row(j), j, +1);
  }
  out += "</svg>\n";
  return out;
}

void write_svg(const SparseSignMatrix& m, const std::string& path) {
  write_file(render_svg(m), path);
}

void write_svg(const PartialMapMatrix& m, const std::string& path) {
  write_file(render_svg(m), path);
}

}  // namespace orbitmat
