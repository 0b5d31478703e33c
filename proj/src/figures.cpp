#include "qrebound/figures.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "qrebound/bounds.hpp"
#include "qrebound/serialization.hpp"

namespace qrebound {

namespace {

// k·step for k = 0, 1, … while k·step ≤ upper (up to rounding), last point
// clamped to upper.
std::vector<double> grid_to(double upper) {
  std::vector<double> g;
  const long n = static_cast<long>(std::floor(upper / kFigureStep + 1e-9));
  for (long k = 0; k <= n; ++k) g.push_back(std::min(k * kFigureStep, upper));
  return g;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace

std::string FigureTable::to_csv() const {
  std::string out;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out += ',';
    out += columns[i];
  }
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_sig15(row[i]);
    }
    out += '\n';
  }
  return out;
}

FigureTable figure1() {
  FigureTable t;
  t.columns = {"x", "s", "two_x_squared", "minus_log_one_minus_x"};
  for (double x : grid_to(0.995))
    t.rows.push_back({x, s_of_x(x), 2.0 * x * x, -std::log1p(-x)});
  return t;
}

FigureTable figure2(double beta) {
  FigureTable t;
  t.beta = beta;
  t.columns = {"T", "bound"};
  for (double x : grid_to(1.0 - beta)) t.rows.push_back({x, upper_bound_sharp_d2(x, beta)});
  return t;
}

FigureTable figure3(double beta) {
  FigureTable t;
  t.beta = beta;
  t.columns = {"T", "bound_log", "sharp_dgt2"};
  for (double x : grid_to(1.0 - beta))
    t.rows.push_back({x, log_bound_value(2.0 * x, 3, beta), upper_bound_sharp_dgt2(x, beta)});
  return t;
}

std::vector<std::filesystem::path> write_figure(int which, const std::filesystem::path& out) {
  if (which < 1 || which > 3)
    throw std::invalid_argument("figure must be 1, 2 or 3, got " + std::to_string(which));
  std::vector<std::filesystem::path> written;
  if (which == 1) {
    write_text(out, figure1().to_csv());
    written.push_back(out);
    return written;
  }
  for (double beta : kFigureBetas) {
    std::filesystem::path p = out;
    p.replace_filename(out.stem().string() + "_beta" + format_sig15(beta) +
                     out.extension().string());
    write_text(p, (which == 2 ? figure2(beta) : figure3(beta)).to_csv());
    written.push_back(p);
  }
  return written;
}

}  // namespace qrebound
