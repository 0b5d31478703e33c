#pragma once

// CSV data behind the three figures: s(x) between its quadratic and
// logarithmic bounds, the d = 2 sharp upper bound, and the d > 2 sharp bound
// against the logarithmic bound.

#include <array>
#include <filesystem>
#include <string>
#include <vector>

namespace qrebound {

inline constexpr std::array<double, 5> kFigureBetas{0.1, 0.2, 0.3, 0.4, 0.5};
inline constexpr double kFigureStep = 0.005;

struct FigureTable {
  double beta = 0.0;  // 0 for figure 1
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  /// Header row, ',' separated, '.' decimal, 15 significant digits, LF.
  std::string to_csv() const;
};

/// x, s(x), 2x², −log(1−x) for x = 0, 0.005, …, 0.995.
FigureTable figure1();
/// T, upper_bound_sharp_d2(T, β) for T = 0, 0.005, …, 1−β.
FigureTable figure2(double beta);
/// T, logarithmic bound (d = 3, Tr|Δ| = 2T), upper_bound_sharp_dgt2(T, β).
FigureTable figure3(double beta);

/// Figure 1 goes to `out`; figures 2 and 3 write one file per β named
/// <stem>_beta<β><ext> next to `out`. Returns the paths written.
std::vector<std::filesystem::path> write_figure(int which, const std::filesystem::path& out);

}  // namespace qrebound
