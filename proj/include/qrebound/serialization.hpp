#pragma once

// JSON matrix files {"dim", "re", "im"}, BoundReport output as JSON or one
// CSV row. Infinite values are written as the literal "+inf".

#include <filesystem>
#include <string>

#include "json.hpp"

#include "qrebound/bounds.hpp"
#include "qrebound/linalg.hpp"
#include "qrebound/states.hpp"

namespace qrebound {

using Json = nlohmann::json;

inline constexpr const char* kInfLiteral = "+inf";

/// Full precision; parsing the output recovers the matrix bit for bit.
Json matrix_to_json(const ComplexMatrix& m);
Json matrix_to_json(const HermitianMatrix& m);
ComplexMatrix complex_matrix_from_json(const Json& j);
/// Validates Hermiticity (and, for states, trace and positivity).
HermitianMatrix hermitian_from_json(const Json& j);
DensityMatrix density_from_json(const Json& j);

DensityMatrix load_density(const std::filesystem::path& path);
void save_json(const std::filesystem::path& path, const Json& j);

/// Round to 15 significant digits.
double round_sig15(double v);
/// "%.15g", or "+inf" / "-inf" / "nan".
std::string format_sig15(double v);
/// Number rounded to 15 significant digits, or the "+inf" string.
Json number_sig15(double v);
/// Accepts a JSON number or the "+inf" literal.
double number_from_json(const Json& j);

Json report_to_json(const BoundReport& r);
std::string report_csv_header();
std::string report_csv_row(const BoundReport& r);

}  // namespace qrebound
