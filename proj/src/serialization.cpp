#include "qrebound/serialization.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace qrebound {

namespace {

Json real_rows(const ComplexMatrix& m, bool imag) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(imag ? m(i, j).imag() : m(i, j).real());
    rows.push_back(std::move(row));
  }
  return rows;
}

void read_rows(const Json& rows, int dim, const char* field, ComplexMatrix& m, bool imag) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != dim)
    throw std::invalid_argument(std::string("matrix JSON: '") + field + "' must have dim rows");
  for (int i = 0; i < dim; ++i) {
    const Json& row = rows[i];
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      throw std::invalid_argument(std::string("matrix JSON: '") + field + "' row " +
                                  std::to_string(i) + " must have dim entries");
    for (int j = 0; j < dim; ++j) {
      if (!row[j].is_number())
        throw std::invalid_argument(std::string("matrix JSON: '") + field +
                                    "' entries must be numbers");
      const double v = row[j].get<double>();
      if (imag) m(i, j).imag(v); else m(i, j).real(v);
    }
  }
}

}  // namespace

Json matrix_to_json(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix_to_json: matrix must be square");
  return Json{{"dim", m.rows()}, {"re", real_rows(m, false)}, {"im", real_rows(m, true)}};
}

Json matrix_to_json(const HermitianMatrix& m) { return matrix_to_json(m.matrix()); }

ComplexMatrix complex_matrix_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("matrix JSON: expected an object");
  for (const char* key : {"dim", "re", "im"})
    if (!j.contains(key))
      throw std::invalid_argument(std::string("matrix JSON: missing field '") + key + "'");
  if (!j["dim"].is_number_integer() || j["dim"].get<long>() < 1)
    throw std::invalid_argument("matrix JSON: 'dim' must be a positive integer");
  const int dim = j["dim"].get<int>();
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  read_rows(j["re"], dim, "re", m, false);
  read_rows(j["im"], dim, "im", m, true);
  return m;
}

HermitianMatrix hermitian_from_json(const Json& j) {
  return HermitianMatrix(complex_matrix_from_json(j));
}

DensityMatrix density_from_json(const Json& j) { return DensityMatrix(hermitian_from_json(j)); }

DensityMatrix load_density(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
  try {
    return density_from_json(j);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
}

void save_json(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << '\n';
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

double round_sig15(double v) {
  if (!std::isfinite(v)) return v;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return std::strtod(buf, nullptr);
}

std::string format_sig15(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? kInfLiteral : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

Json number_sig15(double v) {
  if (std::isinf(v) && v > 0) return kInfLiteral;
  if (!std::isfinite(v)) return format_sig15(v);
  return round_sig15(v);
}

double number_from_json(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string() && j.get<std::string>() == kInfLiteral)
    return std::numeric_limits<double>::infinity();
  throw std::invalid_argument("expected a number or \"+inf\"");
}

Json report_to_json(const BoundReport& r) {
  Json j;
  j["dim"] = r.dim;
  j["beta"] = number_sig15(r.beta);
  j["T_half"] = number_sig15(r.t_trace_half);
  j["T_full"] = number_sig15(r.t_trace_full);
  j["T_s2"] = number_sig15(r.t_schatten2);
  j["T_op"] = number_sig15(r.t_operator);
  j["exact"] = number_sig15(r.exact.value());
  j["lower_s"] = number_sig15(r.lower_s);
  j["lower_pinsker"] = number_sig15(r.lower_pinsker);
  j["up_brat"] = number_sig15(r.upper_brat);
  j["up_logbeta"] = number_sig15(r.upper_minus_log_beta);
  j["up_quad"] = number_sig15(r.upper_quad);
  j["up_log"] = number_sig15(r.upper_log);
  j["up_sharp"] = number_sig15(r.upper_sharp);
  j["sharp_status"] = to_string(r.sharp_status);
  j["approx_small_T"] = number_sig15(r.approx_small_t);
  return j;
}

std::string report_csv_header() {
  return "dim,beta,T_half,T_full,T_s2,T_op,exact,lower_s,lower_pinsker,up_brat,up_logbeta,"
         "up_quad,up_log,up_sharp";
}

std::string report_csv_row(const BoundReport& r) {
  std::string row = std::to_string(r.dim);
  for (double v : {r.beta, r.t_trace_half, r.t_trace_full, r.t_schatten2, r.t_operator,
                   r.exact.value(), r.lower_s, r.lower_pinsker, r.upper_brat,
                   r.upper_minus_log_beta, r.upper_quad, r.upper_log, r.upper_sharp}) {
    row += ',';
    row += format_sig15(v);
  }
  return row;
}

}  // namespace qrebound
