#include "kraus/io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace kraus::io {

namespace {

std::size_t expect_positive_int(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  const json& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() <= 0)
    throw ParseError(std::string("field \"") + key + "\" must be a positive integer");
  return v.get<std::size_t>();
}

double expect_finite(const json& v, const char* what) {
  if (!v.is_number()) throw ParseError(std::string(what) + ": expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ParseError(std::string(what) + ": non-finite number");
  return x;
}

double parse_csv_double(const std::string& field, std::size_t line) {
  errno = 0;
  char* end = nullptr;
  const double x = std::strtod(field.c_str(), &end);
  if (field.empty() || end != field.c_str() + field.size() || errno == ERANGE)
    throw ParseError("trajectory csv line " + std::to_string(line) + ": bad number \"" + field + "\"");
  return x;
}

}  // namespace

json matrix_to_json(const ComplexMatrix& m) {
  require_finite(m, "matrix_to_json");
  json data = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) data.push_back({m(i, j).real(), m(i, j).imag()});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("matrix: expected a JSON object");
  const auto rows = expect_positive_int(j, "rows");
  const auto cols = expect_positive_int(j, "cols");
  if (!j.contains("data") || !j.at("data").is_array()) throw ParseError("matrix: missing array field \"data\"");
  const json& data = j.at("data");
  if (data.size() != rows * cols)
    throw ParseError("matrix: data has " + std::to_string(data.size()) + " entries, expected rows*cols = " +
                     std::to_string(rows * cols));
  ComplexMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t k = 0; k < data.size(); ++k) {
    const json& e = data[k];
    if (!e.is_array() || e.size() != 2) throw ParseError("matrix: entry " + std::to_string(k) + " is not [re, im]");
    m(static_cast<Eigen::Index>(k / cols), static_cast<Eigen::Index>(k % cols)) =
        Complex(expect_finite(e[0], "matrix entry"), expect_finite(e[1], "matrix entry"));
  }
  return m;
}

json channel_to_json(const KrausChannel& ch) {
  json ops = json::array();
  for (const auto& k : ch.operators()) ops.push_back(matrix_to_json(k));
  return {{"d_s", ch.d_s()}, {"operators", std::move(ops)}};
}

KrausChannel channel_from_json(const json& j, bool check_completeness) {
  if (!j.is_object()) throw ParseError("channel: expected a JSON object");
  const auto d_s = static_cast<Eigen::Index>(expect_positive_int(j, "d_s"));
  if (!j.contains("operators") || !j.at("operators").is_array() || j.at("operators").empty())
    throw ParseError("channel: \"operators\" must be a non-empty array");
  std::vector<ComplexMatrix> ops;
  for (const auto& o : j.at("operators")) {
    ComplexMatrix k = matrix_from_json(o);
    if (k.rows() != d_s || k.cols() != d_s)
      throw ParseError("channel: operator is " + shape_of(k) + ", expected " + std::to_string(d_s) + "x" +
                       std::to_string(d_s));
    ops.push_back(std::move(k));
  }
  return check_completeness ? KrausChannel(d_s, std::move(ops)) : KrausChannel::unchecked(d_s, std::move(ops));
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << j.dump(2) << '\n';
  if (!out) throw IoError("write to " + path.string() + " failed");
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_trajectory_csv(std::ostream& os, const std::vector<TrajectoryPoint>& points) {
  os << kTrajectoryHeader << '\n';
  for (const auto& pt : points)
    os << format_double(pt.t) << ',' << format_double(pt.p) << ',' << format_double(pt.bloch.r1) << ','
       << format_double(pt.bloch.r2) << ',' << format_double(pt.bloch.r3) << ',' << format_double(pt.coherence)
       << '\n';
}

std::vector<TrajectoryPoint> read_trajectory_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kTrajectoryHeader)
    throw ParseError("trajectory csv: expected header \"" + std::string(kTrajectoryHeader) + "\"");
  std::vector<TrajectoryPoint> out;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<double> f;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) f.push_back(parse_csv_double(field, lineno));
    if (f.size() != 6) throw ParseError("trajectory csv line " + std::to_string(lineno) + ": expected 6 fields");
    out.push_back({f[0], f[1], {f[2], f[3], f[4]}, f[5]});
  }
  return out;
}

}  // namespace kraus::io
