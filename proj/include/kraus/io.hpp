#pragma once

#include "kraus/channels.hpp"
#include "kraus/dynamics.hpp"

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace kraus::io {

using nlohmann::json;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"rows": n, "cols": m, "data": [[re, im], ...]} row-major.
json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& j);

// {"d_s": n, "operators": [matrix, ...]}. With check_completeness = false the
// set is loaded through KrausChannel::unchecked.
json channel_to_json(const KrausChannel& ch);
KrausChannel channel_from_json(const json& j, bool check_completeness = true);

json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const json& j);

inline constexpr const char* kTrajectoryHeader = "t,p,r1,r2,r3,coherence";

void write_trajectory_csv(std::ostream& os, const std::vector<TrajectoryPoint>& points);
std::vector<TrajectoryPoint> read_trajectory_csv(std::istream& is);

/// %.17g, the shortest fixed width that round-trips every double.
std::string format_double(double x);

}  // namespace kraus::io
