#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "logsig/identity_checks.hpp"
#include "logsig/path.hpp"
#include "logsig/tensor.hpp"

namespace logsig::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kMaxCliDepthPlanar = 18;

nlohmann::json path_to_json(const PiecewisePath& p);
PiecewisePath path_from_json(const nlohmann::json& j);
PiecewisePath read_path_file(const std::string& file);

nlohmann::json complex_to_json(cplx z);
nlohmann::json tensor_to_json(const GradedTensor& t);
nlohmann::json report_to_json(const IdentityReport& r, int truncation);

// Accepts "1.5", "-2i", "i", "0.5+2i", "3-0.25i".
cplx parse_complex(const std::string& s);

// Runs one command line; args excludes the program name. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace logsig::cli
