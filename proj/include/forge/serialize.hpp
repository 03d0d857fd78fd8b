#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "forge/pauli.hpp"

namespace forge {

// Fixed float formatting for byte-stable artifacts: 17 significant digits,
// '.' decimal separator.
std::string fmt_g17(double v);

std::string csv_line(const std::vector<std::string>& cells);

// Row-major [re, im] pairs for debugging dumps.
nlohmann::ordered_json matrix_to_json(const Eigen::MatrixXcd& m);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace forge
