#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

namespace forge {

inline constexpr const char* kForgeVersion = "0.1.0";

// Dispatches one run: validates the config (unknown keys rejected), executes
// the command, and writes its CSV/JSON artifacts plus a manifest echoing the
// resolved configuration into out_dir. Throws config_error for bad configs
// and numerical errors (branch_error, convergence_error, ...) otherwise.
void run_command(const std::string& command, const nlohmann::json& config,
                 const std::filesystem::path& out_dir);

}  // namespace forge
