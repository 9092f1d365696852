#pragma once

#include <string>

#include <json.hpp>

namespace linkscale::cli {

inline constexpr const char* kToolVersion = "0.1.0";

/// Runs one pipeline command from its fully resolved parameter object and
/// writes its outputs plus `<primary output>.manifest.json`. The manifest
/// holds exactly the object passed here, so replaying it reruns the command
/// unchanged. Throws linkscale::Error (or ConfigError for bad params).
void run_command(const std::string& command, const nlohmann::json& params);

/// Reads a manifest written by run_command and runs it again.
void replay_manifest(const std::string& manifest_path);

}  // namespace linkscale::cli
