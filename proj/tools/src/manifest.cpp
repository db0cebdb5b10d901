#include "wellconn_cli/manifest.hpp"

#include "wellconn/digest.hpp"

#ifndef WELLCONN_VERSION
#define WELLCONN_VERSION "unknown"
#endif

namespace wellconn::cli {

std::string tool_version() { return WELLCONN_VERSION; }

RunManifest::RunManifest(std::string subcommand)
    : subcommand_(std::move(subcommand)), started_(std::chrono::steady_clock::now()) {}

void RunManifest::add_input(const std::string& role, const std::string& path) {
  inputs_[role] = {{"path", path}, {"sha256", sha256_file(path)}};
}

nlohmann::json RunManifest::seal(const nlohmann::json& payload) const {
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started_).count();
  nlohmann::json manifest = {{"subcommand", subcommand_},
                             {"inputs", inputs_},
                             {"workers", workers_},
                             {"tool_version", tool_version()},
                             {"wall_clock_seconds", seconds},
                             {"payload_sha256", sha256_hex(payload.dump())}};
  manifest["threshold"] = threshold_.empty() ? nlohmann::json(nullptr) : nlohmann::json(threshold_);
  return {{"manifest", std::move(manifest)}, {"payload", payload}};
}

std::string render(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

}  // namespace wellconn::cli
