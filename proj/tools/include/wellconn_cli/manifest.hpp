#pragma once

#include <chrono>
#include <map>
#include <string>

#include <nlohmann/json.hpp>

namespace wellconn::cli {

std::string tool_version();

/// Provenance attached to every structured output. Everything except
/// `workers` and the wall-clock duration is a function of the inputs.
class RunManifest {
 public:
  explicit RunManifest(std::string subcommand);

  void add_input(const std::string& role, const std::string& path);
  void set_threshold(std::string threshold) { threshold_ = std::move(threshold); }
  void set_workers(unsigned workers) { workers_ = workers; }

  /// Wraps `payload` as {"manifest": ..., "payload": ...}; the manifest
  /// records the SHA-256 of the payload's canonical serialisation.
  nlohmann::json seal(const nlohmann::json& payload) const;

 private:
  std::string subcommand_;
  std::map<std::string, std::map<std::string, std::string>> inputs_;  // role -> {path, sha256}
  std::string threshold_;
  unsigned workers_ = 1;
  std::chrono::steady_clock::time_point started_;
};

/// Serialisation used for every structured document: sorted keys,
/// two-space indent, trailing LF.
std::string render(const nlohmann::json& doc);

}  // namespace wellconn::cli
