#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>

namespace wellconn {

/// Incremental SHA-256, hex encoded on finish().
class Sha256 {
 public:
  Sha256();
  ~Sha256();
  Sha256(Sha256&&) noexcept;
  Sha256& operator=(Sha256&&) noexcept;

  Sha256& update(std::string_view bytes);
  template <typename T>
  Sha256& update_pod(std::span<const T> values) {
    return update({reinterpret_cast<const char*>(values.data()), values.size_bytes()});
  }
  std::string finish();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

std::string sha256_hex(std::string_view bytes);
std::string sha256_file(const std::string& path);

}  // namespace wellconn
