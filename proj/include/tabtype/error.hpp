#pragma once

#include <stdexcept>
#include <string>

namespace tabtype {

// All library failures throw this with a stable machine-readable code
// ("box-not-in-diagram", "not-erasable", ...) plus a human detail string.
class error : public std::runtime_error {
 public:
  error(std::string code, const std::string& detail)
      : std::runtime_error(detail.empty() ? code : code + ": " + detail),
        code_(std::move(code)) {}

  explicit error(std::string code) : error(std::move(code), "") {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

}  // namespace tabtype
