#pragma once

#include <stdexcept>
#include <string>

namespace pgt {

// Every library failure carries a short machine-readable code next to the
// human message; the CLI prints both.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

struct EmptyGenerator : Error {
  EmptyGenerator() : Error("empty_generator", "empty generator") {}
};

struct OutOfRange : Error {
  explicit OutOfRange(const std::string& what) : Error("out_of_range", what) {}
};

struct Overflow : Error {
  explicit Overflow(const std::string& what) : Error("overflow", what) {}
};

struct InvalidArgument : Error {
  explicit InvalidArgument(const std::string& what) : Error("invalid_argument", what) {}
};

}  // namespace pgt
