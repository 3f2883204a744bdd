#pragma once

#include <stdexcept>
#include <string>

namespace probekit {

// Process exit codes: 0 ok, 2 usage, 3 input, 4 guard, 5 numerical failure.
class error : public std::runtime_error {
 public:
  error(const std::string& msg, int exit_code)
      : std::runtime_error(msg), exit_code_(exit_code) {}
  int exit_code() const noexcept { return exit_code_; }

 private:
  int exit_code_;
};

class usage_error : public error {
 public:
  explicit usage_error(const std::string& msg) : error(msg, 2) {}
};

// Malformed files, invalid arguments, dimension mismatches.
class input_error : public error {
 public:
  explicit input_error(const std::string& msg) : error(msg, 3) {}
};

// Combinatorial or size guards exceeded.
class guard_error : public error {
 public:
  explicit guard_error(const std::string& msg) : error(msg, 4) {}
};

// Rank deficiency, sampling failure, non-convergence.
class numerical_error : public error {
 public:
  explicit numerical_error(const std::string& msg) : error(msg, 5) {}
};

}  // namespace probekit
