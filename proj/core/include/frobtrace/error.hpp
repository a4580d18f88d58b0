#pragma once

#include <stdexcept>
#include <string>

namespace frobtrace {

// Broad failure classes; the CLI maps them to exit codes 1, 2 and 3.
enum class ErrorKind { domain, io, config };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& detail)
      : std::runtime_error(detail), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const noexcept { return kind_; }
  // Short stable identifier, e.g. "E_NONSPLIT".
  const std::string& code() const noexcept { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

struct DomainError : Error {
  DomainError(std::string code, const std::string& detail)
      : Error(ErrorKind::domain, std::move(code), detail) {}
};

struct IoError : Error {
  IoError(std::string code, const std::string& detail)
      : Error(ErrorKind::io, std::move(code), detail) {}
};

struct ConfigError : Error {
  ConfigError(std::string code, const std::string& detail)
      : Error(ErrorKind::config, std::move(code), detail) {}
};

}  // namespace frobtrace
