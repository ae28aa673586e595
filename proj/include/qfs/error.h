#pragma once

#include <stdexcept>
#include <string>

namespace qfs {

enum class ErrorKind { usage, data, io };

// Every recoverable failure in the library is reported as a qfs::Error.
// The CLI maps kind to its exit code (usage 2, data 3, io 4).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error data_error(const std::string& message) { return {ErrorKind::data, message}; }
inline Error io_error(const std::string& message) { return {ErrorKind::io, message}; }
inline Error usage_error(const std::string& message) { return {ErrorKind::usage, message}; }

const char* to_string(ErrorKind kind);

}  // namespace qfs
