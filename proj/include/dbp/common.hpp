#pragma once

#include <stdexcept>
#include <string>

namespace dbp {

// Error categories map 1:1 onto CLI exit codes.
enum class ErrorKind : int {
  args = 2,     // invalid arguments / precondition violation
  io = 3,       // filesystem or format failure
  numeric = 4,  // non-finite values, numeric breakdown
  lookup = 5,   // missing scan_id or named entity
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}

  ErrorKind kind() const { return kind_; }
  int exit_code() const { return static_cast<int>(kind_); }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail_args(const std::string& msg) { throw Error(ErrorKind::args, msg); }
[[noreturn]] inline void fail_io(const std::string& msg) { throw Error(ErrorKind::io, msg); }
[[noreturn]] inline void fail_numeric(const std::string& msg) { throw Error(ErrorKind::numeric, msg); }
[[noreturn]] inline void fail_lookup(const std::string& msg) { throw Error(ErrorKind::lookup, msg); }

}  // namespace dbp
