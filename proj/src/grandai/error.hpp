#pragma once
#include <stdexcept>
#include <string>

namespace grandai {

// Error categories map 1:1 onto the C API status codes and CLI exit codes.
enum class Status : int { ok = 0, config = 1, numeric = 2, io = 3 };

class Error : public std::runtime_error {
 public:
  Error(Status s, const std::string& msg) : std::runtime_error(msg), status_(s) {}
  Status status() const { return status_; }

 private:
  Status status_;
};

[[noreturn]] inline void fail_config(const std::string& msg) { throw Error(Status::config, msg); }
[[noreturn]] inline void fail_numeric(const std::string& msg) { throw Error(Status::numeric, msg); }
[[noreturn]] inline void fail_io(const std::string& msg) { throw Error(Status::io, msg); }

}  // namespace grandai
