#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace hopfcoh {

enum class errc {
  not_prime,
  no_such_root,
  shape_mismatch,
  budget_exceeded,
  prerequisite_failed,
  not_invertible,
  not_an_action,
  incompatible_pair,
  parse_error,
  io_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::not_prime: return "not_prime";
    case errc::no_such_root: return "no_such_root";
    case errc::shape_mismatch: return "shape_mismatch";
    case errc::budget_exceeded: return "budget_exceeded";
    case errc::prerequisite_failed: return "prerequisite_failed";
    case errc::not_invertible: return "not_invertible";
    case errc::not_an_action: return "not_an_action";
    case errc::incompatible_pair: return "incompatible_pair";
    case errc::parse_error: return "parse_error";
    case errc::io_error: return "io_error";
  }
  return "unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw error(code, msg); }

inline void require(bool cond, errc code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

}  // namespace hopfcoh
