#pragma once

#include <stdexcept>
#include <string>

namespace walklab {

enum class Errc {
  invalid_argument = 1,
  domain_error,
  pole,
  divergence,
  no_convergence,
  budget_exceeded,
  io_error,
  not_found,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace walklab
