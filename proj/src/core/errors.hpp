#pragma once

#include <stdexcept>
#include <string>

namespace frameineq {

/// Error categories; mirrored one-to-one by the C API status codes.
enum class Errc {
    dimension_mismatch,
    invalid_argument,
    not_a_frame,
    ill_conditioned,
    not_tight,
    zero_signal,
    domain,
    unknown_name,
    io,
    parse,
    infeasible,
};

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace frameineq
