#pragma once

#include <stdexcept>
#include <string>

namespace fermatshift {

// Error taxonomy mirrored by the CLI exit codes: precondition, cap and
// resource-limit violations exit 2, an exhausted search exits 3, a bad
// certificate exits 4.
enum class errc {
    precondition_violated,
    cap_exceeded,
    limit_exhausted,
    search_exhausted,
    invalid_certificate,
    internal,
};

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw Error(code, what); }

} // namespace fermatshift
