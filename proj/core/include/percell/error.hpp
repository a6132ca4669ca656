#pragma once

#include <stdexcept>
#include <string>

namespace percell {

enum class ErrorCode {
    OutOfRangeGamma,
    AlphaNotGreaterThanTwo,
    NoiseDominatesSignal,
    RadiusBelowUnit,
    BracketNonPositive,
    SideLengthOutOfRange,
    OutOfRangeProbability,
    InvalidWindow,
    InvalidSweep,
    InvalidConfig,
    IoError,
};

const char* to_string(ErrorCode code);

// Domain error carrying a machine-checkable code so callers (and the CLI exit
// path) can branch without parsing message text.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

} // namespace percell
