#pragma once

#include <stdexcept>
#include <string>

namespace neurocode {

enum class Errc {
    malformed_line,
    duplicate_codeword,
    empty_code,
    bad_parameter,
    dimension_mismatch,
    index_out_of_range,
    unbounded_interval,
    dimension_too_high,
};

const char* errc_name(Errc code);

/// Exception carrying a machine-checkable error category alongside the message.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace neurocode
