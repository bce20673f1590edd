#pragma once

#include <stdexcept>
#include <string>

namespace eam {

enum class errc {
    dim_mismatch,
    numeric,
    range,
    bad_magic,
    bad_version,
    truncated,
    io,
    config,
    empty_calibration,
    counter_saturated,
    training_diverged,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw error(code, msg); }

} // namespace eam
