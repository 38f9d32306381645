#pragma once

#include <stdexcept>
#include <string>

namespace splitiv {

/// Reason codes for domain errors. Mathematical verdicts are never errors;
/// these cover precondition violations and malformed input.
enum class Errc {
    parse_error,
    invalid_context,
    invalid_argument,
    covered,
    not_balanced,
    pool_too_shallow,
    root_in_r,
    not_image_primitive,
    singular,
    nonpositive_solution,
    internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace splitiv
