#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace adjq {

/// Error categories surfaced by construction, parsing, and precondition checks.
enum class errc {
    empty_input,
    non_monotone_breakpoints,
    non_monotone_levels,
    terminal_level_not_one,
    bad_weights,
    non_positive_scale,
    alpha_out_of_range,
    bad_bounds,
    precondition_not_dominated,
    parse_error,
    validation_error,
};

constexpr const char* errc_name(errc code) noexcept {
    switch (code) {
        case errc::empty_input: return "EmptyInput";
        case errc::non_monotone_breakpoints: return "NonMonotoneBreakpoints";
        case errc::non_monotone_levels: return "NonMonotoneLevels";
        case errc::terminal_level_not_one: return "TerminalLevelNotOne";
        case errc::bad_weights: return "BadWeights";
        case errc::non_positive_scale: return "NonPositiveScale";
        case errc::alpha_out_of_range: return "AlphaOutOfRange";
        case errc::bad_bounds: return "BadBounds";
        case errc::precondition_not_dominated: return "PreconditionNotDominated";
        case errc::parse_error: return "ParseError";
        case errc::validation_error: return "ValidationError";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, errc code, const std::string& what) {
    if (!cond) fail(code, what);
}

}  // namespace adjq
