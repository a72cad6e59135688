#pragma once

#include <stdexcept>
#include <string>

namespace graphcurv {

enum class errc {
    parse_error,
    self_loop,
    duplicate_edge,
    disconnected,
    invalid_parameter,
    alpha_out_of_range,
    same_vertex,
    too_large,
    no_stabilization,
    nonpositive_threshold,
    convergence_failure,
};

inline const char* errc_name(errc c) {
    switch (c) {
    case errc::parse_error: return "ParseError";
    case errc::self_loop: return "SelfLoop";
    case errc::duplicate_edge: return "DuplicateEdge";
    case errc::disconnected: return "Disconnected";
    case errc::invalid_parameter: return "InvalidParameter";
    case errc::alpha_out_of_range: return "AlphaOutOfRange";
    case errc::same_vertex: return "SameVertex";
    case errc::too_large: return "TooLarge";
    case errc::no_stabilization: return "NoStabilization";
    case errc::nonpositive_threshold: return "NonpositiveThreshold";
    case errc::convergence_failure: return "ConvergenceFailure";
    }
    return "UnknownError";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& msg) {
    throw error(code, msg);
}

} // namespace graphcurv
