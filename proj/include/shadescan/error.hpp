#pragma once

#include <stdexcept>
#include <string>

namespace shadescan {

enum class ErrorKind {
    invalid_argument,
    io_error,
    backend_unreachable,
    network_error,
    malformed_response,
    not_found,
    corrupt_archive,
    malformed_xml,
    lex_error,
    missing_metadata,
    signal_for_unknown_test,
    unmapped_reference,
    runner_timeout,
    runner_crash,
    malformed_report,
    original_not_found,
    pov_self_check_failed,
};

inline const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::invalid_argument: return "invalid-argument";
        case ErrorKind::io_error: return "io-error";
        case ErrorKind::backend_unreachable: return "backend-unreachable";
        case ErrorKind::network_error: return "network-error";
        case ErrorKind::malformed_response: return "malformed-response";
        case ErrorKind::not_found: return "not-found";
        case ErrorKind::corrupt_archive: return "corrupt-archive";
        case ErrorKind::malformed_xml: return "malformed-xml";
        case ErrorKind::lex_error: return "lex-error";
        case ErrorKind::missing_metadata: return "missing-metadata";
        case ErrorKind::signal_for_unknown_test: return "signal-for-unknown-test";
        case ErrorKind::unmapped_reference: return "unmapped-reference";
        case ErrorKind::runner_timeout: return "runner-timeout";
        case ErrorKind::runner_crash: return "runner-crash";
        case ErrorKind::malformed_report: return "malformed-report";
        case ErrorKind::original_not_found: return "original-not-found";
        case ErrorKind::pov_self_check_failed: return "pov-self-check-failed";
    }
    return "unknown";
}

// Transient backend conditions worth another attempt; everything else is final.
inline bool is_retryable(ErrorKind k) {
    return k == ErrorKind::network_error || k == ErrorKind::backend_unreachable;
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace shadescan
