// Copyright (c) 2026 The chaincx developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef CHAINCX_ERRORS_HPP
#define CHAINCX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace chaincx {

enum class ErrorCode {
    Domain,          // argument outside the mathematical domain of an operation
    InvalidArgument, // malformed input (wrong length, wrong shape)
    Parse,           // unreadable dataset/config text
    Validation,      // well-formed input violating a documented invariant
    State,           // object in a state that cannot serve the request
    NoForger,        // no account meets the effective-balance threshold
    Unreachable,     // target can never exceed the hit
    Mismatch,        // report and account set disagree
    Io,              // file system failure
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void throw_domain(const std::string& msg) { throw Error(ErrorCode::Domain, msg); }
[[noreturn]] inline void throw_invalid(const std::string& msg) { throw Error(ErrorCode::InvalidArgument, msg); }
[[noreturn]] inline void throw_parse(const std::string& msg) { throw Error(ErrorCode::Parse, msg); }
[[noreturn]] inline void throw_validation(const std::string& msg) { throw Error(ErrorCode::Validation, msg); }

} // namespace chaincx

#endif // CHAINCX_ERRORS_HPP
