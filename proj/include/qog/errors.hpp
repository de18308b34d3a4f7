#pragma once

#include <stdexcept>
#include <string>

namespace qog {

// Error classes map 1:1 onto the CLI's machine-parsable failure lines.
enum class ErrorClass {
    usage,       // bad arguments, out-of-range indices, violated preconditions
    io,          // missing/unreadable/unwritable files
    format,      // schema mismatch, reserved tokens, corrupt artifacts
    transport,   // remote client unreachable after retries
    quality,     // remote client reachable but replies unusable
    capability,  // operation not supported by this backend/handle state
    resource,    // out of memory and similar
    internal,
};

const char* error_class_name(ErrorClass c);

class Error : public std::runtime_error {
public:
    Error(ErrorClass cls, const std::string& msg)
        : std::runtime_error(msg), cls_(cls) {}
    ErrorClass error_class() const { return cls_; }

private:
    ErrorClass cls_;
};

struct UsageError : Error {
    explicit UsageError(const std::string& m) : Error(ErrorClass::usage, m) {}
};
struct IoError : Error {
    explicit IoError(const std::string& m) : Error(ErrorClass::io, m) {}
};
struct FormatError : Error {
    explicit FormatError(const std::string& m) : Error(ErrorClass::format, m) {}
};
struct ReservedTokenError : FormatError {
    explicit ReservedTokenError(const std::string& m) : FormatError(m) {}
};
struct TransportError : Error {
    explicit TransportError(const std::string& m) : Error(ErrorClass::transport, m) {}
};
struct QualityError : Error {
    explicit QualityError(const std::string& m) : Error(ErrorClass::quality, m) {}
};
struct CapabilityError : Error {
    explicit CapabilityError(const std::string& m) : Error(ErrorClass::capability, m) {}
};

}  // namespace qog
