#pragma once

#include <stdexcept>
#include <string>

namespace vib {

// Error taxonomy shared by the library and the CLI. The CLI maps categories
// to exit codes: RunFailed -> 1, config/contract/validation -> 2, I/O -> 3.
enum class ErrorKind {
    Shape,       // dimension mismatch between tensors
    Contract,    // precondition violated by the caller
    Index,       // out-of-range index (labels, classes, rows)
    Validation,  // bad config value or schema violation
    Parse,       // malformed input file
    Io,          // filesystem failure
    Integrity,   // corrupt or truncated binary artifact
    RunFailed,   // training diverged or produced non-finite values
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void throw_error(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace vib
