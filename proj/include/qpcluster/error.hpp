#pragma once

// Exception type carrying a stable machine-readable code alongside the
// human-readable message.  The code is what the CLI emits in its JSON
// error envelope, so the strings here are part of the tool's interface.

#include <stdexcept>
#include <string>

namespace qpc {

class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& message) {
    throw Error(code, message);
}

} // namespace qpc
