#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tilewm {

enum class ErrorCode {
    DuplicateWindow,
    UnknownWindow,
    BadWorkspaceIndex,
    SyntaxError,
    UnknownAction,
    DuplicateBinding,
    ValueOutOfRange,
    EmptyKey,
    UnknownModifier,
    MalformedScript,
    AlreadyManaged,
    ConnectionLost,
};

std::string_view to_string(ErrorCode code);

/// Every failure surfaced by the manager library. Parse errors carry the
/// 1-based source line they were found on.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string const& message, std::optional<int> line = std::nullopt);

    ErrorCode code() const noexcept { return code_; }
    std::optional<int> line() const noexcept { return line_; }

private:
    ErrorCode code_;
    std::optional<int> line_;
};

} // namespace tilewm
