#include "tilewm/error.hpp"

namespace tilewm {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::DuplicateWindow: return "DuplicateWindow";
    case ErrorCode::UnknownWindow: return "UnknownWindow";
    case ErrorCode::BadWorkspaceIndex: return "BadWorkspaceIndex";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownAction: return "UnknownAction";
    case ErrorCode::DuplicateBinding: return "DuplicateBinding";
    case ErrorCode::ValueOutOfRange: return "ValueOutOfRange";
    case ErrorCode::EmptyKey: return "EmptyKey";
    case ErrorCode::UnknownModifier: return "UnknownModifier";
    case ErrorCode::MalformedScript: return "MalformedScript";
    case ErrorCode::AlreadyManaged: return "AlreadyManaged";
    case ErrorCode::ConnectionLost: return "ConnectionLost";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, std::string const& message, std::optional<int> line)
    : std::runtime_error(message)
    , code_(code)
    , line_(line)
{ }

} // namespace tilewm
