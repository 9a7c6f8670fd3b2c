#include "mwfilter/errors.hpp"

namespace mwf {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::invalid_spec: return "invalid_spec";
        case ErrorCode::infeasible_design: return "infeasible_design";
        case ErrorCode::non_physical: return "non_physical";
        case ErrorCode::singular_frequency: return "singular_frequency";
        case ErrorCode::singular_conversion: return "singular_conversion";
        case ErrorCode::empty_network: return "empty_network";
    }
    return "unknown";
}

FilterError::FilterError(ErrorCode code, std::string constraint)
    : std::runtime_error(std::string(to_string(code)) + ": " + constraint),
      code_(code),
      constraint_(std::move(constraint)) {}

FilterError::FilterError(ErrorCode code, std::string constraint, const std::string& message)
    : std::runtime_error(message), code_(code), constraint_(std::move(constraint)) {}

}  // namespace mwf
