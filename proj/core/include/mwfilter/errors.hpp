#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mwf {

enum class ErrorCode {
    invalid_spec,
    infeasible_design,
    non_physical,
    singular_frequency,
    singular_conversion,
    empty_network,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Base error for every synthesis and analysis failure.
///
/// `constraint()` names the violated rule in plain words (e.g. "fs must
/// exceed fp") and is what front ends surface to the user.
class FilterError : public std::runtime_error {
public:
    FilterError(ErrorCode code, std::string constraint);
    FilterError(ErrorCode code, std::string constraint, const std::string& message);

    ErrorCode code() const noexcept { return code_; }
    const std::string& constraint() const noexcept { return constraint_; }

private:
    ErrorCode code_;
    std::string constraint_;
};

class InvalidSpec : public FilterError {
public:
    explicit InvalidSpec(std::string constraint)
        : FilterError(ErrorCode::invalid_spec, std::move(constraint)) {}
};

class InfeasibleDesign : public FilterError {
public:
    explicit InfeasibleDesign(std::string constraint)
        : FilterError(ErrorCode::infeasible_design, std::move(constraint)) {}
};

class NonPhysical : public FilterError {
public:
    explicit NonPhysical(std::string constraint)
        : FilterError(ErrorCode::non_physical, std::move(constraint)) {}
};

class SingularFrequency : public FilterError {
public:
    explicit SingularFrequency(std::string constraint)
        : FilterError(ErrorCode::singular_frequency, std::move(constraint)) {}
};

class SingularConversion : public FilterError {
public:
    explicit SingularConversion(std::string constraint)
        : FilterError(ErrorCode::singular_conversion, std::move(constraint)) {}
};

class EmptyNetwork : public FilterError {
public:
    explicit EmptyNetwork(std::string constraint)
        : FilterError(ErrorCode::empty_network, std::move(constraint)) {}
};

}  // namespace mwf
