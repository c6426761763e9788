#pragma once

#include <stdexcept>
#include <string>

namespace specht {

enum class errc {
    division_by_zero,
    field_mismatch,
    index_out_of_range,
    invalid_degree,
    arity_mismatch,
    dimension_mismatch,
    invalid_shape,
    shape_mismatch,
    endpoint_mismatch,
    invalid_endpoints,
    invalid_filling,
    support_violation,
    non_termination,
    zero_divisor_input,
    non_homogeneous,
    zero_dimensional,
    parameter_out_of_range,
    characteristic_too_small,
    too_large,
    parse_error,
    internal,
};

inline const char* errc_name(errc c)
{
    switch (c) {
    case errc::division_by_zero: return "DivisionByZero";
    case errc::field_mismatch: return "FieldMismatch";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::invalid_degree: return "InvalidDegree";
    case errc::arity_mismatch: return "ArityMismatch";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::invalid_shape: return "InvalidShape";
    case errc::shape_mismatch: return "ShapeMismatch";
    case errc::endpoint_mismatch: return "EndpointMismatch";
    case errc::invalid_endpoints: return "InvalidEndpoints";
    case errc::invalid_filling: return "InvalidFilling";
    case errc::support_violation: return "SupportViolation";
    case errc::non_termination: return "NonTermination";
    case errc::zero_divisor_input: return "ZeroDivisorInput";
    case errc::non_homogeneous: return "NonHomogeneous";
    case errc::zero_dimensional: return "ZeroDimensional";
    case errc::parameter_out_of_range: return "ParameterOutOfRange";
    case errc::characteristic_too_small: return "CharacteristicTooSmall";
    case errc::too_large: return "TooLarge";
    case errc::parse_error: return "ParseError";
    case errc::internal: return "InternalError";
    }
    return "UnknownError";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code)
    {
    }

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what)
{
    throw error(code, what);
}

} // namespace specht
