#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "mwfilter/coupled.hpp"
#include "mwfilter/errors.hpp"
#include "mwfilter/ladder.hpp"
#include "mwfilter/network.hpp"
#include "mwfilter/prototype.hpp"
#include "mwfilter/spec.hpp"
#include "mwfilter/uwb.hpp"

namespace mwf {

/// Which response routes to compute.
enum class Method { emulate, simulate, both };

std::string_view to_string(Method m) noexcept;
std::optional<Method> parse_method(std::string_view s) noexcept;

struct DesignRequest {
    DesignSpec spec;
    Method method = Method::both;
};

using Elements = std::variant<LadderNetwork, CoupledBpfNetwork, ComblineNetwork, UwbCoefficients>;

struct DesignResult {
    DesignSpec spec;
    int order = 0;
    std::optional<double> selectivity;
    std::optional<RippleChain> ripple;  // Chebyshev designs only
    Elements elements;
    std::optional<FrequencyResponse> response_emulated;
    std::optional<FrequencyResponse> response_simulated;
};

/// Sweep grid used when the spec does not carry one. Throws InvalidSpec for
/// combline, which has no response.
SweepGrid default_grid(const DesignSpec& spec);

/// The spec's own grid, else the default.
SweepGrid resolved_grid(const DesignSpec& spec);

/// Full synthesis plus the requested sweep routes. Combline yields elements
/// only; coupled bandpass has no emulated route and UWB no simulated route.
DesignResult run_design(const DesignRequest& request, const SweepOptions& options = {});

/// Canonical JSON: sorted keys, compact, doubles at 12 significant digits.
/// `compute_ms`, when given, is added as a top-level field.
std::string to_json(const DesignResult& result, std::optional<double> compute_ms = std::nullopt);

/// Canonical JSON of a spec alone (the echo embedded in results).
std::string to_json(const DesignSpec& spec);

/// `f_ghz,s21_db,s11_db` with six decimals and LF endings.
std::string to_csv(const FrequencyResponse& response);

/// CSV of the emulated route if present, else the simulated one. Throws
/// InvalidSpec when the result has no response.
std::string to_csv(const DesignResult& result);

/// Parses a request body. Unknown keys are ignored; missing optional keys
/// take their defaults. Throws InvalidSpec on malformed input.
DesignRequest parse_request_json(std::string_view body);

/// Public error category used by the CLI and the HTTP API.
std::string_view api_error_code(ErrorCode code) noexcept;

/// One-line `{"error":{...}}` document.
std::string error_json(std::string_view code, std::string_view message,
                       std::optional<std::string_view> constraint = std::nullopt);
std::string error_json(const FilterError& error);

/// Return loss 1..20 dB with its ripple chain, four decimals.
std::string ripple_table_csv();
std::string ripple_table_json();

/// dB floor from MWF_DB_FLOOR when set to a finite negative number.
double db_floor_from_env();

/// Rounds to 12 significant digits, the precision of all JSON output.
double round_significant(double value) noexcept;

}  // namespace mwf
