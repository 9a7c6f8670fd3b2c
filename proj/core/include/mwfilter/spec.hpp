#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "mwfilter/grid.hpp"

namespace mwf {

enum class Family { butterworth, chebyshev };

enum class FilterKind {
    lowpass,
    highpass,
    bandpass,
    bandstop,
    coupled_bandpass,
    combline,
    uwb_bandpass,
};

/// Which element sits next to the source in a ladder.
enum class Topology { shunt_first, series_first };

std::string_view to_string(Family f) noexcept;
std::string_view to_string(FilterKind k) noexcept;
std::string_view to_string(Topology t) noexcept;

std::optional<Family> parse_family(std::string_view s) noexcept;
std::optional<FilterKind> parse_kind(std::string_view s) noexcept;
std::optional<Topology> parse_topology(std::string_view s) noexcept;

/// Validated microwave frequency band, GHz.
inline constexpr double kMinFrequencyGhz = 0.3;
inline constexpr double kMaxFrequencyGhz = 300.0;

/// FCC ultra-wideband limits, GHz.
inline constexpr double kUwbLowerGhz = 3.1;
inline constexpr double kUwbUpperGhz = 10.6;

/// User-facing filter requirements.
///
/// `band_edges_ghz` is positional and depends on `kind`:
///
///   lowpass           (fp, fs)
///   highpass          (fs, fp)
///   bandpass          (f1, f2, fs)        fs is the upper stopband edge
///   bandstop          (f1, f2, fs1, fs2)  f1 < fs1 < fs2 < f2
///   coupled_bandpass  (f0, bw_pass, bw_stop)
///   combline          (f0, bw)            order carried in `order`
///   uwb_bandpass      (f1, f2)
struct DesignSpec {
    Family family = Family::chebyshev;
    FilterKind kind = FilterKind::lowpass;
    double insertion_loss_db = 0.0;
    double return_loss_db = 0.0;
    std::vector<double> band_edges_ghz;
    double z0_ohm = 50.0;
    Topology topology = Topology::shunt_first;
    std::optional<int> order;
    std::optional<SweepGrid> grid;

    friend bool operator==(const DesignSpec&, const DesignSpec&) = default;
};

/// Number of band edges `kind` expects.
std::size_t expected_band_edges(FilterKind kind) noexcept;

/// Whether the kind derives its order from L_A, L_R and selectivity.
bool uses_order_formula(FilterKind kind) noexcept;

/// Checks every input constraint for the spec's kind. Throws InvalidSpec
/// naming the first violated constraint. Feasibility checks that need
/// synthesis (e.g. coupled-BPF bandwidth ratio) are left to synthesis.
void validate(const DesignSpec& spec);

}  // namespace mwf
