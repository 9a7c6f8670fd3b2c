#include "mwfilter/spec.hpp"

#include <cmath>
#include <string>

#include "mwfilter/errors.hpp"

namespace mwf {

std::string_view to_string(Family f) noexcept {
    return f == Family::butterworth ? "butterworth" : "chebyshev";
}

std::string_view to_string(FilterKind k) noexcept {
    switch (k) {
        case FilterKind::lowpass: return "lowpass";
        case FilterKind::highpass: return "highpass";
        case FilterKind::bandpass: return "bandpass";
        case FilterKind::bandstop: return "bandstop";
        case FilterKind::coupled_bandpass: return "coupled_bandpass";
        case FilterKind::combline: return "combline";
        case FilterKind::uwb_bandpass: return "uwb_bandpass";
    }
    return "unknown";
}

std::string_view to_string(Topology t) noexcept {
    return t == Topology::shunt_first ? "shunt_first" : "series_first";
}

std::optional<Family> parse_family(std::string_view s) noexcept {
    if (s == "butterworth") return Family::butterworth;
    if (s == "chebyshev") return Family::chebyshev;
    return std::nullopt;
}

std::optional<FilterKind> parse_kind(std::string_view s) noexcept {
    if (s == "lowpass") return FilterKind::lowpass;
    if (s == "highpass") return FilterKind::highpass;
    if (s == "bandpass") return FilterKind::bandpass;
    if (s == "bandstop") return FilterKind::bandstop;
    if (s == "coupled_bandpass" || s == "coupled") return FilterKind::coupled_bandpass;
    if (s == "combline") return FilterKind::combline;
    if (s == "uwb_bandpass" || s == "uwb") return FilterKind::uwb_bandpass;
    return std::nullopt;
}

std::optional<Topology> parse_topology(std::string_view s) noexcept {
    if (s == "shunt_first") return Topology::shunt_first;
    if (s == "series_first") return Topology::series_first;
    return std::nullopt;
}

std::size_t expected_band_edges(FilterKind kind) noexcept {
    switch (kind) {
        case FilterKind::lowpass:
        case FilterKind::highpass:
        case FilterKind::combline:
        case FilterKind::uwb_bandpass: return 2;
        case FilterKind::bandpass:
        case FilterKind::coupled_bandpass: return 3;
        case FilterKind::bandstop: return 4;
    }
    return 0;
}

bool uses_order_formula(FilterKind kind) noexcept {
    return kind != FilterKind::combline && kind != FilterKind::uwb_bandpass;
}

namespace {

void require(bool ok, const char* constraint) {
    if (!ok) throw InvalidSpec(constraint);
}

void require_in_band(double f, const std::string& name) {
    if (!(f >= kMinFrequencyGhz && f <= kMaxFrequencyGhz))
        throw InvalidSpec(name + " must lie within 0.3-300 GHz");
}

}  // namespace

void validate(const DesignSpec& spec) {
    const auto& e = spec.band_edges_ghz;
    const std::size_t want = expected_band_edges(spec.kind);
    if (e.size() != want) {
        throw InvalidSpec(std::string(to_string(spec.kind)) + " needs " + std::to_string(want) +
                          " band edges");
    }
    for (double v : e) require(std::isfinite(v), "band edges must be finite");
    require(std::isfinite(spec.z0_ohm) && spec.z0_ohm > 0.0, "z0 must be positive");
    require(std::isfinite(spec.return_loss_db) && spec.return_loss_db > 0.0, "lr must be positive");

    if (uses_order_formula(spec.kind)) {
        require(std::isfinite(spec.insertion_loss_db) && spec.insertion_loss_db >= 0.0,
                "la must be non-negative");
        require(spec.insertion_loss_db > spec.return_loss_db, "la must exceed lr");
    }

    const bool chebyshev_only = spec.kind == FilterKind::coupled_bandpass ||
                                spec.kind == FilterKind::combline ||
                                spec.kind == FilterKind::uwb_bandpass;
    if (chebyshev_only) {
        require(spec.family == Family::chebyshev,
                "coupled_bandpass, combline and uwb_bandpass require the chebyshev family");
    }

    switch (spec.kind) {
        case FilterKind::lowpass:
            require_in_band(e[0], "fp");
            require_in_band(e[1], "fs");
            require(e[1] > e[0], "fs must exceed fp");
            break;
        case FilterKind::highpass:
            require_in_band(e[0], "fs");
            require_in_band(e[1], "fp");
            require(e[0] < e[1], "fs must be below fp");
            break;
        case FilterKind::bandpass:
            require_in_band(e[0], "f1");
            require_in_band(e[1], "f2");
            require_in_band(e[2], "fs");
            require(e[1] > e[0], "f2 must exceed f1");
            require(e[2] > e[1], "fs must exceed f2");
            break;
        case FilterKind::bandstop:
            require_in_band(e[0], "f1");
            require_in_band(e[1], "f2");
            require_in_band(e[2], "fs1");
            require_in_band(e[3], "fs2");
            require(e[1] > e[0], "f2 must exceed f1");
            require(e[2] > e[0], "fs1 must exceed f1");
            require(e[3] > e[2], "fs2 must exceed fs1");
            require(e[1] > e[3], "f2 must exceed fs2");
            break;
        case FilterKind::coupled_bandpass:
            require_in_band(e[0], "f0");
            require(e[1] > 0.0, "bw must be positive");
            require(e[2] > e[1], "bws must exceed bw");
            break;
        case FilterKind::combline:
            require_in_band(e[0], "f0");
            require(e[1] > 0.0, "bw must be positive");
            require(spec.order.has_value(), "combline needs an explicit order");
            require(*spec.order >= 2, "order must be at least 2");
            break;
        case FilterKind::uwb_bandpass:
            require(e[0] >= kUwbLowerGhz, "f1 must be at least 3.1 GHz");
            require(e[1] > e[0], "f2 must exceed f1");
            require(e[1] <= kUwbUpperGhz, "f2 must not exceed 10.6 GHz");
            break;
    }
}

}  // namespace mwf
