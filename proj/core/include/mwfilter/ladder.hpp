#pragma once

#include <vector>

#include "mwfilter/prototype.hpp"
#include "mwfilter/spec.hpp"

namespace mwf {

enum class Orientation { series, shunt };

/// Element content of a branch. `series_LC` and `shunt_LC` describe how the
/// L and C are wired to each other, independent of the branch orientation.
enum class Resonator { single_L, single_C, series_LC, shunt_LC };

std::string_view to_string(Orientation o) noexcept;
std::string_view to_string(Resonator r) noexcept;

struct Branch {
    Orientation orientation = Orientation::series;
    Resonator resonator = Resonator::single_L;
    double inductance_nh = 0.0;
    double capacitance_pf = 0.0;

    friend bool operator==(const Branch&, const Branch&) = default;
};

/// Reactive ladder between a resistive source and load, ordered source to load.
struct LadderNetwork {
    std::vector<Branch> branches;
    double source_impedance_ohm = 50.0;
    double load_impedance_ohm = 50.0;

    /// Nonzero inductances in ladder order, nH.
    std::vector<double> inductors_nh() const;
    /// Nonzero capacitances in ladder order, pF.
    std::vector<double> capacitors_pf() const;

    friend bool operator==(const LadderNetwork&, const LadderNetwork&) = default;
};

/// Throws NonPhysical if orientations do not alternate, a single-element
/// branch carries the other element, a resonator lacks a value, or a
/// termination is not positive.
void check_ladder(const LadderNetwork& ladder);

/// Impedance- and frequency-scales a prototype into a lowpass ladder.
///
/// The load is the prototype's g(N+1) read as a resistance when the last
/// element is a shunt capacitor and as a conductance when it is a series
/// inductor, so the terminated ladder reproduces the prototype response.
LadderNetwork scale_lowpass_ladder(const PrototypeGValues& g, double cutoff_ghz, double z0_ohm,
                                   Topology topology = Topology::shunt_first);

/// Parameters for mapping a lowpass ladder onto another response kind.
/// For highpass `lower_ghz` is the cutoff and `upper_ghz` is unused.
struct BandTransform {
    FilterKind kind = FilterKind::highpass;
    double prototype_cutoff_ghz = 1.0;  // cutoff the lowpass input was scaled at
    double lower_ghz = 0.0;
    double upper_ghz = 0.0;

    static BandTransform highpass(double prototype_cutoff_ghz, double cutoff_ghz);
    static BandTransform bandpass(double prototype_cutoff_ghz, double f1_ghz, double f2_ghz);
    static BandTransform bandstop(double prototype_cutoff_ghz, double f1_ghz, double f2_ghz);
};

/// Element-level lowpass to highpass/bandpass/bandstop transformation.
/// Throws InvalidSpec if the input is not a lowpass ladder (series L, shunt C).
LadderNetwork transform_ladder(const LadderNetwork& lowpass, const BandTransform& band);

/// Centre frequency sqrt(w1 w2) and bandwidth scaling w0/(w2 - w1), both in rad/ns.
struct BandCentre {
    double omega0;
    double alpha;
};
BandCentre band_centre(double f1_ghz, double f2_ghz);

}  // namespace mwf
