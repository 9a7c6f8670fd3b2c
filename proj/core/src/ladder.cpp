#include "mwfilter/ladder.hpp"

#include <cmath>

#include "mwfilter/errors.hpp"
#include "mwfilter/grid.hpp"

namespace mwf {

std::string_view to_string(Orientation o) noexcept {
    return o == Orientation::series ? "series" : "shunt";
}

std::string_view to_string(Resonator r) noexcept {
    switch (r) {
        case Resonator::single_L: return "single_L";
        case Resonator::single_C: return "single_C";
        case Resonator::series_LC: return "series_LC";
        case Resonator::shunt_LC: return "shunt_LC";
    }
    return "unknown";
}

std::vector<double> LadderNetwork::inductors_nh() const {
    std::vector<double> out;
    for (const auto& b : branches)
        if (b.inductance_nh > 0.0) out.push_back(b.inductance_nh);
    return out;
}

std::vector<double> LadderNetwork::capacitors_pf() const {
    std::vector<double> out;
    for (const auto& b : branches)
        if (b.capacitance_pf > 0.0) out.push_back(b.capacitance_pf);
    return out;
}

void check_ladder(const LadderNetwork& ladder) {
    if (!(ladder.source_impedance_ohm > 0.0) || !(ladder.load_impedance_ohm > 0.0))
        throw NonPhysical("terminations must be positive");
    for (std::size_t i = 0; i < ladder.branches.size(); ++i) {
        const auto& b = ladder.branches[i];
        if (i > 0 && b.orientation == ladder.branches[i - 1].orientation)
            throw NonPhysical("branch orientations must alternate");
        switch (b.resonator) {
            case Resonator::single_L:
                if (!(b.inductance_nh > 0.0) || b.capacitance_pf != 0.0)
                    throw NonPhysical("single_L branch needs L > 0 and C = 0");
                break;
            case Resonator::single_C:
                if (!(b.capacitance_pf > 0.0) || b.inductance_nh != 0.0)
                    throw NonPhysical("single_C branch needs C > 0 and L = 0");
                break;
            case Resonator::series_LC:
            case Resonator::shunt_LC:
                if (!(b.inductance_nh > 0.0) || !(b.capacitance_pf > 0.0))
                    throw NonPhysical("LC branch needs L > 0 and C > 0");
                break;
        }
    }
}

LadderNetwork scale_lowpass_ladder(const PrototypeGValues& g, double cutoff_ghz, double z0_ohm,
                                   Topology topology) {
    if (!(cutoff_ghz >= kMinFrequencyGhz && cutoff_ghz <= kMaxFrequencyGhz))
        throw InvalidSpec("cutoff must lie within 0.3-300 GHz");
    if (!(z0_ohm > 0.0)) throw InvalidSpec("z0 must be positive");
    if (g.order < 1 || g.values.size() != static_cast<std::size_t>(g.order) + 2)
        throw InvalidSpec("prototype must hold order + 2 coefficients");

    const double wc = angular_ghz(cutoff_ghz);
    LadderNetwork ladder;
    ladder.source_impedance_ohm = g[0] * z0_ohm;
    ladder.branches.reserve(static_cast<std::size_t>(g.order));

    bool shunt = topology == Topology::shunt_first;
    for (int k = 1; k <= g.order; ++k, shunt = !shunt) {
        Branch b;
        if (shunt) {
            b.orientation = Orientation::shunt;
            b.resonator = Resonator::single_C;
            b.capacitance_pf = 1000.0 * g[k] / (z0_ohm * wc);
        } else {
            b.orientation = Orientation::series;
            b.resonator = Resonator::single_L;
            b.inductance_nh = g[k] * z0_ohm / wc;
        }
        ladder.branches.push_back(b);
    }

    const bool last_is_shunt = ladder.branches.back().orientation == Orientation::shunt;
    ladder.load_impedance_ohm = last_is_shunt ? g.termination() * z0_ohm : z0_ohm / g.termination();
    return ladder;
}

BandTransform BandTransform::highpass(double prototype_cutoff_ghz, double cutoff_ghz) {
    return {FilterKind::highpass, prototype_cutoff_ghz, cutoff_ghz, 0.0};
}

BandTransform BandTransform::bandpass(double prototype_cutoff_ghz, double f1_ghz, double f2_ghz) {
    return {FilterKind::bandpass, prototype_cutoff_ghz, f1_ghz, f2_ghz};
}

BandTransform BandTransform::bandstop(double prototype_cutoff_ghz, double f1_ghz, double f2_ghz) {
    return {FilterKind::bandstop, prototype_cutoff_ghz, f1_ghz, f2_ghz};
}

BandCentre band_centre(double f1_ghz, double f2_ghz) {
    if (!(f1_ghz > 0.0) || !(f2_ghz > f1_ghz)) throw InvalidSpec("f2 must exceed f1");
    const double w1 = angular_ghz(f1_ghz), w2 = angular_ghz(f2_ghz);
    const double w0 = std::sqrt(w1 * w2);
    return {w0, w0 / (w2 - w1)};
}

LadderNetwork transform_ladder(const LadderNetwork& lowpass, const BandTransform& band) {
    if (!(band.prototype_cutoff_ghz > 0.0)) throw InvalidSpec("prototype cutoff must be positive");
    const double wp = angular_ghz(band.prototype_cutoff_ghz);

    LadderNetwork out;
    out.source_impedance_ohm = lowpass.source_impedance_ohm;
    out.load_impedance_ohm = lowpass.load_impedance_ohm;
    out.branches.reserve(lowpass.branches.size());

    double wc = 0.0, w0 = 0.0, alpha = 0.0;
    switch (band.kind) {
        case FilterKind::highpass:
            if (!(band.lower_ghz > 0.0)) throw InvalidSpec("cutoff must be positive");
            wc = angular_ghz(band.lower_ghz);
            break;
        case FilterKind::bandpass:
        case FilterKind::bandstop: {
            const auto c = band_centre(band.lower_ghz, band.upper_ghz);
            w0 = c.omega0;
            alpha = c.alpha;
            break;
        }
        default:
            throw InvalidSpec("transform target must be highpass, bandpass or bandstop");
    }

    for (const auto& b : lowpass.branches) {
        const bool series_l = b.orientation == Orientation::series && b.resonator == Resonator::single_L;
        const bool shunt_c = b.orientation == Orientation::shunt && b.resonator == Resonator::single_C;
        if (!series_l && !shunt_c)
            throw InvalidSpec("transform input must be a lowpass ladder of series L and shunt C");

        // Normalized prototype immittance: g*Z0 for series L, g/Z0 for shunt C.
        const double x = series_l ? b.inductance_nh * wp : 1e-3 * b.capacitance_pf * wp;
        Branch t;
        t.orientation = b.orientation;
        switch (band.kind) {
            case FilterKind::highpass:
                if (series_l) {
                    t.resonator = Resonator::single_C;
                    t.capacitance_pf = 1000.0 / (wc * x);
                } else {
                    t.resonator = Resonator::single_L;
                    t.inductance_nh = 1.0 / (wc * x);
                }
                break;
            case FilterKind::bandpass:
                if (series_l) {
                    t.resonator = Resonator::series_LC;
                    t.inductance_nh = alpha * x / w0;
                    t.capacitance_pf = 1000.0 / (alpha * w0 * x);
                } else {
                    t.resonator = Resonator::shunt_LC;
                    t.capacitance_pf = 1000.0 * alpha * x / w0;
                    t.inductance_nh = 1.0 / (alpha * w0 * x);
                }
                break;
            default:  // bandstop
                if (series_l) {
                    t.resonator = Resonator::shunt_LC;
                    t.inductance_nh = x / (alpha * w0);
                    t.capacitance_pf = 1000.0 * alpha / (w0 * x);
                } else {
                    t.resonator = Resonator::series_LC;
                    t.inductance_nh = alpha / (w0 * x);
                    t.capacitance_pf = 1000.0 * x / (alpha * w0);
                }
                break;
        }
        out.branches.push_back(t);
    }
    return out;
}

}  // namespace mwf
