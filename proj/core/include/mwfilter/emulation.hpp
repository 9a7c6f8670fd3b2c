#pragma once

#include "mwfilter/network.hpp"
#include "mwfilter/spec.hpp"
#include "mwfilter/uwb.hpp"

namespace mwf {

/// Frequency substitution taking a physical angular frequency onto the
/// lowpass prototype axis. Angular quantities are in rad/ns.
struct FrequencyMapping {
    FilterKind kind = FilterKind::lowpass;
    double cutoff = 0.0;  // lowpass / highpass
    double omega0 = 0.0;  // bandpass / bandstop centre sqrt(w1 w2)
    double alpha = 0.0;   // bandpass / bandstop w0 / (w2 - w1)

    static FrequencyMapping lowpass(double cutoff_ghz);
    static FrequencyMapping highpass(double cutoff_ghz);
    static FrequencyMapping bandpass(double f1_ghz, double f2_ghz);
    static FrequencyMapping bandstop(double f1_ghz, double f2_ghz);
};

/// LP: w/wc, HP: -wc/w, BP: alpha (w/w0 - w0/w), BS: -1 / [alpha (w/w0 - w0/w)].
/// Throws InvalidSpec for omega <= 0 and SingularFrequency for BS at w0.
double map_frequency(const FrequencyMapping& mapping, double omega);

/// Transmitted power |S12|^2 of the generalized response at a mapped
/// frequency. Only |mapped_omega| matters. Throws InvalidSpec if order < 1
/// or a Chebyshev ripple factor is not positive.
double closed_form_power(Family family, int order, double ripple_factor, double mapped_omega);

/// Chebyshev polynomial of the first kind for |x|, via cos/cosh.
double chebyshev_polynomial(int order, double x) noexcept;

/// Everything the closed-form route needs from a spec.
struct ClosedFormDesign {
    Family family = Family::butterworth;
    int order = 1;
    double ripple_factor = 0.0;
    FrequencyMapping mapping;
};

/// Resolves order, ripple and mapping for lowpass/highpass/bandpass/bandstop specs.
ClosedFormDesign resolve_closed_form(const DesignSpec& spec);

FrequencyResponse sweep_closed_form(const ClosedFormDesign& design, const SweepGrid& grid,
                                    const SweepOptions& options = {});

FrequencyResponse sweep_closed_form(const DesignSpec& spec, const SweepGrid& grid,
                                    const SweepOptions& options = {});

/// Fourth-order UWB response from its filtering function.
FrequencyResponse uwb_response(const UwbCoefficients& coeffs, const SweepGrid& grid,
                               const SweepOptions& options = {});

}  // namespace mwf
