#pragma once

#include <cstddef>
#include <vector>

#include "mwfilter/spec.hpp"

namespace mwf {

/// Reflection coefficient, passband ripple and ripple factor implied by a
/// return loss. The three values are always mutually consistent.
struct RippleChain {
    double reflection_coefficient;
    double passband_ripple_db;
    double ripple_factor;
};

/// Throws InvalidSpec if return_loss_db <= 0.
RippleChain ripple_chain(double return_loss_db);

/// Stopband-to-passband ratio for the spec's kind (always > 1 for a valid
/// design). Throws InvalidSpec on ordering violations, on kinds without a
/// selectivity (combline, uwb) or if the ratio is not above 1.
double selectivity(const DesignSpec& spec);

/// Minimum order meeting L_A at the stopband edge, rounded up. An exactly
/// integral real order is kept as is.
int filter_order(Family family, double insertion_loss_db, double return_loss_db, double selectivity);

/// Normalized lowpass prototype coefficients g0..g(N+1).
struct PrototypeGValues {
    int order = 0;
    std::vector<double> values;  // size order + 2

    double operator[](std::size_t k) const { return values[k]; }
    /// Last coefficient g(N+1).
    double termination() const { return values.back(); }
};

/// Butterworth coefficients ignore the ripple. Throws InvalidSpec if
/// order < 1 or, for Chebyshev, passband_ripple_db <= 0.
PrototypeGValues prototype_g_values(Family family, int order, double passband_ripple_db = 0.0);

}  // namespace mwf
