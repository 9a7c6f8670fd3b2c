#pragma once

namespace mwf {

/// Fourth-order UWB bandpass filtering function
///
///     T(theta) = A * (cos^4 theta + alpha cos^2 theta + zeta) / sin theta,
///     theta    = (pi/2) f / fc,
///
/// normalized so that T(pi/2) equals the ripple factor.
struct UwbCoefficients {
    double center_freq_ghz = 0.0;
    double bandwidth_rad = 0.0;
    double alpha = 0.0;
    double zeta = 0.0;
    double ripple_factor = 0.0;
    double scale_a = 0.0;  // ripple_factor / zeta

    /// Electrical length at f.
    double theta(double f_ghz) const noexcept;
    /// Unscaled filtering function (cos^4 + alpha cos^2 + zeta) / sin.
    double normalized(double theta_rad) const noexcept;
};

/// Requires 3.1 <= f1 < f2 <= 10.6 GHz and lr > 0 (InvalidSpec otherwise).
/// Throws InfeasibleDesign naming the violated inequality when
/// alpha^2 - 4 zeta <= 0 or alpha + zeta + 1 <= 0, or when zeta vanishes.
UwbCoefficients uwb_design(double f1_ghz, double f2_ghz, double return_loss_db);

}  // namespace mwf
