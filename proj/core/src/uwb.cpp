#include "mwfilter/uwb.hpp"

#include <cmath>
#include <numbers>

#include "mwfilter/errors.hpp"
#include "mwfilter/prototype.hpp"
#include "mwfilter/spec.hpp"

namespace mwf {

double UwbCoefficients::theta(double f_ghz) const noexcept {
    return std::numbers::pi / 2.0 * f_ghz / center_freq_ghz;
}

double UwbCoefficients::normalized(double theta_rad) const noexcept {
    const double c2 = std::cos(theta_rad) * std::cos(theta_rad);
    return (c2 * c2 + alpha * c2 + zeta) / std::sin(theta_rad);
}

UwbCoefficients uwb_design(double f1_ghz, double f2_ghz, double return_loss_db) {
    if (!(f1_ghz >= kUwbLowerGhz)) throw InvalidSpec("f1 must be at least 3.1 GHz");
    if (!(f2_ghz <= kUwbUpperGhz)) throw InvalidSpec("f2 must not exceed 10.6 GHz");
    if (!(f2_ghz >= f1_ghz)) throw InvalidSpec("f2 must exceed f1");

    const auto chain = ripple_chain(return_loss_db);

    UwbCoefficients u;
    u.center_freq_ghz = 0.5 * (f1_ghz + f2_ghz);
    u.bandwidth_rad = std::numbers::pi / 2.0 * (f2_ghz - f1_ghz) / u.center_freq_ghz;
    const double half = u.bandwidth_rad / 2.0;
    const double shifted = std::cos(half) + 1.0 / 3.0;
    u.alpha = 0.75 * shifted * shifted - 4.0 / 3.0;
    u.zeta = 0.25 * std::sin(half) * std::sin(half) * (1.0 - std::cos(half));
    u.ripple_factor = chain.ripple_factor;

    if (!(u.alpha * u.alpha - 4.0 * u.zeta > 0.0)) throw InfeasibleDesign("alpha^2 - 4 zeta > 0 violated");
    if (!(u.alpha + u.zeta + 1.0 > 0.0)) throw InfeasibleDesign("alpha + zeta + 1 > 0 violated");
    if (!(u.zeta > 0.0)) throw InfeasibleDesign("zeta must be positive; bandwidth too narrow");

    u.scale_a = u.ripple_factor / u.zeta;
    if (!std::isfinite(u.scale_a)) throw InfeasibleDesign("zeta must be positive; bandwidth too narrow");
    return u;
}

}  // namespace mwf
