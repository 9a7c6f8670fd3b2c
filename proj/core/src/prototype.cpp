#include "mwfilter/prototype.hpp"

#include <cmath>
#include <numbers>

#include "mwfilter/errors.hpp"
#include "mwfilter/grid.hpp"

namespace mwf {

namespace {

constexpr double kPi = std::numbers::pi;

// 40 / ln(10): converts a ripple in dB to the argument of coth in the
// Chebyshev beta term. Tables usually round it to 17.37.
const double kRippleScale = 40.0 / std::log(10.0);

}  // namespace

RippleChain ripple_chain(double return_loss_db) {
    if (!(return_loss_db > 0.0) || !std::isfinite(return_loss_db))
        throw InvalidSpec("lr must be positive");
    const double gamma = std::pow(10.0, -return_loss_db / 20.0);
    const double ripple_db = -10.0 * std::log10(1.0 - gamma * gamma);
    const double epsilon = std::sqrt(std::pow(10.0, 0.1 * ripple_db) - 1.0);
    return {gamma, ripple_db, epsilon};
}

double selectivity(const DesignSpec& spec) {
    const auto& e = spec.band_edges_ghz;
    if (e.size() != expected_band_edges(spec.kind))
        throw InvalidSpec("band edge count does not match kind");

    double s = 0.0;
    switch (spec.kind) {
        case FilterKind::lowpass:
            if (!(e[1] > e[0])) throw InvalidSpec("fs must exceed fp");
            s = angular_ghz(e[1]) / angular_ghz(e[0]);
            break;
        case FilterKind::highpass:
            if (!(e[0] < e[1])) throw InvalidSpec("fs must be below fp");
            s = angular_ghz(e[1]) / angular_ghz(e[0]);
            break;
        case FilterKind::bandpass: {
            if (!(e[1] > e[0])) throw InvalidSpec("f2 must exceed f1");
            if (!(e[2] > e[1])) throw InvalidSpec("fs must exceed f2");
            const double wa = angular_ghz(e[0]), wb = angular_ghz(e[1]), ws = angular_ghz(e[2]);
            s = (2.0 * ws - wb - wa) / (wb - wa);
            break;
        }
        case FilterKind::bandstop: {
            if (!(e[0] < e[2] && e[2] < e[3] && e[3] < e[1]))
                throw InvalidSpec("band stop edges must satisfy f1 < fs1 < fs2 < f2");
            const double wa = angular_ghz(e[0]), wb = angular_ghz(e[1]);
            const double ws1 = angular_ghz(e[2]), ws2 = angular_ghz(e[3]);
            s = (wb - wa) / (ws2 - ws1);
            break;
        }
        case FilterKind::coupled_bandpass:
            if (!(e[1] > 0.0)) throw InvalidSpec("bw must be positive");
            s = e[2] / e[1];
            break;
        case FilterKind::combline:
        case FilterKind::uwb_bandpass:
            throw InvalidSpec("selectivity is undefined for this kind");
    }
    if (!(s > 1.0)) throw InvalidSpec("selectivity must exceed 1");
    return s;
}

int filter_order(Family family, double insertion_loss_db, double return_loss_db, double selectivity) {
    if (!(return_loss_db > 0.0)) throw InvalidSpec("lr must be positive");
    if (!(insertion_loss_db > return_loss_db)) throw InvalidSpec("la must exceed lr");
    if (!(selectivity > 1.0)) throw InvalidSpec("selectivity must exceed 1");

    double degree = 0.0;
    if (family == Family::butterworth) {
        degree = (insertion_loss_db + return_loss_db) / (20.0 * std::log10(selectivity));
    } else {
        const double growth = selectivity + std::sqrt(selectivity * selectivity - 1.0);
        degree = (insertion_loss_db + return_loss_db + 6.0) / (20.0 * std::log10(growth));
    }
    // Round, then bump when rounding went down: a ceiling that keeps exact integers.
    double rounded = std::round(degree);
    if (rounded < degree) rounded += 1.0;
    return static_cast<int>(rounded);
}

PrototypeGValues prototype_g_values(Family family, int order, double passband_ripple_db) {
    if (order < 1) throw InvalidSpec("order must be at least 1");
    const int n = order;
    PrototypeGValues g{n, std::vector<double>(static_cast<std::size_t>(n) + 2)};
    g.values[0] = 1.0;

    if (family == Family::butterworth) {
        for (int k = 1; k <= n; ++k)
            g.values[k] = 2.0 * std::sin((2.0 * k - 1.0) * kPi / (2.0 * n));
        g.values[n + 1] = 1.0;
        return g;
    }

    if (!(passband_ripple_db > 0.0) || !std::isfinite(passband_ripple_db))
        throw InvalidSpec("chebyshev ripple must be positive");

    const double beta = std::log(1.0 / std::tanh(passband_ripple_db / kRippleScale));
    const double gamma = std::sinh(beta / (2.0 * n));
    auto a = [n](int k) { return std::sin((2.0 * k - 1.0) * kPi / (2.0 * n)); };
    auto b = [n, gamma](int k) {
        const double s = std::sin(k * kPi / n);
        return gamma * gamma + s * s;
    };

    g.values[1] = 2.0 * a(1) / gamma;
    for (int k = 2; k <= n; ++k)
        g.values[k] = 4.0 * a(k - 1) * a(k) / (b(k - 1) * g.values[k - 1]);

    if (n % 2 == 1) {
        g.values[n + 1] = 1.0;
    } else {
        const double c = 1.0 / std::tanh(beta / 4.0);
        g.values[n + 1] = c * c;
    }
    return g;
}

}  // namespace mwf
