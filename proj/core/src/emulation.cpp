#include "mwfilter/emulation.hpp"

#include <cmath>
#include <limits>

#include "mwfilter/errors.hpp"
#include "mwfilter/ladder.hpp"
#include "mwfilter/prototype.hpp"
#include "parallel.hpp"

namespace mwf {

FrequencyMapping FrequencyMapping::lowpass(double cutoff_ghz) {
    if (!(cutoff_ghz > 0.0)) throw InvalidSpec("cutoff must be positive");
    return {FilterKind::lowpass, angular_ghz(cutoff_ghz), 0.0, 0.0};
}

FrequencyMapping FrequencyMapping::highpass(double cutoff_ghz) {
    if (!(cutoff_ghz > 0.0)) throw InvalidSpec("cutoff must be positive");
    return {FilterKind::highpass, angular_ghz(cutoff_ghz), 0.0, 0.0};
}

FrequencyMapping FrequencyMapping::bandpass(double f1_ghz, double f2_ghz) {
    const auto c = band_centre(f1_ghz, f2_ghz);
    return {FilterKind::bandpass, 0.0, c.omega0, c.alpha};
}

FrequencyMapping FrequencyMapping::bandstop(double f1_ghz, double f2_ghz) {
    const auto c = band_centre(f1_ghz, f2_ghz);
    return {FilterKind::bandstop, 0.0, c.omega0, c.alpha};
}

double map_frequency(const FrequencyMapping& m, double omega) {
    if (!(omega > 0.0)) throw InvalidSpec("omega must be positive");
    switch (m.kind) {
        case FilterKind::lowpass: return omega / m.cutoff;
        case FilterKind::highpass: return -m.cutoff / omega;
        case FilterKind::bandpass: return m.alpha * (omega / m.omega0 - m.omega0 / omega);
        case FilterKind::bandstop: {
            const double inner = m.alpha * (omega / m.omega0 - m.omega0 / omega);
            if (inner == 0.0) throw SingularFrequency("band stop mapping unbounded at the centre frequency");
            return -1.0 / inner;
        }
        default: throw InvalidSpec("mapping kind must be lowpass, highpass, bandpass or bandstop");
    }
}

double chebyshev_polynomial(int order, double x) noexcept {
    const double ax = std::abs(x);
    if (ax <= 1.0) return std::cos(order * std::acos(ax));
    return std::cosh(order * std::acosh(ax));
}

double closed_form_power(Family family, int order, double ripple_factor, double mapped_omega) {
    if (order < 1) throw InvalidSpec("order must be at least 1");
    const double w = std::abs(mapped_omega);
    if (family == Family::butterworth) return 1.0 / (1.0 + std::pow(w, 2.0 * order));
    if (!(ripple_factor > 0.0)) throw InvalidSpec("ripple factor must be positive");
    const double t = ripple_factor * chebyshev_polynomial(order, w);
    return 1.0 / (1.0 + t * t);
}

ClosedFormDesign resolve_closed_form(const DesignSpec& spec) {
    validate(spec);
    const auto& e = spec.band_edges_ghz;
    ClosedFormDesign d;
    d.family = spec.family;
    d.order = filter_order(spec.family, spec.insertion_loss_db, spec.return_loss_db, selectivity(spec));
    d.ripple_factor = ripple_chain(spec.return_loss_db).ripple_factor;
    switch (spec.kind) {
        case FilterKind::lowpass: d.mapping = FrequencyMapping::lowpass(e[0]); break;
        case FilterKind::highpass: d.mapping = FrequencyMapping::highpass(e[1]); break;
        case FilterKind::bandpass: d.mapping = FrequencyMapping::bandpass(e[0], e[1]); break;
        case FilterKind::bandstop: d.mapping = FrequencyMapping::bandstop(e[0], e[1]); break;
        default: throw InvalidSpec("closed-form response covers lowpass, highpass, bandpass and bandstop");
    }
    return d;
}

FrequencyResponse sweep_closed_form(const ClosedFormDesign& design, const SweepGrid& grid,
                                    const SweepOptions& options) {
    const std::size_t n = grid.size();
    FrequencyResponse r;
    r.freq_ghz.resize(n);
    r.s21_db.resize(n);
    r.s11_db.resize(n);

    auto mapped_at = [&design](double f) {
        try {
            return map_frequency(design.mapping, angular_ghz(f));
        } catch (const SingularFrequency&) {
            return map_frequency(design.mapping, angular_ghz(f + kSingularNudgeGhz));
        }
    };

    detail::parallel_for(n, options.threads, [&](std::size_t i) {
        const double f = grid.at(i);
        const double p = closed_form_power(design.family, design.order, design.ripple_factor, mapped_at(f));
        r.freq_ghz[i] = f;
        r.s21_db[i] = power_to_db(p, options.db_floor);
        r.s11_db[i] = power_to_db(1.0 - p, options.db_floor);
    });
    return r;
}

FrequencyResponse sweep_closed_form(const DesignSpec& spec, const SweepGrid& grid,
                                    const SweepOptions& options) {
    return sweep_closed_form(resolve_closed_form(spec), grid, options);
}

FrequencyResponse uwb_response(const UwbCoefficients& coeffs, const SweepGrid& grid,
                               const SweepOptions& options) {
    const std::size_t n = grid.size();
    FrequencyResponse r;
    r.freq_ghz.resize(n);
    r.s21_db.resize(n);
    r.s11_db.resize(n);

    detail::parallel_for(n, options.threads, [&](std::size_t i) {
        const double f = grid.at(i);
        double theta = coeffs.theta(f);
        if (std::sin(theta) == 0.0) theta = coeffs.theta(f + kSingularNudgeGhz);
        const double t = coeffs.scale_a * coeffs.normalized(theta);
        const double x = t * t;
        double reflected = 1.0, transmitted = 0.0;
        if (std::isfinite(x)) {
            transmitted = 1.0 / (1.0 + x);
            reflected = x / (1.0 + x);
        }
        r.freq_ghz[i] = f;
        r.s21_db[i] = power_to_db(transmitted, options.db_floor);
        r.s11_db[i] = power_to_db(reflected, options.db_floor);
    });
    return r;
}

}  // namespace mwf
