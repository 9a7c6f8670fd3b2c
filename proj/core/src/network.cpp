#include "mwfilter/network.hpp"

#include <cmath>

#include "mwfilter/errors.hpp"
#include "parallel.hpp"

namespace mwf {

namespace {

constexpr complex j{0.0, 1.0};

// Reactance of an L and C in series, ohms.
double series_reactance(const Branch& b, double omega) {
    return omega * b.inductance_nh - 1.0 / (omega * 1e-3 * b.capacitance_pf);
}

// Susceptance of an L and C in parallel, siemens.
double parallel_susceptance(const Branch& b, double omega) {
    return omega * 1e-3 * b.capacitance_pf - 1.0 / (omega * b.inductance_nh);
}

complex branch_impedance(const Branch& b, double omega) {
    switch (b.resonator) {
        case Resonator::single_L: return j * (omega * b.inductance_nh);
        case Resonator::single_C: return -j / (omega * 1e-3 * b.capacitance_pf);
        case Resonator::series_LC: return j * series_reactance(b, omega);
        case Resonator::shunt_LC: {
            const double susceptance = parallel_susceptance(b, omega);
            if (susceptance == 0.0) throw SingularFrequency("parallel LC in a series arm at resonance");
            return -j / susceptance;
        }
    }
    return {};
}

complex branch_admittance(const Branch& b, double omega) {
    switch (b.resonator) {
        case Resonator::single_L: return -j / (omega * b.inductance_nh);
        case Resonator::single_C: return j * (omega * 1e-3 * b.capacitance_pf);
        case Resonator::series_LC: {
            const double reactance = series_reactance(b, omega);
            if (reactance == 0.0) throw SingularFrequency("series LC in a shunt arm at resonance");
            return -j / reactance;
        }
        case Resonator::shunt_LC: return j * parallel_susceptance(b, omega);
    }
    return {};
}

SParameters ladder_s_at(const LadderNetwork& ladder, double f_ghz) {
    const double omega = angular_ghz(f_ghz);
    AbcdMatrix t;
    for (const auto& b : ladder.branches) t = t * branch_abcd(b, omega);
    return abcd_to_s(t, ladder.source_impedance_ohm, ladder.load_impedance_ohm);
}

}  // namespace

AbcdMatrix branch_abcd(const Branch& branch, double omega) {
    if (!(omega > 0.0)) throw InvalidSpec("omega must be positive");
    if (branch.orientation == Orientation::series) return AbcdMatrix::series(branch_impedance(branch, omega));
    return AbcdMatrix::shunt(branch_admittance(branch, omega));
}

AbcdMatrix cascade_abcd(std::span<const AbcdMatrix> matrices) {
    if (matrices.empty()) throw EmptyNetwork("cascade needs at least one matrix");
    AbcdMatrix t = matrices.front();
    for (std::size_t i = 1; i < matrices.size(); ++i) t = t * matrices[i];
    return t;
}

SParameters abcd_to_s(const AbcdMatrix& t, double z0_ohm) {
    if (!(z0_ohm > 0.0)) throw InvalidSpec("z0 must be positive");
    const double z0 = z0_ohm;
    const complex den = z0 * t.a + t.b + z0 * z0 * t.c + z0 * t.d;
    if (std::abs(den) < 1e-30) throw SingularConversion("ABCD to S denominator vanishes");
    return {(z0 * t.a + t.b - z0 * z0 * t.c - z0 * t.d) / den, 2.0 * z0 / den};
}

SParameters abcd_to_s(const AbcdMatrix& t, double source_ohm, double load_ohm) {
    if (!(source_ohm > 0.0) || !(load_ohm > 0.0)) throw InvalidSpec("terminations must be positive");
    if (source_ohm == load_ohm) return abcd_to_s(t, source_ohm);
    const double rs = source_ohm, rl = load_ohm;
    const complex den = t.a * rl + t.b + t.c * rs * rl + t.d * rs;
    if (std::abs(den) < 1e-30) throw SingularConversion("ABCD to S denominator vanishes");
    return {(t.a * rl + t.b - t.c * rs * rl - t.d * rs) / den, 2.0 * std::sqrt(rs * rl) / den};
}

double power_to_db(double power, double floor_db) noexcept {
    if (!(power > 0.0)) return floor_db;
    const double db = 10.0 * std::log10(power);
    if (!(db > floor_db)) return floor_db;
    return db > 0.0 ? 0.0 : db;
}

SParameters ladder_s_parameters(const LadderNetwork& ladder, double f_ghz) {
    try {
        return ladder_s_at(ladder, f_ghz);
    } catch (const SingularFrequency&) {
        return ladder_s_at(ladder, f_ghz + kSingularNudgeGhz);
    }
}

FrequencyResponse sweep_ladder(const LadderNetwork& ladder, const SweepGrid& grid,
                               const SweepOptions& options) {
    if (ladder.branches.empty()) throw EmptyNetwork("ladder has no branches");
    const std::size_t n = grid.size();
    FrequencyResponse r;
    r.freq_ghz.resize(n);
    r.s21_db.resize(n);
    r.s11_db.resize(n);
    r.s11_direct_db.resize(n);

    detail::parallel_for(n, options.threads, [&](std::size_t i) {
        const double f = grid.at(i);
        const auto s = ladder_s_parameters(ladder, f);
        const double p21 = std::norm(s.s21);
        r.freq_ghz[i] = f;
        r.s21_db[i] = power_to_db(p21, options.db_floor);
        r.s11_db[i] = power_to_db(1.0 - p21, options.db_floor);
        r.s11_direct_db[i] = power_to_db(std::norm(s.s11), options.db_floor);
    });
    return r;
}

FrequencyResponse sweep_ladder(const CoupledBpfNetwork& network, const SweepGrid& grid,
                               const SweepOptions& options) {
    return sweep_ladder(to_ladder(network), grid, options);
}

}  // namespace mwf
