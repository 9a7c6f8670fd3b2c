#pragma once

#include <complex>
#include <span>
#include <vector>

#include "mwfilter/coupled.hpp"
#include "mwfilter/grid.hpp"
#include "mwfilter/ladder.hpp"

namespace mwf {

using complex = std::complex<double>;

/// Two-port chain (transmission) matrix. B is in ohms, C in siemens.
struct AbcdMatrix {
    complex a{1.0, 0.0};
    complex b{0.0, 0.0};
    complex c{0.0, 0.0};
    complex d{1.0, 0.0};

    complex determinant() const noexcept { return a * d - b * c; }

    static AbcdMatrix identity() noexcept { return {}; }
    static AbcdMatrix series(complex impedance) noexcept { return {1.0, impedance, 0.0, 1.0}; }
    static AbcdMatrix shunt(complex admittance) noexcept { return {1.0, 0.0, admittance, 1.0}; }

    friend AbcdMatrix operator*(const AbcdMatrix& l, const AbcdMatrix& r) noexcept {
        return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d, l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
    }
};

/// Chain matrix of one ladder branch at angular frequency omega (rad/ns).
/// Throws InvalidSpec if omega <= 0 and SingularFrequency when the branch
/// immittance is unbounded (e.g. a series-arm parallel LC exactly at resonance).
AbcdMatrix branch_abcd(const Branch& branch, double omega);

/// Left-to-right product, source side first. Throws EmptyNetwork on empty input.
AbcdMatrix cascade_abcd(std::span<const AbcdMatrix> matrices);

struct SParameters {
    complex s11;
    complex s21;
};

/// Conversion with both ports referenced to z0.
/// Throws SingularConversion when |Z0 A + B + Z0^2 C + Z0 D| < 1e-30.
SParameters abcd_to_s(const AbcdMatrix& t, double z0_ohm);

/// Conversion between unequal resistive terminations (power-wave S21).
/// Reduces to the single-z0 form when source == load.
SParameters abcd_to_s(const AbcdMatrix& t, double source_ohm, double load_ohm);

inline constexpr double kDefaultDbFloor = -120.0;

/// Frequency offset applied when a grid point lands on a singularity.
inline constexpr double kSingularNudgeGhz = 1e-9;

/// Sampled power responses in dB.
///
/// s11_db is 10 log10(1 - |S21|^2). s11_direct_db, filled only by ladder
/// sweeps, is 20 log10 |S11| from the chain matrix. All values are clamped
/// into [db_floor, 0].
struct FrequencyResponse {
    std::vector<double> freq_ghz;
    std::vector<double> s21_db;
    std::vector<double> s11_db;
    std::vector<double> s11_direct_db;

    std::size_t size() const noexcept { return freq_ghz.size(); }
};

struct SweepOptions {
    double db_floor = kDefaultDbFloor;
    unsigned threads = 1;  // 0 picks hardware concurrency
};

/// Power ratio to dB, clamped into [floor, 0].
double power_to_db(double power, double floor_db) noexcept;

/// Per-point S-parameters of a terminated ladder, nudging off singular points.
SParameters ladder_s_parameters(const LadderNetwork& ladder, double f_ghz);

FrequencyResponse sweep_ladder(const LadderNetwork& ladder, const SweepGrid& grid,
                               const SweepOptions& options = {});

FrequencyResponse sweep_ladder(const CoupledBpfNetwork& network, const SweepGrid& grid,
                               const SweepOptions& options = {});

}  // namespace mwf
