#pragma once

#include <vector>

#include "mwfilter/ladder.hpp"
#include "mwfilter/spec.hpp"

namespace mwf {

/// Capacitively coupled Chebyshev bandpass: shunt LC resonators joined by
/// series coupling capacitors, end-coupled to the terminations.
///
/// coupling_caps_pf  C01, C12, ..., C(N,N+1)   (N + 1 values)
/// node_caps_pf      C11, ..., CNN             (N values)
/// node_inductors_nh L11, ..., LNN             (N values)
struct CoupledBpfNetwork {
    std::vector<double> coupling_caps_pf;
    std::vector<double> node_caps_pf;
    std::vector<double> node_inductors_nh;
    double z0_ohm = 50.0;

    int order() const noexcept { return static_cast<int>(node_caps_pf.size()); }
};

/// Order from the Chebyshev formula with selectivity bw_stop/bw_pass, then
/// element synthesis. Throws InvalidSpec for a bad spec, InfeasibleDesign
/// when f0/bw_pass <= 1 and NonPhysical if a node capacitance is not positive.
CoupledBpfNetwork synthesize_coupled_bpf(const DesignSpec& spec);

/// Element synthesis for an explicit order (>= 2).
CoupledBpfNetwork synthesize_coupled_bpf(int order, double f0_ghz, double bw_pass_ghz,
                                         double return_loss_db, double z0_ohm);

/// Equivalent ladder: series C01, shunt (C11 || L11), series C12, ..., series C(N,N+1).
LadderNetwork to_ladder(const CoupledBpfNetwork& network);

/// Combline resonator electrical length at the centre frequency (50 degrees).
inline constexpr double kComblineTheta0Rad = 50.0 / 180.0 * 3.14159265358979323846;

/// Combline filter element set.
///
/// odd_impedances_ohm   Z0/Y_r for r = 0..N+1    (N + 2 values)
/// even_impedances_ohm  Z0/Y_(r,r+1), r = 0..N   (N + 1 values)
struct ComblineNetwork {
    double transformer_cap_nf = 0.0;
    std::vector<double> odd_impedances_ohm;
    std::vector<double> even_impedances_ohm;
    double theta0_rad = kComblineTheta0Rad;
};

/// Element synthesis only; no response is defined for this topology.
/// Throws InvalidSpec on bad inputs and NonPhysical when an admittance is not positive.
ComblineNetwork synthesize_combline(double return_loss_db, double f0_ghz, double bw_ghz, int order,
                                    double z0_ohm = 50.0);

}  // namespace mwf
