#include "mwfilter/coupled.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mwfilter/errors.hpp"
#include "mwfilter/grid.hpp"
#include "mwfilter/prototype.hpp"

namespace mwf {

namespace {

constexpr double kPi = std::numbers::pi;

// Shared by both topologies: normalized resonator capacitances C_r and
// inter-resonator couplings K(r,r+1) for the Chebyshev ripple.
struct ResonatorPrototype {
    std::vector<double> c;  // r = 1..N stored at r - 1
    std::vector<double> k;  // r = 1..N-1 stored at r - 1
};

ResonatorPrototype resonator_prototype(int n, double epsilon) {
    const double eta = std::sinh(std::asinh(1.0 / epsilon) / n);
    ResonatorPrototype p;
    p.c.reserve(static_cast<std::size_t>(n));
    // Mirrored indices keep the values bit-for-bit symmetric about the centre.
    for (int r = 1; r <= n; ++r) {
        const int m = std::min(r, n + 1 - r);
        p.c.push_back(2.0 / eta * std::sin((2.0 * m - 1.0) * kPi / (2.0 * n)));
    }
    for (int r = 1; r < n; ++r) {
        const double s = std::sin(std::min(r, n - r) * kPi / n);
        p.k.push_back(std::sqrt(eta * eta + s * s) / eta);
    }
    return p;
}

}  // namespace

CoupledBpfNetwork synthesize_coupled_bpf(const DesignSpec& spec) {
    if (spec.kind != FilterKind::coupled_bandpass) throw InvalidSpec("kind must be coupled_bandpass");
    validate(spec);
    const int n = filter_order(Family::chebyshev, spec.insertion_loss_db, spec.return_loss_db,
                               selectivity(spec));
    return synthesize_coupled_bpf(n, spec.band_edges_ghz[0], spec.band_edges_ghz[1], spec.return_loss_db,
                                  spec.z0_ohm);
}

CoupledBpfNetwork synthesize_coupled_bpf(int order, double f0_ghz, double bw_pass_ghz,
                                         double return_loss_db, double z0_ohm) {
    if (order < 2) throw InvalidSpec("coupled design needs order at least 2");
    if (!(f0_ghz > 0.0)) throw InvalidSpec("f0 must be positive");
    if (!(bw_pass_ghz > 0.0)) throw InvalidSpec("bw must be positive");
    if (!(z0_ohm > 0.0)) throw InvalidSpec("z0 must be positive");

    const double alpha = f0_ghz / bw_pass_ghz;
    if (!(alpha > 1.0)) throw InfeasibleDesign("f0/bw must exceed 1");

    const auto chain = ripple_chain(return_loss_db);
    const auto proto = resonator_prototype(order, chain.ripple_factor);
    const double w0 = angular_ghz(f0_ghz);
    const auto n = static_cast<std::size_t>(order);

    // Normalized (1 ohm) values in nF / nH.
    std::vector<double> coupling(n + 1);
    coupling[0] = coupling[n] = 1.0 / (w0 * std::sqrt(alpha - 1.0));
    for (std::size_t r = 1; r < n; ++r) coupling[r] = proto.k[r - 1] / (alpha * w0);

    // Shunt-equivalent loading of the end couplings on the first and last node.
    const double end_loading = std::sqrt(alpha - 1.0) / (alpha * w0);
    std::vector<double> node(n);
    std::vector<double> inductors(n);
    for (std::size_t r = 0; r < n; ++r) {
        const double left = (r == 0) ? end_loading : coupling[r];
        const double right = (r == n - 1) ? end_loading : coupling[r + 1];
        node[r] = proto.c[r] / w0 - (left + right);
        inductors[r] = 1.0 / (proto.c[r] * w0);
    }

    CoupledBpfNetwork out;
    out.z0_ohm = z0_ohm;
    for (double c : coupling) out.coupling_caps_pf.push_back(1000.0 * c / z0_ohm);
    for (double c : node) {
        if (!(c > 0.0)) throw NonPhysical("node capacitance must be positive; widen bw or lower order");
        out.node_caps_pf.push_back(1000.0 * c / z0_ohm);
    }
    for (double l : inductors) out.node_inductors_nh.push_back(l * z0_ohm);
    return out;
}

LadderNetwork to_ladder(const CoupledBpfNetwork& network) {
    LadderNetwork ladder;
    ladder.source_impedance_ohm = network.z0_ohm;
    ladder.load_impedance_ohm = network.z0_ohm;
    const std::size_t n = network.node_caps_pf.size();
    for (std::size_t r = 0; r < n; ++r) {
        ladder.branches.push_back(
            {Orientation::series, Resonator::single_C, 0.0, network.coupling_caps_pf[r]});
        ladder.branches.push_back({Orientation::shunt, Resonator::shunt_LC, network.node_inductors_nh[r],
                                   network.node_caps_pf[r]});
    }
    ladder.branches.push_back({Orientation::series, Resonator::single_C, 0.0, network.coupling_caps_pf[n]});
    return ladder;
}

ComblineNetwork synthesize_combline(double return_loss_db, double f0_ghz, double bw_ghz, int order,
                                    double z0_ohm) {
    if (order < 2) throw InvalidSpec("order must be at least 2");
    if (!(bw_ghz > 0.0)) throw InvalidSpec("bw must be positive");
    if (!(f0_ghz > 0.0)) throw InvalidSpec("f0 must be positive");
    if (!(z0_ohm > 0.0)) throw InvalidSpec("z0 must be positive");

    const auto chain = ripple_chain(return_loss_db);
    const auto proto = resonator_prototype(order, chain.ripple_factor);
    const auto n = static_cast<std::size_t>(order);

    const double theta0 = kComblineTheta0Rad;
    const double t = std::tan(theta0);
    const double w0 = angular_ghz(f0_ghz);
    const double dw = angular_ghz(bw_ghz);
    const double alpha = 2.0 * w0 * t / (dw * (t + theta0 * (1.0 + t * t)));
    const double beta = 1.0 / (w0 * t);

    // Resonator self-admittance normalized to one.
    constexpr double y_rr = 1.0;
    std::vector<double> turns(n);
    for (std::size_t r = 0; r < n; ++r) turns[r] = std::sqrt(alpha * proto.c[r] * t / y_rr);

    std::vector<double> mutual(n - 1);  // Y(r,r+1)
    for (std::size_t r = 0; r + 1 < n; ++r) mutual[r] = proto.k[r] * t / (turns[r] * turns[r + 1]);

    const double y01 = 1.0 / (turns[0] * std::cos(theta0));
    const double y0 = 1.0 - y01;
    const double y1 = y_rr - mutual[0] + 1.0 / (turns[0] * turns[0]) - y01;

    std::vector<double> self(n + 2);  // Y_r, r = 0..N+1
    self[0] = self[n + 1] = y0;
    self[1] = self[n] = y1;
    for (std::size_t r = 2; r < n; ++r) self[r] = y_rr - (mutual[r - 2] + mutual[r - 1]);

    std::vector<double> coupling(n + 1);  // Y01, Y12, ..., Y(N,N+1)
    coupling[0] = coupling[n] = y01;
    for (std::size_t r = 1; r < n; ++r) coupling[r] = mutual[r - 1];

    ComblineNetwork out;
    out.transformer_cap_nf = beta / z0_ohm;
    for (double y : self) {
        if (!(y > 0.0) || !std::isfinite(y)) throw NonPhysical("combline self admittance must be positive");
        out.odd_impedances_ohm.push_back(z0_ohm / y);
    }
    for (double y : coupling) {
        if (!(y > 0.0) || !std::isfinite(y))
            throw NonPhysical("combline coupling admittance must be positive");
        out.even_impedances_ohm.push_back(z0_ohm / y);
    }
    return out;
}

}  // namespace mwf
