// Acceptance gate: one PASS/FAIL line per release criterion. Exits non-zero
// if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "golden.hpp"
#include "mwfilter/coupled.hpp"
#include "mwfilter/design.hpp"
#include "mwfilter/emulation.hpp"
#include "mwfilter/grid.hpp"
#include "mwfilter/ladder.hpp"
#include "mwfilter/network.hpp"
#include "mwfilter/prototype.hpp"
#include "mwfilter/uwb.hpp"
#include "service.hpp"

using namespace mwf;
using Clock = std::chrono::steady_clock;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail = what;
        pass = pass && ok;
    }
};

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string fmt(const char* pattern, double a, double b = 0, double c = 0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, a, b, c);
    return buf;
}

// Printed return-loss table: Gamma, passband ripple (dB), ripple factor for 1..20 dB.
constexpr double kTable[20][3] = {
    {0.8913, 6.8683, 1.9652}, {0.7943, 4.3292, 1.3076}, {0.7079, 3.0206, 1.0024}, {0.6310, 2.2048, 0.8133},
    {0.5623, 1.6509, 0.6801}, {0.5012, 1.2563, 0.5792}, {0.4467, 0.9665, 0.4993}, {0.3981, 0.7494, 0.4340},
    {0.3548, 0.5844, 0.3795}, {0.3162, 0.4576, 0.3333}, {0.2818, 0.3594, 0.2937}, {0.2512, 0.2830, 0.2595},
    {0.2239, 0.2233, 0.2297}, {0.1995, 0.1764, 0.2036}, {0.1778, 0.1396, 0.1807}, {0.1585, 0.1105, 0.1605},
    {0.1413, 0.0875, 0.1427}, {0.1259, 0.0694, 0.1269}, {0.1122, 0.0550, 0.1129}, {0.1000, 0.0436, 0.1005},
};

Verdict ripple_table() {
    Verdict v;
    const auto start = Clock::now();
    double worst = 0;
    for (int lr = 1; lr <= 20; ++lr) {
        const auto c = ripple_chain(lr);
        const double got[3] = {c.reflection_coefficient, c.passband_ripple_db, c.ripple_factor};
        for (int k = 0; k < 3; ++k) {
            const double err = std::abs(got[k] - kTable[lr - 1][k]);
            worst = std::max(worst, err);
            v.require(err <= 5e-5, fmt("row %.0f column %.0f off by %.2e", lr, k, err));
        }
    }
    const double ms = elapsed_ms(start);
    v.require(ms < 1000, fmt("took %.1f ms", ms));
    if (v.pass) v.detail = fmt("60 values, max error %.2e, %.3f ms", worst, ms);
    return v;
}

Verdict butterworth_prototype() {
    Verdict v;
    const auto g2 = prototype_g_values(Family::butterworth, 2);
    const auto g3 = prototype_g_values(Family::butterworth, 3);
    v.require(std::abs(g2[1] - std::sqrt(2.0)) <= 1e-12 && std::abs(g2[2] - std::sqrt(2.0)) <= 1e-12, "N=2 values");
    v.require(std::abs(g3[1] - 1) <= 1e-12 && std::abs(g3[2] - 2) <= 1e-12 && std::abs(g3[3] - 1) <= 1e-12,
              "N=3 values");
    double worst = 0;
    for (int n = 1; n <= 25; ++n) {
        const auto g = prototype_g_values(Family::butterworth, n);
        for (int k = 1; k <= n; ++k) worst = std::max(worst, std::abs(g[k] - g[n + 1 - k]));
    }
    v.require(worst <= 1e-12, fmt("symmetry error %.2e", worst));
    if (v.pass) v.detail = fmt("N=2,3 exact, symmetry N<=25 max error %.2e", worst);
    return v;
}

Verdict chebyshev_prototype() {
    Verdict v;
    const auto g = prototype_g_values(Family::chebyshev, 3, 0.5);
    const double want[3] = {1.5963, 1.0967, 1.5963};
    double worst = 0;
    for (int k = 0; k < 3; ++k) worst = std::max(worst, std::abs(g[k + 1] - want[k]));
    v.require(worst <= 5e-4, fmt("printed values off by %.2e", worst));

    // independent 50-digit evaluation
    double oracle = 0;
    for (const auto& c : test::load_golden("chebyshev_prototypes.json")["cases"]) {
        if (c["order"] != 3 || c["passband_ripple_db"] != 0.5) continue;
        for (int k = 0; k <= 4; ++k) oracle = std::max(oracle, std::abs(g[k] - c["g"][k].get<double>()));
    }
    v.require(oracle <= 1e-12, fmt("oracle mismatch %.2e", oracle));
    if (v.pass) v.detail = fmt("g=[%.4f, %.4f, %.4f]", g[1], g[2], g[3]);
    return v;
}

DesignSpec make_spec(Family family, FilterKind kind, std::vector<double> edges, double la, double lr,
                     Topology topology) {
    DesignSpec s;
    s.family = family;
    s.kind = kind;
    s.band_edges_ghz = std::move(edges);
    s.insertion_loss_db = la;
    s.return_loss_db = lr;
    s.topology = topology;
    return s;
}

Verdict equivalence() {
    Verdict v;
    struct Case { FilterKind kind; std::vector<double> edges; double la, lr; Topology topology; };
    const std::vector<Case> cases{
        {FilterKind::lowpass, {1, 2}, 40, 20, Topology::shunt_first},
        {FilterKind::lowpass, {2, 3.5}, 50, 15, Topology::series_first},
        {FilterKind::highpass, {1, 2}, 40, 20, Topology::shunt_first},
        {FilterKind::highpass, {3, 4.5}, 35, 10, Topology::series_first},
        {FilterKind::bandpass, {2, 3, 4}, 40, 20, Topology::shunt_first},
        {FilterKind::bandstop, {1, 4, 2, 3}, 40, 20, Topology::series_first},
    };
    const auto start = Clock::now();
    double worst = 0;
    std::size_t points = 0, designs = 0;
    for (auto family : {Family::butterworth, Family::chebyshev}) {
        for (const auto& c : cases) {
            const auto result = run_design({make_spec(family, c.kind, c.edges, c.la, c.lr, c.topology), Method::both});
            const auto& e = *result.response_emulated;
            const auto& s = *result.response_simulated;
            ++designs;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e.s21_db[i] > -100 && s.s21_db[i] > -100) {
                    worst = std::max(worst, std::abs(e.s21_db[i] - s.s21_db[i]));
                    ++points;
                }
                if (e.s11_db[i] > -100 && s.s11_db[i] > -100) {
                    worst = std::max(worst, std::abs(e.s11_db[i] - s.s11_db[i]));
                    ++points;
                }
            }
        }
    }
    const double ms = elapsed_ms(start);
    v.require(designs == 12, "expected 12 designs");
    v.require(worst <= 1e-4, fmt("max deviation %.3e dB", worst));
    v.require(ms < 10000, fmt("took %.0f ms", ms));
    if (v.pass) v.detail = fmt("12 designs, %.0f compared values, max deviation %.2e dB, %.0f ms", double(points), worst, ms);
    return v;
}

Verdict conservation() {
    Verdict v;
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<int> order(1, 15), kind(0, 3), side(0, 1);
    std::uniform_real_distribution<double> value(0.1, 20.0), freq(0.05, 30.0);
    double worst_power = 0, worst_det = 0;
    std::size_t evaluated = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<Branch> branches;
        auto orientation = side(rng) ? Orientation::series : Orientation::shunt;
        const int n = order(rng);
        for (int i = 0; i < n; ++i) {
            Branch b{orientation, static_cast<Resonator>(kind(rng)), 0.0, 0.0};
            if (b.resonator != Resonator::single_C) b.inductance_nh = value(rng);
            if (b.resonator != Resonator::single_L) b.capacitance_pf = value(rng);
            branches.push_back(b);
            orientation = orientation == Orientation::series ? Orientation::shunt : Orientation::series;
        }
        for (int k = 0; k < 50; ++k) {
            const double w = angular_ghz(freq(rng));
            std::vector<AbcdMatrix> ms;
            for (const auto& b : branches) ms.push_back(branch_abcd(b, w));
            const auto t = cascade_abcd(ms);
            // determinant error relative to the size of the products it cancels
            const double scale = std::max(1.0, std::abs(t.a * t.d));
            worst_det = std::max(worst_det, std::abs(t.determinant() - 1.0) / scale);
            const auto s = abcd_to_s(t, 50.0);
            worst_power = std::max(worst_power, std::abs(std::norm(s.s11) + std::norm(s.s21) - 1.0));
            ++evaluated;
        }
    }
    v.require(worst_power <= 1e-6, fmt("power error %.2e", worst_power));
    v.require(worst_det <= 1e-9, fmt("determinant error %.2e", worst_det));
    if (v.pass)
        v.detail = fmt("1000 ladders, %.0f points, max |S11|^2+|S21|^2-1 = %.2e, max det error %.2e relative to |AD|", double(evaluated),
                       worst_power, worst_det);
    return v;
}

Verdict cutoff_landmarks() {
    Verdict v;
    double worst_b = 0, worst_c = 0;
    const double lar = ripple_chain(20.0).passband_ripple_db;
    const double eps = ripple_chain(20.0).ripple_factor;
    for (int n = 2; n <= 10; ++n) {
        for (auto topology : {Topology::shunt_first, Topology::series_first}) {
            const auto bw = scale_lowpass_ladder(prototype_g_values(Family::butterworth, n), 1.0, 50.0, topology);
            const double sb = 10 * std::log10(std::norm(ladder_s_parameters(bw, 1.0).s21));
            worst_b = std::max(worst_b, std::abs(sb + 3.0103));

            const auto ch = scale_lowpass_ladder(prototype_g_values(Family::chebyshev, n, lar), 1.0, 50.0, topology);
            const double sc = 10 * std::log10(std::norm(ladder_s_parameters(ch, 1.0).s21));
            worst_c = std::max(worst_c, std::abs(sc + lar));
        }
        const double eb = 10 * std::log10(closed_form_power(Family::butterworth, n, 0, 1.0));
        const double ec = 10 * std::log10(closed_form_power(Family::chebyshev, n, eps, 1.0));
        worst_b = std::max(worst_b, std::abs(eb + 3.0103));
        worst_c = std::max(worst_c, std::abs(ec + lar));
    }
    v.require(worst_b <= 1e-3, fmt("butterworth off by %.2e dB", worst_b));
    v.require(worst_c <= 1e-3, fmt("chebyshev off by %.2e dB", worst_c));
    if (v.pass) v.detail = fmt("N=2..10 both routes, butterworth max error %.2e dB, chebyshev %.2e dB", worst_b, worst_c);
    return v;
}

Verdict uwb() {
    Verdict v;
    const auto c = uwb_design(3.1, 10.6, 20.0);
    v.require(std::abs(c.alpha + 0.6044) <= 1e-3, fmt("alpha %.5f", c.alpha));
    v.require(std::abs(c.zeta - 0.0499) <= 1e-3, fmt("zeta %.5f", c.zeta));
    const auto centre = uwb_response(c, SweepGrid(c.center_freq_ghz, c.center_freq_ghz + 1, 1));
    v.require(std::abs(centre.s11_db[0] + 20) <= 0.01, fmt("s11(fc) %.4f dB", centre.s11_db[0]));

    const auto r = uwb_response(c, SweepGrid(0.001, 15.0, 0.001));
    double worst = 0;
    int maxima = 0;
    for (std::size_t i = 1; i + 1 < r.size(); ++i) {
        if (r.freq_ghz[i] <= 3.1 || r.freq_ghz[i] >= 10.6) continue;
        if (r.s11_db[i] >= r.s11_db[i - 1] && r.s11_db[i] >= r.s11_db[i + 1]) {
            worst = std::max(worst, std::abs(r.s11_db[i] + 20));
            ++maxima;
        }
    }
    v.require(maxima > 0, "no in-band maxima");
    v.require(worst <= 0.1, fmt("in-band maximum off by %.3f dB", worst));
    if (v.pass)
        v.detail = fmt("alpha %.5f zeta %.5f, %.0f in-band maxima", c.alpha, c.zeta, maxima) +
                   fmt(" within %.2e dB, s11(fc) %.4f dB", worst, centre.s11_db[0]);
    return v;
}

Verdict coupled() {
    Verdict v;
    DesignSpec spec;
    spec.kind = FilterKind::coupled_bandpass;
    spec.insertion_loss_db = 30;
    spec.return_loss_db = 20;
    spec.band_edges_ghz = {2.0, 0.2, 0.6};
    const auto result = run_design({spec, Method::both});
    const auto& net = std::get<CoupledBpfNetwork>(result.elements);
    const int n = net.order();
    v.require(n == 4, fmt("order %.0f", n));
    bool symmetric = true;
    for (int r = 0; r <= n; ++r) symmetric = symmetric && net.coupling_caps_pf[r] == net.coupling_caps_pf[n - r];
    for (int r = 0; r < n; ++r) {
        symmetric = symmetric && net.node_caps_pf[r] == net.node_caps_pf[n - 1 - r];
        symmetric = symmetric && net.node_inductors_nh[r] == net.node_inductors_nh[n - 1 - r];
    }
    v.require(symmetric, "element values not exactly symmetric");

    const auto& r = *result.response_simulated;
    std::size_t centre = 0;
    for (std::size_t i = 0; i < r.size(); ++i)
        if (std::abs(r.freq_ghz[i] - 2.0) < std::abs(r.freq_ghz[centre] - 2.0)) centre = i;
    const double s11 = r.s11_db[centre];
    v.require(std::abs(s11 + 20.0) <= 0.5, fmt("s11(f0) %.3f dB", s11));
    if (v.pass) v.detail = fmt("N=4 exactly symmetric, s11(%.3f GHz) = %.4f dB", r.freq_ghz[centre], s11);
    return v;
}

double median_ms(const std::function<void()>& work, int runs = 5) {
    std::vector<double> times;
    for (int i = 0; i < runs; ++i) {
        const auto start = Clock::now();
        work();
        times.push_back(elapsed_ms(start));
    }
    std::sort(times.begin(), times.end());
    return times[times.size() / 2];
}

Verdict performance() {
    Verdict v;
    const auto ladder = scale_lowpass_ladder(prototype_g_values(Family::chebyshev, 15, 0.01), 10.0, 50.0);
    const SweepGrid ladder_grid(0.01, 30.01, 0.01);
    v.require(ladder_grid.size() == 3001, "ladder grid size");
    std::size_t sink = 0;
    const double ladder_ms = median_ms([&] { sink += sweep_ladder(ladder, ladder_grid).size(); });

    const auto net = synthesize_coupled_bpf(4, 2.0, 0.2, 20.0, 50.0);
    const SweepGrid coupled_grid(0.001, 30.001, 0.001);
    v.require(coupled_grid.size() == 30001, "coupled grid size");
    const double coupled_ms = median_ms([&] { sink += sweep_ladder(net, coupled_grid).size(); });

    v.require(sink > 0, "no work");
    v.require(ladder_ms < 50, fmt("N=15 ladder 3001 points %.2f ms", ladder_ms));
    v.require(coupled_ms < 500, fmt("coupled 30001 points %.2f ms", coupled_ms));
    if (v.pass)
        v.detail = fmt("single-threaded median of 5: ladder 3001 pts %.2f ms, coupled 30001 pts %.2f ms", ladder_ms,
                       coupled_ms);
    return v;
}

std::string cli_json(const std::vector<std::string>& args) {
    std::vector<const char*> argv{"mwf"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    if (cli::run(static_cast<int>(argv.size()), argv.data(), out, err) != 0) return "cli failed: " + err.str();
    return out.str();
}

Verdict parity() {
    Verdict v;
    struct Case { std::vector<std::string> args; std::string body; };
    const std::vector<Case> cases{
        {{"design", "--family", "chebyshev", "--kind", "lowpass", "--la", "40", "--lr", "20", "--fp", "1", "--fs", "2"},
         R"({"family":"chebyshev","kind":"lowpass","insertion_loss_db":40,"return_loss_db":20,"band_edges_ghz":[1,2]})"},
        {{"design", "--family", "butterworth", "--kind", "bandstop", "--la", "40", "--lr", "20", "--f1", "1", "--f2",
          "4", "--fs1", "2", "--fs2", "3", "--topology", "series_first"},
         R"({"family":"butterworth","kind":"bandstop","insertion_loss_db":40,"return_loss_db":20,
             "band_edges_ghz":[1,4,2,3],"topology":"series_first"})"},
        {{"design", "--kind", "coupled", "--la", "30", "--lr", "20", "--f0", "2", "--bw", "0.2", "--bws", "0.6"},
         R"({"kind":"coupled_bandpass","insertion_loss_db":30,"return_loss_db":20,"band_edges_ghz":[2,0.2,0.6]})"},
        {{"design", "--kind", "combline", "--lr", "20", "--f0", "2", "--bw", "0.2", "--order", "4"},
         R"({"kind":"combline","return_loss_db":20,"band_edges_ghz":[2,0.2],"order":4})"},
        {{"design", "--kind", "uwb", "--f1", "3.1", "--f2", "10.6", "--lr", "20"},
         R"({"kind":"uwb_bandpass","return_loss_db":20,"band_edges_ghz":[3.1,10.6]})"},
    };

    httplib::Server server;
    service::register_routes(server, service::Config{});
    const int port = server.bind_to_any_port("127.0.0.1");
    std::thread listener([&] { server.listen_after_bind(); });
    server.wait_until_ready();
    httplib::Client client("127.0.0.1", port);
    client.set_read_timeout(60);

    for (const auto& c : cases) {
        const auto from_cli = cli_json(c.args);
        const auto res = client.Post("/api/v1/design", c.body, "application/json");
        if (!res || res->status != 200) {
            v.require(false, "service request failed for " + c.args[4]);
            continue;
        }
        auto doc = nlohmann::json::parse(res->body);
        v.require(doc.contains("compute_ms"), "service response lacks compute_ms");
        doc.erase("compute_ms");
        v.require(doc.dump() + "\n" == from_cli, "bytes differ for " + c.args[4]);
        // the CLI output must itself be canonical
        v.require(nlohmann::json::parse(from_cli).dump() + "\n" == from_cli, "cli output not canonical");
    }
    server.stop();
    listener.join();
    if (v.pass) v.detail = "5 kinds byte-identical over HTTP and CLI, no UI build required";
    return v;
}

}  // namespace

int main() {
    struct Criterion { const char* name; Verdict (*run)(); };
    const Criterion criteria[] = {
        {"return-loss table reproduction", ripple_table},
        {"butterworth prototype oracle", butterworth_prototype},
        {"chebyshev prototype oracle", chebyshev_prototype},
        {"emulation-simulation equivalence", equivalence},
        {"conservation of reactive ladders", conservation},
        {"cutoff landmarks", cutoff_landmarks},
        {"uwb full-band design", uwb},
        {"coupled bandpass N=4", coupled},
        {"sweep performance", performance},
        {"cli/service parity", parity},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v = {false, std::string("threw: ") + e.what()};
        }
        std::printf("%s  %s: %s\n", v.pass ? "PASS" : "FAIL", c.name, v.detail.c_str());
        failures += v.pass ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", int(std::size(criteria)) - failures, std::size(criteria));
    return failures == 0 ? 0 : 1;
}
