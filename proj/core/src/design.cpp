#include "mwfilter/design.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <nlohmann/json.hpp>

#include "mwfilter/emulation.hpp"

namespace mwf {

using nlohmann::json;

std::string_view to_string(Method m) noexcept {
    switch (m) {
        case Method::emulate: return "emulate";
        case Method::simulate: return "simulate";
        case Method::both: return "both";
    }
    return "both";
}

std::optional<Method> parse_method(std::string_view s) noexcept {
    if (s == "emulate") return Method::emulate;
    if (s == "simulate") return Method::simulate;
    if (s == "both") return Method::both;
    return std::nullopt;
}

double round_significant(double value) noexcept {
    if (!std::isfinite(value) || value == 0.0) return value == 0.0 ? 0.0 : value;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return std::strtod(buf, nullptr);
}

SweepGrid default_grid(const DesignSpec& spec) {
    const auto& e = spec.band_edges_ghz;
    if (e.size() != expected_band_edges(spec.kind)) throw InvalidSpec("band edge count does not match kind");
    constexpr double fine = 0.01, finer = 0.001;
    switch (spec.kind) {
        case FilterKind::lowpass: return {fine, 2.0 * e[0], fine};
        case FilterKind::highpass: return {fine, 2.0 * e[1], fine};
        case FilterKind::bandpass: return {fine, e[0] + e[1], fine};
        case FilterKind::bandstop: return {fine, e[0] + e[3], fine};
        case FilterKind::coupled_bandpass: return {finer, 2.0 * e[0], finer};
        case FilterKind::uwb_bandpass: return {finer, 15.0, finer};
        case FilterKind::combline: break;
    }
    throw InvalidSpec("combline has no frequency response");
}

SweepGrid resolved_grid(const DesignSpec& spec) {
    return spec.grid ? *spec.grid : default_grid(spec);
}

namespace {

LadderNetwork synthesize_ladder(const DesignSpec& spec, int order, double ripple_db) {
    const auto g = prototype_g_values(spec.family, order, ripple_db);
    const auto& e = spec.band_edges_ghz;
    switch (spec.kind) {
        case FilterKind::lowpass: return scale_lowpass_ladder(g, e[0], spec.z0_ohm, spec.topology);
        case FilterKind::highpass: {
            const auto lp = scale_lowpass_ladder(g, e[1], spec.z0_ohm, spec.topology);
            return transform_ladder(lp, BandTransform::highpass(e[1], e[1]));
        }
        case FilterKind::bandpass: {
            const auto lp = scale_lowpass_ladder(g, e[0], spec.z0_ohm, spec.topology);
            return transform_ladder(lp, BandTransform::bandpass(e[0], e[0], e[1]));
        }
        case FilterKind::bandstop: {
            const auto lp = scale_lowpass_ladder(g, e[0], spec.z0_ohm, spec.topology);
            return transform_ladder(lp, BandTransform::bandstop(e[0], e[0], e[1]));
        }
        default: throw InvalidSpec("ladder synthesis covers lowpass, highpass, bandpass and bandstop");
    }
}

}  // namespace

DesignResult run_design(const DesignRequest& request, const SweepOptions& options) {
    const DesignSpec& spec = request.spec;
    validate(spec);

    DesignResult result;
    result.spec = spec;
    const bool emulate = request.method != Method::simulate;
    const bool simulate = request.method != Method::emulate;

    if (spec.family == Family::chebyshev) result.ripple = ripple_chain(spec.return_loss_db);

    switch (spec.kind) {
        case FilterKind::lowpass:
        case FilterKind::highpass:
        case FilterKind::bandpass:
        case FilterKind::bandstop: {
            const auto closed = resolve_closed_form(spec);
            result.order = closed.order;
            result.selectivity = selectivity(spec);
            const double ripple_db = result.ripple ? result.ripple->passband_ripple_db : 0.0;
            auto ladder = synthesize_ladder(spec, closed.order, ripple_db);
            const auto grid = resolved_grid(spec);
            if (emulate) result.response_emulated = sweep_closed_form(closed, grid, options);
            if (simulate) result.response_simulated = sweep_ladder(ladder, grid, options);
            result.elements = std::move(ladder);
            break;
        }
        case FilterKind::coupled_bandpass: {
            auto network = synthesize_coupled_bpf(spec);
            result.order = network.order();
            result.selectivity = selectivity(spec);
            if (simulate) result.response_simulated = sweep_ladder(network, resolved_grid(spec), options);
            result.elements = std::move(network);
            break;
        }
        case FilterKind::combline: {
            const auto& e = spec.band_edges_ghz;
            result.order = *spec.order;
            result.elements = synthesize_combline(spec.return_loss_db, e[0], e[1], *spec.order, spec.z0_ohm);
            break;
        }
        case FilterKind::uwb_bandpass: {
            const auto& e = spec.band_edges_ghz;
            auto coeffs = uwb_design(e[0], e[1], spec.return_loss_db);
            result.order = 4;
            if (emulate) result.response_emulated = uwb_response(coeffs, resolved_grid(spec), options);
            result.elements = coeffs;
            break;
        }
    }
    return result;
}

namespace {

json rounded(const std::vector<double>& values) {
    json arr = json::array();
    for (double v : values) arr.push_back(round_significant(v));
    return arr;
}

json spec_json(const DesignSpec& spec) {
    json j;
    j["family"] = to_string(spec.family);
    j["kind"] = to_string(spec.kind);
    j["insertion_loss_db"] = round_significant(spec.insertion_loss_db);
    j["return_loss_db"] = round_significant(spec.return_loss_db);
    j["band_edges_ghz"] = rounded(spec.band_edges_ghz);
    j["z0_ohm"] = round_significant(spec.z0_ohm);
    j["topology"] = to_string(spec.topology);
    if (spec.order) j["order"] = *spec.order;
    if (spec.grid) {
        j["grid"] = {{"start_ghz", round_significant(spec.grid->start_ghz())},
                     {"stop_ghz", round_significant(spec.grid->stop_ghz())},
                     {"step_ghz", round_significant(spec.grid->step_ghz())}};
    }
    return j;
}

json response_json(const FrequencyResponse& r) {
    json j;
    j["freq_ghz"] = rounded(r.freq_ghz);
    j["s21_db"] = rounded(r.s21_db);
    j["s11_db"] = rounded(r.s11_db);
    if (!r.s11_direct_db.empty()) j["s11_direct_db"] = rounded(r.s11_direct_db);
    return j;
}

struct ElementsJson {
    json operator()(const LadderNetwork& l) const {
        json branches = json::array();
        for (const auto& b : l.branches) {
            branches.push_back({{"orientation", to_string(b.orientation)},
                                {"resonator", to_string(b.resonator)},
                                {"inductance_nh", round_significant(b.inductance_nh)},
                                {"capacitance_pf", round_significant(b.capacitance_pf)}});
        }
        return {{"type", "ladder"},
                {"branches", branches},
                {"inductors_nh", rounded(l.inductors_nh())},
                {"capacitors_pf", rounded(l.capacitors_pf())},
                {"source_impedance_ohm", round_significant(l.source_impedance_ohm)},
                {"load_impedance_ohm", round_significant(l.load_impedance_ohm)}};
    }

    json operator()(const CoupledBpfNetwork& c) const {
        // Display order C01, C11, C12, C22, ..., CNN, C(N,N+1).
        std::vector<double> positional;
        for (std::size_t r = 0; r < c.node_caps_pf.size(); ++r) {
            positional.push_back(c.coupling_caps_pf[r]);
            positional.push_back(c.node_caps_pf[r]);
        }
        positional.push_back(c.coupling_caps_pf.back());
        return {{"type", "coupled_bandpass"},
                {"coupling_caps_pf", rounded(c.coupling_caps_pf)},
                {"node_caps_pf", rounded(c.node_caps_pf)},
                {"node_inductors_nh", rounded(c.node_inductors_nh)},
                {"capacitors_pf", rounded(positional)},
                {"inductors_nh", rounded(c.node_inductors_nh)},
                {"source_impedance_ohm", round_significant(c.z0_ohm)},
                {"load_impedance_ohm", round_significant(c.z0_ohm)}};
    }

    json operator()(const ComblineNetwork& c) const {
        return {{"type", "combline"},
                {"transformer_cap_nf", round_significant(c.transformer_cap_nf)},
                {"odd_impedances_ohm", rounded(c.odd_impedances_ohm)},
                {"even_impedances_ohm", rounded(c.even_impedances_ohm)},
                {"theta0_rad", round_significant(c.theta0_rad)}};
    }

    json operator()(const UwbCoefficients& u) const {
        return {{"type", "uwb_bandpass"},
                {"center_freq_ghz", round_significant(u.center_freq_ghz)},
                {"bandwidth_rad", round_significant(u.bandwidth_rad)},
                {"alpha", round_significant(u.alpha)},
                {"zeta", round_significant(u.zeta)},
                {"ripple_factor", round_significant(u.ripple_factor)},
                {"scale_a", round_significant(u.scale_a)}};
    }
};

double number_field(const json& j, const char* key, double fallback) {
    if (!j.contains(key) || j[key].is_null()) return fallback;
    if (!j[key].is_number()) throw InvalidSpec(std::string(key) + " must be a number");
    return j[key].get<double>();
}

std::string string_field(const json& j, const char* key, std::string fallback) {
    if (!j.contains(key) || j[key].is_null()) return fallback;
    if (!j[key].is_string()) throw InvalidSpec(std::string(key) + " must be a string");
    return j[key].get<std::string>();
}

}  // namespace

std::string to_json(const DesignSpec& spec) { return spec_json(spec).dump(); }

std::string to_json(const DesignResult& result, std::optional<double> compute_ms) {
    json j;
    j["spec"] = spec_json(result.spec);
    j["order"] = result.order;
    if (result.selectivity) j["selectivity"] = round_significant(*result.selectivity);
    if (result.ripple) {
        j["ripple_chain"] = {
            {"reflection_coefficient", round_significant(result.ripple->reflection_coefficient)},
            {"passband_ripple_db", round_significant(result.ripple->passband_ripple_db)},
            {"ripple_factor", round_significant(result.ripple->ripple_factor)}};
    }
    j["elements"] = std::visit(ElementsJson{}, result.elements);
    if (result.response_emulated) j["response_emulated"] = response_json(*result.response_emulated);
    if (result.response_simulated) j["response_simulated"] = response_json(*result.response_simulated);
    if (compute_ms) j["compute_ms"] = round_significant(*compute_ms);
    return j.dump();
}

std::string to_csv(const FrequencyResponse& r) {
    std::string out = "f_ghz,s21_db,s11_db\n";
    out.reserve(out.size() + r.size() * 36);
    char line[96];
    auto fixed = [](char* buf, std::size_t n, double v) {
        std::snprintf(buf, n, "%.6f", v);
        if (std::string_view(buf) == "-0.000000") std::snprintf(buf, n, "%.6f", 0.0);
    };
    char a[32], b[32], c[32];
    for (std::size_t i = 0; i < r.size(); ++i) {
        fixed(a, sizeof a, r.freq_ghz[i]);
        fixed(b, sizeof b, r.s21_db[i]);
        fixed(c, sizeof c, r.s11_db[i]);
        std::snprintf(line, sizeof line, "%s,%s,%s\n", a, b, c);
        out += line;
    }
    return out;
}

std::string to_csv(const DesignResult& result) {
    if (result.response_emulated) return to_csv(*result.response_emulated);
    if (result.response_simulated) return to_csv(*result.response_simulated);
    throw InvalidSpec("no frequency response for this design");
}

DesignRequest parse_request_json(std::string_view body) {
    json j;
    try {
        j = json::parse(body);
    } catch (const json::parse_error&) {
        throw InvalidSpec("request body must be valid JSON");
    }
    if (!j.is_object()) throw InvalidSpec("request body must be a JSON object");

    DesignRequest req;
    DesignSpec& s = req.spec;

    const auto kind = string_field(j, "kind", "");
    if (kind.empty()) throw InvalidSpec("kind is required");
    if (auto k = parse_kind(kind)) s.kind = *k;
    else throw InvalidSpec("kind must be one of lowpass, highpass, bandpass, bandstop, coupled_bandpass, combline, uwb_bandpass");

    if (auto f = parse_family(string_field(j, "family", "chebyshev"))) s.family = *f;
    else throw InvalidSpec("family must be butterworth or chebyshev");

    if (auto t = parse_topology(string_field(j, "topology", "shunt_first"))) s.topology = *t;
    else throw InvalidSpec("topology must be shunt_first or series_first");

    if (auto m = parse_method(string_field(j, "method", "both"))) req.method = *m;
    else throw InvalidSpec("method must be emulate, simulate or both");

    s.insertion_loss_db = number_field(j, "insertion_loss_db", 0.0);
    s.return_loss_db = number_field(j, "return_loss_db", 0.0);
    s.z0_ohm = number_field(j, "z0_ohm", 50.0);

    if (j.contains("band_edges_ghz")) {
        const auto& edges = j["band_edges_ghz"];
        if (!edges.is_array()) throw InvalidSpec("band_edges_ghz must be an array of numbers");
        for (const auto& v : edges) {
            if (!v.is_number()) throw InvalidSpec("band_edges_ghz must be an array of numbers");
            s.band_edges_ghz.push_back(v.get<double>());
        }
    }

    if (j.contains("order") && !j["order"].is_null()) {
        if (!j["order"].is_number_integer()) throw InvalidSpec("order must be an integer");
        s.order = j["order"].get<int>();
    }

    if (j.contains("grid") && !j["grid"].is_null()) {
        const auto& g = j["grid"];
        if (!g.is_object()) throw InvalidSpec("grid must be an object");
        s.grid = SweepGrid(number_field(g, "start_ghz", 0.0), number_field(g, "stop_ghz", 0.0),
                           number_field(g, "step_ghz", 0.0));
    }
    return req;
}

std::string_view api_error_code(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::invalid_spec: return "invalid_spec";
        case ErrorCode::infeasible_design: return "infeasible_design";
        case ErrorCode::non_physical: return "non_physical";
        default: return "internal";
    }
}

std::string error_json(std::string_view code, std::string_view message,
                       std::optional<std::string_view> constraint) {
    json e{{"code", code}, {"message", message}};
    if (constraint) e["constraint"] = *constraint;
    return json{{"error", e}}.dump();
}

std::string error_json(const FilterError& error) {
    return error_json(api_error_code(error.code()), error.what(), std::string_view(error.constraint()));
}

std::string ripple_table_csv() {
    std::string out = "return_loss_db,reflection_coefficient,passband_ripple_db,ripple_factor\n";
    char line[96];
    for (int lr = 1; lr <= 20; ++lr) {
        const auto c = ripple_chain(lr);
        std::snprintf(line, sizeof line, "%d,%.4f,%.4f,%.4f\n", lr, c.reflection_coefficient,
                      c.passband_ripple_db, c.ripple_factor);
        out += line;
    }
    return out;
}

std::string ripple_table_json() {
    auto four = [](double v) { return std::round(v * 1e4) / 1e4; };
    json rows = json::array();
    for (int lr = 1; lr <= 20; ++lr) {
        const auto c = ripple_chain(lr);
        rows.push_back({{"return_loss_db", lr},
                        {"reflection_coefficient", four(c.reflection_coefficient)},
                        {"passband_ripple_db", four(c.passband_ripple_db)},
                        {"ripple_factor", four(c.ripple_factor)}});
    }
    return json{{"rows", rows}}.dump();
}

double db_floor_from_env() {
    const char* raw = std::getenv("MWF_DB_FLOOR");
    if (raw == nullptr || *raw == '\0') return kDefaultDbFloor;
    char* end = nullptr;
    const double v = std::strtod(raw, &end);
    if (end == raw || *end != '\0' || !std::isfinite(v) || !(v < 0.0)) return kDefaultDbFloor;
    return v;
}

}  // namespace mwf
