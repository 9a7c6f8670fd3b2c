#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <httplib.h>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mwfilter/design.hpp"
#include "service.hpp"

namespace mwf::cli {

namespace {

struct DesignFlags {
    std::string family = "chebyshev";
    std::string kind;
    std::optional<double> la, lr, fp, fs, f1, f2, fs1, fs2, f0, bw, bws;
    std::optional<int> order;
    double z0 = 50.0;
    std::string topology = "shunt_first";
    std::string method = "both";
    std::string grid;
    std::string format = "json";
    std::string out;
};

double required(const std::optional<double>& v, const char* name) {
    if (!v) throw InvalidSpec(std::string(name) + " is required");
    return *v;
}

SweepGrid parse_grid(const std::string& text) {
    std::vector<double> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            parts.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw InvalidSpec("grid must be start,stop,step in GHz");
        }
    }
    if (parts.size() != 3) throw InvalidSpec("grid must be start,stop,step in GHz");
    return {parts[0], parts[1], parts[2]};
}

DesignRequest build_request(const DesignFlags& f) {
    DesignRequest req;
    DesignSpec& s = req.spec;

    if (auto k = parse_kind(f.kind)) s.kind = *k;
    else throw InvalidSpec("kind must be one of lowpass, highpass, bandpass, bandstop, coupled, combline, uwb");
    if (auto fam = parse_family(f.family)) s.family = *fam;
    else throw InvalidSpec("family must be butterworth or chebyshev");
    if (auto t = parse_topology(f.topology)) s.topology = *t;
    else throw InvalidSpec("topology must be shunt_first or series_first");
    if (auto m = parse_method(f.method)) req.method = *m;
    else throw InvalidSpec("method must be emulate, simulate or both");

    s.return_loss_db = required(f.lr, "lr");
    if (uses_order_formula(s.kind)) s.insertion_loss_db = required(f.la, "la");
    s.z0_ohm = f.z0;

    switch (s.kind) {
        case FilterKind::lowpass: s.band_edges_ghz = {required(f.fp, "fp"), required(f.fs, "fs")}; break;
        case FilterKind::highpass: s.band_edges_ghz = {required(f.fs, "fs"), required(f.fp, "fp")}; break;
        case FilterKind::bandpass:
            s.band_edges_ghz = {required(f.f1, "f1"), required(f.f2, "f2"), required(f.fs, "fs")};
            break;
        case FilterKind::bandstop:
            s.band_edges_ghz = {required(f.f1, "f1"), required(f.f2, "f2"), required(f.fs1, "fs1"),
                                required(f.fs2, "fs2")};
            break;
        case FilterKind::coupled_bandpass:
            s.band_edges_ghz = {required(f.f0, "f0"), required(f.bw, "bw"), required(f.bws, "bws")};
            break;
        case FilterKind::combline:
            s.band_edges_ghz = {required(f.f0, "f0"), required(f.bw, "bw")};
            if (!f.order) throw InvalidSpec("order is required");
            s.order = f.order;
            break;
        case FilterKind::uwb_bandpass: s.band_edges_ghz = {required(f.f1, "f1"), required(f.f2, "f2")}; break;
    }
    if (!f.grid.empty()) s.grid = parse_grid(f.grid);
    return req;
}

int emit(const std::string& text, const std::string& path, std::ostream& out, std::ostream& err) {
    if (path.empty()) {
        out << text;
        return 0;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        err << error_json("internal", "cannot open " + path) << '\n';
        return 1;
    }
    file << text;
    return 0;
}

int run_design_command(const DesignFlags& flags, std::ostream& out, std::ostream& err) {
    try {
        const auto request = build_request(flags);
        SweepOptions options;
        options.db_floor = db_floor_from_env();
        const auto result = run_design(request, options);
        const std::string text = flags.format == "csv" ? to_csv(result) : to_json(result) + "\n";
        return emit(text, flags.out, out, err);
    } catch (const FilterError& e) {
        err << error_json(e) << '\n';
        return api_error_code(e.code()) == "internal" ? 1 : 2;
    } catch (const std::exception& e) {
        err << error_json("internal", e.what()) << '\n';
        return 1;
    }
}

int run_serve_command(const std::string& host, int port, std::ostream& out, std::ostream& err) {
    httplib::Server server;
    // Address reuse only: without SO_REUSEPORT a port held by another
    // process is a bind failure rather than a shared listener.
    server.set_socket_options([](socket_t sock) {
        int yes = 1;
        ::setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const char*>(&yes), sizeof yes);
    });
    service::register_routes(server, service::config_from_env());
    if (!server.bind_to_port(host, port)) {
        err << error_json("internal", "cannot bind " + host + ":" + std::to_string(port)) << '\n';
        return 2;
    }
    out << "listening on " << host << ':' << port << std::endl;
    return server.listen_after_bind() ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Microwave filter synthesis and analysis", "mwf"};
    app.require_subcommand(1);

    DesignFlags flags;
    auto* design = app.add_subcommand("design", "Synthesize a filter and sweep its response");
    design->add_option("--family", flags.family, "butterworth | chebyshev")->capture_default_str();
    design->add_option("--kind", flags.kind, "lowpass | highpass | bandpass | bandstop | coupled | combline | uwb")
        ->required();
    design->add_option("--la", flags.la, "Insertion loss at the stopband edge, dB");
    design->add_option("--lr", flags.lr, "Passband return loss, dB");
    design->add_option("--fp", flags.fp, "Passband edge, GHz");
    design->add_option("--fs", flags.fs, "Stopband edge, GHz");
    design->add_option("--f1", flags.f1, "Lower band edge, GHz");
    design->add_option("--f2", flags.f2, "Upper band edge, GHz");
    design->add_option("--fs1", flags.fs1, "Lower stopband edge (bandstop), GHz");
    design->add_option("--fs2", flags.fs2, "Upper stopband edge (bandstop), GHz");
    design->add_option("--f0", flags.f0, "Centre frequency, GHz");
    design->add_option("--bw", flags.bw, "Passband bandwidth, GHz");
    design->add_option("--bws", flags.bws, "Stopband bandwidth (coupled), GHz");
    design->add_option("--order", flags.order, "Filter order (combline only)");
    design->add_option("--z0", flags.z0, "System impedance, ohm")->capture_default_str();
    design->add_option("--topology", flags.topology, "shunt_first | series_first")->capture_default_str();
    design->add_option("--method", flags.method, "emulate | simulate | both")
        ->capture_default_str()
        ->check(CLI::IsMember({"emulate", "simulate", "both"}));
    design->add_option("--grid", flags.grid, "start,stop,step in GHz");
    design->add_option("--format", flags.format, "json | csv")
        ->capture_default_str()
        ->check(CLI::IsMember({"json", "csv"}));
    design->add_option("--out", flags.out, "Output path (default stdout)");

    auto* table = app.add_subcommand("table1", "Return loss to ripple table, 1..20 dB");
    std::string table_format = "csv";
    table->add_option("--format", table_format, "csv | json")
        ->capture_default_str()
        ->check(CLI::IsMember({"json", "csv"}));

    auto* serve = app.add_subcommand("serve", "Run the HTTP JSON API");
    int port = service::port_from_env(8080);
    std::string host = "127.0.0.1";
    serve->add_option("--port", port, "Listen port")->capture_default_str();
    serve->add_option("--host", host, "Listen address")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << error_json("invalid_spec", e.what()) << '\n';
        return 2;
    }

    if (design->parsed()) return run_design_command(flags, out, err);
    if (table->parsed()) {
        out << (table_format == "json" ? ripple_table_json() + "\n" : ripple_table_csv());
        return 0;
    }
    return run_serve_command(host, port, out, err);
}

}  // namespace mwf::cli
