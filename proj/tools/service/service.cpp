#include "service.hpp"

#include <chrono>
#include <cstdlib>
#include <exception>
#include <httplib.h>
#include <string>

#include "mwfilter/design.hpp"
#include "mwfilter/version.hpp"

namespace mwf::service {

Config config_from_env() {
    Config c;
    if (const char* origin = std::getenv("MWF_CORS_ORIGIN")) c.cors_origin = origin;
    c.sweep.db_floor = db_floor_from_env();
    return c;
}

int port_from_env(int fallback) {
    const char* raw = std::getenv("MWF_PORT");
    if (raw == nullptr || *raw == '\0') return fallback;
    char* end = nullptr;
    const long v = std::strtol(raw, &end, 10);
    if (*end != '\0' || v <= 0 || v > 65535) return fallback;
    return static_cast<int>(v);
}

Reply handle_design(std::string_view body, const Config& config) {
    try {
        const auto started = std::chrono::steady_clock::now();
        const auto request = parse_request_json(body);
        validate(request.spec);
        if (request.spec.kind != FilterKind::combline) {
            const auto grid = resolved_grid(request.spec);
            if (grid.size() > config.max_grid_points) {
                throw InvalidSpec("grid must not exceed " + std::to_string(config.max_grid_points) + " points");
            }
        }
        const auto result = run_design(request, config.sweep);
        const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started);
        return {200, to_json(result, elapsed.count())};
    } catch (const FilterError& e) {
        const auto code = api_error_code(e.code());
        return {code == "internal" ? 500 : 400, error_json(e)};
    } catch (const std::exception& e) {
        return {500, error_json("internal", e.what())};
    }
}

Reply handle_health() {
    return {200, std::string(R"({"status":"ok","version":")") + kVersion + "\"}"};
}

void register_routes(httplib::Server& server, const Config& config) {
    const std::string origin = config.cors_origin;
    auto with_cors = [origin](httplib::Response& res) {
        if (origin.empty()) return;
        res.set_header("Access-Control-Allow-Origin", origin);
        res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
        res.set_header("Access-Control-Allow-Headers", "Content-Type");
    };

    server.Get("/api/v1/health", [with_cors](const httplib::Request&, httplib::Response& res) {
        const auto reply = handle_health();
        with_cors(res);
        res.status = reply.status;
        res.set_content(reply.body, "application/json");
    });

    server.Post("/api/v1/design", [config, with_cors](const httplib::Request& req, httplib::Response& res) {
        const auto reply = handle_design(req.body, config);
        with_cors(res);
        res.status = reply.status;
        res.set_content(reply.body, "application/json");
    });

    server.Options(R"(/api/v1/.*)", [with_cors](const httplib::Request&, httplib::Response& res) {
        with_cors(res);
        res.status = 204;
    });
}

}  // namespace mwf::service
