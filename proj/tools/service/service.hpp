#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "mwfilter/network.hpp"

namespace httplib {
class Server;
}

namespace mwf::service {

struct Config {
    std::string cors_origin;                  // empty disables CORS headers
    std::size_t max_grid_points = 1'000'000;  // larger sweeps are rejected
    SweepOptions sweep;
};

/// Reads MWF_CORS_ORIGIN and MWF_DB_FLOOR.
Config config_from_env();

/// Port from MWF_PORT, else `fallback`.
int port_from_env(int fallback = 8080);

struct Reply {
    int status = 200;
    std::string body;
};

/// POST /api/v1/design
Reply handle_design(std::string_view body, const Config& config);

/// GET /api/v1/health
Reply handle_health();

/// Installs the API routes (and CORS preflight when configured).
void register_routes(httplib::Server& server, const Config& config);

}  // namespace mwf::service
