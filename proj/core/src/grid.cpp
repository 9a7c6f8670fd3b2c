#include "mwfilter/grid.hpp"

#include <cmath>

#include "mwfilter/errors.hpp"

namespace mwf {

std::size_t SweepGrid::point_count(double start_ghz, double stop_ghz, double step_ghz) noexcept {
    if (!(step_ghz > 0.0) || !(stop_ghz > start_ghz)) return 0;
    // Tolerate representation error so 0.01:0.01:2 yields 200 points, not 199.
    const double span = (stop_ghz - start_ghz) / step_ghz;
    return static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
}

SweepGrid::SweepGrid(double start_ghz, double stop_ghz, double step_ghz)
    : start_(start_ghz), stop_(stop_ghz), step_(step_ghz), count_(0) {
    if (!std::isfinite(start_ghz) || !std::isfinite(stop_ghz) || !std::isfinite(step_ghz))
        throw InvalidSpec("grid values must be finite");
    if (!(start_ghz > 0.0)) throw InvalidSpec("grid start must be positive");
    if (!(stop_ghz > start_ghz)) throw InvalidSpec("grid stop must exceed grid start");
    if (!(step_ghz > 0.0)) throw InvalidSpec("grid step must be positive");
    count_ = point_count(start_ghz, stop_ghz, step_ghz);
}

}  // namespace mwf
