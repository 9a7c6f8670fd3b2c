#pragma once

#include <cstddef>
#include <numbers>

namespace mwf {

/// Angular frequency in rad/ns for a frequency in GHz. With this convention
/// impedance-scaled element formulas yield nH and nF directly.
constexpr double angular_ghz(double f_ghz) noexcept { return 2.0 * std::numbers::pi * f_ghz; }

/// Uniform frequency grid in GHz; points are start + i*step, i < size().
class SweepGrid {
public:
    /// Throws InvalidSpec unless 0 < start < stop and step > 0.
    SweepGrid(double start_ghz, double stop_ghz, double step_ghz);

    double start_ghz() const noexcept { return start_; }
    double stop_ghz() const noexcept { return stop_; }
    double step_ghz() const noexcept { return step_; }

    std::size_t size() const noexcept { return count_; }
    double at(std::size_t i) const noexcept { return start_ + static_cast<double>(i) * step_; }

    /// Point count without constructing; used for resource guards before allocation.
    static std::size_t point_count(double start_ghz, double stop_ghz, double step_ghz) noexcept;

    friend bool operator==(const SweepGrid&, const SweepGrid&) = default;

private:
    double start_;
    double stop_;
    double step_;
    std::size_t count_;
};

}  // namespace mwf
