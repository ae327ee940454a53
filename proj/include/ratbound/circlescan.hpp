#pragma once

#include <cstddef>
#include <vector>

#include "ratbound/parallel.hpp"
#include "ratbound/ratfun.hpp"

namespace ratbound {

/// Equispaced points radius * exp(2 pi i j / count), j = 0..count-1.
struct CircleGrid {
    double radius = 1.0;
    std::size_t count = 1024;

    CircleGrid() = default;
    /// Throws InvalidArgument unless radius > 0 and count is a power of two >= 64.
    CircleGrid(double radius, std::size_t count);

    static CircleGrid unit(std::size_t count) { return {1.0, count}; }

    double theta(std::size_t j) const;
    Complex point(std::size_t j) const;
};

inline constexpr std::size_t kCertifyGrid = 1024;
inline constexpr std::size_t kAcceptanceGrid = 4096;

struct CircleScanResult {
    double value = 0.0;           ///< extremum of |r| on the circle
    double arg_at = 0.0;          ///< theta in [0, 2 pi) where it is attained
    std::size_t grid_count = 0;
    bool refined = false;         ///< golden-section step was applied
    double certified_bound = 0.0; ///< half grid spacing times max |d|r|/dtheta| on the grid
};

/// |r| at every grid point. The parallel and serial paths fill the same values.
std::vector<double> modulus_on_grid(const RationalFunction& r, const CircleGrid& grid,
                                    Exec exec = Exec::Parallel);

/// Global max of |r| over the grid circle: coarse scan, then golden-section in
/// theta on the bracket around the best grid point. Throws PoleOnCircle.
CircleScanResult sup_modulus_on_circle(const RationalFunction& r, const CircleGrid& grid,
                                       Exec exec = Exec::Parallel);

/// Global min of |r| over the grid circle; returns exactly 0 with
/// refined = false once any sampled value drops below 1e-13.
CircleScanResult min_modulus_on_circle(const RationalFunction& r, const CircleGrid& grid,
                                       Exec exec = Exec::Parallel);

/// Zeros of p in |z| < k by the winding number of p(k e^{i theta}).
/// Starts at 256 samples and doubles until every phase step is below pi/2.
/// Throws ZeroOnContour if that never happens.
int count_zeros_in_disk(const Polynomial& p, double k, Exec exec = Exec::Parallel);

/// Applies the argument principle to the numerator only.
int count_zeros_in_disk(const RationalFunction& r, double k, Exec exec = Exec::Parallel);

/// Re(z r'(z) / r(z)) for |z| = 1. Throws NearZeroOfR when |r(z)| <= 1e-10.
double log_derivative_real_part(const RationalFunction& r, Complex z);

inline constexpr double kNearZeroOfR = 1e-10;

}  // namespace ratbound
