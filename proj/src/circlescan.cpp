#include "ratbound/circlescan.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "ratbound/blaschke.hpp"

namespace ratbound {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kPoleClearance = 1e-9;
constexpr double kZeroFloor = 1e-13;
constexpr double kGoldenWidth = 1e-12;

double wrap_angle(double theta) {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    return t;
}

void require_clear_circle(const RationalFunction& r, double radius) {
    for (const auto& a : r.poles().poles())
        if (std::abs(std::abs(a) - radius) < kPoleClearance)
            throw PoleOnCircle("a pole lies on the scan circle");
}

enum class Orientation { Max, Min };

struct Probe {
    double theta;
    double value;
};

// Golden-section search for the extremum of |r(radius e^{i theta})| on [lo, hi].
Probe golden_refine(const RationalFunction& r, double radius, double lo, double hi,
                    Orientation orient) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    auto score = [&](double th) {
        const double v = std::abs(r(std::polar(radius, th)));
        return orient == Orientation::Max ? v : -v;
    };
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = score(x1);
    double f2 = score(x2);
    while (hi - lo >= kGoldenWidth) {
        if (f1 >= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = score(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = score(x2);
        }
        // Stop once the interval can no longer shrink in double precision.
        if (x1 >= x2) break;
    }
    const Probe best = f1 >= f2 ? Probe{x1, f1} : Probe{x2, f2};
    return {best.theta, orient == Orientation::Max ? best.value : -best.value};
}

CircleScanResult scan(const RationalFunction& r, const CircleGrid& grid, Exec exec,
                      Orientation orient) {
    require_clear_circle(r, grid.radius);
    const auto values = modulus_on_grid(r, grid, exec);

    std::vector<double> slopes(grid.count);
    for_each_index(grid.count, exec, [&](std::size_t j) {
        slopes[j] = grid.radius * std::abs(r.derivative(grid.point(j)));
    });

    std::size_t best = 0;
    for (std::size_t j = 1; j < values.size(); ++j) {
        const bool better = orient == Orientation::Max ? values[j] > values[best]
                                                       : values[j] < values[best];
        if (better) best = j;
    }
    const double max_slope = *std::max_element(slopes.begin(), slopes.end());
    const double spacing = kTwoPi / static_cast<double>(grid.count);

    CircleScanResult out;
    out.grid_count = grid.count;
    out.value = values[best];
    out.arg_at = grid.theta(best);
    out.certified_bound = 0.5 * spacing * max_slope;

    if (orient == Orientation::Min && out.value < kZeroFloor) {
        out.value = 0.0;
        return out;
    }

    const double center = grid.theta(best);
    const Probe refined = golden_refine(r, grid.radius, center - spacing, center + spacing, orient);
    out.refined = true;
    const bool improves = orient == Orientation::Max ? refined.value > out.value
                                                     : refined.value < out.value;
    if (improves) {
        out.value = refined.value;
        out.arg_at = wrap_angle(refined.theta);
    }
    if (orient == Orientation::Min && out.value < kZeroFloor) {
        out.value = 0.0;
        out.refined = false;
    }
    return out;
}

}  // namespace

CircleGrid::CircleGrid(double r, std::size_t n) : radius(r), count(n) {
    if (!(radius > 0.0) || !std::isfinite(radius)) throw InvalidArgument("grid radius must be positive");
    if (count < 64 || !std::has_single_bit(count))
        throw InvalidArgument("grid count must be a power of two >= 64");
}

double CircleGrid::theta(std::size_t j) const {
    return kTwoPi * static_cast<double>(j) / static_cast<double>(count);
}

Complex CircleGrid::point(std::size_t j) const { return std::polar(radius, theta(j)); }

std::vector<double> modulus_on_grid(const RationalFunction& r, const CircleGrid& grid, Exec exec) {
    std::vector<double> out(grid.count);
    for_each_index(grid.count, exec, [&](std::size_t j) { out[j] = std::abs(r(grid.point(j))); });
    return out;
}

CircleScanResult sup_modulus_on_circle(const RationalFunction& r, const CircleGrid& grid, Exec exec) {
    return scan(r, grid, exec, Orientation::Max);
}

CircleScanResult min_modulus_on_circle(const RationalFunction& r, const CircleGrid& grid, Exec exec) {
    return scan(r, grid, exec, Orientation::Min);
}

int count_zeros_in_disk(const Polynomial& p, double k, Exec exec) {
    if (p.is_zero()) throw InvalidArgument("count_zeros_in_disk: zero polynomial");
    if (!(k > 0.0)) throw InvalidArgument("count_zeros_in_disk: radius must be positive");
    if (p.degree() == 0) return 0;

    constexpr std::size_t kStart = 256;
    constexpr std::size_t kMax = std::size_t{1} << 22;
    const double floor = 1e-300;
    for (std::size_t count = kStart; count <= kMax; count *= 2) {
        std::vector<Complex> values(count);
        for_each_index(count, exec, [&](std::size_t j) {
            values[j] = p(std::polar(k, kTwoPi * static_cast<double>(j) / static_cast<double>(count)));
        });
        bool hit_zero = false;
        for (const auto& v : values)
            if (std::abs(v) <= floor) hit_zero = true;
        if (hit_zero) throw ZeroOnContour("polynomial vanishes on the contour");

        double total = 0.0;
        bool fine_enough = true;
        for (std::size_t j = 0; j < count; ++j) {
            const double step = std::arg(values[(j + 1) % count] / values[j]);
            if (std::abs(step) >= std::numbers::pi / 2.0) {
                fine_enough = false;
                break;
            }
            total += step;
        }
        if (fine_enough) return static_cast<int>(std::lround(total / kTwoPi));
    }
    throw ZeroOnContour("phase increments stay too large; a zero is on or near the contour");
}

int count_zeros_in_disk(const RationalFunction& r, double k, Exec exec) {
    return count_zeros_in_disk(r.numer(), k, exec);
}

double log_derivative_real_part(const RationalFunction& r, Complex z) {
    require_unit_circle(z);
    const Complex value = r(z);
    if (std::abs(value) <= kNearZeroOfR) throw NearZeroOfR("r(z) is too close to zero");
    return std::real(z * r.derivative(z) / value);
}

}  // namespace ratbound
