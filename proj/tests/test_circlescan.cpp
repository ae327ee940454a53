#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "ratbound/blaschke.hpp"
#include "ratbound/circlescan.hpp"

using namespace ratbound;

TEST_CASE("CircleGrid validation") {
    CHECK_THROWS_AS(CircleGrid(1.0, 32), InvalidArgument);
    CHECK_THROWS_AS(CircleGrid(1.0, 100), InvalidArgument);
    CHECK_THROWS_AS(CircleGrid(0.0, 64), InvalidArgument);
    CHECK_NOTHROW(CircleGrid(0.5, 64));
}

TEST_CASE("sup_modulus_on_circle") {
    SUBCASE("1/(z-2)") {
        const auto r = RationalFunction::from_roots({}, {1, 0}, {Complex{2, 0}});
        // |e^{i theta} - 2|^2 = 5 - 4 cos(theta) is smallest at theta = 0.
        const auto dense = oracle::dense_circle_extremum([&](Complex z) { return std::abs(r(z)); }, 1.0, 1 << 18, true);
        const auto res = sup_modulus_on_circle(r, CircleGrid::unit(1024));
        CHECK(res.value == doctest::Approx(dense.value).epsilon(1e-14));
        CHECK(res.value == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(std::min(res.arg_at, 2 * std::numbers::pi - res.arg_at) < 1e-6);
        CHECK(res.grid_count == 1024);
    }
    SUBCASE("constant") {
        const auto r = RationalFunction::from_roots({}, {0.6, -0.8}, {});
        CHECK(sup_modulus_on_circle(r, CircleGrid::unit(64)).value == doctest::Approx(1.0));
    }
    SUBCASE("extremal shape k = 1, t = n = 2, a = 3") {
        const auto r = RationalFunction::from_roots({Complex{-1, 0}, Complex{-1, 0}}, {1, 0},
                                                    {Complex{3, 0}, Complex{3, 0}});
        CHECK(sup_modulus_on_circle(r, CircleGrid::unit(1024)).value == doctest::Approx(1.0).epsilon(1e-14));
    }
    SUBCASE("refinement beats an off-grid maximum") {
        // Pole placed between grid points.
        const Complex a = std::polar(1.3, 2.0 * std::numbers::pi * 10.5 / 64.0);
        const auto r = RationalFunction::from_roots({}, {1, 0}, {a});
        const auto coarse = modulus_on_grid(r, CircleGrid::unit(64));
        const auto res = sup_modulus_on_circle(r, CircleGrid::unit(64));
        CHECK(res.refined);
        CHECK(res.value >= *std::max_element(coarse.begin(), coarse.end()));
        CHECK(res.value == doctest::Approx(1.0 / 0.3).epsilon(1e-12));
        CHECK(res.certified_bound > 0.0);
    }
    SUBCASE("pole on the circle") {
        const auto r = RationalFunction::from_roots({}, {1, 0}, {Complex{2, 0}});
        CHECK_THROWS_AS(sup_modulus_on_circle(r, CircleGrid(2.0, 64)), PoleOnCircle);
    }
}

TEST_CASE("min_modulus_on_circle") {
    SUBCASE("zero on the circle gives exactly 0") {
        for (int t : {1, 2, 4}) {
            const double k = 1.5;
            const auto r = RationalFunction::from_roots(std::vector<Complex>(static_cast<std::size_t>(t), Complex{-k, 0}),
                                                        {1, 0}, std::vector<Complex>(4, Complex{3, 0}));
            const auto res = min_modulus_on_circle(r, CircleGrid(k, 1024));
            CHECK(res.value == 0.0);
            CHECK_FALSE(res.refined);
        }
    }
    SUBCASE("zero between grid points is found by refinement") {
        const Complex b = std::polar(1.0, 2.0 * std::numbers::pi * 7.37 / 256.0);
        const auto r = RationalFunction::from_roots({b}, {1, 0}, {Complex{2.5, 0.5}});
        CHECK(min_modulus_on_circle(r, CircleGrid::unit(256)).value == 0.0);
    }
    SUBCASE("1/(z-2)") {
        const auto r = RationalFunction::from_roots({}, {1, 0}, {Complex{2, 0}});
        const auto res = min_modulus_on_circle(r, CircleGrid::unit(1024));
        CHECK(res.value == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
        CHECK(res.arg_at == doctest::Approx(std::numbers::pi).epsilon(1e-6));
    }
    SUBCASE("constant") {
        const auto r = RationalFunction::from_roots({}, {0, 2}, {});
        CHECK(min_modulus_on_circle(r, CircleGrid(0.5, 64)).value == doctest::Approx(2.0));
    }
}

TEST_CASE("scan results are stable under grid doubling") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Complex> poles, zeros;
        for (int j = 0; j < 4; ++j) poles.push_back(oracle::random_in_annulus(rng, 1.1, 5.0));
        for (int j = 0; j < 3; ++j) zeros.push_back(oracle::random_in_annulus(rng, 0.0, 3.0));
        const auto r = RationalFunction::from_roots(zeros, {1, 0}, poles);
        const auto s1 = sup_modulus_on_circle(r, CircleGrid::unit(1024));
        const auto s2 = sup_modulus_on_circle(r, CircleGrid::unit(2048));
        CHECK(std::abs(s1.value - s2.value) <= 1e-9 * std::max(1.0, s1.value));
        const auto m1 = min_modulus_on_circle(r, CircleGrid::unit(1024));
        const auto m2 = min_modulus_on_circle(r, CircleGrid::unit(2048));
        CHECK(std::abs(m1.value - m2.value) <= 1e-9 * std::max(1.0, s1.value));
    }
}

TEST_CASE("count_zeros_in_disk") {
    CHECK(count_zeros_in_disk(Polynomial({Complex{-0.25, 0}, Complex{}, Complex{1, 0}}), 1.0) == 2);
    CHECK(count_zeros_in_disk(Polynomial(oracle::expand({Complex{2, 0}, Complex{2, 0}, Complex{2, 0}}, {1, 0})), 1.0) == 0);
    CHECK(count_zeros_in_disk(Polynomial::constant({3, 0}), 1.0) == 0);
    CHECK_THROWS_AS(count_zeros_in_disk(Polynomial({Complex{-1, 0}, Complex{1, 0}}), 1.0), ZeroOnContour);

    SUBCASE("random root sets against the root list") {
        std::mt19937_64 rng(8);
        for (int trial = 0; trial < 200; ++trial) {
            const int deg = 1 + trial % 8;
            const double k = 0.5 + (trial % 5) * 0.4;
            std::vector<Complex> roots;
            while (static_cast<int>(roots.size()) < deg) {
                const Complex b = oracle::random_in_annulus(rng, 0.0, 3.0);
                if (std::abs(std::abs(b) - k) >= 1e-3) roots.push_back(b);
            }
            const int expected = static_cast<int>(
                std::count_if(roots.begin(), roots.end(), [&](Complex b) { return std::abs(b) < k; }));
            CHECK(count_zeros_in_disk(Polynomial(oracle::expand(roots, {1, 0})), k) == expected);
        }
    }

    SUBCASE("rational overload counts numerator zeros even with poles inside the disk") {
        const auto r = RationalFunction::from_roots({Complex{0.2, 0}, Complex{1.8, 0}}, {1, 0},
                                                    {Complex{1.5, 0}, Complex{0, 3}});
        CHECK(count_zeros_in_disk(r, 2.0) == 2);
        CHECK(count_zeros_in_disk(r, 1.0) == 1);
    }
}

TEST_CASE("log_derivative_real_part") {
    SUBCASE("r = 1/w gives -(n - |B'|)/2") {
        std::mt19937_64 rng(4);
        for (int trial = 0; trial < 30; ++trial) {
            const int n = 1 + trial % 6;
            std::vector<Complex> poles;
            for (int j = 0; j < n; ++j) poles.push_back(oracle::random_in_annulus(rng, 1.1, 5.0));
            const auto r = RationalFunction::from_roots({}, {1, 0}, poles);
            const BlaschkeProduct b(r.poles());
            for (int j = 0; j < 256; ++j) {
                const Complex z = std::polar(1.0, 2.0 * std::numbers::pi * j / 256.0);
                // Re(z w'/w) computed directly from the pole sum, independent of r.
                const double re_w = r.poles().log_derivative_times_z(z).real();
                CHECK(std::abs(re_w - (n - b.deriv_modulus_on_unit_circle(z)) / 2.0) <= 1e-10);
                CHECK(std::abs(log_derivative_real_part(r, z) + re_w) <= 1e-10);
            }
        }
    }
    SUBCASE("n = 1, a = 2, z = 1 by hand") {
        const auto r = RationalFunction::from_roots({}, {1, 0}, {Complex{2, 0}});
        // Re(z w'/w) = 1/(1-2) = -1 and (n - |B'(1)|)/2 = (1 - 3)/2 = -1.
        CHECK(r.poles().log_derivative_times_z({1, 0}).real() == doctest::Approx(-1.0));
        CHECK(log_derivative_real_part(r, {1, 0}) == doctest::Approx(1.0));
    }
    SUBCASE("near a zero of r") {
        const auto r = RationalFunction::from_roots({Complex{1, 0}}, {1, 0}, {Complex{2, 0}});
        CHECK_THROWS_AS(log_derivative_real_part(r, {1, 0}), NearZeroOfR);
    }
}

TEST_CASE("Mobius image bounds Re(z/(z-b))") {
    // For |z| = 1: |b| >= k >= 1 gives Re <= 1/(1+k); |b| <= k <= 1 gives Re >= 1/(1+k).
    std::mt19937_64 rng(10);
    for (double k : {1.0, 1.5, 2.0, 3.0}) {
        for (int trial = 0; trial < 40; ++trial) {
            const Complex b = trial == 0 ? Complex{k, 0} : oracle::random_in_annulus(rng, k, k + 3.0);
            for (int j = 0; j < 512; ++j) {
                const Complex z = std::polar(1.0, 2.0 * std::numbers::pi * (j + 0.5) / 512.0);
                if (std::abs(z - b) < 1e-6) continue;
                CHECK((z / (z - b)).real() <= 1.0 / (1.0 + k) + 1e-12);
            }
        }
    }
    for (double k : {0.3, 0.7, 1.0}) {
        for (int trial = 0; trial < 40; ++trial) {
            const Complex b = trial == 0 ? Complex{k, 0} : oracle::random_in_annulus(rng, 0.0, k);
            for (int j = 0; j < 512; ++j) {
                const Complex z = std::polar(1.0, 2.0 * std::numbers::pi * (j + 0.5) / 512.0);
                if (std::abs(z - b) < 1e-6) continue;
                CHECK((z / (z - b)).real() >= 1.0 / (1.0 + k) - 1e-12);
            }
        }
    }
}

TEST_CASE("half-plane criterion Re(z) <= 1/2 iff |z| <= |z - 1|") {
    std::mt19937_64 rng(11);
    std::normal_distribution<double> g(0.5, 2.0);
    for (int i = 0; i < 1000; ++i) {
        const Complex z{g(rng), g(rng)};
        const double lhs = std::abs(z);
        const double rhs = std::abs(z - 1.0);
        if (std::abs(z.real() - 0.5) <= 1e-14 || std::abs(lhs - rhs) <= 1e-14) continue;
        CHECK((z.real() <= 0.5) == (lhs <= rhs));
        CHECK((z.real() < 0.5) == (lhs < rhs));
        CHECK((z.real() >= 0.5) == (lhs >= rhs));
    }
    // Ties sit on the line Re z = 1/2.
    for (double y : {-3.0, 0.0, 2.5}) {
        const Complex z{0.5, y};
        CHECK(std::abs(std::abs(z) - std::abs(z - 1.0)) <= 1e-14);
    }
}
