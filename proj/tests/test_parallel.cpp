#include <doctest.h>

#include <cstring>

#include "ratbound/harness.hpp"

using namespace ratbound;

namespace {

bool same_bits(const std::vector<double>& a, const std::vector<double>& b) {
    return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

}  // namespace

TEST_CASE("serial and parallel kernels agree bit for bit") {
    GeneratorSpec spec;
    spec.n = 4;
    spec.t = 4;
    spec.zero_region = ZeroLocation::outside(1.5);
    spec.seed = 3;
    spec.count = 8;
    for (const auto& r : generate(spec)) {
        const auto grid = CircleGrid::unit(2048);
        CHECK(same_bits(modulus_on_grid(r, grid, Exec::Serial), modulus_on_grid(r, grid, Exec::Parallel)));

        const auto s = sup_modulus_on_circle(r, grid, Exec::Serial);
        const auto p = sup_modulus_on_circle(r, grid, Exec::Parallel);
        CHECK(s.value == p.value);
        CHECK(s.arg_at == p.arg_at);

        const auto ctx = make_context(TheoremId::MainUpper, r, 1.5, 1024, Exec::Serial);
        CHECK(same_bits(margins_on_grid(TheoremId::MainUpper, ctx, r, grid, Exec::Serial),
                        margins_on_grid(TheoremId::MainUpper, ctx, r, grid, Exec::Parallel)));

        const auto vs = certify(TheoremId::MainUpper, r, 1.5, 1024, Exec::Serial);
        const auto vp = certify(TheoremId::MainUpper, r, 1.5, 1024, Exec::Parallel);
        CHECK(vs.min_margin == vp.min_margin);
        CHECK(vs.worst_theta == vp.worst_theta);

        CHECK(count_zeros_in_disk(r.numer(), 2.0, Exec::Serial) == count_zeros_in_disk(r.numer(), 2.0, Exec::Parallel));
    }
}

TEST_CASE("campaign reports do not depend on the execution policy") {
    GeneratorSpec spec;
    spec.n = 2;
    spec.t = 2;
    spec.zero_region = ZeroLocation::inside(0.5);
    spec.seed = 12;
    spec.count = 50;
    CHECK(dump_report(run_campaign(spec, TheoremId::MainLower, 512, Exec::Serial)) ==
          dump_report(run_campaign(spec, TheoremId::MainLower, 512, Exec::Parallel)));
}

TEST_CASE("parallel loops rethrow the lowest failing index") {
    for (int rep = 0; rep < 20; ++rep) {
        try {
            for_each_index(1000, Exec::Parallel, [](std::size_t i) {
                if (i % 97 == 13) throw InvalidArgument(std::to_string(i));
            });
            FAIL("no exception");
        } catch (const InvalidArgument& e) {
            CHECK(std::string(e.what()) == "13");
        }
    }
}
