#include <doctest.h>

#include <set>

#include "ratbound/philox.hpp"

using ratbound::Philox4x32;
using ratbound::PhiloxStream;

TEST_CASE("Philox4x32-10 known-answer vectors") {
    using C = Philox4x32::Counter;
    using K = Philox4x32::Key;
    CHECK(Philox4x32::block(C{0, 0, 0, 0}, K{0, 0}) == C{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u});
    CHECK(Philox4x32::block(C{0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu}, K{0xffffffffu, 0xffffffffu}) ==
          C{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu});
    CHECK(Philox4x32::block(C{0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u}, K{0xa4093822u, 0x299f31d0u}) ==
          C{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u});
}

TEST_CASE("streams are deterministic and distinct") {
    PhiloxStream a(7, 3), b(7, 3), c(7, 4), d(8, 3);
    std::set<std::uint32_t> seen;
    bool differs_c = false, differs_d = false;
    for (int i = 0; i < 64; ++i) {
        const auto x = a.next_u32();
        CHECK(x == b.next_u32());
        differs_c |= x != c.next_u32();
        differs_d |= x != d.next_u32();
        seen.insert(x);
    }
    CHECK(differs_c);
    CHECK(differs_d);
    CHECK(seen.size() > 60);
}

TEST_CASE("uniform draws lie in [0, 1) with a sensible mean") {
    PhiloxStream s(123, 0);
    double sum = 0.0;
    const int count = 100000;
    for (int i = 0; i < count; ++i) {
        const double u = s.uniform();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        sum += u;
    }
    CHECK(sum / count == doctest::Approx(0.5).epsilon(0.01));
}
