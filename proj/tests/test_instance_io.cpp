#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "ratbound/instance_io.hpp"

using namespace ratbound;

TEST_CASE("parse_instance") {
    const auto inst = parse_instance(R"({"poles": [[3, 0], [3, 0]], "zeros": [[-1, 0], [-1, 0]], "leading": [1, 0], "k": 1})");
    CHECK(inst.r.n() == 2);
    CHECK(inst.r.t() == 2);
    REQUIRE(inst.k.has_value());
    CHECK(*inst.k == 1.0);
    CHECK(std::abs(inst.r(Complex{1, 0}) - Complex{1, 0}) < 1e-15);

    const auto no_k = parse_instance(R"({"poles": [[0, 2]], "zeros": [], "leading": [0, 1]})");
    CHECK_FALSE(no_k.k.has_value());
    CHECK(no_k.r.t() == 0);
}

TEST_CASE("malformed instances") {
    for (const char* text : {
             "",
             "[1, 2]",
             R"({"zeros": [], "leading": [1, 0]})",
             R"({"poles": [[2, 0]], "zeros": [], "leading": [1]})",
             R"({"poles": [[2, 0]], "zeros": [[1, "x"]], "leading": [1, 0]})",
             R"({"poles": [[2, 0]], "zeros": [], "leading": [1, 0], "k": -1})",
             R"({"poles": [[2, 0]], "zeros": [], "leading": [1, 0], "k": "1"})",
             R"({"poles": [[0.5, 0]], "zeros": [], "leading": [1, 0]})",
             R"({"poles": [[2, 0]], "zeros": [[0, 0], [1, 1]], "leading": [1, 0]})",
             R"({"poles": [[2, 0]], "zeros": [[2, 0]], "leading": [1, 0]})",
             R"({"poles": [[2, 0]], "zeros": [], "leading": [0, 0]})",
         }) {
        INFO(text);
        CHECK_THROWS_AS(parse_instance(text), ParseError);
    }
    CHECK_THROWS_AS(load_instance("/nonexistent/instance.json"), ParseError);
}

TEST_CASE("dump and load round trip") {
    const auto r = RationalFunction::from_roots({Complex{0.3, -0.7}, Complex{1.9, 2.2}}, std::polar(1.0, 0.77),
                                                {Complex{1.234567890123, -2.5}, Complex{0, 1.5}});
    const auto path = std::filesystem::temp_directory_path() / "ratbound_io_roundtrip.json";
    {
        std::ofstream out(path);
        out << dump_instance(r, 0.8);
    }
    const auto back = load_instance(path);
    std::filesystem::remove(path);
    REQUIRE(back.k.has_value());
    CHECK(*back.k == 0.8);
    for (std::size_t j = 0; j < 2; ++j) {
        CHECK(back.r.zeros()[j] == r.zeros()[j]);
        CHECK(back.r.poles().poles()[j] == r.poles().poles()[j]);
    }
    for (double th : {0.0, 1.0, 4.0}) {
        const Complex z = std::polar(1.0, th);
        CHECK(back.r(z) == r(z));
    }
}
