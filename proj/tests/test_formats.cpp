#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>

#include "mstd/errors.hpp"
#include "mstd/format.hpp"
#include "oracles.hpp"

using namespace mstd;
using mstd::testing::random_set;

namespace {

IntSet S(std::vector<std::int64_t> v) { return IntSet(std::move(v)); }

}  // namespace

TEST_CASE("set literal parsing") {
    CHECK(parse_set_literal("0,2,3,4,7,11,12,14").set ==
          S({0, 2, 3, 4, 7, 11, 12, 14}));
    CHECK(parse_set_literal(" 3 , -1 ,2 ").set == S({-1, 2, 3}));
    CHECK(parse_set_literal("5").set == S({5}));

    const ParsedSet dup = parse_set_literal("1,2,2,3");
    CHECK(dup.set == S({1, 2, 3}));
    REQUIRE(dup.warnings.size() == 1);
    CHECK(dup.warnings[0] == "duplicate element 2");
}

TEST_CASE("interval shorthand parsing") {
    CHECK(parse_set_literal("[0,16] \\ {14,15}").set ==
          sumset(S({0, 1, 3, 4, 5, 8}), S({0, 1, 3, 4, 5, 8})));
    CHECK(parse_set_literal("[0,3]").set == S({0, 1, 2, 3}));
    CHECK(parse_set_literal("[-2,2] \\ {0}").set == S({-2, -1, 1, 2}));
}

TEST_CASE("parse errors name the offending token and position") {
    CHECK_THROWS_AS(parse_set_literal("1,2,x,4"), parse_error);
    try {
        parse_set_literal("1,2,x,4");
    } catch (const parse_error& e) {
        CHECK(e.position() == 4);
        CHECK(std::string(e.what()).find("x") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_set_literal(""), parse_error);
    CHECK_THROWS_AS(parse_set_literal("1,2,"), parse_error);
    CHECK_THROWS_AS(parse_set_literal("[3,1]"), parse_error);
}

TEST_CASE("set files: one integer per line, comments ignored") {
    const std::string path = "/tmp/mstd_test_setfile.txt";
    {
        std::ofstream out(path, std::ios::trunc);
        out << "# an MSTD set\n0\n2\n3\n\n4\n7\n11\n12\n14\n";
    }
    CHECK(parse_set_file(path).set == S({0, 2, 3, 4, 7, 11, 12, 14}));
    std::remove(path.c_str());
    CHECK_THROWS_AS(parse_set_file("/tmp/mstd_no_such_file.txt"), parse_error);
}

TEST_CASE("pretty formatting uses the interval shorthand near intervals") {
    CHECK(format_set_pretty(sumset(S({0, 1, 3, 4, 5, 8}), S({0, 1, 3, 4, 5, 8}))) ==
          "[0,16] \\ {14,15}");
    CHECK(format_set_pretty(S({0, 1, 2, 3})) == "[0,3]");
    CHECK(format_set_pretty(S({0, 2, 3})) == "[0,3] \\ {1}");
    CHECK(format_set_pretty(S({0, 5, 9})) == "0,5,9");
    CHECK(format_set_pretty(S({7})) == "7");
}

TEST_CASE("printed sets always re-parse to the identical set") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 300; ++trial) {
        const IntSet a = random_set(rng, 1 + int(rng() % 10), -80, 80);
        CHECK(parse_set_literal(format_set(a)).set == a);
        CHECK(parse_set_literal(format_set_pretty(a)).set == a);
    }
}
