#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "helpers.hpp"
#include "polysurf/polysurf.hpp"

using namespace polysurf;

namespace {

// Face-index bitmask of the faces of x whose side-label multiset equals
// a triangle of the (integer-labeled) chain fixture.
BitChain chain_fixture_mask(const CellComplex& x, const PolygonalPresentation& fixture) {
    BitChain mask(static_cast<int>(x.faces.size()));
    for (const auto& t : fixture.triangles) {
        auto want = t.sorted_sides();
        int hit = -1;
        for (std::size_t f = 0; f < x.faces.size(); ++f) {
            std::array<int, 3> got{};
            for (int k = 0; k < 3; ++k) got[k] = x.edges[x.faces[f].sides[k]].label;
            std::sort(got.begin(), got.end());
            if (got == want) {
                REQUIRE(hit == -1);  // the row determines a unique face
                hit = static_cast<int>(f);
            }
        }
        REQUIRE(hit >= 0);
        mask.set(hit);
    }
    return mask;
}

}  // namespace

TEST_CASE("T1 has exactly one 2-cycle, by brute force and kernel") {
    auto x = build_one_vertex_complex(fixtures::t1());
    for (auto cycles : {two_cycles_bruteforce(x), two_cycles_kernel(x)}) {
        REQUIRE(cycles.size() == 1);
        CHECK(cycles[0].length == 6);
        CHECK(format_bitstring(cycles[0]) == "101101000000011");
    }
}

TEST_CASE("single triangle has no 2-cycles") {
    auto x = build_one_vertex_complex(parse_presentation_text("1 2 3"));
    CHECK(two_cycles_bruteforce(x).empty());
    CHECK(two_cycles_kernel(x).empty());
}

TEST_CASE("brute force rejects oversized complexes") {
    std::ostringstream big;
    for (int i = 1; i <= 25; ++i) big << i << ' ' << i << ' ' << i + 1 << "\n";
    auto x = build_one_vertex_complex(parse_presentation_text(big.str()));
    CHECK_THROWS_AS(two_cycles_bruteforce(x), std::invalid_argument);
    CHECK_NOTHROW(two_cycles_bruteforce(x, 25));
}

TEST_CASE("method agreement and structural laws on random complexes") {
    std::mt19937 rng(23);
    for (int iter = 0; iter < 120; ++iter) {
        auto x = build_one_vertex_complex(testutil::random_presentation(rng, 12, 8));
        auto brute = two_cycles_bruteforce(x, 20);
        auto kernel = two_cycles_kernel(x);
        CHECK(brute == kernel);

        // count law 2^k - 1
        std::size_t n = brute.size();
        CHECK(((n + 1) & n) == 0);

        // closure under symmetric difference
        auto all = testutil::bitstring_set(brute);
        for (std::size_t i = 0; i < n && i < 6; ++i)
            for (std::size_t j = i + 1; j < n && j < 6; ++j) {
                auto sum = brute[i].chain ^ brute[j].chain;
                if (sum.any()) CHECK(all.count(sum.to_bitstring()) == 1);
            }
    }
}

TEST_CASE("cycles_via_link equals the kernel set on the cover of T1") {
    auto y = build_cover_complex(cyclic_triple_cover(fixtures::t1()));
    auto kernel = two_cycles_kernel(y);
    CHECK(kernel.size() == 7);
    for (int v = 0; v < 3; ++v) CHECK(cycles_via_link(y, v) == kernel);

    // the kernel contains the three integer-labeled chain fixtures
    auto all = testutil::bitstring_set(kernel);
    for (int i = 1; i <= 3; ++i) {
        auto mask = chain_fixture_mask(y, fixtures::g1_cover_chain(i));
        CHECK(all.count(mask.to_bitstring()) == 1);
    }

    // all three lifts of one base face never form part of a 2-cycle
    BitChain three_lifts(45);
    for (int s = 0; s < 3; ++s) three_lifts.set(s);
    CHECK_FALSE(is_two_cycle(y, three_lifts));
}

TEST_CASE("cycles_via_link on random covers agrees with brute force") {
    std::mt19937 rng(31);
    for (int iter = 0; iter < 40; ++iter) {
        auto y = build_cover_complex(cyclic_triple_cover(testutil::random_presentation(rng, 6, 6)));
        auto brute = two_cycles_bruteforce(y, 20);
        CHECK(two_cycles_kernel(y) == brute);
        for (int v = 0; v < 3; ++v) CHECK(cycles_via_link(y, v) == brute);
    }
}

TEST_CASE("cycles_via_link preconditions") {
    auto x = build_one_vertex_complex(fixtures::t1());
    CHECK_THROWS_AS(cycles_via_link(x, 0), std::invalid_argument);
}

TEST_CASE("bitstring format and parse") {
    auto x = build_one_vertex_complex(fixtures::t1());
    auto parsed = parse_bitstring("101101000000011", x);
    CHECK(parsed.is_cycle);
    CHECK(parsed.cycle.length == 6);
    for (int f : {0, 2, 3, 5, 13, 14}) CHECK(parsed.cycle.chain.test(f));
    CHECK(format_bitstring(parsed.cycle) == "101101000000011");

    auto not_cycle = parse_bitstring("100000000000000", x);
    CHECK_FALSE(not_cycle.is_cycle);
    CHECK(not_cycle.cycle.length == 1);

    CHECK_THROWS_AS(parse_bitstring("10110100000001", x), std::invalid_argument);
    CHECK_THROWS_AS(parse_bitstring("10110100000001x", x), std::invalid_argument);
}

TEST_CASE("table2 report format") {
    auto x = build_one_vertex_complex(fixtures::t1());
    CHECK(table2_report(two_cycles_kernel(x)) == "6-cycle 101101000000011\n");
}

TEST_CASE("golden file: T1 from disk") {
    std::ifstream in(std::string(POLYSURF_SOURCE_DIR) + "/data/t1.txt");
    REQUIRE(in.good());
    auto p = parse_presentation(in, "t1.txt");
    CHECK(p.triangles == fixtures::t1().triangles);
    auto report = table2_report(two_cycles_kernel(build_one_vertex_complex(p)));

    std::ifstream golden(std::string(POLYSURF_SOURCE_DIR) + "/tests/golden/t1_cycles.txt");
    REQUIRE(golden.good());
    std::stringstream expected;
    expected << golden.rdbuf();
    CHECK(report == expected.str());
}
