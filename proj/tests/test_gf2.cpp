#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "helpers.hpp"
#include "polysurf/polysurf.hpp"

using namespace polysurf;

TEST_CASE("BitChain basics") {
    BitChain c(70);
    CHECK(c.width() == 70);
    CHECK_FALSE(c.any());
    CHECK(c.lowest_set_bit() == -1);
    c.set(0);
    c.set(69);
    c.flip(33);
    CHECK(c.test(0));
    CHECK(c.test(33));
    CHECK(c.test(69));
    CHECK_FALSE(c.test(1));
    CHECK(c.popcount() == 3);
    CHECK(c.lowest_set_bit() == 0);
    c.set(0, false);
    CHECK(c.lowest_set_bit() == 33);
}

TEST_CASE("bitstring round trip and order") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> width(1, 90);
    std::bernoulli_distribution bit(0.4);
    for (int iter = 0; iter < 200; ++iter) {
        int w = width(rng);
        BitChain a(w), b(w);
        for (int k = 0; k < w; ++k) {
            if (bit(rng)) a.set(k);
            if (bit(rng)) b.set(k);
        }
        CHECK(BitChain::from_bitstring(a.to_bitstring()) == a);
        CHECK(BitChain::bitstring_less(a, b) == (a.to_bitstring() < b.to_bitstring()));
        CHECK(((a ^ b) ^ b) == a);
    }
    CHECK_THROWS_AS(BitChain::from_bitstring("01x"), std::invalid_argument);
}

TEST_CASE("rank on identity and zero") {
    Gf2Matrix id(3, 3);
    for (int i = 0; i < 3; ++i) id.set(i, i);
    CHECK(gf2_rank(id) == 3);
    CHECK(kernel_basis(id).empty());

    Gf2Matrix zero(4, 5);
    CHECK(gf2_rank(zero) == 0);
    CHECK(kernel_basis(zero).size() == 5);
}

TEST_CASE("T1 boundary matrix has rank 14 (vs naive oracle)") {
    auto x = build_one_vertex_complex(fixtures::t1());
    auto m = boundary_matrix(x);
    CHECK(gf2_rank(m) == 14);
    CHECK(testutil::naive_rank(testutil::to_int_rows(m)) == 14);
}

TEST_CASE("T1 kernel basis is the single known cycle") {
    auto m = boundary_matrix(build_one_vertex_complex(fixtures::t1()));
    auto basis = kernel_basis(m);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0].to_bitstring() == "101101000000011");
    // 1-based face positions 1,3,4,6,14,15
    for (int f : {0, 2, 3, 5, 13, 14}) CHECK(basis[0].test(f));
    CHECK(basis[0].popcount() == 6);

    auto cycles = enumerate_kernel(basis);
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0].to_bitstring() == "101101000000011");
}

TEST_CASE("enumeration counts and cap") {
    std::vector<BitChain> basis;
    for (int i = 0; i < 3; ++i) {
        BitChain v(6);
        v.set(i);
        v.set(i + 3);
        basis.push_back(v);
    }
    auto all = enumerate_kernel(basis);
    CHECK(all.size() == 7);
    std::set<std::string> distinct;
    for (const auto& c : all) distinct.insert(c.to_bitstring());
    CHECK(distinct.size() == 7);
    CHECK_THROWS_AS(enumerate_kernel(basis, 6), CapExceeded);
}

TEST_CASE("kernel properties on random matrices") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> dims(1, 10);
    std::bernoulli_distribution bit(0.35);
    for (int iter = 0; iter < 100; ++iter) {
        int rows = dims(rng), cols = dims(rng);
        Gf2Matrix m(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                if (bit(rng)) m.set(r, c);

        auto basis = kernel_basis(m);
        CHECK(static_cast<int>(basis.size()) == cols - gf2_rank(m));

        // basis vectors are independent: re-elimination keeps full rank
        Gf2Matrix bm(static_cast<int>(basis.size()), cols);
        for (std::size_t i = 0; i < basis.size(); ++i) bm.row(static_cast<int>(i)) = basis[i];
        CHECK(gf2_rank(bm) == static_cast<int>(basis.size()));

        auto enumerated = enumerate_kernel(basis);
        std::set<std::string> got;
        for (const auto& c : enumerated) {
            CHECK(m.in_kernel(c));
            got.insert(c.to_bitstring());
        }
        CHECK(got.size() == enumerated.size());

        // brute-force oracle: every nonzero chain with Mx = 0
        std::set<std::string> expected;
        for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << cols); ++mask) {
            BitChain x(cols);
            for (int k = 0; k < cols; ++k)
                if (mask >> k & 1) x.set(k);
            if (m.in_kernel(x)) expected.insert(x.to_bitstring());
        }
        CHECK(got == expected);
    }
}
