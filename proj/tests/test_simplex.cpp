#include <doctest.h>

#include "simplex_grid.hpp"

#include <algorithm>
#include <set>

using namespace credal;

namespace {

struct TestRng {
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    std::uint64_t below(std::uint64_t n) { return next() % n; }
    ProbabilityCharge simplex_point(std::size_t n) {
        std::uint64_t q = 1 + below(997);
        std::vector<Rational> w(n, Rational(0));
        std::uint64_t left = q;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            std::uint64_t c = below(left + 1);
            w[i] = Rational(Int(c), Int(q));
            left -= c;
        }
        w[n - 1] = Rational(Int(left), Int(q));
        return ProbabilityCharge(std::move(w));
    }
};

Rational l1_distance(const ProbabilityCharge& a, const ProbabilityCharge& b) {
    Rational total = 0;
    for (std::size_t i = 0; i < a.dimension(); ++i) total += abs(a[i] - b[i]);
    return total;
}

} // namespace

TEST_CASE("grid cardinality is the exact binomial") {
    CHECK(grid_cardinality(3, 2) == 6);
    CHECK(grid_cardinality(1, 1) == 1);
    CHECK(grid_cardinality(1, 9) == 1);
    CHECK(grid_cardinality(2, 4) == 5); // C(5,4)
    CHECK(integer_binomial(24, 3) == 2024);
    CHECK(integer_binomial(3, 5) == 0);
}

TEST_CASE("enumeration is lexicographic and matches the spec'd small cases") {
    auto two = enumerate_grid(2, 1);
    REQUIRE(two.size() == 2);
    CHECK(two[0].counts == std::vector<std::uint64_t>{0, 1});
    CHECK(two[1].counts == std::vector<std::uint64_t>{1, 0});

    auto one = enumerate_grid(1, 5);
    REQUIRE(one.size() == 1);
    CHECK(one[0].counts == std::vector<std::uint64_t>{5});

    // explicit enumeration oracle for n=3, N=2
    std::set<std::vector<std::uint64_t>> expected = {{2, 0, 0}, {0, 2, 0}, {0, 0, 2},
                                                     {1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
    std::set<std::vector<std::uint64_t>> got;
    for (const auto& p : enumerate_grid(3, 2)) got.insert(p.counts);
    CHECK(got == expected);
}

TEST_CASE("enumeration count equals the cardinality formula") {
    for (std::size_t n = 1; n <= 5; ++n)
        for (std::uint64_t N = 1; N <= 6; ++N) {
            auto points = enumerate_grid(n, N);
            CHECK(Int(points.size()) == grid_cardinality(n, N));
            CHECK(std::is_sorted(points.begin(), points.end(),
                                 [](const GridPoint& a, const GridPoint& b) {
                                     return a.counts < b.counts;
                                 }));
            for (const auto& p : points) {
                std::uint64_t total = 0;
                for (std::uint64_t c : p.counts) total += c;
                CHECK(total == N);
            }
        }
}

TEST_CASE("rounding follows the floor-and-distribute construction") {
    GridPoint y = round_to_grid(ProbabilityCharge({Rational(1, 2), Rational(1, 2)}), 3);
    CHECK(y.counts == std::vector<std::uint64_t>{2, 1});
    CHECK(l1_distance(ProbabilityCharge({Rational(1, 2), Rational(1, 2)}), y.to_charge()) ==
          Rational(1, 3));

    // grid points are fixed points
    ProbabilityCharge on_grid({Rational(1, 4), Rational(2, 4), Rational(1, 4)});
    CHECK(round_to_grid(on_grid, 4).to_charge() == on_grid);

    ProbabilityCharge vertex({1, 0, 0});
    CHECK(round_to_grid(vertex, 4).to_charge() == vertex);
}

TEST_CASE("rounding satisfies the strict L1 bound on random points") {
    TestRng rng;
    for (std::size_t n = 1; n <= 4; ++n)
        for (std::uint64_t N = 1; N <= 20; N += 3)
            for (int i = 0; i < 200; ++i) {
                ProbabilityCharge x = rng.simplex_point(n);
                GridPoint y = round_to_grid(x, N);
                std::uint64_t total = 0;
                for (std::uint64_t c : y.counts) total += c;
                REQUIRE(total == N);
                CHECK(l1_distance(x, y.to_charge()) < Rational(Int(n), Int(N)));
            }
}

TEST_CASE("rounding is not nearest-point, only within the bound") {
    TestRng rng;
    bool saw_strictly_closer = false;
    for (std::size_t n = 2; n <= 3; ++n)
        for (std::uint64_t N = 2; N <= 6; ++N) {
            auto grid = enumerate_grid(n, N);
            for (int i = 0; i < 60; ++i) {
                ProbabilityCharge x = rng.simplex_point(n);
                ProbabilityCharge y = round_to_grid(x, N).to_charge();
                Rational constructed = l1_distance(x, y);
                Rational nearest = constructed;
                for (const auto& candidate : grid)
                    nearest = std::min(nearest, l1_distance(x, candidate.to_charge()));
                CHECK(constructed < Rational(Int(n), Int(N)));
                if (nearest < constructed) saw_strictly_closer = true;
            }
        }
    CHECK(saw_strictly_closer);
}
