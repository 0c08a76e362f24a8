#include <doctest.h>

#include "relations.hpp"
#include "types.hpp"

#include <cstdint>

using namespace credal;

namespace {

// Tiny deterministic generator for lattice values, independent of the
// library's verification harness.
struct TestRng {
    std::uint64_t state = 0x2545f4914f6cdd1dull;
    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    std::uint64_t below(std::uint64_t n) { return next() % n; }
    Rational value() { // in [-1, 1], denominator <= 9
        std::uint64_t q = 1 + below(9);
        std::int64_t k = static_cast<std::int64_t>(below(2 * q + 1)) - static_cast<std::int64_t>(q);
        return Rational(Int(k), Int(q));
    }
    ProbabilityCharge charge(std::size_t n) {
        std::uint64_t q = 1 + below(9);
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

Gamble gamble(std::initializer_list<Rational> values) {
    return Gamble(std::vector<Rational>(values));
}

ProbabilityCharge charge(std::initializer_list<Rational> weights) {
    return ProbabilityCharge(std::vector<Rational>(weights));
}

} // namespace

TEST_CASE("expectation is the exact dot product") {
    CHECK(expectation(gamble({1, 0}), charge({Rational(1, 2), Rational(1, 2)})) ==
          Rational(1, 2));
    // hand dot product: (0 + 3/10 + 3/5 + 1) / 4
    CHECK(expectation(gamble({0, Rational(3, 10), Rational(3, 5), 1}),
                      charge({Rational(1, 4), Rational(1, 4), Rational(1, 4), Rational(1, 4)})) ==
          Rational(19, 40));
}

TEST_CASE("constant gambles integrate to the constant") {
    TestRng rng;
    for (int i = 0; i < 20; ++i) {
        std::size_t n = 1 + rng.below(6);
        Rational c = rng.value();
        CHECK(expectation(Gamble(std::vector<Rational>(n, c)), rng.charge(n)) == c);
    }
}

TEST_CASE("expectation is linear and bounded by the gamble's extremes") {
    TestRng rng;
    for (int i = 0; i < 50; ++i) {
        std::size_t n = 1 + rng.below(6);
        std::vector<Rational> fv, gv;
        for (std::size_t j = 0; j < n; ++j) {
            fv.push_back(rng.value());
            gv.push_back(rng.value());
        }
        Gamble f(fv), g(gv);
        ProbabilityCharge p = rng.charge(n);
        Rational a = rng.value(), b = rng.value();

        std::vector<Rational> combo;
        for (std::size_t j = 0; j < n; ++j) combo.push_back(a * fv[j] + b * gv[j]);
        CHECK(expectation(Gamble(combo), p) == a * expectation(f, p) + b * expectation(g, p));

        Rational e = expectation(f, p);
        CHECK(f.min_value() <= e);
        CHECK(e <= f.max_value());
    }
}

TEST_CASE("expectation rejects mismatched dimensions") {
    CHECK_THROWS_AS(expectation(gamble({1, 0, 0}), charge({Rational(1, 2), Rational(1, 2)})),
                    std::invalid_argument);
}

TEST_CASE("range scale is the largest row range") {
    CredalSet credal({charge({Rational(1, 2), Rational(1, 2)})});
    CHECK(range_scale(DecisionProblem({"a", "b"}, {"d1", "d2"},
                                      {{-1, 0}, {0, -1}}, credal)) == 1);
    CHECK(range_scale(DecisionProblem({"a", "b"}, {"d1", "d2"},
                                      {{2, 2}, {-1, -1}}, credal)) == 0);
    CHECK(range_scale(DecisionProblem({"a", "b"}, {"d1", "d2"},
                                      {{-2, 0}, {0, -1}}, credal)) == 2);
}

TEST_CASE("type invariants are enforced") {
    CHECK_THROWS_AS(Gamble({}), std::invalid_argument);
    CHECK_THROWS_AS(ProbabilityCharge({Rational(-1, 2), Rational(3, 2)}), std::invalid_argument);
    CHECK_THROWS_AS(ProbabilityCharge({Rational(1, 2), Rational(1, 3)}), std::invalid_argument);
    CHECK_THROWS_AS(CredalSet({}), std::invalid_argument);
    CHECK_THROWS_AS(CredalSet({charge({1}), charge({Rational(1, 2), Rational(1, 2)})}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Partition({{0, 1}, {1}}), std::invalid_argument); // overlap
    CHECK_THROWS_AS(Partition({{0}, {2}}), std::invalid_argument);    // gap
    CHECK_THROWS_AS(Partition({{0}, {}}), std::invalid_argument);     // empty cell
    CredalSet credal({charge({Rational(1, 2), Rational(1, 2)})});
    CHECK_THROWS_AS(DecisionProblem({"a", "b"}, {"d1"}, {{0, 0}, {1, 1}}, credal),
                    std::invalid_argument);
    CHECK_THROWS_AS(DecisionProblem({"a", "b"}, {"d1"}, {{0}}, credal), std::invalid_argument);
    CHECK_THROWS_AS(DecisionProblem({"a", "a"}, {"d1"}, {{0, 0}}, credal), std::invalid_argument);
}

TEST_CASE("credal dedup keeps first occurrences") {
    ProbabilityCharge half = charge({Rational(1, 2), Rational(1, 2)});
    ProbabilityCharge top = charge({1, 0});
    CredalSet set({half, top, half});
    CredalSet unique = set.dedup();
    REQUIRE(unique.size() == 2);
    CHECK(unique[0] == half);
    CHECK(unique[1] == top);
}

TEST_CASE("gamble closeness follows the scaled sup-deviation rule") {
    Partition part({{0, 1}, {2}, {3}});
    Gamble ground = gamble({0, Rational(3, 10), Rational(3, 5), 1});
    Gamble coarse = gamble({0, Rational(3, 5), 1});
    // max in-cell deviation is 3/10 <= range 1 * eps 1/2
    CHECK(gamble_close(ground, coarse, part, Rational(1, 2)));
    CHECK_FALSE(gamble_close(ground, coarse, part, Rational(1, 5)));

    // zero-range gambles force exact equality
    Partition whole({{0, 1}});
    CHECK(gamble_close(gamble({2, 2}), gamble({2}), whole, 0));
    CHECK_FALSE(gamble_close(gamble({2, 2}), gamble({Rational(21, 10)}), whole, 0));

    Partition singles({{0}, {1}});
    CHECK_FALSE(gamble_close(gamble({0, 1}), gamble({0, Rational(1, 2)}), singles,
                             Rational(1, 4)));

    CHECK_THROWS_AS(gamble_close(ground, gamble({0, 1}), part, 0), std::invalid_argument);
    CHECK_THROWS_AS(gamble_close(ground, coarse, part, Rational(-1)), std::invalid_argument);
}

TEST_CASE("gamble closeness is invariant under positive affine maps") {
    TestRng rng;
    Partition part({{0, 1}, {2}, {3}});
    Gamble ground = gamble({0, Rational(3, 10), Rational(3, 5), 1});
    Gamble coarse = gamble({0, Rational(3, 5), 1});
    for (int i = 0; i < 20; ++i) {
        Rational a = abs(rng.value()) + Rational(1, 9);
        Rational b = rng.value();
        std::vector<Rational> gv, cv;
        for (const auto& v : ground.values()) gv.push_back(a * v + b);
        for (const auto& v : coarse.values()) cv.push_back(a * v + b);
        for (const Rational& eps : {Rational(3, 10), Rational(1, 2), Rational(1, 5)})
            CHECK(gamble_close(ground, coarse, part, eps) ==
                  gamble_close(Gamble(gv), Gamble(cv), part, eps));
    }
}

TEST_CASE("charge closeness is the L1 rule on cell marginals") {
    Partition singles({{0}, {1}});
    ProbabilityCharge p = charge({Rational(1, 2), Rational(1, 2)});
    CHECK(charge_close(p, p, singles, 0));
    ProbabilityCharge q = charge({Rational(2, 3), Rational(1, 3)});
    CHECK(charge_close(p, q, singles, Rational(1, 3)));
    CHECK_FALSE(charge_close(p, q, singles, Rational(1, 4)));
    CHECK_THROWS_AS(charge_close(p, charge({1}), singles, 0), std::invalid_argument);
}

TEST_CASE("charge closeness bounds every union of cells") {
    TestRng rng;
    for (int i = 0; i < 30; ++i) {
        std::size_t n = 2 + rng.below(4);
        Partition singles = Partition::singletons(n);
        ProbabilityCharge p = rng.charge(n);
        ProbabilityCharge q = rng.charge(n);
        Rational l1 = 0;
        for (std::size_t j = 0; j < n; ++j) l1 += abs(p[j] - q[j]);
        REQUIRE(charge_close(p, q, singles, l1));
        for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
            Rational diff = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (mask & (1ull << j)) diff += p[j] - q[j];
            CHECK(abs(diff) <= l1);
        }
    }
}

TEST_CASE("credal closeness needs both covering directions") {
    Partition singles({{0}, {1}});
    CredalSet m({charge({Rational(1, 2), Rational(1, 2)})});
    CredalSet m_same = m;
    CHECK(credal_close(m, m_same, singles, 0));
    CredalSet shifted({charge({Rational(2, 3), Rational(1, 3)})});
    CHECK(credal_close(m, shifted, singles, Rational(1, 3)));
    CHECK_FALSE(credal_close(m, shifted, singles, Rational(1, 4)));

    CredalSet corners({charge({1, 0}), charge({0, 1})});
    CredalSet one({charge({1, 0})});
    CHECK_FALSE(credal_close(corners, one, singles, Rational(1, 2)));
    // the other direction alone would be fine
    CHECK(credal_close(one, corners, singles, 2));
}

TEST_CASE("loss closeness compares all rows and demands equal decision sets") {
    Partition singles({{0}, {1}});
    CredalSet credal({charge({Rational(1, 2), Rational(1, 2)})});
    DecisionProblem p({"a", "b"}, {"d1", "d2"}, {{0, -1}, {-1, 0}}, credal);
    CHECK(loss_close(p, p, singles, 0));

    DecisionProblem perturbed({"a", "b"}, {"d1", "d2"}, {{0, -1}, {Rational(-1, 2), 0}}, credal);
    CHECK_FALSE(loss_close(p, perturbed, singles, Rational(1, 10)));

    DecisionProblem renamed({"a", "b"}, {"d1", "e2"}, {{0, -1}, {-1, 0}}, credal);
    CHECK_THROWS_AS(loss_close(p, renamed, singles, 0), std::invalid_argument);
}
