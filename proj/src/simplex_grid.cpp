#include "simplex_grid.hpp"

#include <stdexcept>

namespace credal {

ProbabilityCharge GridPoint::to_charge() const {
    std::vector<Rational> weights;
    weights.reserve(counts.size());
    for (std::uint64_t c : counts) weights.emplace_back(Int(c), Int(denominator));
    return ProbabilityCharge(std::move(weights));
}

Int integer_binomial(const Int& a, const Int& b) {
    if (a < 0 || b < 0) throw std::invalid_argument("binomial arguments must be non-negative");
    if (b > a) return 0;
    Int k = std::min(b, Int(a - b));
    Int result = 1;
    for (Int i = 1; i <= k; ++i) {
        result *= a - k + i;
        result /= i; // exact at every step: result is C(a-k+i, i)
    }
    return result;
}

Int grid_cardinality(std::size_t n, std::uint64_t N) {
    if (n < 1 || N < 1) throw std::invalid_argument("grid needs n >= 1 and N >= 1");
    return integer_binomial(Int(N) + Int(n) - 1, Int(N));
}

namespace {

void enumerate_rec(std::size_t n, std::uint64_t remaining, std::vector<std::uint64_t>& prefix,
                   std::uint64_t N, std::vector<GridPoint>& out) {
    if (prefix.size() + 1 == n) {
        prefix.push_back(remaining);
        out.push_back(GridPoint{prefix, N});
        prefix.pop_back();
        return;
    }
    for (std::uint64_t c = 0; c <= remaining; ++c) {
        prefix.push_back(c);
        enumerate_rec(n, remaining - c, prefix, N, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<GridPoint> enumerate_grid(std::size_t n, std::uint64_t N) {
    if (n < 1 || N < 1) throw std::invalid_argument("grid needs n >= 1 and N >= 1");
    std::vector<GridPoint> out;
    std::vector<std::uint64_t> prefix;
    enumerate_rec(n, N, prefix, N, out);
    return out;
}

GridPoint round_to_grid(const ProbabilityCharge& x, std::uint64_t N) {
    if (N < 1) throw std::invalid_argument("grid denominator must be >= 1");
    const std::size_t n = x.dimension();
    std::vector<std::uint64_t> counts(n);
    Int floored_total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        Int m = rational_floor(Rational(Int(N)) * x[i]);
        counts[i] = m.convert_to<std::uint64_t>();
        floored_total += m;
    }
    // Total floored mass M satisfies M <= N < M + n; hand out the deficit
    // one unit each to the first N - M coordinates.
    Int deficit = Int(N) - floored_total;
    auto extra = deficit.convert_to<std::uint64_t>();
    for (std::size_t i = 0; i < extra; ++i) ++counts[i];
    return GridPoint{std::move(counts), N};
}

} // namespace credal
