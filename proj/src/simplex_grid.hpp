#pragma once

#include "types.hpp"

#include <cstdint>
#include <vector>

namespace credal {

/// A point of the discretized standard simplex: non-negative integer counts
/// summing to the denominator; the represented probability vector is
/// counts/denominator.
struct GridPoint {
    std::vector<std::uint64_t> counts;
    std::uint64_t denominator = 1;

    ProbabilityCharge to_charge() const;
    friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

/// Exact binomial coefficient for integer arguments, by the multiplicative
/// formula. C(a, b) = 0 when b > a.
Int integer_binomial(const Int& a, const Int& b);

/// Number of grid points with the given dimension and denominator:
/// C(N + n - 1, N).
Int grid_cardinality(std::size_t n, std::uint64_t N);

/// All compositions of N into n non-negative parts, in lexicographic order
/// of the counts vector.
std::vector<GridPoint> enumerate_grid(std::size_t n, std::uint64_t N);

/// Rounds a probability vector onto the grid: floor each coordinate to a
/// multiple of 1/N, then distribute the remaining mass one unit at a time to
/// the lowest-index coordinates. The result y satisfies |x - y|_1 < n/N.
/// Not a nearest-point projection; only the L1 bound is guaranteed.
GridPoint round_to_grid(const ProbabilityCharge& x, std::uint64_t N);

} // namespace credal
