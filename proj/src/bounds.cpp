#include "bounds.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "simplex_grid.hpp"

#include <cmath>
#include <stdexcept>

namespace credal {

namespace {

bool nearly_integral(double x, double& rounded) {
    rounded = std::round(x);
    return std::abs(x - rounded) <= 1e-9 * std::max(1.0, std::abs(x));
}

double log10_lgamma_binomial(double a, double b) {
    return (std::lgamma(a + 1) - std::lgamma(b + 1) - std::lgamma(a - b + 1)) / std::log(10.0);
}

} // namespace

double log10_binomial(double a, double b) {
    if (b < 0 || a < b) throw std::invalid_argument("log10_binomial needs a >= b >= 0");
    double ar = 0, br = 0;
    if (nearly_integral(a, ar) && nearly_integral(b, br)) {
        double small_side = std::min(br, ar - br);
        if (small_side <= 512) {
            Int exact = integer_binomial(Int(ar), Int(br));
            using BigFloat = boost::multiprecision::cpp_bin_float_100;
            return log10(BigFloat(exact)).convert_to<double>();
        }
    }
    return log10_lgamma_binomial(a, b);
}

double partition_size_bound(double eps, unsigned d_count) {
    if (eps <= 0) throw std::invalid_argument("eps must be > 0");
    if (d_count < 1) throw std::invalid_argument("d_count must be >= 1");
    return d_count * std::log10(1.0 + 1.0 / eps);
}

double credal_size_bound(std::uint64_t n_cells, double delta) {
    if (n_cells < 1) throw std::invalid_argument("n_cells must be >= 1");
    if (delta <= 0) throw std::invalid_argument("delta must be > 0");
    double n = static_cast<double>(n_cells);
    return log10_binomial(n * (1.0 + 1.0 / delta), n - 1.0);
}

std::pair<Rational, Rational> expectation_error_bounds(const Rational& range,
                                                       const Rational& coarse_range,
                                                       const Rational& eps,
                                                       const Rational& delta) {
    if (range < 0 || coarse_range < 0) throw std::invalid_argument("ranges must be >= 0");
    if (delta < 0) throw std::invalid_argument("delta must be >= 0");
    if (eps <= 0 || eps >= Rational(1, 2)) throw std::invalid_argument("eps must lie in (0, 1/2)");
    Rational ground_bound = range * (eps + delta * (1 + 2 * eps));
    Rational coarse_bound = coarse_range * (eps / (1 - 2 * eps) + delta);
    return {ground_bound, coarse_bound};
}

InflatedLevels inflate_levels(const Rational& gamma, const Rational& eps, const Rational& delta) {
    if (gamma < 0) throw std::invalid_argument("gamma must be >= 0");
    if (delta < 0) throw std::invalid_argument("delta must be >= 0");
    if (eps <= 0 || eps >= Rational(1, 2)) throw std::invalid_argument("eps must lie in (0, 1/2)");
    Rational one_minus = 1 - 2 * eps;
    Rational forward = gamma / one_minus + 2 * (eps / one_minus + delta);
    Rational backward = gamma * (1 + 2 * eps) + 2 * (eps + delta * (1 + 2 * eps));
    return {forward, backward};
}

std::vector<std::pair<double, double>> gamma_curve(double gamma_star, unsigned d_count,
                                                   const std::vector<double>& eps_grid) {
    if (gamma_star <= 0) throw std::invalid_argument("gamma_star must be > 0");
    if (d_count < 1) throw std::invalid_argument("d_count must be >= 1");
    std::vector<std::pair<double, double>> points;
    points.reserve(eps_grid.size());
    for (double eps : eps_grid) {
        if (!(eps > 0) || !(eps < gamma_star))
            throw std::invalid_argument("curve grid point must lie in (0, gamma_star)");
        double delta = gamma_star - eps;
        double b = std::pow(eps, -static_cast<double>(d_count));
        points.emplace_back(eps, log10_lgamma_binomial(b / delta, b));
    }
    return points;
}

} // namespace credal
