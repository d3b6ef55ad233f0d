#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace vecsbm {

struct Interval {
    double lo = 0.0;
    double hi = 1.0;
};

/// Wilson score interval for a binomial proportion.
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = 1.96);

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
    int points = 0;
};

/// Ordinary least squares y = a + b x. Needs at least two distinct x values.
LinearFit linear_fit(std::span<const double> xs, std::span<const double> ys);

double median(std::vector<double> values);
double quantile(std::vector<double> values, double q);

}  // namespace vecsbm
