#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "mimetic/matrix.hpp"

namespace testutil {

inline double rel_frobenius_error(const mimetic::Matrix& got, const mimetic::Matrix& want) {
    const double denom = mimetic::frobenius_norm(want);
    if (denom == 0.0) return mimetic::frobenius_norm(got);
    return mimetic::frobenius_distance(got, want) / denom;
}

// Tail singular-value energy: the Eckart-Young residual oracle.
inline double tail_energy(const std::vector<double>& s, std::size_t k) {
    double acc = 0.0;
    for (std::size_t i = k; i < s.size(); ++i) acc += s[i] * s[i];
    return acc;
}

inline double max_abs_offdiag(const mimetic::Matrix& m) {
    double best = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (i != j) best = std::max(best, std::abs(m(i, j)));
    return best;
}

// R^2 of the best least-squares line through the origin for (x, y) points.
inline double r_squared_through_origin(const std::vector<double>& x, const std::vector<double>& y) {
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += x[i] * y[i];
        sxx += x[i] * x[i];
        syy += y[i] * y[i];
    }
    if (sxx == 0.0 || syy == 0.0) return 0.0;
    const double slope = sxy / sxx;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - slope * x[i];
        ss_res += r * r;
    }
    return 1.0 - ss_res / syy;
}

inline double mean(const std::vector<double>& v) {
    double acc = 0.0;
    for (double x : v) acc += x;
    return v.empty() ? 0.0 : acc / static_cast<double>(v.size());
}

inline double stddev(const std::vector<double>& v) {
    const double mu = mean(v);
    double acc = 0.0;
    for (double x : v) acc += (x - mu) * (x - mu);
    return v.empty() ? 0.0 : std::sqrt(acc / static_cast<double>(v.size()));
}

inline double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    if (n == 0) return 0.0;
    return (n % 2 == 1) ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

} // namespace testutil
