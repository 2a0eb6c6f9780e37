#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "harmonic/error.hpp"

namespace harmonic {

/// Cubic spline through (x_i, y_i); natural at the right end, and at the left
/// end either natural or clamped to a zero slope (even functions sampled from 0).
/// Evaluation outside [x_0, x_n] throws rather than extrapolating.
class CubicSpline {
public:
    CubicSpline() = default;

    CubicSpline(std::vector<double> x, std::vector<double> y, bool flat_start = false)
        : x_(std::move(x)), y_(std::move(y)) {
        const std::size_t n = x_.size();
        if (n < 2 || y_.size() != n) throw invalid_parameter("CubicSpline: need >= 2 matching points");
        for (std::size_t i = 1; i < n; ++i)
            if (!(x_[i] > x_[i - 1])) throw invalid_parameter("CubicSpline: grid must be strictly increasing");
        m_.assign(n, 0.0);
        if (n == 2) return;
        // tridiagonal system for second derivatives
        std::vector<double> c(n, 0.0), d(n, 0.0);
        std::size_t first = 1;
        if (flat_start) {
            // h0/3 m0 + h0/6 m1 = (y1 - y0)/h0
            const double h0 = x_[1] - x_[0];
            c[0] = 0.5;
            d[0] = 3.0 * (y_[1] - y_[0]) / (h0 * h0);
            first = 1;
        }
        for (std::size_t i = first; i + 1 < n; ++i) {
            const double h0 = x_[i] - x_[i - 1], h1 = x_[i + 1] - x_[i];
            const double a = h0 / 6.0, b = (h0 + h1) / 3.0, cc = h1 / 6.0;
            const double r = (y_[i + 1] - y_[i]) / h1 - (y_[i] - y_[i - 1]) / h0;
            const double denom = b - a * c[i - 1];
            c[i] = cc / denom;
            d[i] = (r - a * d[i - 1]) / denom;
        }
        for (std::size_t i = n - 2;; --i) {
            m_[i] = d[i] - c[i] * m_[i + 1];
            if (i == (flat_start ? 0u : 1u)) break;
        }
    }

    double operator()(double t) const {
        if (x_.empty()) throw invalid_parameter("CubicSpline: empty");
        if (t < x_.front() || t > x_.back())
            throw invalid_parameter("CubicSpline: " + std::to_string(t) + " outside tabulated range [" +
                                    std::to_string(x_.front()) + ", " + std::to_string(x_.back()) + "]");
        auto it = std::upper_bound(x_.begin(), x_.end(), t);
        std::size_t i = (it == x_.end()) ? x_.size() - 2 : static_cast<std::size_t>(it - x_.begin()) - 1;
        if (i >= x_.size() - 1) i = x_.size() - 2;
        const double h = x_[i + 1] - x_[i];
        const double a = (x_[i + 1] - t) / h, b = (t - x_[i]) / h;
        return a * y_[i] + b * y_[i + 1] + ((a * a * a - a) * m_[i] + (b * b * b - b) * m_[i + 1]) * h * h / 6.0;
    }

    double front() const { return x_.front(); }
    double back() const { return x_.back(); }

private:
    std::vector<double> x_, y_, m_;
};

}  // namespace harmonic
