#pragma once

// Case analysis of the uncertainty theorems that follow from the Beurling theorem.

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "harmonic/error.hpp"
#include "harmonic/space.hpp"

namespace harmonic {

enum class Outcome { zero, heat_kernel_multiple, heat_derivative, not_determined };

inline const char* to_string(Outcome o) {
    switch (o) {
    case Outcome::zero: return "Zero";
    case Outcome::heat_kernel_multiple: return "HeatKernelMultiple";
    case Outcome::heat_derivative: return "HeatDerivative";
    case Outcome::not_determined: return "NotDetermined";
    }
    return "?";
}

struct Verdict {
    Outcome outcome = Outcome::not_determined;
    std::vector<KTypeIndex> ktypes;  // admissible K-types for HeatDerivative
    double deg_bound = 0.0;          // p < deg_bound for every admissible K-type
    std::string cited_case;
};

/// Encodes p = infinity for the Cowling-Price exponents.
inline constexpr double infinite_exponent = std::numeric_limits<double>::infinity();

namespace detail {

inline constexpr double verdict_tol = 1e-12;

// -1, 0, +1 as x is below, at, or above the threshold.
inline int compare_threshold(double x, double threshold) {
    if (std::abs(x - threshold) <= verdict_tol * std::max(1.0, std::abs(threshold))) return 0;
    return x > threshold ? 1 : -1;
}

inline bool is_two(double p) { return compare_threshold(p, 2.0) == 0; }

inline Verdict make_verdict(Outcome o, std::string cited) {
    Verdict v;
    v.outcome = o;
    v.cited_case = std::move(cited);
    return v;
}

}  // namespace detail

/// All valid K-types with p < bound.
inline std::vector<KTypeIndex> admissible_ktypes(double bound) {
    std::vector<KTypeIndex> out;
    for (int p = 0; p < bound; ++p)
        for (int q = -p; q <= p; ++q)
            if (KTypeIndex::is_valid(p, q)) out.push_back({p, q});
    return out;
}

inline Verdict heat_derivative_verdict(const SpaceParams& s, double d, std::string cited) {
    auto v = detail::make_verdict(Outcome::heat_derivative, std::move(cited));
    v.deg_bound = 0.5 * (d - s.d_x);
    v.ktypes = admissible_ktypes(v.deg_bound);
    return v;
}

/// Beurling condition with exponent d.
inline Verdict verdict_beurling(const SpaceParams& s, int d) {
    if (d < 0) throw invalid_parameter("verdict_beurling: d must be >= 0");
    if (d <= s.d_x) return detail::make_verdict(Outcome::zero, "Thm 3.1 (d <= d_X)");
    return heat_derivative_verdict(s, d, "Thm 3.1");
}

/// |f| <= C e^{-a sigma^2} ..., |f^| <= C e^{-b lambda^2}.
inline Verdict verdict_hardy(const SpaceParams& s, double a, double b) {
    (void)s;
    if (!(a > 0.0) || !(b > 0.0)) throw invalid_parameter("verdict_hardy: a and b must be > 0");
    switch (detail::compare_threshold(a * b, 0.25)) {
    case 1: return detail::make_verdict(Outcome::zero, "Thm 5.4(a)");
    case 0: return detail::make_verdict(Outcome::heat_kernel_multiple, "Thm 5.4(b)");
    default: return detail::make_verdict(Outcome::not_determined, "Thm 5.4 (ab < 1/4)");
    }
}

/// |f| <= C e^{-a sigma^p} Xi (1 + sigma)^n, |f^| <= C e^{-b |lambda|^q}.
inline Verdict verdict_morgan(const SpaceParams& s, double a, double b, double p, int n) {
    if (!(p > 1.0) || !std::isfinite(p)) throw invalid_parameter("verdict_morgan: p must be a finite real > 1");
    if (!(a > 0.0) || !(b > 0.0)) throw invalid_parameter("verdict_morgan: a and b must be > 0");
    if (n < 0) throw invalid_parameter("verdict_morgan: n must be >= 0");
    const double q = p / (p - 1.0);
    const double T = std::pow(a * p, 1.0 / p) * std::pow(b * q, 1.0 / q);
    switch (detail::compare_threshold(T, 1.0)) {
    case 1: return detail::make_verdict(Outcome::zero, "Thm 5.2(a)");
    case 0:
        if (!detail::is_two(p)) return detail::make_verdict(Outcome::zero, "Thm 5.2(b)");
        if (2 * n < s.m_gamma + s.m_2gamma - 2) return detail::make_verdict(Outcome::zero, "Remark 5.3");
        return detail::make_verdict(Outcome::heat_kernel_multiple, "Thm 5.2(c)");
    default: return detail::make_verdict(Outcome::not_determined, "Thm 5.2 (T < 1)");
    }
}

/// Integrability with e^{(alpha sigma)^p / p} Xi (1 + sigma)^{-N} and e^{(beta |lambda|)^q / q} (1 + |lambda|)^{-N}.
inline Verdict verdict_gelfand_shilov(const SpaceParams& s, double alpha, double beta, double p, int N) {
    if (!(p > 1.0) || !std::isfinite(p)) throw invalid_parameter("verdict_gelfand_shilov: p must be a finite real > 1");
    if (!(alpha > 0.0) || !(beta > 0.0)) throw invalid_parameter("verdict_gelfand_shilov: alpha and beta must be > 0");
    if (N < 0) throw invalid_parameter("verdict_gelfand_shilov: N must be >= 0");
    switch (detail::compare_threshold(alpha * beta, 1.0)) {
    case 1: return detail::make_verdict(Outcome::zero, "Thm 5.1(a)");
    case 0:
        if (!detail::is_two(p)) return detail::make_verdict(Outcome::zero, "Thm 5.1(b)");
        if (N < s.d_x + 1) return detail::make_verdict(Outcome::zero, "Thm 5.1(c)");
        if (N == s.d_x + 1) return detail::make_verdict(Outcome::heat_kernel_multiple, "Thm 5.1(d)");
        return heat_derivative_verdict(s, 2.0 * N, "Thm 5.1(d)");
    default: return detail::make_verdict(Outcome::not_determined, "Thm 5.1 (alpha beta < 1)");
    }
}

/// L^{p1} and L^{p2} Gaussian conditions with polynomial weights (1 + sigma)^{-m}, (1 + |lambda|)^{-n};
/// either exponent may be infinite_exponent.
inline Verdict verdict_cowling_price(const SpaceParams& s, double a, double b, double p1, double p2, int m, int n) {
    if (!(a > 0.0) || !(b > 0.0)) throw invalid_parameter("verdict_cowling_price: a and b must be > 0");
    if (!(p1 >= 1.0) || !(p2 >= 1.0)) throw invalid_parameter("verdict_cowling_price: p1, p2 must lie in [1, inf]");
    if (m < 0 || n < 0) throw invalid_parameter("verdict_cowling_price: m and n must be >= 0");
    switch (detail::compare_threshold(a * b, 0.25)) {
    case 1: return detail::make_verdict(Outcome::zero, "Thm 5.5(a)");
    case 0: {
        if (std::isinf(p1) && std::isinf(p2))
            return detail::make_verdict(Outcome::heat_kernel_multiple, "Thm 5.5(b) (p1 = p2 = inf)");
        if (s.d_x < n && n <= s.d_x + p2) return detail::make_verdict(Outcome::heat_kernel_multiple, "Thm 5.5(b)");
        // reduction to the Gelfand-Shilov condition with N = max(N1, N2), Beurling exponent 2N
        const double m_prime = 4.0, n_prime = 2.0 + s.m_gamma + s.m_2gamma;
        auto split = [](double weight, double p, double prime) {
            return std::isinf(p) ? prime : weight / p + prime * (1.0 - 1.0 / p);
        };
        const double N = std::ceil(std::max(split(m, p1, m_prime), split(n, p2, n_prime)));
        return heat_derivative_verdict(s, 2.0 * N, "Thm 5.5(b)");
    }
    default: return detail::make_verdict(Outcome::not_determined, "Thm 5.5 (ab < 1/4)");
    }
}

/// Strength order Zero > HeatKernelMultiple > HeatDerivative > NotDetermined.
inline int strength(Outcome o) {
    switch (o) {
    case Outcome::zero: return 3;
    case Outcome::heat_kernel_multiple: return 2;
    case Outcome::heat_derivative: return 1;
    case Outcome::not_determined: return 0;
    }
    return 0;
}

}  // namespace harmonic
