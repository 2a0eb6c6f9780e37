#pragma once

#include <complex>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace harmonic {

inline std::string detail_format(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

/// Raised for parameters outside an operation's domain (bad multiplicities,
/// invalid K-types, out-of-range heat times, ...).
class invalid_parameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// log_gamma was asked to evaluate at a nonpositive integer.
class pole_error : public std::domain_error {
public:
    explicit pole_error(std::complex<double> pole)
        : std::domain_error("log_gamma: pole at z = " + std::to_string(pole.real())),
          pole_(pole) {}

    std::complex<double> pole() const noexcept { return pole_; }

private:
    std::complex<double> pole_;
};

/// A truncated integral did not meet its tolerance. `tail_estimate` is the
/// size of the neglected part relative to the retained part.
class truncation_error : public std::runtime_error {
public:
    truncation_error(const std::string& what, double tail_estimate)
        : std::runtime_error(what + " (tail estimate " + detail_format(tail_estimate) + ")"),
          tail_(tail_estimate) {}

    double tail_estimate() const noexcept { return tail_; }

private:
    double tail_;
};

/// A (f, fhat) pair handed to a Beurling-type functional is not a transform pair.
class inconsistent_pair_error : public std::runtime_error {
public:
    inconsistent_pair_error(const std::string& what, double mismatch)
        : std::runtime_error(what + " (mismatch " + detail_format(mismatch) + ")"),
          mismatch_(mismatch) {}

    double mismatch() const noexcept { return mismatch_; }

private:
    double mismatch_;
};

}  // namespace harmonic
