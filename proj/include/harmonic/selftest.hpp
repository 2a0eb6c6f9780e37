#pragma once

// Check suites shared by the acceptance binary and `harmonic_cli selftest`.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "harmonic/heat.hpp"
#include "harmonic/specfun.hpp"
#include "harmonic/transforms.hpp"
#include "harmonic/uncertainty.hpp"
#include "harmonic/verdict.hpp"

namespace harmonic::selftest {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

struct Check {
    std::string name;
    double time_limit;  // seconds; <= 0 for none
    std::function<std::pair<bool, std::string>()> body;
};

inline std::string fmt(const char* f, double a) {
    char buf[96];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

inline CheckResult run_check(const Check& c) {
    CheckResult r;
    r.name = c.name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        auto [ok, detail] = c.body();
        r.passed = ok;
        r.detail = detail;
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.time_limit > 0.0 && r.seconds >= c.time_limit) {
        r.passed = false;
        r.detail += fmt("; exceeded time limit %.0f s", c.time_limit);
    }
    return r;
}

inline std::vector<double> uniform_grid(double a, double b, int n) {
    std::vector<double> g(n + 1);
    for (int i = 0; i <= n; ++i) g[i] = a + (b - a) * i / n;
    return g;
}

// ---------------------------------------------------------------------------
// Acceptance criteria

inline std::pair<bool, std::string> spectral_heat_identity() {
    const auto h3 = model_space(ModelFamily::h3);
    double worst = 0.0;
    for (double t : {0.25, 1.0, 4.0}) {
        const auto fh = spherical_transform(h3, RadialProfile::heat(t));
        const double sup = std::exp(-t * h3.rho * h3.rho);
        for (double l : uniform_grid(0.0, 10.0, 400))
            worst = std::max(worst, std::abs(value(h3, fh, l) - std::exp(-t * (l * l + h3.rho * h3.rho))) / sup);
    }
    return {worst < 1e-6, fmt("max error relative to sup %.3g", worst)};
}

inline std::pair<bool, std::string> round_trip() {
    double worst = 0.0;
    std::string where;
    for (const auto& s : registry_sweep()) {
        const auto f = RadialProfile::gaussian(1.0);
        const auto fh = spherical_transform(s, f);
        const auto g = inverse_spherical_transform(s, fh, {}, radial_extent(s, f));
        const auto& T = *std::get<radial::Tabulated>(g.descriptor).table;
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < T.grid.size(); ++i) {
            const double r = T.grid[i], e = T.values[i] - std::exp(-r * r);
            num += T.weights[i] * e * e * volume_density(s, r);
            den += T.weights[i] * std::exp(-2.0 * r * r) * volume_density(s, r);
        }
        const double err = std::sqrt(num / den);
        if (err >= worst) {
            worst = err;
            where = s.name;
        }
    }
    return {worst < 1e-6, fmt("worst relative L2 error %.3g", worst) + " (" + where + ")"};
}

inline std::pair<bool, std::string> h3_closed_form() {
    const auto h3 = model_space(ModelFamily::h3);
    double worst = 0.0;
    for (double t : {0.5, 1.0, 2.0})
        for (double r : uniform_grid(0.0, 10.0, 200))
            worst = std::max(worst, std::abs(heat_kernel(h3, t, r, HeatMethod::closed_form) -
                                             heat_kernel(h3, t, r, HeatMethod::quadrature)));
    return {worst < 1e-8, fmt("max |closed - quadrature| %.3g", worst)};
}

inline std::pair<bool, std::string> mass_and_semigroup() {
    const auto h3 = model_space(ModelFamily::h3);
    double h3_mass = 0.0, generic_mass = 0.0, defect = 0.0;
    for (double t : {0.1, 1.0, 10.0}) h3_mass = std::max(h3_mass, std::abs(total_mass(h3, t) - 1.0));
    for (const auto& s : registry_sweep())
        if (!s.is_h3()) generic_mass = std::max(generic_mass, std::abs(total_mass(s, 1.0) - 1.0));
    defect = std::max(semigroup_defect(h3, 1.0, 1.0), semigroup_defect(h3, 0.25, 4.0));
    const bool ok = h3_mass < 1e-6 && generic_mass < 1e-5 && defect < 1e-6;
    return {ok, fmt("h3 mass error %.3g", h3_mass) + fmt(", generic mass error %.3g", generic_mass) +
                    fmt(", semigroup defect %.3g", defect)};
}

inline std::pair<bool, std::string> fourier_slice() {
    const auto h3 = model_space(ModelFamily::h3);
    const auto ls = uniform_grid(0.0, 10.0, 200);
    double worst = 0.0;
    for (const auto& f : {RadialProfile::heat(0.5), RadialProfile::heat(2.0), RadialProfile::gaussian(1.0)}) {
        const auto A = abel_transform(h3, f);
        const auto F = euclidean_fourier(A, ls);
        const auto fh = spherical_transform(h3, f);
        for (std::size_t i = 0; i < ls.size(); ++i) worst = std::max(worst, std::abs(F[i] - value(h3, fh, ls[i])));
    }
    return {worst < 1e-6, fmt("max |F(A f) - f^| %.3g", worst)};
}

inline std::pair<bool, std::string> plancherel_sandwich() {
    double worst = 0.0;
    std::string where;
    for (const auto& s : registry_sweep()) {
        double lo = INFINITY, hi = 0.0;
        for (double l = 10.0; l <= 1000.0 + 1e-9; l *= 1.01) {
            const double ratio =
                std::exp(log_plancherel_density(s, l) - 2.0 * std::log(l) - (s.m_gamma + s.m_2gamma - 2) * std::log1p(l));
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
        if (hi / lo >= worst) {
            worst = hi / lo;
            where = s.name;
        }
    }
    return {worst < 10.0, fmt("worst c2/c1 %.4g", worst) + " (" + where + ")"};
}

inline std::pair<bool, std::string> anker_stability() {
    const auto h3 = model_space(ModelFamily::h3);
    const auto coarse = uniform_grid(0.0, 20.0, 2000), fine = uniform_grid(0.0, 20.0, 4000);
    double worst = 0.0;
    std::string detail;
    for (double t : {1.0, 4.0}) {
        const double a = anker_ratio(h3, t, coarse).sup_ratio, b = anker_ratio(h3, t, fine).sup_ratio;
        worst = std::max(worst, std::abs(b - a) / a);
        detail += fmt("sup(t=%g) ", t) + fmt("%.6g; ", b);
    }
    return {worst < 0.01, detail + fmt("relative change %.3g", worst)};
}

inline std::pair<bool, std::string> beurling_ladder() {
    const auto h3 = model_space(ModelFamily::h3);
    const auto f = RadialProfile::heat(1.0);
    const auto fh = SpectralProfile::heat(1.0);
    BeurlingConfig c8;
    c8.d = 8;
    BeurlingConfig c3;
    c3.d = 3;
    const auto r8 = beurling_functional(h3, f, fh, c8), r3 = beurling_functional(h3, f, fh, c3);
    const auto o8 = ridge_functional(h3, f, h3, fh, c8), o3 = ridge_functional(h3, f, h3, fh, c3);
    const auto& lp3 = r3.log_partial_values;
    const double growth = std::exp(lp3[lp3.size() - 1] - lp3[lp3.size() - 2]);
    const auto& lp8 = r8.log_partial_values;
    const double inc = -std::expm1(lp8[lp8.size() - 2] - lp8.back());
    const bool ok = r8.classification == Classification::converged && r3.classification == Classification::diverging &&
                    o8.report.classification == r8.classification && o3.report.classification == r3.classification;
    return {ok, std::string("d=8 ") + to_string(r8.classification) + fmt(" (last increment %.3g)", inc) +
                    ", d=3 " + to_string(r3.classification) + fmt(" (last rung growth %.3gx)", growth) +
                    ", ridge " + to_string(o8.report.classification) + "/" + to_string(o3.report.classification)};
}

inline std::pair<bool, std::string> sharpness_suite() {
    const auto p = sharpness_construct(0.1, EvenPolynomial{{1.0}});
    const auto rb = sharpness_radial_bound(p), sb = sharpness_spectral_bound(p);
    const auto below = sharpness_verify(p, 0.9, 0.0, 8), above = sharpness_verify(p, 1.1, 0.0, 8);
    const bool ok = rb.passed && sb.passed && below.classification == Classification::converged &&
                    above.classification == Classification::diverging;
    return {ok, std::string("radial bound ") + (rb.passed ? "ok" : "violated") + ", spectral bound " +
                    (sb.passed ? "ok" : "violated") + ", c=0.9 " + to_string(below.classification) + ", c=1.1 " +
                    to_string(above.classification)};
}

struct GoldenRow {
    std::string label;
    std::function<Verdict()> run;
    Outcome expected;
};

inline std::vector<GoldenRow> verdict_golden_rows() {
    const auto h3 = model_space(ModelFamily::h3);
    const auto qh = model_space(ModelFamily::quaternionic_hyperbolic, 2);
    const double inf = infinite_exponent;
    return {
        {"hardy ab>1/4", [=] { return verdict_hardy(h3, 1.0, 1.0); }, Outcome::zero},
        {"hardy ab=1/4", [=] { return verdict_hardy(h3, 0.25, 1.0); }, Outcome::heat_kernel_multiple},
        {"hardy ab<1/4", [=] { return verdict_hardy(h3, 0.1, 1.0); }, Outcome::not_determined},
        {"morgan T>1", [=] { return verdict_morgan(h3, 1.0, 1.0, 3.0, 0); }, Outcome::zero},
        {"morgan T=1 p=4", [=] { return verdict_morgan(h3, 0.25, 0.75, 4.0, 0); }, Outcome::zero},
        {"morgan T=1 p=2 n=1", [=] { return verdict_morgan(h3, 0.25, 1.0, 2.0, 1); }, Outcome::heat_kernel_multiple},
        {"morgan T=1 p=2 n below threshold", [=] { return verdict_morgan(qh, 0.25, 1.0, 2.0, 2); }, Outcome::zero},
        {"gelfand-shilov ab>1", [=] { return verdict_gelfand_shilov(h3, 2.0, 1.0, 2.0, 7); }, Outcome::zero},
        {"gelfand-shilov ab=1 p=3", [=] { return verdict_gelfand_shilov(h3, 1.0, 1.0, 3.0, 4); }, Outcome::zero},
        {"gelfand-shilov ab=1 p=2 N=3", [=] { return verdict_gelfand_shilov(h3, 1.0, 1.0, 2.0, 3); }, Outcome::zero},
        {"gelfand-shilov ab=1 p=2 N=4",
         [=] { return verdict_gelfand_shilov(h3, 1.0, 1.0, 2.0, 4); },
         Outcome::heat_kernel_multiple},
        {"cowling-price ab>1/4", [=] { return verdict_cowling_price(h3, 1.0, 1.0, 2.0, 2.0, 2, 2); }, Outcome::zero},
        {"cowling-price ab=1/4 n=4",
         [=] { return verdict_cowling_price(h3, 0.25, 1.0, 2.0, 2.0, 2, 4); },
         Outcome::heat_kernel_multiple},
        {"cowling-price ab=1/4 n=1",
         [=] { return verdict_cowling_price(h3, 0.25, 1.0, 2.0, 2.0, 2, 1); },
         Outcome::heat_derivative},
        {"cowling-price p1=p2=inf",
         [=] { return verdict_cowling_price(h3, 0.25, 1.0, inf, inf, 0, 0); },
         Outcome::heat_kernel_multiple},
    };
}

// Morgan with p = 2 and n above the low-degree threshold agrees with Hardy.
inline bool morgan_hardy_reduction(int samples = 20) {
    const auto h3 = model_space(ModelFamily::h3);
    std::mt19937_64 rng(20250101);
    std::uniform_real_distribution<double> u(0.05, 2.0);
    for (int i = 0; i < samples; ++i) {
        const double a = u(rng);
        const double b = (i % 4 == 0) ? 0.25 / a : u(rng);
        if (verdict_morgan(h3, a, b, 2.0, 10).outcome != verdict_hardy(h3, a, b).outcome) return false;
    }
    return true;
}

inline std::pair<bool, std::string> verdict_golden_table() {
    int passed = 0, total = 0;
    std::string failures;
    for (const auto& row : verdict_golden_rows()) {
        ++total;
        const auto v = row.run();
        if (v.outcome == row.expected) ++passed;
        else failures += " " + row.label;
    }
    ++total;
    if (morgan_hardy_reduction()) ++passed;
    else failures += " morgan-hardy reduction";
    return {passed == total, std::to_string(passed) + "/" + std::to_string(total) + " rows" +
                                 (failures.empty() ? "" : "; failed:" + failures)};
}

// Forward differences of Q at lambda = 0..p+1: the p-th is p! times the
// leading coefficient, the (p+1)-th vanishes.
inline std::pair<bool, std::string> kostant_suite() {
    int checked = 0;
    double worst_vanish = 0.0, worst_sym = 0.0, worst_lead = 0.0;
    for (const auto& s : {model_space(ModelFamily::h3), model_space(ModelFamily::quaternionic_hyperbolic, 2)}) {
        for (int p = 0; p <= 8; ++p)
            for (int q = -p; q <= p; ++q) {
                if (!KTypeIndex::is_valid(p, q)) continue;
                const KTypeIndex d{p, q};
                ++checked;
                std::vector<cdouble> v(p + 2);
                double scale = 0.0;
                for (int k = 0; k <= p + 1; ++k) {
                    v[k] = kostant_polynomial(s, d, double(k));
                    scale = std::max(scale, std::abs(v[k]));
                }
                for (int order = 1; order <= p + 1; ++order)
                    for (int k = 0; k + order <= p + 1; ++k) v[k] = v[k + 1] - v[k];
                // v[0] now holds the (p+1)-th difference; recompute the p-th
                std::vector<cdouble> w(p + 1);
                for (int k = 0; k <= p; ++k) w[k] = kostant_polynomial(s, d, double(k));
                for (int order = 1; order <= p; ++order)
                    for (int k = 0; k + order <= p; ++k) w[k] = w[k + 1] - w[k];
                double fact = 1.0;
                for (int k = 2; k <= p; ++k) fact *= k;
                const cdouble lead = std::pow(cdouble(0.0, 0.5), p);
                worst_lead = std::max(worst_lead, std::abs(w[0] / fact - lead) / std::abs(lead));
                worst_vanish = std::max(worst_vanish, std::abs(v[0]) / scale);
                for (double l : uniform_grid(-10.0, 10.0, 80)) {
                    const cdouble a = std::conj(kostant_polynomial(s, d, l)), b = kostant_polynomial(s, d, -l);
                    worst_sym = std::max(worst_sym, std::abs(a - b) / std::max(1.0, std::abs(b)));
                }
            }
    }
    const bool ok = worst_lead < 1e-9 && worst_vanish < 1e-10 && worst_sym < 1e-12;
    return {ok, std::to_string(checked) + fmt(" K-types; leading-coefficient error %.3g", worst_lead) +
                    fmt(", next difference %.3g", worst_vanish) + fmt(", conjugate symmetry %.3g", worst_sym)};
}

inline std::vector<Check> acceptance_checks() {
    return {
        {"1 spectral heat identity", 10.0, spectral_heat_identity},
        {"2 round trip on registry spaces", 30.0, round_trip},
        {"3 h3 closed form vs quadrature", 10.0, h3_closed_form},
        {"4 mass and semigroup", 0.0, mass_and_semigroup},
        {"5 Fourier slice", 0.0, fourier_slice},
        {"6 Plancherel sandwich", 0.0, plancherel_sandwich},
        {"7 Anker bound stability", 0.0, anker_stability},
        {"8 Beurling ladder", 60.0, beurling_ladder},
        {"9 sharpness suite", 60.0, sharpness_suite},
        {"10 verdict golden table", 1.0, verdict_golden_table},
        {"11 Kostant suite", 0.0, kostant_suite},
    };
}

// ---------------------------------------------------------------------------
// Quick suite: frozen reference values

inline std::pair<bool, std::string> near(double got, double want, double tol) {
    const double err = std::abs(got - want) / std::max(1e-300, std::abs(want));
    return {err <= tol, fmt("got %.17g", got) + fmt(", relative error %.3g", err)};
}

inline std::vector<Check> quick_checks() {
    return {
        {"h3 spherical function", 0.0,
         [] { return near(spherical_function(model_space("h3"), 2.0, 1.5).real(), 0.033137972501026903, 1e-9); }},
        {"complex gamma", 0.0,
         [] {
             const cdouble g = log_gamma(cdouble(3.2, -40.0));
             auto [ok, d] = near(g.real(), -51.950962497608999, 1e-13);
             return std::pair{ok && std::abs(g.imag() + 111.70630929820125) < 1e-11, d};
         }},
        {"Plancherel density", 0.0,
         [] { return near(plancherel_density(model_space("complex_hyperbolic(2)"), 2.5), 1.5351722429255437, 1e-12); }},
        {"real_hyperbolic(2) heat kernel", 0.0,
         [] { return near(heat_kernel(model_space("real_hyperbolic(2)"), 1.0, 1.0), 0.041491183957822218, 1e-8); }},
        {"h3 heat mass", 0.0, [] { return near(total_mass(model_space("h3"), 1.0), 1.0, 1e-6); }},
        {"verdict golden table", 0.0, verdict_golden_table},
    };
}

inline std::vector<Check> suite(const std::string& name) {
    if (name == "quick") return quick_checks();
    if (name == "acceptance") return acceptance_checks();
    throw invalid_parameter("unknown selftest suite '" + name + "' (quick, acceptance)");
}

}  // namespace harmonic::selftest
