#pragma once

// Command-line front end: CSV tables, JSON reports, self-tests.
//
// Exit codes: 0 success, 1 numerical failure, 2 usage error, 3 self-test failure.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "harmonic/heat.hpp"
#include "harmonic/io.hpp"
#include "harmonic/selftest.hpp"
#include "harmonic/specfun.hpp"
#include "harmonic/transforms.hpp"
#include "harmonic/uncertainty.hpp"
#include "harmonic/verdict.hpp"

namespace harmonic::cli {

using json = io::json;

enum class Format { csv, json };

struct RunConfig {
    std::string space = "h3";
    QuadratureScheme quad;
    std::optional<Format> format;  // per-operation default when unset
    std::string output_path;       // stdout when empty
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_numerical = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_selftest = 3;

/// Flat JSON config; unknown keys are rejected.
inline void apply_config_file(RunConfig& rc, const json& j) {
    if (!j.is_object()) throw invalid_parameter("config file must hold a flat JSON object");
    for (const auto& [key, v] : j.items()) {
        try {
            if (key == "space") rc.space = v.get<std::string>();
            else if (key == "panels_per_unit") rc.quad.panels_per_unit = v.get<int>();
            else if (key == "gauss_points") rc.quad.gauss_points = v.get<int>();
            else if (key == "t_max") rc.quad.t_max = v.get<double>();
            else if (key == "lambda_max") rc.quad.lambda_max = v.get<double>();
            else if (key == "abs_tol") rc.quad.abs_tol = v.get<double>();
            else if (key == "rel_tol") rc.quad.rel_tol = v.get<double>();
            else if (key == "output_format") {
                const auto f = v.get<std::string>();
                if (f != "csv" && f != "json") throw invalid_parameter("output_format must be csv or json");
                rc.format = f == "csv" ? Format::csv : Format::json;
            } else if (key == "output_path") rc.output_path = v.get<std::string>();
            else throw invalid_parameter("unknown config key '" + key + "'");
        } catch (const json::exception&) {
            throw invalid_parameter("config key '" + key + "' has the wrong type");
        }
    }
}

inline json config_json(const RunConfig& rc, const json& params) {
    json j;
    j["space"] = rc.space;
    j["panels_per_unit"] = rc.quad.panels_per_unit;
    j["gauss_points"] = rc.quad.gauss_points;
    j["t_max"] = rc.quad.t_max;
    j["lambda_max"] = rc.quad.lambda_max;
    j["abs_tol"] = rc.quad.abs_tol;
    j["rel_tol"] = rc.quad.rel_tol;
    for (const auto& [k, v] : params.items()) j[k] = v;
    j["hash"] = io::config_hash(j);
    return j;
}

/// "heat:T", "gaussian:A" or "zero".
inline RadialProfile parse_profile(const std::string& text) {
    if (text == "zero") return RadialProfile::zero();
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw invalid_parameter("profile must be heat:T, gaussian:A or zero");
    const auto kind = text.substr(0, colon);
    const double v = io::parse_double(text.substr(colon + 1));
    if (kind == "heat") return RadialProfile::heat(v);
    if (kind == "gaussian") return RadialProfile::gaussian(v);
    throw invalid_parameter("unknown profile kind '" + kind + "'");
}

/// Spectral side of a profile for the ladder functionals, exact where available.
inline SpectralProfile matching_spectrum(const SpaceParams& s, const RadialProfile& f, const QuadratureScheme& q,
                                         double reach) {
    if (auto* h = std::get_if<radial::Heat>(&f.descriptor)) return SpectralProfile::heat(h->time);
    if (f.is_zero()) return SpectralProfile::zero();
    QuadratureScheme wide = q;
    wide.lambda_max = std::max(q.lambda_max, reach);
    return spherical_transform(s, f, wide);
}

inline double parse_exponent(const std::string& s) {
    if (s == "inf" || s == "infinity") return infinite_exponent;
    return io::parse_double(s);
}

class Runner {
public:
    Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    int run(int argc, const char* const* argv) {
        CLI::App app{"Harmonic analysis on rank-one symmetric spaces", "harmonic_cli"};
        app.require_subcommand(1);
        app.set_help_all_flag("--help-all", "Expand all help");
        build(app);
        try {
            app.parse(argc, argv);
        } catch (const CLI::CallForHelp& e) {
            return app.exit(e, out_, err_);
        } catch (const CLI::CallForAllHelp& e) {
            return app.exit(e, out_, err_);
        } catch (const CLI::ParseError& e) {
            app.exit(e, out_, err_);
            return exit_usage;
        }
        try {
            finalize_config();
            return action_();
        } catch (const truncation_error& e) {
            err_ << "error: " << e.what() << "\n";
            return exit_numerical;
        } catch (const inconsistent_pair_error& e) {
            err_ << "error: " << e.what() << "\n";
            return exit_numerical;
        } catch (const invalid_parameter& e) {
            err_ << "usage error: " << e.what() << "\n";
            return exit_usage;
        } catch (const pole_error& e) {
            err_ << "usage error: " << e.what() << "\n";
            return exit_usage;
        } catch (const std::exception& e) {
            err_ << "error: " << e.what() << "\n";
            return exit_numerical;
        }
    }

private:
    // Flags as given on the command line; applied over the config file.
    struct Flags {
        std::string config_path;
        std::string space;
        int panels = 0;
        int gauss_points = 0;
        double t_max = 0.0, lambda_max = 0.0, abs_tol = 0.0, rel_tol = 0.0;
        std::string format;
        std::string output;
        CLI::Option *space_opt = nullptr, *panels_opt = nullptr, *gauss_opt = nullptr, *t_max_opt = nullptr,
                    *lambda_max_opt = nullptr, *abs_tol_opt = nullptr, *rel_tol_opt = nullptr,
                    *format_opt = nullptr, *output_opt = nullptr, *config_opt = nullptr;
    };

    void add_common(CLI::App* sub, bool with_space = true) {
        auto& f = flags_[sub];
        f.config_opt = sub->add_option("--config", f.config_path, "Flat JSON config file")->check(CLI::ExistingFile);
        if (with_space) f.space_opt = sub->add_option("--space", f.space, "Space name, e.g. h3, complex_hyperbolic(2)");
        f.panels_opt = sub->add_option("--panels-per-unit", f.panels, "Quadrature panels per unit length");
        f.gauss_opt = sub->add_option("--gauss-points", f.gauss_points, "Gauss-Legendre points per panel");
        f.t_max_opt = sub->add_option("--t-max", f.t_max, "Radial truncation");
        f.lambda_max_opt = sub->add_option("--lambda-max-quad", f.lambda_max, "Spectral truncation");
        f.abs_tol_opt = sub->add_option("--abs-tol", f.abs_tol, "Absolute tolerance");
        f.rel_tol_opt = sub->add_option("--rel-tol", f.rel_tol, "Relative tolerance");
        f.format_opt = sub->add_option("--format", f.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        f.output_opt = sub->add_option("--output", f.output, "Write to this file instead of stdout");
    }

    void finalize_config() {
        const Flags* f = nullptr;
        for (const auto& [sub, fl] : flags_)
            if (sub->parsed()) f = &fl;
        if (!f) return;
        if (f->config_opt && f->config_opt->count()) {
            std::ifstream in(f->config_path);
            json j;
            try {
                j = json::parse(in);
            } catch (const json::exception& e) {
                throw invalid_parameter(std::string("config file is not valid JSON: ") + e.what());
            }
            apply_config_file(rc_, j);
        }
        if (const char* env = std::getenv("HARMONIC_QUAD_PANELS"); env && *env) {
            const double v = io::parse_double(env);
            if (!(v >= 1.0) || v != std::floor(v)) throw invalid_parameter("HARMONIC_QUAD_PANELS must be a positive integer");
            rc_.quad.panels_per_unit = static_cast<int>(v);
        }
        if (f->space_opt && f->space_opt->count()) rc_.space = f->space;
        if (f->panels_opt->count()) rc_.quad.panels_per_unit = f->panels;
        if (f->gauss_opt->count()) rc_.quad.gauss_points = f->gauss_points;
        if (f->t_max_opt->count()) rc_.quad.t_max = f->t_max;
        if (f->lambda_max_opt->count()) rc_.quad.lambda_max = f->lambda_max;
        if (f->abs_tol_opt->count()) rc_.quad.abs_tol = f->abs_tol;
        if (f->rel_tol_opt->count()) rc_.quad.rel_tol = f->rel_tol;
        if (f->format_opt->count()) rc_.format = f->format == "csv" ? Format::csv : Format::json;
        if (f->output_opt->count()) rc_.output_path = f->output;
        rc_.quad.validate();
    }

    SpaceParams space() const { return model_space(rc_.space); }

    void emit(const std::string& text) {
        if (rc_.output_path.empty()) {
            out_ << text;
            return;
        }
        std::ofstream file(rc_.output_path, std::ios::binary);
        if (!file) throw invalid_parameter("cannot open output file '" + rc_.output_path + "'");
        file << text;
    }

    Format format_or(Format fallback) const { return rc_.format.value_or(fallback); }

    // A table with a grid column and one or two value columns.
    void emit_table(const std::string& operation, const json& params, const std::vector<double>& grid,
                    const std::vector<cdouble>& values, bool complex_values) {
        const json config = config_json(rc_, params);
        if (format_or(Format::csv) == Format::csv) {
            io::Table t;
            t.header = {{"space", rc_.space}, {"operation", operation}, {"config", config["hash"].get<std::string>()}};
            t.columns = complex_values ? std::vector<std::string>{"grid", "value_re", "value_im"}
                                       : std::vector<std::string>{"grid", "value"};
            for (std::size_t i = 0; i < grid.size(); ++i) {
                if (complex_values) t.rows.push_back({grid[i], values[i].real(), values[i].imag()});
                else t.rows.push_back({grid[i], values[i].real()});
            }
            emit(io::write_csv(t));
            return;
        }
        json j;
        j["operation"] = operation;
        j["config"] = config;
        json g = json::array(), re = json::array(), im = json::array();
        for (std::size_t i = 0; i < grid.size(); ++i) {
            g.push_back(io::number(grid[i]));
            re.push_back(io::number(values[i].real()));
            im.push_back(io::number(values[i].imag()));
        }
        j["grid"] = g;
        if (complex_values) {
            j["value_re"] = re;
            j["value_im"] = im;
        } else {
            j["value"] = re;
        }
        emit(j.dump(2) + "\n");
    }

    void emit_report(json j) {
        if (format_or(Format::json) != Format::json)
            throw invalid_parameter(j["operation"].get<std::string>() + " produces a JSON report only");
        emit(j.dump(2) + "\n");
    }

    static std::vector<double> linspace(double a, double b, int points) {
        if (points < 2) throw invalid_parameter("--points must be >= 2");
        std::vector<double> g(points);
        for (int i = 0; i < points; ++i) g[i] = a + (b - a) * i / (points - 1);
        return g;
    }

    void build(CLI::App& app) {
        build_sphfn(app);
        build_plancherel(app);
        build_heat(app);
        build_abel(app);
        build_mass(app);
        build_beurling(app);
        build_demange(app);
        build_verdict(app);
        build_sharpness(app);
        build_selftest(app);
    }

    void build_sphfn(CLI::App& app) {
        auto* sub = app.add_subcommand("sphfn", "Spherical function phi_lambda(a_t)");
        add_common(sub);
        auto p = std::make_shared<std::tuple<double, double, std::vector<double>>>();
        sub->add_option("--lambda", std::get<0>(*p), "Spectral parameter (real part)")->required();
        sub->add_option("--lambda-im", std::get<1>(*p), "Imaginary part of lambda");
        sub->add_option("--t", std::get<2>(*p), "Radii (one or more)")->required()->expected(1, -1);
        sub->callback([this, p] {
            action_ = [this, p] {
                const auto& [re, im, ts] = *p;
                const auto s = space();
                std::vector<cdouble> vals;
                for (double t : ts) vals.push_back(spherical_function(s, SpectralParam{re, im}, t));
                emit_table("sphfn", {{"lambda_re", re}, {"lambda_im", im}}, ts, vals, true);
                return exit_ok;
            };
        });
    }

    void build_plancherel(CLI::App& app) {
        auto* sub = app.add_subcommand("plancherel", "Plancherel density on [0, lambda_max]");
        add_common(sub);
        auto p = std::make_shared<std::pair<double, int>>(10.0, 101);
        sub->add_option("--lambda-max", p->first, "Largest lambda")->required();
        sub->add_option("--points", p->second, "Grid points");
        sub->callback([this, p] {
            action_ = [this, p] {
                const auto s = space();
                const auto grid = linspace(0.0, p->first, p->second);
                std::vector<cdouble> vals;
                for (double l : grid) vals.push_back(plancherel_density(s, l));
                emit_table("plancherel", {{"lambda_max", p->first}, {"points", p->second}}, grid, vals, false);
                return exit_ok;
            };
        });
    }

    void build_heat(CLI::App& app) {
        auto* sub = app.add_subcommand("heat", "Heat kernel h_t(r) on [0, r_max]");
        add_common(sub);
        struct P {
            double time = 1.0, r_max = 10.0;
            int points = 101;
            std::string method;
        };
        auto p = std::make_shared<P>();
        sub->add_option("--time", p->time, "Heat time t")->required();
        sub->add_option("--r-max", p->r_max, "Largest radius")->required();
        sub->add_option("--points", p->points, "Grid points");
        sub->add_option("--method", p->method, "closed, quad or abel (default: best available)")
            ->check(CLI::IsMember({"closed", "quad", "abel"}));
        sub->callback([this, p] {
            action_ = [this, p] {
                const auto s = space();
                HeatMethod m = default_heat_method(s);
                if (p->method == "closed") m = HeatMethod::closed_form;
                else if (p->method == "quad") m = HeatMethod::quadrature;
                else if (p->method == "abel") m = HeatMethod::abel;
                const char* names[] = {"closed", "quad", "abel"};
                const auto grid = linspace(0.0, p->r_max, p->points);
                std::vector<cdouble> vals;
                for (double r : grid) vals.push_back(heat_kernel(s, p->time, r, m, rc_.quad));
                emit_table("heat",
                           {{"time", p->time}, {"r_max", p->r_max}, {"points", p->points},
                            {"method", names[static_cast<int>(m)]}},
                           grid, vals, false);
                return exit_ok;
            };
        });
    }

    void build_abel(CLI::App& app) {
        auto* sub = app.add_subcommand("abel", "Abel transform of a radial profile on [0, x_max]");
        add_common(sub);
        struct P {
            std::string profile;
            double x_max = 0.0;
            int points = 101;
        };
        auto p = std::make_shared<P>();
        sub->add_option("--profile", p->profile, "heat:T, gaussian:A or zero")->required();
        sub->add_option("--x-max", p->x_max, "Largest abscissa (default: profile extent)");
        sub->add_option("--points", p->points, "Grid points");
        sub->callback([this, p] {
            action_ = [this, p] {
                const auto s = space();
                const auto f = parse_profile(p->profile);
                const auto A = abel_transform(s, f, rc_.quad);
                const double x_max = p->x_max > 0.0 ? std::min(p->x_max, A.hi()) : A.hi();
                const auto grid = linspace(0.0, x_max, p->points);
                std::vector<cdouble> vals;
                for (double x : grid) vals.push_back(A(x).real());
                emit_table("abel", {{"profile", p->profile}, {"x_max", x_max}, {"points", p->points}}, grid, vals, false);
                return exit_ok;
            };
        });
    }

    void build_mass(CLI::App& app) {
        auto* sub = app.add_subcommand("mass", "Total mass of the heat kernel");
        add_common(sub);
        auto time = std::make_shared<double>(1.0);
        sub->add_option("--time", *time, "Heat time t")->required();
        sub->callback([this, time] {
            action_ = [this, time] {
                const double m = total_mass(space(), *time, rc_.quad);
                const json params = {{"time", *time}};
                if (format_or(Format::json) == Format::csv) {
                    emit_table("mass", params, {*time}, {m}, false);
                    return exit_ok;
                }
                json j;
                j["operation"] = "mass";
                j["config"] = config_json(rc_, params);
                j["value"] = io::number(m);
                emit_report(j);
                return exit_ok;
            };
        });
    }

    struct LadderFlags {
        int d = 0;
        double c = 1.0, eps = 0.0;
        std::vector<double> ladder;
        bool waive = false;
    };

    void add_ladder_options(CLI::App* sub, LadderFlags& lf, bool with_c_eps) {
        sub->add_option("--d", lf.d, "Denominator exponent")->required()->check(CLI::NonNegativeNumber);
        if (with_c_eps) {
            sub->add_option("--c", lf.c, "Cross-term weight");
            sub->add_option("--eps", lf.eps, "Xi exponent modifier (Xi^{1+eps})");
        }
        sub->add_option("--ladder", lf.ladder, "Truncation radii")->expected(1, -1);
        sub->add_flag("--waive-consistency", lf.waive, "Skip the transform-pair consistency check");
    }

    static BeurlingConfig to_config(const LadderFlags& lf) {
        BeurlingConfig cfg;
        cfg.d = lf.d;
        cfg.c = lf.c;
        cfg.eps = lf.eps;
        if (!lf.ladder.empty()) cfg.ladder = lf.ladder;
        cfg.waive_consistency = lf.waive;
        return cfg;
    }

    static json ladder_params(const BeurlingConfig& cfg) {
        return {{"d", cfg.d}, {"c", cfg.c}, {"eps", cfg.eps}, {"ladder", cfg.ladder}, {"rel_tol_ladder", cfg.rel_tol},
                {"growth_factor", cfg.growth_factor}, {"waive_consistency", cfg.waive_consistency}};
    }

    void emit_ladder(const std::string& operation, json params, const ConvergenceReport& r, json extra = {}) {
        if (format_or(Format::json) == Format::csv) {
            std::vector<cdouble> vals(r.partial_values.begin(), r.partial_values.end());
            emit_table(operation, params, r.ladder, vals, false);
            return;
        }
        json j;
        j["operation"] = operation;
        j["config"] = config_json(rc_, params);
        const json body = io::report_json(r);
        for (const auto& [k, v] : body.items()) j[k] = v;
        for (const auto& [k, v] : extra.items()) j[k] = v;
        emit_report(j);
    }

    void build_beurling(CLI::App& app) {
        auto* sub = app.add_subcommand("beurling", "Beurling double integral along a truncation ladder");
        add_common(sub);
        struct P {
            std::string profile;
            LadderFlags lf;
            bool ridge = false;
        };
        auto p = std::make_shared<P>();
        sub->add_option("--profile", p->profile, "heat:T, gaussian:A or zero")->required();
        add_ladder_options(sub, p->lf, true);
        sub->add_flag("--ridge", p->ridge, "Also report the one-dimensional ridge integral");
        sub->callback([this, p] {
            action_ = [this, p] {
                const auto s = space();
                const auto cfg = to_config(p->lf);
                cfg.validate();
                const auto f = parse_profile(p->profile);
                const auto fh = matching_spectrum(s, f, rc_.quad, cfg.ladder.back());
                const auto r = beurling_functional(s, f, fh, cfg, rc_.quad);
                json params = ladder_params(cfg);
                params["profile"] = p->profile;
                json extra = json::object();
                if (p->ridge) {
                    const auto rr = ridge_functional(s, f, s, fh, cfg, rc_.quad);
                    json rj = io::report_json(rr.report);
                    rj["slope"] = rr.slope;
                    extra["ridge"] = rj;
                }
                emit_ladder("beurling", params, r, extra);
                return exit_ok;
            };
        });
    }

    void build_demange(CLI::App& app) {
        auto* sub = app.add_subcommand("demange", "Two-space pair condition");
        add_common(sub, false);
        struct P {
            std::string space1 = "h3", space2 = "h3", profile1 = "heat:1", profile2 = "heat:1";
            LadderFlags lf;
        };
        auto p = std::make_shared<P>();
        sub->add_option("--space1", p->space1, "First space")->required();
        sub->add_option("--space2", p->space2, "Second space")->required();
        sub->add_option("--profile1", p->profile1, "Profile on the first space (default heat:1)");
        sub->add_option("--profile2", p->profile2, "Profile on the second space (default heat:1)");
        add_ladder_options(sub, p->lf, false);
        sub->callback([this, p] {
            action_ = [this, p] {
                rc_.space = p->space1 + "|" + p->space2;
                const auto s1 = model_space(p->space1), s2 = model_space(p->space2);
                auto cfg = to_config(p->lf);
                cfg.validate();
                const auto f1 = parse_profile(p->profile1), f2 = parse_profile(p->profile2);
                const auto fh1 = matching_spectrum(s1, f1, rc_.quad, cfg.ladder.back());
                const auto fh2 = matching_spectrum(s2, f2, rc_.quad, cfg.ladder.back());
                const auto [r1, r2] = demange_pair(s1, f1, fh1, s2, f2, fh2, cfg.d, rc_.quad, cfg);
                json params = ladder_params(cfg);
                params["space1"] = p->space1;
                params["space2"] = p->space2;
                params["profile1"] = p->profile1;
                params["profile2"] = p->profile2;
                if (format_or(Format::json) == Format::csv) {
                    io::Table t;
                    t.header = {{"space", rc_.space},
                                {"operation", "demange"},
                                {"config", config_json(rc_, params)["hash"].get<std::string>()}};
                    t.columns = {"grid", "value_1", "value_2"};
                    for (std::size_t k = 0; k < r1.ladder.size(); ++k)
                        t.rows.push_back({r1.ladder[k], r1.partial_values[k], r2.partial_values[k]});
                    emit(io::write_csv(t));
                    return exit_ok;
                }
                json j;
                j["operation"] = "demange";
                j["config"] = config_json(rc_, params);
                j["ladder"] = cfg.ladder;
                j["classification"] = {to_string(r1.classification), to_string(r2.classification)};
                j["value"] = {io::report_json(r1)["value"], io::report_json(r2)["value"]};
                j["reports"] = {io::report_json(r1), io::report_json(r2)};
                emit_report(j);
                return exit_ok;
            };
        });
    }

    void emit_verdict(const std::string& name, const json& params, const Verdict& v) {
        json j;
        j["operation"] = "verdict " + name;
        j["config"] = config_json(rc_, params);
        const json body = io::verdict_json(v);
        for (const auto& [k, val] : body.items()) j[k] = val;
        emit_report(j);
    }

    void build_verdict(CLI::App& app) {
        auto* sub = app.add_subcommand("verdict", "Case analysis of the uncertainty theorems");
        sub->require_subcommand(1);
        struct P {
            double a = 0, b = 0, p = 2, alpha = 0, beta = 0;
            std::string p1 = "2", p2 = "2";
            int n = 0, m = 0, N = 0, d = 0;
        };
        auto p = std::make_shared<P>();

        auto* hardy = sub->add_subcommand("hardy", "Hardy: Gaussian decay of f and f^");
        add_common(hardy);
        hardy->add_option("--a", p->a, "Radial Gaussian rate")->required();
        hardy->add_option("--b", p->b, "Spectral Gaussian rate")->required();
        hardy->callback([this, p] {
            action_ = [this, p] {
                emit_verdict("hardy", {{"a", p->a}, {"b", p->b}}, verdict_hardy(space(), p->a, p->b));
                return exit_ok;
            };
        });

        auto* morgan = sub->add_subcommand("morgan", "Morgan: e^{-a sigma^p} and e^{-b |lambda|^q}");
        add_common(morgan);
        morgan->add_option("--a", p->a, "Radial rate")->required();
        morgan->add_option("--b", p->b, "Spectral rate")->required();
        morgan->add_option("--p", p->p, "Radial exponent p > 1")->required();
        morgan->add_option("--n", p->n, "Polynomial weight exponent")->required();
        morgan->callback([this, p] {
            action_ = [this, p] {
                emit_verdict("morgan", {{"a", p->a}, {"b", p->b}, {"p", p->p}, {"n", p->n}},
                             verdict_morgan(space(), p->a, p->b, p->p, p->n));
                return exit_ok;
            };
        });

        auto* gs = sub->add_subcommand("gs", "Gelfand-Shilov integrability conditions");
        add_common(gs);
        gs->add_option("--alpha", p->alpha, "Radial rate")->required();
        gs->add_option("--beta", p->beta, "Spectral rate")->required();
        gs->add_option("--p", p->p, "Exponent p > 1")->required();
        gs->add_option("--N", p->N, "Polynomial weight exponent")->required();
        gs->callback([this, p] {
            action_ = [this, p] {
                emit_verdict("gs", {{"alpha", p->alpha}, {"beta", p->beta}, {"p", p->p}, {"N", p->N}},
                             verdict_gelfand_shilov(space(), p->alpha, p->beta, p->p, p->N));
                return exit_ok;
            };
        });

        auto* cp = sub->add_subcommand("cp", "Cowling-Price L^p conditions");
        add_common(cp);
        cp->add_option("--a", p->a, "Radial rate")->required();
        cp->add_option("--b", p->b, "Spectral rate")->required();
        cp->add_option("--p1", p->p1, "Radial exponent in [1, inf]")->required();
        cp->add_option("--p2", p->p2, "Spectral exponent in [1, inf]")->required();
        cp->add_option("--m", p->m, "Radial polynomial weight")->required();
        cp->add_option("--n", p->n, "Spectral polynomial weight")->required();
        cp->callback([this, p] {
            action_ = [this, p] {
                const double p1 = parse_exponent(p->p1), p2 = parse_exponent(p->p2);
                emit_verdict("cp",
                             {{"a", p->a}, {"b", p->b}, {"p1", p->p1}, {"p2", p->p2}, {"m", p->m}, {"n", p->n}},
                             verdict_cowling_price(space(), p->a, p->b, p1, p2, p->m, p->n));
                return exit_ok;
            };
        });

        auto* beur = sub->add_subcommand("beurling", "Beurling condition with exponent d");
        add_common(beur);
        beur->add_option("--d", p->d, "Denominator exponent")->required();
        beur->callback([this, p] {
            action_ = [this, p] {
                emit_verdict("beurling", {{"d", p->d}}, verdict_beurling(space(), p->d));
                return exit_ok;
            };
        });
    }

    void build_sharpness(CLI::App& app) {
        auto* sub = app.add_subcommand("sharpness", "Sharpness construction on h3 and its weighted functional");
        add_common(sub, false);
        struct P {
            double zeta = 0.1;
            std::vector<double> poly{1.0};
            LadderFlags lf;
        };
        auto p = std::make_shared<P>();
        sub->add_option("--zeta", p->zeta, "Bump half-width in (0, 1/4)")->required();
        sub->add_option("--poly", p->poly, "Coefficients of P in powers of lambda^2")->expected(1, -1);
        add_ladder_options(sub, p->lf, true);
        sub->callback([this, p] {
            action_ = [this, p] {
                const auto cfg = to_config(p->lf);
                const auto pair = sharpness_construct(p->zeta, EvenPolynomial{p->poly}, rc_.quad);
                const auto rb = sharpness_radial_bound(pair), sb = sharpness_spectral_bound(pair);
                std::vector<double> probes;
                for (int i = 0; i <= 40; ++i) probes.push_back(0.25 * i);
                const double conv = sharpness_convolution_check(pair, probes, rc_.quad);
                const auto r = sharpness_verify(pair, cfg.c, cfg.eps, cfg.d, rc_.quad, cfg);
                json params = ladder_params(cfg);
                params["zeta"] = p->zeta;
                params["poly"] = p->poly;
                auto bound = [](const BoundCheck& b) {
                    return json{{"passed", b.passed}, {"fitted_constant", io::number(b.fitted_constant)},
                                {"tail_sup", io::number(b.tail_sup)}};
                };
                emit_ladder("sharpness", params, r,
                            {{"radial_bound", bound(rb)},
                             {"spectral_bound", bound(sb)},
                             {"convolution_check", io::number(conv)}});
                return exit_ok;
            };
        });
    }

    void build_selftest(CLI::App& app) {
        auto* sub = app.add_subcommand("selftest", "Run a self-test suite");
        add_common(sub, false);
        auto suite = std::make_shared<std::string>("quick");
        sub->add_option("--suite", *suite, "quick or acceptance")->check(CLI::IsMember({"quick", "acceptance"}));
        sub->callback([this, suite] {
            action_ = [this, suite] {
                bool all = true;
                json results = json::array();
                std::string text;
                for (const auto& c : selftest::suite(*suite)) {
                    const auto r = selftest::run_check(c);
                    all = all && r.passed;
                    err_ << (r.passed ? "PASS " : "FAIL ") << r.name << "\n";
                    text += std::string(r.passed ? "PASS " : "FAIL ") + r.name + ": " + r.detail + "\n";
                    results.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
                }
                if (format_or(Format::csv) == Format::json) {
                    json j;
                    j["operation"] = "selftest";
                    j["suite"] = *suite;
                    j["results"] = results;
                    emit(j.dump(2) + "\n");
                } else {
                    emit(text);
                }
                return all ? exit_ok : exit_selftest;
            };
        });
    }

    std::ostream& out_;
    std::ostream& err_;
    RunConfig rc_;
    std::map<CLI::App*, Flags> flags_;
    std::function<int()> action_;
};

/// Runs the command line; output goes to `out`, diagnostics to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    return Runner(out, err).run(argc, argv);
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"harmonic_cli"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace harmonic::cli
