#include "hermitia/verify.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <functional>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "hermitia/errors.hpp"
#include "hermitia/functional.hpp"
#include "hermitia/hermite.hpp"
#include "hermitia/quadrature.hpp"

namespace hermitia {

namespace {

using Params = std::map<std::string, Complex>;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool is_integer(Complex tau) {
    return near_nonnegative_integer(tau, 1e-10) || near_nonpositive_integer(tau, 1e-10);
}

bool is_negative_integer(Complex tau) {
    return tau.real() < -0.5 && near_nonpositive_integer(tau, 1e-10);
}

bool is_real(Complex tau) { return tau.imag() == 0.0; }

class Recorder {
public:
    explicit Recorder(std::vector<IdentityCheck>& out) : out_(out) {}

    // lhs and rhs computed together; passed iff abs_err <= tol or rel_err <= tol.
    void equality(std::string name, Complex tau, Params params, double tol,
                  const std::function<std::pair<Complex, Complex>()>& compute) {
        IdentityCheck c = start(std::move(name), tau, std::move(params));
        c.tolerance = tol;
        try {
            const auto [lhs, rhs] = compute();
            finish(c, lhs, rhs);
        } catch (const std::exception& e) {
            fail(c, e.what());
        }
        out_.push_back(std::move(c));
    }

    // Residual with a pinned bound; bound computed alongside the residual.
    void residual(std::string name, Complex tau, Params params,
                  const std::function<std::pair<Complex, double>()>& compute) {
        IdentityCheck c = start(std::move(name), tau, std::move(params));
        try {
            const auto [value, bound] = compute();
            c.tolerance = bound;
            finish(c, value, 0.0);
        } catch (const std::exception& e) {
            fail(c, e.what());
        }
        out_.push_back(std::move(c));
    }

    void skip(std::string name, Complex tau, Params params, std::string reason) {
        IdentityCheck c = start(std::move(name), tau, std::move(params));
        c.status = CheckStatus::Skipped;
        c.abs_err = kNaN;
        c.rel_err = kNaN;
        c.reason = std::move(reason);
        out_.push_back(std::move(c));
    }

private:
    static IdentityCheck start(std::string name, Complex tau, Params params) {
        IdentityCheck c;
        c.name = std::move(name);
        c.tau = tau;
        c.parameters = std::move(params);
        return c;
    }

    static void finish(IdentityCheck& c, Complex lhs, Complex rhs) {
        c.lhs = lhs;
        c.rhs = rhs;
        c.abs_err = std::abs(lhs - rhs);
        c.rel_err = std::abs(rhs) > 0.0 ? c.abs_err / std::abs(rhs) : c.abs_err;
        const bool ok = c.abs_err <= c.tolerance || c.rel_err <= c.tolerance;
        c.status = ok ? CheckStatus::Passed : CheckStatus::Failed;
    }

    static void fail(IdentityCheck& c, std::string what) {
        c.status = CheckStatus::Failed;
        c.abs_err = kNaN;
        c.rel_err = kNaN;
        c.reason = std::move(what);
    }

    std::vector<IdentityCheck>& out_;
};

constexpr unsigned kMaxMoment = 20;

void moments_suite(Recorder& rec, std::span<const Complex> grid, const VerifyConfig& cfg) {
    for (unsigned n = 0; n <= kMaxMoment; ++n) {
        rec.residual("hermite_moment_relation", 0.0, {{"n", double(n)}},
                     [n] { return std::pair{first_order_residual_hermite(n), 1e-12}; });
    }
    for (const Complex tau : grid) {
        if (is_negative_integer(tau)) {
            rec.skip("moments", tau, {}, "tau is a negative integer");
            continue;
        }
        const GeneralizedHermiteFunctional g(tau);
        rec.equality("monic", tau, {}, 0.0, [&] { return std::pair{g.moment(0), Complex(1.0)}; });
        for (unsigned n = 1; n <= kMaxMoment; n += 2) {
            rec.equality("symmetric", tau, {{"n", double(n)}}, 0.0,
                         [&] { return std::pair{g.moment(n), Complex(0.0)}; });
        }
        for (unsigned n = 0; n <= kMaxMoment; ++n) {
            rec.equality("moment_relation", tau, {{"n", double(n)}}, cfg.tolerance,
                         [&] { return std::pair{g.moment(n), moment_via_relation(tau, n)}; });
        }
        for (unsigned n = 0; n <= kMaxMoment; ++n) {
            rec.residual("second_order_relation", tau, {{"n", double(n)}}, [&] {
                const double scale = double(n) + std::abs(tau) + 2.0;
                const double bound = 1e-11 * scale * scale * std::max(1.0, std::abs(g.moment(n)));
                return std::pair{second_order_residual(tau, n), bound};
            });
        }
    }
}

void hermite_suite(Recorder& rec, std::span<const Complex> grid, const VerifyConfig& cfg) {
    const HermiteEvalConfig& hcfg = cfg.contour.quadrature.hermite;
    for (const Complex tau : grid) {
        for (const double x : {0.1, 0.5, 1.0, 2.0}) {
            if (near_nonnegative_integer(tau, 1e-10)) {
                rec.skip("series_vs_hypergeometric", tau, {{"x", x}}, "power series degenerates at integer degree");
                continue;
            }
            rec.equality("series_vs_hypergeometric", tau, {{"x", x}}, cfg.tolerance, [&] {
                return std::pair{hermite_1f1_form(tau, x), hermite_series(tau, x)};
            });
        }
        for (const double x : {0.1, 0.5, 1.0, 2.0, 5.0}) {
            rec.residual("recurrence", tau, {{"x", x}}, [&] {
                const Complex up = hermite(tau + 1.0, x, hcfg);
                const Complex r = up - 2.0 * x * hermite(tau, x, hcfg) +
                                  2.0 * tau * hermite(tau - 1.0, x, hcfg);
                return std::pair{r, 1e-9 * std::max(1.0, std::abs(up))};
            });
            rec.residual("ode", tau, {{"x", x}}, [&] {
                const Complex h = hermite(tau, x, hcfg);
                const Complex d1 = hermite_derivative(tau, x, hcfg);
                const Complex d2 = 4.0 * tau * (tau - 1.0) * hermite(tau - 2.0, x, hcfg);
                const Complex r = d2 - 2.0 * x * d1 + 2.0 * tau * h;
                return std::pair{r, 1e-9 * std::max(1.0, std::abs(h))};
            });
        }
        for (const double x : {0.1, 0.5, 1.0, 2.0}) {
            rec.residual("derivative", tau, {{"x", x}}, [&] {
                constexpr double h = 1e-5;
                const Complex fd =
                    (hermite(tau, x + h, hcfg) - hermite(tau, x - h, hcfg)) / (2.0 * h);
                return std::pair{hermite_derivative(tau, x, hcfg) - fd, 1e-6};
            });
        }
        for (const double x : {20.0, 50.0, 100.0}) {
            if (!is_real(tau) || tau.real() < 0.0 || tau.real() > 3.0) {
                rec.skip("asymptotic_ratio", tau, {{"x", x}}, "ratio bound stated for real tau in [0, 3]");
                continue;
            }
            rec.residual("asymptotic_ratio", tau, {{"x", x}}, [&] {
                const Complex ratio = hermite(tau, x, hcfg) / std::exp(tau * std::log(2.0 * x)) - 1.0;
                const double s = std::abs(tau) + 2.0;
                return std::pair{ratio, 5.0 * s * s * s * s / (x * x)};
            });
        }
    }
}

void realline_suite(Recorder& rec, std::span<const Complex> grid, const VerifyConfig& cfg) {
    const QuadratureConfig& qcfg = cfg.contour.quadrature;
    for (const Complex tau : grid) {
        std::vector<Complex> zs{0.0, 0.5, 1.0, 2.3};
        if (std::find(zs.begin(), zs.end(), tau) == zs.end()) {
            zs.push_back(tau);
        }
        for (const Complex z : zs) {
            if (!(z.real() > -1.0) || std::abs(tau.imag()) > kRealLineImagEnvelope) {
                rec.skip("weight_integral", tau, {{"z", z}}, "requires Re z > -1 and |Im tau| <= 3");
                continue;
            }
            rec.equality("weight_integral", tau, {{"z", z}}, cfg.tolerance, [&] {
                return std::pair{hermite_weight_integral(z, tau, qcfg), closed_form_313(z, tau)};
            });
        }
        for (unsigned deg = 0; deg <= 12; ++deg) {
            if (!(tau.real() > -1.0) || std::abs(tau.imag()) > kRealLineImagEnvelope) {
                rec.skip("functional_realline", tau, {{"degree", double(deg)}}, "requires Re tau > -1");
                continue;
            }
            rec.equality("functional_realline", tau, {{"degree", double(deg)}}, cfg.tolerance, [&] {
                const auto p = Polynomial::monomial(deg);
                return std::pair{apply_via_quadrature(tau, p, qcfg),
                                 GeneralizedHermiteFunctional(tau).apply(p)};
            });
        }
        if (is_real(tau) && near_nonnegative_integer(tau, 1e-10) && tau.real() >= 1.0) {
            const int n = static_cast<int>(std::round(tau.real()));
            for (int m = n - 2; m >= 0; m -= 2) {
                rec.residual("orthogonality", tau, {{"m", double(m)}}, [&] {
                    return std::pair{hermite_weight_integral(double(m), tau, qcfg), 1e-10};
                });
            }
        }
    }
}

void contour_suite(Recorder& rec, std::span<const Complex> grid, const VerifyConfig& cfg) {
    for (const Complex tau : grid) {
        if (std::abs(tau.imag()) > kContourImagEnvelope) {
            rec.skip("contour", tau, {}, "|Im tau| exceeds 2");
            continue;
        }
        for (unsigned k = 0; k <= 2; ++k) {
            const unsigned n = 2 * k + 1;
            if (near_nonpositive_integer(double(n) + tau + 1.0, 1e-10)) {
                rec.skip("c1_odd_moment", tau, {{"n", double(n)}},
                         "n + tau + 1 is a nonpositive integer");
                continue;
            }
            rec.residual("c1_odd_moment", tau, {{"n", double(n)}}, [&] {
                return std::pair{contour_moment_c1(n, tau, cfg.contour), 1e-9};
            });
        }
        for (unsigned k = 0; k <= 2; ++k) {
            const unsigned n = 2 * k;
            if (is_integer(tau)) {
                rec.skip("c1_even_moment", tau, {{"n", double(n)}}, "tau is an integer");
                continue;
            }
            rec.equality("c1_even_moment", tau, {{"n", double(n)}}, cfg.tolerance, [&] {
                const Complex expected = -kSqrtPi * gamma(double(n) + tau + 1.0) /
                                         (std::ldexp(1.0, static_cast<int>(n)) * factorial(k));
                return std::pair{contour_moment_c1(n, tau, cfg.contour), expected};
            });
        }
        for (const unsigned n : {0u, 2u}) {
            if (near_nonpositive_integer(double(n) + tau + 1.0, 1e-10)) {
                rec.skip("c1_eps_independence", tau, {{"n", double(n)}},
                         "n + tau + 1 is a nonpositive integer");
                continue;
            }
            const Complex base = [&]() -> Complex {
                try {
                    return contour_moment_c1(n, tau, cfg.contour);
                } catch (const Error&) {
                    return kNaN;
                }
            }();
            for (const double eps : {0.05, 0.2}) {
                rec.residual("c1_eps_independence", tau, {{"n", double(n)}, {"epsilon", eps}}, [&] {
                    ContourConfig moved = cfg.contour;
                    moved.epsilon = eps;
                    const Complex diff = contour_moment_c1(n, tau, moved) - base;
                    return std::pair{diff, 1e-9 * std::max(1.0, std::abs(base))};
                });
            }
        }
        for (unsigned deg = 0; deg <= 8; ++deg) {
            if (is_integer(tau)) {
                rec.skip("functional_contour", tau, {{"degree", double(deg)}}, "tau is an integer");
                continue;
            }
            rec.equality("functional_contour", tau, {{"degree", double(deg)}}, cfg.tolerance, [&] {
                const auto p = Polynomial::monomial(deg);
                return std::pair{apply_via_contour(tau, p, cfg.contour),
                                 GeneralizedHermiteFunctional(tau).apply(p)};
            });
        }
        if (!is_integer(tau)) {
            for (const double eps : {0.05, 0.2}) {
                rec.residual("loop_eps_independence", tau, {{"epsilon", eps}}, [&] {
                    ContourConfig moved = cfg.contour;
                    moved.epsilon = eps;
                    const Complex base = gamma_via_loop(tau, cfg.contour);
                    return std::pair{gamma_via_loop(tau, moved) - base,
                                     1e-9 * std::max(1.0, std::abs(base))};
                });
            }
        }
    }
}

void gamma_suite(Recorder& rec, std::span<const Complex> grid, const VerifyConfig& cfg) {
    for (const Complex tau : grid) {
        if (tau.real() > -1.0 && std::abs(tau.imag()) <= kRealLineImagEnvelope) {
            rec.equality("gamma_realline", tau, {}, cfg.tolerance, [&] {
                return std::pair{gamma_via_realline(tau, cfg.contour.quadrature), gamma(tau + 1.0)};
            });
        } else {
            rec.skip("gamma_realline", tau, {}, "requires Re tau > -1");
        }
        if (is_integer(tau)) {
            rec.skip("gamma_loop", tau, {}, "tau is an integer");
            rec.skip("gamma_sine", tau, {}, "tau is an integer");
        } else {
            rec.equality("gamma_loop", tau, {}, cfg.tolerance, [&] {
                return std::pair{gamma_via_loop(tau, cfg.contour), gamma(tau + 1.0)};
            });
            rec.equality("gamma_sine", tau, {}, cfg.tolerance, [&] {
                return std::pair{gamma_via_sine_form(tau, cfg.contour), gamma(tau + 1.0)};
            });
        }
        rec.equality("reciprocal_gamma", tau, {}, cfg.tolerance, [&] {
            return std::pair{reciprocal_gamma_via_contour(tau, cfg.contour),
                             reciprocal_gamma(tau + 1.0)};
        });
    }
}

nlohmann::ordered_json complex_json(Complex v) {
    nlohmann::ordered_json j;
    j["re"] = v.real();
    j["im"] = v.imag();
    return j;
}

std::string_view status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Passed: return "passed";
        case CheckStatus::Failed: return "failed";
        case CheckStatus::Skipped: return "skipped";
    }
    return "unknown";
}

std::string format_double(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
    if (name == "moments") return Suite::Moments;
    if (name == "hermite") return Suite::Hermite;
    if (name == "realline") return Suite::Realline;
    if (name == "contour") return Suite::Contour;
    if (name == "gamma") return Suite::Gamma;
    if (name == "all") return Suite::All;
    return std::nullopt;
}

std::string_view suite_name(Suite suite) {
    switch (suite) {
        case Suite::Moments: return "moments";
        case Suite::Hermite: return "hermite";
        case Suite::Realline: return "realline";
        case Suite::Contour: return "contour";
        case Suite::Gamma: return "gamma";
        case Suite::All: return "all";
    }
    return "unknown";
}

std::vector<Complex> default_tau_grid() {
    return {-0.5, 0.3, 0.5, 1.3, 2.7, Complex(0.5, 0.5)};
}

IdentityReport run_suite(Suite suite, std::span<const Complex> tau_grid, const VerifyConfig& cfg) {
    IdentityReport report;
    report.config = cfg;
    report.tau_grid.assign(tau_grid.begin(), tau_grid.end());
    report.suite = std::string(suite_name(suite));
    Recorder rec(report.checks);
    const bool all = suite == Suite::All;
    if (all || suite == Suite::Moments) moments_suite(rec, tau_grid, cfg);
    if (all || suite == Suite::Hermite) hermite_suite(rec, tau_grid, cfg);
    if (all || suite == Suite::Realline) realline_suite(rec, tau_grid, cfg);
    if (all || suite == Suite::Contour) contour_suite(rec, tau_grid, cfg);
    if (all || suite == Suite::Gamma) gamma_suite(rec, tau_grid, cfg);

    for (const auto& c : report.checks) {
        ++report.summary.total;
        switch (c.status) {
            case CheckStatus::Passed: ++report.summary.passed; break;
            case CheckStatus::Failed: ++report.summary.failed; break;
            case CheckStatus::Skipped: ++report.summary.skipped; break;
        }
    }
    return report;
}

std::string report_to_json(const IdentityReport& report, bool deterministic) {
    using nlohmann::ordered_json;
    const auto& q = report.config.contour.quadrature;
    ordered_json config;
    config["suite"] = report.suite;
    config["tolerance"] = report.config.tolerance;
    config["rel_tol"] = q.rel_tol;
    config["abs_tol"] = q.abs_tol;
    config["max_levels"] = q.max_levels;
    if (q.truncation_radius) {
        config["radius"] = *q.truncation_radius;
    } else {
        config["radius"] = "auto";
    }
    config["epsilon"] = report.config.contour.epsilon;
    config["asymptotic_threshold"] = q.hermite.asymptotic_threshold;
    config["asymptotic_terms"] = q.hermite.asymptotic_terms;
    ordered_json grid = ordered_json::array();
    for (const Complex t : report.tau_grid) {
        grid.push_back(complex_json(t));
    }
    config["tau_grid"] = std::move(grid);

    ordered_json checks = ordered_json::array();
    for (const auto& c : report.checks) {
        ordered_json j;
        j["name"] = c.name;
        j["tau"] = complex_json(c.tau);
        ordered_json params = ordered_json::object();
        for (const auto& [key, value] : c.parameters) {
            params[key] = complex_json(value);
        }
        j["parameters"] = std::move(params);
        j["lhs"] = complex_json(c.lhs);
        j["rhs"] = complex_json(c.rhs);
        j["abs_err"] = c.abs_err;
        j["rel_err"] = c.rel_err;
        j["tolerance"] = c.tolerance;
        j["status"] = status_name(c.status);
        j["passed"] = c.passed();
        if (!c.reason.empty()) {
            j["reason"] = c.reason;
        }
        checks.push_back(std::move(j));
    }

    ordered_json root;
    root["config"] = std::move(config);
    root["summary"] = {{"total", report.summary.total},
                       {"passed", report.summary.passed},
                       {"failed", report.summary.failed},
                       {"skipped", report.summary.skipped}};
    root["checks"] = std::move(checks);
    if (!deterministic) {
        const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
        root["timestamp"] = buf;
    }
    return root.dump(2) + "\n";
}

std::string report_to_csv(const IdentityReport& report) {
    std::ostringstream os;
    os << "name,tau_re,tau_im,abs_err,rel_err,passed\n";
    for (const auto& c : report.checks) {
        os << c.name << ',' << format_double(c.tau.real()) << ',' << format_double(c.tau.imag())
           << ',' << format_double(c.abs_err) << ',' << format_double(c.rel_err) << ','
           << (c.status == CheckStatus::Skipped ? "skipped" : (c.passed() ? "true" : "false"))
           << '\n';
    }
    return os.str();
}

}  // namespace hermitia
