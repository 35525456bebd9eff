#include "hermitia/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hermitia/contour.hpp"
#include "hermitia/errors.hpp"
#include "hermitia/functional.hpp"
#include "hermitia/hermite.hpp"
#include "hermitia/quadrature.hpp"
#include "hermitia/verify.hpp"

namespace hermitia {

namespace {

double parse_real(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw CLI::ValidationError("not a number: '" + std::string(text) + "'");
    }
    return value;
}

std::string format_real(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

std::string format_complex(Complex v) {
    std::string s = format_real(v.real());
    if (v.imag() != 0.0) {
        s += (std::signbit(v.imag()) ? " - " : " + ") + format_real(std::abs(v.imag())) + "i";
    }
    return s;
}

nlohmann::ordered_json complex_json(Complex v) {
    return {{"re", v.real()}, {"im", v.imag()}};
}

double default_verify_tol() {
    if (const char* env = std::getenv("HERMITIA_DEFAULT_TOL")) {
        try {
            const double tol = parse_real(env);
            if (tol > 0.0) return tol;
        } catch (const CLI::Error&) {
        }
    }
    return 1e-8;
}

struct GlobalOptions {
    double rel_tol = QuadratureConfig{}.rel_tol;
    double abs_tol = QuadratureConfig{}.abs_tol;
    double epsilon = ContourConfig{}.epsilon;
    std::string radius = "auto";

    ContourConfig contour() const {
        ContourConfig cfg;
        cfg.quadrature.rel_tol = rel_tol;
        cfg.quadrature.abs_tol = abs_tol;
        if (radius != "auto") {
            cfg.quadrature.truncation_radius = parse_real(radius);
        }
        cfg.epsilon = epsilon;
        cfg.validate();
        return cfg;
    }
};

}  // namespace

Complex parse_complex(std::string_view text) {
    const auto comma = text.find(',');
    if (comma == std::string_view::npos) {
        return parse_real(text);
    }
    return {parse_real(text.substr(0, comma)), parse_real(text.substr(comma + 1))};
}

std::vector<Complex> parse_complex_list(std::string_view text) {
    std::vector<Complex> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const auto end = text.find_first_of("; \t", pos);
        const auto item = text.substr(pos, end == std::string_view::npos ? text.npos : end - pos);
        if (!item.empty()) {
            out.push_back(parse_complex(item));
        }
        if (end == std::string_view::npos) break;
        pos = end + 1;
    }
    return out;
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hermite functions of complex degree and their moment functional"};
    app.require_subcommand(1);

    GlobalOptions global;
    app.add_option("--rel-tol", global.rel_tol, "Relative quadrature tolerance")->capture_default_str();
    app.add_option("--abs-tol", global.abs_tol, "Absolute quadrature tolerance")->capture_default_str();
    app.add_option("--epsilon", global.epsilon, "Contour detour radius")->capture_default_str();
    app.add_option("--radius", global.radius, "Truncation radius, or auto")->capture_default_str();

    std::string tau_text;
    std::string x_text;

    auto* eval = app.add_subcommand("eval", "Evaluate H_tau(x)");
    std::string eval_method = "auto";
    eval->add_option("--tau", tau_text)->required();
    eval->add_option("--x", x_text)->required();
    eval->add_option("--method", eval_method)
        ->check(CLI::IsMember({"auto", "series", "1f1", "asymptotic"}));

    auto* moments = app.add_subcommand("moments", "Moments of the functional");
    unsigned max_n = 10;
    std::string moments_format = "json";
    moments->add_option("--tau", tau_text)->required();
    moments->add_option("--max-n", max_n)->required();
    moments->add_option("--format", moments_format)->check(CLI::IsMember({"json", "csv"}));

    auto* apply = app.add_subcommand("apply", "Apply the functional to a polynomial");
    std::string poly_text;
    std::string via = "moments";
    apply->add_option("--tau", tau_text)->required();
    apply->add_option("--poly", poly_text, "Coefficients c0,c1,... (';' separates complex ones given as re,im)")
        ->required();
    apply->add_option("--via", via)->check(CLI::IsMember({"moments", "quadrature", "contour"}));

    auto* gamma_cmd = app.add_subcommand("gamma", "Gamma(tau+1) by one representation");
    std::string gamma_method;
    gamma_cmd->add_option("--tau", tau_text)->required();
    gamma_cmd->add_option("--method", gamma_method)
        ->required()
        ->check(CLI::IsMember({"realline", "loop", "sine", "reciprocal", "reference"}));

    auto* verify = app.add_subcommand("verify", "Run the identity suite");
    std::string suite_text;
    std::string grid_text;
    double tol = default_verify_tol();
    std::string verify_format = "json";
    bool deterministic = false;
    verify->add_option("--suite", suite_text)
        ->required()
        ->check(CLI::IsMember({"moments", "hermite", "realline", "contour", "gamma", "all"}));
    verify->add_option("--tau-grid", grid_text, "Values separated by ';', each re or re,im");
    verify->add_option("--tol", tol)->capture_default_str();
    verify->add_option("--format", verify_format)->check(CLI::IsMember({"json", "csv"}));
    verify->add_flag("--deterministic", deterministic, "Omit the timestamp");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        const ContourConfig cfg = global.contour();

        if (eval->parsed()) {
            const Complex tau = parse_complex(tau_text);
            const Complex x = parse_complex(x_text);
            Complex value;
            if (eval_method == "series") {
                value = hermite_series(tau, x);
            } else if (eval_method == "1f1") {
                value = hermite_1f1_form(tau, x);
            } else if (eval_method == "asymptotic") {
                if (x.imag() != 0.0) throw DomainError("asymptotic form needs real x > 0");
                value = hermite_asymptotic(tau, x.real(), cfg.quadrature.hermite.asymptotic_terms);
            } else {
                value = hermite(tau, x, cfg.quadrature.hermite);
            }
            out << format_complex(value) << '\n';
            return 0;
        }

        if (moments->parsed()) {
            const GeneralizedHermiteFunctional g(parse_complex(tau_text));
            if (moments_format == "csv") {
                out << "n,re,im\n";
                for (unsigned n = 0; n <= max_n; ++n) {
                    const Complex m = g.moment(n);
                    out << n << ',' << format_real(m.real()) << ',' << format_real(m.imag()) << '\n';
                }
            } else {
                nlohmann::ordered_json j;
                j["tau"] = complex_json(g.tau());
                auto arr = nlohmann::ordered_json::array();
                for (unsigned n = 0; n <= max_n; ++n) {
                    arr.push_back(complex_json(g.moment(n)));
                }
                j["moments"] = std::move(arr);
                out << j.dump(2) << '\n';
            }
            return 0;
        }

        if (apply->parsed()) {
            const Complex tau = parse_complex(tau_text);
            // Real coefficients may be comma separated; complex ones need ';'.
            std::vector<Complex> coeffs;
            if (poly_text.find(';') != std::string::npos) {
                coeffs = parse_complex_list(poly_text);
            } else {
                std::string spaced = poly_text;
                std::replace(spaced.begin(), spaced.end(), ',', ';');
                coeffs = parse_complex_list(spaced);
            }
            if (coeffs.empty()) throw CLI::ValidationError("empty polynomial");
            const Polynomial p(std::move(coeffs));
            Complex value;
            if (via == "quadrature") {
                value = apply_via_quadrature(tau, p, cfg.quadrature);
            } else if (via == "contour") {
                value = apply_via_contour(tau, p, cfg);
            } else {
                value = GeneralizedHermiteFunctional(tau).apply(p);
            }
            out << format_complex(value) << '\n';
            return 0;
        }

        if (gamma_cmd->parsed()) {
            const Complex tau = parse_complex(tau_text);
            Complex value;
            Complex reference = gamma(tau + 1.0);
            if (gamma_method == "realline") {
                value = gamma_via_realline(tau, cfg.quadrature);
            } else if (gamma_method == "loop") {
                value = gamma_via_loop(tau, cfg);
            } else if (gamma_method == "sine") {
                value = gamma_via_sine_form(tau, cfg);
            } else if (gamma_method == "reciprocal") {
                value = reciprocal_gamma_via_contour(tau, cfg);
                reference = reciprocal_gamma(tau + 1.0);
            } else {
                value = reference;
            }
            out << "value: " << format_complex(value) << '\n';
            out << "delta: " << format_real(std::abs(value - reference)) << '\n';
            return 0;
        }

        if (verify->parsed()) {
            VerifyConfig vcfg;
            vcfg.tolerance = tol;
            vcfg.contour = cfg;
            const auto grid = grid_text.empty() ? default_tau_grid() : parse_complex_list(grid_text);
            if (grid.empty()) throw CLI::ValidationError("empty tau grid");
            const auto report = run_suite(*parse_suite(suite_text), grid, vcfg);
            out << (verify_format == "csv" ? report_to_csv(report)
                                           : report_to_json(report, deterministic));
            return report.summary.failed > 0 ? 1 : 0;
        }
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace hermitia
