#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hermitia/contour.hpp"
#include "hermitia/scalar.hpp"

namespace hermitia {

enum class CheckStatus { Passed, Failed, Skipped };

/// One identity evaluated at one (tau, parameters) point.
///
/// Equality checks compare lhs against rhs; residual checks carry the residual
/// in lhs, zero in rhs, and a pinned bound in `tolerance`.
struct IdentityCheck {
    std::string name;
    Complex tau;
    std::map<std::string, Complex> parameters;
    Complex lhs;
    Complex rhs;
    double abs_err = 0.0;
    double rel_err = 0.0;
    double tolerance = 0.0;
    CheckStatus status = CheckStatus::Skipped;
    std::string reason;

    bool passed() const { return status == CheckStatus::Passed; }
};

struct VerifyConfig {
    /// Tolerance of the equality checks.
    double tolerance = 1e-8;
    ContourConfig contour;
};

struct ReportSummary {
    std::size_t total = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;
    ReportSummary summary;
    VerifyConfig config;
    std::vector<Complex> tau_grid;
    std::string suite;
};

enum class Suite { Moments, Hermite, Realline, Contour, Gamma, All };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view suite_name(Suite suite);

/// {-0.5, 0.3, 0.5, 1.3, 2.7, 0.5+0.5i}.
std::vector<Complex> default_tau_grid();

/// Runs every identity of `suite` on each grid point, in a fixed order.
/// Failures inside a check are recorded on that check; nothing is thrown.
IdentityReport run_suite(Suite suite, std::span<const Complex> tau_grid,
                         const VerifyConfig& cfg = {});

/// Canonical JSON form. A timestamp is added unless `deterministic`.
std::string report_to_json(const IdentityReport& report, bool deterministic);

/// Columns name,tau_re,tau_im,abs_err,rel_err,passed.
std::string report_to_csv(const IdentityReport& report);

}  // namespace hermitia
