#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "qgenus/invariants.hpp"

// Closed-form genus bounds, evaluated over exact rationals and asserted
// integral.  A non-integral value is an implementation bug and throws; no
// value is ever rounded.

namespace qgenus {

enum class Sharpness {
    SharpAttainedByS,      // bound attained exactly by the linked class
    SharpPossiblyOther,    // bound sharp; extremal curves only conjecturally of that class
    UnknownConjecturalPi,  // sharpness open; capital Pi is the conjectured value
};

struct LinkageDescriptor {
    i64 ci_a;  // complete-intersection type (ci_a, ci_b) on the quadric
    i64 ci_b;
    i64 residual_degree;                      // eps or eps_prime
    bool residual_on_quadric_surface = true;  // recorded property, never computed
    bool acm_residual = true;                 // arithmetically Cohen-Macaulay residual
};

struct BoundReport {
    Regime regime;
    InvariantSet invariants;
    i64 pi_value;         // proved maximum at the dispatched parameters
    i64 xi_value;         // 0 or 1 correction
    i64 bound_g_minus_1;  // pi_value - xi_value
    i64 capital_pi;       // class-S genus value, conjectured sharp in general
    Sharpness sharp;
    LinkageDescriptor linkage;
    std::optional<i64> no_small_curve_bound;  // engaged iff k^2 < d <= 2k(k-1)
};

// Maximum of the genus functional over the large-degree profile.
// Requires d > 2k(k-1).
i64 pi(i64 d, i64 k);
// 0 iff eps(d, k) is in {0, 1, 2, 2k-1}, else 1.  Requires d > 2k(k-1).
i64 xi(i64 d, i64 k);
// pi and xi at the substituted parameters (d, theta0).  Require d <= 2k(k-1).
i64 pi_prime(i64 d, i64 k);
i64 xi_prime(i64 d, i64 k);
// Class-S genus value.  Requires d > 2k(k-1).
i64 capital_pi(i64 d, i64 k);
// Maximum when the curve lies on no surface of class below k.  Requires
// k^2 < d <= 2k(k-1); the two violations raise distinct errors.
i64 bound_no_small_curve(i64 d, i64 k);

Sharpness sharpness(i64 d, i64 k);
LinkageDescriptor linkage_descriptor(i64 d, i64 k);
BoundReport genus_bound(i64 d, i64 k);

std::string regime_label(Regime r);        // "large" / "small"
std::string sharpness_label(Sharpness s);  // snake_case labels

// Stable renderings used by the CLI.  The 15-column header is fixed; the
// optional 16th column carries the no-small-curve bound where defined.
std::string csv_header(bool with_no_small_curve = false);
std::string csv_row(i64 d, i64 k, const BoundReport& report, bool with_no_small_curve = false);
nlohmann::json json_report(i64 d, i64 k, const BoundReport& report);
std::string text_report(i64 d, i64 k, const BoundReport& report);

}  // namespace qgenus
