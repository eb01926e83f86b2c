#pragma once

#include <string>
#include <vector>

#include "qgenus/gamma.hpp"

// Candidate-extremal sequences.  Builders evaluate closed-form templates;
// where the printed template leaves the admissible set (a negative final
// entry), the builder repairs it and says so.  Optimality of every template
// is certified against exhaustive enumeration in the test suite.

namespace qgenus {

struct TemplateReport {
    GammaSequence sequence;         // admissible for the matching profile
    bool repaired = false;          // true iff sequence differs from the raw template
    std::vector<i64> raw_template;  // as evaluated; may contain a negative entry
    std::vector<std::string> notes;
};

// d > 2k(k-1).  Repair occurs exactly for residues eps in [k+1, 2k-1].
TemplateReport build_tilde_gamma_large(i64 d, i64 k);

// d <= 2k(k-1): the large-degree builder evaluated at (d, theta0).
TemplateReport build_tilde_gamma_small(i64 d, i64 k);

// k^2 < d <= 2k(k-1): maximizer over ConstraintProfile::theta_k, for curves
// on no surface of class below k.  Never needs repair.
TemplateReport build_tilde_gamma_theta_k(i64 d, i64 k);

// d > 2k(k-1): sequence whose functional is the class-S genus value
// (capital Pi), conjectured sharp in general.
TemplateReport build_hat_gamma(i64 d, i64 k);

// Local search by single-unit mass shifts (earlier entry down, later entry
// up); each applied move preserves admissibility and strictly increases the
// functional by at least 1, so the search terminates.  Deterministic:
// adjacent shifts are tried first, then wider ones, smallest indices first.
// Throws std::domain_error on an inadmissible input.
GammaSequence improve(const GammaSequence& gamma, const ConstraintProfile& profile);

}  // namespace qgenus
