#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qgenus/invariants.hpp"

// Second differences of the postulation counts of a general hyperplane
// section, and the admissibility constraints the geometry forces on them.
// The genus functional sum((l-1) * gamma_l) is what every bound maximizes.

namespace qgenus {

class GammaSequence {
  public:
    GammaSequence() = default;
    // Canonical form: trailing zeros stripped.  Rejects negative entries.
    explicit GammaSequence(std::vector<i64> values);

    [[nodiscard]] const std::vector<i64>& values() const { return values_; }
    [[nodiscard]] i64 size() const { return static_cast<i64>(values_.size()); }
    // gamma_l, zero beyond the stored support.
    [[nodiscard]] i64 at(i64 l) const;
    [[nodiscard]] i64 mass() const;
    // Comma-separated decimal rendering, e.g. "1,3,4,2".
    [[nodiscard]] std::string render() const;

    bool operator==(const GammaSequence&) const = default;

  private:
    std::vector<i64> values_;
};

struct ConstraintProfile {
    i64 prefix_length;   // p: gamma_l = 2l+1 forced on [0, p-1]
    i64 plateau_height;  // h = 2p
    i64 n_min;           // least legal plateau end index
    i64 mass;            // required total, equal to the curve degree

    // d > 2k(k-1): prefix k, plateau 2k, n_min = n0(d, k).
    static ConstraintProfile large_degree(i64 d, i64 k);
    // d <= 2k(k-1), re-expressed at theta0: prefix theta0, plateau 2*theta0,
    // n_min = n0(d, theta0).
    static ConstraintProfile small_degree(i64 d, i64 k);
    // k^2 < d <= 2k(k-1), for curves on no surface of class below k:
    // prefix k, plateau 2k, n_min = k.
    static ConstraintProfile theta_k(i64 d, i64 k);
};

// Constraint clauses, reported by letter in verdicts:
//   a  prefix entries are exactly 2l+1
//   b  entries between the prefix and n equal the plateau height
//   c  n >= n_min
//   d  gamma_n <= plateau_height - 1
//   e  descent gaps >= 2 on [n, m-2]
//   f  last supported entry >= 1
//   g  no interior zeros (contiguous support)
//   h  total equals mass
enum class Clause {
    PrefixShape,
    PlateauShape,
    PlateauLength,
    FirstDrop,
    DescentGaps,
    PositiveEnd,
    ContiguousSupport,
    MassTotal,
};

char clause_letter(Clause c);

struct AdmissibilityReport {
    bool admissible;
    std::vector<Clause> violated;  // empty iff admissible
    i64 n;  // first index >= prefix_length with gamma < plateau_height
    i64 m;  // support length: gamma_l = 0 for all l >= m
};

AdmissibilityReport check_admissibility(const GammaSequence& gamma,
                                        const ConstraintProfile& profile);
bool is_admissible(const GammaSequence& gamma, const ConstraintProfile& profile);

// (n, m) of an admissible sequence; throws std::domain_error naming the
// violated clauses otherwise.
std::pair<i64, i64> indices(const GammaSequence& gamma, const ConstraintProfile& profile);

// sum of (l - 1) * gamma_l over the support; this bounds g - 1.
i64 genus_functional(const GammaSequence& gamma);

// Running partial sums beta_t = gamma_0 + ... + gamma_t.
std::vector<i64> beta_from_gamma(const GammaSequence& gamma);

}  // namespace qgenus
