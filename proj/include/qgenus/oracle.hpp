#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qgenus/gamma.hpp"

// Brute-force maximizer over all admissible sequences of a profile: the
// ground truth every closed form and template is certified against.
// Enumeration is deterministic, in ascending lexicographic order.

namespace qgenus {

inline constexpr i64 kDefaultNodeBudget = 100'000'000;

class BudgetExceeded : public std::runtime_error {
  public:
    BudgetExceeded() : std::runtime_error("node budget exceeded; use smaller instance") {}
};

struct OracleResult {
    i64 max_value;
    std::vector<GammaSequence> argmax_sequences;  // all attaining the max, lex order
    i64 search_space_size;                        // count of admissible sequences
};

// Calls emit once per admissible sequence.  Support length is capped at
// n_min + prefix_length + 2 defensively; any sequence extending past
// n_min + prefix_length would disprove the support-cap invariant and throws.
void enumerate_admissible(const ConstraintProfile& profile,
                          const std::function<void(const GammaSequence&)>& emit,
                          i64 node_budget = kDefaultNodeBudget);

std::vector<GammaSequence> all_admissible(const ConstraintProfile& profile,
                                          i64 node_budget = kDefaultNodeBudget);

OracleResult oracle_max(const ConstraintProfile& profile, i64 node_budget = kDefaultNodeBudget);

struct VerificationCheck {
    std::string name;
    i64 expected;
    i64 actual;
    bool pass;
    std::string witness;  // a relevant sequence, when one exists
};

struct VerificationReport {
    i64 d;
    i64 k;
    std::vector<VerificationCheck> checks;
    [[nodiscard]] bool all_pass() const;
};

// Cross-checks every applicable closed form, template, and profile maximum
// at (d, k).  expected_offset shifts every expected value; nonzero offsets
// exist to exercise the failure path.
VerificationReport verify_pair(i64 d, i64 k, i64 node_budget = kDefaultNodeBudget,
                               i64 expected_offset = 0);

}  // namespace qgenus
