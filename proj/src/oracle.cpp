#include "qgenus/oracle.hpp"

#include "qgenus/bounds.hpp"
#include "qgenus/extremal.hpp"

#include <algorithm>
#include <limits>

namespace qgenus {
namespace {

// Largest total a strictly-descending-by-2 positive chain can reach when its
// first entry is at most start: start + (start-2) + ... down to 2 or 1.
i64 max_tail_sum(i64 start) {
    if (start <= 0) return 0;
    if (start % 2 == 0) return start * (start + 2) / 4;
    return (start + 1) * (start + 1) / 4;
}

struct Enumerator {
    const ConstraintProfile& profile;
    const std::function<void(const GammaSequence&)>& emit;
    const i64 budget;
    i64 nodes = 0;
    std::vector<i64> scratch;

    void tick() {
        if (++nodes > budget) throw BudgetExceeded();
    }

    void emit_current() {
        // support-cap invariant: no admissible sequence reaches past
        // n_min + prefix_length
        if (static_cast<i64>(scratch.size()) > profile.n_min + profile.prefix_length)
            throw std::logic_error("admissible sequence exceeds the support cap");
        emit(GammaSequence(scratch));
    }

    // Descending tail entries, chosen left to right in ascending value order
    // so the full enumeration is lexicographically ascending.
    void tail(i64 rem, i64 cap) {
        const i64 hard_cap = profile.n_min + profile.prefix_length + 2;
        if (static_cast<i64>(scratch.size()) >= hard_cap) return;
        const i64 top = std::min(cap, rem);
        for (i64 x = 1; x <= top; ++x) {
            tick();
            const i64 left = rem - x;
            if (left == 0) {
                scratch.push_back(x);
                emit_current();
                scratch.pop_back();
                continue;
            }
            if (max_tail_sum(x - 2) < left) continue;
            scratch.push_back(x);
            tail(left, x - 2);
            scratch.pop_back();
        }
    }

    void run() {
        const i64 p = profile.prefix_length;
        const i64 h = profile.plateau_height;
        for (i64 n = profile.n_min;; ++n) {
            const i64 head = p * p + (n - p) * h;
            if (head > profile.mass) break;
            tick();
            scratch.clear();
            for (i64 l = 0; l < p; ++l) scratch.push_back(2 * l + 1);
            for (i64 l = p; l < n; ++l) scratch.push_back(h);
            const i64 rem = profile.mass - head;
            if (rem == 0)
                emit_current();
            else
                tail(rem, h - 1);
        }
    }
};

}  // namespace

void enumerate_admissible(const ConstraintProfile& profile,
                          const std::function<void(const GammaSequence&)>& emit,
                          i64 node_budget) {
    Enumerator{profile, emit, node_budget, 0, {}}.run();
}

std::vector<GammaSequence> all_admissible(const ConstraintProfile& profile, i64 node_budget) {
    std::vector<GammaSequence> out;
    enumerate_admissible(profile, [&](const GammaSequence& g) { out.push_back(g); },
                         node_budget);
    return out;
}

OracleResult oracle_max(const ConstraintProfile& profile, i64 node_budget) {
    OracleResult out{std::numeric_limits<i64>::min(), {}, 0};
    enumerate_admissible(
        profile,
        [&](const GammaSequence& g) {
            ++out.search_space_size;
            const i64 f = genus_functional(g);
            if (f > out.max_value) {
                out.max_value = f;
                out.argmax_sequences.assign(1, g);
            } else if (f == out.max_value) {
                out.argmax_sequences.push_back(g);
            }
        },
        node_budget);
    if (out.search_space_size == 0)
        throw std::logic_error("profile admits no sequences");
    return out;
}

bool VerificationReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const VerificationCheck& c) { return c.pass; });
}

namespace {

void add_check(VerificationReport& report, std::string name, i64 expected, i64 actual,
               i64 offset, std::string witness = {}) {
    const i64 shifted = expected + offset;
    report.checks.push_back(
        {std::move(name), shifted, actual, shifted == actual, std::move(witness)});
}

}  // namespace

VerificationReport verify_pair(i64 d, i64 k, i64 node_budget, i64 expected_offset) {
    VerificationReport report{d, k, {}};
    const Regime reg = regime({d, k});
    const bool large = reg == Regime::LargeDegree;
    const i64 theta0 = theta0_and_eps_prime({d, k}).theta0;
    // in the small regime every comparison runs at the substituted class
    const i64 kappa = large ? k : theta0;

    const ConstraintProfile profile =
        large ? ConstraintProfile::large_degree(d, k) : ConstraintProfile::small_degree(d, k);
    const OracleResult oracle = oracle_max(profile, node_budget);
    const i64 pi_value = pi(d, kappa);
    const i64 xi_value = xi(d, kappa);
    const i64 capital = capital_pi(d, kappa);
    const TemplateReport tilde =
        large ? build_tilde_gamma_large(d, k) : build_tilde_gamma_small(d, k);
    const TemplateReport hat = build_hat_gamma(d, kappa);
    const BoundReport bound = genus_bound(d, k);
    const i64 dispatched_eps = n0_and_eps({d, kappa}).eps;

    add_check(report, "oracle max equals pi", pi_value, oracle.max_value, expected_offset,
              oracle.argmax_sequences.front().render());
    add_check(report, "tilde functional equals pi", pi_value,
              genus_functional(tilde.sequence), expected_offset, tilde.sequence.render());
    add_check(report, "tilde mass equals d", d, tilde.sequence.mass(), expected_offset,
              tilde.sequence.render());
    add_check(report, "tilde admissible", 1, is_admissible(tilde.sequence, profile) ? 1 : 0,
              expected_offset, tilde.sequence.render());
    add_check(report, "repaired flag matches residue window",
              dispatched_eps >= kappa + 1 ? 1 : 0, tilde.repaired ? 1 : 0, expected_offset);
    add_check(report, "hat functional equals capital pi", capital,
              genus_functional(hat.sequence), expected_offset, hat.sequence.render());
    add_check(report, "hat mass equals d", d, hat.sequence.mass(), expected_offset,
              hat.sequence.render());
    add_check(report, "hat admissible", 1, is_admissible(hat.sequence, profile) ? 1 : 0,
              expected_offset, hat.sequence.render());
    add_check(report, "capital pi at most pi", 1, capital <= pi_value ? 1 : 0,
              expected_offset);
    add_check(report, "bound equals pi minus xi", pi_value - xi_value,
              bound.bound_g_minus_1, expected_offset);
    add_check(report, "linkage degree identity", d + bound.linkage.residual_degree,
              2 * bound.linkage.ci_a * bound.linkage.ci_b, expected_offset);
    if (k == 1)
        add_check(report, "quadric surface genus identity",
                  ((d + 1) / 2 - 1) * (d / 2 - 1), pi_value + 1, expected_offset);

    if (!large) {
        add_check(report, "redispatch lands in large regime", 1,
                  regime({d, theta0}) == Regime::LargeDegree ? 1 : 0, expected_offset);
        add_check(report, "theta0 within small-regime cap", 1, theta0 <= k - 1 ? 1 : 0,
                  expected_offset);
        if (d > k * k) {
            const ConstraintProfile theta_profile = ConstraintProfile::theta_k(d, k);
            const OracleResult theta_oracle = oracle_max(theta_profile, node_budget);
            const i64 nsc = bound_no_small_curve(d, k);
            const TemplateReport theta_template = build_tilde_gamma_theta_k(d, k);
            add_check(report, "theta oracle equals no-small-curve bound", nsc,
                      theta_oracle.max_value, expected_offset,
                      theta_oracle.argmax_sequences.front().render());
            add_check(report, "theta template functional equals bound", nsc,
                      genus_functional(theta_template.sequence), expected_offset,
                      theta_template.sequence.render());
            add_check(report, "theta template mass equals d", d,
                      theta_template.sequence.mass(), expected_offset,
                      theta_template.sequence.render());
            add_check(report, "theta template admissible", 1,
                      is_admissible(theta_template.sequence, theta_profile) ? 1 : 0,
                      expected_offset, theta_template.sequence.render());
            add_check(report, "no-small-curve bound strictly below pi", 1,
                      nsc < pi_value ? 1 : 0, expected_offset);
        }
    }
    return report;
}

}  // namespace qgenus
