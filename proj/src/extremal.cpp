#include "qgenus/extremal.hpp"

#include <optional>
#include <stdexcept>

namespace qgenus {
namespace {

// Forced head of every admissible sequence: 1, 3, ..., 2p-1, then the
// plateau value h on [p, n).
std::vector<i64> prefix_and_plateau(i64 p, i64 h, i64 n) {
    std::vector<i64> v;
    v.reserve(static_cast<std::size_t>(n + p));
    for (i64 l = 0; l < p; ++l) v.push_back(2 * l + 1);
    for (i64 l = p; l < n; ++l) v.push_back(h);
    return v;
}

}  // namespace

TemplateReport build_tilde_gamma_large(i64 d, i64 k) {
    if (regime({d, k}) != Regime::LargeDegree)
        throw std::domain_error("large-degree builder requires d > 2k(k-1)");
    const auto [n0, eps] = n0_and_eps({d, k});

    // Descending tail over the staircase 2(k + n0 - l) - 1 on [n0, n0+k-1],
    // lowered to shed the residue eps: branch one (eps <= k) lowers the last
    // eps entries by 1; branch two lowers everything by 1 and the last
    // tau = eps - k entries by 2.
    std::vector<i64> raw = prefix_and_plateau(k, 2 * k, n0);
    for (i64 l = n0; l <= n0 + k - 1; ++l) {
        i64 value = 2 * (k + n0 - l) - 1;
        if (eps <= k) {
            if (l >= n0 + k - eps) value -= 1;
        } else {
            const i64 tau = eps - k;
            value -= (l >= n0 + k - tau) ? 2 : 1;
        }
        raw.push_back(value);
    }

    TemplateReport out;
    out.raw_template = raw;
    if (eps <= k) {
        // at most a trailing zero separates the raw template from canonical form
        out.sequence = GammaSequence(raw);
        out.repaired = false;
        return out;
    }

    // Branch two always ends with -1 at index n0+k-1.  Repair: drop that
    // entry, then remove the one-unit mass surplus at the smallest index
    // that keeps the sequence admissible.
    std::vector<i64> truncated(raw.begin(), raw.end() - 1);
    const ConstraintProfile profile = ConstraintProfile::large_degree(d, k);
    for (std::size_t idx = 0; idx < truncated.size(); ++idx) {
        if (truncated[idx] == 0) continue;
        std::vector<i64> candidate = truncated;
        candidate[idx] -= 1;
        GammaSequence seq{std::move(candidate)};
        if (is_admissible(seq, profile)) {
            out.sequence = std::move(seq);
            out.repaired = true;
            out.notes.push_back("negative tail entry truncated; one unit removed at index " +
                                std::to_string(idx));
            return out;
        }
    }
    throw std::logic_error("template repair found no admissible sequence");
}

TemplateReport build_tilde_gamma_small(i64 d, i64 k) {
    if (regime({d, k}) != Regime::SmallDegree)
        throw std::domain_error("small-degree builder requires d <= 2k(k-1)");
    const i64 theta0 = theta0_and_eps_prime({d, k}).theta0;
    TemplateReport out = build_tilde_gamma_large(d, theta0);
    out.notes.push_back("evaluated at substituted surface class theta0 = " +
                        std::to_string(theta0));
    return out;
}

TemplateReport build_tilde_gamma_theta_k(i64 d, i64 k) {
    validate({d, k});
    if (d <= k * k) throw std::domain_error("theta_k builder requires d > k^2");
    if (regime({d, k}) == Regime::LargeDegree)
        throw std::domain_error("theta_k builder requires d <= 2k(k-1)");
    const auto [nu, eps_hat] = nu_decomposition({d, k});

    // No plateau (n = k); ascending additions over the staircase spread the
    // excess eps_hat: branch one (eps_hat <= nu) raises the first eps_hat
    // entries by 1, branch two raises the first tau = eps_hat - nu by 2 and
    // the rest by 1.
    std::vector<i64> raw = prefix_and_plateau(k, 2 * k, k);
    for (i64 l = k; l <= k + nu - 1; ++l) {
        i64 value = 2 * (k + nu - l) - 1;
        if (eps_hat <= nu) {
            if (l <= k + eps_hat - 1) value += 1;
        } else {
            const i64 tau = eps_hat - nu;
            value += (l <= k + tau - 1) ? 2 : 1;
        }
        raw.push_back(value);
    }

    TemplateReport out;
    out.raw_template = raw;
    out.sequence = GammaSequence(std::move(raw));
    out.repaired = false;
    return out;
}

TemplateReport build_hat_gamma(i64 d, i64 k) {
    if (regime({d, k}) != Regime::LargeDegree)
        throw std::domain_error("hat builder requires d > 2k(k-1)");
    const auto [n0, eps] = n0_and_eps({d, k});
    const i64 alpha = (eps + 1) / 2;  // ceil(eps / 2)
    const i64 delta = (eps >= 2 && eps % 2 == 0) ? 1 : 0;

    // Staircase s(l) = 2(n0 + k - l) - 1, full above the pivot index
    // n0+k-alpha-1, lowered by delta at the pivot and by 2 below it; the
    // support ends at n0+k-2 except in the degenerate eps = 0 case, where a
    // final 1 sits at n0+k-1 and the sequence coincides with the proved
    // maximizer.  When alpha = k the pivot falls below n0 and is skipped.
    std::vector<i64> raw = prefix_and_plateau(k, 2 * k, n0);
    for (i64 l = n0; l <= n0 + k - 2; ++l) {
        const i64 s = 2 * (n0 + k - l) - 1;
        i64 value;
        if (l < n0 + k - alpha - 1)
            value = s;
        else if (l == n0 + k - alpha - 1)
            value = s - delta;
        else
            value = s - 2;
        raw.push_back(value);
    }
    if (eps == 0) raw.push_back(1);

    TemplateReport out;
    out.raw_template = raw;
    out.sequence = GammaSequence(std::move(raw));
    out.repaired = false;
    out.notes.push_back("zero range read as starting at index n0+k-1");
    return out;
}

namespace {

// gamma_a -= 1, gamma_b += 1 (b may extend the support by one); returns the
// canonical result when it stays admissible.
std::optional<GammaSequence> shifted(const std::vector<i64>& v, i64 a, i64 b,
                                     const ConstraintProfile& profile) {
    std::vector<i64> w = v;
    if (b == static_cast<i64>(w.size())) w.push_back(0);
    if (w[static_cast<std::size_t>(a)] == 0) return std::nullopt;
    w[static_cast<std::size_t>(a)] -= 1;
    w[static_cast<std::size_t>(b)] += 1;
    GammaSequence seq{std::move(w)};
    if (!is_admissible(seq, profile)) return std::nullopt;
    return seq;
}

}  // namespace

GammaSequence improve(const GammaSequence& gamma, const ConstraintProfile& profile) {
    if (!is_admissible(gamma, profile))
        throw std::domain_error("improve requires an admissible input sequence");
    GammaSequence current = gamma;
    for (;;) {
        const auto& v = current.values();
        const i64 m = current.size();
        std::optional<GammaSequence> next;
        // every applied shift raises the functional by b - a >= 1, and the
        // admissible set is finite, so this loop terminates
        for (i64 a = 0; !next && a + 1 <= m; ++a) next = shifted(v, a, a + 1, profile);
        for (i64 a = 0; !next && a < m; ++a)
            for (i64 b = a + 2; !next && b <= m; ++b) next = shifted(v, a, b, profile);
        if (!next) return current;
        current = std::move(*next);
    }
}

}  // namespace qgenus
