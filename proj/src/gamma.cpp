#include "qgenus/gamma.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qgenus {

GammaSequence::GammaSequence(std::vector<i64> values) : values_(std::move(values)) {
    for (i64 v : values_)
        if (v < 0) throw std::invalid_argument("negative entry in gamma sequence");
    while (!values_.empty() && values_.back() == 0) values_.pop_back();
}

i64 GammaSequence::at(i64 l) const {
    if (l < 0 || l >= size()) return 0;
    return values_[static_cast<std::size_t>(l)];
}

i64 GammaSequence::mass() const {
    return std::accumulate(values_.begin(), values_.end(), i64{0});
}

std::string GammaSequence::render() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i > 0) out << ',';
        out << values_[i];
    }
    return out.str();
}

namespace {

ConstraintProfile make_profile(i64 prefix_length, i64 n_min, i64 mass) {
    ConstraintProfile profile{prefix_length, 2 * prefix_length, n_min, mass};
    // structural invariants of every regime the analysis instantiates
    if (profile.n_min < profile.prefix_length)
        throw std::logic_error("profile requires n_min >= prefix_length");
    if (profile.mass < profile.prefix_length * profile.prefix_length)
        throw std::logic_error("profile mass below forced prefix total");
    return profile;
}

}  // namespace

ConstraintProfile ConstraintProfile::large_degree(i64 d, i64 k) {
    if (regime({d, k}) != Regime::LargeDegree)
        throw std::domain_error("large-degree profile requires d > 2k(k-1)");
    return make_profile(k, n0_and_eps({d, k}).n0, d);
}

ConstraintProfile ConstraintProfile::small_degree(i64 d, i64 k) {
    if (regime({d, k}) != Regime::SmallDegree)
        throw std::domain_error("small-degree profile requires d <= 2k(k-1)");
    const i64 theta0 = theta0_and_eps_prime({d, k}).theta0;
    return make_profile(theta0, n0_and_eps({d, theta0}).n0, d);
}

ConstraintProfile ConstraintProfile::theta_k(i64 d, i64 k) {
    validate({d, k});
    if (d <= k * k) throw std::domain_error("theta_k profile requires d > k^2");
    if (regime({d, k}) == Regime::LargeDegree)
        throw std::domain_error("theta_k profile requires d <= 2k(k-1)");
    return make_profile(k, k, d);
}

char clause_letter(Clause c) {
    return static_cast<char>('a' + static_cast<int>(c));
}

AdmissibilityReport check_admissibility(const GammaSequence& gamma,
                                        const ConstraintProfile& profile) {
    const auto& v = gamma.values();
    const i64 length = gamma.size();
    const i64 p = profile.prefix_length;
    const i64 h = profile.plateau_height;
    std::vector<Clause> bad;

    bool prefix_ok = length >= p;
    for (i64 l = 0; prefix_ok && l < p; ++l)
        prefix_ok = v[static_cast<std::size_t>(l)] == 2 * l + 1;
    if (!prefix_ok) bad.push_back(Clause::PrefixShape);

    // n is the first index >= p below the plateau; it exists because entries
    // vanish beyond the support.  Everything in [p, n) must equal h exactly.
    i64 n = p;
    while (gamma.at(n) >= h) ++n;
    for (i64 l = p; l < n; ++l)
        if (v[static_cast<std::size_t>(l)] != h) {
            bad.push_back(Clause::PlateauShape);
            break;
        }

    if (n < profile.n_min) bad.push_back(Clause::PlateauLength);
    // implied by the definition of n; kept so the clause list stays one-for-one
    if (gamma.at(n) > h - 1) bad.push_back(Clause::FirstDrop);

    const i64 m = length;  // canonical form has no trailing zeros
    for (i64 l = n; l <= m - 2; ++l)
        if (v[static_cast<std::size_t>(l)] - v[static_cast<std::size_t>(l + 1)] < 2) {
            bad.push_back(Clause::DescentGaps);
            break;
        }

    if (m == 0 || v[static_cast<std::size_t>(m - 1)] < 1)
        bad.push_back(Clause::PositiveEnd);

    for (i64 l = 0; l < m; ++l)
        if (v[static_cast<std::size_t>(l)] == 0) {
            bad.push_back(Clause::ContiguousSupport);
            break;
        }

    if (gamma.mass() != profile.mass) bad.push_back(Clause::MassTotal);

    const bool ok = bad.empty();
    return {ok, std::move(bad), n, m};
}

bool is_admissible(const GammaSequence& gamma, const ConstraintProfile& profile) {
    return check_admissibility(gamma, profile).admissible;
}

std::pair<i64, i64> indices(const GammaSequence& gamma, const ConstraintProfile& profile) {
    const AdmissibilityReport report = check_admissibility(gamma, profile);
    if (!report.admissible) {
        std::ostringstream msg;
        msg << "sequence violates clauses:";
        for (Clause c : report.violated) msg << ' ' << clause_letter(c);
        throw std::domain_error(msg.str());
    }
    return {report.n, report.m};
}

i64 genus_functional(const GammaSequence& gamma) {
    i64 total = 0;
    const auto& v = gamma.values();
    for (std::size_t l = 0; l < v.size(); ++l)
        total += (static_cast<i64>(l) - 1) * v[l];
    return total;
}

std::vector<i64> beta_from_gamma(const GammaSequence& gamma) {
    std::vector<i64> beta;
    beta.reserve(gamma.values().size());
    i64 running = 0;
    for (i64 v : gamma.values()) {
        running += v;
        beta.push_back(running);
    }
    return beta;
}

}  // namespace qgenus
