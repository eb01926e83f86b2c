#include "qgenus/bounds.hpp"

#include <boost/rational.hpp>

#include <sstream>
#include <stdexcept>

namespace qgenus {
namespace {

using rat = boost::rational<i64>;

i64 as_integer(const rat& value, const char* what) {
    if (value.denominator() != 1) {
        std::ostringstream msg;
        msg << what << " evaluated to non-integer " << value.numerator() << '/'
            << value.denominator();
        throw std::logic_error(msg.str());
    }
    return value.numerator();
}

void require_large(i64 d, i64 k, const char* what) {
    if (regime({d, k}) != Regime::LargeDegree)
        throw std::domain_error(std::string(what) + " requires d > 2k(k-1)");
}

i64 xi_from_residue(i64 residue, i64 kappa) {
    return (residue == 0 || residue == 1 || residue == 2 || residue == 2 * kappa - 1) ? 0 : 1;
}

Sharpness classify(i64 residue, i64 kappa) {
    if (residue == 0 || residue == 1 || residue == 2 || residue == 2 * kappa - 1)
        return Sharpness::SharpAttainedByS;
    if (residue == 3 || residue == 2 * kappa - 2) return Sharpness::SharpPossiblyOther;
    return Sharpness::UnknownConjecturalPi;
}

}  // namespace

i64 pi(i64 d, i64 k) {
    require_large(d, k, "pi");
    const i64 eps = n0_and_eps({d, k}).eps;
    rat value = rat(d * d, 4 * k) + rat((k - 3) * d, 2);
    if (eps <= k) {
        value -= rat(eps * eps, 4 * k) + rat(eps * (k - eps), 2);
    } else {
        const i64 tau = eps - k;
        value -= rat(k - tau) * (rat(tau, 2) - rat(tau, 4 * k) + rat(1, 4));
    }
    return as_integer(value, "pi");
}

i64 xi(i64 d, i64 k) {
    require_large(d, k, "xi");
    return xi_from_residue(n0_and_eps({d, k}).eps, k);
}

i64 pi_prime(i64 d, i64 k) {
    if (regime({d, k}) != Regime::SmallDegree)
        throw std::domain_error("pi_prime applies to d <= 2k(k-1)");
    return pi(d, theta0_and_eps_prime({d, k}).theta0);
}

i64 xi_prime(i64 d, i64 k) {
    if (regime({d, k}) != Regime::SmallDegree)
        throw std::domain_error("xi_prime applies to d <= 2k(k-1)");
    const auto [theta0, eps_prime] = theta0_and_eps_prime({d, k});
    return xi_from_residue(eps_prime, theta0);
}

i64 capital_pi(i64 d, i64 k) {
    require_large(d, k, "capital_pi");
    const i64 eps = n0_and_eps({d, k}).eps;
    rat value = rat(d * d, 4 * k) + rat((k - 3) * d, 2) -
                rat(eps, 2) * (k - 1) * (rat(1) - rat(eps, 2 * k));
    if (eps % 2 == 1) value -= rat(1, 4);
    return as_integer(value, "capital_pi");
}

i64 bound_no_small_curve(i64 d, i64 k) {
    validate({d, k});
    if (d <= k * k)
        throw std::domain_error("no-small-curve bound requires d > k^2");
    if (regime({d, k}) == Regime::LargeDegree)
        throw std::domain_error("no-small-curve bound requires d <= 2k(k-1)");
    const auto [nu, eps_hat] = nu_decomposition({d, k});
    rat value = rat(2 * k - 3, 2) * d - rat(k * k * k - nu * nu * nu, 3) - rat(k - nu, 6);
    if (eps_hat <= nu) {
        value += rat(eps_hat * eps_hat, 2);
    } else {
        const i64 tau = eps_hat - nu;
        value += rat(nu * nu + tau * tau, 2);
    }
    return as_integer(value, "no-small-curve bound");
}

Sharpness sharpness(i64 d, i64 k) {
    if (regime({d, k}) == Regime::LargeDegree)
        return classify(n0_and_eps({d, k}).eps, k);
    const auto [theta0, eps_prime] = theta0_and_eps_prime({d, k});
    return classify(eps_prime, theta0);
}

LinkageDescriptor linkage_descriptor(i64 d, i64 k) {
    LinkageDescriptor out;
    if (regime({d, k}) == Regime::LargeDegree) {
        const auto [n0, eps] = n0_and_eps({d, k});
        out = {k, n0, eps, true, true};
    } else {
        const auto [theta0, eps_prime] = theta0_and_eps_prime({d, k});
        out = {theta0, n0_and_eps({d, theta0}).n0, eps_prime, true, true};
    }
    if (2 * out.ci_a * out.ci_b != d + out.residual_degree)
        throw std::logic_error("complete-intersection degree identity violated");
    return out;
}

BoundReport genus_bound(i64 d, i64 k) {
    const Regime reg = regime({d, k});
    BoundReport out;
    out.regime = reg;
    out.invariants = invariant_set({d, k});
    if (reg == Regime::LargeDegree) {
        out.pi_value = pi(d, k);
        out.xi_value = xi(d, k);
        out.capital_pi = capital_pi(d, k);
        out.sharp = classify(out.invariants.eps, k);
    } else {
        const i64 theta0 = out.invariants.theta0;
        out.pi_value = pi(d, theta0);
        out.xi_value = xi_from_residue(out.invariants.eps_prime, theta0);
        out.capital_pi = capital_pi(d, theta0);
        out.sharp = classify(out.invariants.eps_prime, theta0);
    }
    out.bound_g_minus_1 = out.pi_value - out.xi_value;
    out.linkage = linkage_descriptor(d, k);
    if (reg == Regime::SmallDegree && d > k * k)
        out.no_small_curve_bound = bound_no_small_curve(d, k);
    return out;
}

std::string regime_label(Regime r) {
    return r == Regime::LargeDegree ? "large" : "small";
}

std::string sharpness_label(Sharpness s) {
    switch (s) {
        case Sharpness::SharpAttainedByS: return "sharp_attained_by_s";
        case Sharpness::SharpPossiblyOther: return "sharp_possibly_other";
        case Sharpness::UnknownConjecturalPi: return "unknown_conjectural_pi";
    }
    throw std::logic_error("unreachable sharpness label");
}

std::string csv_header(bool with_no_small_curve) {
    std::string header =
        "d,k,regime,n0,eps,theta0,eps_prime,pi,xi,bound,capital_pi,sharp,ci_a,ci_b,"
        "residual_degree";
    if (with_no_small_curve) header += ",no_small_curve_bound";
    return header;
}

std::string csv_row(i64 d, i64 k, const BoundReport& report, bool with_no_small_curve) {
    std::ostringstream out;
    out << d << ',' << k << ',' << regime_label(report.regime) << ','
        << report.invariants.n0 << ',' << report.invariants.eps << ','
        << report.invariants.theta0 << ',' << report.invariants.eps_prime << ','
        << report.pi_value << ',' << report.xi_value << ',' << report.bound_g_minus_1 << ','
        << report.capital_pi << ',' << sharpness_label(report.sharp) << ','
        << report.linkage.ci_a << ',' << report.linkage.ci_b << ','
        << report.linkage.residual_degree;
    if (with_no_small_curve) {
        out << ',';
        if (report.no_small_curve_bound) out << *report.no_small_curve_bound;
    }
    return out.str();
}

nlohmann::json json_report(i64 d, i64 k, const BoundReport& report) {
    nlohmann::json invariants{
        {"n0", report.invariants.n0},
        {"eps", report.invariants.eps},
        {"theta0", report.invariants.theta0},
        {"eps_prime", report.invariants.eps_prime},
        {"nu", nullptr},
        {"eps_hat", nullptr},
    };
    if (report.invariants.nu_data) {
        invariants["nu"] = report.invariants.nu_data->nu;
        invariants["eps_hat"] = report.invariants.nu_data->eps_hat;
    }
    nlohmann::json out{
        {"d", d},
        {"k", k},
        {"regime", regime_label(report.regime)},
        {"invariants", invariants},
        {"pi_value", report.pi_value},
        {"xi_value", report.xi_value},
        {"bound_g_minus_1", report.bound_g_minus_1},
        {"capital_pi", report.capital_pi},
        {"sharp", sharpness_label(report.sharp)},
        {"linkage",
         {{"ci_type", {report.linkage.ci_a, report.linkage.ci_b}},
          {"residual_degree", report.linkage.residual_degree},
          {"residual_on_quadric_surface", report.linkage.residual_on_quadric_surface},
          {"acm_residual", report.linkage.acm_residual}}},
        {"no_small_curve_bound", nullptr},
    };
    if (report.no_small_curve_bound) out["no_small_curve_bound"] = *report.no_small_curve_bound;
    return out;
}

std::string text_report(i64 d, i64 k, const BoundReport& report) {
    std::ostringstream out;
    out << "d = " << d << ", k = " << k << "  [regime: " << regime_label(report.regime)
        << "]\n";
    out << "invariants: n0 = " << report.invariants.n0 << ", eps = " << report.invariants.eps
        << ", theta0 = " << report.invariants.theta0
        << ", eps_prime = " << report.invariants.eps_prime;
    if (report.invariants.nu_data)
        out << ", nu = " << report.invariants.nu_data->nu
            << ", eps_hat = " << report.invariants.nu_data->eps_hat;
    out << '\n';
    if (report.regime == Regime::SmallDegree)
        out << "dispatch: bound computed at substituted parameters (d, theta0)\n";
    out << "proved bound: g - 1 <= " << report.bound_g_minus_1 << "   (pi = " << report.pi_value
        << ", xi = " << report.xi_value << ")\n";
    out << "class S(" << d << ',' << k << ") genus value: Pi = " << report.capital_pi
        << "   [conjectured sharp (Question A)]\n";
    out << "sharpness: " << sharpness_label(report.sharp) << '\n';
    out << "linkage: complete intersection type (" << report.linkage.ci_a << ','
        << report.linkage.ci_b << "), residual degree " << report.linkage.residual_degree
        << ", residual curve on a quadric surface (aCM)\n";
    if (report.no_small_curve_bound)
        out << "no-small-curve bound: g - 1 <= " << *report.no_small_curve_bound
            << "   (if the curve lies on no surface of class below k)\n";
    return out.str();
}

}  // namespace qgenus
