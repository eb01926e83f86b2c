#include "qgenus/invariants.hpp"

#include <cmath>
#include <stdexcept>

namespace qgenus {

void validate(const CurveParams& params) {
    if (params.d < 1 || params.k < 1)
        throw std::invalid_argument("curve parameters require d >= 1 and k >= 1");
}

Regime regime(const CurveParams& params) {
    validate(params);
    return params.d > 2 * params.k * (params.k - 1) ? Regime::LargeDegree
                                                    : Regime::SmallDegree;
}

N0Eps n0_and_eps(const CurveParams& params) {
    validate(params);
    const i64 n0 = (params.d - 1) / (2 * params.k) + 1;
    const i64 eps = 2 * n0 * params.k - params.d;
    if (eps < 0 || eps > 2 * params.k - 1)
        throw std::logic_error("division residue out of range");
    return {n0, eps};
}

Theta0EpsPrime theta0_and_eps_prime(const CurveParams& params) {
    validate(params);
    const i64 theta0 = (params.d - 1) / (2 * params.k) + 1;
    const i64 modulus = 2 * theta0;
    const i64 eps_prime = (modulus - params.d % modulus) % modulus;
    return {theta0, eps_prime};
}

i64 isqrt_floor(i64 x) {
    if (x < 0) throw std::invalid_argument("isqrt_floor requires x >= 0");
    i64 r = static_cast<i64>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

NuDecomposition nu_decomposition(const CurveParams& params) {
    validate(params);
    if (params.d <= params.k * params.k)
        throw std::domain_error("nu decomposition requires d > k^2");
    const i64 excess = params.d - params.k * params.k;
    const i64 nu = isqrt_floor(excess);
    const i64 eps_hat = excess - nu * nu;
    if (eps_hat < 0 || eps_hat > 2 * nu)
        throw std::logic_error("eps_hat out of range");
    return {nu, eps_hat};
}

InvariantSet invariant_set(const CurveParams& params) {
    validate(params);
    const auto [n0, eps] = n0_and_eps(params);
    const auto [theta0, eps_prime] = theta0_and_eps_prime(params);
    InvariantSet out{n0, eps, theta0, eps_prime, std::nullopt};
    if (params.d > params.k * params.k) out.nu_data = nu_decomposition(params);
    return out;
}

}  // namespace qgenus
