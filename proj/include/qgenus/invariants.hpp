#pragma once

#include <cstdint>
#include <optional>

// Arithmetic invariants of a (curve degree, surface class) input pair.
// Every quantity is a small closed-form integer; all downstream formulas
// and constraint profiles are parameterized by these values.

namespace qgenus {

using i64 = std::int64_t;

struct CurveParams {
    i64 d;  // curve degree, >= 1
    i64 k;  // class of the carrier surface on the quadric, >= 1
};

// Throws std::invalid_argument unless d >= 1 and k >= 1.
void validate(const CurveParams& params);

enum class Regime {
    LargeDegree,  // d > 2k(k-1)
    SmallDegree,  // d <= 2k(k-1)
};

Regime regime(const CurveParams& params);

// Division data d + eps = 2 * n0 * k with 0 <= eps <= 2k-1.
struct N0Eps {
    i64 n0;
    i64 eps;
};

// Same division datum at theta0, with eps_prime = (-d) mod 2*theta0.
struct Theta0EpsPrime {
    i64 theta0;
    i64 eps_prime;
};

// d = k^2 + nu^2 + eps_hat with nu = floor(sqrt(d - k^2)), 0 <= eps_hat <= 2*nu.
struct NuDecomposition {
    i64 nu;
    i64 eps_hat;
};

N0Eps n0_and_eps(const CurveParams& params);

// theta0 is computed by the same formula as n0 and stored separately because
// downstream formulas substitute the two differently.
Theta0EpsPrime theta0_and_eps_prime(const CurveParams& params);

// Requires d > k^2; throws std::domain_error otherwise.
NuDecomposition nu_decomposition(const CurveParams& params);

struct InvariantSet {
    i64 n0;
    i64 eps;
    i64 theta0;
    i64 eps_prime;
    std::optional<NuDecomposition> nu_data;  // engaged iff d > k^2
};

InvariantSet invariant_set(const CurveParams& params);

// floor(sqrt(x)) for x >= 0.
i64 isqrt_floor(i64 x);

}  // namespace qgenus
