#pragma once

// Real-argument special-function kernel: Gamma family, rising factorial,
// Gauss hypergeometric 2F1 on z in (-inf, 1) with analytic continuation,
// z -> 1 asymptotic classification, the finite limit of the canonical
// two-solution combination eta, and modified Bessel K with the extension
// profile T(t) = 2^{1-nu}/Gamma(nu) t^nu K_nu(t).
//
// Evaluation strategy for 2F1 (all arguments real, z < 1):
//   |z| <= 1/2          direct Gauss series
//   z in (-2, -1/2)     Pfaff map z -> z/(z-1)          (DLMF 15.8.1)
//   z <= -2             1/z connection formula          (DLMF 15.8.2)
//   z in (1/2, 1)       Taylor-series continuation of the hypergeometric ODE
//                       from z = 1/2 (individual 1-z connection terms blow up
//                       for the parameter sets used downstream, the ODE route
//                       evaluates them stably)

#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "thl/common.hpp"
#include "thl/quadrature.hpp"

namespace thl {

inline constexpr int series_max_terms = 1'000'000;

// Gamma(x), or log Gamma(x) for x > 0 when log_scale is set.
inline double gamma_fn(double x, bool log_scale = false) {
    if (is_nonpositive_integer(x))
        throw pole_error("gamma_fn: pole at nonpositive integer x = " + std::to_string(x));
    if (log_scale) {
        if (!(x > 0)) throw param_error("gamma_fn: log_scale requires x > 0");
        return std::lgamma(x);
    }
    return std::tgamma(x);
}

namespace detail {

// log |Gamma(x)| with the sign of Gamma(x); pole flag at nonpositive integers.
struct SignedLogGamma {
    double log = 0;
    int sign = 1;
    bool pole = false;
};

inline SignedLogGamma slgamma(double x) {
    SignedLogGamma r;
    if (is_nonpositive_integer(x)) {
        r.pole = true;
        return r;
    }
    if (x > 0) {
        r.log = std::lgamma(x);
        return r;
    }
    // Reflection: Gamma(x) = pi / (sin(pi x) Gamma(1-x)).
    const double s = std::sin(pi * x);
    r.log = std::log(pi / std::abs(s)) - std::lgamma(1 - x);
    r.sign = s > 0 ? 1 : -1;
    return r;
}

// Product of Gamma factors given as (argument, exponent) pairs, exponent +1
// for numerator and -1 for denominator. A denominator pole gives 0; a
// numerator pole throws.
inline double gamma_product(std::initializer_list<std::pair<double, int>> factors) {
    double log_sum = 0;
    int sign = 1;
    for (const auto& [arg, expo] : factors) {
        SignedLogGamma g = slgamma(arg);
        if (g.pole) {
            if (expo > 0)
                throw pole_error("gamma product: numerator pole at " + std::to_string(arg));
            return 0.0;
        }
        log_sum += expo * g.log;
        if (expo % 2 != 0 && g.sign < 0) sign = -sign;
    }
    return sign * std::exp(log_sum);
}

}  // namespace detail

// Digamma psi(x) = Gamma'(x)/Gamma(x). Recurrence to x >= 8, then the
// Bernoulli asymptotic series; reflection for x < 0.
inline double digamma(double x) {
    if (is_nonpositive_integer(x))
        throw pole_error("digamma: pole at nonpositive integer x = " + std::to_string(x));
    double result = 0;
    if (x < 0) {
        // psi(x) = psi(1-x) - pi cot(pi x)
        result -= pi / std::tan(pi * x);
        x = 1 - x;
    }
    while (x < 8) {
        result -= 1.0 / x;
        x += 1;
    }
    const double inv = 1.0 / x, inv2 = inv * inv;
    // B_{2k}/(2k) coefficients of the asymptotic expansion.
    const double series =
        inv2 * (1.0 / 12 -
        inv2 * (1.0 / 120 -
        inv2 * (1.0 / 252 -
        inv2 * (1.0 / 240 -
        inv2 * (1.0 / 132 -
        inv2 * (691.0 / 32760 -
        inv2 * (1.0 / 12)))))));
    return result + std::log(x) - 0.5 * inv - series;
}

// Rising factorial with exactly k factors; (a)_0 = 1.
inline double pochhammer(double a, int k) {
    if (k < 0) throw param_error("pochhammer: k must be nonnegative");
    double p = 1;
    for (int i = 0; i < k; ++i) p *= a + i;
    return p;
}

struct HypParams {
    double a, b, c, z;
};

namespace detail {

// Gauss series, valid for |z| < 1 (terminates on polynomial cases).
inline double hyp2f1_series(double a, double b, double c, double z) {
    if (is_nonpositive_integer(c) &&
        !((is_nonpositive_integer(a) && a >= c) || (is_nonpositive_integer(b) && b >= c)))
        throw pole_error("hyp2f1: c is a nonpositive integer");
    double term = 1, sum = 1;
    int small_streak = 0;
    for (int k = 0; k < series_max_terms; ++k) {
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
        sum += term;
        if (term == 0) return sum;
        if (std::abs(term) <= 1e-17 * std::abs(sum)) {
            if (++small_streak >= 2) return sum;
        } else {
            small_streak = 0;
        }
    }
    throw convergence_error("hyp2f1: series did not converge");
}

// Taylor-series continuation of the hypergeometric ODE
//   z(1-z) w'' + [c - (a+b+1) z] w' - a b w = 0
// from (z0, w, w') to z1, stepping a fixed fraction of the distance to the
// nearest singularity {0, 1}. Updates w, w' in place.
inline void ode_continue(double a, double b, double c, double z0, double z1,
                         double& w, double& wp) {
    constexpr int max_terms = 400;
    double z = z0;
    const double dir = z1 > z0 ? 1.0 : -1.0;
    int guard = 0;
    while (dir * (z1 - z) > 0) {
        if (++guard > 20000) throw convergence_error("hyp2f1: ODE continuation stalled");
        const double radius = std::min(std::abs(z), std::abs(1 - z));
        double h = dir * 0.5 * radius;
        if (dir * (z + h) > dir * z1) h = z1 - z;
        const double p0 = z * (1 - z), p1 = 1 - 2 * z;
        const double q0 = c - (a + b + 1) * z;
        // Work with scaled coefficients d_k = c_k h^k, which stay O(2^-k);
        // the raw Taylor coefficients grow like radius^-k and overflow once
        // the step is tiny near the z=1 singularity.
        double d0 = w, d1 = wp * h;
        double sum = d0 + d1, dsum = d1;
        for (int k = 0;; ++k) {
            const double d2 = -((p1 * k + q0) * (k + 1) * d1 * h -
                                (k + a) * (k + b) * d0 * h * h) /
                              (p0 * (k + 2.0) * (k + 1.0));
            sum += d2;
            dsum += (k + 2.0) * d2;
            d0 = d1;
            d1 = d2;
            if (k > 4 && std::abs(d2) <= 1e-18 * std::abs(sum) + 1e-300) break;
            if (k >= max_terms) throw convergence_error("hyp2f1: Taylor step did not converge");
        }
        w = sum;
        wp = dsum / h;
        z += h;
    }
}

inline double hyp2f1_impl(double a, double b, double c, double z);

// z <= -2: DLMF 15.8.2 in terms of 1/z; requires b - a not an integer.
inline double hyp2f1_inverse_z(double a, double b, double c, double z) {
    const double iz = 1.0 / z, mz = -z;
    const double t1 = detail::gamma_product({{c, 1}, {b - a, 1}, {b, -1}, {c - a, -1}}) *
                      std::pow(mz, -a) * hyp2f1_series(a, 1 - c + a, 1 - b + a, iz);
    const double t2 = detail::gamma_product({{c, 1}, {a - b, 1}, {a, -1}, {c - b, -1}}) *
                      std::pow(mz, -b) * hyp2f1_series(b, 1 - c + b, 1 - a + b, iz);
    return t1 + t2;
}

inline double hyp2f1_impl(double a, double b, double c, double z) {
    if (!(z < 1) && !(std::abs(z - 1) < 1e-300 && (is_nonpositive_integer(a) || is_nonpositive_integer(b))))
        throw param_error("hyp2f1: z must satisfy z < 1");
    if (std::abs(z) <= 0.5) return hyp2f1_series(a, b, c, z);

    if (z < 0) {
        if (z > -2) {
            // Pfaff: F(a,b,c,z) = (1-z)^{-a} F(a, c-b, c, z/(z-1)).
            const double zz = z / (z - 1);
            return std::pow(1 - z, -a) * hyp2f1_series(a, c - b, c, zz);
        }
        // 1/z connection unless b-a is near an integer (Gamma(b-a) pole, or a
        // near-pole that cancels catastrophically); then Pfaff into (1/2, 1)
        // followed by ODE continuation instead.
        const double gap = b - a;
        if (std::abs(gap - std::nearbyint(gap)) > 1e-6)
            return hyp2f1_inverse_z(a, b, c, z);
        const double zz = z / (z - 1);  // in [2/3, 1)
        return std::pow(1 - z, -a) * hyp2f1_impl(a, c - b, c, zz);
    }

    // z in (1/2, 1): series at 1/2, then ODE continuation.
    double w = hyp2f1_series(a, b, c, 0.5);
    double wp = a * b / c * hyp2f1_series(a + 1, b + 1, c + 1, 0.5);
    ode_continue(a, b, c, 0.5, z, w, wp);
    return w;
}

}  // namespace detail

inline double hyp2f1(double a, double b, double c, double z) {
    return detail::hyp2f1_impl(a, b, c, z);
}

inline double hyp2f1(const HypParams& p) { return hyp2f1(p.a, p.b, p.c, p.z); }

// d/dz F(a,b,c,z) = (a b / c) F(a+1, b+1, c+1, z).
inline double hyp2f1_deriv(double a, double b, double c, double z) {
    if (a == 0 || b == 0) return 0;
    return a * b / c * hyp2f1(a + 1, b + 1, c + 1, z);
}

inline double hyp2f1_deriv(const HypParams& p) { return hyp2f1_deriv(p.a, p.b, p.c, p.z); }

// d^2/dz^2 F(a,b,c,z) = (a)_2 (b)_2 / (c)_2 F(a+2, b+2, c+2, z).
inline double hyp2f1_deriv2(double a, double b, double c, double z) {
    const double f = a * (a + 1) * b * (b + 1) / (c * (c + 1));
    if (f == 0) return 0;
    return f * hyp2f1(a + 2, b + 2, c + 2, z);
}

enum class Z1Tag { Finite, Logarithmic, PowerBlowup };

struct Z1Regime {
    Z1Tag tag;
    double coefficient;  // Gamma-ratio constant of the matching limit law
    double exponent;     // c - a - b
};

// Classifies F(a,b,c,z) as z -> 1^-:
//   c-a-b > 0:  F -> Gamma(c)Gamma(c-a-b)/(Gamma(c-a)Gamma(c-b))
//   c-a-b = 0:  F ~ -Gamma(a+b)/(Gamma(a)Gamma(b)) ln(1-z)
//   c-a-b < 0:  F ~ Gamma(c)Gamma(a+b-c)/(Gamma(a)Gamma(b)) (1-z)^{c-a-b}
inline Z1Regime z1_classify(double a, double b, double c) {
    const double e = c - a - b;
    if (std::abs(e) <= 1e-12) {
        return {Z1Tag::Logarithmic,
                -detail::gamma_product({{a + b, 1}, {a, -1}, {b, -1}}), 0.0};
    }
    if (e > 0) {
        return {Z1Tag::Finite,
                detail::gamma_product({{c, 1}, {e, 1}, {c - a, -1}, {c - b, -1}}), e};
    }
    return {Z1Tag::PowerBlowup,
            detail::gamma_product({{c, 1}, {-e, 1}, {a, -1}, {b, -1}}), e};
}

// Finite limit as z -> 1^- of
//   eta(z) = F(a,b,c,z) + C z^{1-c} F(a+1-c, b+1-c, 2-c, z),
//   C = -Gamma(c)Gamma(a+1-c)Gamma(b+1-c) / (Gamma(2-c)Gamma(a)Gamma(b)),
// for a,b > 0, c in (0,1), a+b >= c. Both terms solve the same hypergeometric
// ODE; a finite limit forces the coefficient of the singular local solution
// at z=1 to vanish, so eta extends analytically across z=1 and Richardson
// extrapolation on integer powers of eps = 1-z converges at full order.
inline double eta_limit(double a, double b, double c) {
    if (!(a > 0) || !(b > 0)) throw param_error("eta_limit: requires a, b > 0");
    if (!(c > 0 && c < 1)) throw param_error("eta_limit: requires c in (0,1)");
    if (!(a + b >= c - 1e-12)) throw param_error("eta_limit: requires a + b >= c");

    const double C = -detail::gamma_product(
        {{c, 1}, {a + 1 - c, 1}, {b + 1 - c, 1}, {2 - c, -1}, {a, -1}, {b, -1}});

    // Combination value and derivative at z = 1/2 from the defining series.
    const double z0 = 0.5;
    double f1 = detail::hyp2f1_series(a, b, c, z0);
    double f1p = a * b / c * detail::hyp2f1_series(a + 1, b + 1, c + 1, z0);
    const double a2 = a + 1 - c, b2 = b + 1 - c, c2 = 2 - c;
    double f2 = detail::hyp2f1_series(a2, b2, c2, z0);
    double f2p = a2 * b2 / c2 * detail::hyp2f1_series(a2 + 1, b2 + 1, c2 + 1, z0);
    const double pw = std::pow(z0, 1 - c);
    double w = f1 + C * pw * f2;
    double wp = f1p + C * ((1 - c) * pw / z0 * f2 + pw * f2p);

    // Sample eta at 1 - eps_k on a geometric grid.
    constexpr int K = 8;
    std::array<double, K> eps{}, tab{};
    double z = z0;
    for (int k = 0; k < K; ++k) {
        eps[k] = 1e-2 * std::pow(0.5, k);
        const double target = 1 - eps[k];
        detail::ode_continue(a, b, c, z, target, w, wp);
        z = target;
        tab[k] = w;
    }

    // Rounding noise in the seed excites the singular local solution
    // (1-z)^{c-a-b}, which the continuation then amplifies. On the geometric
    // grid a pairwise combination of neighbours cancels an eps^q component
    // exactly while mapping polynomials in eps to polynomials in eps, so each
    // pass trades one sample for removal of the worst contaminant.
    int m = K;
    double q = c - a - b;
    for (int pass = 0; pass < 3 && q < -0.3; ++pass, q += 1) {
        const double rq = std::pow(0.5, q);
        for (int k = 0; k + 1 < m; ++k) tab[k] = (tab[k + 1] - rq * tab[k]) / (1 - rq);
        --m;
    }

    // Neville extrapolation in eps to 0 on the surviving entries.
    double prev_diag = tab[0];
    for (int level = 1; level < m; ++level) {
        for (int k = m - 1; k >= level; --k)
            tab[k] = tab[k] + (tab[k] - tab[k - 1]) * eps[k] / (eps[k - level] - eps[k]);
        if (level == m - 2) prev_diag = tab[m - 1];
    }
    const double limit = tab[m - 1];
    const double drift = std::abs(limit - prev_diag);
    if (!std::isfinite(limit) || drift > 1e-9 * std::max(1.0, std::abs(limit)))
        throw convergence_error("eta_limit: extrapolation did not stabilize, drift " +
                                std::to_string(drift));
    return limit;
}

struct BesselKProfile {
    double K;  // K_nu(t)
    double T;  // 2^{1-nu}/Gamma(nu) t^nu K_nu(t), the extension profile
};

// K_nu(t) by adaptive quadrature of the cosh integral representation
//   K_nu(t) = int_0^inf exp(-t cosh u) cosh(nu u) du,
// truncated where the exponential underflows. For t > 700 the value
// underflows to zero and (0,0) is returned.
inline BesselKProfile bessel_k_profile(double nu, double t) {
    if (!(nu > 0 && nu < 1)) throw param_error("bessel_k_profile: nu must be in (0,1)");
    if (!(t > 0)) throw param_error("bessel_k_profile: t must be positive");
    if (t > 700) return {0.0, 0.0};

    // exp(-t cosh u) < 5e-324 for t cosh u > 745; add headroom for cosh(nu u).
    const double u_max = std::acosh(760.0 / std::min(t, 760.0)) + 1.0;
    QuadratureSpec spec;
    spec.rel_tol = 1e-11;
    spec.abs_tol = 1e-300;
    auto integrand = [&](double u) {
        return std::exp(-t * std::cosh(u)) * std::cosh(nu * u);
    };
    QuadResult q = quad1d(integrand, 0.0, u_max, spec);
    const double K = q.require("bessel_k_profile");
    const double T = std::exp((1 - nu) * std::log(2.0) - std::lgamma(nu) + nu * std::log(t)) * K;
    return {K, T};
}

}  // namespace thl
