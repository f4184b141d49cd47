#pragma once

// Closed-form sharp constants of the weighted trace Hardy /
// Hardy-Sobolev-Maz'ya / logarithmic trace family, plus the identity suite
// cross-checking the relations the constants satisfy among themselves.
// Everything is evaluated in log-Gamma space and exponentiated, so large n
// stays finite.

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "thl/common.hpp"
#include "thl/specfun.hpp"

namespace thl {

// Parameter triple (n, s, beta) with the derived quantities used throughout:
// n_s = n+1+s, alpha = (1-s)/2 and the trace-critical exponent
// 2(s)* = 2n/(n-1+s).
struct InequalityParams {
    int n = 3;
    double s = 0;
    double beta = 2;

    double n_s() const { return n + 1 + s; }
    double alpha() const { return (1 - s) / 2; }
    double two_s_star() const { return 2.0 * n / (n - 1 + s); }

    void validate_base() const {
        if (n < 2) throw param_error("params: n must be >= 2");
        if (!(s > -1 && s < 1)) throw param_error("params: s must be in (-1,1)");
    }
    void validate_cone() const {
        validate_base();
        if (!(beta >= 2 && beta <= n_s()))
            throw param_error("params: cone range is 2 <= beta <= n+1+s");
    }
    void validate_half() const {
        validate_base();
        if (!(beta >= 0 && beta <= 1))
            throw param_error("params: half-space range is 0 <= beta <= 1");
    }
};

enum class ConstantKind {
    H_cone,                  // cone trace Hardy constant H(n,s,beta)
    kato,                    // unweighted half-space trace constant, beta=2, s=0
    avf,                     // s=0 cone constant H(n,beta)
    trace_hardy_weighted,    // beta=2 cone constant (pure trace term)
    hardy_weighted,          // interior Hardy constant (n_s-2)^2/4
    cs_trace,                // extension trace normalization 2^s G((1+s)/2)/G((1-s)/2)
    pitt,                    // fractional half-space Hardy (Pitt) constant
    frac_sobolev,            // sharp fractional Sobolev constant, order (1-s)/2
    trace_sobolev,           // weighted trace Sobolev constant C_{n,s}
    k_half,                  // half-space constant k(s,beta)
    spectral_trace,          // spectral fractional boundary Hardy constant (extra = alpha)
    spectral_energy_factor,  // extension energy factor 2^{1-2a} G(1-a)/G(a) (extra = alpha)
    cls_r,                   // radial logarithmic Sobolev trace constant
    clh_r,                   // radial logarithmic Hardy trace constant
    logsob_halfline,         // half-line log-Sobolev constant at dimension a (extra = a)
    flhs_c,                  // half-line log-Hardy constant C(n,a) (extra = a)
};

inline const char* to_string(ConstantKind k) {
    switch (k) {
        case ConstantKind::H_cone: return "H_cone";
        case ConstantKind::kato: return "kato";
        case ConstantKind::avf: return "avf";
        case ConstantKind::trace_hardy_weighted: return "trace_hardy_weighted";
        case ConstantKind::hardy_weighted: return "hardy_weighted";
        case ConstantKind::cs_trace: return "cs_trace";
        case ConstantKind::pitt: return "pitt";
        case ConstantKind::frac_sobolev: return "frac_sobolev";
        case ConstantKind::trace_sobolev: return "trace_sobolev";
        case ConstantKind::k_half: return "k_half";
        case ConstantKind::spectral_trace: return "spectral_trace";
        case ConstantKind::spectral_energy_factor: return "spectral_energy_factor";
        case ConstantKind::cls_r: return "cls_r";
        case ConstantKind::clh_r: return "clh_r";
        case ConstantKind::logsob_halfline: return "logsob_halfline";
        case ConstantKind::flhs_c: return "flhs_c";
    }
    return "?";
}

inline std::optional<ConstantKind> constant_kind_from_string(const std::string& name) {
    using K = ConstantKind;
    for (K k : {K::H_cone, K::kato, K::avf, K::trace_hardy_weighted, K::hardy_weighted,
                K::cs_trace, K::pitt, K::frac_sobolev, K::trace_sobolev, K::k_half,
                K::spectral_trace, K::spectral_energy_factor, K::cls_r, K::clh_r,
                K::logsob_halfline, K::flhs_c})
        if (name == to_string(k)) return k;
    return std::nullopt;
}

inline std::vector<ConstantKind> all_constant_kinds() {
    using K = ConstantKind;
    return {K::H_cone, K::kato, K::avf, K::trace_hardy_weighted, K::hardy_weighted,
            K::cs_trace, K::pitt, K::frac_sobolev, K::trace_sobolev, K::k_half,
            K::spectral_trace, K::spectral_energy_factor, K::cls_r, K::clh_r,
            K::logsob_halfline, K::flhs_c};
}

namespace detail {

inline double lg(double x) { return std::lgamma(x); }

// H(n,s,beta) =
//   2 G((1+s)/2) G((n_s+beta-2-2s)/4) G((n_s-beta+2-2s)/4)
//   / ( G((1-s)/2) G((n_s+beta-4)/4) G((n_s-beta)/4) ),
// extended to beta = n_s by the limit value 0 (Gamma pole in a denominator).
inline double h_cone(int n, double s, double beta) {
    const double ns = n + 1 + s;
    if (std::abs(beta - ns) < 1e-15) return 0.0;
    return 2.0 * gamma_product({{(1 + s) / 2, 1},
                                {(ns + beta - 2 - 2 * s) / 4, 1},
                                {(ns - beta + 2 - 2 * s) / 4, 1},
                                {(1 - s) / 2, -1},
                                {(ns + beta - 4) / 4, -1},
                                {(ns - beta) / 4, -1}});
}

// k(s,beta) = 2 G((1+s)/2)/G((1-s)/2) * ( G((3-s+g)/4) / G((1+s+g)/4) )^2,
// g = sqrt(1-beta^2).
inline double k_half(double s, double beta) {
    const double g = std::sqrt(1 - beta * beta);
    return 2.0 * std::exp(lg((1 + s) / 2) - lg((1 - s) / 2) +
                          2 * (lg((3 - s + g) / 4) - lg((1 + s + g) / 4)));
}

inline double cs_trace(double s) {
    return std::exp(s * std::log(2.0) + lg((1 + s) / 2) - lg((1 - s) / 2));
}

inline double pitt(int n, double s) {
    return std::exp((1 - s) * std::log(2.0) +
                    2 * (lg((n + 1 - s) / 4) - lg((n - 1 + s) / 4)));
}

inline double frac_sobolev(int n, double s) {
    const double sig = (1 - s) / 2;
    return std::exp(2 * sig * std::log(2.0) + sig * std::log(pi) +
                    lg((n + 1 - s) / 2) - lg((n - 1 + s) / 2) +
                    (1 - s) / n * (lg(n / 2.0) - lg(static_cast<double>(n))));
}

inline double trace_sobolev(int n, double s) {
    return std::exp(-std::log(2.0) - (1 - s) / 2 * std::log(pi) +
                    lg((1 - s) / 2) + lg((n - 1 + s) / 2) -
                    lg((1 + s) / 2) - lg((n + 1 - s) / 2) +
                    (1 - s) / n * (lg(static_cast<double>(n)) - lg(n / 2.0)));
}

inline double spectral_trace(double alpha, double beta) {
    const double g = std::sqrt(1 - beta * beta);
    return std::exp(2 * alpha * std::log(2.0) +
                    2 * (lg((2 * (1 + alpha) + g) / 4) - lg((2 * (1 - alpha) + g) / 4)));
}

inline double spectral_energy_factor(double alpha) {
    return std::exp((1 - 2 * alpha) * std::log(2.0) + lg(1 - alpha) - lg(alpha));
}

// Weighted upper-hemisphere measure omega_{n,s} = pi^{n/2} G((1+s)/2) / G(n_s/2).
inline double omega_ns(int n, double s) {
    return std::exp(0.5 * n * std::log(pi) + lg((1 + s) / 2) - lg((n + 1 + s) / 2));
}

// Surface area of S^{n-1}.
inline double omega_nm1(int n) {
    return 2 * std::exp(0.5 * n * std::log(pi) - lg(n / 2.0));
}

// Half-line log-Sobolev constant in fractional dimension a:
// (2/(a e)) (2/G(a/2))^{2/a}.
inline double logsob_halfline_const(double a) {
    return std::exp(std::log(2.0 / a) - 1 + 2.0 / a * (std::log(2.0) - lg(a / 2)));
}

// Half-line log-Hardy constant
// C(n,a) = (4(1+a)^2/n) (1/(2 pi e (1+a)))^{(1+a)/n}
//          ((n-1-a)/(n-2(a+1))^2)^{1-(1+a)/n}.
inline double flhs_c(int n, double a) {
    const double q = (1 + a) / n;
    return 4 * (1 + a) * (1 + a) / n *
           std::pow(1.0 / (2 * pi * std::exp(1.0) * (1 + a)), q) *
           std::pow((n - 1 - a) / ((n - 2 * (a + 1)) * (n - 2 * (a + 1))), 1 - q);
}

// Shared prefactor of the radial logarithmic constants:
// 4 w_{n-1} / ((1-s)^2 w_{n,s}) * (2 w_{n-1}/(1-s))^{-(1-s)/n}.
inline double radial_log_prefactor(int n, double s) {
    const double w = omega_ns(n, s);
    const double wm = omega_nm1(n);
    return 4 * wm / ((1 - s) * (1 - s) * w) *
           std::pow(2 * wm / (1 - s), -(1 - s) / n);
}

inline double cls_r(int n, double s) {
    return radial_log_prefactor(n, s) * logsob_halfline_const(2.0 * n / (1 - s));
}

inline double clh_r(int n, double s) {
    return radial_log_prefactor(n, s) * flhs_c(n, -(1 + s) / 2);
}

}  // namespace detail

// Closed-form evaluation of one sharp constant. `extra` carries the
// fractional order alpha for the spectral kinds and the (possibly fractional)
// dimension a for the half-line kinds; other kinds ignore it.
inline double sharp_constant(ConstantKind kind, const InequalityParams& p,
                             std::optional<double> extra = std::nullopt) {
    using K = ConstantKind;
    switch (kind) {
        case K::H_cone:
            p.validate_cone();
            return detail::h_cone(p.n, p.s, p.beta);
        case K::kato: {
            if (p.n < 2) throw param_error("kato: n must be >= 2");
            return detail::h_cone(p.n, 0.0, 2.0);
        }
        case K::avf: {
            InequalityParams q{p.n, 0.0, p.beta};
            q.validate_cone();
            return detail::h_cone(q.n, 0.0, q.beta);
        }
        case K::trace_hardy_weighted:
            p.validate_base();
            return detail::h_cone(p.n, p.s, 2.0);
        case K::hardy_weighted: {
            p.validate_base();
            const double d = p.n_s() - 2;
            return d * d / 4;
        }
        case K::cs_trace:
            p.validate_base();
            return detail::cs_trace(p.s);
        case K::pitt:
            p.validate_base();
            return detail::pitt(p.n, p.s);
        case K::frac_sobolev:
            p.validate_base();
            return detail::frac_sobolev(p.n, p.s);
        case K::trace_sobolev:
            p.validate_base();
            return detail::trace_sobolev(p.n, p.s);
        case K::k_half:
            p.validate_half();
            return detail::k_half(p.s, p.beta);
        case K::spectral_trace: {
            const double alpha = extra.value_or(p.alpha());
            if (!(alpha > 0 && alpha < 1))
                throw param_error("spectral_trace: alpha must be in (0,1)");
            if (!(p.beta >= 0 && p.beta <= 1))
                throw param_error("spectral_trace: beta must be in [0,1]");
            return detail::spectral_trace(alpha, p.beta);
        }
        case K::spectral_energy_factor: {
            const double alpha = extra.value_or(p.alpha());
            if (!(alpha > 0 && alpha < 1))
                throw param_error("spectral_energy_factor: alpha must be in (0,1)");
            return detail::spectral_energy_factor(alpha);
        }
        case K::cls_r:
            p.validate_base();
            return detail::cls_r(p.n, p.s);
        case K::clh_r:
            p.validate_base();
            return detail::clh_r(p.n, p.s);
        case K::logsob_halfline: {
            const double a = extra.value_or(2.0 * p.n / (1 - p.s));
            if (!(a >= 1)) throw param_error("logsob_halfline: requires a >= 1");
            return detail::logsob_halfline_const(a);
        }
        case K::flhs_c: {
            const double a = extra.value_or(-(1 + p.s) / 2);
            if (!(a > -1 && a < (p.n - 2) / 2.0))
                throw param_error("flhs_c: requires -1 < a < (n-2)/2");
            return detail::flhs_c(p.n, a);
        }
    }
    throw param_error("sharp_constant: unknown kind");
}

struct IdentityCheck {
    std::string name;
    double lhs = 0, rhs = 0;
    double rel_dev = 0;
    bool pass = false;
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;
    double max_rel_dev = 0;
    bool all_pass = true;
};

namespace detail {

inline void push_check(IdentityReport& rep, std::string name, double lhs, double rhs,
                       double tol = 1e-12) {
    IdentityCheck c;
    c.name = std::move(name);
    c.lhs = lhs;
    c.rhs = rhs;
    const double scale = std::max({std::abs(lhs), std::abs(rhs), 1.0});
    c.rel_dev = std::abs(lhs - rhs) / scale;
    c.pass = c.rel_dev <= tol;
    rep.max_rel_dev = std::max(rep.max_rel_dev, c.rel_dev);
    rep.all_pass = rep.all_pass && c.pass;
    rep.checks.push_back(std::move(c));
}

}  // namespace detail

// Cross-checks, at every grid point, the six relations tying the constants of
// the family together:
//   (a) the s=0 cone constant coincides with the interpolation-family value,
//   (b) the beta=2 cone constant equals the pure trace Hardy constant,
//   (c) H(n,s,beta) -> 0 as beta -> n_s,
//   (d) the duplication form of k(s,beta):
//         k = (1-s) G((1+s)/2) G((3-s+g)/4)^2 / ( G((3-s)/2) G((1+s+g)/4)^2 ),
//   (e) the Pitt constant equals trace-Hardy(beta=2) / cs_trace,
//   (f) the whole-line doubled boundary constant 4 (G(3/4)/G(1/4))^2 = 2 k(0,1).
inline IdentityReport constant_identities(const std::vector<InequalityParams>& grid) {
    if (grid.empty()) throw param_error("constant_identities: empty grid");
    IdentityReport rep;
    for (const InequalityParams& p : grid) {
        p.validate_base();
        const std::string tag =
            "(n=" + std::to_string(p.n) + ",s=" + std::to_string(p.s) +
            ",beta=" + std::to_string(p.beta) + ") ";

        const double beta_c = std::min(std::max(p.beta, 2.0), p.n_s());
        detail::push_check(rep, tag + "s0-interpolation",
                           detail::h_cone(p.n, 0.0, std::min(beta_c, p.n + 1.0)),
                           sharp_constant(ConstantKind::avf,
                                          {p.n, 0.0, std::min(beta_c, p.n + 1.0)}));
        detail::push_check(rep, tag + "beta2-trace-hardy", detail::h_cone(p.n, p.s, 2.0),
                           sharp_constant(ConstantKind::trace_hardy_weighted, p));
        detail::push_check(rep, tag + "vanishing-at-ns",
                           detail::h_cone(p.n, p.s, p.n_s() - 1e-6), 0.0, 1e-5);

        const double bh = std::min(std::max(p.beta - 2.0, 0.0), 1.0);
        const double g = std::sqrt(1 - bh * bh);
        const double k_dup =
            (1 - p.s) * std::exp(detail::lg((1 + p.s) / 2) +
                                 2 * detail::lg((3 - p.s + g) / 4) -
                                 detail::lg((3 - p.s) / 2) -
                                 2 * detail::lg((1 + p.s + g) / 4));
        detail::push_check(rep, tag + "k-duplication",
                           detail::k_half(p.s, bh), k_dup);
        detail::push_check(rep, tag + "pitt-composition", detail::pitt(p.n, p.s),
                           detail::h_cone(p.n, p.s, 2.0) / detail::cs_trace(p.s));
        detail::push_check(rep, tag + "whole-line-doubling",
                           4 * std::exp(2 * (detail::lg(0.75) - detail::lg(0.25))),
                           2 * detail::k_half(0.0, 1.0));
    }
    return rep;
}

}  // namespace thl
