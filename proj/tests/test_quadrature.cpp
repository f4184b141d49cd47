#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "thl/quadrature.hpp"

using namespace thl;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("smooth integrands on finite intervals") {
    auto q = quad1d([](double x) { return x * x; }, 0, 1);
    REQUIRE(q.converged);
    REQUIRE_THAT(q.value, WithinRel(1.0 / 3.0, 1e-13));
    REQUIRE(q.error < 1e-10);
    REQUIRE(q.evaluations > 0);

    q = quad1d([](double x) { return std::sin(x); }, 0, pi);
    REQUIRE_THAT(q.value, WithinRel(2.0, 1e-13));

    // oscillatory: int_0^10 cos(7x) = sin(70)/7
    q = quad1d([](double x) { return std::cos(7 * x); }, 0, 10);
    REQUIRE_THAT(q.value, WithinAbs(std::sin(70.0) / 7.0, 1e-11));
}

TEST_CASE("endpoint singularities") {
    // int_0^1 x^{-1/2} = 2
    auto q = quad1d_singular([](double x) { return 1.0 / std::sqrt(x); }, 0, 1, -0.5, 0);
    REQUIRE(q.converged);
    REQUIRE_THAT(q.value, WithinRel(2.0, 1e-10));

    // int_0^1 x^{-0.9} = 10
    q = quad1d_singular([](double x) { return std::pow(x, -0.9); }, 0, 1, -0.9, 0);
    REQUIRE_THAT(q.value, WithinRel(10.0, 1e-9));

    // int_0^1 (1-x)^{-1/3} = 3/2
    q = quad1d_singular([](double x) { return std::pow(1 - x, -1.0 / 3.0); }, 0, 1, 0, -1.0 / 3.0);
    REQUIRE_THAT(q.value, WithinRel(1.5, 1e-10));

    // both ends: Beta(1/2,1/2) = pi
    q = quad1d_singular([](double x) { return 1.0 / std::sqrt(x * (1 - x)); }, 0, 1, -0.5, -0.5);
    REQUIRE_THAT(q.value, WithinRel(pi, 1e-10));

    REQUIRE_THROWS_AS(quad1d_singular([](double x) { return x; }, 0, 1, -1.5, 0), param_error);
}

TEST_CASE("semi-infinite intervals") {
    const double inf = std::numeric_limits<double>::infinity();
    QuadratureSpec tight;
    tight.rel_tol = 1e-12;

    auto q = quad1d_singular([](double x) { return std::exp(-x); }, 0, inf, 0, 0, tight);
    REQUIRE(q.converged);
    REQUIRE_THAT(q.value, WithinRel(1.0, 1e-10));

    // Gamma(3/2) = 0.88622692545275801365 (frozen reference value)
    q = quad1d_singular([](double x) { return std::sqrt(x) * std::exp(-x); }, 0, inf, 0.5, 0, tight);
    REQUIRE_THAT(q.value, WithinRel(0.88622692545275801365, 1e-10));

    // singular at the origin as well: Gamma(1/2) = sqrt(pi)
    q = quad1d_singular([](double x) { return std::exp(-x) / std::sqrt(x); }, 0, inf, -0.5, 0, tight);
    REQUIRE_THAT(q.value, WithinRel(std::sqrt(pi), 1e-10));

    // algebraic tail: int_1^inf x^{-3} = 1/2
    q = quad1d_singular([](double x) { return 1.0 / (x * x * x); }, 1, inf, 0, 0, tight);
    REQUIRE_THAT(q.value, WithinRel(0.5, 1e-10));

    // default tolerance still lands within its own 1e-8 budget
    q = quad1d_singular([](double x) { return std::sqrt(x) * std::exp(-x); }, 0, inf, 0.5, 0);
    REQUIRE_THAT(q.value, WithinRel(0.88622692545275801365, 1e-7));
}

TEST_CASE("error reporting and require()") {
    auto ok = quad1d([](double x) { return x; }, 0, 1);
    REQUIRE_NOTHROW(ok.require("linear"));

    QuadResult bad;
    bad.converged = false;
    bad.value = 42;
    REQUIRE_THROWS_AS(bad.require("synthetic"), convergence_error);

    QuadratureSpec s;
    s.rel_tol = -1;
    REQUIRE_THROWS_AS(quad1d([](double x) { return x; }, 0, 1, s), param_error);
}

TEST_CASE("accumulation of partial results") {
    auto a = quad1d([](double x) { return x; }, 0, 1);
    auto b = quad1d([](double x) { return x; }, 1, 2);
    a += b;
    REQUIRE_THAT(a.value, WithinRel(2.0, 1e-12));
    REQUIRE(a.converged);
}
