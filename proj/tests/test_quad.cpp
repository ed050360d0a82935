#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mtc/quad.hpp"
#include "mtc/rng.hpp"

using namespace mtc;

namespace {

constexpr double kPi = std::numbers::pi;

// Independent oracle for the weighted-moment integrals:
// integral_0^1 x^(p-1) (1-x)^(q-1) dx = Gamma(p)Gamma(q)/Gamma(p+q)
double beta_fn(double p, double q) { return std::exp(std::lgamma(p) + std::lgamma(q) - std::lgamma(p + q)); }

FunctionSpec fs(const char* src, double a, double b) {
    return FunctionSpec::parse(src, Interval(a, b));
}

} // namespace

TEST_CASE("plain adaptive quadrature hits closed forms") {
    CHECK(integrate(fs("x^2", 0, 1), 1e-10).value == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
    CHECK(integrate(fs("exp(x)", 0, 1), 1e-10).value ==
          doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-13));
    CHECK(integrate(fs("sin(x)", 0, kPi), 1e-10).value == doctest::Approx(2.0).epsilon(1e-13));

    const QuadResult c = integrate(fs("1", 2, 5), 1e-10);
    CHECK(std::abs(c.value - 3.0) <= 4 * std::numeric_limits<double>::epsilon() * 3.0);

    const QuadResult q = integrate(fs("exp(x)", 0, 1), 1e-10);
    CHECK(q.converged);
    CHECK(q.abs_error_estimate <= 1e-10);
    CHECK(q.evaluations >= 15);
}

TEST_CASE("linearity within combined error estimates") {
    SplitMix64 rng(17);
    for (int i = 0; i < 20; ++i) {
        const double alpha = rng.next_in(-3.0, 3.0);
        const double beta = rng.next_in(-3.0, 3.0);
        char buf[128];
        std::snprintf(buf, sizeof buf, "%.17g*x^2+%.17g*exp(x)", alpha, beta);
        const double combined = integrate(fs(buf, 0, 1), 1e-10).value;
        const double parts = alpha * integrate(fs("x^2", 0, 1), 1e-10).value +
                             beta * integrate(fs("exp(x)", 0, 1), 1e-10).value;
        CHECK(combined == doctest::Approx(parts).epsilon(1e-12));
    }
}

TEST_CASE("weights: positivity, endpoint zeros, tau^2 == mu") {
    const Interval dom(3.0, 5.0);
    CHECK(weight_tau(dom.a, dom) == 0.0);
    CHECK(weight_tau(dom.b, dom) == 0.0);
    CHECK(weight_mu(dom.a, dom) == 0.0);
    CHECK(weight_mu(dom.b, dom) == 0.0);
    SplitMix64 rng(3);
    for (int i = 0; i < 200; ++i) {
        const double x = rng.next_in(dom.a, dom.b);
        const double tau = weight_tau(x, dom);
        const double mu = weight_mu(x, dom);
        CHECK(tau >= 0.0);
        CHECK(mu >= 0.0);
        CHECK(tau * tau == doctest::Approx(mu).epsilon(4e-16));
    }
}

TEST_CASE("weighted integrals against the beta-function oracle") {
    // integral_0^1 sqrt(t(1-t)) dt = B(3/2, 3/2) = pi/8
    const QuadResult m0 = integrate_weighted(fs("1", 0, 1), Weight::sqrt_t_one_minus_t, 1e-10);
    CHECK(m0.value == doctest::Approx(0.39269908169872414).epsilon(1e-12));
    CHECK(m0.value == doctest::Approx(beta_fn(1.5, 1.5)).epsilon(1e-12));

    // integral_0^1 x^2 sqrt(x(1-x)) dx = B(7/2, 3/2) = 5 pi / 128
    const QuadResult m2 = integrate_weighted(fs("x^2", 0, 1), Weight::tau, 1e-10);
    CHECK(m2.value == doctest::Approx(0.1227184630308513).epsilon(1e-12));
    CHECK(m2.value == doctest::Approx(beta_fn(3.5, 1.5)).epsilon(1e-12));

    // integral_0^1 x sqrt(x(1-x)) dx = B(5/2, 3/2) = pi/16
    const QuadResult m1 = integrate_weighted(fs("x", 0, 1), Weight::tau, 1e-10);
    CHECK(m1.value == doctest::Approx(kPi / 16.0).epsilon(1e-12));

    // integral_0^1 t(1-t) dt = 1/6
    const QuadResult mu1 = integrate_weighted(fs("1", 0, 1), Weight::mu, 1e-10);
    CHECK(mu1.value == doctest::Approx(1.0 / 6.0).epsilon(1e-13));

    // weight none falls through to the plain integral
    CHECK(integrate_weighted(fs("x^2", 0, 1), Weight::none, 1e-10).value ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-13));

    // the sqrt(t(1-t)) weight insists on [0,1]
    CHECK_THROWS_AS(integrate_weighted(fs("1", 0, 2), Weight::sqrt_t_one_minus_t, 1e-10),
                    std::invalid_argument);
}

TEST_CASE("exact moments behind the product-theorem constants") {
    CHECK(std::abs(integrate(fs("x^2", 0, 1), 1e-10).value - 1.0 / 3.0) <= 1e-12);
    CHECK(std::abs(integrate(fs("x*(1-x)", 0, 1), 1e-10).value - 1.0 / 6.0) <= 1e-12);
    CHECK(std::abs(integrate(fs("(1-x)^2", 0, 1), 1e-10).value - 1.0 / 3.0) <= 1e-12);
}

TEST_CASE("substitution identity: two independent routes agree") {
    CHECK(tau_substitution_check(fs("1", 0, 1), 1e-10) <= 1e-9);
    CHECK(tau_substitution_check(fs("x", 3, 5), 1e-10) <= 1e-9);
    CHECK(tau_substitution_check(fs("exp(x)", 0, 1), 1e-10) <= 1e-9);

    // for f = x on [3,5] both sides equal pi/2 in closed form
    const QuadResult lhs = integrate_weighted(fs("x", 3, 5), Weight::tau, 1e-10);
    CHECK(lhs.value / 2.0 == doctest::Approx(kPi / 2.0).epsilon(1e-12));
}

TEST_CASE("undefined evaluation inside the interval aborts with the point") {
    const FunctionSpec f = fs("sqrt((x-0.3)*(x-0.7))", 0, 1);
    try {
        integrate(f, 1e-10);
        FAIL("expected UndefinedEvaluation");
    } catch (const UndefinedEvaluation& e) {
        CHECK(e.point() > 0.3);
        CHECK(e.point() < 0.7);
    }
}

TEST_CASE("budget exhaustion reports non-convergence instead of lying") {
    // tens of thousands of oscillations: the 10^4-interval budget cannot
    // resolve this to 1e-10
    const QuadResult q = integrate(fs("sin(1/x)", 1e-5, 1), 1e-10);
    CHECK(!q.converged);
    CHECK(q.abs_error_estimate > 1e-10);
    CHECK(q.evaluations >= 15 * kSubdivisionBudget);
}

TEST_CASE("tolerance scaling is honored by the substitution path") {
    // a converged result promises abs_error_estimate <= tol in the x-scale
    for (double tol : {1e-6, 1e-8, 1e-10}) {
        const QuadResult q = integrate_weighted(fs("exp(x)", 3, 5), Weight::tau, tol);
        CHECK(q.converged);
        CHECK(q.abs_error_estimate <= tol);
    }
}

TEST_CASE("bad arguments are rejected") {
    CHECK_THROWS_AS(integrate([](double x) { return x; }, 1.0, 0.0, 1e-10), std::invalid_argument);
    CHECK_THROWS_AS(integrate([](double x) { return x; }, 0.0, 1.0, 0.0), std::invalid_argument);
}
