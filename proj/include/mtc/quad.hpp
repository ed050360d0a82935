#pragma once

#include <functional>
#include <stdexcept>

#include "mtc/expr.hpp"

namespace mtc {

struct QuadResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    long long evaluations = 0;
    bool converged = false; // implies abs_error_estimate <= requested tolerance
};

/// Weights of the weighted inequalities:
///   tau(x) = sqrt((b-x)(x-a)) / (b-a)
///   mu(x)  = (b-x)(x-a) / (b-a)^2            (= tau^2)
///   sqrt_t_one_minus_t(t) = sqrt(t(1-t))      on [0,1] only
enum class Weight { none, tau, mu, sqrt_t_one_minus_t };

/// Thrown when an integrand is undefined at an abscissa strictly inside the
/// integration interval. Silently skipping such points would corrupt the
/// inequality margins downstream, so the whole integral is rejected.
class UndefinedEvaluation : public std::runtime_error {
public:
    UndefinedEvaluation(double point, const std::string& what)
        : std::runtime_error(what), point_(point) {}

    double point() const { return point_; }

private:
    double point_;
};

inline constexpr int kSubdivisionBudget = 10000;
inline constexpr double kDefaultTol = 1e-10;

double weight_tau(double x, const Interval& dom);
double weight_mu(double x, const Interval& dom);

/// Adaptive Gauss-Kronrod (G7,K15) with bisection of the worst interval and a
/// deterministic compensated final sum. Absolute-error target.
QuadResult integrate(const std::function<double(double)>& f, double a, double b, double tol);

QuadResult integrate(const FunctionSpec& f, double tol = kDefaultTol);

/// Integral of w(x) * f(x) over the domain of f, without any prefactor.
/// The tau and sqrt_t_one_minus_t weights have unbounded derivatives at the
/// endpoints; those are integrated through the substitution
/// x = mid + halfwidth * cos(theta), which turns the weight into a smooth
/// sin^2(theta) factor.
QuadResult integrate_weighted(const FunctionSpec& f, Weight w, double tol = kDefaultTol);

/// Absolute difference between the two sides of the change-of-variables
/// identity
///   integral_0^1 sqrt(t(1-t)) f(ta + (1-t)b) dt
///     = 1/(b-a) * integral_a^b tau(x) f(x) dx,
/// each side computed by an independent route (raw adaptive quadrature in t
/// on the left, the substitution path of integrate_weighted on the right).
double tau_substitution_check(const FunctionSpec& f, double tol = kDefaultTol);

} // namespace mtc
