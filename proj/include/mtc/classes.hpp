#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>

#include "mtc/expr.hpp"

namespace mtc {

/// Execution policy for the sample scans. The parallel path partitions the
/// sample set across OpenMP threads; its merge is a total order (largest
/// violation, then lexicographically smallest (x, y, t), then lowest sample
/// index), so both policies return bit-identical verdicts.
enum class Exec { serial, parallel };

/// Coefficient pair of the membership inequality
///   f(tx + (1-t)y) <= lam * f(x) + mu * f(y),
/// lam = sqrt(t) / (2 sqrt(1-t)), mu = sqrt(1-t) / (2 sqrt(t)).
/// lam * mu = 1/4 and lam + mu = 1 / (2 sqrt(t(1-t))) >= 1, with the minimum
/// exactly at t = 1/2; also lam >= t and mu >= 1-t throughout (0,1).
struct MtCoefficients {
    double lam; // multiplies f(x)
    double mu;  // multiplies f(y)
    double t;
};

/// Throws std::domain_error unless 0 < t < 1 (the coefficients blow up at
/// the ends).
MtCoefficients mt_coefficients(double t);

/// (x+y)/2 - sqrt(xy) for x, y >= 0; nonnegative, zero exactly when x == y.
/// Throws std::domain_error on negative input.
double amgm_gap(double x, double y);

/// Deterministic grid plus seeded random samples over points, pairs or
/// triples. The t coordinate of membership triples is confined to
/// [t_margin, 1 - t_margin] because the coefficients diverge at 0 and 1.
struct SamplePlan {
    int grid_points = 64;
    int random_samples = 4096;
    std::uint64_t seed = 0;
    double t_margin = 1e-6;

    void validate() const; // grid_points >= 3, random_samples >= 0, 0 < t_margin < 1/2
};

enum class CheckStatus { holds_on_samples, fails, undefined_encountered };

enum class WitnessKind { inequality, nonnegativity, domain };

/// A concrete point where a quantified predicate fails. `margin` is the
/// violation amount (strictly positive except for domain-failure witnesses,
/// which carry the offending abscissa in x = y and margin 0).
struct Witness {
    WitnessKind kind = WitnessKind::inequality;
    double x = 0.0;
    double y = 0.0;
    std::optional<double> t; // absent for two-point predicates
    double margin = 0.0;
};

/// The most extreme sample a scan saw, violating or not: both sides of the
/// inequality there and their signed gap lhs - rhs (positive = violated).
struct ExtremeSample {
    double x = 0.0;
    double y = 0.0;
    std::optional<double> t;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
};

struct Verdict {
    CheckStatus status = CheckStatus::holds_on_samples;
    std::optional<Witness> witness;   // present iff status != holds_on_samples
    std::optional<ExtremeSample> extreme;
    long long evaluations = 0;
};

/// A sampled violation only counts beyond this relative rounding guard:
/// margin > kViolationRelTol * (1 + |rhs|).
inline constexpr double kViolationRelTol = 1e-12;

/// Two evaluated sides of a pointwise inequality lhs <= rhs. NaN in either
/// slot means some evaluation was undefined.
struct PointSides {
    double lhs = std::numeric_limits<double>::quiet_NaN();
    double rhs = std::numeric_limits<double>::quiet_NaN();

    bool defined() const { return !std::isnan(lhs) && !std::isnan(rhs); }
    double violation() const { return lhs - rhs; }
    bool violates() const {
        return defined() && violation() > kViolationRelTol * (1.0 + std::abs(rhs));
    }
};

// Pointwise kernels, shared with the counterexample search.
PointSides mt_sides(const Expr& f, double x, double y, double t);
PointSides convexity_sides(const Expr& f, double x, double y, double t);
PointSides midpoint_sides(const Expr& f, double x, double y);
PointSides similar_order_sides(const Expr& f, const Expr& g, double x, double y);

/// f(tx+(1-t)y) <= t f(x) + (1-t) f(y) over all plan triples, t in [0,1].
Verdict check_convexity(const FunctionSpec& f, const SamplePlan& plan, Exec exec = Exec::parallel);

/// f((x+y)/2) <= (f(x)+f(y))/2 over all plan pairs.
Verdict check_midpoint_convexity(const FunctionSpec& f, const SamplePlan& plan,
                                 Exec exec = Exec::parallel);

/// Membership inequality over all plan triples with t in
/// [t_margin, 1-t_margin], plus nonnegativity of f at every sampled point.
/// Nonnegativity failures are reported with WitnessKind::nonnegativity.
Verdict check_mt_membership(const FunctionSpec& f, const SamplePlan& plan,
                            Exec exec = Exec::parallel);

/// (f(x)-f(y))(g(x)-g(y)) >= 0 over all plan pairs. Domains must match.
Verdict check_similarly_ordered(const FunctionSpec& f, const FunctionSpec& g,
                                const SamplePlan& plan, Exec exec = Exec::parallel);

} // namespace mtc
