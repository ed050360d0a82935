#pragma once

#include <string>
#include <utility>

#include "mtc/classes.hpp"
#include "mtc/quad.hpp"

namespace mtc {

enum class TheoremId {
    hh_left,
    hh_right,
    tau_bound,
    midpoint_pi,
    product_mu,
    so_product,
    pachpatte,
    pachpatte_midpoint,
};

enum class TheoremStatus { satisfied, violated, inconclusive };

/// Both sides of one inequality with the signed margin rhs - lhs.
/// Hypotheses are probed by sampling; a failed probe only sets
/// precondition_ok = false and a note, the verification itself still runs so
/// out-of-class functions can be studied deliberately.
struct TheoremReport {
    TheoremId id = TheoremId::hh_left;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0; // rhs - lhs, nonnegative when the inequality holds
    double lhs_error = 0.0;
    double rhs_error = 0.0;
    TheoremStatus status = TheoremStatus::satisfied;
    bool precondition_ok = true;
    std::string precondition_note;
    bool quadrature_converged = true;
    long long evaluations = 0;
};

/// Endpoint product sums M = f(a)g(a) + f(b)g(b), N = f(a)g(b) + f(b)g(a).
struct ProductTerms {
    double M = 0.0;
    double N = 0.0;
};

ProductTerms product_terms(const FunctionSpec& f, const FunctionSpec& g);

/// Status rule. A violation is only called when the negative margin clears
/// the combined quadrature error plus a small evaluation-rounding slack;
/// negative margins inside the band are inconclusive, never violated.
TheoremStatus classify_margin(double margin, double lhs, double rhs, double lhs_error,
                              double rhs_error);

/// Thrown by verify_so_product when the pair is not similarly ordered on the
/// sample plan; carries the violating pair.
class PreconditionError : public std::runtime_error {
public:
    PreconditionError(const std::string& what, Witness witness)
        : std::runtime_error(what), witness_(witness) {}

    const Witness& witness() const { return witness_; }

private:
    Witness witness_;
};

/// f((a+b)/2) <= mean of f over [a,b].
TheoremReport verify_hadamard_left(const FunctionSpec& f, double tol = kDefaultTol);

/// mean of f over [a,b] <= (f(a)+f(b))/2; the right half of the classical
/// double inequality.
TheoremReport verify_hh_right(const FunctionSpec& f, double tol = kDefaultTol);

/// (2/(b-a)) * integral tau f <= (f(a)+f(b))/2.
TheoremReport verify_tau_bound(const FunctionSpec& f, double tol = kDefaultTol);

/// (pi/2) f((a+b)/2) <= f(a) + f(b); pointwise, both error terms are zero.
TheoremReport verify_midpoint_pi(const FunctionSpec& f, double tol = kDefaultTol);

/// (1/(b-a)) * integral mu f g <= M/12 + N/24.
TheoremReport verify_product_mu(const FunctionSpec& f, const FunctionSpec& g,
                                double tol = kDefaultTol);

/// (1/(b-a)) * integral mu f g <= M/8 for similarly ordered pairs. The
/// similar-ordering precondition is hard: a violation raises
/// PreconditionError instead of producing a report.
TheoremReport verify_so_product(const FunctionSpec& f, const FunctionSpec& g,
                                const SamplePlan& plan, double tol = kDefaultTol);

/// (1/(b-a)) * integral f g <= M/3 + N/6.
TheoremReport verify_pachpatte(const FunctionSpec& f, const FunctionSpec& g,
                               double tol = kDefaultTol);

/// 2 f(m) g(m) <= mean of f g + M/6 + N/3 at m = (a+b)/2.
TheoremReport verify_pachpatte_midpoint(const FunctionSpec& f, const FunctionSpec& g,
                                        double tol = kDefaultTol);

/// Both halves of the classical double inequality, sharing one quadrature.
std::pair<TheoremReport, TheoremReport> verify_classical_hh(const FunctionSpec& f,
                                                            double tol = kDefaultTol);

const char* theorem_id_name(TheoremId id);
const char* theorem_status_name(TheoremStatus status);

} // namespace mtc
