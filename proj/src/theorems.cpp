#include "mtc/theorems.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "mtc/rng.hpp"

namespace mtc {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Modest fixed plan for the advisory hypothesis probes; the verifications
// themselves do not depend on it.
SamplePlan precheck_plan() {
    SamplePlan plan;
    plan.grid_points = 16;
    plan.random_samples = 256;
    plan.seed = 0;
    return plan;
}

double eval_or_throw(const FunctionSpec& f, double x) {
    const double v = f(x);
    if (std::isnan(v))
        throw UndefinedEvaluation(x, "function '" + f.source() + "' is undefined at x = " + fmt(x));
    return v;
}

struct Precheck {
    bool ok = true;
    std::string note;
    long long evaluations = 0;

    void merge(const Verdict& verdict, const std::string& what) {
        evaluations += verdict.evaluations;
        if (verdict.status == CheckStatus::holds_on_samples) return;
        ok = false;
        if (!note.empty()) note += "; ";
        if (verdict.status == CheckStatus::undefined_encountered)
            note += what + ": undefined evaluation at x = " + fmt(verdict.witness->x);
        else
            note += what + ": violation at (x=" + fmt(verdict.witness->x) + ", y=" +
                    fmt(verdict.witness->y) +
                    (verdict.witness->t ? ", t=" + fmt(*verdict.witness->t) : "") + ")";
    }
};

Precheck precheck_mt(const FunctionSpec& f, const std::string& label) {
    Precheck p;
    p.merge(check_mt_membership(f, precheck_plan()), label + " not MT on samples");
    return p;
}

Precheck precheck_convex_nonneg(const FunctionSpec& f, const std::string& label) {
    Precheck p;
    p.merge(check_convexity(f, precheck_plan()), label + " not convex on samples");
    // pointwise nonnegativity probe along the grid
    const SamplePlan plan = precheck_plan();
    const Interval dom = f.domain();
    SplitMix64 rng(plan.seed);
    bool neg = false;
    double where = 0.0;
    for (int i = 0; i < plan.grid_points + plan.random_samples; ++i) {
        const double x = i < plan.grid_points
                             ? dom.a + dom.width() * (static_cast<double>(i) / (plan.grid_points - 1))
                             : rng.next_in(dom.a, dom.b);
        const double v = f(x);
        ++p.evaluations;
        if (!std::isnan(v) && v < 0.0 && !neg) {
            neg = true;
            where = x;
        }
    }
    if (neg) {
        p.ok = false;
        if (!p.note.empty()) p.note += "; ";
        p.note += label + " negative at x = " + fmt(where);
    }
    return p;
}

void apply_precheck(TheoremReport& report, const Precheck& p) {
    report.precondition_ok = p.ok;
    report.precondition_note = p.note;
    report.evaluations += p.evaluations;
}

void finish(TheoremReport& report) {
    report.margin = report.rhs - report.lhs;
    report.status =
        classify_margin(report.margin, report.lhs, report.rhs, report.lhs_error, report.rhs_error);
}

QuadResult integrate_mu_product(const FunctionSpec& f, const FunctionSpec& g, double tol) {
    const Interval dom = f.domain();
    auto integrand = [&](double x) {
        const double fx = f(x);
        const double gx = g(x);
        if (std::isnan(fx) || std::isnan(gx))
            throw UndefinedEvaluation(x, "product integrand is undefined at x = " + fmt(x));
        return weight_mu(x, dom) * fx * gx;
    };
    return integrate(integrand, dom.a, dom.b, tol);
}

QuadResult integrate_product(const FunctionSpec& f, const FunctionSpec& g, double tol) {
    const Interval dom = f.domain();
    auto integrand = [&](double x) {
        const double fx = f(x);
        const double gx = g(x);
        if (std::isnan(fx) || std::isnan(gx))
            throw UndefinedEvaluation(x, "product integrand is undefined at x = " + fmt(x));
        return fx * gx;
    };
    return integrate(integrand, dom.a, dom.b, tol);
}

void require_same_domain(const FunctionSpec& f, const FunctionSpec& g, const char* where) {
    if (!(f.domain() == g.domain()))
        throw std::invalid_argument(std::string(where) + ": domains must be identical");
}

} // namespace

TheoremStatus classify_margin(double margin, double lhs, double rhs, double lhs_error,
                              double rhs_error) {
    const double band = lhs_error + rhs_error;
    const double slack = 16.0 * std::numeric_limits<double>::epsilon() *
                         (1.0 + std::abs(lhs) + std::abs(rhs));
    if (margin >= -slack) return TheoremStatus::satisfied;
    if (margin < -(band + slack)) return TheoremStatus::violated;
    return TheoremStatus::inconclusive;
}

ProductTerms product_terms(const FunctionSpec& f, const FunctionSpec& g) {
    require_same_domain(f, g, "product_terms");
    const Interval dom = f.domain();
    const double fa = eval_or_throw(f, dom.a), fb = eval_or_throw(f, dom.b);
    const double ga = eval_or_throw(g, dom.a), gb = eval_or_throw(g, dom.b);
    return {fa * ga + fb * gb, fa * gb + fb * ga};
}

TheoremReport verify_hadamard_left(const FunctionSpec& f, double tol) {
    TheoremReport report;
    report.id = TheoremId::hh_left;
    const QuadResult q = integrate(f, tol);
    const double w = f.domain().width();
    report.lhs = eval_or_throw(f, f.domain().midpoint());
    report.rhs = q.value / w;
    report.rhs_error = q.abs_error_estimate / w;
    report.quadrature_converged = q.converged;
    report.evaluations = q.evaluations + 1;
    apply_precheck(report, precheck_mt(f, "f"));
    finish(report);
    return report;
}

TheoremReport verify_hh_right(const FunctionSpec& f, double tol) {
    TheoremReport report;
    report.id = TheoremId::hh_right;
    const QuadResult q = integrate(f, tol);
    const double w = f.domain().width();
    report.lhs = q.value / w;
    report.lhs_error = q.abs_error_estimate / w;
    report.rhs = 0.5 * (eval_or_throw(f, f.domain().a) + eval_or_throw(f, f.domain().b));
    report.quadrature_converged = q.converged;
    report.evaluations = q.evaluations + 2;
    apply_precheck(report, precheck_convex_nonneg(f, "f"));
    finish(report);
    return report;
}

TheoremReport verify_tau_bound(const FunctionSpec& f, double tol) {
    TheoremReport report;
    report.id = TheoremId::tau_bound;
    const QuadResult q = integrate_weighted(f, Weight::tau, tol);
    const double scale = 2.0 / f.domain().width();
    report.lhs = scale * q.value;
    report.lhs_error = scale * q.abs_error_estimate;
    report.rhs = 0.5 * (eval_or_throw(f, f.domain().a) + eval_or_throw(f, f.domain().b));
    report.quadrature_converged = q.converged;
    report.evaluations = q.evaluations + 2;
    apply_precheck(report, precheck_mt(f, "f"));
    finish(report);
    return report;
}

TheoremReport verify_midpoint_pi(const FunctionSpec& f, double) {
    TheoremReport report;
    report.id = TheoremId::midpoint_pi;
    report.lhs = 0.5 * std::numbers::pi * eval_or_throw(f, f.domain().midpoint());
    report.rhs = eval_or_throw(f, f.domain().a) + eval_or_throw(f, f.domain().b);
    report.evaluations = 3;
    apply_precheck(report, precheck_mt(f, "f"));
    finish(report);
    return report;
}

TheoremReport verify_product_mu(const FunctionSpec& f, const FunctionSpec& g, double tol) {
    require_same_domain(f, g, "verify_product_mu");
    TheoremReport report;
    report.id = TheoremId::product_mu;
    const QuadResult q = integrate_mu_product(f, g, tol);
    const double w = f.domain().width();
    report.lhs = q.value / w;
    report.lhs_error = q.abs_error_estimate / w;
    const ProductTerms terms = product_terms(f, g);
    report.rhs = terms.M / 12.0 + terms.N / 24.0;
    report.quadrature_converged = q.converged;
    report.evaluations = q.evaluations + 4;
    Precheck p = precheck_mt(f, "f");
    const Precheck pg = precheck_mt(g, "g");
    p.ok = p.ok && pg.ok;
    if (!pg.note.empty()) p.note += (p.note.empty() ? "" : "; ") + pg.note;
    p.evaluations += pg.evaluations;
    apply_precheck(report, p);
    finish(report);
    return report;
}

TheoremReport verify_so_product(const FunctionSpec& f, const FunctionSpec& g,
                                const SamplePlan& plan, double tol) {
    require_same_domain(f, g, "verify_so_product");
    const Verdict so = check_similarly_ordered(f, g, plan);
    if (so.status != CheckStatus::holds_on_samples) {
        const Witness& w = *so.witness;
        if (so.status == CheckStatus::undefined_encountered)
            throw PreconditionError("verify_so_product: undefined evaluation at x = " + fmt(w.x),
                                    w);
        throw PreconditionError("verify_so_product: functions are not similarly ordered, witness (x=" +
                                    fmt(w.x) + ", y=" + fmt(w.y) + ") with margin " + fmt(w.margin),
                                w);
    }

    TheoremReport report;
    report.id = TheoremId::so_product;
    const QuadResult q = integrate_mu_product(f, g, tol);
    const double w = f.domain().width();
    report.lhs = q.value / w;
    report.lhs_error = q.abs_error_estimate / w;
    const ProductTerms terms = product_terms(f, g);
    report.rhs = terms.M / 8.0;
    report.quadrature_converged = q.converged;
    report.evaluations = so.evaluations + q.evaluations + 4;
    Precheck p = precheck_mt(f, "f");
    const Precheck pg = precheck_mt(g, "g");
    p.ok = p.ok && pg.ok;
    if (!pg.note.empty()) p.note += (p.note.empty() ? "" : "; ") + pg.note;
    p.evaluations += pg.evaluations;
    apply_precheck(report, p);
    finish(report);
    return report;
}

TheoremReport verify_pachpatte(const FunctionSpec& f, const FunctionSpec& g, double tol) {
    require_same_domain(f, g, "verify_pachpatte");
    TheoremReport report;
    report.id = TheoremId::pachpatte;
    const QuadResult q = integrate_product(f, g, tol);
    const double w = f.domain().width();
    report.lhs = q.value / w;
    report.lhs_error = q.abs_error_estimate / w;
    const ProductTerms terms = product_terms(f, g);
    report.rhs = terms.M / 3.0 + terms.N / 6.0;
    report.quadrature_converged = q.converged;
    report.evaluations = q.evaluations + 4;
    Precheck p = precheck_convex_nonneg(f, "f");
    const Precheck pg = precheck_convex_nonneg(g, "g");
    p.ok = p.ok && pg.ok;
    if (!pg.note.empty()) p.note += (p.note.empty() ? "" : "; ") + pg.note;
    p.evaluations += pg.evaluations;
    apply_precheck(report, p);
    finish(report);
    return report;
}

TheoremReport verify_pachpatte_midpoint(const FunctionSpec& f, const FunctionSpec& g, double tol) {
    require_same_domain(f, g, "verify_pachpatte_midpoint");
    TheoremReport report;
    report.id = TheoremId::pachpatte_midpoint;
    const double m = f.domain().midpoint();
    report.lhs = 2.0 * eval_or_throw(f, m) * eval_or_throw(g, m);
    const QuadResult q = integrate_product(f, g, tol);
    const double w = f.domain().width();
    const ProductTerms terms = product_terms(f, g);
    report.rhs = q.value / w + terms.M / 6.0 + terms.N / 3.0;
    report.rhs_error = q.abs_error_estimate / w;
    report.quadrature_converged = q.converged;
    report.evaluations = q.evaluations + 6;
    Precheck p = precheck_convex_nonneg(f, "f");
    const Precheck pg = precheck_convex_nonneg(g, "g");
    p.ok = p.ok && pg.ok;
    if (!pg.note.empty()) p.note += (p.note.empty() ? "" : "; ") + pg.note;
    p.evaluations += pg.evaluations;
    apply_precheck(report, p);
    finish(report);
    return report;
}

std::pair<TheoremReport, TheoremReport> verify_classical_hh(const FunctionSpec& f, double tol) {
    const QuadResult q = integrate(f, tol);
    const Interval dom = f.domain();
    const double w = dom.width();
    const double mean = q.value / w;
    const double mean_err = q.abs_error_estimate / w;
    const Precheck p = precheck_convex_nonneg(f, "f");

    TheoremReport left;
    left.id = TheoremId::hh_left;
    left.lhs = eval_or_throw(f, dom.midpoint());
    left.rhs = mean;
    left.rhs_error = mean_err;
    left.quadrature_converged = q.converged;
    left.evaluations = q.evaluations + 1;
    apply_precheck(left, p);
    finish(left);

    TheoremReport right;
    right.id = TheoremId::hh_right;
    right.lhs = mean;
    right.lhs_error = mean_err;
    right.rhs = 0.5 * (eval_or_throw(f, dom.a) + eval_or_throw(f, dom.b));
    right.quadrature_converged = q.converged;
    right.evaluations = q.evaluations + 2;
    apply_precheck(right, p);
    finish(right);

    return {left, right};
}

const char* theorem_id_name(TheoremId id) {
    switch (id) {
    case TheoremId::hh_left: return "hh_left";
    case TheoremId::hh_right: return "hh_right";
    case TheoremId::tau_bound: return "tau_bound";
    case TheoremId::midpoint_pi: return "midpoint_pi";
    case TheoremId::product_mu: return "product_mu";
    case TheoremId::so_product: return "so_product";
    case TheoremId::pachpatte: return "pachpatte";
    case TheoremId::pachpatte_midpoint: return "pachpatte_midpoint";
    }
    return "?";
}

const char* theorem_status_name(TheoremStatus status) {
    switch (status) {
    case TheoremStatus::satisfied: return "satisfied";
    case TheoremStatus::violated: return "violated";
    case TheoremStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

} // namespace mtc
