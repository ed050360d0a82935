#include "mtc/classes.hpp"

#include <cstdio>
#include <string>
#include <vector>

#include "mtc/rng.hpp"
#include "scan_detail.hpp"

namespace mtc {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double grid_coord(double lo, double hi, int i, int n) {
    if (i == 0) return lo;
    if (i == n - 1) return hi;
    return lo + (hi - lo) * (static_cast<double>(i) / static_cast<double>(n - 1));
}

/// Grid of g^3 triples (endpoints included on every axis) followed by seeded
/// random triples, indexable without materializing the grid.
struct TripleFamily {
    double x_lo, x_hi;
    double t_lo, t_hi;
    int g;
    std::vector<std::array<double, 3>> random;

    TripleFamily(const Interval& dom, double t_lo_, double t_hi_, int grid, int n_random,
                 std::uint64_t seed)
        : x_lo(dom.a), x_hi(dom.b), t_lo(t_lo_), t_hi(t_hi_), g(grid) {
        random.reserve(static_cast<std::size_t>(n_random));
        SplitMix64 rng(seed);
        for (int i = 0; i < n_random; ++i) {
            const double x = rng.next_in(x_lo, x_hi);
            const double y = rng.next_in(x_lo, x_hi);
            const double t = rng.next_in(t_lo, t_hi);
            random.push_back({x, y, t});
        }
    }

    std::size_t size() const {
        return static_cast<std::size_t>(g) * g * g + random.size();
    }

    detail::Sample operator[](std::size_t idx) const {
        const std::size_t cube = static_cast<std::size_t>(g) * g * g;
        detail::Sample s;
        s.has_t = true;
        if (idx < cube) {
            const int i = static_cast<int>(idx / (static_cast<std::size_t>(g) * g));
            const int j = static_cast<int>((idx / g) % g);
            const int k = static_cast<int>(idx % g);
            s.x = grid_coord(x_lo, x_hi, i, g);
            s.y = grid_coord(x_lo, x_hi, j, g);
            s.t = grid_coord(t_lo, t_hi, k, g);
        } else {
            const auto& r = random[idx - cube];
            s.x = r[0];
            s.y = r[1];
            s.t = r[2];
        }
        return s;
    }
};

struct PairFamily {
    double x_lo, x_hi;
    int g;
    std::vector<std::array<double, 2>> random;

    PairFamily(const Interval& dom, int grid, int n_random, std::uint64_t seed)
        : x_lo(dom.a), x_hi(dom.b), g(grid) {
        random.reserve(static_cast<std::size_t>(n_random));
        SplitMix64 rng(seed);
        for (int i = 0; i < n_random; ++i) {
            const double x = rng.next_in(x_lo, x_hi);
            const double y = rng.next_in(x_lo, x_hi);
            random.push_back({x, y});
        }
    }

    std::size_t size() const { return static_cast<std::size_t>(g) * g + random.size(); }

    detail::Sample operator[](std::size_t idx) const {
        const std::size_t square = static_cast<std::size_t>(g) * g;
        detail::Sample s;
        if (idx < square) {
            s.x = grid_coord(x_lo, x_hi, static_cast<int>(idx / g), g);
            s.y = grid_coord(x_lo, x_hi, static_cast<int>(idx % g), g);
        } else {
            const auto& r = random[idx - square];
            s.x = r[0];
            s.y = r[1];
        }
        return s;
    }
};

detail::Candidate inequality_candidate(const detail::Sample& s, const PointSides& sides) {
    detail::Candidate c;
    c.kind = WitnessKind::inequality;
    c.x = s.x;
    c.y = s.y;
    c.t = s.t;
    c.has_t = s.has_t;
    c.lhs = sides.lhs;
    c.rhs = sides.rhs;
    return c;
}

detail::Candidate nonnegativity_candidate(double point, double value) {
    detail::Candidate c;
    c.kind = WitnessKind::nonnegativity;
    c.x = point;
    c.y = point;
    c.has_t = false;
    c.lhs = -value; // f(point) >= 0 written as -f(point) <= 0
    c.rhs = 0.0;
    return c;
}

Verdict verdict_from(const detail::ScanOutcome& out, long long evals_per_sample) {
    Verdict v;
    v.evaluations = out.samples * evals_per_sample;
    if (out.best_overall.present) {
        const detail::Candidate& c = out.best_overall.cand;
        ExtremeSample e;
        e.x = c.x;
        e.y = c.y;
        if (c.has_t) e.t = c.t;
        e.lhs = c.lhs;
        e.rhs = c.rhs;
        e.margin = c.violation();
        v.extreme = e;
    }
    if (out.any_undefined) {
        v.status = CheckStatus::undefined_encountered;
        Witness w;
        w.kind = WitnessKind::domain;
        w.x = out.undefined_point;
        w.y = out.undefined_point;
        w.margin = 0.0;
        v.witness = w;
        return v;
    }
    if (out.best_violation.present) {
        const detail::Candidate& c = out.best_violation.cand;
        v.status = CheckStatus::fails;
        Witness w;
        w.kind = c.kind;
        w.x = c.x;
        w.y = c.y;
        if (c.has_t) w.t = c.t;
        w.margin = c.violation();
        v.witness = w;
        return v;
    }
    v.status = CheckStatus::holds_on_samples;
    return v;
}

} // namespace

MtCoefficients mt_coefficients(double t) {
    if (!(t > 0.0 && t < 1.0))
        throw std::domain_error("mt_coefficients: t must lie in (0,1), got " + fmt(t));
    const double st = std::sqrt(t);
    const double su = std::sqrt(1.0 - t);
    return {st / (2.0 * su), su / (2.0 * st), t};
}

double amgm_gap(double x, double y) {
    if (!(x >= 0.0 && y >= 0.0))
        throw std::domain_error("amgm_gap: inputs must be nonnegative, got (" + fmt(x) + ", " +
                                fmt(y) + ")");
    const double gap = 0.5 * (x + y) - std::sqrt(x * y);
    return gap < 0.0 ? 0.0 : gap; // sqrt rounding can leave a negative hair at x == y
}

void SamplePlan::validate() const {
    if (grid_points < 3) throw std::invalid_argument("SamplePlan: grid_points must be >= 3");
    if (grid_points > 1000000)
        throw std::invalid_argument("SamplePlan: grid_points must be <= 10^6"); // g^3 must fit
    if (random_samples < 0)
        throw std::invalid_argument("SamplePlan: random_samples must be >= 0");
    if (!(t_margin > 0.0 && t_margin < 0.5))
        throw std::invalid_argument("SamplePlan: t_margin must lie in (0, 1/2)");
}

PointSides mt_sides(const Expr& f, double x, double y, double t) {
    PointSides s;
    const double fx = f.eval_raw(x);
    const double fy = f.eval_raw(y);
    const double z = t * x + (1.0 - t) * y;
    const double fz = f.eval_raw(z);
    if (std::isnan(fx) || std::isnan(fy) || std::isnan(fz)) return s;
    const double st = std::sqrt(t);
    const double su = std::sqrt(1.0 - t);
    s.lhs = fz;
    s.rhs = (st / (2.0 * su)) * fx + (su / (2.0 * st)) * fy;
    return s;
}

PointSides convexity_sides(const Expr& f, double x, double y, double t) {
    PointSides s;
    const double fx = f.eval_raw(x);
    const double fy = f.eval_raw(y);
    const double z = t * x + (1.0 - t) * y;
    const double fz = f.eval_raw(z);
    if (std::isnan(fx) || std::isnan(fy) || std::isnan(fz)) return s;
    s.lhs = fz;
    s.rhs = t * fx + (1.0 - t) * fy;
    return s;
}

PointSides midpoint_sides(const Expr& f, double x, double y) {
    PointSides s;
    const double fx = f.eval_raw(x);
    const double fy = f.eval_raw(y);
    const double fm = f.eval_raw(0.5 * (x + y));
    if (std::isnan(fx) || std::isnan(fy) || std::isnan(fm)) return s;
    s.lhs = fm;
    s.rhs = 0.5 * (fx + fy);
    return s;
}

PointSides similar_order_sides(const Expr& f, const Expr& g, double x, double y) {
    PointSides s;
    const double fx = f.eval_raw(x);
    const double fy = f.eval_raw(y);
    const double gx = g.eval_raw(x);
    const double gy = g.eval_raw(y);
    if (std::isnan(fx) || std::isnan(fy) || std::isnan(gx) || std::isnan(gy)) return s;
    s.lhs = -((fx - fy) * (gx - gy)); // >= 0 requirement written as lhs <= 0
    s.rhs = 0.0;
    return s;
}

Verdict check_convexity(const FunctionSpec& f, const SamplePlan& plan, Exec exec) {
    plan.validate();
    const TripleFamily fam(f.domain(), 0.0, 1.0, plan.grid_points, plan.random_samples, plan.seed);
    const Expr& e = f.expr();
    auto kernel = [&](const detail::Sample& s) {
        detail::CandidateSet set;
        const PointSides sides = convexity_sides(e, s.x, s.y, s.t);
        if (!sides.defined()) {
            // locate the offending point for the report
            const double z = s.t * s.x + (1.0 - s.t) * s.y;
            if (std::isnan(e.eval_raw(s.x)))
                set.mark_undefined(s.x);
            else if (std::isnan(e.eval_raw(s.y)))
                set.mark_undefined(s.y);
            else
                set.mark_undefined(z);
            return set;
        }
        set.add(inequality_candidate(s, sides));
        return set;
    };
    return verdict_from(detail::scan(fam.size(), [&](std::size_t i) { return fam[i]; }, kernel, exec),
                        3);
}

Verdict check_mt_membership(const FunctionSpec& f, const SamplePlan& plan, Exec exec) {
    plan.validate();
    const TripleFamily fam(f.domain(), plan.t_margin, 1.0 - plan.t_margin, plan.grid_points,
                           plan.random_samples, plan.seed);
    const Expr& e = f.expr();
    auto kernel = [&](const detail::Sample& s) {
        detail::CandidateSet set;
        const double fx = e.eval_raw(s.x);
        if (std::isnan(fx)) {
            set.mark_undefined(s.x);
            return set;
        }
        const double fy = e.eval_raw(s.y);
        if (std::isnan(fy)) {
            set.mark_undefined(s.y);
            return set;
        }
        const double z = s.t * s.x + (1.0 - s.t) * s.y;
        const double fz = e.eval_raw(z);
        if (std::isnan(fz)) {
            set.mark_undefined(z);
            return set;
        }
        const double st = std::sqrt(s.t);
        const double su = std::sqrt(1.0 - s.t);
        PointSides sides;
        sides.lhs = fz;
        sides.rhs = (st / (2.0 * su)) * fx + (su / (2.0 * st)) * fy;
        set.add(inequality_candidate(s, sides));
        // membership also requires f >= 0 at every sampled point
        if (fx < 0.0) set.add(nonnegativity_candidate(s.x, fx));
        if (fy < 0.0) set.add(nonnegativity_candidate(s.y, fy));
        if (fz < 0.0) set.add(nonnegativity_candidate(z, fz));
        return set;
    };
    return verdict_from(detail::scan(fam.size(), [&](std::size_t i) { return fam[i]; }, kernel, exec),
                        3);
}

Verdict check_midpoint_convexity(const FunctionSpec& f, const SamplePlan& plan, Exec exec) {
    plan.validate();
    const PairFamily fam(f.domain(), plan.grid_points, plan.random_samples, plan.seed);
    const Expr& e = f.expr();
    auto kernel = [&](const detail::Sample& s) {
        detail::CandidateSet set;
        const PointSides sides = midpoint_sides(e, s.x, s.y);
        if (!sides.defined()) {
            if (std::isnan(e.eval_raw(s.x)))
                set.mark_undefined(s.x);
            else if (std::isnan(e.eval_raw(s.y)))
                set.mark_undefined(s.y);
            else
                set.mark_undefined(0.5 * (s.x + s.y));
            return set;
        }
        set.add(inequality_candidate(s, sides));
        return set;
    };
    return verdict_from(detail::scan(fam.size(), [&](std::size_t i) { return fam[i]; }, kernel, exec),
                        3);
}

Verdict check_similarly_ordered(const FunctionSpec& f, const FunctionSpec& g,
                                const SamplePlan& plan, Exec exec) {
    plan.validate();
    if (!(f.domain() == g.domain()))
        throw std::invalid_argument("check_similarly_ordered: domains must be identical");
    const PairFamily fam(f.domain(), plan.grid_points, plan.random_samples, plan.seed);
    const Expr& ef = f.expr();
    const Expr& eg = g.expr();
    auto kernel = [&](const detail::Sample& s) {
        detail::CandidateSet set;
        const PointSides sides = similar_order_sides(ef, eg, s.x, s.y);
        if (!sides.defined()) {
            for (double p : {s.x, s.y}) {
                if (std::isnan(ef.eval_raw(p)) || std::isnan(eg.eval_raw(p))) {
                    set.mark_undefined(p);
                    return set;
                }
            }
            set.mark_undefined(s.x);
            return set;
        }
        set.add(inequality_candidate(s, sides));
        return set;
    };
    return verdict_from(detail::scan(fam.size(), [&](std::size_t i) { return fam[i]; }, kernel, exec),
                        4);
}

} // namespace mtc
