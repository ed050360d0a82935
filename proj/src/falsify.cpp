#include "mtc/falsify.hpp"

#include <array>
#include <cmath>
#include <vector>

#include "mtc/rng.hpp"
#include "scan_detail.hpp"

namespace mtc {

namespace {

// Violation margin of the predicate at a concrete point; NaN when any
// evaluation is undefined. For nonnegativity witnesses of the membership
// predicate the point is carried in x (= y).
double margin_at(PredicateId pred, WitnessKind kind, const FunctionSpec& f, const FunctionSpec* g,
                 double x, double y, double t) {
    if (kind == WitnessKind::nonnegativity) {
        const double v = f(x);
        return std::isnan(v) ? v : -v;
    }
    switch (pred) {
    case PredicateId::mt: return mt_sides(f.expr(), x, y, t).violation();
    case PredicateId::convex: return convexity_sides(f.expr(), x, y, t).violation();
    case PredicateId::midpoint: return midpoint_sides(f.expr(), x, y).violation();
    case PredicateId::so: return similar_order_sides(f.expr(), g->expr(), x, y).violation();
    }
    return std::numeric_limits<double>::quiet_NaN();
}

constexpr double kInvPhi = 0.61803398874989485; // (sqrt(5) - 1) / 2

// Golden-section maximization on [lo, hi]; NaN evaluations lose every
// comparison, so the search simply drifts away from undefined regions.
template <class F>
double golden_max(const F& fn, double lo, double hi) {
    double c = hi - kInvPhi * (hi - lo);
    double d = lo + kInvPhi * (hi - lo);
    double fc = fn(c);
    double fd = fn(d);
    for (int it = 0; it < 200 && (hi - lo) > 1e-13 * (1.0 + std::abs(lo) + std::abs(hi)); ++it) {
        if (!(fc < fd)) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - kInvPhi * (hi - lo);
            fc = fn(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + kInvPhi * (hi - lo);
            fd = fn(d);
        }
    }
    return 0.5 * (lo + hi);
}

int grid_side(long long evals, bool triple) {
    const long long half = evals / 2;
    int m = triple ? static_cast<int>(std::cbrt(static_cast<double>(half)))
                   : static_cast<int>(std::sqrt(static_cast<double>(half)));
    while (triple ? static_cast<long long>(m + 1) * (m + 1) * (m + 1) <= half
                  : static_cast<long long>(m + 1) * (m + 1) <= half)
        ++m;
    return m < 3 ? 3 : m;
}

} // namespace

void SearchBudget::validate() const {
    if (coarse_evals < 27)
        throw std::invalid_argument("SearchBudget: coarse_evals must be >= 27");
    if (refine_iters < 0)
        throw std::invalid_argument("SearchBudget: refine_iters must be >= 0");
}

bool predicate_needs_second_function(PredicateId pred) { return pred == PredicateId::so; }

bool predicate_uses_t(PredicateId pred) {
    return pred == PredicateId::mt || pred == PredicateId::convex;
}

Witness refine_witness(PredicateId pred, const FunctionSpec& f, const FunctionSpec* g,
                       const Witness& witness, int iters, double t_margin) {
    if (!(witness.margin > 0.0))
        throw std::invalid_argument("refine_witness: witness must have a strictly positive margin");
    if (predicate_needs_second_function(pred) && g == nullptr)
        throw std::invalid_argument("refine_witness: predicate needs a second function");

    const Interval dom = f.domain();
    const bool with_t = predicate_uses_t(pred) && witness.kind == WitnessKind::inequality;
    const double t_lo = pred == PredicateId::mt ? t_margin : 0.0;
    const double t_hi = pred == PredicateId::mt ? 1.0 - t_margin : 1.0;

    double x = witness.x;
    double y = witness.y;
    double t = witness.t.value_or(0.5);
    double best = margin_at(pred, witness.kind, f, g, x, y, t);
    if (std::isnan(best) || best <= 0.0) return witness; // nothing sound to climb from

    const int coords = witness.kind == WitnessKind::nonnegativity ? 1 : (with_t ? 3 : 2);
    for (int iter = 0; iter < iters; ++iter) {
        for (int sweep = 0; sweep < 3; ++sweep) {
            for (int coord = 0; coord < coords; ++coord) {
                const double lo = coord == 2 ? t_lo : dom.a;
                const double hi = coord == 2 ? t_hi : dom.b;
                auto slice = [&](double s) {
                    const double sx = coord == 0 ? s : x;
                    const double sy = coord == 1 ? s : y;
                    const double st = coord == 2 ? s : t;
                    return margin_at(pred, witness.kind, f, g, sx,
                                     witness.kind == WitnessKind::nonnegativity ? sx : sy, st);
                };
                // interior golden-section optimum plus the two clamp ends
                for (double s : {golden_max(slice, lo, hi), lo, hi}) {
                    const double m = slice(s);
                    if (!std::isnan(m) && m > best) {
                        best = m;
                        if (coord == 0) x = s;
                        else if (coord == 1) y = s;
                        else t = s;
                        if (witness.kind == WitnessKind::nonnegativity) y = x;
                    }
                }
            }
        }
    }

    Witness out = witness;
    out.x = x;
    out.y = y;
    if (witness.t) out.t = t;
    out.margin = best;
    return out;
}

std::optional<Witness> falsify_pointwise(PredicateId pred, const FunctionSpec& f,
                                         const FunctionSpec* g, const SearchBudget& budget,
                                         double t_margin, Exec exec) {
    budget.validate();
    if (predicate_needs_second_function(pred)) {
        if (g == nullptr)
            throw std::invalid_argument("falsify_pointwise: predicate needs a second function");
        if (!(f.domain() == g->domain()))
            throw std::invalid_argument("falsify_pointwise: domains must be identical");
    }

    const Interval dom = f.domain();
    const bool with_t = predicate_uses_t(pred);
    const double t_lo = pred == PredicateId::mt ? t_margin : 0.0;
    const double t_hi = pred == PredicateId::mt ? 1.0 - t_margin : 1.0;

    const int m = grid_side(budget.coarse_evals, with_t);
    const long long grid_count = with_t ? static_cast<long long>(m) * m * m
                                        : static_cast<long long>(m) * m;
    const long long rand_count = budget.coarse_evals - grid_count;

    std::vector<std::array<double, 3>> random;
    random.reserve(static_cast<std::size_t>(rand_count));
    SplitMix64 rng(budget.seed);
    for (long long i = 0; i < rand_count; ++i) {
        const double x = rng.next_in(dom.a, dom.b);
        const double y = rng.next_in(dom.a, dom.b);
        const double t = with_t ? rng.next_in(t_lo, t_hi) : 0.0;
        random.push_back({x, y, t});
    }

    auto grid_coord = [&](int i) {
        if (i == 0) return dom.a;
        if (i == m - 1) return dom.b;
        return dom.a + dom.width() * (static_cast<double>(i) / static_cast<double>(m - 1));
    };
    auto t_coord = [&](int i) {
        if (i == 0) return t_lo;
        if (i == m - 1) return t_hi;
        return t_lo + (t_hi - t_lo) * (static_cast<double>(i) / static_cast<double>(m - 1));
    };

    const std::size_t n = static_cast<std::size_t>(grid_count + rand_count);
    auto sample_at = [&](std::size_t idx) {
        detail::Sample s;
        s.has_t = with_t;
        if (idx < static_cast<std::size_t>(grid_count)) {
            if (with_t) {
                s.x = grid_coord(static_cast<int>(idx / (static_cast<std::size_t>(m) * m)));
                s.y = grid_coord(static_cast<int>((idx / m) % m));
                s.t = t_coord(static_cast<int>(idx % m));
            } else {
                s.x = grid_coord(static_cast<int>(idx / m));
                s.y = grid_coord(static_cast<int>(idx % m));
            }
        } else {
            const auto& r = random[idx - static_cast<std::size_t>(grid_count)];
            s.x = r[0];
            s.y = r[1];
            s.t = r[2];
        }
        return s;
    };

    auto kernel = [&](const detail::Sample& s) {
        detail::CandidateSet set;
        PointSides sides;
        switch (pred) {
        case PredicateId::mt: sides = mt_sides(f.expr(), s.x, s.y, s.t); break;
        case PredicateId::convex: sides = convexity_sides(f.expr(), s.x, s.y, s.t); break;
        case PredicateId::midpoint: sides = midpoint_sides(f.expr(), s.x, s.y); break;
        case PredicateId::so: sides = similar_order_sides(f.expr(), g->expr(), s.x, s.y); break;
        }
        if (!sides.defined()) {
            for (double p : {s.x, s.y}) {
                if (std::isnan(f(p)) || (pred == PredicateId::so && std::isnan((*g)(p)))) {
                    set.mark_undefined(p);
                    return set;
                }
            }
            set.mark_undefined(with_t ? s.t * s.x + (1.0 - s.t) * s.y : 0.5 * (s.x + s.y));
            return set;
        }
        detail::Candidate c;
        c.kind = WitnessKind::inequality;
        c.x = s.x;
        c.y = s.y;
        c.t = s.t;
        c.has_t = s.has_t;
        c.lhs = sides.lhs;
        c.rhs = sides.rhs;
        set.add(c);
        if (pred == PredicateId::mt) {
            for (double p : {s.x, s.y, s.t * s.x + (1.0 - s.t) * s.y}) {
                const double v = f(p);
                if (v < 0.0) {
                    detail::Candidate nn;
                    nn.kind = WitnessKind::nonnegativity;
                    nn.x = p;
                    nn.y = p;
                    nn.lhs = -v;
                    nn.rhs = 0.0;
                    set.add(nn);
                }
            }
        }
        return set;
    };

    const detail::ScanOutcome out = detail::scan(n, sample_at, kernel, exec);

    if (out.any_undefined) {
        Witness w;
        w.kind = WitnessKind::domain;
        w.x = out.undefined_point;
        w.y = out.undefined_point;
        w.margin = 0.0;
        return w;
    }
    if (!out.best_violation.present) return std::nullopt;

    const detail::Candidate& c = out.best_violation.cand;
    Witness w;
    w.kind = c.kind;
    w.x = c.x;
    w.y = c.y;
    if (c.has_t) w.t = c.t;
    w.margin = c.violation();
    if (budget.refine_iters > 0) w = refine_witness(pred, f, g, w, budget.refine_iters, t_margin);
    return w;
}

} // namespace mtc
