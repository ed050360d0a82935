#include "mtc/quad.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <queue>
#include <vector>

namespace mtc {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK dqk15).
// Positive abscissae; even entries are Kronrod-only, odd entries plus the
// center are the embedded Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.9914553711208126392068546975263285, 0.9491079123427585245261896840478513,
    0.8648644233597690727897127886409262, 0.7415311855993944398638647732807884,
    0.5860872354676911302941448382587296, 0.4058451513773971669066064120769615,
    0.2077849550078984676006894037732449, 0.0,
};
constexpr std::array<double, 8> kWgk = {
    0.0229353220105292249637320080589695, 0.0630920926299785532907006631892042,
    0.1047900103222501838398763225415180, 0.1406532597155259187451895905102379,
    0.1690047266392679028265834265985503, 0.1903505780647854099132564024210137,
    0.2044329400752988924141619992346491, 0.2094821410847278280129991748917143,
};
constexpr std::array<double, 4> kWg = {
    0.1294849661688696932706114326790820, 0.2797053914892766679014677714237796,
    0.3818300505051189449503697754889751, 0.4179591836734693877551020408163265,
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct Rule {
    double value;
    double err;
};

template <class F>
double probe(const F& f, double x, long long& evals) {
    ++evals;
    const double v = f(x);
    if (!std::isfinite(v))
        throw UndefinedEvaluation(x, "integrand is undefined at x = " + fmt(x));
    return v;
}

template <class F>
Rule gk15(const F& f, double a, double b, long long& evals) {
    const double h = 0.5 * (b - a);
    const double m = 0.5 * (a + b);
    const double fc = probe(f, m, evals);
    double resk = kWgk[7] * fc;
    double resg = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        const double f1 = probe(f, m - dx, evals);
        const double f2 = probe(f, m + dx, evals);
        resk += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
    }
    return {resk * h, std::abs((resk - resg) * h)};
}

struct Segment {
    double a, b;
    double value, err;
};

struct Neumaier {
    double sum = 0.0, comp = 0.0;

    void add(double v) {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }

    double total() const { return sum + comp; }
};

} // namespace

double weight_tau(double x, const Interval& dom) {
    const double p = (dom.b - x) * (x - dom.a);
    return std::sqrt(p < 0.0 ? 0.0 : p) / dom.width();
}

double weight_mu(double x, const Interval& dom) {
    const double w = dom.width();
    return (dom.b - x) * (x - dom.a) / (w * w);
}

QuadResult integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    if (!(std::isfinite(a) && std::isfinite(b) && a < b))
        throw std::invalid_argument("integrate: bad interval");
    if (!(tol > 0.0)) throw std::invalid_argument("integrate: tolerance must be positive");

    long long evals = 0;
    std::vector<Segment> segs;
    segs.reserve(64);
    {
        const Rule r = gk15(f, a, b, evals);
        segs.push_back({a, b, r.value, r.err});
    }

    // max-heap on the error estimate; the segment index is unique, so pops
    // are deterministic even on ties
    std::priority_queue<std::pair<double, std::size_t>> worst;
    worst.emplace(segs[0].err, 0);
    double total_err = segs[0].err;

    while (total_err > tol && segs.size() < static_cast<std::size_t>(kSubdivisionBudget) &&
           !worst.empty()) {
        const std::size_t idx = worst.top().second;
        worst.pop();
        const Segment s = segs[idx];
        const double mid = 0.5 * (s.a + s.b);
        if (!(mid > s.a && mid < s.b)) continue; // interval at floating-point resolution
        const Rule left = gk15(f, s.a, mid, evals);
        const Rule right = gk15(f, mid, s.b, evals);
        total_err += left.err + right.err - s.err;
        segs[idx] = {s.a, mid, left.value, left.err};
        worst.emplace(left.err, idx);
        segs.push_back({mid, s.b, right.value, right.err});
        worst.emplace(right.err, segs.size() - 1);
    }

    // order-independent merge: sort by left endpoint, compensated sums
    std::vector<std::size_t> order(segs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return segs[i].a < segs[j].a; });
    Neumaier value, err;
    for (std::size_t i : order) {
        value.add(segs[i].value);
        err.add(segs[i].err);
    }

    QuadResult out;
    out.value = value.total();
    out.abs_error_estimate = err.total();
    out.evaluations = evals;
    out.converged = out.abs_error_estimate <= tol;
    return out;
}

QuadResult integrate(const FunctionSpec& f, double tol) {
    return integrate([&f](double x) { return f(x); }, f.domain().a, f.domain().b, tol);
}

namespace {

// integral_a^b tau(x) f(x) dx = (h/2) * integral_0^pi sin^2(theta) f(m + h cos(theta)) dtheta
// with m the midpoint and h the half-width: (b-x)(x-a) = h^2 sin^2(theta).
QuadResult integrate_tau_weighted(const FunctionSpec& f, double tol) {
    const Interval dom = f.domain();
    const double m = dom.midpoint();
    const double h = 0.5 * dom.width();
    const double scale = 0.5 * h;
    auto integrand = [&](double theta) {
        const double s = std::sin(theta);
        const double x = m + h * std::cos(theta);
        const double fx = f(x);
        if (std::isnan(fx))
            throw UndefinedEvaluation(x, "integrand is undefined at x = " + fmt(x));
        return s * s * fx;
    };
    QuadResult r = integrate(integrand, 0.0, std::numbers::pi, tol / scale);
    r.value *= scale;
    r.abs_error_estimate *= scale;
    return r;
}

} // namespace

QuadResult integrate_weighted(const FunctionSpec& f, Weight w, double tol) {
    const Interval dom = f.domain();
    switch (w) {
    case Weight::none:
        return integrate(f, tol);
    case Weight::mu:
        return integrate([&](double x) { return weight_mu(x, dom) * f(x); }, dom.a, dom.b, tol);
    case Weight::sqrt_t_one_minus_t:
        if (!(dom.a == 0.0 && dom.b == 1.0))
            throw std::invalid_argument(
                "integrate_weighted: the sqrt(t(1-t)) weight requires the domain [0, 1]");
        return integrate_tau_weighted(f, tol); // tau on [0,1] is exactly sqrt(t(1-t))
    case Weight::tau:
        return integrate_tau_weighted(f, tol);
    }
    throw std::invalid_argument("integrate_weighted: unknown weight");
}

double tau_substitution_check(const FunctionSpec& f, double tol) {
    const Interval dom = f.domain();
    // left side: raw adaptive quadrature of the singular t-integrand
    auto lhs_integrand = [&](double t) {
        const double x = t * dom.a + (1.0 - t) * dom.b;
        const double fx = f(x);
        if (std::isnan(fx))
            throw UndefinedEvaluation(x, "integrand is undefined at x = " + fmt(x));
        return std::sqrt(t * (1.0 - t)) * fx;
    };
    const QuadResult lhs = integrate(lhs_integrand, 0.0, 1.0, tol);
    // right side: the substitution route
    const QuadResult rhs = integrate_weighted(f, Weight::tau, tol);
    return std::abs(lhs.value - rhs.value / dom.width());
}

} // namespace mtc
