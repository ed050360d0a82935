// Acceptance suite: exact constants, equality cases, the frozen margin
// table, a class-inclusion sweep over random convex functions, falsification
// regressions, the substitution identity, coefficient algebra, and
// byte-level determinism of the machine output. One PASS/FAIL line per
// criterion; the process fails if any criterion does.

#include <cmath>
#include <cstdio>
#include <cstring>
#include <numbers>
#include <string>
#include <vector>

#include <json.hpp>

#include "mtc/classes.hpp"
#include "mtc/cli.hpp"
#include "mtc/falsify.hpp"
#include "mtc/quad.hpp"
#include "mtc/rng.hpp"
#include "mtc/theorems.hpp"

using namespace mtc;
using json = nlohmann::json;

namespace {

int g_failures = 0;
bool g_ok = true;

void expect(bool ok, const char* what) {
    if (!ok) {
        std::printf("       FAILED: %s\n", what);
        g_ok = false;
    }
}

void expect_close(double got, double want, double tol, const char* what) {
    if (!(std::abs(got - want) <= tol)) {
        std::printf("       FAILED: %s (got %.17g, want %.17g, tol %.3g)\n", what, got, want, tol);
        g_ok = false;
    }
}

void criterion(int n, const char* label) {
    std::printf("[%s] criterion %d: %s\n", g_ok ? "PASS" : "FAIL", n, label);
    if (!g_ok) ++g_failures;
    g_ok = true;
}

FunctionSpec fs(const std::string& src, double a, double b) {
    return FunctionSpec::parse(src, Interval(a, b));
}

SamplePlan acceptance_plan() {
    SamplePlan p;
    p.grid_points = 64;
    p.random_samples = 4096;
    p.seed = 0;
    return p;
}

// Independent oracle for the margin table, computed from Gamma functions
// rather than through the quadrature under test.
double beta_fn(double p, double q) {
    return std::exp(std::lgamma(p) + std::lgamma(q) - std::lgamma(p + q));
}

constexpr double kPi = std::numbers::pi;

void criterion_1_moments() {
    const QuadResult half = integrate_weighted(fs("1", 0, 1), Weight::sqrt_t_one_minus_t, 1e-10);
    expect_close(half.value, kPi / 8.0, 1e-10, "integral sqrt(t(1-t)) = pi/8 (weight route)");
    expect(half.converged, "sqrt(t(1-t)) quadrature converged");

    const QuadResult raw = integrate(fs("sqrt(x*(1-x))", 0, 1), 1e-10);
    expect_close(raw.value, kPi / 8.0, 1e-10, "integral sqrt(t(1-t)) = pi/8 (raw route)");

    expect_close(integrate(fs("x*(1-x)", 0, 1), 1e-10).value, 1.0 / 6.0, 1e-10,
                 "integral t(1-t) = 1/6");
    expect_close(integrate(fs("x^2", 0, 1), 1e-10).value, 1.0 / 3.0, 1e-10,
                 "integral t^2 = 1/3");
    criterion(1, "moment constants pi/8, 1/6, 1/3 to 1e-10");
}

void criterion_2_equalities() {
    const FunctionSpec one = fs("1", 0, 1);
    const FunctionSpec ident = fs("x", 0, 1);

    expect(std::abs(verify_hadamard_left(one).margin) <= 1e-12, "hh_left(1) margin 0");
    expect(std::abs(verify_pachpatte(one, one).margin) <= 1e-12, "pachpatte(1,1) margin 0");
    expect(std::abs(verify_pachpatte_midpoint(one, one).margin) <= 1e-12,
           "pachpatte_midpoint(1,1) margin 0");
    expect(std::abs(verify_pachpatte(ident, ident).margin) <= 1e-12, "pachpatte(x,x) margin 0");
    expect(std::abs(verify_pachpatte_midpoint(ident, ident).margin) <= 1e-12,
           "pachpatte_midpoint(x,x) margin 0");
    criterion(2, "equality cases have |margin| <= 1e-12");
}

void criterion_3_margin_table() {
    const FunctionSpec one = fs("1", 0, 1);
    const FunctionSpec ident = fs("x", 0, 1);
    const FunctionSpec square = fs("x^2", 0, 1);
    const FunctionSpec mirror = fs("1-x", 0, 1);

    {
        const TheoremReport r = verify_tau_bound(one);
        expect_close(r.lhs, kPi / 4.0, 1e-8, "tau_bound(1) lhs = pi/4");
        expect_close(r.lhs, 2.0 * beta_fn(1.5, 1.5), 1e-8, "tau_bound(1) lhs vs beta oracle");
        expect_close(r.rhs, 1.0, 1e-8, "tau_bound(1) rhs = 1");
    }
    {
        const TheoremReport r = verify_tau_bound(square);
        expect_close(r.lhs, 5.0 * kPi / 64.0, 1e-8, "tau_bound(x^2) lhs = 5pi/64");
        expect_close(r.lhs, 2.0 * beta_fn(3.5, 1.5), 1e-8, "tau_bound(x^2) lhs vs beta oracle");
        expect_close(r.rhs, 0.5, 1e-8, "tau_bound(x^2) rhs = 1/2");
    }
    {
        const TheoremReport r = verify_midpoint_pi(one);
        expect_close(r.lhs, kPi / 2.0, 1e-8, "midpoint_pi(1) lhs = pi/2");
        expect_close(r.rhs, 2.0, 1e-8, "midpoint_pi(1) rhs = 2");
    }
    {
        const TheoremReport r = verify_product_mu(ident, ident);
        expect_close(r.lhs, 0.05, 1e-8, "product_mu(x,x) lhs = 1/20");
        expect_close(r.rhs, 1.0 / 12.0, 1e-8, "product_mu(x,x) rhs = 1/12");
    }
    {
        const TheoremReport r = verify_product_mu(ident, mirror);
        expect_close(r.lhs, 1.0 / 30.0, 1e-8, "product_mu(x,1-x) lhs = 1/30");
        expect_close(r.lhs, beta_fn(3.0, 3.0), 1e-8, "product_mu(x,1-x) lhs vs beta oracle");
        expect_close(r.rhs, 1.0 / 24.0, 1e-8, "product_mu(x,1-x) rhs = 1/24");
    }
    {
        const TheoremReport r = verify_so_product(ident, square, acceptance_plan());
        expect_close(r.lhs, 1.0 / 30.0, 1e-8, "so_product(x,x^2) lhs = 1/30");
        expect_close(r.rhs, 0.125, 1e-8, "so_product(x,x^2) rhs = 1/8");
    }
    criterion(3, "margin table reproduced to 1e-8 against beta-function closed forms");
}

std::string random_convex_source(SplitMix64& rng, double a, double b) {
    char buf[160];
    if (rng.next_u64() % 2 == 0) {
        // positive quadratic q2 (x - c)^2 + q0
        const double q2 = rng.next_in(0.1, 2.0);
        const double c = rng.next_in(a - 0.5, b + 0.5);
        const double q0 = rng.next_in(0.1, 2.0);
        std::snprintf(buf, sizeof buf, "%.17g*(x-%.17g)^2+%.17g", q2, c, q0);
    } else {
        // sum of two scaled exponentials
        const double s1 = rng.next_in(0.1, 1.5);
        const double k1 = rng.next_in(-2.0, 2.0);
        const double s2 = rng.next_in(0.1, 1.5);
        const double k2 = rng.next_in(-2.0, 2.0);
        std::snprintf(buf, sizeof buf, "%.17g*exp(%.17g*x)+%.17g*exp(%.17g*x)", s1, k1, s2, k2);
    }
    return buf;
}

void criterion_4_class_inclusion() {
    const SamplePlan plan = acceptance_plan();
    SplitMix64 rng(42);
    int functions = 0;
    for (int iter = 0; iter < 50 && g_ok; ++iter) {
        const double a = rng.next_in(-3.0, 2.0);
        const double b = a + rng.next_in(0.4, 2.2);
        const FunctionSpec f = fs(random_convex_source(rng, a, b), a, b);
        const FunctionSpec g = fs(random_convex_source(rng, a, b), a, b);

        for (const FunctionSpec* fn : {&f, &g}) {
            ++functions;
            expect(check_mt_membership(*fn, plan).status == CheckStatus::holds_on_samples,
                   ("mt membership holds for " + fn->source()).c_str());
            for (const TheoremReport& r :
                 {verify_hadamard_left(*fn), verify_tau_bound(*fn), verify_midpoint_pi(*fn)}) {
                expect(r.status == TheoremStatus::satisfied,
                       (std::string(theorem_id_name(r.id)) + " satisfied for " + fn->source()).c_str());
                expect(r.margin >= -2e-10,
                       (std::string(theorem_id_name(r.id)) + " margin >= -2e-10 for " + fn->source())
                           .c_str());
            }
        }
        const TheoremReport pm = verify_product_mu(f, g);
        expect(pm.status == TheoremStatus::satisfied, "product_mu satisfied for the pair");
        expect(pm.margin >= -2e-10, "product_mu margin >= -2e-10 for the pair");
    }
    expect(functions >= 100, ">= 100 random functions exercised");
    criterion(4, "class-inclusion sweep: membership holds, theorems 3-5 satisfied");
}

void criterion_5_falsification() {
    const cli::RunResult hit =
        cli::run({"falsify", "--class", "mt", "--fn", "sqrt(x)", "--on", "0", "1", "--budget",
                  "1000", "--seed", "0", "--format", "machine"});
    expect(hit.exit_code == 1, "falsify sqrt(x) exits 1");
    const json doc = json::parse(hit.out);
    expect(!doc[0]["witness"].is_null(), "falsify sqrt(x) returns a witness");
    if (!doc[0]["witness"].is_null())
        expect(doc[0]["witness"]["margin"].get<double>() >= 0.20,
               "falsify sqrt(x) witness margin >= 0.20");

    const cli::RunResult miss =
        cli::run({"falsify", "--class", "mt", "--fn", "x^2", "--on", "0", "1", "--budget", "10000",
                  "--format", "machine"});
    expect(miss.exit_code == 0, "falsify x^2 exits 0");
    expect(json::parse(miss.out)[0]["witness"].is_null(), "falsify x^2 returns no witness");
    criterion(5, "falsification regression on sqrt(x) and x^2");
}

void criterion_6_substitution() {
    for (const auto& [a, b] : {std::pair{0.0, 1.0}, std::pair{3.0, 5.0}}) {
        for (const char* src : {"1", "x", "x^2", "exp(x)"}) {
            const double diff = tau_substitution_check(fs(src, a, b), 1e-10);
            char what[96];
            std::snprintf(what, sizeof what, "substitution identity for %s on [%g, %g]", src, a, b);
            expect(diff <= 1e-9, what);
        }
    }
    criterion(6, "tau substitution identity <= 1e-9 across the corpus");
}

void criterion_7_coefficients() {
    const double ulp = std::nextafter(0.25, 1.0) - 0.25;
    const double lo = 1e-6, hi = 1.0 - 1e-6;
    bool product_ok = true, sum_ok = true, dom_ok = true;
    for (int i = 0; i < 10000; ++i) {
        const double t = lo + (hi - lo) * (static_cast<double>(i) / 9999.0);
        const MtCoefficients c = mt_coefficients(t);
        product_ok = product_ok && std::abs(c.lam * c.mu - 0.25) <= 4.0 * ulp;
        sum_ok = sum_ok && c.lam + c.mu >= 1.0;
        dom_ok = dom_ok && c.lam >= t && c.mu >= 1.0 - t;
    }
    expect(product_ok, "lam * mu = 1/4 within 4 ulps on 10^4 grid");
    expect(sum_ok, "lam + mu >= 1 on 10^4 grid");
    expect(dom_ok, "lam >= t and mu >= 1-t on 10^4 grid");

    // golden-section minimum of lam + mu sits at t = 1/2
    auto sum_at = [](double t) {
        const MtCoefficients c = mt_coefficients(t);
        return c.lam + c.mu;
    };
    const double invphi = 0.61803398874989485;
    double l = lo, h = hi;
    double c1 = h - invphi * (h - l), c2 = l + invphi * (h - l);
    double f1 = sum_at(c1), f2 = sum_at(c2);
    for (int i = 0; i < 200 && (h - l) > 1e-10; ++i) {
        if (f1 < f2) {
            h = c2;
            c2 = c1;
            f2 = f1;
            c1 = h - invphi * (h - l);
            f1 = sum_at(c1);
        } else {
            l = c1;
            c1 = c2;
            f1 = f2;
            c2 = l + invphi * (h - l);
            f2 = sum_at(c2);
        }
    }
    const double argmin = 0.5 * (l + h);
    expect_close(argmin, 0.5, 1e-6, "argmin of lam + mu at t = 1/2");
    criterion(7, "coefficient algebra on 10^4 samples plus argmin at 1/2");
}

std::string capture(const std::string& command) {
    std::string out;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return out;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    pclose(pipe);
    return out;
}

void criterion_8_determinism() {
    const std::vector<std::string> args = {"demo", "--format", "machine", "--seed", "7"};
    const cli::RunResult a = cli::run(args);
    const cli::RunResult b = cli::run(args);
    expect(a.exit_code == 0, "demo exits 0");
    expect(!a.out.empty(), "demo produces output");
    expect(a.out == b.out, "two in-process demo runs are byte-identical");

    // the installed binary, twice, through a real process boundary
    const std::string command = std::string(MTCONVEX_BIN) + " demo --format machine --seed 7";
    const std::string first = capture(command);
    const std::string second = capture(command);
    expect(!first.empty(), "demo binary produces output");
    expect(first == second, "two demo processes are byte-identical");
    expect(first == a.out, "process output matches the in-process run");
    criterion(8, "demo --format machine --seed 7 is deterministic");
}

} // namespace

int main() {
    criterion_1_moments();
    criterion_2_equalities();
    criterion_3_margin_table();
    criterion_4_class_inclusion();
    criterion_5_falsification();
    criterion_6_substitution();
    criterion_7_coefficients();
    criterion_8_determinism();

    if (g_failures != 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
