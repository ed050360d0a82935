#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mtc/falsify.hpp"

using namespace mtc;

namespace {

FunctionSpec fs(const char* src, double a, double b) {
    return FunctionSpec::parse(src, Interval(a, b));
}

SearchBudget budget(long long coarse, std::uint64_t seed = 0, int refine = 8) {
    SearchBudget b;
    b.coarse_evals = coarse;
    b.seed = seed;
    b.refine_iters = refine;
    return b;
}

// the true maximum of the sqrt(x) membership violation on the pair (0, 1)
constexpr double kRootMaxMargin = 0.22509823218728275; // (1 - 2^(-2/3))^(3/2)
constexpr double kRootArgmaxT = 0.6299605249474366;    // 2^(-2/3)

} // namespace

TEST_CASE("budget validation") {
    CHECK_THROWS_AS(budget(26).validate(), std::invalid_argument);
    CHECK_THROWS_AS(budget(100, 0, -1).validate(), std::invalid_argument);
    CHECK_NOTHROW(budget(27).validate());
}

TEST_CASE("membership falsification of sqrt(x) finds the true maximum") {
    const FunctionSpec root = fs("sqrt(x)", 0, 1);
    const auto w = falsify_pointwise(PredicateId::mt, root, nullptr, budget(1000));
    REQUIRE(w.has_value());
    CHECK(w->kind == WitnessKind::inequality);
    CHECK(w->margin >= 0.20);
    CHECK(w->margin >= 0.2249); // refinement pushes to the analytic maximum
    CHECK(w->margin <= kRootMaxMargin + 1e-12);
    CHECK(w->x <= 1e-6);
    CHECK(w->y >= 1.0 - 1e-6);
    REQUIRE(w->t.has_value());
    CHECK(*w->t == doctest::Approx(kRootArgmaxT).epsilon(1e-3));
}

TEST_CASE("no witness exists for a genuine member") {
    const auto w = falsify_pointwise(PredicateId::mt, fs("x^2", 0, 1), nullptr, budget(10000));
    CHECK(!w.has_value());

    const auto c = falsify_pointwise(PredicateId::convex, fs("exp(x)", -1, 1), nullptr, budget(5000));
    CHECK(!c.has_value());
}

TEST_CASE("convexity falsification of sin on [0, pi]") {
    const auto w =
        falsify_pointwise(PredicateId::convex, fs("sin(x)", 0, std::numbers::pi), nullptr, budget(1000));
    REQUIRE(w.has_value());
    CHECK(w->margin >= 0.9);
    CHECK(w->margin <= 1.0 + 1e-12);
}

TEST_CASE("midpoint falsification of sqrt") {
    const auto w = falsify_pointwise(PredicateId::midpoint, fs("sqrt(x)", 0, 1), nullptr, budget(1000));
    REQUIRE(w.has_value());
    CHECK(!w->t.has_value());
    CHECK(w->margin >= std::sqrt(0.5) - 0.5 - 1e-9); // 0.2071...
}

TEST_CASE("similar-ordering falsification needs and uses the second function") {
    const FunctionSpec f = fs("x", 0, 1);
    const FunctionSpec g = fs("1-x", 0, 1);
    CHECK_THROWS_AS(falsify_pointwise(PredicateId::so, f, nullptr, budget(1000)),
                    std::invalid_argument);
    const auto w = falsify_pointwise(PredicateId::so, f, &g, budget(1000));
    REQUIRE(w.has_value());
    CHECK(w->margin == doctest::Approx(1.0).epsilon(1e-9)); // (x-y)^2 at the corners
    CHECK(w->x < w->y); // lexicographic tie-break picks (0, 1) over (1, 0)
}

TEST_CASE("undefined evaluations come back as domain witnesses") {
    const auto w =
        falsify_pointwise(PredicateId::mt, fs("sqrt((x-0.3)*(x-0.7))", 0, 1), nullptr, budget(1000));
    REQUIRE(w.has_value());
    CHECK(w->kind == WitnessKind::domain);
    CHECK(w->margin == 0.0);
    CHECK(w->x > 0.3);
    CHECK(w->x < 0.7);
}

TEST_CASE("determinism across runs and execution policies") {
    const FunctionSpec root = fs("sqrt(x)", 0, 1);
    const auto a = falsify_pointwise(PredicateId::mt, root, nullptr, budget(813, 42), 1e-6,
                                     Exec::parallel);
    const auto b = falsify_pointwise(PredicateId::mt, root, nullptr, budget(813, 42), 1e-6,
                                     Exec::parallel);
    const auto c = falsify_pointwise(PredicateId::mt, root, nullptr, budget(813, 42), 1e-6,
                                     Exec::serial);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    REQUIRE(c.has_value());
    CHECK(a->x == b->x);
    CHECK(a->y == b->y);
    CHECK(a->t == b->t);
    CHECK(a->margin == b->margin);
    CHECK(a->x == c->x);
    CHECK(a->y == c->y);
    CHECK(a->t == c->t);
    CHECK(a->margin == c->margin);
}

TEST_CASE("witness soundness: the raw predicate reproduces the margin") {
    const FunctionSpec root = fs("sqrt(x)", 0, 1);
    const auto w = falsify_pointwise(PredicateId::mt, root, nullptr, budget(500, 7));
    REQUIRE(w.has_value());
    const double direct = mt_sides(root.expr(), w->x, w->y, *w->t).violation();
    CHECK(direct >= 0.99 * w->margin);
    CHECK(direct == doctest::Approx(w->margin).epsilon(1e-15));
}

TEST_CASE("refinement is monotone and climbs to the analytic optimum") {
    const FunctionSpec root = fs("sqrt(x)", 0, 1);
    Witness start;
    start.kind = WitnessKind::inequality;
    start.x = 0.1;
    start.y = 0.9;
    start.t = 0.5;
    start.margin = mt_sides(root.expr(), 0.1, 0.9, 0.5).violation();
    REQUIRE(start.margin > 0.07); // hand check: sqrt(.5) - (sqrt(.1)+sqrt(.9))/2

    const Witness once = refine_witness(PredicateId::mt, root, nullptr, start, 1);
    CHECK(once.margin >= start.margin);
    const Witness more = refine_witness(PredicateId::mt, root, nullptr, once, 7);
    CHECK(more.margin >= once.margin);
    CHECK(more.margin >= 0.21);
    CHECK(more.margin <= kRootMaxMargin + 1e-12);
}

TEST_CASE("refinement rejects non-violating input") {
    const FunctionSpec one = fs("1", 0, 1);
    Witness flat;
    flat.kind = WitnessKind::inequality;
    flat.x = 0.25;
    flat.y = 0.75;
    flat.t = 0.5;
    flat.margin = 0.0;
    CHECK_THROWS_AS(refine_witness(PredicateId::mt, one, nullptr, flat, 3), std::invalid_argument);
}

TEST_CASE("an already-optimal witness is a fixed point") {
    const FunctionSpec root = fs("sqrt(x)", 0, 1);
    Witness best;
    best.kind = WitnessKind::inequality;
    best.x = 0.0;
    best.y = 1.0;
    best.t = kRootArgmaxT;
    best.margin = mt_sides(root.expr(), 0.0, 1.0, kRootArgmaxT).violation();
    const Witness refined = refine_witness(PredicateId::mt, root, nullptr, best, 3);
    CHECK(refined.margin >= best.margin);
    CHECK(refined.margin == doctest::Approx(best.margin).epsilon(1e-9));
    CHECK(std::abs(refined.x) <= 1e-9);
    CHECK(std::abs(refined.y - 1.0) <= 1e-9);
}
