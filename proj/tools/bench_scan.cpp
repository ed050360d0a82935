// Times the serial scan against the OpenMP scan on a large membership plan
// and checks that both produce the same verdict bit for bit.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mtc/classes.hpp"

using namespace mtc;

namespace {

double seconds(std::chrono::steady_clock::time_point a, std::chrono::steady_clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

bool same_verdict(const Verdict& a, const Verdict& b) {
    if (a.status != b.status || a.evaluations != b.evaluations) return false;
    if (a.witness.has_value() != b.witness.has_value()) return false;
    if (a.witness) {
        if (a.witness->kind != b.witness->kind || a.witness->x != b.witness->x ||
            a.witness->y != b.witness->y || a.witness->t != b.witness->t ||
            a.witness->margin != b.witness->margin)
            return false;
    }
    if (a.extreme.has_value() != b.extreme.has_value()) return false;
    if (a.extreme) {
        if (a.extreme->x != b.extreme->x || a.extreme->y != b.extreme->y ||
            a.extreme->t != b.extreme->t || a.extreme->lhs != b.extreme->lhs ||
            a.extreme->rhs != b.extreme->rhs)
            return false;
    }
    return true;
}

} // namespace

int main(int argc, char** argv) {
    int grid = 128;
    int random = 100000;
    if (argc > 1) grid = std::atoi(argv[1]);
    if (argc > 2) random = std::atoi(argv[2]);

    SamplePlan plan;
    plan.grid_points = grid;
    plan.random_samples = random;
    plan.seed = 1;

    const long long triples = static_cast<long long>(grid) * grid * grid + random;
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif
    std::printf("plan: %d^3 grid + %d random = %lld triples\n", grid, random, triples);

    struct Case {
        const char* name;
        const char* src;
    };
    const Case cases[] = {
        {"holds (exp(x)+x^2)", "exp(x)+x^2"},
        {"fails (sqrt(x))", "sqrt(x)"},
    };

    int bad = 0;
    for (const Case& c : cases) {
        const FunctionSpec f = FunctionSpec::parse(c.src, Interval(0.0, 1.0));

        auto t0 = std::chrono::steady_clock::now();
        const Verdict serial = check_mt_membership(f, plan, Exec::serial);
        auto t1 = std::chrono::steady_clock::now();
        const Verdict parallel = check_mt_membership(f, plan, Exec::parallel);
        auto t2 = std::chrono::steady_clock::now();

        const double ts = seconds(t0, t1);
        const double tp = seconds(t1, t2);
        const bool ok = same_verdict(serial, parallel);
        if (!ok) ++bad;
        std::printf("%-22s serial %8.3f ms   openmp %8.3f ms   speedup %5.2fx   %s\n", c.name,
                    ts * 1e3, tp * 1e3, tp > 0.0 ? ts / tp : 0.0,
                    ok ? "identical" : "MISMATCH");
    }
    return bad == 0 ? 0 : 1;
}
