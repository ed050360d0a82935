#pragma once

// Deterministic max-violation scan over an indexed sample family.
//
// Every sample is scored by a pure kernel, so the only ordering hazard is the
// reduction. The merge ranks candidates by a strict total order — larger
// violation first, then lexicographically smaller (x, y, t), then lower
// sample index — which makes the OpenMP path bit-identical to the serial one
// regardless of thread count or merge order.

#include <cstddef>
#include <limits>
#include <optional>

#include "mtc/classes.hpp"

namespace mtc::detail {

struct Sample {
    double x = 0.0;
    double y = 0.0;
    double t = 0.0;
    bool has_t = false;
};

struct Candidate {
    WitnessKind kind = WitnessKind::inequality;
    double x = 0.0;
    double y = 0.0;
    double t = 0.0;
    bool has_t = false;
    double lhs = 0.0;
    double rhs = 0.0;

    double violation() const { return lhs - rhs; }
    bool violates() const {
        return violation() > kViolationRelTol * (1.0 + (rhs < 0.0 ? -rhs : rhs));
    }
};

/// What one sample contributes: either an undefined-evaluation flag with the
/// offending abscissa, or up to four scored candidates (the inequality plus
/// any nonnegativity violations).
struct CandidateSet {
    int count = 0;
    Candidate cand[4];
    bool undefined = false;
    double undefined_point = 0.0;

    void add(const Candidate& c) { cand[count++] = c; }
    void mark_undefined(double point) {
        undefined = true;
        undefined_point = point;
    }
};

struct RankedCandidate {
    bool present = false;
    std::size_t index = 0;
    Candidate cand{};
};

struct ScanOutcome {
    bool any_undefined = false;
    std::size_t undefined_index = std::numeric_limits<std::size_t>::max();
    double undefined_point = 0.0;
    RankedCandidate best_violation; // best among violating candidates
    RankedCandidate best_overall;   // best among all candidates
    long long samples = 0;
};

/// true when (a at sample ia) outranks (b at sample ib)
inline bool ranks_before(const Candidate& a, std::size_t ia, const Candidate& b, std::size_t ib) {
    const double va = a.violation(), vb = b.violation();
    if (va != vb) return va > vb;
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    const double ta = a.has_t ? a.t : -std::numeric_limits<double>::infinity();
    const double tb = b.has_t ? b.t : -std::numeric_limits<double>::infinity();
    if (ta != tb) return ta < tb;
    if (a.kind != b.kind) return a.kind < b.kind;
    return ia < ib;
}

inline void take_better(RankedCandidate& best, const Candidate& c, std::size_t index) {
    if (!best.present || ranks_before(c, index, best.cand, best.index)) {
        best.present = true;
        best.index = index;
        best.cand = c;
    }
}

inline void absorb(ScanOutcome& out, std::size_t index, const CandidateSet& set) {
    if (set.undefined) {
        if (!out.any_undefined || index < out.undefined_index) {
            out.any_undefined = true;
            out.undefined_index = index;
            out.undefined_point = set.undefined_point;
        }
        return;
    }
    for (int i = 0; i < set.count; ++i) {
        const Candidate& c = set.cand[i];
        take_better(out.best_overall, c, index);
        if (c.violates()) take_better(out.best_violation, c, index);
    }
}

inline void merge_into(ScanOutcome& total, const ScanOutcome& part) {
    if (part.any_undefined &&
        (!total.any_undefined || part.undefined_index < total.undefined_index)) {
        total.any_undefined = true;
        total.undefined_index = part.undefined_index;
        total.undefined_point = part.undefined_point;
    }
    if (part.best_overall.present)
        take_better(total.best_overall, part.best_overall.cand, part.best_overall.index);
    if (part.best_violation.present)
        take_better(total.best_violation, part.best_violation.cand, part.best_violation.index);
}

template <class SampleFn, class KernelFn>
ScanOutcome scan(std::size_t n, const SampleFn& sample_at, const KernelFn& kernel, Exec exec) {
    ScanOutcome total;
    total.samples = static_cast<long long>(n);
#ifdef _OPENMP
    if (exec == Exec::parallel && n >= 2048) {
        #pragma omp parallel
        {
            ScanOutcome local;
            #pragma omp for schedule(static) nowait
            for (long long i = 0; i < static_cast<long long>(n); ++i) {
                const std::size_t idx = static_cast<std::size_t>(i);
                absorb(local, idx, kernel(sample_at(idx)));
            }
            #pragma omp critical
            merge_into(total, local);
        }
        return total;
    }
#else
    (void)exec;
#endif
    for (std::size_t i = 0; i < n; ++i) absorb(total, i, kernel(sample_at(i)));
    return total;
}

} // namespace mtc::detail
