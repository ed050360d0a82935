#pragma once

#include <optional>

#include "mtc/classes.hpp"

namespace mtc {

enum class PredicateId { convex, midpoint, mt, so };

/// Budget for a counterexample search: half of coarse_evals goes to a
/// uniform grid, half to seeded random samples, then refine_iters rounds of
/// coordinate-wise golden-section ascent on the best violation found.
struct SearchBudget {
    long long coarse_evals = 10000;
    int refine_iters = 8;
    std::uint64_t seed = 0;

    void validate() const; // coarse_evals >= 27 (a 3x3x3 grid), refine_iters >= 0
};

bool predicate_needs_second_function(PredicateId pred);
bool predicate_uses_t(PredicateId pred);

/// Grid + seeded-random search for a violation of a pointwise predicate,
/// followed by local refinement of the largest margin found. Deterministic
/// for a fixed budget (including seed). An undefined evaluation is reported
/// as a WitnessKind::domain witness; pass g for the two-function predicate.
std::optional<Witness> falsify_pointwise(PredicateId pred, const FunctionSpec& f,
                                         const FunctionSpec* g, const SearchBudget& budget,
                                         double t_margin = 1e-6, Exec exec = Exec::parallel);

/// Monotone margin improvement by coordinate-wise golden-section ascent,
/// three sweeps per iteration, clamped to the domain (and to
/// [t_margin, 1-t_margin] for the membership predicate). Requires a strictly
/// violating witness; returns the input if no improvement is found.
Witness refine_witness(PredicateId pred, const FunctionSpec& f, const FunctionSpec* g,
                       const Witness& witness, int iters, double t_margin = 1e-6);

} // namespace mtc
