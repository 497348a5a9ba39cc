#pragma once

#include <cstdint>
#include <map>

#include "repstrata/construct.hpp"

namespace repstrata {

struct SampleBudget {
    int outer = 100; // full restarts
    int inner = 30;  // kernel redraws per extension step
};

// Samples a representation whose radical layering is exactly the given
// vector (shorter vectors mean the deeper layers are zero). The flag is
// built layer by layer from the deepest one: each extension draws the new
// column block from the kernel of the relation system evaluated on the
// part below, then keeps it only if the image condition for the next
// layer holds. The result is in adapted form and verified by raddim.
Representation sample_layered(PresentationPtr pres, const Layering& layering, Rng& rng,
                              const SampleBudget& budget = {});

// local-family convenience over the normalized presentation
Representation sample_with_radlayering(int n, const DimVec3& d, FieldSpec field,
                                       std::uint64_t seed, int retryBudget = 100);

struct EstimateReport {
    DimVec3 layering;
    DimVec3 socdim_min;
    int h0_min = 0;
    int h1_min = 0;
    std::map<DimVec3, int> histogram;
    std::uint64_t seed = 0;
    int samples = 0;
    bool ambiguous = false;             // incomparable minimal socdim values remained
    std::vector<DimVec3> minimal_set;   // the observed dominance-minimal values
};

// Draws samples from the stratum and reports the dominance-minimum of the
// observed socle layerings (the generic value, by semicontinuity) along
// with the minima of h0 and h1 and the full histogram. Incomparable
// minima trigger one round of doubling before being reported as
// ambiguous.
EstimateReport estimate_generic(int n, const DimVec3& d, int samples, FieldSpec field,
                                std::uint64_t seed);

// Exhaustive enumeration over F_p of adapted block tuples for every shape
// with the given total; returns the achievable radical layerings. The
// free top-right blocks are skipped (they affect neither the relations
// nor the layering conditions). Throws BudgetError when the candidate
// count exceeds the budget.
std::vector<DimVec3> brute_force_layerings(int n, int dtotal, std::int64_t p,
                                           std::uint64_t budget);

// candidate count the enumeration would visit (for refusal diagnostics)
double brute_force_search_space(int n, int dtotal, std::int64_t p);

} // namespace repstrata
