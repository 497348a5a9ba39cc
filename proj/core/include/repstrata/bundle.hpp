#pragma once

#include <map>
#include <optional>

#include "repstrata/sampler.hpp"

namespace repstrata {

// Dimension of the kernel fiber over the truncated point Mprime: per start
// vertex a, assemble the block matrix (c_ij * g_ij(M')) over the relations
// starting at a and the arrows leaving a, and sum
// (n(a) - rank B(a)) * d0(a) with n(a) the total width.
long fiber_dim(const Representation& mprime, const std::vector<int>& d0);

struct FiberWitness {
    int sample_a = 0;
    int sample_b = 0;
    long fiber_a = 0;
    long fiber_b = 0;
    std::optional<Representation> rep_a;
    std::optional<Representation> rep_b;
};

struct FiberReport {
    int samples = 0;
    std::map<long, int> fiber_dims; // value -> count
    bool constant = true;
    std::optional<FiberWitness> witness;
    std::uint64_t seed = 0;
};

// Samples points of the truncated stratum (layers 1..m-1 of the given
// layering), computes the fiber dimension over each, and reports whether
// the values were constant. Non-constancy always comes with an explicit
// witness pair.
FiberReport fiber_constancy_probe(PresentationPtr pres, const Layering& fullLayering, int samples,
                                  std::uint64_t seed);

} // namespace repstrata
