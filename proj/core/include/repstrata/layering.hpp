#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "repstrata/representation.hpp"

namespace repstrata {

// A three-step layering (d0, d1, d2) of a module over the local family;
// d0 is the top layer.
struct DimVec3 {
    int d0 = 0, d1 = 0, d2 = 0;

    int total() const { return d0 + d1 + d2; }
    DimVec3 reversed() const { return {d2, d1, d0}; }
    Layering to_layering() const { return Layering::single({d0, d1, d2}); }
    static DimVec3 from_layering(const Layering& l);

    bool operator==(const DimVec3& o) const { return d0 == o.d0 && d1 == o.d1 && d2 == o.d2; }
    bool operator!=(const DimVec3& o) const { return !(*this == o); }
    bool operator<(const DimVec3& o) const; // lexicographic
    std::string str() const;
};

bool dominance_leq(const DimVec3& u, const DimVec3& v);

// the pair (raddim, socdim); ordered componentwise by dominance
struct ThetaPair {
    DimVec3 rad;
    DimVec3 soc;
    bool operator==(const ThetaPair& o) const { return rad == o.rad && soc == o.soc; }
};
bool theta_leq(const ThetaPair& a, const ThetaPair& b);

// Nonemptiness of the radical-layering stratum: d1 <= n*d0 and
// n*d2 <= (n^2-1)*d1. The same predicate answers socle-layering
// nonemptiness.
bool rad_nonempty(int n, const DimVec3& d);

struct ExistenceVerdict {
    bool ok;
    std::string detail; // which inequality fails, with numbers
};
ExistenceVerdict existence_check(int n, const DimVec3& d);

// q(d1,d2) = d1^2 + d2^2 - n*d1*d2; q <= 1 marks Kronecker root pairs
std::int64_t tits_q(int n, std::int64_t d1, std::int64_t d2);

// (1,0),...,(1,n-1),(2,2n-1),...,(n,n^2-1)
std::vector<std::pair<int, int>> root_generators(int n);

// Writes (d1,d2) with n*d2 <= (n^2-1)*d1 as a sum of root generators,
// greedily following the minimal-counterexample recursion, with an
// exhaustive fallback. Result is sorted. Throws DecompositionError when
// the inequality fails.
std::vector<std::pair<int, int>> root_decompose(int n, int d1, int d2);

int h0_generic(int n, const DimVec3& d); // max(d0 - (n*d1 - d2), 0)
int h1_generic(int n, const DimVec3& d); // max(d1 - n*d2, 0)

struct GenericLayering {
    DimVec3 value;
    bool exceptional = false;       // one of the two exceptional families (a >= 2)
    bool formula_conflict = false;  // closed forms disagreed on an overlap input
};

// Generic socle layering of the radical stratum d (closed form).
GenericLayering generic_socdim(int n, const DimVec3& d);
// Generic radical layering of the socle stratum d; by duality the same
// closed form.
GenericLayering generic_raddim(int n, const DimVec3& d);

// raddim(socdim(d)) == d, evaluated on the closed forms
bool fixed_point_check(int n, const DimVec3& d);

struct ComponentEntry {
    DimVec3 layering;
    bool exceptional = false;
    DimVec3 generic_soc;
    int h0 = 0, h1 = 0;
    std::vector<std::pair<int, int>> root_witness; // decomposition of (d1,d2)
};

struct ComponentReport {
    int n = 0;
    int d = 0;
    std::vector<ComponentEntry> entries; // sorted lexicographically
    std::vector<std::string> warnings;
    std::string table() const;
};

// The candidate-component set of layerings for total dimension d: all
// triples passing the four inequalities, plus the two exceptional vectors
// when d = (n^2+n)(a-1)+1.
ComponentReport components(int n, int d);

struct RootPoint {
    int d1, d2;
    std::int64_t q;
    bool is_generator;
    bool is_excluded; // the tuple (1, n)
};

// lattice points with q <= 1 in [0,max]^2, plus generator/excluded flags
std::vector<RootPoint> root_region(int n, int maxCoord);
std::string root_region_csv(const std::vector<RootPoint>& pts);

} // namespace repstrata
