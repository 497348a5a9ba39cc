#pragma once

#include <vector>

#include "repstrata/construct.hpp"
#include "repstrata/sampler.hpp"

namespace testutil {

using namespace repstrata;

inline FieldSpec F(std::int64_t p) { return FieldSpec::prime(p); }
inline FieldSpec FQ() { return FieldSpec::rationals(); }

inline Matrix mat(const FieldSpec& f, const std::vector<std::vector<std::int64_t>>& rows) {
    return Matrix::from_ints(f, rows);
}

inline DimVec3 dv(int a, int b, int c) { return DimVec3{a, b, c}; }

// random valid layering for the local family, bounded total
inline DimVec3 random_nonempty_layering(int n, int maxTotal, Rng& rng) {
    for (;;) {
        int d0 = static_cast<int>(rng.below(maxTotal + 1));
        int d1 = static_cast<int>(rng.below(maxTotal + 1));
        int d2 = static_cast<int>(rng.below(maxTotal + 1));
        DimVec3 d{d0, d1, d2};
        if (d.total() >= 1 && d.total() <= maxTotal && rad_nonempty(n, d)) return d;
    }
}

// k[x,y]/(x^3, y^2) as the one-vertex two-loop quiver, truncation 4
inline PresentationPtr kxy_presentation(std::int64_t p) {
    FieldSpec f = FieldSpec::prime(p);
    Quiver q({"v"}, {{"x", "v", "v"}, {"y", "v", "v"}});
    Relation x3{{RelationTerm{f.one(), {"x", "x"}, "x"}}};
    Relation y2{{RelationTerm{f.one(), {"y"}, "y"}}};
    Relation comm{{RelationTerm{f.one(), {"x"}, "y"}, RelationTerm{f.neg(f.one()), {"y"}, "x"}}};
    return Presentation::quiver_algebra(q, {x3, y2, comm}, 4, f);
}

// the two-vertex quiver with loop c at 1, b: 1 -> 2, a: 2 -> 1 and one of
// the relation choices {ab+c2, bc, bab+bc2, ba}
inline PresentationPtr twovertex_presentation(std::int64_t p, const std::string& which, int m) {
    FieldSpec f = FieldSpec::prime(p);
    Quiver q({"1", "2"}, {{"c", "1", "1"}, {"b", "1", "2"}, {"a", "2", "1"}});
    std::vector<Relation> rels;
    if (which == "ab+c2")
        rels.push_back(Relation{
            {RelationTerm{f.one(), {"a"}, "b"}, RelationTerm{f.one(), {"c"}, "c"}}});
    else if (which == "bc")
        rels.push_back(Relation{{RelationTerm{f.one(), {"b"}, "c"}}});
    else if (which == "bab+bc2")
        rels.push_back(Relation{
            {RelationTerm{f.one(), {"b", "a"}, "b"}, RelationTerm{f.one(), {"b", "c"}, "c"}}});
    else if (which == "ba")
        rels.push_back(Relation{{RelationTerm{f.one(), {"b"}, "a"}}});
    else
        throw ParameterError("unknown relation choice: " + which);
    return Presentation::quiver_algebra(q, rels, m, f);
}

} // namespace testutil
