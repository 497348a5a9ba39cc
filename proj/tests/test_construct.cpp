#include "doctest.h"

#include "repstrata/construct.hpp"

#include "testutil.hpp"

using namespace repstrata;
using testutil::dv;
using testutil::F;

namespace {

Matrix a_block(const Representation& rep, int arrow, const DimVec3& d) {
    return rep.matrix(arrow).submatrix(0, d.d2, d.d2, d.d1);
}

Matrix expected_from_entries(const FieldSpec& f, int rows, int cols,
                             const std::vector<std::tuple<int, int, int>>& entries) {
    Matrix m(f, rows, cols);
    for (auto [r, c, v] : entries) m.set(r, c, f.from_int(v));
    return m;
}

} // namespace

TEST_CASE("witness_dim1") {
    FieldSpec f = F(32003);

    Representation w = witness_dim1(2, 1, 1, f);
    CHECK(w.total_dim() == 3);
    CHECK(raddim(w) == Layering::single({1, 1, 1}));

    // m = 0: a single nonzero entry in the top-right band
    Representation w0 = witness_dim1(2, 0, 2, f);
    CHECK(raddim(w0) == Layering::single({2, 1, 0}));
    Matrix x1 = w0.matrix("x1");
    CHECK(x1.at(0, 1) == f.one());
    Matrix stripped = x1;
    stripped.set(0, 1, f.zero());
    CHECK(stripped.is_zero());
    CHECK(w0.matrix("x2").is_zero());

    CHECK(raddim(witness_dim1(4, 3, 1, f)) == Layering::single({1, 1, 3}));

    CHECK_THROWS_AS(witness_dim1(2, 2, 1, f), ParameterError);
    CHECK_THROWS_AS(witness_dim1(2, -1, 1, f), ParameterError);
    CHECK_THROWS_AS(witness_dim1(2, 1, 0, f), ParameterError);
}

TEST_CASE("witness_dimgt1 reproduces the displayed 7x2 tuple (n=4, m=2)") {
    FieldSpec f = F(32003);
    Representation w = witness_dimgt1(4, 2, 1, f);
    DimVec3 d{1, 2, 7};
    CHECK(raddim(w) == d.to_layering());

    CHECK(a_block(w, 0, d) == expected_from_entries(f, 7, 2, {{0, 0, 1}, {1, 1, 1}}));
    CHECK(a_block(w, 1, d) == expected_from_entries(f, 7, 2, {{2, 0, 1}, {3, 1, 1}}));
    CHECK(a_block(w, 2, d) == expected_from_entries(f, 7, 2, {{4, 0, 1}, {5, 1, 1}}));
    CHECK(a_block(w, 3, d) == expected_from_entries(f, 7, 2, {{5, 0, 1}, {6, 1, 1}}));
}

TEST_CASE("witness_dimgt1 reproduces the displayed 11x3 tuple (n=4, m=3)") {
    FieldSpec f = F(32003);
    Representation w = witness_dimgt1(4, 3, 1, f);
    DimVec3 d{1, 3, 11};
    CHECK(raddim(w) == d.to_layering());

    CHECK(a_block(w, 0, d) ==
          expected_from_entries(f, 11, 3, {{0, 0, 1}, {1, 1, 1}, {2, 2, 1}}));
    CHECK(a_block(w, 1, d) ==
          expected_from_entries(f, 11, 3, {{3, 0, 1}, {4, 1, 1}, {5, 2, 1}}));
    CHECK(a_block(w, 2, d) ==
          expected_from_entries(f, 11, 3, {{6, 0, 1}, {7, 1, 1}, {8, 2, 1}}));
    // the shifted tuple: bottom-aligned identity plus the correction at row 2
    CHECK(a_block(w, 3, d) ==
          expected_from_entries(f, 11, 3, {{1, 0, 1}, {8, 0, 1}, {9, 1, 1}, {10, 2, 1}}));
}

TEST_CASE("witness_dimgt1 reproduces the displayed 15x4 tuple (n=4, m=4)") {
    FieldSpec f = F(32003);
    Representation w = witness_dimgt1(4, 4, 1, f);
    DimVec3 d{1, 4, 15};
    CHECK(raddim(w) == d.to_layering());
    CHECK(a_block(w, 3, d) ==
          expected_from_entries(
              f, 15, 4, {{1, 0, 1}, {6, 0, 1}, {11, 0, 1}, {12, 1, 1}, {13, 2, 1}, {14, 3, 1}}));
}

TEST_CASE("witness_dimgt1 small cases and errors") {
    FieldSpec f = F(32003);
    CHECK(raddim(witness_dimgt1(2, 2, 1, f)) == Layering::single({1, 2, 3}));
    CHECK(raddim(witness_dimgt1(3, 2, 2, f)) == Layering::single({2, 2, 5}));
    CHECK(raddim(witness_dimgt1(3, 3, 1, f)) == Layering::single({1, 3, 8}));
    CHECK_THROWS_AS(witness_dimgt1(3, 1, 1, f), ParameterError);
    CHECK_THROWS_AS(witness_dimgt1(3, 4, 1, f), ParameterError);
}

TEST_CASE("lemma witnesses are already adapted") {
    FieldSpec f = F(32003);
    for (const Representation& w : {witness_dim1(2, 1, 1, f), witness_dim1(3, 2, 1, f),
                                    witness_dimgt1(2, 2, 1, f), witness_dimgt1(4, 3, 2, f)}) {
        AdaptedRep a = adapt_basis(w);
        CHECK(a.basis[0].is_identity());
    }
}

TEST_CASE("witness_exceptional") {
    FieldSpec f = F(32003);

    Representation w22 = witness_exceptional(2, 2, f);
    CHECK(w22.total_dim() == 7);
    CHECK(raddim(w22) == Layering::single({2, 2, 3}));
    CHECK(socdim(w22) == Layering::single({3, 3, 1}));
    CHECK(h_invariants(adapt_basis(w22)).h0 == 1);

    Representation w32 = witness_exceptional(3, 2, f);
    CHECK(w32.total_dim() == 13);
    CHECK(raddim(w32) == Layering::single({2, 3, 8}));
    CHECK(socdim(w32) == Layering::single({8, 4, 1}));

    Representation w23 = witness_exceptional(2, 3, f);
    CHECK(w23.total_dim() == 13);
    CHECK(raddim(w23) == Layering::single({3, 4, 6}));
    CHECK(socdim(w23) == Layering::single({6, 5, 2}));

    CHECK_THROWS_AS(witness_exceptional(2, 1, f), ParameterError);
}

TEST_CASE("witness_any") {
    FieldSpec f = F(32003);

    CHECK(raddim(witness_any(2, dv(1, 2, 2), f, 5)) == Layering::single({1, 2, 2}));
    CHECK(raddim(witness_any(2, dv(1, 2, 3), f, 5)) == Layering::single({1, 2, 3}));
    CHECK_THROWS_AS(witness_any(2, dv(1, 3, 1), f, 5), EmptyStratumError);

    // degenerate corners
    CHECK(witness_any(2, dv(0, 0, 0), f, 5).total_dim() == 0);
    CHECK(raddim(witness_any(2, dv(4, 0, 0), f, 5)) == Layering::single({4, 0, 0}));
    CHECK(raddim(witness_any(3, dv(2, 5, 1), f, 5)) == Layering::single({2, 5, 1}));
}

TEST_CASE("witness_any covers every nonempty stratum with total <= 10 (n = 2)") {
    FieldSpec f = F(32003);
    for (int total = 0; total <= 10; ++total) {
        for (int d0 = 0; d0 <= total; ++d0) {
            for (int d1 = 0; d0 + d1 <= total; ++d1) {
                DimVec3 d{d0, d1, total - d0 - d1};
                if (!rad_nonempty(2, d)) continue;
                Representation rep = witness_any(2, d, f, 1234);
                CHECK(raddim(rep) == d.to_layering());
            }
        }
    }
}
