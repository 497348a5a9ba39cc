#include "doctest.h"

#include <set>

#include "repstrata/layering.hpp"
#include "repstrata/rng.hpp"

#include "testutil.hpp"

using namespace repstrata;
using testutil::dv;

namespace {

// independent oracle: enumerate every multiset of generators summing to
// (d1, d2), by bounded multiplicity recursion
void oracle_all_decompositions(const std::vector<std::pair<int, int>>& gens, std::size_t idx,
                               int d1, int d2, std::vector<std::pair<int, int>>& acc,
                               std::vector<std::vector<std::pair<int, int>>>& out) {
    if (d1 == 0 && d2 == 0) {
        out.push_back(acc);
        return;
    }
    if (idx == gens.size() || d1 < 0 || d2 < 0) return;
    int maxCount = gens[idx].first > 0 ? d1 / gens[idx].first : d1;
    for (int count = 0; count <= maxCount; ++count) {
        int r1 = d1 - count * gens[idx].first;
        int r2 = d2 - count * gens[idx].second;
        if (r1 < 0 || r2 < 0) continue;
        for (int k = 0; k < count; ++k) acc.push_back(gens[idx]);
        oracle_all_decompositions(gens, idx + 1, r1, r2, acc, out);
        for (int k = 0; k < count; ++k) acc.pop_back();
    }
}

std::vector<std::vector<std::pair<int, int>>> oracle_decompositions(int n, int d1, int d2) {
    std::vector<std::vector<std::pair<int, int>>> out;
    std::vector<std::pair<int, int>> acc;
    oracle_all_decompositions(root_generators(n), 0, d1, d2, acc, out);
    for (auto& d : out) std::sort(d.begin(), d.end());
    return out;
}

} // namespace

TEST_CASE("dominance order") {
    Layering a = Layering::single({1, 1, 1});
    CHECK(dominance_leq(a, a));
    CHECK(dominance_leq(Layering::single({1, 1, 1}), Layering::single({1, 2, 0})));
    // prefix sums 2,2,3 vs 1,3,3: incomparable
    CHECK_FALSE(dominance_leq(Layering::single({2, 0, 1}), Layering::single({1, 2, 0})));
    CHECK_FALSE(dominance_leq(Layering::single({1, 2, 0}), Layering::single({2, 0, 1})));
    CHECK_THROWS_AS(dominance_leq(a, Layering::single({1, 1})), DimensionError);
}

TEST_CASE("dominance is a partial order") {
    Rng rng(17);
    std::vector<DimVec3> vals;
    for (int i = 0; i < 40; ++i)
        vals.push_back(dv((int)rng.below(4), (int)rng.below(4), (int)rng.below(4)));
    for (const auto& x : vals) {
        CHECK(dominance_leq(x, x));
        for (const auto& y : vals) {
            if (dominance_leq(x, y) && dominance_leq(y, x)) CHECK(x == y);
            for (const auto& z : vals)
                if (dominance_leq(x, y) && dominance_leq(y, z)) CHECK(dominance_leq(x, z));
        }
    }
}

TEST_CASE("existence predicate") {
    CHECK(rad_nonempty(2, dv(1, 2, 3)));
    CHECK_FALSE(rad_nonempty(2, dv(1, 3, 0)));
    CHECK_FALSE(rad_nonempty(2, dv(1, 1, 2)));
    CHECK(rad_nonempty(2, dv(0, 0, 0)));
    CHECK_FALSE(rad_nonempty(2, dv(0, 1, 0)));

    ExistenceVerdict v = existence_check(2, dv(1, 3, 0));
    CHECK_FALSE(v.ok);
    CHECK(v.detail.find("(3 > 2)") != std::string::npos);
}

TEST_CASE("Tits form") {
    for (int n : {2, 3, 4}) CHECK(tits_q(n, 1, n) == 1);
    CHECK(tits_q(2, 0, 0) == 0);
    CHECK(tits_q(3, 2, 5) == -1);
    // generators are roots
    for (int n : {2, 3, 4})
        for (auto [a, b] : root_generators(n)) CHECK(tits_q(n, a, b) <= 1);
}

TEST_CASE("root_decompose pinned examples") {
    using P = std::vector<std::pair<int, int>>;
    CHECK(root_decompose(2, 3, 4) == P{{1, 1}, {2, 3}});
    CHECK(root_decompose(2, 5, 7) == P{{1, 1}, {2, 3}, {2, 3}});
    CHECK(root_decompose(2, 1, 1) == P{{1, 1}});
    CHECK_THROWS_AS(root_decompose(2, 1, 2), DecompositionError);
    CHECK(root_decompose(2, 0, 0).empty());

    // uniqueness of the two pinned answers, per the exhaustive oracle
    CHECK(oracle_decompositions(2, 3, 4).size() == 1);
    CHECK(oracle_decompositions(2, 5, 7).size() == 1);
}

TEST_CASE("root_decompose agrees with the exhaustive oracle") {
    for (int n : {2, 3, 4}) {
        auto gens = root_generators(n);
        for (int d1 = 0; d1 <= 12; ++d1) {
            for (int d2 = 0; d2 <= 12; ++d2) {
                bool valid = n * d2 <= (n * n - 1) * d1;
                auto oracle = oracle_decompositions(n, d1, d2);
                if (!valid) {
                    CHECK_THROWS_AS(root_decompose(n, d1, d2), DecompositionError);
                    continue;
                }
                auto ours = root_decompose(n, d1, d2);
                // sums to the input and uses only listed generators
                int s1 = 0, s2 = 0;
                for (auto [a, b] : ours) {
                    s1 += a;
                    s2 += b;
                    CHECK(std::find(gens.begin(), gens.end(), std::make_pair(a, b)) != gens.end());
                }
                CHECK(s1 == d1);
                CHECK(s2 == d2);
                // feasibility agreement and membership among all decompositions
                REQUIRE_FALSE(oracle.empty());
                CHECK(std::find(oracle.begin(), oracle.end(), ours) != oracle.end());
            }
        }
    }
}

TEST_CASE("root_decompose succeeds on the whole valid range up to 40") {
    for (int n : {2, 3, 4})
        for (int d1 = 0; d1 <= 40; ++d1)
            for (int d2 = 0; d2 <= 40; ++d2) {
                if (n * d2 > (n * n - 1) * d1) continue;
                auto ours = root_decompose(n, d1, d2);
                int s1 = 0, s2 = 0;
                for (auto [a, b] : ours) {
                    s1 += a;
                    s2 += b;
                }
                CHECK(s1 == d1);
                CHECK(s2 == d2);
            }
}

TEST_CASE("generic h values") {
    CHECK(h0_generic(2, dv(2, 2, 3)) == 1);
    CHECK(h1_generic(2, dv(2, 2, 3)) == 0);
    CHECK(h0_generic(2, dv(1, 2, 2)) == 0);
    CHECK(h1_generic(2, dv(1, 2, 2)) == 0);
    CHECK(h0_generic(2, dv(3, 5, 2)) == 0);
    CHECK(h1_generic(2, dv(3, 5, 2)) == 1);
    CHECK_THROWS_AS(h0_generic(2, dv(1, 3, 0)), EmptyStratumError);
}

TEST_CASE("generic socdim closed forms") {
    CHECK(generic_socdim(2, dv(2, 3, 2)).value == dv(2, 3, 2));
    CHECK_FALSE(generic_socdim(2, dv(2, 3, 2)).exceptional);

    GenericLayering exc = generic_socdim(2, dv(2, 2, 3));
    CHECK(exc.value == dv(3, 3, 1));
    CHECK(exc.exceptional);
    CHECK_FALSE(exc.formula_conflict);

    GenericLayering exc2 = generic_socdim(2, dv(3, 3, 1));
    CHECK(exc2.value == dv(2, 2, 3));
    CHECK(exc2.exceptional);
    CHECK_FALSE(exc2.formula_conflict); // agrees with the h > 0 corollary

    // h = 3, (n^2-1) d2 = 3 < 10: second branch
    CHECK(generic_socdim(2, dv(10, 5, 1)).value == dv(4, 9, 3));
    CHECK(dv(4, 9, 3).total() == 16);

    CHECK(generic_socdim(2, dv(3, 5, 2)).value == dv(3, 4, 3));

    // semisimple stratum is a single point
    CHECK(generic_socdim(2, dv(4, 0, 0)).value == dv(4, 0, 0));
    CHECK_THROWS_AS(generic_socdim(2, dv(0, 1, 0)), EmptyStratumError);
}

TEST_CASE("fixed point check") {
    for (int d = 1; d <= 12; ++d)
        for (const auto& e : components(2, d).entries) CHECK(fixed_point_check(2, e.layering));
    CHECK_FALSE(fixed_point_check(2, dv(3, 5, 2)));
    CHECK(fixed_point_check(2, dv(2, 2, 3)));
}

TEST_CASE("components") {
    SUBCASE("d = 5") {
        ComponentReport r = components(2, 5);
        REQUIRE(r.entries.size() == 2);
        CHECK(r.entries[0].layering == dv(1, 2, 2));
        CHECK(r.entries[1].layering == dv(2, 2, 1));
        CHECK_FALSE(r.entries[0].exceptional);
    }

    SUBCASE("d = 7 has the exceptional pair") {
        ComponentReport r = components(2, 7);
        REQUIRE(r.entries.size() == 3);
        CHECK(r.entries[0].layering == dv(2, 2, 3));
        CHECK(r.entries[0].exceptional);
        CHECK(r.entries[1].layering == dv(2, 3, 2));
        CHECK_FALSE(r.entries[1].exceptional);
        CHECK(r.entries[2].layering == dv(3, 3, 1));
        CHECK(r.entries[2].exceptional);
        CHECK(r.entries[0].generic_soc == dv(3, 3, 1));
        CHECK(r.entries[2].generic_soc == dv(2, 2, 3));
    }

    SUBCASE("d = 1 keeps the simple module and warns about (0,1,0)") {
        ComponentReport r = components(2, 1);
        REQUIRE(r.entries.size() == 1);
        CHECK(r.entries[0].layering == dv(1, 0, 0));
        REQUIRE(r.warnings.size() == 1);
        CHECK(r.warnings[0].find("(0,1,0)") != std::string::npos);
    }

    SUBCASE("regular entries satisfy the four inequalities, excluded fail one") {
        for (int n : {2, 3}) {
            for (int d = 0; d <= 12; ++d) {
                ComponentReport r = components(n, d);
                std::set<DimVec3> inReport;
                for (const auto& e : r.entries) inReport.insert(e.layering);
                for (int d0 = 0; d0 <= d; ++d0) {
                    for (int d1 = 0; d0 + d1 <= d; ++d1) {
                        int d2 = d - d0 - d1;
                        bool passes = d1 <= n * d0 && d1 <= n * d2 && d2 <= n * d1 - d0 &&
                                      d0 <= n * d1 - d2;
                        if (passes) CHECK(inReport.count(dv(d0, d1, d2)) == 1);
                        if (!passes && inReport.count(dv(d0, d1, d2)))
                            CHECK(inReport.find(dv(d0, d1, d2))->d0 >= 0); // exceptional addition
                    }
                }
            }
        }
    }
}

TEST_CASE("component layerings are nonempty in both readings") {
    for (int n : {2, 3})
        for (int d = 1; d <= 12; ++d)
            for (const auto& e : components(n, d).entries) {
                CHECK(rad_nonempty(n, e.layering));
                // the socle predicate coincides with the radical one
                CHECK(rad_nonempty(n, e.generic_soc));
            }
}

TEST_CASE("theta separation for the d = 7 components") {
    ComponentReport r = components(2, 7);
    std::vector<ThetaPair> pairs;
    for (const auto& e : r.entries) pairs.push_back({e.layering, e.generic_soc});
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        for (std::size_t j = i + 1; j < pairs.size(); ++j) {
            CHECK_FALSE(pairs[i] == pairs[j]);
            CHECK_FALSE(theta_leq(pairs[i], pairs[j]));
            CHECK_FALSE(theta_leq(pairs[j], pairs[i]));
        }
    }
}

TEST_CASE("root region export") {
    auto pts = root_region(2, 8);
    bool sawExcluded = false, sawGen = false;
    for (const auto& p : pts) {
        CHECK(p.q <= 1);
        CHECK(tits_q(2, p.d1, p.d2) == p.q);
        if (p.is_excluded) {
            CHECK(p.d1 == 1);
            CHECK(p.d2 == 2);
            sawExcluded = true;
        }
        if (p.is_generator) sawGen = true;
    }
    CHECK(sawExcluded);
    CHECK(sawGen);
    std::string csv = root_region_csv(pts);
    CHECK(csv.rfind("d1,d2,q,is_generator,is_excluded\n", 0) == 0);
}
