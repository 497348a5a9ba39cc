#include "doctest.h"

#include "repstrata/serialize.hpp"

#include "testutil.hpp"

using namespace repstrata;
using testutil::F;
using testutil::FQ;

TEST_CASE("field json") {
    CHECK(field_from_json(json{{"p", 32003}}) == F(32003));
    CHECK(field_from_json(json{{"rationals", true}}) == FQ());
    CHECK(field_to_json(F(5)) == json{{"p", 5}});
    CHECK_THROWS_AS(field_from_json(json{{"p", 4}}), FieldError);
    CHECK_THROWS_AS(field_from_json(json::object()), FormatError);
}

TEST_CASE("scalar json over Q is canonical") {
    FieldSpec q = FQ();
    Scalar half = q.div(q.from_int(-2), q.from_int(4));
    json j = scalar_to_json(q, half);
    CHECK(j.get<std::string>() == "-1/2");
    CHECK(scalar_from_json(q, j) == half);
    CHECK(scalar_to_json(q, q.from_int(7)).get<std::string>() == "7");
    CHECK(scalar_from_json(q, json(7)) == q.from_int(7));
}

TEST_CASE("matrix json round trips") {
    Rng rng(2);
    Matrix m = random_matrix(F(13), 3, 4, rng);
    CHECK(matrix_from_json(F(13), matrix_to_json(m)) == m);

    Matrix mq = random_matrix(FQ(), 2, 3, rng);
    CHECK(matrix_from_json(FQ(), matrix_to_json(mq)) == mq);
}

TEST_CASE("presentation json round trips") {
    PresentationPtr local = Presentation::local(2, Matrix::from_ints(F(7), {{1, 2}, {0, 1}}));
    json j = presentation_to_json(*local);
    CHECK(j.at("kind") == "local");
    CHECK(*presentation_from_json(j) == *local);

    PresentationPtr kxy = testutil::kxy_presentation(5);
    json j2 = presentation_to_json(*kxy);
    CHECK(j2.at("kind") == "quiver");
    CHECK(j2.at("m") == 4);
    CHECK(*presentation_from_json(j2) == *kxy);
}

TEST_CASE("representation json round trips bit-exactly") {
    FieldSpec f = F(32003);
    Representation rep = sample_with_radlayering(2, DimVec3{2, 3, 2}, f, 31);
    std::string text = save_representation(rep);
    Representation back = load_representation(text);
    CHECK(back == rep);
    CHECK(save_representation(back) == text);

    // multi-vertex
    Rng rng(7);
    PresentationPtr tv = testutil::twovertex_presentation(5, "ba", 4);
    Representation mp = sample_layered(tv, Layering{{{1, 1}, {1, 1}, {1, 1}}}, rng);
    CHECK(load_representation(save_representation(mp)) == mp);
}

TEST_CASE("rational representation round trips canonically") {
    FieldSpec q = FQ();
    Representation w = witness_dim1(2, 1, 1, q);
    Representation back = load_representation(save_representation(w));
    CHECK(back == w);
}

TEST_CASE("loading rejects invalid reps and malformed input") {
    CHECK_THROWS_AS(load_representation("not json"), FormatError);

    // a rep whose relation fails must be rejected on load
    json j;
    j["presentation"] = json{{"kind", "local"},
                             {"n", 2},
                             {"gram", json::array({json::array({1, 0}), json::array({0, 1})})},
                             {"field", json{{"p", 5}}}};
    j["dims"] = json{{"v", 1}};
    j["arrows"] = json{{"x1", json::array({json::array({1})})},
                       {"x2", json::array({json::array({0})})}};
    CHECK_THROWS_AS(representation_from_json(j), InvalidRepresentationError);
}

TEST_CASE("layering json") {
    Layering l = Layering::single({2, 3, 2});
    CHECK(layering_from_json(layering_to_json(l)) == l);
    Layering l2{{{1, 2}, {0, 1}}};
    CHECK(layering_from_json(layering_to_json(l2)) == l2);
}
