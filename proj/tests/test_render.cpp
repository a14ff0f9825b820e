#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eqkl/render.hpp"
#include "test_util.hpp"

using namespace eqkl;
using namespace eqkl::testing;
using nlohmann::json;

TEST_CASE("text rendering") {
    CHECK(to_text(Partition{4, 2, 2, 1}) == "(4,2,2,1)");
    CHECK(to_text(Partition{}) == "()");
    CHECK(to_text(SchurVector()) == "0");
    CHECK(to_text(p_uniform_closed(1, 3)) == "s(4) + t·s(2,2)");
    CHECK(to_text(q_uniform_closed(1, 3)) == "s(2,1,1) + t·s(2,2)");
    CHECK(to_text(char_boolean(2)) ==
          "s(1,1) - t·(s(2) + s(1,1)) + t^2·s(2)");
    CHECK(to_text(q_hat_boolean(3)) == "-s(1,1,1)");
    CHECK(to_text(lr_product(SchurVector(Partition{2, 1}), SchurVector(Partition{2, 1})))
              .find("2·s(3,2,1)") != std::string::npos);

    IntPolynomial kl = IntPolynomial::constant(1);
    kl.add_term(1, BigInt(2));
    CHECK(to_text(kl) == "1 + 2t");
    CHECK(to_text(dimension_poly(char_boolean(2))) == "1 - 2t + t^2");
    CHECK(to_text(IntPolynomial()) == "0");
}

TEST_CASE("latex rendering") {
    CHECK(to_latex(p_uniform_closed(1, 3), "V") == "V_{(4)} + V_{(2,2)} t");
    CHECK(to_latex(p_uniform_closed(1, 5), "V") ==
          "V_{(6)} + V_{(4,2)} t + V_{(2,2,2)} t^{2}");
    CHECK(to_latex(char_boolean(2)) ==
          "s_{(1,1)} - (s_{(2)} + s_{(1,1)}) t + s_{(2)} t^{2}");
    IntPolynomial kl = IntPolynomial::constant(1);
    kl.add_term(2, BigInt(3));
    CHECK(to_latex(kl) == "1 + 3t^{2}");
}

TEST_CASE("json schemas") {
    json jp = Partition{4, 2, 2, 1};
    CHECK(jp.dump() == "[4,2,2,1]");
    CHECK(jp.get<Partition>() == Partition{4, 2, 2, 1});

    json js = SkewShape(Partition{3, 2}, Partition{1});
    CHECK(js.dump() == R"({"inner":[1],"outer":[3,2]})");
    CHECK(js.get<SkewShape>() == SkewShape(Partition{3, 2}, Partition{1}));

    json jv = q_uniform_closed(1, 3);
    CHECK(jv.dump() ==
          R"([{"degree":0,"terms":[{"coeff":1,"partition":[2,1,1]}]},{"degree":1,"terms":[{"coeff":1,"partition":[2,2]}]}])");

    json jkl;
    to_json(jkl, ordinary_kl(1, 3));
    CHECK(jkl.dump() == R"({"coeffs":[[0,"1"],[1,"2"]]})");

    json jb = MatroidId::boolean(3);
    CHECK(jb.dump() == R"({"family":"boolean","n":3})");
    CHECK(matroid_from_json(jb) == MatroidId::boolean(3));
    json ju = MatroidId::uniform(3, 10);
    CHECK(matroid_from_json(ju) == MatroidId::uniform(3, 10));

    const json wrapped = wrap_result(MatroidId::uniform(1, 3), "P", p_uniform_closed(1, 3));
    CHECK(wrapped.at("poly") == "P");
    CHECK(wrapped.at("matroid").at("family") == "uniform");
}

TEST_CASE("json round trips are byte identical") {
    Rng rng;
    for (int trial = 0; trial < 20; ++trial) {
        const GradedSchurVector v = rng.graded(6);
        json j = v;
        const std::string bytes = j.dump();
        const GradedSchurVector back = json::parse(bytes).get<GradedSchurVector>();
        CHECK(back == v);
        json j2 = back;
        CHECK(j2.dump() == bytes);
    }
    for (int m = 0; m <= 3; ++m) {
        for (int d = 1; d <= 5; ++d) {
            json j;
            to_json(j, ordinary_kl(m, d));
            const std::string bytes = j.dump();
            IntPolynomial back;
            from_json(json::parse(bytes), back);
            CHECK(back == ordinary_kl(m, d));
            json j2;
            to_json(j2, back);
            CHECK(j2.dump() == bytes);
        }
    }
    // Negative coefficients survive the trip.
    json jc = char_uniform(2, 3);
    CHECK(json::parse(jc.dump()).get<GradedSchurVector>() == char_uniform(2, 3));
}
