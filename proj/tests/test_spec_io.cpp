#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace strtop;
using namespace testing_support;

TEST_CASE("field selectors", "[spec]") {
    REQUIRE(std::holds_alternative<Rationals>(parse_field("Q")));
    REQUIRE(std::get<PrimeField>(parse_field("Fp:7")) == prime_field(7));
    REQUIRE_THROWS_AS(parse_field("R"), SpecError);
    REQUIRE_THROWS_AS(parse_field("Fp:x"), SpecError);
    REQUIRE_THROWS_AS(parse_field("Fp:9"), Error);
}

TEST_CASE("shipped model files match the builders", "[spec]") {
    Rationals Q;
    auto models = standard_models(Q);
    const std::vector<std::string> files{"s2", "s3", "cp2", "s3xs3"};
    for (std::size_t i = 0; i < files.size(); ++i) {
        INFO(files[i]);
        auto F = from_spec_file(model_path(files[i]), Q);
        REQUIRE(F.algebra() == models[i].A.algebra());
        REQUIRE(F.pairing_rows() == models[i].A.pairing_rows());
        REQUIRE(F.dimension() == models[i].A.dimension());
    }
    auto D = from_spec_file(model_path("s7d"), Q);
    REQUIRE(D.algebra() == s7d(Q).algebra());
    auto F7 = from_spec_file(model_path("cp2"), prime_field(7));
    REQUIRE(F7.algebra() == cp_model(prime_field(7), 2).algebra());
}

TEST_CASE("spec round trip", "[spec]") {
    Rationals Q;
    std::vector<FrobeniusAlgebra<Rationals>> models{s7d(Q), cp_model(Q, 3), product_model(sphere_model(Q, 2), s7d(Q))};
    for (const auto& [name, F] : standard_models(Q)) models.push_back(F);
    for (const auto& F : models) {
        auto j = to_spec(F);
        auto G = frobenius_from_spec(json::parse(j.dump()), Q);
        REQUIRE(G.algebra() == F.algebra());
        REQUIRE(G.pairing_rows() == F.pairing_rows());
        REQUIRE(to_spec(G) == j);
    }
    auto F2 = sphere_model(prime_field(2), 3);
    REQUIRE(to_spec(F2)["field"] == "Fp:2");
    REQUIRE(frobenius_from_spec(to_spec(F2), prime_field(2)).algebra() == F2.algebra());
}

TEST_CASE("dimension is inferred from the pairing", "[spec]") {
    Rationals Q;
    auto j = to_spec(cp_model(Q, 2));
    j.erase("dimension");
    REQUIRE(frobenius_from_spec(j, Q).dimension() == 4);
    j["pairing"] = json::array();
    REQUIRE_THROWS_AS(frobenius_from_spec(j, Q), SpecError);
}

TEST_CASE("malformed specs are rejected", "[spec]") {
    Rationals Q;
    const auto good = to_spec(sphere_model(Q, 2));
    auto bad = [&](auto mutate) {
        json j = good;
        mutate(j);
        return j;
    };
    REQUIRE_THROWS_AS(frobenius_from_spec(bad([](json& j) { j.erase("basis"); }), Q), SpecError);
    REQUIRE_THROWS_AS(frobenius_from_spec(bad([](json& j) { j["basis"] = json::array(); }), Q), SpecError);
    REQUIRE_THROWS_AS(frobenius_from_spec(bad([](json& j) { j["unit"] = "w"; }), Q), SpecError);
    REQUIRE_THROWS_AS(frobenius_from_spec(bad([](json& j) { j["basis"][1]["degree"] = "two"; }), Q), SpecError);
    REQUIRE_THROWS_AS(frobenius_from_spec(bad([](json& j) { j["basis"][1]["label"] = "1"; }), Q), SpecError);
    REQUIRE_THROWS_AS(frobenius_from_spec(bad([](json& j) { j.erase("pairing"); }), Q), SpecError);
    REQUIRE_THROWS_AS(frobenius_from_spec(bad([](json& j) { j["pairing"][0]["value"] = 1.5; }), Q), SpecError);
    REQUIRE_THROWS_AS(frobenius_from_spec(bad([](json& j) { j["dimension"] = "2"; }), Q), SpecError);
    // v·v lands in degree 4, outside the space
    REQUIRE_THROWS_AS(frobenius_from_spec(bad([](json& j) {
                          j["mul"].push_back({{"left", "v"}, {"right", "v"}, {"result", {{{"label", "v"}, {"coeff", 1}}}}});
                      }),
                                          Q),
                      SpecError);
    REQUIRE_THROWS_AS(read_json_file(model_path("does_not_exist")), SpecError);
}

TEST_CASE("element json round trip", "[spec]") {
    Rationals Q;
    auto F = cp_model(Q, 2);
    const auto& A = F.algebra();
    std::mt19937_64 rng(default_seed);
    for (int i = 0; i < 30; ++i) {
        auto x = random_chain(A, rng, std::uniform_int_distribution<int>(0, 8)(rng), 3);
        x = x.scaled(Q.parse("3/7"));
        REQUIRE(chain_from_json(A, json::parse(chain_to_json(A, x).dump())) == x);
        auto f = random_cochain(A, rng, std::uniform_int_distribution<int>(-6, 4)(rng), 3);
        REQUIRE(cochain_from_json(A, json::parse(cochain_to_json(A, f).dump())) == f);
    }
    Vec<Rational> e = A.basis("x");
    e.add(A.find("x2"), Q.parse("-5/2"));
    REQUIRE(element_from_json(A, element_to_json(A, e)) == e);
    REQUIRE(element_to_json(A, e).dump() == R"([{"label":"x","coeff":"1"},{"label":"x2","coeff":"-5/2"}])");

    REQUIRE_THROWS_AS(chain_from_json(A, json::parse(R"([{"word":"x","module":"1","coeff":1}])")), SpecError);
    REQUIRE_THROWS_AS(chain_from_json(A, json::parse(R"([{"word":["y"],"module":"1","coeff":1}])")), SpecError);
    REQUIRE_THROWS_AS(cochain_from_json(A, json::parse(R"({"inputs":[]})")), SpecError);

    auto F2 = prime_field(2);
    auto B = sphere_model(F2, 3);
    HochschildElement<Mod> y(ChainWord{{B.algebra().find("v")}, B.algebra().find("v")}, F2.one());
    REQUIRE(chain_to_json(B.algebra(), y).dump() == R"([{"word":["v"],"module":"v","coeff":1}])");
}
