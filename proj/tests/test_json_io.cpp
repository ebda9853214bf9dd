#include <zng/group_library.hpp>
#include <zng/json_io.hpp>

#include <gtest/gtest.h>

using namespace zng;

TEST(JsonIo, DecompositionSchema) {
    const auto report = decomposition_report(decompose_modulus(group_by_name("c5xc5"), 36));
    const auto j = ojson::parse(emit_json(report));
    EXPECT_EQ(j["group"], "c5xc5");
    EXPECT_EQ(j["n"], 36);
    ASSERT_EQ(j["primes"].size(), 2u);
    for (std::size_t i = 0; i < 2; ++i) {
        const auto& pr = j["primes"][i];
        EXPECT_EQ(pr["p"], i == 0 ? 2 : 3);
        EXPECT_EQ(pr["r"], 2);
        EXPECT_TRUE(pr["dimension_check"].get<bool>());
        ASSERT_EQ(pr["components"].size(), 2u);
        EXPECT_EQ(pr["components"][0]["matrix_size"], 1);
        EXPECT_EQ(pr["components"][0]["ring"]["m"], 1);
        EXPECT_EQ(pr["components"][0]["multiplicity"], 1);
        EXPECT_EQ(pr["components"][1]["ring"]["m"], 4);
        EXPECT_EQ(pr["components"][1]["multiplicity"], 6);
        EXPECT_EQ(pr["components"][1]["ring"]["modulus"].size(), 5u);
    }
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    EXPECT_EQ(keys, (std::vector<std::string>{"group", "n", "primes"}));
}

TEST(JsonIo, RoundTrip) {
    const auto dec = decomposition_report(decompose_modulus(extraspecial27(), 8 * 5));
    EXPECT_EQ(parse_json<DecompositionReport>(emit_json(dec)), dec);

    ZGRing R(group_by_name("s3"), Zmod(5, 2));
    auto comps = decompose(R, strong_shoda_pairs(R.group_ptr()));
    UnitsReport units{"s3", 5, 2, {}, CertificationReport{"layered", 10, 10, true}, "n"};
    for (const auto& g : unit_group_generators(R, comps)) units.generators.push_back(generator_report(g));
    units.generators.push_back({-1, "fixture", std::nullopt, "1 + g"});
    EXPECT_EQ(parse_json<UnitsReport>(emit_json(units)), units);
    units.certification.reset();
    EXPECT_EQ(parse_json<UnitsReport>(emit_json(units)), units);

    const auto gal = galois_report(GaloisRing(PrimePower(2, 3), 2));
    EXPECT_EQ(parse_json<GaloisReport>(emit_json(gal)), gal);
    VerifyReport ver{{{"c5", "sum", 2, 2, true, "x"}, {"c5", "dimension", 3, 1, false, "y"}}};
    EXPECT_EQ(parse_json<VerifyReport>(emit_json(ver)), ver);
}

TEST(JsonIo, GeneratorSchemaAndDeterminism) {
    auto fx = z2r_c5_fixture(3);
    const auto j = ojson::parse(emit_json(generator_report(fx.generators[2])));
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    EXPECT_EQ(keys, (std::vector<std::string>{"component", "kind", "order", "element"}));
    EXPECT_EQ(j["order"], 60);
    EXPECT_EQ(j["kind"], "fixture");
    EXPECT_TRUE(ojson::parse(emit_json(GeneratorReport{0, "diagonal", std::nullopt, "1"}))["order"].is_null());
    // equal inputs give byte-identical output
    const auto a = emit_json(decomposition_report(decompose_modulus(group_by_name("s4"), 25)));
    const auto b = emit_json(decomposition_report(decompose_modulus(group_by_name("s4"), 25)));
    EXPECT_EQ(a, b);
}
