#include <gtest/gtest.h>

#include <sstream>

#include "orbifold/serialization.hpp"

using namespace orbifold;

TEST(Serialization, ElementForms)
{
    const Prime p(3);
    const auto x = parse_element("2+g^2", p);
    EXPECT_EQ(to_json(x).dump(), "[2,0,1]");
    EXPECT_EQ(element_from_json(Json::parse("[2,0,1]"), p), x);
    EXPECT_EQ(element_from_json(Json::parse("[-1,3,4]"), p), x);
    EXPECT_EQ(element_from_json(Json("-1+g^2"), p), x);
    EXPECT_EQ(element_from_json(Json::parse(R"({"p": 3, "coeffs": [2, 0, 1]})"), p), x);
    EXPECT_THROW(element_from_json(Json::parse(R"({"p": 5, "coeffs": [2, 0, 1]})"), p), MismatchedPrime);
    EXPECT_THROW(element_from_json(Json::parse("[1.5, 0, 0]"), p), Error);
    EXPECT_THROW(element_from_json(Json::parse("true"), p), Error);
    EXPECT_THROW(element_from_json(Json("1+h"), p), ParseError);
}

TEST(Serialization, ParamsRoundTrip)
{
    for (int q : {3, 5}) {
        const Prime p(q);
        auto params = build_candidate(GroupAlgebraElement::from_index(p, 17), GroupAlgebraElement::from_index(p, 101));
        params.kappa_c() = parse_element("1+g", p);
        params = add_coboundary(params, {parse_element("g", p), parse_element("1", p)});
        EXPECT_EQ(params_from_json(to_json(params)), params);
        std::istringstream in(to_json(params).dump());
        EXPECT_EQ(load_params(in), params);
    }
}

TEST(Serialization, ParamsShape)
{
    const Prime p(3);
    const auto j = to_json(DeformationParams(p));
    EXPECT_EQ(j.at("p"), 3);
    EXPECT_EQ(j.at("lambda").size(), 3U);
    EXPECT_EQ(j.at("kappaL").at("v2").dump(), "[0,0,0]");
    Json missing = j;
    missing.erase("kappaC");
    EXPECT_EQ(params_from_json(missing), DeformationParams(p));
}

TEST(Serialization, MalformedParams)
{
    std::istringstream broken("{\"p\": 3, ");
    EXPECT_THROW(load_params(broken), Error);
    EXPECT_THROW(params_from_json(Json::parse(R"({"p": 4, "lambda": []})")), Error);
    EXPECT_THROW(params_from_json(Json::parse(R"({"p": 3, "lambda": [[0, 0]]})")), Error);
    EXPECT_THROW(params_from_json(Json::parse(R"({"lambda": []})")), Error);
    EXPECT_THROW(params_from_json(Json::parse("[]")), Error);
}

TEST(Serialization, ReportShapes)
{
    const Prime p(3);
    const auto bad = build_candidate(parse_element("g", p), parse_element("1-g", p));
    const auto j = to_json(check_all(bad));
    EXPECT_FALSE(j.at("passed").get<bool>());
    EXPECT_EQ(j.at("conditions").size(), 6U);
    EXPECT_FALSE(j.at("conditions").at(1).at("witnesses").empty());
    const auto assoc = to_json(check_associativity(rules_from_params(bad), 3));
    EXPECT_EQ(assoc.at("witness").at("x"), "g");
    const auto chains = to_json(verify_chain_maps(p, 2));
    EXPECT_TRUE(chains.at("passed").get<bool>());
}

TEST(Serialization, SolverOutputs)
{
    const Prime p(3);
    const auto records = enumerate_solutions(p, EnumerationMode::closed_form);
    std::ostringstream csv;
    write_solutions_csv(csv, records);
    std::size_t lines = 0;
    for (char c : csv.str()) lines += c == '\n';
    EXPECT_EQ(lines, 82U);
    EXPECT_EQ(csv.str().substr(0, 4), "b,a\n");
    std::ostringstream text;
    write_table_text(text, p, solution_table(records));
    EXPECT_EQ(text.str().rfind("k=3 | b: 0 | a: F_3G (all 27 elements)\nk=0 | b: ", 0), 0U);
    EXPECT_EQ(census_to_json(p, census(p)).at("census").size(), 4U);
    EXPECT_EQ(records_to_json(p, records).at("records").size(), 27U);
}
