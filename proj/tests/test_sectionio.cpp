#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "holoform/sectionio.hpp"
#include "holoform/structures.hpp"

using namespace holoform;

TEST_CASE("section write/read round-trip is the identity") {
    Section g = construct_pn(3);
    std::string text = write_section(g);
    Section back = read_section(text);
    CHECK(write_section(back) == text);
    CHECK(back.degree == g.degree);
    CHECK(back.chart_forms.size() == g.chart_forms.size());
    for (const auto& [cid, f] : g.chart_forms) CHECK(back.chart_forms.at(cid) == f);

    // torus product section round-trips too
    Form omega(4, 2);
    omega.add_term({0, 1}, LaurentPoly::constant(4, Scalar(1)));
    omega.add_term({2, 3}, LaurentPoly::constant(4, Scalar(1)));
    std::map<ChartId, Form> tf;
    tf[{0}] = omega;
    Section tor = make_section(ChartModel::torus(4), BundleDescriptor::trivial(1), 2, tf);
    Section prod = product_structure(tor, g);
    std::string ptext = write_section(prod);
    Section pback = read_section(ptext);
    CHECK(write_section(pback) == ptext);
    CHECK(model_to_string(pback.model) == model_to_string(prod.model));
}

TEST_CASE("model string round-trip") {
    CHECK(model_to_string(ChartModel::projective(3)) == "P3");
    CHECK(model_to_string(ChartModel::torus(4)) == "T4");
    ChartModel prod = ChartModel::product(ChartModel::torus(4), ChartModel::projective(3));
    CHECK(model_to_string(prod) == "T4 x P3");
    CHECK(model_to_string(model_from_string("T4 x P3")) == "T4 x P3");
    CHECK_THROWS(model_from_string("Q3"));
    CHECK_THROWS(model_from_string(""));
}

TEST_CASE("certificate round-trip is byte-identical") {
    Certificate c;
    c.add("verdict", "p-contact");
    c.add("model", "P3");
    c.add("seed", "0");
    c.body.push_back("chart 0 constant 1");
    c.body.push_back("chart 1 constant -1");
    std::string text = write_certificate(c);
    Certificate back = read_certificate(text);
    CHECK(back.headers == c.headers);
    CHECK(back.body == c.body);
    CHECK(write_certificate(back) == text);
}

TEST_CASE("malformed input reports the offending line") {
    // wrong magic line
    CHECK_THROWS_WITH_AS(read_section("bogus v1\n"), doctest::Contains("line 1"),
                         std::invalid_argument);
    // corrupt a valid file mid-stream
    std::string good = write_section(construct_pn(3));
    std::string bad = good;
    auto pos = bad.find("chart 1");
    REQUIRE(pos != std::string::npos);
    bad.replace(pos, 7, "chart x");
    CHECK_THROWS_AS(read_section(bad), std::invalid_argument);
    // certificate without the versioned header
    CHECK_THROWS_WITH_AS(read_certificate("nope\n"), doctest::Contains("line 1"),
                         std::invalid_argument);
    // truncated certificate body
    Certificate c;
    c.add("k", "v");
    c.body.push_back("x");
    std::string ct = write_certificate(c);
    auto bpos = ct.rfind("end body");
    REQUIRE(bpos != std::string::npos);
    CHECK_THROWS_AS(read_certificate(ct.substr(0, bpos)), std::invalid_argument);
}
