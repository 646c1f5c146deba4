#include <doctest.h>

#include <fstream>

#include "qlab/error.hpp"
#include "qlab/io.hpp"
#include "qlab/verify.hpp"

using namespace qlab;

TEST_CASE("field_of_order factors prime powers") {
    CHECK(field_of_order(4).name() == "2^2");
    CHECK(field_of_order(9).name() == "3^2");
    CHECK(field_of_order(5).name() == "5");
    CHECK_THROWS_AS(field_of_order(6), UsageError);
    CHECK_THROWS_AS(field_of_order(12), UsageError);
}

TEST_CASE("compare_series locates the first differing coefficient") {
    SeriesQ a({2}), b({2});
    a.set({1}, BigRational(3));
    a.set({2}, BigRational(5));
    b.set({1}, BigRational(3));
    b.set({2}, BigRational(7));
    const CheckResult same = compare_series("x", a, a);
    CHECK(same.pass);
    const CheckResult diff = compare_series("x", a, b);
    CHECK(!diff.pass);
    CHECK(diff.detail.find("z^[2]") != std::string::npos);
    CHECK(diff.detail.find("5") != std::string::npos);
    CHECK(diff.detail.find("7") != std::string::npos);
}

TEST_CASE("negative control: a corrupted Kac table fails with a located coefficient") {
    const DimVector box{1, 1};
    KacTable table = kac_polynomials(zoo::a(2), box);
    table.polys[{1, 1}] = LaurentPoly(2); // wrong on purpose
    const FiniteField f2 = FiniteField::make(2, 1);
    const SeriesQ empirical = lambda_series_empirical(zoo::a(2), f2, box);
    const SeriesQ corrupted = evaluate_t(p_series(table), BigRational(2));
    const CheckResult r = compare_series("corrupted", empirical, corrupted);
    CHECK(!r.pass);
    CHECK(r.detail.find("z^[1,1]") != std::string::npos);
}

TEST_CASE("lambda identity sweep on small quivers") {
    for (const CheckResult& r : verify_lambda_identity("a2", zoo::a(2), {1, 1}, {2, 3, 4})) {
        CAPTURE(r.id);
        CAPTURE(r.detail);
        CHECK(r.pass);
    }
    for (const CheckResult& r : verify_lambda_identity("kronecker", zoo::kronecker(), {1, 1}, {2, 3})) {
        CAPTURE(r.id);
        CHECK(r.pass);
    }
}

TEST_CASE("mu identity sweep") {
    for (const CheckResult& r : verify_mu_identity("a2", zoo::a(2), {1, 1}, {2, 3})) {
        CAPTURE(r.id);
        CAPTURE(r.detail);
        CHECK(r.pass);
    }
}

TEST_CASE("commuting identity up to d=2") {
    for (const CheckResult& r : verify_commuting_identity(2, {2, 3})) {
        CAPTURE(r.id);
        CAPTURE(r.detail);
        CHECK(r.pass);
    }
}

TEST_CASE("nakajima and inversion identities for the point quiver") {
    for (const CheckResult& r : verify_nakajima_identity("a1", zoo::point(), 1, 1, {2})) {
        CAPTURE(r.id);
        CAPTURE(r.detail);
        CHECK(r.pass);
    }
    for (const CheckResult& r : verify_inversion_identity("a1", zoo::point(), 1, {2})) {
        CAPTURE(r.id);
        CAPTURE(r.detail);
        CHECK(r.pass);
    }
}

TEST_CASE("strata identity on A2 at q=2") {
    for (const CheckResult& r : verify_strata_identity("a2", zoo::a(2), {1}, {1, 1}, {2})) {
        CAPTURE(r.id);
        CAPTURE(r.detail);
        CHECK(r.pass);
    }
}

TEST_CASE("polynomial count identity for A2") {
    const auto results = verify_polynomial_count("a2", zoo::a(2), {1, 1}, {2, 3, 4}, {5, 9});
    for (const CheckResult& r : results) {
        CAPTURE(r.id);
        CAPTURE(r.detail);
        CHECK(r.pass);
    }
}

TEST_CASE("qbinom suite ids and passes") {
    const auto results = verify_qbinom_identity(4);
    CHECK(all_pass(results));
    CHECK(results.size() == 15); // 0+1+...+4 below-diagonal cases plus 5 diagonal ones
}

TEST_CASE("quiver json round trip") {
    const json doc = json::parse(R"({"vertices":["1","2"],"arrows":[["1","2"]]})");
    const Quiver q = quiver_from_json(doc);
    CHECK(q == zoo::a(2));
    CHECK(quiver_to_json(q) == doc);
    CHECK_THROWS_AS((void)quiver_from_json(json::parse(R"({"vertices":["1"]})")), UsageError);
    CHECK_THROWS_AS((void)quiver_from_json(json::parse(R"({"vertices":["1"],"arrows":[["1"]]})")), UsageError);
}

TEST_CASE("quiver file loading") {
    const std::string path = "test_quiver_tmp.json";
    {
        std::ofstream out(path);
        out << R"({"vertices":["1","2"],"arrows":[["1","2"],["1","2"]]})";
    }
    CHECK(load_quiver(path) == zoo::kronecker());
    CHECK_THROWS_AS((void)load_quiver("does_not_exist.json"), UsageError);
    std::remove(path.c_str());
}

TEST_CASE("series serialization format") {
    SeriesRF s({1, 1});
    s.set({0, 0}, RationalFunction(1));
    s.set({1, 0}, RationalFunction(LaurentPoly::t_power(2) + LaurentPoly(1),
                                   LaurentPoly::t_power(1) - LaurentPoly(1)));
    const json j = series_to_json(s);
    REQUIRE(j.size() == 2);
    CHECK(j[0]["exponent"] == json::array({0, 0}));
    CHECK(j[0]["coefficient"] == "1");
    CHECK(j[1]["exponent"] == json::array({1, 0}));
    CHECK(j[1]["coefficient"] == "(t^2+1)/(t-1)");

    SeriesQ sq({2});
    sq.set({2}, BigRational(8, 3));
    CHECK(series_to_json(sq)[0]["coefficient"] == "8/3");
}

TEST_CASE("kac table serialization uses graded lex order and lowest-first coefficients") {
    const KacTable table = kac_polynomials(zoo::kronecker(), {1, 1});
    const json j = kac_table_to_json(table);
    REQUIRE(j.size() == 3);
    CHECK(j[0]["dim"] == json::array({0, 1}));
    CHECK(j[1]["dim"] == json::array({1, 0}));
    CHECK(j[2]["dim"] == json::array({1, 1}));
    CHECK(j[2]["poly"] == json::array({1, 1})); // t + 1
}

TEST_CASE("dimension list parsing") {
    CHECK(parse_dim_list("1,2,0") == DimVector{1, 2, 0});
    CHECK(parse_dim_list("3") == DimVector{3});
    CHECK_THROWS_AS(parse_dim_list("1,,2"), UsageError);
    CHECK_THROWS_AS(parse_dim_list("x"), UsageError);
}
