#include <doctest.h>

#include <random>

#include "qlab/error.hpp"
#include "qlab/series.hpp"

using namespace qlab;

namespace {
const RationalFunction T = RationalFunction::t_power(1);

SeriesRF z_monomial(const DimVector& box, const DimVector& d, RationalFunction c = RationalFunction(1)) {
    SeriesRF s(box);
    s.set(d, std::move(c));
    return s;
}

SeriesRF random_series(std::mt19937& rng, const DimVector& box, bool zero_constant) {
    std::uniform_int_distribution<int> coeff(-2, 2), tdeg(0, 1);
    SeriesRF s(box);
    for (const DimVector& k : detail::box_keys_graded(box)) {
        if (zero_constant && is_zero(k)) continue;
        const int a = coeff(rng);
        if (a == 0) continue;
        s.set(k, RationalFunction(LaurentPoly::monomial(BigRational(a), tdeg(rng))));
    }
    return s;
}
} // namespace

TEST_CASE("series product with truncation") {
    const DimVector box{2};
    const SeriesRF one = SeriesRF::one(box);
    const SeriesRF z = z_monomial(box, {1});
    SeriesRF f = one + z;       // 1 + z
    SeriesRF g = one - z;       // 1 - z
    const SeriesRF prod = f * g;
    CHECK(prod.coeff({0}) == RationalFunction(1));
    CHECK(prod.coeff({1}).is_zero());
    CHECK(prod.coeff({2}) == RationalFunction(-1));

    CHECK(f * one == f);

    const SeriesRF z_small = z_monomial({1}, {1});
    CHECK((z_small * z_small).is_zero()); // z^2 falls outside box (1)

    CHECK_THROWS_AS((void)(z * z_small), UsageError);
}

TEST_CASE("series inverse") {
    const DimVector box{4};
    const SeriesRF one = SeriesRF::one(box);
    SeriesRF f = one - z_monomial(box, {1});
    const SeriesRF inv = series_inverse(f);
    for (int k = 0; k <= 4; ++k) CHECK(inv.coeff({k}) == RationalFunction(1)); // geometric series
    CHECK(series_inverse(one) == one);
    CHECK(f * inv == one);

    // inverse(1 - t z): multiply back and compare to 1
    SeriesRF g = one - z_monomial(box, {1}, T);
    const SeriesRF ginv = series_inverse(g);
    CHECK(g * ginv == one);
    for (int k = 0; k <= 4; ++k) CHECK(ginv.coeff({k}) == T.pow(k));

    SeriesRF no_const(box);
    no_const.set({1}, RationalFunction(1));
    CHECK_THROWS_AS((void)series_inverse(no_const), UsageError);
}

TEST_CASE("adams operator on basis monomials") {
    const DimVector box{3};
    const SeriesRF f = z_monomial(box, {1}, T); // t z
    const SeriesRF f2 = adams(2, f);
    CHECK(f2.coeff({2}) == T.pow(2));
    CHECK(f2.coeff({1}).is_zero());
    CHECK(adams(1, f) == f);

    // psi_2(1/(1-t) z) = 1/(1-t^2) z^2
    const RationalFunction c = RationalFunction::one_minus_t_power_inverse(1);
    const SeriesRF g = adams(2, z_monomial(box, {1}, c));
    CHECK(g.coeff({2}) == RationalFunction::one_minus_t_power_inverse(2));

    // pushing past the box drops the term
    CHECK(adams(4, f).is_zero());
}

TEST_CASE("pleth_exp of a single monomial is a geometric series") {
    const DimVector box{0, 3};
    SeriesRF f(box);
    f.set({0, 1}, RationalFunction(1));
    const SeriesRF e = pleth_exp(f);
    for (int k = 0; k <= 3; ++k) CHECK(e.coeff({0, k}) == RationalFunction(1));

    CHECK(pleth_exp(SeriesRF(box)) == SeriesRF::one(box));

    SeriesRF bad(box);
    bad.set({0, 0}, RationalFunction(1));
    CHECK_THROWS_AS((void)pleth_exp(bad), UsageError);
}

TEST_CASE("pleth_exp(t z) equals the expansion of 1/(1-t z)") {
    const DimVector box{5};
    const SeriesRF f = z_monomial(box, {1}, T);
    // independent route: series inverse of 1 - t z
    const SeriesRF oracle = series_inverse(SeriesRF::one(box) - f);
    CHECK(pleth_exp(f) == oracle);
}

TEST_CASE("pleth_log basics") {
    const DimVector box{3};
    const SeriesRF geom = series_inverse(SeriesRF::one(box) - z_monomial(box, {1}));
    const SeriesRF lg = pleth_log(geom);
    CHECK(lg.coeff({1}) == RationalFunction(1));
    CHECK(lg.coeff({2}).is_zero());
    CHECK(lg.coeff({3}).is_zero());

    CHECK(pleth_log(SeriesRF::one(box)).is_zero());

    SeriesRF bad(box);
    CHECK_THROWS_AS((void)pleth_log(bad), UsageError);
}

TEST_CASE("pleth round-trip on a two-variable example") {
    const DimVector box{2, 2};
    SeriesRF f(box);
    f.set({1, 0}, T);
    f.set({0, 1}, RationalFunction(1));
    CHECK(pleth_log(pleth_exp(f)) == f);
}

TEST_CASE("pleth round-trip on random series") {
    std::mt19937 rng(41);
    for (int i = 0; i < 20; ++i) {
        const DimVector box = (i % 2 == 0) ? DimVector{3} : DimVector{2, 2};
        const SeriesRF f = random_series(rng, box, true);
        CHECK(pleth_log(pleth_exp(f)) == f);
        const SeriesRF g = pleth_exp(f);
        CHECK(pleth_exp(pleth_log(g)) == g);
    }
}

TEST_CASE("adams is multiplicative, Exp turns sums into products") {
    std::mt19937 rng(43);
    for (int i = 0; i < 15; ++i) {
        const DimVector box{2, 2};
        const SeriesRF f = random_series(rng, box, true);
        const SeriesRF g = random_series(rng, box, true);
        for (long k : {2L, 3L}) CHECK(adams(k, f * g) == adams(k, f) * adams(k, g));
        CHECK(pleth_exp(f + g) == pleth_exp(f) * pleth_exp(g));
    }
}

TEST_CASE("evaluate_t substitutes exactly and reports bad points") {
    const DimVector box{1};
    const RationalFunction c(LaurentPoly(1), LaurentPoly::t_power(1) - LaurentPoly(1)); // 1/(t-1)
    const SeriesRF f = z_monomial(box, {1}, c);
    CHECK(evaluate_t(f, BigRational(2)).coeff({1}) == BigRational(1));
    CHECK(evaluate_t(f, BigRational(3)).coeff({1}) == BigRational(1, 2));
    CHECK_THROWS_AS((void)evaluate_t(f, BigRational(1)), UsageError);

    // denominator vanishing away from t=1 is reported with the monomial
    const RationalFunction d(LaurentPoly(1), LaurentPoly::t_power(1) - LaurentPoly(2));
    CHECK_THROWS_WITH_AS((void)evaluate_t(z_monomial(box, {1}, d), BigRational(2)),
                         doctest::Contains("z^[1]"), CheckError);
}

TEST_CASE("evaluate_t is a ring map") {
    std::mt19937 rng(47);
    const BigRational q(3);
    for (int i = 0; i < 10; ++i) {
        const DimVector box{2, 1};
        const SeriesRF f = random_series(rng, box, false);
        const SeriesRF g = random_series(rng, box, false);
        CHECK(evaluate_t(f * g, q) == evaluate_t(f, q) * evaluate_t(g, q));
        CHECK(evaluate_t(f + g, q) == evaluate_t(f, q) + evaluate_t(g, q));
    }
}

TEST_CASE("graded key enumeration is exhaustive and graded") {
    const auto keys = detail::box_keys_graded({2, 1});
    REQUIRE(keys.size() == 6);
    CHECK(keys.front() == DimVector{0, 0});
    for (size_t i = 1; i < keys.size(); ++i) CHECK(total(keys[i - 1]) <= total(keys[i]));
}

TEST_CASE("total-degree capping") {
    SeriesRF f({2, 2});
    f.set({1, 0}, RationalFunction(1));
    f.set({1, 1}, RationalFunction(2));
    f.set({2, 2}, RationalFunction(3));
    const SeriesRF g = truncate_total_degree(f, 2);
    CHECK(g.coeff({1, 0}) == RationalFunction(1));
    CHECK(g.coeff({1, 1}) == RationalFunction(2));
    CHECK(g.coeff({2, 2}).is_zero());
    CHECK(g.box() == f.box());
}

TEST_CASE("moebius values") {
    CHECK(detail::moebius(1) == 1);
    CHECK(detail::moebius(2) == -1);
    CHECK(detail::moebius(4) == 0);
    CHECK(detail::moebius(6) == 1);
    CHECK(detail::moebius(12) == 0);
}
