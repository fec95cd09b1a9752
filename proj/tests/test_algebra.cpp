#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "arcspace/poly.hpp"
#include "arcspace/series.hpp"
#include "arcspace/snf.hpp"

using namespace arcspace;

namespace {

MultiPoly cusp_poly(Field f) {
    // y^2 - x^3 in variables (x, y)
    MultiPoly g = MultiPoly::monomial(f, {0, 2}, FieldValue::one(f));
    g = g - MultiPoly::monomial(f, {3, 0}, FieldValue::one(f));
    return g;
}

TruncSeries random_series(Field f, int prec, std::mt19937_64& rng, int max_coeff = 9) {
    std::uniform_int_distribution<int> d(-max_coeff, max_coeff);
    std::vector<FieldValue> c;
    c.reserve(prec);
    for (int i = 0; i < prec; ++i) c.emplace_back(f, d(rng));
    return TruncSeries(f, std::move(c));
}

MultiPoly random_poly(Field f, int nvars, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(0, 4), expd(0, 3), cd(-9, 9);
    MultiPoly p = MultiPoly::zero(f, nvars);
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        std::vector<int> e(nvars);
        for (int i = 0; i < nvars; ++i) e[i] = expd(rng);
        p = p + MultiPoly::monomial(f, e, FieldValue(f, cd(rng)));
    }
    return p;
}

SeriesMatrix random_matrix(Field f, int rows, int cols, int prec, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> shift(0, 4);
    std::vector<TruncSeries> e;
    for (int i = 0; i < rows * cols; ++i) {
        TruncSeries s = random_series(f, prec, rng);
        int k = shift(rng);
        // bias toward entries of positive order
        e.push_back(s.shift_up(k).truncate(prec));
    }
    return SeriesMatrix(rows, cols, std::move(e));
}

}  // namespace

TEST_CASE("field arithmetic basics") {
    Field q = rationals(), f5 = prime_field(5);
    CHECK(FieldValue(q, Rational(2, 3)) + FieldValue(q, Rational(1, 3)) == FieldValue::one(q));
    CHECK(FieldValue(f5, 7) == FieldValue(f5, 2));
    CHECK((FieldValue(f5, 3) * FieldValue(f5, 2)).rep() == 1);
    CHECK(FieldValue(f5, 2).inverse().rep() == 3);
    CHECK_THROWS_AS(FieldValue(f5, 0).inverse(), DivisionByZero);
    CHECK_THROWS_AS(FieldValue(q, 1) / FieldValue(q, 0), DivisionByZero);
    // rational reduced mod p
    CHECK(FieldValue(f5, Rational(1, 2)).rep() == 3);
    CHECK_THROWS_AS(FieldValue(f5, Rational(1, 5)), DivisionByZero);
}

TEST_CASE("polynomial evaluation on series") {
    Field q = rationals();
    MultiPoly g = cusp_poly(q);

    SUBCASE("arc on the curve gives zero") {
        std::vector<TruncSeries> pt{TruncSeries::t_power(q, 2, 12),
                                    TruncSeries::t_power(q, 3, 12)};
        TruncSeries r = g.eval_series(pt);
        CHECK(r.known_zero());
        CHECK(r.precision() == 12);
    }
    SUBCASE("perturbed arc") {
        TruncSeries y = TruncSeries::t_power(q, 3, 12) + TruncSeries::t_power(q, 4, 12);
        std::vector<TruncSeries> pt{TruncSeries::t_power(q, 2, 12), y};
        TruncSeries r = g.eval_series(pt);
        // 2t^7 + t^8
        CHECK(r.order() == Order::at(7));
        CHECK(r.coeff(7) == FieldValue(q, 2));
        CHECK(r.coeff(8) == FieldValue(q, 1));
        for (int i = 0; i < 12; ++i)
            if (i != 7 && i != 8) CHECK(r.coeff(i).is_zero());
    }
    SUBCASE("constant polynomial") {
        MultiPoly one = MultiPoly::constant(q, 2, 1);
        std::vector<TruncSeries> pt{TruncSeries::t_power(q, 5, 8),
                                    TruncSeries::zero(q, 8)};
        TruncSeries r = one.eval_series(pt);
        CHECK(r == TruncSeries::constant(q, 1, 8));
    }
    SUBCASE("dimension mismatch") {
        std::vector<TruncSeries> pt{TruncSeries::zero(q, 4)};
        CHECK_THROWS_AS(g.eval_series(pt), DimensionMismatch);
    }
}

TEST_CASE("series order queries") {
    Field q = rationals();
    TruncSeries s = TruncSeries::t_power(q, 3, 10).scale(FieldValue(q, 2)) +
                    TruncSeries::t_power(q, 4, 10);
    CHECK(s.order() == Order::at(3));
    CHECK(TruncSeries::zero(q, 10).order() == Order::at_least(10));
    CHECK(TruncSeries::t_power(q, 9, 10).order() == Order::at(9));
}

TEST_CASE("series division semantics") {
    Field q = rationals();
    TruncSeries u = TruncSeries::constant(q, 1, 8) + TruncSeries::t_power(q, 1, 8);
    TruncSeries inv = u.unit_inverse();
    CHECK((u * inv).is_known_one());
    TruncSeries t = TruncSeries::t_power(q, 1, 8);
    CHECK_THROWS_AS(t.unit_inverse(), NonUnitDivision);
    CHECK_THROWS_AS(TruncSeries::zero(q, 8).unit_inverse(), NonUnitDivision);
    CHECK_THROWS_AS(u.shift_down(1), NonUnitDivision);
    CHECK(t.shift_down(1).is_known_one());
}

TEST_CASE("snf on fixed matrices") {
    Field q = rationals();
    int P = 10;

    SUBCASE("already diagonal") {
        SeriesMatrix m(q, 2, 2, P);
        m.set(0, 0, TruncSeries::t_power(q, 1, P));
        m.set(1, 1, TruncSeries::t_power(q, 2, P));
        SnfResult r = snf(m);
        REQUIRE(r.orders.size() == 2);
        CHECK(r.orders[0] == Order::at(1));
        CHECK(r.orders[1] == Order::at(2));
        CHECK(r.U == SeriesMatrix::identity(q, 2, P));
        CHECK(r.V == SeriesMatrix::identity(q, 2, P));
    }
    SUBCASE("antidiagonal") {
        SeriesMatrix m(q, 2, 2, P);
        m.set(0, 1, TruncSeries::t_power(q, 1, P));
        m.set(1, 0, TruncSeries::t_power(q, 2, P));
        SnfResult r = snf(m);
        REQUIRE(r.orders.size() == 2);
        CHECK(r.orders[0] == Order::at(1));
        CHECK(r.orders[1] == Order::at(2));
        CHECK(r.U.is_unimodular());
        CHECK(r.V.is_unimodular());
    }
    SUBCASE("cusp column") {
        std::vector<TruncSeries> col{
            TruncSeries::t_power(q, 4, P).scale(FieldValue(q, -3)),
            TruncSeries::t_power(q, 3, P).scale(FieldValue(q, 2))};
        SeriesMatrix m(2, 1, col);
        SnfResult r = snf(m);
        REQUIRE(r.orders.size() == 1);
        CHECK(r.orders[0] == Order::at(3));
    }
    SUBCASE("zero matrix reports precision bound") {
        SeriesMatrix m(q, 2, 2, P);
        SnfResult r = snf(m);
        REQUIRE(r.orders.size() == 2);
        CHECK(r.orders[0] == Order::at_least(P));
        CHECK(r.orders[1] == Order::at_least(P));
        CHECK_THROWS_AS(r.total_order(), InsufficientPrecision);
    }
}

TEST_CASE("ring axioms under random inputs") {
    for (Field f : {rationals(), prime_field(5)}) {
        std::mt19937_64 rng(20240 + f.p);
        for (int it = 0; it < 1000; ++it) {
            TruncSeries a = random_series(f, 12, rng);
            TruncSeries b = random_series(f, 12, rng);
            TruncSeries c = random_series(f, 12, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a + b == b + a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a - a).known_zero());

            MultiPoly p1 = random_poly(f, 3, rng);
            MultiPoly p2 = random_poly(f, 3, rng);
            MultiPoly p3 = random_poly(f, 3, rng);
            CHECK((p1 + p2) + p3 == p1 + (p2 + p3));
            CHECK(p1 * p2 == p2 * p1);
            CHECK((p1 * p2) * p3 == p1 * (p2 * p3));
            CHECK(p1 * (p2 + p3) == p1 * p2 + p1 * p3);
            CHECK((p1 - p1).is_zero());
        }
    }
}

TEST_CASE("snf reconstruction on random matrices") {
    for (Field f : {rationals(), prime_field(5)}) {
        std::mt19937_64 rng(777 + f.p);
        std::uniform_int_distribution<int> dim(1, 5);
        for (int it = 0; it < 1000; ++it) {
            int rows = dim(rng), cols = dim(rng);
            SeriesMatrix m = random_matrix(f, rows, cols, 20, rng);
            SnfResult r = snf(m);
            CHECK(r.U.is_unimodular());
            CHECK(r.V.is_unimodular());
            SeriesMatrix d = r.U * m * r.V;
            int p = r.result_precision;
            // entries: t^{e_i} on the diagonal, zero elsewhere, to precision
            for (int i = 0; i < rows; ++i)
                for (int j = 0; j < cols; ++j) {
                    TruncSeries want = TruncSeries::zero(f, p);
                    if (i == j && i < static_cast<int>(r.orders.size()) &&
                        r.orders[i].finite && r.orders[i].k < p)
                        want = TruncSeries::t_power(f, r.orders[i].k, p);
                    CHECK(d.at(i, j).agrees_with(want, p));
                }
            // orders nondecreasing
            for (std::size_t i = 1; i < r.orders.size(); ++i)
                if (r.orders[i - 1].finite && r.orders[i].finite)
                    CHECK(r.orders[i - 1].k <= r.orders[i].k);
        }
    }
}

TEST_CASE("snf orders stable under precision increase") {
    Field f = prime_field(5);
    std::mt19937_64 rng(31337);
    for (int it = 0; it < 200; ++it) {
        SeriesMatrix m20 = random_matrix(f, 3, 3, 20, rng);
        SeriesMatrix m30(f, 3, 3, 30);
        // same entries, extended by zeros (a different representative of the
        // same truncation); finite orders must not change when they were
        // certified at the lower precision
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                std::vector<FieldValue> c;
                for (int k = 0; k < 20; ++k) c.push_back(m20.at(i, j).coeff(k));
                for (int k = 20; k < 30; ++k) c.push_back(FieldValue::zero(f));
                m30.set(i, j, TruncSeries(f, std::move(c)));
            }
        SnfResult r20 = snf(m20);
        SnfResult r30 = snf(m30);
        for (std::size_t i = 0; i < r20.orders.size(); ++i)
            if (r20.orders[i].finite) {
                REQUIRE(r30.orders[i].finite);
                CHECK(r30.orders[i].k == r20.orders[i].k);
            }
    }
}

TEST_CASE("precision soundness of operations") {
    Field f = rationals();
    std::mt19937_64 rng(4242);
    for (int it = 0; it < 500; ++it) {
        TruncSeries a = random_series(f, 15, rng);
        TruncSeries b = random_series(f, 15, rng);
        // perturb coefficients beyond precision 10: results must agree to
        // their declared precision with the unperturbed computation
        TruncSeries a2 = a.truncate(10);
        TruncSeries b2 = b.truncate(10);
        CHECK((a + b).agrees_with(a2 + b2, (a2 + b2).precision()));
        CHECK((a * b).agrees_with(a2 * b2, (a2 * b2).precision()));
        if (a.is_unit())
            CHECK(a.unit_inverse().agrees_with(a2.unit_inverse(), 10));
    }
}
