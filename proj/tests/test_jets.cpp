#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "arcspace/jets.hpp"

using namespace arcspace;

namespace {

MultiPoly var(Field f, int n, int i) { return MultiPoly::variable(f, n, i); }

AffineVariety cusp_curve(Field f) {
    MultiPoly g = MultiPoly::monomial(f, {0, 2}, FieldValue::one(f)) -
                  MultiPoly::monomial(f, {3, 0}, FieldValue::one(f));
    return AffineVariety{"cusp", f, 2, 1, {"x", "y"}, {g}};
}

AffineVariety affine_line(Field f) {
    return AffineVariety{"A1", f, 1, 1, {"x"}, {}};
}

AffineVariety affine_plane(Field f) {
    return AffineVariety{"A2", f, 2, 2, {"x", "y"}, {}};
}

AffineVariety line_in_plane(Field f) {
    return AffineVariety{"line", f, 2, 1, {"x", "y"}, {var(f, 2, 1)}};
}

AffineVariety cone_surface(Field f) {
    MultiPoly g = MultiPoly::monomial(f, {1, 0, 1}, FieldValue::one(f)) -
                  MultiPoly::monomial(f, {0, 2, 0}, FieldValue::one(f));
    return AffineVariety{"cone", f, 3, 2, {"x", "y", "z"}, {g}};
}

// reference enumeration: all value tuples filtered through the symbolic system
std::vector<std::vector<std::int64_t>> brute_force(const AffineVariety& v, int n,
                                                   std::int64_t q) {
    JetSystem sys = jet_equations(v, n);
    int nv = sys.nvars();
    std::vector<std::int64_t> tuple(nv, 0);
    std::vector<std::vector<std::int64_t>> out;
    Field f = prime_field(q);
    while (true) {
        Jet jet;
        jet.level = n;
        for (int i = 0; i < v.ambient_dim; ++i) {
            std::vector<FieldValue> c;
            for (int j = 0; j <= n; ++j) c.emplace_back(f, tuple[i * (n + 1) + j]);
            jet.coeffs.push_back(std::move(c));
        }
        if (sys.satisfied_by(jet)) out.push_back(JetSet::pack(jet));
        int i = 0;
        while (i < nv && ++tuple[i] == q) tuple[i++] = 0;
        if (i == nv) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("jet equation systems") {
    Field q = rationals();
    SUBCASE("no equations") {
        JetSystem sys = jet_equations(affine_line(q), 3);
        CHECK(sys.nvars() == 4);
        CHECK(sys.eqs.empty());
    }
    SUBCASE("cusp at level 1") {
        JetSystem sys = jet_equations(cusp_curve(q), 1);
        REQUIRE(sys.eqs.size() == 1);
        REQUIRE(sys.eqs[0].size() == 2);
        // variables: x0 x1 y0 y1
        MultiPoly x0 = var(q, 4, 0), x1 = var(q, 4, 1), y0 = var(q, 4, 2), y1 = var(q, 4, 3);
        CHECK(sys.eqs[0][0] == y0 * y0 - x0 * x0 * x0);
        CHECK(sys.eqs[0][1] == MultiPoly::constant(q, 4, 2) * y0 * y1 -
                                   MultiPoly::constant(q, 4, 3) * x0 * x0 * x1);
    }
    SUBCASE("level 0 is the variety") {
        JetSystem sys = jet_equations(cone_surface(q), 0);
        REQUIRE(sys.eqs.size() == 1);
        MultiPoly x = var(q, 3, 0), y = var(q, 3, 1), z = var(q, 3, 2);
        CHECK(sys.eqs[0][0] == x * z - y * y);
    }
}

TEST_CASE("truncation maps") {
    Field q = rationals();
    ArcGen arc = ArcGen::from_monomials(q, {2, 3});
    Jet j2 = truncate_arc(arc, 2);
    CHECK(j2.level == 2);
    CHECK(j2.coeffs[0] == std::vector<FieldValue>{FieldValue::zero(q), FieldValue::zero(q),
                                                  FieldValue::one(q)});
    CHECK(j2.coeffs[1] == std::vector<FieldValue>(3, FieldValue::zero(q)));

    Jet j5 = truncate_arc(arc, 5);
    CHECK(truncate_jet(j5, 5) == j5);
    CHECK(truncate_jet(j5, 2) == j2);
    // tower coherence
    CHECK(truncate_jet(truncate_jet(j5, 4), 2) == truncate_jet(j5, 2));

    ArcGen a2{q, {{FieldValue::zero(q), FieldValue::one(q)},
                  {FieldValue::one(q), FieldValue::one(q)}}};
    Jet j1 = truncate_arc(a2, 1);
    CHECK(j1.coeffs[0] == std::vector<FieldValue>{FieldValue::zero(q), FieldValue::one(q)});
    CHECK(j1.coeffs[1] == std::vector<FieldValue>{FieldValue::one(q), FieldValue::one(q)});
}

TEST_CASE("pushing jets") {
    Field q = rationals();
    MorphismPres bl{"chart", affine_plane(q), affine_plane(q),
                    {var(q, 2, 0), var(q, 2, 0) * var(q, 2, 1)}};
    ArcGen arc{q, {{FieldValue::zero(q), FieldValue::one(q)},
                   {FieldValue::one(q), FieldValue::one(q)}}};
    CHECK(push_jet(bl, truncate_arc(arc, 2)) == truncate_arc(push_arc(bl, arc), 2));

    MorphismPres id{"id", affine_plane(q), affine_plane(q), {var(q, 2, 0), var(q, 2, 1)}};
    Jet j = truncate_arc(arc, 3);
    CHECK(push_jet(id, j) == j);

    MorphismPres wt{"chart", affine_plane(q), affine_plane(q),
                    {var(q, 2, 1) * var(q, 2, 0) * var(q, 2, 0), var(q, 2, 0)}};
    ArcGen diag = ArcGen::from_monomials(q, {1, 1});
    Jet img = push_jet(wt, truncate_arc(diag, 3));
    CHECK(img == truncate_arc(ArcGen::from_monomials(q, {3, 1}), 3));

    // commutes with truncation at all levels up to 8
    for (int m = 0; m <= 8; ++m)
        CHECK(push_jet(wt, truncate_arc(diag, m)) == truncate_arc(push_arc(wt, diag), m));
}

TEST_CASE("jet enumeration counts") {
    CHECK(enumerate_jets(affine_line(prime_field(3)), 2, 3).size() == 27);
    CHECK(enumerate_jets(cusp_curve(prime_field(5)), 0, 5).size() == 5);
    CHECK(enumerate_jets(cone_surface(prime_field(2)), 0, 2).size() == 4);
    CHECK_THROWS_AS(enumerate_jets(affine_line(prime_field(3)), 1, 4), ParseError);
}

TEST_CASE("enumeration agrees with the symbolic system") {
    for (auto [q, n] : {std::pair<std::int64_t, int>{3, 2}, {2, 2}, {5, 1}}) {
        AffineVariety v = cusp_curve(prime_field(q));
        JetSet fast = enumerate_jets(v, n, q);
        auto slow = brute_force(v, n, q);
        CHECK(fast.jets == slow);
    }
    AffineVariety cone = cone_surface(prime_field(2));
    CHECK(enumerate_jets(cone, 1, 2).jets == brute_force(cone, 1, 2));
}

TEST_CASE("fibers of truncation") {
    SUBCASE("smooth curve: every fiber has q^{n-m} points") {
        Field f = prime_field(3);
        AffineVariety line = line_in_plane(f);
        JetSet base = enumerate_jets(line, 2, 3);
        CHECK(base.size() == 27);
        for (std::size_t i = 0; i < base.size(); ++i) {
            CHECK(fiber_jets(line, 4, base.unpack(i), 3).size() == 9);
            CHECK(fiber_jets(line, 3, base.unpack(i), 3).size() == 3);
        }
    }
    SUBCASE("cusp fiber over the order-2 jet") {
        Field f = prime_field(5);
        AffineVariety cusp = cusp_curve(f);
        ArcGen arc = ArcGen::from_monomials(f, {2, 3});
        Jet g = truncate_arc(arc, 3);
        JetSet fib = fiber_jets(cusp, 4, g, 5);
        CHECK(fib.size() == 25);
        // restricted to liftable members the count drops to q^{d(n-m)}
        std::size_t liftable = 0;
        for (std::size_t i = 0; i < fib.size(); ++i)
            if (is_liftable(cusp, fib.unpack(i), 5) == Lift::Yes) ++liftable;
        CHECK(liftable == 5);
    }
}

TEST_CASE("liftability") {
    SUBCASE("truncation of an arc is liftable") {
        Field f = prime_field(5);
        AffineVariety cusp = cusp_curve(f);
        Jet g = truncate_arc(ArcGen::from_monomials(f, {2, 3}), 3);
        CHECK(is_liftable(cusp, g, 5) == Lift::Yes);
    }
    SUBCASE("order-1 jet on the cusp is not") {
        for (std::int64_t q : {2, 3, 5}) {
            Field f = prime_field(q);
            AffineVariety cusp = cusp_curve(f);
            // x = t, y = 0; satisfies both level-1 equations
            Jet j;
            j.level = 1;
            j.coeffs = {{FieldValue::zero(f), FieldValue::one(f)},
                        {FieldValue::zero(f), FieldValue::zero(f)}};
            CHECK(jet_equations(cusp, 1).satisfied_by(j));
            CHECK(is_liftable(cusp, j, q) == Lift::No);
        }
    }
    SUBCASE("smooth variety: everything lifts") {
        Field f = prime_field(3);
        AffineVariety line = line_in_plane(f);
        JetSet all = enumerate_jets(line, 3, 3);
        for (std::size_t i = 0; i < all.size(); ++i)
            CHECK(is_liftable(line, all.unpack(i), 3) == Lift::Yes);
        LiftableResult ls = liftable_set(line, 3, 3);
        CHECK(ls.liftable.size() == all.size());
        CHECK(ls.undetermined.size() == 0);
    }
}

TEST_CASE("liftability agrees with deep extension search on small cusp jets") {
    std::int64_t q = 2;
    Field f = prime_field(q);
    AffineVariety cusp = cusp_curve(f);
    for (int m = 1; m <= 4; ++m) {
        JetSet all = enumerate_jets(cusp, m, q);
        for (std::size_t i = 0; i < all.size(); ++i) {
            Jet j = all.unpack(i);
            Lift r = is_liftable(cusp, j, q);
            REQUIRE(r != Lift::Undetermined);
            bool deep = fiber_jets(cusp, 2 * m + 4, j, q).size() > 0;
            CHECK((r == Lift::Yes) == deep);
        }
    }
}

TEST_CASE("budget accounting") {
    Field f = prime_field(5);
    AffineVariety cusp = cusp_curve(f);
    EnumOptions tiny;
    tiny.budget = 10;
    CHECK_THROWS_AS(enumerate_jets(cusp, 3, 5, tiny), BudgetExceeded);
    // perturbed jet: on the variety to level 4 but not a polynomial arc on it
    Jet g;
    g.level = 4;
    g.coeffs = {{FieldValue::zero(f), FieldValue::zero(f), FieldValue::one(f),
                 FieldValue::zero(f), FieldValue::zero(f)},
                {FieldValue::zero(f), FieldValue::zero(f), FieldValue::zero(f),
                 FieldValue::one(f), FieldValue::one(f)}};
    CHECK(jet_equations(cusp, 4).satisfied_by(g));
    CHECK(is_liftable(cusp, g, 5, tiny) == Lift::Undetermined);
}

TEST_CASE("jet dump format") {
    Field f = prime_field(2);
    JetSet s = enumerate_jets(cusp_curve(f), 0, 2);
    CHECK(dump_jets(s) == "0 0\n1 1\n");
}
