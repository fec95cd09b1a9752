// End-to-end acceptance checks, one line per criterion.
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "arcspace/catalog.hpp"
#include "arcspace/counting.hpp"
#include "arcspace/integrate.hpp"
#include "arcspace/jets.hpp"
#include "arcspace/mather.hpp"
#include "arcspace/snf.hpp"

using namespace arcspace;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& msg) {
    if (!ok) throw Failure(msg);
}

TruncSeries random_series(Field f, int prec, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-9, 9);
    std::vector<FieldValue> c;
    for (int i = 0; i < prec; ++i) c.emplace_back(f, d(rng));
    return TruncSeries(f, std::move(c));
}

SeriesMatrix random_matrix(Field f, int rows, int cols, int prec, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> shift(0, 4);
    std::vector<TruncSeries> e;
    for (int i = 0; i < rows * cols; ++i)
        e.push_back(random_series(f, prec, rng).shift_up(shift(rng)).truncate(prec));
    return SeriesMatrix(rows, cols, std::move(e));
}

long long qpow_ll(std::int64_t q, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= q;
    return r;
}

Rational qpow(std::int64_t q, int e) {
    Rational r = 1;
    for (int i = 0; i < (e < 0 ? -e : e); ++i) r *= q;
    return e < 0 ? Rational(1) / r : r;
}

MotivicRational full_integral() {
    return geometric_sum(MotivicClass::L_pow(2) - MotivicClass::one(), 3, 0);
}

// ---- criteria ----

void c1_snf() {
    for (Field f : {rationals(), prime_field(5)}) {
        std::mt19937_64 rng(101 + f.p);
        std::uniform_int_distribution<int> dim(1, 5);
        for (int it = 0; it < 500; ++it) {
            int rows = dim(rng), cols = dim(rng);
            SeriesMatrix m = random_matrix(f, rows, cols, 20, rng);
            SnfResult r = snf(m);
            require(r.U.is_unimodular() && r.V.is_unimodular(),
                    "transform matrices must be unimodular");
            SeriesMatrix d = r.U * m * r.V;
            int p = r.result_precision;
            for (int i = 0; i < rows; ++i)
                for (int j = 0; j < cols; ++j) {
                    TruncSeries want = TruncSeries::zero(f, p);
                    if (i == j && i < static_cast<int>(r.orders.size()) &&
                        r.orders[i].finite && r.orders[i].k < p)
                        want = TruncSeries::t_power(f, r.orders[i].k, p);
                    require(d.at(i, j).agrees_with(want, p),
                            "U*M*V is not the diagonal form");
                }
        }
    }
}

void c2_torsion_vs_jacobian() {
    for (Field f : {rationals(), prime_field(5), prime_field(2)}) {
        std::mt19937_64 rng(202 + f.p);
        std::uniform_int_distribution<int> sh(0, 2);
        int done = 0;
        for (int it = 0; it < 150 || done < 100; ++it) {
            AffineVariety v;
            ArcGen arc;
            switch (it % 3) {
                case 0:
                    v = catalog_affine_plane(f);
                    arc.field = f;
                    arc.coords = {random_order_coeffs(f, sh(rng), 3, rng),
                                  random_order_coeffs(f, sh(rng), 3, rng)};
                    break;
                case 1:
                    v = catalog_cusp(f);
                    arc = catalog_cusp_arc(f, random_order_coeffs(f, sh(rng), 2, rng));
                    break;
                default:
                    v = catalog_cone(f);
                    arc = catalog_cone_arc(f, random_order_coeffs(f, sh(rng), 2, rng),
                                           random_order_coeffs(f, sh(rng), 2, rng));
            }
            DiffProfile df = invariant_factors(v, arc, 40);
            Order jac = ord_ideal(arc, jacobian_ideal(v), 40);
            if (!jac.finite) continue;
            require(df.total() == jac.k, "sum of torsion orders must equal ord(Jac)");
            ++done;
            if (it > 600) break;
        }
        require(done >= 100, "not enough finite samples");
        DiffProfile cusp = invariant_factors(
            catalog_cusp(f), ArcGen::from_monomials(f, {2, 3}), 24);
        require(cusp.total() == (f.p == 2 ? 4 : 3), "pinned cusp torsion value");
    }
}

void c3_bounds() {
    Field f = rationals();
    std::mt19937_64 rng(303);
    for (const std::string& id : catalog_example_ids()) {
        CatalogExample ex = catalog_example(id, f);
        int done = 0;
        for (int it = 0; done < 100 && it < 800; ++it) {
            const ChartSpec& ch = ex.charts[it % ex.charts.size()];
            ArcGen arc = ch.sample(rng);
            try {
                DiscrepancyResult r = mather_discrepancy(ch.f, arc);
                require(r.c - r.a <= r.e, id + ": lower bound c - a <= e");
                require(r.e <= std::min(r.c, r.c - r.a + r.b),
                        id + ": upper bound e <= min(c, c-a+b)");
                if (ch.X.gens.empty())
                    require(r.e == r.c, id + ": smooth chart must have e = c");
                if (id == "weighted-blowup" && !ch.X.gens.empty())
                    require(r.e == r.c - r.a, id + ": singular chart must have e = c - a");
                ++done;
            } catch (const NotGenericallyTransverse&) {
            }
        }
        require(done >= 100, id + ": not enough admissible arcs");
    }
}

void c4_additivity() {
    Field f = rationals();
    CatalogExample ex = example_double_blowup(f);
    std::mt19937_64 rng(404);
    int done = 0;
    for (int it = 0; done < 100 && it < 800; ++it) {
        const ChartSpec& ch = ex.charts[it % ex.charts.size()];
        try {
            ArcGen arc = ch.sample(rng);
            int total = mather_discrepancy(ch.f, arc).e;
            int top = mather_discrepancy(*ch.mid, arc).e;
            int bottom = mather_discrepancy(*ch.bottom, push_arc(*ch.mid, arc)).e;
            require(total == top + bottom, "discrepancies must add along the tower");
            ++done;
        } catch (const NotGenericallyTransverse&) {
        }
    }
    require(done >= 100, "not enough admissible arcs");
}

void c5_truncation_stability() {
    Field f = rationals();
    std::mt19937_64 rng(505);
    std::uniform_int_distribution<int> coeff(-5, 5);
    for (const std::string& id : catalog_example_ids()) {
        CatalogExample ex = catalog_example(id, f);
        for (const ChartSpec& ch : ex.charts) {
            bool quadric = !ch.X.gens.empty();
            auto build = [&](const std::vector<std::vector<FieldValue>>& ps) {
                if (!quadric) return ArcGen{f, ps};
                MultiPoly s = MultiPoly::variable(f, 3, 0),
                          m = MultiPoly::variable(f, 3, 1),
                          n = MultiPoly::variable(f, 3, 2);
                ArcGen a{f, {}};
                a.coords = {(s * m * m).eval_polys(ps), (s * m * n).eval_polys(ps),
                            (s * n * n).eval_polys(ps)};
                return a;
            };
            // parameters whose products give the base arc; padding them past
            // degree m never changes the level-m truncation
            std::vector<std::vector<FieldValue>> params;
            ArcGen base;
            DiscrepancyResult r0;
            bool found = false;
            for (int tries = 0; tries < 40 && !found; ++tries) {
                if (quadric) {
                    params = {random_order_coeffs(f, 1, 2, rng),
                              random_order_coeffs(f, 1, 2, rng),
                              random_order_coeffs(f, 0, 2, rng)};
                } else {
                    params.clear();
                    for (int i = 0; i < ch.X.ambient_dim; ++i)
                        params.push_back(random_order_coeffs(f, tries % 2, 3, rng));
                }
                base = build(params);
                try {
                    r0 = mather_discrepancy(ch.f, base);
                    found = true;
                } catch (const NotGenericallyTransverse&) {
                }
            }
            require(found, id + ": no admissible base arc found");
            int m = r0.a + r0.e;
            for (int it = 0; it < 200; ++it) {
                std::vector<std::vector<FieldValue>> ext = params;
                for (auto& p : ext) {
                    p.resize(m + 1, FieldValue::zero(f));
                    for (int k = 0; k < 3; ++k) p.emplace_back(f, coeff(rng));
                }
                ArcGen again = build(ext);
                for (int c = 0; c < base.ncoords(); ++c)
                    for (int k = 0; k <= m; ++k) {
                        FieldValue lhs = k < static_cast<int>(base.coords[c].size())
                                             ? base.coords[c][k]
                                             : FieldValue::zero(f);
                        FieldValue rhs = k < static_cast<int>(again.coords[c].size())
                                             ? again.coords[c][k]
                                             : FieldValue::zero(f);
                        require(lhs == rhs, "re-extension changed the truncation");
                    }
                DiscrepancyResult r1 = mather_discrepancy(ch.f, again);
                require(r1.a == r0.a && r1.e == r0.e,
                        id + ": (a, e) must be constant past level a + e");
            }
        }
    }
}

void c6_fiber_laws() {
    for (std::int64_t q : {2, 3, 5}) {
        Field f = prime_field(q);
        std::mt19937_64 rng(606 + q);
        std::uniform_int_distribution<int> sh(0, q == 5 ? 1 : 2);
        EnumOptions eopt;
        for (int variety = 0; variety < 2; ++variety) {
            AffineVariety v = variety == 0 ? catalog_cusp(f) : catalog_cone(f);
            int d = v.dim;
            for (int it = 0; it < 8; ++it) {
                ArcGen arc =
                    variety == 0
                        ? catalog_cusp_arc(f, random_order_coeffs(f, sh(rng), 2, rng))
                        : catalog_cone_arc(f, random_order_coeffs(f, sh(rng), 2, rng),
                                           random_order_coeffs(f, 1, 2, rng));
                DiffProfile df = invariant_factors(v, arc, 40);
                int a = df.total();
                int m = std::max(a, 1);
                Jet gamma = truncate_arc(arc, m);
                for (int n = m + 1; n <= std::min(2 * m + 1, m + 2); ++n) {
                    int aprime = 0;
                    for (int ai : df.torsion) aprime += std::min(ai, n - m);
                    JetSet fib = fiber_jets(v, n, gamma, q, eopt);
                    require(static_cast<long long>(fib.size()) ==
                                qpow_ll(q, d * (n - m) + aprime),
                            "fiber count must be q^{d(n-m)+a'}");
                    if (n <= 2 * m + 1 - a) {
                        long long lift = 0;
                        for (std::size_t i = 0; i < fib.size(); ++i) {
                            Lift r = is_liftable(v, fib.unpack(i), q, eopt);
                            require(r != Lift::Undetermined, "lift search inconclusive");
                            if (r == Lift::Yes) ++lift;
                        }
                        require(lift == qpow_ll(q, d * (n - m)),
                                "liftable fiber count must be q^{d(n-m)}");
                    }
                }
            }
        }
    }
    // pinned: cusp over F_5, the order-(2,3) arc truncated at level 3
    Field f5 = prime_field(5);
    AffineVariety cusp = catalog_cusp(f5);
    Jet g = truncate_arc(ArcGen::from_monomials(f5, {2, 3}), 3);
    JetSet fib = fiber_jets(cusp, 4, g, 5);
    require(fib.size() == 25, "pinned cusp fiber must have 25 points");
    long long lift = 0;
    for (std::size_t i = 0; i < fib.size(); ++i)
        if (is_liftable(cusp, fib.unpack(i), 5) == Lift::Yes) ++lift;
    require(lift == 5, "pinned liftable cusp fiber must have 5 points");
}

std::map<std::pair<std::string, std::int64_t>, CountingReport> g_reports;

const CountingReport& profile_report(const std::string& id, std::int64_t q) {
    auto key = std::make_pair(id, q);
    auto it = g_reports.find(key);
    if (it == g_reports.end()) {
        CatalogExample ex = catalog_example(id, prime_field(q));
        it = g_reports.emplace(key, cov_check_counting(ex, q, 4, CountOptions{})).first;
    }
    return it->second;
}

void c7_fibration() {
    for (const std::string& id : {"blowup", "weighted-blowup"})
        for (std::int64_t q : {2, 3}) {
            const CountingReport& rep = profile_report(id, q);
            for (const ProfileRow& row : rep.rows) {
                require(row.fibers_ok, id + ": a fiber misses q^e points");
                require(row.union_ok, id + ": image stratum is not a union of fibers");
                require(row.ratio_ok, id + ": measure is not q^e times the image measure");
                require(row.undetermined == 0, id + ": lift search inconclusive");
            }
            require(rep.disjoint_ok, id + ": image strata overlap");
        }
}

void c8_cov_exact() {
    Field f = rationals();
    for (const std::string& id : {"identity", "blowup", "double-blowup"}) {
        ExactCovReport rep = cov_check_exact(catalog_example(id, f));
        require(rep.pass, id + ": exact change of variables failed");
        require(rep.lhs == full_integral(), id + ": value must be (L^2-1)/(1-L^-3)");
    }
}

void c9_cov_counting() {
    for (std::int64_t q : {2, 3}) {
        const CountingReport& rep = profile_report("weighted-blowup", q);
        require(rep.sums_ok, "truncated sums must agree stratum by stratum");
        require(rep.pass, "counting change of variables failed");
        Rational expect = 0;
        for (int p = 0; p <= 4; ++p) expect += Rational(q * q - 1) * qpow(q, -3 * p);
        require(rep.lhs_sum == expect, "truncated total has the wrong value");
    }
}

void c10_cross_backend() {
    for (std::int64_t q : {2, 3, 5}) {
        Field f = prime_field(q);
        for (const std::string& id : catalog_example_ids()) {
            CatalogExample ex = catalog_example(id, f);
            auto strata = ex.lhs;
            strata.insert(strata.end(), ex.rhs.begin(), ex.rhs.end());
            for (const StratumSpec& s : strata)
                for (int bump = 0; bump <= (s.pmin.empty() ? 0 : 1); ++bump) {
                    std::vector<int> params = s.pmin;
                    for (int& p : params) p += bump;
                    Rational exact = specialize_q(cylinder_measure_exact(s, params, ex.d),
                                                  Rational(q));
                    Rational counted = cylinder_measure_counting(ex, s, params, q);
                    require(exact == counted,
                            id + "/" + s.name + ": counting must specialize the class");
                }
        }
    }
    require(specialize_q(full_integral(), Rational(2)) == Rational(24, 7),
            "specialization at q = 2 must be 24/7");
}

void c11_liftability() {
    std::int64_t q = 2;
    Field f = prime_field(q);
    AffineVariety cusp = catalog_cusp(f);
    for (int n = 0; n <= 4; ++n) {
        JetSet jets = enumerate_jets(cusp, n, q);
        for (std::size_t i = 0; i < jets.size(); ++i) {
            Jet j = jets.unpack(i);
            Lift fast = is_liftable(cusp, j, q);
            require(fast != Lift::Undetermined, "criterion inconclusive on a small jet");
            // ground truth by searching well past the doubled level
            bool deep = fiber_jets(cusp, 2 * n + 4, j, q).size() > 0;
            require((fast == Lift::Yes) == deep,
                    "criterion disagrees with the deep extension search at level " +
                        std::to_string(n));
        }
    }
    Jet probe;
    probe.level = 1;
    probe.coeffs = {{FieldValue::zero(f), FieldValue::one(f)},
                    {FieldValue::zero(f), FieldValue::zero(f)}};
    require(is_liftable(cusp, probe, q) == Lift::No,
            "the level-1 jet (t, 0) must not lift");
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* label;
        std::function<void()> run;
    };
    std::vector<Criterion> criteria = {
        {1, "smith normal form reconstruction", c1_snf},
        {2, "torsion orders vs jacobian order", c2_torsion_vs_jacobian},
        {3, "discrepancy bounds and equalities", c3_bounds},
        {4, "discrepancy additivity along the tower", c4_additivity},
        {5, "truncation stability of (a, e)", c5_truncation_stability},
        {6, "jet fiber counting laws", c6_fiber_laws},
        {7, "piecewise trivial fibration identity", c7_fibration},
        {8, "change of variables, exact backend", c8_cov_exact},
        {9, "change of variables, counting backend", c9_cov_counting},
        {10, "cross-backend agreement", c10_cross_backend},
        {11, "liftability criterion consistency", c11_liftability},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string verdict = "pass";
        try {
            c.run();
        } catch (const std::exception& e) {
            verdict = std::string("FAIL - ") + e.what();
            ++failures;
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::cout << "criterion " << c.id << " (" << c.label << "): " << verdict << " ["
                  << ms << " ms]" << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
