#include "arcspace/catalog.hpp"

#include <algorithm>

namespace arcspace {

namespace {

int affine(int c0, const std::vector<int>& coef, const std::vector<int>& params) {
    int v = c0;
    for (std::size_t i = 0; i < coef.size() && i < params.size(); ++i)
        v += coef[i] * params[i];
    return v;
}

MultiPoly mono(Field f, std::vector<int> exp) {
    return MultiPoly::monomial(f, std::move(exp), FieldValue::one(f));
}

MorphismPres make_map(std::string name, AffineVariety src, AffineVariety tgt,
                      std::vector<MultiPoly> comps) {
    return MorphismPres{std::move(name), std::move(src), std::move(tgt), std::move(comps)};
}

// exact product of coefficient vectors
std::vector<FieldValue> mulp(Field f, const std::vector<FieldValue>& a,
                             const std::vector<FieldValue>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<FieldValue> r(a.size() + b.size() - 1, FieldValue::zero(f));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    return r;
}

// level at which a profile piece is verified: the stabilization bound when it
// is within enumeration reach, otherwise just past the certification orders
int piece_level(const ContactProfile& pr, int c) {
    int th = std::max({pr.a + pr.e, pr.b + pr.e, 2 * pr.e});
    int lvl = std::max({pr.p, c + 1, 1});
    if (th <= 8) lvl = std::max(lvl, th);
    return lvl;
}

std::vector<StratumSpec> origin_contact_strata(Field, int chart) {
    // Cont^p of the origin of A^2: p leading coefficient pairs vanish, the
    // next pair is nonzero, the tail through level p+1 is free
    StratumSpec s;
    s.name = "origin-contact";
    s.pmin = {0};
    s.cls_base = (MotivicClass::L_pow(2) - MotivicClass::one()) * MotivicClass::L_pow(2);
    s.cls_coef = {0};
    s.m0 = 1;
    s.m_coef = {1};
    s.w0 = 0;
    s.w_coef = {1};
    s.parts = {{chart, {OrderConstraint{{0, 1}, 0, {1}, true}}}};
    return {s};
}

// ---- arcs on the (x, y^2) blow-up chart {xb = y^2}: (s m^2, s m n, s n^2) ----

ArcGen wbl2_arc(Field f, const std::vector<FieldValue>& s, const std::vector<FieldValue>& m,
                const std::vector<FieldValue>& n) {
    ArcGen arc;
    arc.field = f;
    arc.coords = {mulp(f, s, mulp(f, m, m)), mulp(f, s, mulp(f, m, n)),
                  mulp(f, s, mulp(f, n, n))};
    return arc;
}

// orders (i, (i+k)/2, k), i + k even
ArcGen wbl2_arc_orders(Field f, int i, int k, std::mt19937_64& rng) {
    int sigma = i % 2;
    ArcGen a = wbl2_arc(f, random_order_coeffs(f, sigma, 3, rng),
                        random_order_coeffs(f, (i - sigma) / 2, 3, rng),
                        random_order_coeffs(f, (k - sigma) / 2, 3, rng));
    return a;
}

// ---- jet-level arc-existence test on {xb = y^2} ----

int wnd_ord(const std::int64_t* a, int n) {
    for (int i = 0; i <= n; ++i)
        if (a[i] != 0) return i;
    return n + 1;
}

// The jet (x, y, b) at level n lifts to an arc iff the coordinate of larger
// order is the exact quotient of y^2 by the other one through level n; the
// quotient is jet-determined because the divisor order is at most ord(y).
bool wbl2_liftable(const std::int64_t* flat, int n, std::int64_t q) {
    const std::int64_t* x = flat;
    const std::int64_t* y = flat + (n + 1);
    const std::int64_t* b = flat + 2 * (n + 1);
    int i = wnd_ord(x, n), k = wnd_ord(b, n), j = wnd_ord(y, n);
    if (i > n && k > n) return j > n;
    const std::int64_t* div = (i <= k) ? x : b;
    const std::int64_t* oth = (i <= k) ? b : x;
    int od = std::min(i, k);
    if (j < od) return false;
    // z = y^2 through exponent n + od (window coefficients of y suffice)
    std::vector<std::int64_t> z(n + od + 1, 0);
    for (int r = 0; r <= n; ++r) {
        if (y[r] == 0) continue;
        for (int s = 0; s <= n && r + s <= n + od; ++s)
            z[r + s] = (z[r + s] + y[r] * y[s]) % q;
    }
    int oz = 2 * j;  // order of any arc extension of y, squared
    if (j > n) oz = 2 * (n + 1);
    // quotient u = z / div must reproduce the other coordinate window
    std::vector<std::int64_t> u(n + 1, 0);
    std::int64_t inv = mod_inverse(div[od], q);
    int start = oz - od;
    if (start < 0) return false;
    for (int m = start; m <= n; ++m) {
        std::int64_t acc = z[m + od];
        for (int l = start; l < m; ++l) {
            int idx = m + od - l;
            if (idx <= n) acc = (acc - u[l] * div[idx]) % q;
        }
        u[m] = ((acc % q) * inv % q + q) % q;
    }
    // z must vanish below the quotient range
    for (int m = 0; m < std::min(start + od, n + od + 1); ++m)
        if (m < static_cast<int>(z.size()) && m < start + od && z[m] != 0) return false;
    for (int m = 0; m <= n; ++m)
        if (u[m] != oth[m]) return false;
    return true;
}

std::function<ArcGen(std::mt19937_64&)> plane_sampler(Field f, int max_shift_x,
                                                      int max_shift_y, bool x_positive) {
    return [f, max_shift_x, max_shift_y, x_positive](std::mt19937_64& rng) {
        std::uniform_int_distribution<int> sx(x_positive ? 1 : 0, max_shift_x);
        std::uniform_int_distribution<int> sy(0, max_shift_y);
        ArcGen a;
        a.field = f;
        a.coords = {random_order_coeffs(f, sx(rng), 3, rng),
                    random_order_coeffs(f, sy(rng), 3, rng)};
        return a;
    };
}

}  // namespace

int OrderConstraint::value_at(const std::vector<int>& params) const {
    return affine(o0, o_coef, params);
}

int StratumSpec::m_at(const std::vector<int>& params) const {
    return affine(m0, m_coef, params);
}

int StratumSpec::w_at(const std::vector<int>& params) const {
    return affine(w0, w_coef, params);
}

MotivicClass StratumSpec::class_at(const std::vector<int>& params) const {
    return cls_base * MotivicClass::L_pow(affine(0, cls_coef, params));
}

void StratumSpec::check_params(const std::vector<int>& params) const {
    if (params.size() != pmin.size())
        throw std::out_of_range("stratum '" + name + "' expects " +
                                std::to_string(pmin.size()) + " parameter(s)");
    for (std::size_t i = 0; i < pmin.size(); ++i)
        if (params[i] < pmin[i])
            throw std::out_of_range("stratum '" + name + "' parameter " +
                                    std::to_string(i) + " below its lower bound");
}

AffineVariety catalog_affine_plane(Field f) {
    return AffineVariety{"A2", f, 2, 2, {"x", "y"}, {}};
}

AffineVariety catalog_cusp(Field f) {
    return AffineVariety{"cusp", f, 2, 1, {"x", "y"}, {mono(f, {0, 2}) - mono(f, {3, 0})}};
}

AffineVariety catalog_cone(Field f) {
    return AffineVariety{"cone", f, 3, 2, {"x", "y", "z"},
                         {mono(f, {1, 0, 1}) - mono(f, {0, 2, 0})}};
}

ArcGen catalog_cusp_arc(Field f, const std::vector<FieldValue>& w) {
    ArcGen a;
    a.field = f;
    std::vector<FieldValue> w2 = mulp(f, w, w);
    a.coords = {w2, mulp(f, w2, w)};
    return a;
}

ArcGen catalog_cone_arc(Field f, const std::vector<FieldValue>& a,
                        const std::vector<FieldValue>& b) {
    ArcGen g;
    g.field = f;
    g.coords = {mulp(f, a, a), mulp(f, a, b), mulp(f, b, b)};
    return g;
}

std::vector<FieldValue> random_poly_coeffs(Field f, int len, std::mt19937_64& rng,
                                           bool unit_start) {
    std::vector<FieldValue> out;
    out.reserve(len);
    for (int i = 0; i < len; ++i) {
        std::int64_t c;
        if (f.is_prime_field()) {
            std::uniform_int_distribution<std::int64_t> d(0, f.p - 1);
            c = d(rng);
            if (i == 0 && unit_start) {
                std::uniform_int_distribution<std::int64_t> du(1, f.p - 1);
                c = du(rng);
            }
        } else {
            std::uniform_int_distribution<std::int64_t> d(-4, 4);
            c = d(rng);
            if (i == 0 && unit_start && c == 0) c = 1;
        }
        out.emplace_back(f, c);
    }
    return out;
}

std::vector<FieldValue> random_order_coeffs(Field f, int shift, int len,
                                            std::mt19937_64& rng) {
    std::vector<FieldValue> out(shift, FieldValue::zero(f));
    std::vector<FieldValue> tail = random_poly_coeffs(f, len, rng, true);
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
}

CatalogExample example_identity(Field f) {
    CatalogExample ex;
    ex.id = "identity";
    ex.field = f;
    ex.target = catalog_affine_plane(f);
    AffineVariety X = ex.target;
    ChartSpec chart;
    chart.X = X;
    chart.f = make_map("id", X, ex.target, {mono(f, {1, 0}), mono(f, {0, 1})});
    chart.sample = plane_sampler(f, 2, 2, false);
    ex.charts = {chart};
    ex.Z = {"A2", {mono(f, {1, 0}), mono(f, {0, 1})}};
    ex.V = ex.Z;
    ex.lhs = origin_contact_strata(f, -1);
    ex.rhs = origin_contact_strata(f, 0);
    // weight on the source side is ord_{f^-1 Z} + e = p + 0
    ex.expected = geometric_sum(MotivicClass::L_pow(2) - MotivicClass::one(), 3, 0);
    ex.profiles = [f](int cap) {
        std::vector<ProfilePiece> out;
        for (int p = 0; p <= cap; ++p) {
            ProfilePiece pc;
            pc.chart = 0;
            pc.constraints = {OrderConstraint{{0, 1}, p, {}, true}};
            pc.profile = ContactProfile{0, 0, 0, p, p};
            pc.level = piece_level(pc.profile, 0);
            pc.witness = [f, p](std::mt19937_64& rng) {
                ArcGen a;
                a.field = f;
                a.coords = {random_order_coeffs(f, p, 3, rng),
                            random_order_coeffs(f, p + 1, 2, rng)};
                return a;
            };
            out.push_back(std::move(pc));
        }
        return out;
    };
    return ex;
}

CatalogExample example_blowup(Field f) {
    CatalogExample ex;
    ex.id = "blowup";
    ex.field = f;
    ex.target = catalog_affine_plane(f);

    AffineVariety C1{"bl-chart1", f, 2, 2, {"u", "v"}, {}};
    AffineVariety C2{"bl-chart2", f, 2, 2, {"u", "v"}, {}};
    ChartSpec ch1;
    ch1.X = C1;
    ch1.f = make_map("bl1", C1, ex.target, {mono(f, {1, 0}), mono(f, {1, 1})});
    ch1.sample = plane_sampler(f, 2, 1, false);
    ChartSpec ch2;
    ch2.X = C2;
    ch2.f = make_map("bl2", C2, ex.target, {mono(f, {1, 1}), mono(f, {0, 1})});
    ch2.dedup_zero = {0};
    ch2.sample = plane_sampler(f, 2, 2, true);
    ex.charts = {ch1, ch2};

    ex.Z = {"A2", {mono(f, {1, 0}), mono(f, {0, 1})}};
    ex.V = ex.Z;
    ex.lhs = origin_contact_strata(f, -1);

    MotivicClass Lsq1 = MotivicClass::L_pow(2) - MotivicClass::one();
    StratumSpec away;
    away.name = "away";
    away.cls_base = Lsq1;
    away.parts = {{0, {OrderConstraint{{0}, 0, {}, true}}},
                  {1, {OrderConstraint{{1}, 0, {}, true}}}};
    StratumSpec exc;
    exc.name = "exceptional-contact";
    exc.pmin = {1};
    exc.cls_base = Lsq1;
    exc.cls_coef = {1};
    exc.m_coef = {1};
    exc.w_coef = {2};  // ord_{f^-1 Z} + e = p + p
    exc.parts = {{0, {OrderConstraint{{0}, 0, {1}, true}}},
                 {1, {OrderConstraint{{1}, 0, {1}, true}}}};
    ex.rhs = {away, exc};
    ex.expected = geometric_sum(Lsq1, 3, 0);

    ex.profiles = [f](int cap) {
        std::vector<ProfilePiece> out;
        for (int p = 0; p <= cap; ++p) {
            for (int chart = 0; chart < 2; ++chart) {
                ProfilePiece pc;
                pc.chart = chart;
                pc.constraints = {OrderConstraint{{chart == 0 ? 0 : 1}, p, {}, true}};
                pc.profile = ContactProfile{0, 0, p, p, p};
                pc.level = piece_level(pc.profile, p);
                pc.witness = [f, p, chart](std::mt19937_64& rng) {
                    ArcGen a;
                    a.field = f;
                    std::uniform_int_distribution<int> sh(1, 2);
                    if (chart == 0)
                        a.coords = {random_order_coeffs(f, p, 3, rng),
                                    random_poly_coeffs(f, 3, rng)};
                    else
                        a.coords = {random_order_coeffs(f, sh(rng), 2, rng),
                                    random_order_coeffs(f, p, 3, rng)};
                    return a;
                };
                out.push_back(std::move(pc));
            }
        }
        return out;
    };
    return ex;
}

CatalogExample example_weighted_blowup(Field f) {
    CatalogExample ex;
    ex.id = "weighted-blowup";
    ex.field = f;
    ex.target = catalog_affine_plane(f);

    AffineVariety C1{"wbl-chart1", f, 2, 2, {"y", "a"}, {}};
    AffineVariety C2{"wbl-chart2", f, 3, 2, {"x", "y", "b"},
                     {mono(f, {1, 0, 1}) - mono(f, {0, 2, 0})}};
    ChartSpec ch1;
    ch1.X = C1;
    // (y, a) -> (a y^2, y)
    ch1.f = make_map("wbl1", C1, ex.target, {mono(f, {2, 1}), mono(f, {1, 0})});
    ch1.sample = plane_sampler(f, 2, 1, false);
    ChartSpec ch2;
    ch2.X = C2;
    ch2.f = make_map("wbl2", C2, ex.target, {mono(f, {1, 0, 0}), mono(f, {0, 1, 0})});
    ch2.dedup_zero = {2};
    ch2.sample = [f](std::mt19937_64& rng) {
        std::uniform_int_distribution<int> sh(0, 1);
        return wbl2_arc(f, random_order_coeffs(f, sh(rng), 3, rng),
                        random_order_coeffs(f, sh(rng), 2, rng),
                        random_order_coeffs(f, sh(rng), 2, rng));
    };
    ex.charts = {ch1, ch2};

    ex.Z = {"A2", {mono(f, {1, 0}), mono(f, {0, 1})}};
    ex.V = ex.Z;
    ex.lhs = origin_contact_strata(f, -1);
    ex.expected = geometric_sum(MotivicClass::L_pow(2) - MotivicClass::one(), 3, 0);

    ex.profiles = [f](int cap) {
        std::vector<ProfilePiece> out;
        // smooth chart: ord y = s determines everything (c = 2s)
        for (int s = 0; s <= cap; ++s) {
            ProfilePiece pc;
            pc.chart = 0;
            pc.constraints = {OrderConstraint{{0}, s, {}, true}};
            pc.profile = ContactProfile{0, 0, 2 * s, s, s};
            pc.level = piece_level(pc.profile, 2 * s);
            pc.witness = [f, s](std::mt19937_64& rng) {
                ArcGen a;
                a.field = f;
                a.coords = {random_order_coeffs(f, s, 3, rng), random_poly_coeffs(f, 3, rng)};
                return a;
            };
            out.push_back(std::move(pc));
        }
        // singular chart, coordinate orders (i, (i+k)/2, k), c = ord x = i:
        // i = 0: one piece regardless of k
        {
            ProfilePiece pc;
            pc.chart = 1;
            pc.constraints = {OrderConstraint{{0}, 0, {}, true}};
            pc.profile = ContactProfile{0, 0, 0, 0, 0};
            pc.level = piece_level(pc.profile, 0);
            pc.liftable = wbl2_liftable;
            pc.witness = [f](std::mt19937_64& rng) { return wbl2_arc_orders(f, 0, 2, rng); };
            out.push_back(std::move(pc));
        }
        // i >= 1, k >= i: a = i, e = 0, p = i
        for (int i = 1; i <= cap; ++i) {
            ProfilePiece pc;
            pc.chart = 1;
            pc.constraints = {OrderConstraint{{0}, i, {}, true},
                              OrderConstraint{{2}, i, {}, false}};
            pc.profile = ContactProfile{i, 0, 0, i, i};
            pc.level = piece_level(pc.profile, i);
            pc.liftable = wbl2_liftable;
            pc.witness = [f, i](std::mt19937_64& rng) {
                std::uniform_int_distribution<int> dk(0, 1);
                return wbl2_arc_orders(f, i, i + 2 * dk(rng), rng);
            };
            out.push_back(std::move(pc));
        }
        // 1 <= k < i, i + k even: a = k, e = i - k, p = (i+k)/2
        for (int i = 2; i <= 2 * cap - 1; ++i)
            for (int k = 1; k < i; ++k) {
                if ((i + k) % 2 != 0 || (i + k) / 2 > cap) continue;
                ProfilePiece pc;
                pc.chart = 1;
                pc.constraints = {OrderConstraint{{0}, i, {}, true},
                                  OrderConstraint{{2}, k, {}, true}};
                pc.profile = ContactProfile{k, 0, i - k, (i + k) / 2, (i + k) / 2};
                pc.level = piece_level(pc.profile, i);
                pc.liftable = wbl2_liftable;
                pc.witness = [f, i, k](std::mt19937_64& rng) {
                    return wbl2_arc_orders(f, i, k, rng);
                };
                out.push_back(std::move(pc));
            }
        return out;
    };
    return ex;
}

CatalogExample example_double_blowup(Field f) {
    CatalogExample ex;
    ex.id = "double-blowup";
    ex.field = f;
    ex.target = catalog_affine_plane(f);

    AffineVariety C1{"bl-chart1", f, 2, 2, {"u", "v"}, {}};
    AffineVariety C2{"bl-chart2", f, 2, 2, {"u", "v"}, {}};
    AffineVariety D1{"dbl-chart1", f, 2, 2, {"s", "w"}, {}};
    AffineVariety D2{"dbl-chart2", f, 2, 2, {"s", "w"}, {}};
    MorphismPres c1_down = make_map("bl1", C1, ex.target, {mono(f, {1, 0}), mono(f, {1, 1})});
    MorphismPres c2_down = make_map("bl2", C2, ex.target, {mono(f, {1, 1}), mono(f, {0, 1})});

    ChartSpec d1;
    d1.X = D1;
    d1.f = make_map("dbl1", D1, ex.target, {mono(f, {1, 0}), mono(f, {2, 1})});
    d1.mid = make_map("dbl1-mid", D1, C1, {mono(f, {1, 0}), mono(f, {1, 1})});
    d1.bottom = c1_down;
    d1.sample = plane_sampler(f, 2, 1, false);

    ChartSpec d2;
    d2.X = D2;
    d2.f = make_map("dbl2", D2, ex.target, {mono(f, {1, 1}), mono(f, {1, 2})});
    d2.mid = make_map("dbl2-mid", D2, C1, {mono(f, {1, 1}), mono(f, {0, 1})});
    d2.bottom = c1_down;
    d2.dedup_zero = {0};
    d2.sample = plane_sampler(f, 2, 1, true);

    ChartSpec c2;
    c2.X = C2;
    c2.f = c2_down;
    c2.mid = make_map("id", C2, C2, {mono(f, {1, 0}), mono(f, {0, 1})});
    c2.bottom = c2_down;
    c2.dedup_zero = {0};
    c2.sample = plane_sampler(f, 2, 2, true);

    ex.charts = {d1, d2, c2};
    ex.Z = {"A2", {mono(f, {1, 0}), mono(f, {0, 1})}};
    ex.V = ex.Z;
    ex.lhs = origin_contact_strata(f, -1);

    MotivicClass Lsq1 = MotivicClass::L_pow(2) - MotivicClass::one();
    MotivicClass LL1 = MotivicClass::L_pow(2) - MotivicClass::L_pow(1);  // L(L-1)
    MotivicClass L1sq = (MotivicClass::L_pow(1) - MotivicClass::one()) *
                        (MotivicClass::L_pow(1) - MotivicClass::one());

    StratumSpec away;
    away.name = "away";
    away.cls_base = Lsq1;
    away.parts = {{0, {OrderConstraint{{0}, 0, {}, true}}},
                  {2, {OrderConstraint{{1}, 0, {}, true}}}};

    StratumSpec first;  // contact a1 with the first exceptional curve only
    first.name = "first-only";
    first.pmin = {1};
    first.cls_base = LL1;
    first.cls_coef = {1};
    first.m_coef = {1};
    first.w_coef = {2};
    first.parts = {{1, {OrderConstraint{{0}, 0, {1}, true}, OrderConstraint{{1}, 0, {}, true}}},
                   {2, {OrderConstraint{{1}, 0, {1}, true}}}};

    StratumSpec second;  // contact a2 with the second exceptional curve only
    second.name = "second-only";
    second.pmin = {1};
    second.cls_base = LL1;
    second.cls_coef = {1};
    second.m_coef = {1};
    second.w_coef = {3};
    second.parts = {{0, {OrderConstraint{{0}, 0, {1}, true}}}};

    StratumSpec both;
    both.name = "both";
    both.pmin = {1, 1};
    both.cls_base = L1sq;
    both.cls_coef = {1, 1};
    both.m_coef = {1, 1};
    both.w_coef = {2, 3};
    both.parts = {{1, {OrderConstraint{{0}, 0, {1, 0}, true},
                       OrderConstraint{{1}, 0, {0, 1}, true}}}};

    ex.rhs = {away, first, second, both};
    ex.expected = geometric_sum(Lsq1, 3, 0);

    ex.profiles = [f](int cap) {
        std::vector<ProfilePiece> out;
        for (int a2 = 0; a2 <= cap; ++a2) {  // chart D1: e = 2 a2, p = a2
            ProfilePiece pc;
            pc.chart = 0;
            pc.constraints = {OrderConstraint{{0}, a2, {}, true}};
            pc.profile = ContactProfile{0, 0, 2 * a2, a2, a2};
            pc.level = piece_level(pc.profile, 2 * a2);
            pc.witness = [f, a2](std::mt19937_64& rng) {
                ArcGen a;
                a.field = f;
                a.coords = {random_order_coeffs(f, a2, 3, rng), random_poly_coeffs(f, 3, rng)};
                return a;
            };
            out.push_back(std::move(pc));
        }
        for (int a1 = 1; a1 <= cap; ++a1)  // chart D2: e = a1 + 2 a2, p = a1 + a2
            for (int a2 = 0; a1 + a2 <= cap; ++a2) {
                ProfilePiece pc;
                pc.chart = 1;
                pc.constraints = {OrderConstraint{{0}, a1, {}, true},
                                  OrderConstraint{{1}, a2, {}, true}};
                pc.profile = ContactProfile{0, 0, a1 + 2 * a2, a1 + a2, a1 + a2};
                pc.level = piece_level(pc.profile, a1 + 2 * a2);
                pc.witness = [f, a1, a2](std::mt19937_64& rng) {
                    ArcGen a;
                    a.field = f;
                    a.coords = {random_order_coeffs(f, a1, 3, rng),
                                random_order_coeffs(f, a2, 3, rng)};
                    return a;
                };
                out.push_back(std::move(pc));
            }
        for (int a1 = 0; a1 <= cap; ++a1) {  // chart C2: e = a1, p = a1
            ProfilePiece pc;
            pc.chart = 2;
            pc.constraints = {OrderConstraint{{1}, a1, {}, true}};
            pc.profile = ContactProfile{0, 0, a1, a1, a1};
            pc.level = piece_level(pc.profile, a1);
            pc.witness = [f, a1](std::mt19937_64& rng) {
                ArcGen a;
                a.field = f;
                std::uniform_int_distribution<int> sh(1, 2);
                a.coords = {random_order_coeffs(f, sh(rng), 2, rng),
                            random_order_coeffs(f, a1, 3, rng)};
                return a;
            };
            out.push_back(std::move(pc));
        }
        return out;
    };
    return ex;
}

CatalogExample catalog_example(const std::string& id, Field f) {
    if (id == "identity") return example_identity(f);
    if (id == "blowup") return example_blowup(f);
    if (id == "weighted-blowup") return example_weighted_blowup(f);
    if (id == "double-blowup") return example_double_blowup(f);
    throw ParseError("unknown catalog example '" + id + "'");
}

std::vector<std::string> catalog_example_ids() {
    return {"identity", "blowup", "weighted-blowup", "double-blowup"};
}

}  // namespace arcspace
