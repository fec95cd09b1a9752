#include "arcspace/counting.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "arcspace/fpcore.hpp"
#include "arcspace/mather.hpp"

namespace arcspace {

namespace {

bool is_prime(std::int64_t q) {
    if (q < 2) return false;
    for (std::int64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

Rational qpow_rat(std::int64_t q, int e) {
    Rational r = 1;
    for (int i = 0; i < e; ++i) r *= q;
    return r;
}

long long qpow_ll(std::int64_t q, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= q;
    return r;
}

struct VecHash {
    std::size_t operator()(const std::vector<std::int64_t>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (std::int64_t x : v) {
            h ^= static_cast<std::size_t>(x);
            h *= 1099511628211ull;
        }
        return h;
    }
};

int window_ord(const std::int64_t* a, int upto) {
    for (int i = 0; i <= upto; ++i)
        if (a[i] != 0) return i;
    return upto + 1;
}

// an equation whose t-expansion along the jet is pinned coefficient by
// coefficient (all-zero targets for variety generators)
struct PinnedEq {
    FpPoly poly;
    std::vector<std::int64_t> target;  // length n+1
};

// Depth-first enumeration of level-n jets over F_q satisfying pinned
// equations, exact/at-least coordinate-ideal order constraints and vanishing
// constant terms.  Equations are linear in each new coefficient layer with the
// Jacobian at the base point as matrix.
struct Enumerator {
    int N = 0, n = 0;
    std::int64_t q = 0;
    std::vector<PinnedEq> eqs;
    std::vector<OrderConstraint> cons;  // concrete orders
    std::vector<int> dedup;
    long long budget = 0;
    bool count_only = false;
    std::function<void(const std::int64_t*)> leaf;

    long long count = 0;
    long long visited = 0;

    std::vector<std::int64_t> cur;
    std::vector<std::vector<std::int64_t>> jac_rows;  // per branch, eqs x N

    void run() {
        cur.assign(static_cast<std::size_t>(N) * (n + 1), 0);
        for (const OrderConstraint& c : cons)
            if (c.exact && c.o0 > n)
                throw DimensionMismatch("order constraint beyond the jet level");
        level0(0);
    }

private:
    bool is_dedup(int i) const {
        return std::find(dedup.begin(), dedup.end(), i) != dedup.end();
    }

    // certified violation check once coefficients through level l are set;
    // returns false to prune
    bool cons_ok(int l) const {
        for (const OrderConstraint& c : cons) {
            int o = c.o0;
            int cur_ord = l + 1;
            for (int i : c.coords)
                cur_ord = std::min(cur_ord, window_ord(&cur[i * (n + 1)], l));
            if (c.exact) {
                if (cur_ord <= l && cur_ord != o) return false;
                if (cur_ord == l + 1 && l >= o) return false;
            } else {
                if (cur_ord <= l && cur_ord < o) return false;
            }
        }
        return true;
    }

    bool cons_settled(int l) const {
        for (const OrderConstraint& c : cons) {
            int cur_ord = l + 1;
            for (int i : c.coords)
                cur_ord = std::min(cur_ord, window_ord(&cur[i * (n + 1)], l));
            if (c.exact) {
                if (cur_ord > l) return false;
            } else {
                if (cur_ord > l && l + 1 < c.o0) return false;
            }
        }
        return true;
    }

    void spend() {
        if (++visited > budget)
            throw BudgetExceeded("enumeration budget exhausted", n);
    }

    void emit() {
        ++count;
        if (!count_only && leaf) leaf(cur.data());
    }

    void descend(int l) {
        if (!cons_ok(l)) return;
        if (l == n) {
            emit();
            return;
        }
        if (count_only && eqs.empty() && cons_settled(l)) {
            count += qpow_ll(q, N * (n - l));
            return;
        }
        extend(l + 1);
    }

    void level0(int coord) {
        if (coord == 0) spend();
        if (coord == N) {
            for (const PinnedEq& e : eqs) {
                std::vector<std::int64_t> x0(N);
                for (int i = 0; i < N; ++i) x0[i] = cur[i * (n + 1)];
                if (e.poly.eval(x0.data()) != e.target[0]) return;
            }
            // the Jacobian at the base point drives every later layer
            jac_rows.clear();
            std::vector<std::int64_t> x0(N);
            for (int i = 0; i < N; ++i) x0[i] = cur[i * (n + 1)];
            for (const PinnedEq& e : eqs) {
                std::vector<std::int64_t> row(N);
                for (int i = 0; i < N; ++i) {
                    FpPoly dp = e.poly;
                    // derivative of the compiled polynomial in variable i
                    std::vector<FpPoly::Term> terms;
                    for (const auto& t : e.poly.terms) {
                        if (t.exp[i] == 0) continue;
                        FpPoly::Term nt = t;
                        nt.c = t.c * t.exp[i] % q;
                        nt.exp[i] -= 1;
                        if (nt.c != 0) terms.push_back(std::move(nt));
                    }
                    dp.terms = std::move(terms);
                    row[i] = dp.eval(x0.data());
                }
                jac_rows.push_back(std::move(row));
            }
            descend(0);
            return;
        }
        if (is_dedup(coord)) {
            cur[coord * (n + 1)] = 0;
            level0(coord + 1);
            return;
        }
        for (std::int64_t v = 0; v < q; ++v) {
            cur[coord * (n + 1)] = v;
            level0(coord + 1);
        }
        cur[coord * (n + 1)] = 0;
    }

    void extend(int l) {
        spend();
        if (eqs.empty()) {
            odometer(l, 0);
            return;
        }
        int rows = static_cast<int>(eqs.size());
        std::vector<std::int64_t> A(static_cast<std::size_t>(rows) * N);
        std::vector<std::int64_t> b(rows);
        for (int e = 0; e < rows; ++e) {
            for (int i = 0; i < N; ++i) A[e * N + i] = jac_rows[e][i];
            std::vector<std::int64_t> ev = eqs[e].poly.eval_series(cur.data(), n + 1, l + 1);
            b[e] = ((eqs[e].target[l] - ev[l]) % q + q) % q;
        }
        std::vector<std::int64_t> part;
        std::vector<std::vector<std::int64_t>> kernel;
        if (!fp_solve(A, b, rows, N, q, part, kernel)) return;
        int kdim = static_cast<int>(kernel.size());
        std::vector<std::int64_t> combo(kdim, 0);
        while (true) {
            for (int i = 0; i < N; ++i) {
                std::int64_t v = part[i];
                for (int j = 0; j < kdim; ++j) v += combo[j] * kernel[j][i];
                cur[i * (n + 1) + l] = ((v % q) + q) % q;
            }
            descend(l);
            int j = 0;
            while (j < kdim && ++combo[j] == q) combo[j++] = 0;
            if (j == kdim) break;
        }
        for (int i = 0; i < N; ++i) cur[i * (n + 1) + l] = 0;
    }

    void odometer(int l, int coord) {
        if (coord == N) {
            descend(l);
            return;
        }
        for (std::int64_t v = 0; v < q; ++v) {
            cur[coord * (n + 1) + l] = v;
            odometer(l, coord + 1);
        }
        cur[coord * (n + 1) + l] = 0;
    }
};

std::vector<PinnedEq> variety_eqs(const AffineVariety& v, std::int64_t q, int n) {
    std::vector<PinnedEq> out;
    for (const MultiPoly& g : v.gens)
        out.push_back({FpPoly::compile(g, q), std::vector<std::int64_t>(n + 1, 0)});
    return out;
}

std::vector<OrderConstraint> instantiate(const std::vector<OrderConstraint>& cs,
                                         const std::vector<int>& params) {
    std::vector<OrderConstraint> out;
    for (const OrderConstraint& c : cs)
        out.push_back(OrderConstraint{c.coords, c.value_at(params), {}, c.exact});
    return out;
}

bool jet_meets(const std::vector<OrderConstraint>& cons, const std::int64_t* flat, int n) {
    for (const OrderConstraint& c : cons) {
        int o = n + 1;
        for (int i : c.coords) o = std::min(o, window_ord(flat + i * (n + 1), n));
        if (c.exact ? o != c.o0 : o < c.o0) return false;
    }
    return true;
}

Jet unpack_flat(const std::int64_t* flat, int N, int n, Field f) {
    Jet j;
    j.level = n;
    j.coeffs.resize(N);
    for (int i = 0; i < N; ++i) {
        j.coeffs[i].reserve(n + 1);
        for (int l = 0; l <= n; ++l) j.coeffs[i].emplace_back(f, flat[i * (n + 1) + l]);
    }
    return j;
}

int true_ord(const std::vector<FieldValue>& coeffs) {
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (!coeffs[i].is_zero()) return static_cast<int>(i);
    return -1;  // identically zero
}

bool arc_meets(const std::vector<OrderConstraint>& cons, const ArcGen& arc) {
    for (const OrderConstraint& c : cons) {
        int o = -1;
        for (int i : c.coords) {
            int oi = true_ord(arc.coords[i]);
            if (oi < 0) continue;
            if (o < 0 || oi < o) o = oi;
        }
        if (o < 0) return false;
        if (c.exact ? o != c.o0 : o < c.o0) return false;
    }
    return true;
}

struct PieceState {
    ProfileRow row;
    std::vector<std::vector<std::int64_t>> image_keys;  // sorted
    std::set<std::vector<int>> image_orders;            // sentinel: -(level+1)
    std::string error;
};

// deterministic reservoir of flat jets
struct Reservoir {
    std::size_t cap;
    std::mt19937_64& rng;
    long long seen = 0;
    std::vector<std::vector<std::int64_t>> items;

    void offer(const std::int64_t* flat, std::size_t len) {
        ++seen;
        if (items.size() < cap) {
            items.emplace_back(flat, flat + len);
        } else if (cap > 0) {
            std::uniform_int_distribution<long long> d(0, seen - 1);
            long long j = d(rng);
            if (j < static_cast<long long>(cap))
                items[static_cast<std::size_t>(j)].assign(flat, flat + len);
        }
    }
};

void run_piece(const CatalogExample& ex, const ProfilePiece& piece, std::int64_t q,
               const CountOptions& opt, unsigned piece_seed, PieceState& st) {
    const ChartSpec& chart = ex.charts[piece.chart];
    int N = chart.X.ambient_dim;
    int n = piece.level;
    int d = ex.d;
    std::mt19937_64 rng(piece_seed);
    st.row.chart = piece.chart;
    st.row.profile = piece.profile;
    st.row.level = n;

    bool free_chart = chart.X.gens.empty();
    auto lift_test = [&](const std::int64_t* flat) -> bool {
        if (free_chart) return true;
        if (piece.liftable) return piece.liftable(flat, n, q);
        Lift r = is_liftable(chart.X, unpack_flat(flat, N, n, chart.X.field), q);
        return r == Lift::Yes;
    };

    std::vector<FpPoly> push;
    for (const MultiPoly& c : chart.f.components) push.push_back(FpPoly::compile(c, q));
    int M = static_cast<int>(push.size());

    std::unordered_map<std::vector<std::int64_t>, long long, VecHash> image;
    Reservoir members_sample{static_cast<std::size_t>(opt.lift_samples), rng};
    Reservoir rejected_sample{static_cast<std::size_t>(opt.lift_samples), rng};

    Enumerator en;
    en.N = N;
    en.n = n;
    en.q = q;
    en.eqs = variety_eqs(chart.X, q, n);
    en.cons = piece.constraints;
    en.dedup = chart.dedup_zero;
    en.budget = opt.budget;
    long long members = 0;
    std::vector<std::int64_t> img(static_cast<std::size_t>(M) * (n + 1));
    en.leaf = [&](const std::int64_t* flat) {
        if (!lift_test(flat)) {
            rejected_sample.offer(flat, static_cast<std::size_t>(N) * (n + 1));
            return;
        }
        ++members;
        members_sample.offer(flat, static_cast<std::size_t>(N) * (n + 1));
        for (int c = 0; c < M; ++c) {
            std::vector<std::int64_t> ev = push[c].eval_series(flat, n + 1, n + 1);
            std::copy(ev.begin(), ev.end(), img.begin() + c * (n + 1));
        }
        image[img] += 1;
    };
    en.run();

    st.row.members = members;
    st.row.image = static_cast<long long>(image.size());
    Rational norm = qpow_rat(q, n * d);
    st.row.measure = Rational(members) / norm;
    st.row.image_measure = Rational(st.row.image) / norm;

    long long qe = qpow_ll(q, piece.profile.e);
    st.row.fibers_ok = true;
    for (const auto& [k, v] : image)
        if (v != qe) st.row.fibers_ok = false;
    st.row.ratio_ok = (members == qe * st.row.image);

    st.image_keys.reserve(image.size());
    for (const auto& [k, v] : image) st.image_keys.push_back(k);
    std::sort(st.image_keys.begin(), st.image_keys.end());
    for (const auto& k : st.image_keys) {
        std::vector<int> ords(M);
        for (int c = 0; c < M; ++c) {
            int o = window_ord(k.data() + c * (n + 1), n);
            ords[c] = (o > n) ? -(n + 1) : o;
        }
        st.image_orders.insert(std::move(ords));
    }

    // sampled full liftable fibers: right cardinality and contained in the piece
    st.row.union_ok = true;
    if (!st.image_keys.empty()) {
        std::size_t take = std::min<std::size_t>(opt.fiber_samples, st.image_keys.size());
        for (std::size_t s = 0; s < take; ++s) {
            const auto& gamma = st.image_keys[s * st.image_keys.size() / take];
            Enumerator fb;
            fb.N = N;
            fb.n = n;
            fb.q = q;
            fb.eqs = variety_eqs(chart.X, q, n);
            for (int c = 0; c < M; ++c)
                fb.eqs.push_back({push[c], std::vector<std::int64_t>(
                                               gamma.begin() + c * (n + 1),
                                               gamma.begin() + (c + 1) * (n + 1))});
            fb.dedup = chart.dedup_zero;
            fb.budget = opt.budget;
            long long fiber_members = 0;
            fb.leaf = [&](const std::int64_t* flat) {
                if (!lift_test(flat)) return;
                ++fiber_members;
                if (!jet_meets(piece.constraints, flat, n)) st.row.union_ok = false;
            };
            fb.run();
            if (fiber_members != qe) st.row.union_ok = false;
        }
    }

    // stability: the liftable count at the next level grows by exactly q^d
    {
        Enumerator st2;
        st2.N = N;
        st2.n = n + 1;
        st2.q = q;
        st2.eqs = variety_eqs(chart.X, q, n + 1);
        st2.cons = piece.constraints;
        st2.dedup = chart.dedup_zero;
        st2.budget = opt.budget;
        long long members2 = 0;
        if (free_chart) {
            st2.count_only = true;
            st2.run();
            members2 = st2.count;
        } else {
            st2.leaf = [&](const std::int64_t* flat) {
                bool ok = piece.liftable ? piece.liftable(flat, n + 1, q)
                                         : is_liftable(chart.X,
                                                       unpack_flat(flat, N, n + 1,
                                                                   chart.X.field),
                                                       q) == Lift::Yes;
                if (ok) ++members2;
            };
            st2.run();
        }
        st.row.stability_ok = (members2 == members * qpow_ll(q, d));
    }

    // generic arc-extension test agrees with the fast one on samples
    st.row.lift_ok = true;
    if (!free_chart && piece.liftable) {
        for (const auto& flat : members_sample.items) {
            Lift r = is_liftable(chart.X, unpack_flat(flat.data(), N, n, chart.X.field), q);
            if (r == Lift::No) st.row.lift_ok = false;
            if (r == Lift::Undetermined) ++st.row.undetermined;
        }
        for (const auto& flat : rejected_sample.items) {
            Lift r = is_liftable(chart.X, unpack_flat(flat.data(), N, n, chart.X.field), q);
            if (r == Lift::Yes) st.row.lift_ok = false;
            if (r == Lift::Undetermined) ++st.row.undetermined;
        }
    }

    // witness arcs carry the labelled contact data through the full pipeline
    st.row.witness_ok = true;
    for (int w = 0; w < opt.witness_samples; ++w) {
        bool verified = false;
        for (int tries = 0; tries < 8 && !verified; ++tries) {
            ArcGen arc = piece.witness(rng);
            if (!arc_meets(piece.constraints, arc)) continue;
            try {
                ContactProfile pr = contact_profile(chart.f, ex.Z, ex.V, arc);
                if (pr != piece.profile) {
                    st.row.witness_ok = false;
                    break;
                }
                verified = true;
            } catch (const NotGenericallyTransverse&) {
                // resample; witnesses are generic by construction
            }
        }
        if (!verified) st.row.witness_ok = false;
    }
}

// can an observed image-order tuple from piece A coincide with one from B?
bool orders_compatible(const std::vector<int>& a, int la, const std::vector<int>& b,
                       int lb) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        bool ca = a[i] >= 0, cb = b[i] >= 0;
        if (ca && cb) {
            if (a[i] != b[i]) return false;
        } else if (ca && !cb) {
            if (a[i] < lb + 1) return false;
        } else if (!ca && cb) {
            if (b[i] < la + 1) return false;
        }
    }
    return true;
}

bool images_disjoint(const PieceState& A, const PieceState& B) {
    bool potential = false;
    for (const auto& a : A.image_orders) {
        for (const auto& b : B.image_orders)
            if (orders_compatible(a, A.row.level, b, B.row.level)) {
                potential = true;
                break;
            }
        if (potential) break;
    }
    if (!potential) return true;
    if (A.row.level != B.row.level) return false;  // cannot certify, flag it
    std::vector<std::vector<std::int64_t>> common;
    std::set_intersection(A.image_keys.begin(), A.image_keys.end(), B.image_keys.begin(),
                          B.image_keys.end(), std::back_inserter(common));
    return common.empty();
}

}  // namespace

Rational cylinder_measure_counting(const CatalogExample& ex, const StratumSpec& s,
                                   const std::vector<int>& params, std::int64_t q,
                                   int level, const CountOptions& opt) {
    if (!is_prime(q)) throw ParseError("q must be prime");
    if (ex.field.is_prime_field() && ex.field.p != q)
        throw FieldMismatch("example field does not match q");
    s.check_params(params);
    int maxo = 0;
    for (const auto& part : s.parts)
        for (const auto& c : part.constraints) maxo = std::max(maxo, c.value_at(params));
    int n = (level >= 0) ? level : std::max({s.m_at(params), maxo, 1});
    if (n < maxo) throw DimensionMismatch("level below an order constraint");

    auto count_at = [&](int lvl) {
        long long total = 0;
        for (const auto& part : s.parts) {
            const AffineVariety& X =
                (part.chart < 0) ? ex.target : ex.charts[part.chart].X;
            Enumerator en;
            en.N = X.ambient_dim;
            en.n = lvl;
            en.q = q;
            en.eqs = variety_eqs(X, q, lvl);
            en.cons = instantiate(part.constraints, params);
            if (part.chart >= 0) en.dedup = ex.charts[part.chart].dedup_zero;
            en.budget = opt.budget;
            if (X.gens.empty()) {
                en.count_only = true;
                en.run();
                total += en.count;
            } else {
                long long c = 0;
                en.leaf = [&](const std::int64_t* flat) {
                    if (is_liftable(X, unpack_flat(flat, X.ambient_dim, lvl, X.field), q) ==
                        Lift::Yes)
                        ++c;
                };
                en.run();
                total += c;
            }
        }
        return total;
    };

    long long c0 = count_at(n);
    long long c1 = count_at(n + 1);
    if (c1 != c0 * qpow_ll(q, ex.d))
        throw InsufficientPrecision("counting measure not stable between levels " +
                                    std::to_string(n) + " and " + std::to_string(n + 1));
    return Rational(c0) / qpow_rat(q, n * ex.d);
}

std::string CountingReport::text() const {
    std::ostringstream os;
    os << "example: " << example << "\n";
    os << "q: " << q << "\n";
    os << "cap: " << cap << "\n";
    for (const ProfileRow& r : rows) {
        os << "piece chart=" << r.chart << " a=" << r.profile.a << " b=" << r.profile.b
           << " e=" << r.profile.e << " p=" << r.profile.p << " q=" << r.profile.q
           << " level=" << r.level << ": members=" << r.members << " image=" << r.image
           << " fibers=" << (r.fibers_ok ? "ok" : "FAIL")
           << " union=" << (r.union_ok ? "ok" : "FAIL")
           << " ratio=" << (r.ratio_ok ? "ok" : "FAIL")
           << " stability=" << (r.stability_ok ? "ok" : "FAIL")
           << " lift=" << (r.lift_ok ? "ok" : "FAIL")
           << " witness=" << (r.witness_ok ? "ok" : "FAIL");
        if (r.undetermined > 0) os << " undetermined=" << r.undetermined;
        os << "\n";
    }
    os << "disjoint: " << (disjoint_ok ? "ok" : "FAIL") << "\n";
    os << "lhs-sum: " << lhs_sum.str() << "\n";
    os << "rhs-sum: " << rhs_sum.str() << "\n";
    os << "sums: " << (sums_ok ? "ok" : "FAIL") << "\n";
    os << "pass: " << (pass ? "yes" : "no") << "\n";
    return os.str();
}

CountingReport cov_check_counting(const CatalogExample& ex, std::int64_t q, int cap,
                                  const CountOptions& opt) {
    if (!is_prime(q)) throw ParseError("q must be prime");
    if (ex.field.is_prime_field() && ex.field.p != q)
        throw FieldMismatch("example field does not match q");
    std::vector<ProfilePiece> pieces = ex.profiles(cap);
    std::vector<PieceState> states(pieces.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= pieces.size()) break;
            try {
                run_piece(ex, pieces[i], q, opt,
                          opt.seed ^ (0x9e3779b9u * static_cast<unsigned>(i + 1)),
                          states[i]);
            } catch (const std::exception& e) {
                states[i].error = e.what();
            }
        }
    };
    int nthreads = std::max(1, opt.threads);
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (const PieceState& st : states)
        if (!st.error.empty()) throw BudgetExceeded("piece failed: " + st.error);

    CountingReport rep;
    rep.example = ex.id;
    rep.q = q;
    rep.cap = cap;
    rep.disjoint_ok = true;
    rep.sums_ok = true;
    rep.lhs_sum = 0;
    rep.rhs_sum = 0;
    for (std::size_t i = 0; i < states.size(); ++i) {
        const ProfileRow& r = states[i].row;
        rep.rows.push_back(r);
        Rational lhs_term = r.image_measure / qpow_rat(q, r.profile.q);
        Rational rhs_term = r.measure / qpow_rat(q, r.profile.q + r.profile.e);
        if (lhs_term != rhs_term) rep.sums_ok = false;
        rep.lhs_sum += lhs_term;
        rep.rhs_sum += rhs_term;
        for (std::size_t j = 0; j < i; ++j)
            if (!images_disjoint(states[i], states[j])) rep.disjoint_ok = false;
    }
    if (rep.lhs_sum != rep.rhs_sum) rep.sums_ok = false;
    rep.pass = rep.disjoint_ok && rep.sums_ok;
    for (const ProfileRow& r : rep.rows)
        if (!r.pass()) rep.pass = false;
    return rep;
}

}  // namespace arcspace
