#include "arcspace/jets.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "arcspace/fpcore.hpp"

namespace arcspace {

namespace {

bool is_prime(std::int64_t q) {
    if (q < 2) return false;
    for (std::int64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

using Flat = std::vector<std::int64_t>;

// Enumeration engine over F_q with a fixed target level (stride = level+1).
struct Engine {
    std::int64_t q;
    int N;
    int stride;
    std::vector<FpPoly> gens;
    std::vector<std::vector<FpPoly>> jac;  // jac[g][j]
    long long budget;
    long long used = 0;
    int threads = 1;

    Engine(const AffineVariety& v, int level, std::int64_t q_, const EnumOptions& opt)
        : q(q_), N(v.ambient_dim), stride(level + 1), budget(opt.budget),
          threads(std::max(1, opt.threads)) {
        if (!is_prime(q)) throw ParseError("q must be prime");
        if (v.field.p != 0 && v.field.p != q)
            throw FieldMismatch("variety field does not match q");
        for (const auto& g : v.gens) {
            gens.push_back(FpPoly::compile(g, q));
            std::vector<FpPoly> row;
            for (int j = 0; j < N; ++j) row.push_back(FpPoly::compile(g.derivative(j), q));
            jac.push_back(std::move(row));
        }
    }

    void spend(long long n, int level) {
        used += n;
        if (used > budget)
            throw BudgetExceeded("enumeration budget exceeded", level);
    }

    // all base points of the variety (level-0 jets)
    std::vector<Flat> level0() {
        std::vector<Flat> out;
        std::vector<std::int64_t> pt(N, 0);
        long long total = 1;
        for (int i = 0; i < N; ++i) total *= q;
        spend(total, 0);
        while (true) {
            bool ok = true;
            for (const auto& g : gens)
                if (g.eval(pt.data()) != 0) { ok = false; break; }
            if (ok) {
                Flat f(static_cast<std::size_t>(N) * stride, 0);
                for (int i = 0; i < N; ++i) f[i * stride] = pt[i];
                out.push_back(std::move(f));
            }
            int i = 0;
            while (i < N && ++pt[i] == q) pt[i++] = 0;
            if (i == N) break;
        }
        return out;
    }

    // children of one jet (valid through level k-1) at level k
    void extend_one(const Flat& jet, int k, std::vector<Flat>& out) const {
        int r = static_cast<int>(gens.size());
        std::vector<std::int64_t> A(static_cast<std::size_t>(r) * N, 0);
        std::vector<std::int64_t> b(r, 0);
        std::vector<std::int64_t> x0(N);
        for (int i = 0; i < N; ++i) x0[i] = jet[i * stride];
        for (int g = 0; g < r; ++g) {
            auto ev = gens[g].eval_series(jet.data(), stride, k + 1);
            b[g] = (q - ev[k]) % q;
            for (int j = 0; j < N; ++j) A[g * N + j] = jac[g][j].eval(x0.data());
        }
        std::vector<std::int64_t> part;
        std::vector<std::vector<std::int64_t>> kernel;
        if (r == 0) {
            part.assign(N, 0);
            kernel.clear();
            for (int j = 0; j < N; ++j) {
                std::vector<std::int64_t> v(N, 0);
                v[j] = 1;
                kernel.push_back(std::move(v));
            }
        } else if (!fp_solve(std::move(A), std::move(b), r, N, q, part, kernel)) {
            return;
        }
        int free = static_cast<int>(kernel.size());
        std::vector<int> combo(free, 0);
        while (true) {
            Flat child = jet;
            for (int j = 0; j < N; ++j) {
                std::int64_t v = part[j];
                for (int f = 0; f < free; ++f) v += combo[f] * kernel[f][j];
                child[j * stride + k] = v % q;
            }
            out.push_back(std::move(child));
            int i = 0;
            while (i < free && ++combo[i] == q) combo[i++] = 0;
            if (i == free) break;
        }
    }

    std::vector<Flat> extend_all(const std::vector<Flat>& jets, int k) {
        long long pw = 1;  // upper bound q^N on children per jet
        for (int i = 0; i < N; ++i) pw *= q;
        spend(static_cast<long long>(jets.size()), k);
        std::vector<Flat> out;
        if (threads <= 1 || jets.size() < 1024) {
            for (const auto& j : jets) extend_one(j, k, out);
        } else {
            int nt = threads;
            std::vector<std::vector<Flat>> parts(nt);
            std::vector<std::thread> pool;
            std::size_t chunk = (jets.size() + nt - 1) / nt;
            for (int t = 0; t < nt; ++t) {
                pool.emplace_back([&, t] {
                    std::size_t lo = t * chunk, hi = std::min(jets.size(), lo + chunk);
                    for (std::size_t i = lo; i < hi; ++i)
                        extend_one(jets[i], k, parts[t]);
                });
            }
            for (auto& th : pool) th.join();
            for (auto& p : parts)
                for (auto& j : p) out.push_back(std::move(j));
        }
        spend(static_cast<long long>(out.size()), k);
        return out;
    }
};

JetSet make_set(int level, int N, std::int64_t q, std::vector<Flat> jets) {
    std::sort(jets.begin(), jets.end());
    JetSet s;
    s.level = level;
    s.ncoords = N;
    s.q = q;
    s.jets = std::move(jets);
    return s;
}

Flat pack_to_stride(const Jet& jet, int stride) {
    Flat f(static_cast<std::size_t>(jet.ncoords()) * stride, 0);
    for (int i = 0; i < jet.ncoords(); ++i)
        for (int j = 0; j <= jet.level; ++j)
            f[i * stride + j] = jet.coeffs[i][j].rep();
    return f;
}

}  // namespace

Jet JetSet::unpack(std::size_t i) const {
    Field f = prime_field(q);
    Jet out;
    out.level = level;
    const auto& flat = jets[i];
    for (int c = 0; c < ncoords; ++c) {
        std::vector<FieldValue> coeffs;
        for (int j = 0; j <= level; ++j)
            coeffs.emplace_back(f, flat[c * (level + 1) + j]);
        out.coeffs.push_back(std::move(coeffs));
    }
    return out;
}

std::vector<std::int64_t> JetSet::pack(const Jet& jet) {
    return pack_to_stride(jet, jet.level + 1);
}

JetSet enumerate_jets(const AffineVariety& v, int n, std::int64_t q,
                      const EnumOptions& opt) {
    Engine e(v, n, q, opt);
    std::vector<Flat> jets = e.level0();
    for (int k = 1; k <= n; ++k) jets = e.extend_all(jets, k);
    return make_set(n, v.ambient_dim, q, std::move(jets));
}

JetSet fiber_jets(const AffineVariety& v, int n, const Jet& gamma, std::int64_t q,
                  const EnumOptions& opt) {
    if (gamma.level > n) throw DimensionMismatch("fiber level below the jet level");
    Engine e(v, n, q, opt);
    std::vector<Flat> jets{pack_to_stride(gamma, n + 1)};
    for (int k = gamma.level + 1; k <= n; ++k) jets = e.extend_all(jets, k);
    return make_set(n, v.ambient_dim, q, std::move(jets));
}

Order ord_ideal_jet(const SubschemeIdeal& ideal, const Jet& jet, Field f) {
    std::vector<TruncSeries> pt = jet.as_series(f);
    return ord_ideal_series(pt, ideal);
}

namespace {

// does jet (valid through its level) extend to target_level?
bool extends_to(const AffineVariety& v, const Jet& jet, int target_level,
                std::int64_t q, const EnumOptions& opt) {
    if (target_level <= jet.level) return true;
    Engine e(v, target_level, q, opt);
    std::vector<Flat> jets{pack_to_stride(jet, target_level + 1)};
    for (int k = jet.level + 1; k <= target_level; ++k) {
        jets = e.extend_all(jets, k);
        if (jets.empty()) return false;
    }
    return true;
}

Lift lift_search(const AffineVariety& v, const SubschemeIdeal& jac, const Jet& jet,
                 std::int64_t q, const EnumOptions& opt) {
    Field f = prime_field(q);
    int m = jet.level;
    // polynomial-arc shortcut: the jet, read as a polynomial arc, may lie on
    // the variety exactly
    {
        std::vector<std::vector<FieldValue>> coords;
        for (const auto& c : jet.coeffs) coords.push_back(c);
        bool exact = true;
        for (const auto& g : v.gens)
            if (!g.eval_polys(coords).empty()) { exact = false; break; }
        if (exact) return Lift::Yes;
    }
    Order a = ord_ideal_jet(jac, jet, f);
    if (a.finite && a.k <= m)
        return extends_to(v, jet, m + a.k, q, opt) ? Lift::Yes : Lift::No;
    // order of the Jacobian ideal not certified at this level: deepen
    if (m + 1 > opt.lift_depth_cap) return Lift::Undetermined;
    Engine e(v, m + 1, q, opt);
    std::vector<Flat> ext = e.extend_all({pack_to_stride(jet, m + 2)}, m + 1);
    if (ext.empty()) return Lift::No;
    JetSet children = make_set(m + 1, v.ambient_dim, q, std::move(ext));
    bool any_undetermined = false;
    for (std::size_t i = 0; i < children.size(); ++i) {
        Lift r = lift_search(v, jac, children.unpack(i), q, opt);
        if (r == Lift::Yes) return Lift::Yes;
        if (r == Lift::Undetermined) any_undetermined = true;
    }
    return any_undetermined ? Lift::Undetermined : Lift::No;
}

}  // namespace

Lift is_liftable(const AffineVariety& v, const Jet& jet, std::int64_t q,
                 const EnumOptions& opt) {
    if (v.field.p != 0 && v.field.p != q)
        throw FieldMismatch("variety field does not match q");
    SubschemeIdeal jac = jacobian_ideal(v);
    try {
        return lift_search(v, jac, jet, q, opt);
    } catch (const BudgetExceeded&) {
        return Lift::Undetermined;
    }
}

LiftableResult liftable_set(const AffineVariety& v, int n, std::int64_t q,
                            const EnumOptions& opt) {
    JetSet all = enumerate_jets(v, n, q, opt);
    LiftableResult res;
    res.liftable.level = res.undetermined.level = n;
    res.liftable.ncoords = res.undetermined.ncoords = v.ambient_dim;
    res.liftable.q = res.undetermined.q = q;
    for (std::size_t i = 0; i < all.size(); ++i) {
        Lift r = is_liftable(v, all.unpack(i), q, opt);
        if (r == Lift::Yes)
            res.liftable.jets.push_back(all.jets[i]);
        else if (r == Lift::Undetermined)
            res.undetermined.jets.push_back(all.jets[i]);
    }
    return res;
}

std::string dump_jets(const JetSet& s) {
    std::ostringstream os;
    for (const auto& j : s.jets) {
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i) os << ' ';
            os << j[i];
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace arcspace
