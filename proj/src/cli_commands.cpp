#include "arcspace/cli.hpp"

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "arcspace/catalog.hpp"
#include "arcspace/counting.hpp"
#include "arcspace/integrate.hpp"
#include "arcspace/jets.hpp"
#include "arcspace/mather.hpp"
#include "arcspace/scene.hpp"

namespace arcspace {

namespace {

std::string yn(bool b) { return b ? "yes" : "no"; }

std::string vec_str(const std::vector<int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s + "]";
}

long long qpow_ll(std::int64_t q, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= q;
    return r;
}

// split pre-rendered "key: value" lines into report entries
void absorb_text(Report& rep, const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::size_t sep = line.find(": ");
        if (sep == std::string::npos)
            rep.add(line, "");
        else
            rep.add(line.substr(0, sep), line.substr(sep + 2));
    }
}

struct Options {
    std::string scene_path;
    std::int64_t q = 2;
    int P = 2;
    int level = -1;
    int precision = 24;
    long long budget = 2000000000;
    int threads = 1;
    bool allow_undetermined = false;
    bool json = false;
};

int finish(Report& rep, const Options& opt,
           std::chrono::steady_clock::time_point start) {
    rep.add("pass", yn(rep.pass));
    if (rep.undetermined > 0) rep.add("undetermined", std::to_string(rep.undetermined));
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    rep.add("time-ms", std::to_string(ms));
    std::cout << (opt.json ? rep.json_str() : rep.text());
    bool und_ok = rep.undetermined == 0 || opt.allow_undetermined;
    return (rep.pass && und_ok) ? 0 : 1;
}

int cmd_invariants(const Options& opt, const std::string& arc_name,
                   const std::vector<std::string>& subschemes) {
    auto start = std::chrono::steady_clock::now();
    Scene sc = load_scene(opt.scene_path);
    const Scene::NamedArc& na = sc.arc(arc_name);
    const AffineVariety& X = sc.variety(na.on);
    Report rep;
    rep.add("command", "invariants");
    rep.add("arc", arc_name);
    rep.add("variety", na.on);
    DiffProfile df = invariant_factors(X, na.arc, opt.precision);
    rep.add("a", std::to_string(df.total()));
    rep.add("torsion", vec_str(df.torsion));
    rep.add("free-rank", std::to_string(df.free_rank));
    Order jac = ord_ideal(na.arc, jacobian_ideal(X), opt.precision);
    rep.add("ord-jacobian", jac.to_string());
    for (const std::string& s : subschemes) {
        Order o = ord_ideal(na.arc, sc.subscheme(s), opt.precision);
        rep.add("ord " + s, o.to_string());
    }
    return finish(rep, opt, start);
}

int cmd_mather(const Options& opt, const std::string& morphism, const std::string& arc) {
    auto start = std::chrono::steady_clock::now();
    Scene sc = load_scene(opt.scene_path);
    const MorphismPres& f = sc.morphism(morphism);
    const Scene::NamedArc& na = sc.arc(arc);
    if (na.on != f.source.name)
        throw ParseError("arc '" + arc + "' lies on '" + na.on + "', not on the source '" +
                         f.source.name + "'");
    Report rep;
    rep.add("command", "mather");
    rep.add("morphism", morphism);
    rep.add("arc", arc);
    DiscrepancyResult r = mather_discrepancy(f, na.arc);
    rep.add("e", std::to_string(r.e));
    rep.add("diagonal", vec_str(r.diag));
    rep.add("a", std::to_string(r.a));
    rep.add("b", std::to_string(r.b));
    rep.add("c", std::to_string(r.c));
    bool lower = r.c - r.a <= r.e;
    bool upper = r.e <= std::min(r.c, r.c - r.a + r.b);
    rep.add("bound c-a <= e", yn(lower));
    rep.add("bound e <= min(c, c-a+b)", yn(upper));
    rep.pass = lower && upper;
    return finish(rep, opt, start);
}

int cmd_count_jets(const Options& opt, const std::string& variety, int level,
                   bool liftable, const std::string& fiber, bool dump) {
    auto start = std::chrono::steady_clock::now();
    Scene sc = load_scene(opt.scene_path);
    const AffineVariety& X = sc.variety(variety);
    Report rep;
    rep.add("command", "count-jets");
    rep.add("variety", variety);
    rep.add("level", std::to_string(level));
    rep.add("q", std::to_string(opt.q));
    EnumOptions eopt;
    eopt.budget = opt.budget;
    eopt.threads = opt.threads;

    JetSet jets;
    if (!fiber.empty()) {
        std::size_t at = fiber.find('@');
        if (at == std::string::npos)
            throw ParseError("--fiber expects ARC@LEVEL, got '" + fiber + "'");
        std::string arc_name = fiber.substr(0, at);
        int m = std::stoi(fiber.substr(at + 1));
        const Scene::NamedArc& na = sc.arc(arc_name);
        if (na.on != variety)
            throw ParseError("arc '" + arc_name + "' lies on '" + na.on + "'");
        Jet gamma = truncate_arc(na.arc, m);
        rep.add("fiber-over", arc_name + "@" + std::to_string(m));
        jets = fiber_jets(X, level, gamma, opt.q, eopt);
    } else {
        jets = enumerate_jets(X, level, opt.q, eopt);
    }
    rep.add("jets", std::to_string(jets.size()));
    if (liftable) {
        long long yes = 0;
        for (std::size_t i = 0; i < jets.size(); ++i) {
            Lift r = is_liftable(X, jets.unpack(i), opt.q, eopt);
            if (r == Lift::Yes) ++yes;
            if (r == Lift::Undetermined) ++rep.undetermined;
        }
        rep.add("liftable", std::to_string(yes));
    }
    if (dump) rep.add("dump", "\n" + dump_jets(jets));
    return finish(rep, opt, start);
}

void suite_cov_exact(Report& rep, const CatalogExample& ex) {
    ExactCovReport r = cov_check_exact(ex);
    absorb_text(rep, r.text());
    rep.pass = r.pass;
}

void suite_cov_count(Report& rep, const CatalogExample& ex, const Options& opt) {
    CountOptions copt;
    copt.budget = opt.budget;
    copt.threads = opt.threads;
    CountingReport r = cov_check_counting(ex, opt.q, opt.P, copt);
    absorb_text(rep, r.text());
    rep.pass = r.pass;
    for (const ProfileRow& row : r.rows) rep.undetermined += row.undetermined;
}

void suite_stability(Report& rep, const CatalogExample& ex, const Options& opt) {
    auto run = [&](const char* side, const StratumSpec& s) {
        for (int bump = 0; bump <= (s.pmin.empty() ? 0 : 1); ++bump) {
            std::vector<int> params = s.pmin;
            for (int& p : params) p += bump;
            Rational counted = cylinder_measure_counting(ex, s, params, opt.q, opt.level);
            Rational exact =
                specialize_q(cylinder_measure_exact(s, params, ex.d), Rational(opt.q));
            bool ok = counted == exact;
            rep.add(std::string(side) + " " + s.name + " " + vec_str(params),
                    counted.str() + (ok ? " matches" : " MISMATCH " + exact.str()));
            if (!ok) rep.pass = false;
        }
    };
    for (const StratumSpec& s : ex.lhs) run("lhs", s);
    for (const StratumSpec& s : ex.rhs) run("rhs", s);
}

void suite_additivity(Report& rep, const CatalogExample& ex, int samples) {
    std::mt19937_64 rng(20240817);
    int charts_checked = 0;
    for (std::size_t ci = 0; ci < ex.charts.size(); ++ci) {
        const ChartSpec& ch = ex.charts[ci];
        if (!ch.mid || !ch.bottom) continue;
        ++charts_checked;
        int ok = 0, bad = 0, done = 0;
        for (int tries = 0; done < samples && tries < 4 * samples; ++tries) {
            ArcGen arc = ch.sample(rng);
            try {
                int total = mather_discrepancy(ch.f, arc).e;
                int top = mather_discrepancy(*ch.mid, arc).e;
                int bottom = mather_discrepancy(*ch.bottom, push_arc(*ch.mid, arc)).e;
                ++done;
                (total == top + bottom ? ok : bad) += 1;
            } catch (const NotGenericallyTransverse&) {
            }
        }
        rep.add("chart " + std::to_string(ci) + " (" + ch.X.name + ")",
                "checked=" + std::to_string(done) + " additive=" + std::to_string(ok) +
                    " violations=" + std::to_string(bad));
        if (bad > 0 || done < samples) rep.pass = false;
    }
    rep.add("composite-charts", std::to_string(charts_checked));
    if (charts_checked == 0) {
        rep.add("error", "example has no chart with an intermediate factorization");
        rep.pass = false;
    }
}

struct FiberProbe {
    const AffineVariety* X;
    ArcGen arc;
};

void fiber_law_check(Report& rep, const std::string& label,
                     const std::vector<FiberProbe>& probes, std::int64_t q,
                     const Options& opt) {
    EnumOptions eopt;
    eopt.budget = opt.budget;
    long long checked = 0, failures = 0;
    for (const FiberProbe& pr : probes) {
        const AffineVariety& X = *pr.X;
        int d = X.dim;
        DiffProfile df = invariant_factors(X, pr.arc, 2 * opt.precision);
        int a = df.total();
        int m = std::max(a, 1);
        Jet gamma = truncate_arc(pr.arc, m);
        for (int n = m + 1; n <= std::min(2 * m + 1, m + 2); ++n) {
            int aprime = 0;
            for (int ai : df.torsion) aprime += std::min(ai, n - m);
            JetSet fib = fiber_jets(X, n, gamma, q, eopt);
            ++checked;
            if (static_cast<long long>(fib.size()) != qpow_ll(q, d * (n - m) + aprime))
                ++failures;
            if (n <= 2 * m + 1 - a) {
                long long lift = 0;
                for (std::size_t i = 0; i < fib.size(); ++i) {
                    Lift r = is_liftable(X, fib.unpack(i), q, eopt);
                    if (r == Lift::Yes) ++lift;
                    if (r == Lift::Undetermined) ++rep.undetermined;
                }
                ++checked;
                if (lift != qpow_ll(q, d * (n - m))) ++failures;
            }
        }
    }
    rep.add(label, "checks=" + std::to_string(checked) +
                       " failures=" + std::to_string(failures));
    if (failures > 0 || checked == 0) rep.pass = false;
}

void suite_fibers_example(Report& rep, const CatalogExample& ex, const Options& opt) {
    std::mt19937_64 rng(20240817);
    for (std::size_t ci = 0; ci < ex.charts.size(); ++ci) {
        std::vector<FiberProbe> probes;
        for (int i = 0; i < 8; ++i) probes.push_back({&ex.charts[ci].X, ex.charts[ci].sample(rng)});
        fiber_law_check(rep, "chart " + std::to_string(ci) + " (" + ex.charts[ci].X.name + ")",
                        probes, opt.q, opt);
    }
}

void suite_fibers_scene(Report& rep, const Scene& sc, const Options& opt) {
    if (!sc.field.is_prime_field())
        throw FieldMismatch("the fibers suite needs a prime-field scene");
    if (sc.arcs.empty()) throw ParseError("scene has no arcs to probe fibers with");
    for (const auto& [name, na] : sc.arcs) {
        std::vector<FiberProbe> probes = {{&sc.variety(na.on), na.arc}};
        fiber_law_check(rep, "arc " + name + " (" + na.on + ")", probes, sc.field.p, opt);
    }
}

bool is_example_id(const std::string& target) {
    for (const std::string& id : catalog_example_ids())
        if (id == target) return true;
    return false;
}

int cmd_verify(const Options& opt, const std::string& suite, const std::string& target) {
    auto start = std::chrono::steady_clock::now();
    Report rep;
    rep.add("command", "verify");
    rep.add("suite", suite);
    rep.add("target", target);
    if (is_example_id(target)) {
        bool exact_side = suite == "cov-exact";
        Field f = exact_side ? rationals() : prime_field(opt.q);
        CatalogExample ex = catalog_example(target, f);
        if (suite == "cov-exact")
            suite_cov_exact(rep, ex);
        else if (suite == "cov-count" || suite == "fibration")
            suite_cov_count(rep, ex, opt);
        else if (suite == "stability")
            suite_stability(rep, ex, opt);
        else if (suite == "additivity")
            suite_additivity(rep, ex, opt.level > 0 ? opt.level : 100);
        else if (suite == "fibers")
            suite_fibers_example(rep, ex, opt);
        else
            throw ParseError("unknown suite '" + suite + "'");
    } else {
        Scene sc = load_scene(target);
        if (suite == "fibers")
            suite_fibers_scene(rep, sc, opt);
        else
            throw ParseError("suite '" + suite + "' needs a built-in example id");
    }
    return finish(rep, opt, start);
}

}  // namespace

std::string Report::text() const {
    std::ostringstream os;
    for (const auto& [k, v] : lines) os << k << ": " << v << "\n";
    return os.str();
}

std::string Report::json_str() const {
    nlohmann::json j;
    j["report"] = nlohmann::json::array();
    for (const auto& [k, v] : lines) j["report"].push_back({{"key", k}, {"value", v}});
    j["pass"] = pass;
    j["undetermined"] = undetermined;
    return j.dump(2) + "\n";
}

int run_cli(int argc, char** argv) {
    CLI::App app{"exact arc-space invariant workbench"};
    app.require_subcommand(1);
    Options opt;

    auto* inv = app.add_subcommand("invariants", "torsion invariants of an arc");
    std::string arc_name;
    std::vector<std::string> subschemes;
    inv->add_option("--scene", opt.scene_path, "scene file")->required();
    inv->add_option("--arc", arc_name, "arc name")->required();
    inv->add_option("--subscheme", subschemes, "also report the order of this subscheme");
    inv->add_option("--precision", opt.precision, "series precision");
    inv->add_flag("--json", opt.json, "json report");

    auto* mat = app.add_subcommand("mather", "relative discrepancy along an arc");
    std::string morphism;
    mat->add_option("--scene", opt.scene_path, "scene file")->required();
    mat->add_option("--morphism", morphism, "morphism name")->required();
    mat->add_option("--arc", arc_name, "arc name")->required();
    mat->add_flag("--json", opt.json, "json report");

    auto* cnt = app.add_subcommand("count-jets", "exact jet counts over F_q");
    std::string variety, fiber;
    int level = 0;
    bool liftable = false, dump = false;
    cnt->add_option("--scene", opt.scene_path, "scene file")->required();
    cnt->add_option("--variety", variety, "variety name")->required();
    cnt->add_option("--level", level, "jet level")->required();
    cnt->add_option("--q", opt.q, "field size (prime)")->required();
    cnt->add_flag("--liftable", liftable, "also count liftable jets");
    cnt->add_option("--fiber", fiber, "restrict to the fiber over ARC@LEVEL");
    cnt->add_option("--budget", opt.budget, "enumeration budget");
    cnt->add_option("--threads", opt.threads, "worker threads");
    cnt->add_flag("--dump", dump, "print the jets");
    cnt->add_flag("--allow-undetermined", opt.allow_undetermined,
                  "exit 0 despite undetermined lift results");
    cnt->add_flag("--json", opt.json, "json report");

    auto* ver = app.add_subcommand("verify", "run a verification suite");
    std::string suite, target;
    ver->add_option("suite", suite,
                    "fibration | cov-exact | cov-count | stability | additivity | fibers")
        ->required();
    ver->add_option("target", target, "built-in example id or scene file")->required();
    ver->add_option("--q", opt.q, "field size (prime)");
    ver->add_option("--P", opt.P, "contact truncation cap");
    ver->add_option("--level", opt.level, "level override / sample count");
    ver->add_option("--precision", opt.precision, "series precision");
    ver->add_option("--budget", opt.budget, "enumeration budget");
    ver->add_option("--threads", opt.threads, "worker threads");
    ver->add_flag("--allow-undetermined", opt.allow_undetermined,
                  "exit 0 despite undetermined lift results");
    ver->add_flag("--json", opt.json, "json report");

    try {
        app.parse(argc, argv);
        if (inv->parsed()) return cmd_invariants(opt, arc_name, subschemes);
        if (mat->parsed()) return cmd_mather(opt, morphism, arc_name);
        if (cnt->parsed()) return cmd_count_jets(opt, variety, level, liftable, fiber, dump);
        if (ver->parsed()) return cmd_verify(opt, suite, target);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace arcspace
