#include "arcspace/scene.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace arcspace {

namespace {

struct PolyParser {
    const std::string& s;
    std::size_t pos = 0;
    Field f;
    const std::vector<std::string>& vars;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& what) {
        throw ParseError(what + " at position " + std::to_string(pos) + " in '" + s + "'");
    }

    MultiPoly expr() {
        MultiPoly r = eat('-') ? -term() : term();
        while (true) {
            if (eat('+'))
                r = r + term();
            else if (eat('-'))
                r = r - term();
            else
                break;
        }
        return r;
    }

    MultiPoly term() {
        MultiPoly r = factor();
        while (eat('*')) r = r * factor();
        return r;
    }

    MultiPoly factor() {
        MultiPoly b = atom();
        if (eat('^')) {
            int e = integer();
            if (e < 0) fail("negative exponent");
            MultiPoly r = MultiPoly::constant(f, static_cast<int>(vars.size()), 1);
            for (int i = 0; i < e; ++i) r = r * b;
            return r;
        }
        return b;
    }

    MultiPoly atom() {
        char c = peek();
        if (c == '(') {
            ++pos;
            MultiPoly r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (c == '-') {
            ++pos;
            return -atom();
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return MultiPoly::constant(f, static_cast<int>(vars.size()), integer());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = ident();
            for (std::size_t i = 0; i < vars.size(); ++i)
                if (vars[i] == name)
                    return MultiPoly::variable(f, static_cast<int>(vars.size()),
                                               static_cast<int>(i));
            fail("unknown variable '" + name + "'");
        }
        fail("expected a term");
    }

    int integer() {
        skip();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected an integer");
        return std::stoi(s.substr(start, pos - start));
    }

    std::string ident() {
        skip();
        std::size_t start = pos;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                                  s[pos] == '_'))
            ++pos;
        return s.substr(start, pos - start);
    }
};

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

struct Section {
    std::string kind, name;
    std::map<std::string, std::string> entries;
};

const std::vector<std::string>& section_keys(const std::string& kind) {
    static const std::map<std::string, std::vector<std::string>> keys = {
        {"field", {"char"}},
        {"variety", {"vars", "dim", "eqs"}},
        {"morphism", {"source", "target", "map"}},
        {"subscheme", {"on", "gens"}},
        {"arc", {"on", "coords"}},
    };
    auto it = keys.find(kind);
    if (it == keys.end()) throw ParseError("unknown section kind '" + kind + "'");
    return it->second;
}

// entries are `key = value` runs; values may contain spaces and commas, so a
// new entry starts exactly where an allowed key is followed by '='
void parse_entries(Section& sec, const std::string& body) {
    const std::vector<std::string>& allowed = section_keys(sec.kind);
    std::istringstream in(body);
    std::string tok, key, value;
    auto flush = [&]() {
        if (!key.empty()) sec.entries[key] = trim(value);
        key.clear();
        value.clear();
    };
    std::vector<std::string> toks;
    while (in >> tok) toks.push_back(tok);
    for (std::size_t i = 0; i < toks.size(); ++i) {
        bool is_key = false;
        std::string t = toks[i];
        for (const std::string& k : allowed) {
            if (t == k && i + 1 < toks.size() && toks[i + 1].starts_with("=")) {
                is_key = true;
            } else if (t.starts_with(k + "=")) {
                is_key = true;
                toks[i] = t.substr(k.size());
                t = k;
            }
            if (is_key) {
                flush();
                key = k;
                if (toks[i].starts_with("=")) {
                    value = toks[i].substr(1) + " ";
                } else {
                    std::string rest = toks[i + 1].substr(1);
                    ++i;
                    if (!rest.empty()) value = rest + " ";
                }
                break;
            }
        }
        if (!is_key) {
            if (key.empty()) throw ParseError("stray token '" + t + "' in [" + sec.kind + "]");
            value += t + " ";
        }
    }
    flush();
}

const std::string& need(const Section& sec, const std::string& key) {
    auto it = sec.entries.find(key);
    if (it == sec.entries.end())
        throw ParseError("section [" + sec.kind + " " + sec.name + "] is missing '" +
                         key + "'");
    return it->second;
}

std::vector<FieldValue> poly_in_t(const std::string& expr, Field f) {
    MultiPoly p = parse_poly(expr, f, {"t"});
    int deg = 0;
    for (const auto& t : p.terms()) deg = std::max(deg, t.exp[0]);
    std::vector<FieldValue> coeffs(deg + 1, FieldValue::zero(f));
    for (const auto& t : p.terms()) coeffs[t.exp[0]] = t.coeff;
    return coeffs;
}

}  // namespace

MultiPoly parse_poly(const std::string& expr, Field f,
                     const std::vector<std::string>& vars) {
    PolyParser p{expr, 0, f, vars};
    MultiPoly r = p.expr();
    p.skip();
    if (p.pos != expr.size()) p.fail("trailing input");
    return r;
}

const AffineVariety& Scene::variety(const std::string& name) const {
    auto it = varieties.find(name);
    if (it == varieties.end()) throw ParseError("unknown variety '" + name + "'");
    return it->second;
}

const MorphismPres& Scene::morphism(const std::string& name) const {
    auto it = morphisms.find(name);
    if (it == morphisms.end()) throw ParseError("unknown morphism '" + name + "'");
    return it->second;
}

const SubschemeIdeal& Scene::subscheme(const std::string& name) const {
    auto it = subschemes.find(name);
    if (it == subschemes.end()) throw ParseError("unknown subscheme '" + name + "'");
    return it->second;
}

const Scene::NamedArc& Scene::arc(const std::string& name) const {
    auto it = arcs.find(name);
    if (it == arcs.end()) throw ParseError("unknown arc '" + name + "'");
    return it->second;
}

Scene parse_scene(const std::string& text) {
    std::vector<Section> sections;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            std::size_t close = line.find(']');
            if (close == std::string::npos) throw ParseError("unterminated section header");
            std::istringstream hdr(line.substr(1, close - 1));
            Section sec;
            hdr >> sec.kind >> sec.name;
            section_keys(sec.kind);
            if (sec.kind != "field" && sec.name.empty())
                throw ParseError("section [" + sec.kind + "] needs a name");
            sections.push_back(std::move(sec));
            std::string rest = trim(line.substr(close + 1));
            if (!rest.empty()) parse_entries(sections.back(), rest);
        } else {
            if (sections.empty()) throw ParseError("content before the first section");
            parse_entries(sections.back(), line);
        }
    }

    Scene sc;
    bool have_field = false;
    for (const Section& sec : sections)
        if (sec.kind == "field") {
            std::int64_t p = std::stoll(need(sec, "char"));
            sc.field = (p == 0) ? rationals() : prime_field(p);
            have_field = true;
        }
    if (!have_field) throw ParseError("scene has no [field] section");
    Field f = sc.field;

    for (const Section& sec : sections) {
        if (sec.kind == "variety") {
            AffineVariety v;
            v.name = sec.name;
            v.field = f;
            for (const std::string& w : split_commas(need(sec, "vars")))
                v.var_names.push_back(trim(w));
            v.ambient_dim = static_cast<int>(v.var_names.size());
            v.dim = std::stoi(need(sec, "dim"));
            if (sec.entries.count("eqs"))
                for (const std::string& e : split_commas(sec.entries.at("eqs")))
                    v.gens.push_back(parse_poly(trim(e), f, v.var_names));
            if (v.dim > v.ambient_dim)
                throw ParseError("variety '" + v.name + "' has dim above its ambient space");
            sc.varieties[v.name] = std::move(v);
        }
    }
    for (const Section& sec : sections) {
        if (sec.kind == "morphism") {
            MorphismPres m;
            m.name = sec.name;
            m.source = sc.variety(need(sec, "source"));
            m.target = sc.variety(need(sec, "target"));
            for (const std::string& c : split_commas(need(sec, "map")))
                m.components.push_back(parse_poly(trim(c), f, m.source.var_names));
            if (static_cast<int>(m.components.size()) != m.target.ambient_dim)
                throw ParseError("morphism '" + m.name + "' has " +
                                 std::to_string(m.components.size()) +
                                 " components for a target of dimension " +
                                 std::to_string(m.target.ambient_dim));
            sc.morphisms[m.name] = std::move(m);
        } else if (sec.kind == "subscheme") {
            SubschemeIdeal ideal;
            const AffineVariety& on = sc.variety(need(sec, "on"));
            ideal.variety_name = on.name;
            for (const std::string& g : split_commas(need(sec, "gens")))
                ideal.gens.push_back(parse_poly(trim(g), f, on.var_names));
            sc.subschemes[sec.name] = std::move(ideal);
        } else if (sec.kind == "arc") {
            Scene::NamedArc na;
            na.on = need(sec, "on");
            const AffineVariety& on = sc.variety(na.on);
            na.arc.field = f;
            for (const std::string& c : split_commas(need(sec, "coords")))
                na.arc.coords.push_back(poly_in_t(trim(c), f));
            if (na.arc.ncoords() != on.ambient_dim)
                throw ParseError("arc '" + sec.name + "' has " +
                                 std::to_string(na.arc.ncoords()) +
                                 " coordinates on '" + on.name + "'");
            ArcValidation check = validate_arc(on, na.arc, 16);
            if (!check.ok)
                throw ParseError("arc '" + sec.name + "' does not lie on '" + na.on +
                                 "': generator " + std::to_string(check.generator) +
                                 " is nonzero at t^" + std::to_string(check.coeff_index));
            sc.arcs[sec.name] = std::move(na);
        }
    }
    return sc;
}

Scene load_scene(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open scene file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_scene(ss.str());
}

}  // namespace arcspace
