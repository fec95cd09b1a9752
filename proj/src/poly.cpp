#include "arcspace/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace arcspace {

namespace {
bool lex_less(const std::vector<int>& a, const std::vector<int>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}
}  // namespace

MultiPoly MultiPoly::constant(Field f, int nvars, const FieldValue& c) {
    MultiPoly p(f, nvars);
    if (!c.is_zero()) p.terms_.push_back({std::vector<int>(nvars, 0), c});
    return p;
}

MultiPoly MultiPoly::constant(Field f, int nvars, std::int64_t c) {
    return constant(f, nvars, FieldValue(f, c));
}

MultiPoly MultiPoly::variable(Field f, int nvars, int i) {
    MultiPoly p(f, nvars);
    std::vector<int> e(nvars, 0);
    e[i] = 1;
    p.terms_.push_back({std::move(e), FieldValue::one(f)});
    return p;
}

MultiPoly MultiPoly::monomial(Field f, std::vector<int> exp, const FieldValue& c) {
    MultiPoly p(f, static_cast<int>(exp.size()));
    if (!c.is_zero()) p.terms_.push_back({std::move(exp), c});
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    for (int e : terms_[0].exp)
        if (e != 0) return false;
    return true;
}

void MultiPoly::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return lex_less(a.exp, b.exp); });
    std::vector<Term> out;
    for (auto& t : terms_) {
        if (!out.empty() && out.back().exp == t.exp)
            out.back().coeff = out.back().coeff + t.coeff;
        else
            out.push_back(std::move(t));
    }
    terms_.clear();
    for (auto& t : out)
        if (!t.coeff.is_zero()) terms_.push_back(std::move(t));
}

void MultiPoly::add_term(const std::vector<int>& exp, const FieldValue& c) {
    if (c.is_zero()) return;
    if (static_cast<int>(exp.size()) != nvars_)
        throw DimensionMismatch("exponent vector length");
    terms_.push_back({exp, c});
    normalize();
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw DimensionMismatch("polynomial variable counts differ");
    MultiPoly r(field_, nvars_);
    r.terms_ = terms_;
    r.terms_.insert(r.terms_.end(), o.terms_.begin(), o.terms_.end());
    r.normalize();
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(field_, nvars_);
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

MultiPoly MultiPoly::scale(const FieldValue& c) const {
    MultiPoly r(field_, nvars_);
    if (c.is_zero()) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coeff = t.coeff * c;
    r.normalize();
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw DimensionMismatch("polynomial variable counts differ");
    MultiPoly r(field_, nvars_);
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) {
            std::vector<int> e(nvars_);
            for (int i = 0; i < nvars_; ++i) e[i] = a.exp[i] + b.exp[i];
            r.terms_.push_back({std::move(e), a.coeff * b.coeff});
        }
    r.normalize();
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (field_ != o.field_ || nvars_ != o.nvars_ || terms_.size() != o.terms_.size())
        return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].exp != o.terms_[i].exp || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

MultiPoly MultiPoly::derivative(int var) const {
    MultiPoly r(field_, nvars_);
    for (const auto& t : terms_) {
        if (t.exp[var] == 0) continue;
        std::vector<int> e = t.exp;
        FieldValue c = t.coeff * FieldValue(field_, e[var]);
        e[var] -= 1;
        if (!c.is_zero()) r.terms_.push_back({std::move(e), c});
    }
    r.normalize();
    return r;
}

TruncSeries MultiPoly::eval_series(const std::vector<TruncSeries>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw DimensionMismatch("point length differs from variable count");
    int prec = point.empty() ? 0 : point[0].precision();
    for (const auto& s : point) prec = std::min(prec, s.precision());
    if (point.empty()) prec = 1;  // constants still need a carrier precision
    // Cache powers of each coordinate.
    std::vector<std::vector<TruncSeries>> pow(nvars_);
    for (int i = 0; i < nvars_; ++i)
        pow[i].push_back(TruncSeries::constant(field_, 1, prec));
    TruncSeries acc = TruncSeries::zero(field_, prec);
    for (const auto& t : terms_) {
        TruncSeries m = TruncSeries::constant(field_, t.coeff, prec);
        for (int i = 0; i < nvars_; ++i) {
            int e = t.exp[i];
            while (static_cast<int>(pow[i].size()) <= e)
                pow[i].push_back(pow[i].back() * point[i].truncate(prec));
            if (e > 0) m = m * pow[i][e];
        }
        acc = acc + m;
    }
    return acc;
}

FieldValue MultiPoly::eval_point(const std::vector<FieldValue>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw DimensionMismatch("point length differs from variable count");
    FieldValue acc = FieldValue::zero(field_);
    for (const auto& t : terms_) {
        FieldValue m = t.coeff;
        for (int i = 0; i < nvars_; ++i)
            for (int e = 0; e < t.exp[i]; ++e) m = m * point[i];
        acc = acc + m;
    }
    return acc;
}

namespace {
std::vector<FieldValue> poly_mul(Field f, const std::vector<FieldValue>& a,
                                 const std::vector<FieldValue>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<FieldValue> r(a.size() + b.size() - 1, FieldValue::zero(f));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = r[i + j] + a[i] * b[j];
    }
    return r;
}

void poly_add_into(Field f, std::vector<FieldValue>& a, const std::vector<FieldValue>& b) {
    if (a.size() < b.size()) a.resize(b.size(), FieldValue::zero(f));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = a[i] + b[i];
}
}  // namespace

std::vector<FieldValue> MultiPoly::eval_polys(
    const std::vector<std::vector<FieldValue>>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw DimensionMismatch("point length differs from variable count");
    std::vector<FieldValue> acc;
    for (const auto& t : terms_) {
        std::vector<FieldValue> m{t.coeff};
        for (int i = 0; i < nvars_; ++i)
            for (int e = 0; e < t.exp[i]; ++e) m = poly_mul(field_, m, point[i]);
        poly_add_into(field_, acc, m);
    }
    while (!acc.empty() && acc.back().is_zero()) acc.pop_back();
    return acc;
}

MultiPoly MultiPoly::embed(int new_nvars, const std::vector<int>& map) const {
    if (static_cast<int>(map.size()) != nvars_)
        throw DimensionMismatch("variable map length");
    MultiPoly r(field_, new_nvars);
    for (const auto& t : terms_) {
        std::vector<int> e(new_nvars, 0);
        for (int i = 0; i < nvars_; ++i) e[map[i]] += t.exp[i];
        r.terms_.push_back({std::move(e), t.coeff});
    }
    r.normalize();
    return r;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Print highest lex term last is fine; keep stored order.
    for (const auto& t : terms_) {
        if (!first) os << " + ";
        first = false;
        bool any_var = false;
        for (int e : t.exp)
            if (e != 0) any_var = true;
        if (!any_var || !t.coeff.is_one()) {
            os << t.coeff.to_string();
            if (any_var) os << "*";
        }
        bool started = false;
        for (int i = 0; i < nvars_; ++i) {
            if (t.exp[i] == 0) continue;
            if (started) os << "*";
            started = true;
            os << names[i];
            if (t.exp[i] > 1) os << "^" << t.exp[i];
        }
    }
    return os.str();
}

}  // namespace arcspace
