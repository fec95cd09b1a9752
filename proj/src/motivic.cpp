#include "arcspace/motivic.hpp"

#include <algorithm>
#include <sstream>

namespace arcspace {

MotivicClass MotivicClass::term(const BigInt& c, int exp) {
    MotivicClass m;
    if (c != 0) m.terms_[exp] = c;
    return m;
}

std::optional<int> MotivicClass::dimension() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first;
}

MotivicClass MotivicClass::operator+(const MotivicClass& o) const {
    MotivicClass r = *this;
    for (const auto& [e, c] : o.terms_) {
        BigInt& slot = r.terms_[e];
        slot += c;
        if (slot == 0) r.terms_.erase(e);
    }
    return r;
}

MotivicClass MotivicClass::operator-() const {
    MotivicClass r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

MotivicClass MotivicClass::operator-(const MotivicClass& o) const { return *this + (-o); }

MotivicClass MotivicClass::operator*(const MotivicClass& o) const {
    MotivicClass r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            BigInt& slot = r.terms_[e1 + e2];
            slot += c1 * c2;
            if (slot == 0) r.terms_.erase(e1 + e2);
        }
    return r;
}

std::optional<MotivicClass> MotivicClass::divide_by_factor(int k) const {
    if (terms_.empty()) return MotivicClass::zero();
    int low = terms_.begin()->first;
    MotivicClass rem = *this, quot;
    while (!rem.terms_.empty()) {
        auto top = *rem.terms_.rbegin();
        if (top.first < low) return std::nullopt;
        quot.terms_[top.first] = top.second;
        // subtract top * (1 - L^-k)
        rem.terms_.erase(top.first);
        BigInt& slot = rem.terms_[top.first - k];
        slot += top.second;
        if (slot == 0) rem.terms_.erase(top.first - k);
    }
    return quot;
}

MotivicClass MotivicClass::drop_below(int cutoff) const {
    MotivicClass r;
    for (const auto& [e, c] : terms_)
        if (e >= cutoff) r.terms_[e] = c;
    return r;
}

Rational MotivicClass::at(const Rational& q) const {
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
        Rational p = 1;
        for (int i = 0; i < std::abs(e); ++i) p *= q;
        if (e < 0) p = 1 / p;
        acc += Rational(c) * p;
    }
    return acc;
}

std::string MotivicClass::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // highest exponent first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        BigInt c = it->second;
        int e = it->first;
        if (first) {
            if (c < 0) { os << "-"; c = -c; }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        if (e == 0) {
            os << c.str();
        } else {
            if (c != 1) os << c.str() << "*";
            os << "L";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

MotivicRational::MotivicRational(MotivicClass num, std::vector<int> den_factors)
    : num_(std::move(num)), den_(std::move(den_factors)) {
    std::sort(den_.begin(), den_.end());
    canonicalize();
}

void MotivicRational::canonicalize() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t i = 0; i < den_.size(); ++i) {
            auto q = num_.divide_by_factor(den_[i]);
            if (q) {
                num_ = *q;
                den_.erase(den_.begin() + i);
                progress = true;
                break;
            }
        }
    }
}

namespace {
MotivicClass den_product(const std::vector<int>& den) {
    MotivicClass p = MotivicClass::one();
    for (int k : den)
        p = p * (MotivicClass::one() - MotivicClass::L_pow(-k));
    return p;
}

// multiset difference a \ b
std::vector<int> ms_diff(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::size_t j = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (j < b.size() && a[i] == b[j]) { ++j; continue; }
        out.push_back(a[i]);
    }
    return out;
}

// multiset union with max multiplicities
std::vector<int> ms_lcm(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i] < b[j])) out.push_back(a[i++]);
        else if (i == a.size() || b[j] < a[i]) out.push_back(b[j++]);
        else { out.push_back(a[i]); ++i; ++j; }
    }
    return out;
}
}  // namespace

MotivicRational MotivicRational::operator+(const MotivicRational& o) const {
    std::vector<int> common = ms_lcm(den_, o.den_);
    MotivicClass n = num_ * den_product(ms_diff(common, den_)) +
                     o.num_ * den_product(ms_diff(common, o.den_));
    return MotivicRational(std::move(n), std::move(common));
}

MotivicRational MotivicRational::operator-() const {
    MotivicRational r = *this;
    r.num_ = -r.num_;
    return r;
}

MotivicRational MotivicRational::operator-(const MotivicRational& o) const {
    return *this + (-o);
}

MotivicRational MotivicRational::operator*(const MotivicRational& o) const {
    std::vector<int> den = den_;
    den.insert(den.end(), o.den_.begin(), o.den_.end());
    return MotivicRational(num_ * o.num_, std::move(den));
}

bool MotivicRational::operator==(const MotivicRational& o) const {
    return num_ * den_product(o.den_) == o.num_ * den_product(den_);
}

std::string MotivicRational::to_string() const {
    std::string n = num_.to_string();
    if (den_.empty()) return n;
    std::ostringstream os;
    if (num_.terms().size() > 1) os << "(" << n << ")";
    else os << n;
    os << "/";
    if (den_.size() > 1) os << "(";
    for (std::size_t i = 0; i < den_.size(); ++i) {
        if (i) os << "*";
        os << "(1 - L^-" << den_[i] << ")";
    }
    if (den_.size() > 1) os << ")";
    return os.str();
}

MotivicRational geometric_sum(const MotivicClass& coeff, int k, int p0) {
    if (k < 1) throw DimensionMismatch("geometric series step must be positive");
    return MotivicRational(coeff * MotivicClass::L_pow(0) *
                               MotivicClass::term(1, -k * p0),
                           {k});
}

MotivicClass truncate_ladic(const MotivicRational& x, int depth) {
    if (x.is_zero()) return MotivicClass::zero();
    int dim = *x.dimension();
    int cutoff = dim - depth;
    MotivicClass acc = x.num();
    for (int k : x.den()) {
        // expand 1/(1 - L^-k) far enough that discarded terms fall below cutoff
        int top = acc.dimension() ? *acc.dimension() : cutoff;
        int J = std::max(0, (top - cutoff) / k + 1);
        MotivicClass geo;
        for (int j = 0; j <= J; ++j) geo = geo + MotivicClass::L_pow(-k * j);
        acc = acc * geo;
        acc = acc.drop_below(cutoff);
    }
    return acc.drop_below(cutoff);
}

Rational specialize_q(const MotivicRational& x, const Rational& q) {
    if (q <= 1) throw DivisionByZero("specialization requires q > 1");
    Rational n = x.num().at(q);
    Rational d = 1;
    for (int k : x.den()) {
        Rational p = 1;
        for (int i = 0; i < k; ++i) p *= q;
        d *= (1 - 1 / p);
    }
    return n / d;
}

}  // namespace arcspace
