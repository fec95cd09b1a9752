#include "arcspace/field.hpp"

namespace arcspace {

namespace {
std::int64_t canonical(std::int64_t n, std::int64_t p) {
    std::int64_t r = n % p;
    if (r < 0) r += p;
    return r;
}
}  // namespace

FieldValue::FieldValue(Field f, std::int64_t n) : field_(f), rep_(0) {
    if (f.p == 0)
        rat_ = n;
    else
        rep_ = canonical(n, f.p);
}

FieldValue::FieldValue(Field f, const Rational& q) : field_(f), rep_(0) {
    if (f.p == 0) {
        rat_ = q;
    } else {
        // Reduce numerator/denominator mod p; the denominator must be invertible.
        BigInt num = boost::multiprecision::numerator(q);
        BigInt den = boost::multiprecision::denominator(q);
        std::int64_t n = static_cast<std::int64_t>(num % f.p);
        std::int64_t d = static_cast<std::int64_t>(den % f.p);
        if (canonical(d, f.p) == 0)
            throw DivisionByZero("rational with denominator divisible by p reduced mod p");
        rep_ = canonical(canonical(n, f.p) * mod_inverse(canonical(d, f.p), f.p) % f.p, f.p);
    }
}

void FieldValue::check_same(const FieldValue& o) const {
    if (field_ != o.field_) throw FieldMismatch("mixing elements of different fields");
}

bool FieldValue::is_zero() const {
    return field_.p == 0 ? rat_.is_zero() : rep_ == 0;
}

bool FieldValue::is_one() const {
    return field_.p == 0 ? rat_ == 1 : rep_ == 1;
}

FieldValue FieldValue::operator+(const FieldValue& o) const {
    check_same(o);
    FieldValue r(field_);
    if (field_.p == 0)
        r.rat_ = rat_ + o.rat_;
    else
        r.rep_ = (rep_ + o.rep_) % field_.p;
    return r;
}

FieldValue FieldValue::operator-(const FieldValue& o) const {
    check_same(o);
    FieldValue r(field_);
    if (field_.p == 0)
        r.rat_ = rat_ - o.rat_;
    else
        r.rep_ = canonical(rep_ - o.rep_, field_.p);
    return r;
}

FieldValue FieldValue::operator*(const FieldValue& o) const {
    check_same(o);
    FieldValue r(field_);
    if (field_.p == 0)
        r.rat_ = rat_ * o.rat_;
    else
        r.rep_ = (rep_ * o.rep_) % field_.p;
    return r;
}

FieldValue FieldValue::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    FieldValue r(field_);
    if (field_.p == 0)
        r.rat_ = 1 / rat_;
    else
        r.rep_ = mod_inverse(rep_, field_.p);
    return r;
}

FieldValue FieldValue::operator/(const FieldValue& o) const {
    check_same(o);
    return *this * o.inverse();
}

FieldValue FieldValue::operator-() const {
    FieldValue r(field_);
    if (field_.p == 0)
        r.rat_ = -rat_;
    else
        r.rep_ = canonical(-rep_, field_.p);
    return r;
}

bool FieldValue::operator==(const FieldValue& o) const {
    if (field_ != o.field_) return false;
    return field_.p == 0 ? rat_ == o.rat_ : rep_ == o.rep_;
}

std::string FieldValue::to_string() const {
    return field_.p == 0 ? rat_.str() : std::to_string(rep_);
}

std::int64_t mod_pow(std::int64_t a, std::int64_t e, std::int64_t p) {
    std::int64_t r = 1 % p;
    a = canonical(a, p);
    while (e > 0) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    a = canonical(a, p);
    if (a == 0) throw DivisionByZero("inverse of zero mod p");
    // Extended Euclid.
    std::int64_t old_r = a, r = p, old_s = 1, s = 0;
    while (r != 0) {
        std::int64_t qt = old_r / r;
        std::int64_t tmp = old_r - qt * r;
        old_r = r;
        r = tmp;
        tmp = old_s - qt * s;
        old_s = s;
        s = tmp;
    }
    return canonical(old_s, p);
}

}  // namespace arcspace
