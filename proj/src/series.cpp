#include "arcspace/series.hpp"

#include <sstream>

namespace arcspace {

TruncSeries::TruncSeries(Field f, int precision) : field_(f) {
    if (precision < 0) precision = 0;
    coeffs_.assign(static_cast<std::size_t>(precision), FieldValue::zero(f));
}

TruncSeries::TruncSeries(Field f, std::vector<FieldValue> coeffs)
    : field_(f), coeffs_(std::move(coeffs)) {}

TruncSeries TruncSeries::constant(Field f, const FieldValue& c, int precision) {
    TruncSeries s(f, precision);
    if (precision > 0) s.coeffs_[0] = c;
    return s;
}

TruncSeries TruncSeries::constant(Field f, std::int64_t c, int precision) {
    return constant(f, FieldValue(f, c), precision);
}

TruncSeries TruncSeries::t_power(Field f, int e, int precision) {
    TruncSeries s(f, precision);
    if (e < precision) s.coeffs_[e] = FieldValue::one(f);
    return s;
}

Order TruncSeries::order() const {
    for (int i = 0; i < precision(); ++i)
        if (!coeffs_[i].is_zero()) return Order::at(i);
    return Order::at_least(precision());
}

bool TruncSeries::known_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

bool TruncSeries::is_known_one() const {
    if (coeffs_.empty() || !coeffs_[0].is_one()) return false;
    for (int i = 1; i < precision(); ++i)
        if (!coeffs_[i].is_zero()) return false;
    return true;
}

void TruncSeries::check_compatible(const TruncSeries& o) const {
    if (field_ != o.field_) throw FieldMismatch("series over different fields");
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
    check_compatible(o);
    int p = std::min(precision(), o.precision());
    TruncSeries r(field_, p);
    for (int i = 0; i < p; ++i) r.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
    check_compatible(o);
    int p = std::min(precision(), o.precision());
    TruncSeries r(field_, p);
    for (int i = 0; i < p; ++i) r.coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    return r;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
    check_compatible(o);
    int p = std::min(precision(), o.precision());
    TruncSeries r(field_, p);
    for (int i = 0; i < p && i < precision(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (int j = 0; i + j < p && j < o.precision(); ++j) {
            if (o.coeffs_[j].is_zero()) continue;
            r.coeffs_[i + j] = r.coeffs_[i + j] + coeffs_[i] * o.coeffs_[j];
        }
    }
    return r;
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries r(field_, precision());
    for (int i = 0; i < precision(); ++i) r.coeffs_[i] = -coeffs_[i];
    return r;
}

TruncSeries TruncSeries::scale(const FieldValue& c) const {
    TruncSeries r(field_, precision());
    for (int i = 0; i < precision(); ++i) r.coeffs_[i] = coeffs_[i] * c;
    return r;
}

TruncSeries TruncSeries::shift_up(int k) const {
    TruncSeries r(field_, precision() + k);
    for (int i = 0; i < precision(); ++i) r.coeffs_[i + k] = coeffs_[i];
    return r;
}

TruncSeries TruncSeries::shift_down(int k) const {
    if (k > precision())
        throw InsufficientPrecision("shift below available precision");
    for (int i = 0; i < k; ++i)
        if (!coeffs_[i].is_zero())
            throw NonUnitDivision("t-power division of a series of smaller order");
    TruncSeries r(field_, precision() - k);
    for (int i = k; i < precision(); ++i) r.coeffs_[i - k] = coeffs_[i];
    return r;
}

TruncSeries TruncSeries::unit_inverse() const {
    if (precision() == 0)
        throw InsufficientPrecision("inverse of a series with no known coefficients");
    if (coeffs_[0].is_zero())
        throw NonUnitDivision("inverse of a non-unit series");
    int p = precision();
    TruncSeries r(field_, p);
    FieldValue c0inv = coeffs_[0].inverse();
    r.coeffs_[0] = c0inv;
    for (int n = 1; n < p; ++n) {
        FieldValue acc = FieldValue::zero(field_);
        for (int i = 1; i <= n; ++i) acc = acc + coeffs_[i] * r.coeffs_[n - i];
        r.coeffs_[n] = -(c0inv * acc);
    }
    return r;
}

TruncSeries TruncSeries::operator/(const TruncSeries& u) const {
    return *this * u.unit_inverse();
}

TruncSeries TruncSeries::truncate(int precision) const {
    if (precision >= this->precision()) return *this;
    TruncSeries r(field_, precision);
    for (int i = 0; i < precision; ++i) r.coeffs_[i] = coeffs_[i];
    return r;
}

bool TruncSeries::operator==(const TruncSeries& o) const {
    return field_ == o.field_ && coeffs_ == o.coeffs_;
}

bool TruncSeries::agrees_with(const TruncSeries& o, int upto) const {
    int p = std::min({upto, precision(), o.precision()});
    for (int i = 0; i < p; ++i)
        if (coeffs_[i] != o.coeffs_[i]) return false;
    return true;
}

std::string TruncSeries::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < precision(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << coeffs_[i].to_string();
        } else {
            if (!coeffs_[i].is_one()) os << coeffs_[i].to_string() << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    os << " + O(t^" << precision() << ")";
    return os.str();
}

}  // namespace arcspace
