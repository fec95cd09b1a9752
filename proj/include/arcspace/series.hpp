#pragma once

#include <vector>
#include <string>

#include "arcspace/field.hpp"

namespace arcspace {

// Order of vanishing: either a known finite order k, or "at least P" when every
// known coefficient vanishes.
struct Order {
    bool finite;
    int k;  // the order if finite, otherwise the precision bound

    static Order at(int k) { return Order{true, k}; }
    static Order at_least(int p) { return Order{false, p}; }
    bool operator==(const Order&) const = default;
    std::string to_string() const {
        return finite ? std::to_string(k) : ">=" + std::to_string(k);
    }
};

// Univariate power series known modulo t^P.  Coefficients beyond the precision
// are unknown, not zero; arithmetic propagates the minimum precision.
class TruncSeries {
public:
    TruncSeries(Field f, int precision);
    TruncSeries(Field f, std::vector<FieldValue> coeffs);

    static TruncSeries zero(Field f, int precision) { return TruncSeries(f, precision); }
    static TruncSeries constant(Field f, const FieldValue& c, int precision);
    static TruncSeries constant(Field f, std::int64_t c, int precision);
    static TruncSeries t_power(Field f, int e, int precision);

    Field field() const { return field_; }
    int precision() const { return static_cast<int>(coeffs_.size()); }
    const FieldValue& coeff(int i) const { return coeffs_[i]; }

    Order order() const;
    bool known_zero() const;  // every known coefficient is zero
    bool is_unit() const { return !coeffs_.empty() && !coeffs_[0].is_zero(); }
    bool is_known_one() const;

    TruncSeries operator+(const TruncSeries& o) const;
    TruncSeries operator-(const TruncSeries& o) const;
    TruncSeries operator*(const TruncSeries& o) const;
    TruncSeries operator-() const;
    TruncSeries scale(const FieldValue& c) const;

    // Multiplication by t^k; every product coefficient below P+k is known.
    TruncSeries shift_up(int k) const;
    // Exact division by t^k; the first k known coefficients must vanish.
    TruncSeries shift_down(int k) const;

    // Multiplicative inverse; requires a unit (nonzero constant term).
    TruncSeries unit_inverse() const;
    // this / u for a unit u.
    TruncSeries operator/(const TruncSeries& u) const;

    TruncSeries truncate(int precision) const;

    // Structural equality: same precision and identical known coefficients.
    bool operator==(const TruncSeries& o) const;
    bool operator!=(const TruncSeries& o) const { return !(*this == o); }
    // Agreement of all coefficients below min(P, both precisions).
    bool agrees_with(const TruncSeries& o, int upto) const;

    std::string to_string() const;

private:
    void check_compatible(const TruncSeries& o) const;

    Field field_;
    std::vector<FieldValue> coeffs_;
};

}  // namespace arcspace
