#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <string>

#include "arcspace/errors.hpp"

namespace arcspace {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// Ground field descriptor: characteristic 0 means Q, otherwise F_p with p prime.
struct Field {
    std::int64_t p = 0;

    bool operator==(const Field&) const = default;
    bool is_prime_field() const { return p != 0; }
    std::string to_string() const { return p == 0 ? "Q" : "F_" + std::to_string(p); }
};

inline Field rationals() { return Field{0}; }
inline Field prime_field(std::int64_t p) { return Field{p}; }

// Exact field element: a rational (char 0) or a canonical representative in [0, p).
class FieldValue {
public:
    FieldValue() : field_{0}, rep_(0) {}
    explicit FieldValue(Field f) : field_(f), rep_(0) {}
    FieldValue(Field f, std::int64_t n);
    FieldValue(Field f, const Rational& q);

    static FieldValue zero(Field f) { return FieldValue(f); }
    static FieldValue one(Field f) { return FieldValue(f, 1); }

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    FieldValue operator+(const FieldValue& o) const;
    FieldValue operator-(const FieldValue& o) const;
    FieldValue operator*(const FieldValue& o) const;
    FieldValue operator/(const FieldValue& o) const;
    FieldValue operator-() const;
    FieldValue inverse() const;
    bool operator==(const FieldValue& o) const;
    bool operator!=(const FieldValue& o) const { return !(*this == o); }

    // Only meaningful for prime fields.
    std::int64_t rep() const { return rep_; }
    // Only meaningful for char 0.
    const Rational& rational() const { return rat_; }

    std::string to_string() const;

private:
    void check_same(const FieldValue& o) const;

    Field field_;
    Rational rat_;       // used when field_.p == 0
    std::int64_t rep_;   // used when field_.p != 0
};

// Modular arithmetic helpers on canonical representatives.
std::int64_t mod_inverse(std::int64_t a, std::int64_t p);
std::int64_t mod_pow(std::int64_t a, std::int64_t e, std::int64_t p);

}  // namespace arcspace
