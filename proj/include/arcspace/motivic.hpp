#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arcspace/field.hpp"

namespace arcspace {

// Laurent polynomial in the symbol L with integer coefficients.
class MotivicClass {
public:
    MotivicClass() = default;

    static MotivicClass zero() { return {}; }
    static MotivicClass one() { return term(1, 0); }
    static MotivicClass L_pow(int n) { return term(1, n); }
    static MotivicClass term(const BigInt& c, int exp);

    const std::map<int, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // max exponent; nullopt for the zero class
    std::optional<int> dimension() const;

    MotivicClass operator+(const MotivicClass& o) const;
    MotivicClass operator-(const MotivicClass& o) const;
    MotivicClass operator*(const MotivicClass& o) const;
    MotivicClass operator-() const;
    bool operator==(const MotivicClass& o) const { return terms_ == o.terms_; }
    bool operator!=(const MotivicClass& o) const { return !(*this == o); }

    // exact division by (1 - L^-k); nullopt when not divisible
    std::optional<MotivicClass> divide_by_factor(int k) const;

    // drop all terms with exponent < cutoff
    MotivicClass drop_below(int cutoff) const;

    Rational at(const Rational& q) const;

    std::string to_string() const;

private:
    std::map<int, BigInt> terms_;  // exponent -> nonzero coefficient
};

// num / prod_i (1 - L^{-k_i}), kept in canonical (greedily cancelled) form.
class MotivicRational {
public:
    MotivicRational() = default;
    MotivicRational(MotivicClass num, std::vector<int> den_factors);

    static MotivicRational from_class(const MotivicClass& c) { return {c, {}}; }
    static MotivicRational zero() { return {}; }

    const MotivicClass& num() const { return num_; }
    const std::vector<int>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    std::optional<int> dimension() const { return num_.dimension(); }

    MotivicRational operator+(const MotivicRational& o) const;
    MotivicRational operator-(const MotivicRational& o) const;
    MotivicRational operator*(const MotivicRational& o) const;
    MotivicRational operator-() const;
    // equality by cross-multiplication
    bool operator==(const MotivicRational& o) const;
    bool operator!=(const MotivicRational& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    void canonicalize();

    MotivicClass num_;
    std::vector<int> den_;  // sorted ascending, with multiplicity
};

// coeff * L^{-k*p0} / (1 - L^-k): the closed form of sum_{p >= p0} coeff * L^{-k*p}
MotivicRational geometric_sum(const MotivicClass& coeff, int k, int p0);

// expansion of the denominators as geometric series, keeping terms of
// dimension >= dim(x) - depth
MotivicClass truncate_ladic(const MotivicRational& x, int depth);

Rational specialize_q(const MotivicRational& x, const Rational& q);

}  // namespace arcspace
