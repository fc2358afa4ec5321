#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "corestar/field.hpp"

namespace corestar {

// Exact scalar over one Field. Values are kept in canonical form
// (reduced fraction with positive denominator; residues in [0, p)),
// so equality is structural.
class Scalar {
public:
    static Scalar zero(const Field& field);
    static Scalar one(const Field& field);
    static Scalar from_integer(const Field& field, long value);

    // Rationals: "a" or "a/b". GaussianRationals: "re", "re+imi", "re-imi",
    // with a bare "i" meaning coefficient 1. PrimeField: decimal residue,
    // reduced mod p. A leading ASCII '-' or U+2212 minus is accepted.
    static Scalar parse(std::string_view text, const Field& field);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    // The field involution: complex conjugation on Q(i), identity elsewhere.
    Scalar conj() const;

    // Canonical text; parse(str(), field()) round-trips exactly.
    std::string str() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    // Throws std::domain_error on division by zero.
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar operator-() const;

    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

private:
    explicit Scalar(const Field& field) : field_(field) {}

    static Scalar rational(mpq_class re);
    static Scalar gaussian(mpq_class re, mpq_class im);
    static Scalar residue(const Field& field, std::uint64_t value);

    Field field_;
    mpq_class re_;            // Rationals / GaussianRationals
    mpq_class im_;            // GaussianRationals
    std::uint64_t res_ = 0;   // PrimeField, in [0, p)
};

} // namespace corestar
