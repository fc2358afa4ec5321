#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace corestar {

enum class FieldKind { Rationals, GaussianRationals, PrimeField };

// Describes which involutive field scalars live in. The involution is
// complex conjugation on Q(i) and the identity on Q and GF(p).
class Field {
public:
    static Field rationals() { return Field(FieldKind::Rationals, 0); }
    static Field gaussian_rationals() { return Field(FieldKind::GaussianRationals, 0); }
    // Throws std::invalid_argument unless modulus is a prime in [2, 2^31).
    static Field prime(std::uint64_t modulus);

    FieldKind kind() const { return kind_; }

    std::uint64_t modulus() const {
        if (kind_ != FieldKind::PrimeField)
            throw std::logic_error("modulus() is defined for prime fields only");
        return modulus_;
    }

    // "Q", "Qi" or "GF(p)".
    std::string name() const;

    friend bool operator==(const Field& a, const Field& b) {
        return a.kind_ == b.kind_ && a.modulus_ == b.modulus_;
    }
    friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

private:
    Field(FieldKind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

    FieldKind kind_;
    std::uint64_t modulus_;
};

// Trial division.
bool is_prime(std::uint64_t n);

} // namespace corestar
