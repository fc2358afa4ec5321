#include "corestar/field.hpp"

namespace corestar {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(std::uint64_t modulus) {
    // The bound keeps residue products inside 64 bits.
    if (modulus >= (std::uint64_t{1} << 31))
        throw std::invalid_argument("prime field modulus must be < 2^31");
    if (!is_prime(modulus))
        throw std::invalid_argument("prime field modulus must be prime, got " +
                                    std::to_string(modulus));
    return Field(FieldKind::PrimeField, modulus);
}

std::string Field::name() const {
    switch (kind_) {
    case FieldKind::Rationals: return "Q";
    case FieldKind::GaussianRationals: return "Qi";
    case FieldKind::PrimeField: return "GF(" + std::to_string(modulus_) + ")";
    }
    return "?";
}

} // namespace corestar
