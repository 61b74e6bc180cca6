#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace pcg {

// Unbounded unsigned integer, base 2^32 limbs, little-endian, no trailing
// zero limbs (zero is the empty limb vector). Covers exactly what the
// Gaussian binomial computation needs: add, multiply, compare, and decimal
// printing. Never wraps; narrowing to uint64 is checked.
class BigUint {
public:
    BigUint() = default;
    BigUint(std::uint64_t v);

    static BigUint pow(const BigUint& base, std::uint64_t exp);

    bool is_zero() const { return limbs_.empty(); }

    BigUint& operator+=(const BigUint& rhs);
    friend BigUint operator+(BigUint lhs, const BigUint& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend BigUint operator*(const BigUint& lhs, const BigUint& rhs);

    friend bool operator==(const BigUint& a, const BigUint& b) = default;
    friend std::strong_ordering operator<=>(const BigUint& a, const BigUint& b);

    bool fits_u64() const { return limbs_.size() <= 2; }
    // Throws Overflow when the value needs more than 64 bits.
    std::uint64_t to_u64() const;

    std::string str() const;

private:
    void trim();

    std::vector<std::uint32_t> limbs_;
};

std::ostream& operator<<(std::ostream& os, const BigUint& v);

}  // namespace pcg
