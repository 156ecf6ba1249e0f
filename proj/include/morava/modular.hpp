#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace morava {

__extension__ using wide_uint = unsigned __int128;
__extension__ using wide_int = __int128;

/// Arithmetic in Z/p^N with residues kept in [0, p^N). The modulus must stay
/// below 2^62 so that products fit in 128 bits.
class PrimePowerModulus {
public:
    PrimePowerModulus() = default;
    PrimePowerModulus(std::uint64_t prime, int exponent);

    std::uint64_t prime() const { return prime_; }
    int exponent() const { return exponent_; }
    std::uint64_t value() const { return value_; }

    std::uint64_t reduce(std::int64_t x) const;
    std::uint64_t add(std::uint64_t x, std::uint64_t y) const {
        std::uint64_t s = x + y;
        return s >= value_ ? s - value_ : s;
    }
    std::uint64_t sub(std::uint64_t x, std::uint64_t y) const {
        return x >= y ? x - y : x + (value_ - y);
    }
    std::uint64_t neg(std::uint64_t x) const { return x == 0 ? 0 : value_ - x; }
    std::uint64_t mul(std::uint64_t x, std::uint64_t y) const {
        return static_cast<std::uint64_t>(
            (static_cast<wide_uint>(x) * y) % value_);
    }
    std::uint64_t pow(std::uint64_t base, std::uint64_t e) const;

    /// p-adic valuation of a residue, or nullopt for zero.
    std::optional<int> valuation(std::uint64_t x) const;
    bool is_unit(std::uint64_t x) const { return x % prime_ != 0; }
    /// Inverse of a unit residue; throws std::domain_error otherwise.
    std::uint64_t inverse(std::uint64_t x) const;
    /// Representative in (-p^N/2, p^N/2].
    std::int64_t signed_lift(std::uint64_t x) const {
        return x > value_ / 2 ? -static_cast<std::int64_t>(value_ - x)
                              : static_cast<std::int64_t>(x);
    }

    std::string describe() const;

    friend bool operator==(const PrimePowerModulus&, const PrimePowerModulus&) = default;

private:
    std::uint64_t prime_ = 2;
    int exponent_ = 1;
    std::uint64_t value_ = 2;
};

/// p^e as an integer; throws std::overflow_error past 2^62.
std::uint64_t checked_prime_power(std::uint64_t p, int e);

bool is_prime(std::uint64_t n);

}  // namespace morava
