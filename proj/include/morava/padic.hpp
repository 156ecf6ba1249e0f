#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "morava/modular.hpp"

namespace morava {

/// Default number of p-adic digits carried by CLI scenarios.
inline constexpr int kDefaultPAdicPrecision = 12;

/// An element of Z_p known modulo p^precision.
///
/// Sums and products take the smaller of the two precisions. Division by p
/// costs one digit. Values are immutable.
class PAdicInt {
public:
    PAdicInt(std::uint64_t prime, std::int64_t value, int precision);

    static PAdicInt from_residue(std::uint64_t prime, std::uint64_t residue, int precision);

    std::uint64_t prime() const { return prime_; }
    std::uint64_t residue() const { return residue_; }
    int precision() const { return precision_; }
    PrimePowerModulus modulus() const { return PrimePowerModulus(prime_, precision_); }

    /// Drops digits down to `digits` (which must not exceed the current precision).
    PAdicInt with_precision(int digits) const;

    bool is_unit() const { return residue_ % prime_ != 0; }
    bool is_zero() const { return residue_ == 0; }
    /// Representative in (-p^N/2, p^N/2].
    std::int64_t signed_value() const { return modulus().signed_lift(residue_); }

    PAdicInt operator-() const;
    friend PAdicInt operator+(const PAdicInt& x, const PAdicInt& y);
    friend PAdicInt operator-(const PAdicInt& x, const PAdicInt& y);
    friend PAdicInt operator*(const PAdicInt& x, const PAdicInt& y);

    PAdicInt pow(std::uint64_t e) const;
    PAdicInt inverse() const;
    /// Exact division by p; requires p | residue, loses one digit.
    PAdicInt divide_by_p() const;

    /// True when x and y agree modulo p^digits (digits at most both precisions).
    bool congruent(const PAdicInt& other, int digits) const;

    friend bool operator==(const PAdicInt&, const PAdicInt&) = default;

    std::string to_string() const;

private:
    std::uint64_t prime_;
    std::uint64_t residue_;
    int precision_;
};

/// Largest v with p^v | residue, or nullopt when the value is zero to its precision.
std::optional<int> valuation(const PAdicInt& x);

/// (x - x^p)/p, the unique theta making x -> x^p + p*theta(x) the identity on Z_p.
PAdicInt theta(const PAdicInt& x);

struct RezkLogSeries {
    PAdicInt value;
    int terms = 0;  // series terms summed before the tail bound cleared the precision
};

/// Rezk's K(1)-local logarithm on 1 + pZ_p, evaluated to precision N-1.
/// Rejects p = 2 and inputs not congruent to 1 mod p.
RezkLogSeries rezk_log_series(const PAdicInt& x);
inline PAdicInt rezk_log(const PAdicInt& x) { return rezk_log_series(x).value; }

/// Unit c with (1 + p c)^(p^(k-1)) = 1 + b p^k.
///
/// Solved one level at a time, lifting (1 + x p^(j-1))^p = 1 + t p^j by Newton
/// iteration for j = k, k-1, ..., 2. The result has precision min(N, b's precision)
/// and the identity holds modulo p^(precision + k). Requires p odd and b a unit.
PAdicInt hensel_unit_root(std::uint64_t p, int k, const PAdicInt& b, int precision);

/// (1 + p c)^(p^(k-1)) computed modulo p^digits by repeated p-th powers.
PAdicInt unit_root_power(const PAdicInt& c, int k, int digits);

}  // namespace morava
