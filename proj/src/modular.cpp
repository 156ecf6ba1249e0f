#include "morava/modular.hpp"

#include <sstream>

namespace morava {

namespace {
constexpr std::uint64_t kModulusLimit = std::uint64_t{1} << 62;
}

std::uint64_t checked_prime_power(std::uint64_t p, int e) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    std::uint64_t v = 1;
    for (int i = 0; i < e; ++i) {
        if (v > kModulusLimit / p)
            throw std::overflow_error("p^N exceeds 2^62; lower the precision");
        v *= p;
    }
    return v;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimePowerModulus::PrimePowerModulus(std::uint64_t prime, int exponent)
    : prime_(prime), exponent_(exponent) {
    if (!is_prime(prime)) throw std::invalid_argument("modulus base must be prime");
    if (exponent < 1) throw std::invalid_argument("precision must be at least 1");
    value_ = checked_prime_power(prime, exponent);
}

std::uint64_t PrimePowerModulus::reduce(std::int64_t x) const {
    auto m = static_cast<std::int64_t>(value_);
    std::int64_t r = x % m;
    if (r < 0) r += m;
    return static_cast<std::uint64_t>(r);
}

std::uint64_t PrimePowerModulus::pow(std::uint64_t base, std::uint64_t e) const {
    std::uint64_t result = 1 % value_;
    base %= value_;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

std::optional<int> PrimePowerModulus::valuation(std::uint64_t x) const {
    x %= value_;
    if (x == 0) return std::nullopt;
    int v = 0;
    while (x % prime_ == 0) {
        x /= prime_;
        ++v;
    }
    return v;
}

std::uint64_t PrimePowerModulus::inverse(std::uint64_t x) const {
    if (!is_unit(x)) throw std::domain_error("element is not a unit");
    // Extended Euclid on signed 128-bit values.
    wide_int r0 = static_cast<wide_int>(value_), r1 = static_cast<wide_int>(x % value_);
    wide_int t0 = 0, t1 = 1;
    while (r1 != 0) {
        wide_int q = r0 / r1;
        wide_int tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    wide_int m = static_cast<wide_int>(value_);
    t0 %= m;
    if (t0 < 0) t0 += m;
    return static_cast<std::uint64_t>(t0);
}

std::string PrimePowerModulus::describe() const {
    std::ostringstream os;
    os << prime_ << "^" << exponent_;
    return os.str();
}

}  // namespace morava
