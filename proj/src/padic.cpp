#include "morava/padic.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace morava {

namespace {

void require_same_prime(const PAdicInt& x, const PAdicInt& y) {
    if (x.prime() != y.prime()) throw std::invalid_argument("p-adic values over different primes");
}

int p_adic_order(std::uint64_t n, std::uint64_t p) {
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

int floor_log(std::uint64_t k, std::uint64_t p) {
    int e = 0;
    while (k >= p) {
        k /= p;
        ++e;
    }
    return e;
}

}  // namespace

PAdicInt::PAdicInt(std::uint64_t prime, std::int64_t value, int precision)
    : prime_(prime), residue_(0), precision_(precision) {
    residue_ = PrimePowerModulus(prime, precision).reduce(value);
}

PAdicInt PAdicInt::from_residue(std::uint64_t prime, std::uint64_t residue, int precision) {
    PAdicInt out(prime, 0, precision);
    out.residue_ = residue % out.modulus().value();
    return out;
}

PAdicInt PAdicInt::with_precision(int digits) const {
    if (digits > precision_) throw std::invalid_argument("cannot invent p-adic digits");
    return from_residue(prime_, residue_, digits);
}

PAdicInt PAdicInt::operator-() const {
    return from_residue(prime_, modulus().neg(residue_), precision_);
}

PAdicInt operator+(const PAdicInt& x, const PAdicInt& y) {
    require_same_prime(x, y);
    int n = std::min(x.precision_, y.precision_);
    auto m = PrimePowerModulus(x.prime_, n);
    return PAdicInt::from_residue(x.prime_, m.add(x.residue_ % m.value(), y.residue_ % m.value()), n);
}

PAdicInt operator-(const PAdicInt& x, const PAdicInt& y) { return x + (-y); }

PAdicInt operator*(const PAdicInt& x, const PAdicInt& y) {
    require_same_prime(x, y);
    int n = std::min(x.precision_, y.precision_);
    auto m = PrimePowerModulus(x.prime_, n);
    return PAdicInt::from_residue(x.prime_, m.mul(x.residue_, y.residue_), n);
}

PAdicInt PAdicInt::pow(std::uint64_t e) const {
    return from_residue(prime_, modulus().pow(residue_, e), precision_);
}

PAdicInt PAdicInt::inverse() const {
    return from_residue(prime_, modulus().inverse(residue_), precision_);
}

PAdicInt PAdicInt::divide_by_p() const {
    if (residue_ % prime_ != 0) throw std::domain_error("value is not divisible by p");
    if (precision_ <= 1) throw std::domain_error("division by p exhausts the precision");
    return from_residue(prime_, residue_ / prime_, precision_ - 1);
}

bool PAdicInt::congruent(const PAdicInt& other, int digits) const {
    require_same_prime(*this, other);
    if (digits > precision_ || digits > other.precision_)
        throw std::invalid_argument("congruence asked beyond known precision");
    std::uint64_t m = checked_prime_power(prime_, digits);
    return residue_ % m == other.residue_ % m;
}

std::string PAdicInt::to_string() const {
    std::ostringstream os;
    os << residue_ << " (mod " << prime_ << "^" << precision_ << ")";
    return os.str();
}

std::optional<int> valuation(const PAdicInt& x) { return x.modulus().valuation(x.residue()); }

PAdicInt theta(const PAdicInt& x) {
    return (x - x.pow(x.prime())).divide_by_p();
}

RezkLogSeries rezk_log_series(const PAdicInt& x) {
    const std::uint64_t p = x.prime();
    if (p == 2) throw std::invalid_argument("rezk_log is only defined here for odd p");
    if (x.residue() % p != 1) throw std::invalid_argument("rezk_log needs x = 1 mod p");

    const int out_digits = x.precision() - 1;
    const PAdicInt y = theta(x) * x.pow(p).with_precision(out_digits).inverse();
    const auto m = y.modulus();

    RezkLogSeries result{PAdicInt(p, 0, out_digits), 0};
    const auto vy = valuation(y);
    if (!vy) return result;  // theta(x) vanishes: every term is zero

    std::uint64_t sum = 0;
    std::uint64_t y_power = 1;
    int cleared_in_a_row = 0;
    for (std::uint64_t k = 1; cleared_in_a_row < static_cast<int>(p); ++k) {
        y_power = m.mul(y_power, y.residue());
        const long bound = static_cast<long>(k) * (*vy + 1) - 1 - floor_log(k, p);
        if (bound >= out_digits) {
            ++cleared_in_a_row;
            continue;
        }
        cleared_in_a_row = 0;
        // p^(k-1)/k = p^(k-1-v) / u with k = p^v u, u a unit.
        const int v = p_adic_order(k, p);
        const std::uint64_t u = k / checked_prime_power(p, v);
        const int shift = static_cast<int>(k) - 1 - v;
        std::uint64_t term = shift >= out_digits ? 0 : m.mul(m.pow(p, shift), y_power);
        term = m.mul(term, m.inverse(u % m.value()));
        sum = (k % 2 == 1) ? m.sub(sum, term) : m.add(sum, term);
        result.terms = static_cast<int>(k);
    }
    result.value = PAdicInt::from_residue(p, sum, out_digits);
    return result;
}

namespace {

// ((1 + x p^(j-1))^p - 1) / p^j modulo p^digits.
std::uint64_t lifted_level(std::uint64_t p, int j, std::uint64_t x, int digits) {
    PrimePowerModulus wide(p, digits + j);
    std::uint64_t base = wide.add(1, wide.mul(x % wide.value(), checked_prime_power(p, j - 1)));
    std::uint64_t raised = wide.sub(wide.pow(base, p), 1);
    return raised / checked_prime_power(p, j);
}

}  // namespace

PAdicInt hensel_unit_root(std::uint64_t p, int k, const PAdicInt& b, int precision) {
    if (p == 2) throw std::invalid_argument("hensel_unit_root needs an odd prime");
    if (b.prime() != p) throw std::invalid_argument("b lives over a different prime");
    if (!b.is_unit()) throw std::invalid_argument("b must be a p-adic unit");
    if (k < 1) throw std::invalid_argument("k must be at least 1");

    const int digits = std::min(precision, b.precision());
    // The widest modulus touched is p^(digits + k).
    checked_prime_power(p, digits + k);
    const PrimePowerModulus m(p, digits);

    std::uint64_t target = b.residue() % m.value();
    for (int j = k; j >= 2; --j) {
        // Solve F(x) = target with F(x) = ((1 + x p^(j-1))^p - 1)/p^j = x + p(...),
        // F'(x) = (1 + x p^(j-1))^(p-1), a unit.
        std::uint64_t x = target;
        const int max_steps = 2 * digits + 8;
        int step = 0;
        for (;; ++step) {
            std::uint64_t residual = m.sub(lifted_level(p, j, x, digits), target);
            if (residual == 0) break;
            if (step == max_steps) throw std::logic_error("Newton iteration failed to converge");
            std::uint64_t base = m.add(1, m.mul(x, m.pow(p, static_cast<std::uint64_t>(j - 1))));
            std::uint64_t slope = m.pow(base, p - 1);
            x = m.sub(x, m.mul(residual, m.inverse(slope)));
        }
        target = x;
    }
    return PAdicInt::from_residue(p, target, digits);
}

PAdicInt unit_root_power(const PAdicInt& c, int k, int digits) {
    const std::uint64_t p = c.prime();
    if (digits > c.precision() + k)
        throw std::invalid_argument("requested digits exceed what c determines");
    PrimePowerModulus m(p, digits);
    std::uint64_t value = m.add(1, m.mul(p % m.value(), c.residue() % m.value()));
    for (int i = 1; i < k; ++i) value = m.pow(value, p);
    return PAdicInt::from_residue(p, value, digits);
}

}  // namespace morava
