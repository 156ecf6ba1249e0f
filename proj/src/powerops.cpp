#include "morava/powerops.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace morava {

PowerOperation::PowerOperation(ETheoryPresentation pres) : pres_(std::move(pres)) {
    const CoeffRingSpec& spec = pres_.spec();
    a_powers_.push_back(pres_.scalar(CoeffElem::constant(spec, 1)));
    if (pres_.p_of_a)
        for (int i = 1; i < spec.truncation(); ++i) a_powers_.push_back(a_powers_.back() * *pres_.p_of_a);
}

const SigmaElem& PowerOperation::of_a_power(int i) const {
    return a_powers_.at(static_cast<std::size_t>(i));
}

SigmaElem PowerOperation::of_integer(std::int64_t c) const {
    const CoeffRingSpec& spec = pres_.spec();
    const auto& m = spec.modulus();
    if (c < 0) {
        // 0 = P(c + (-c)) = P(c) + P(-c) - c^2 tr(1)
        const std::uint64_t r = m.reduce(c);
        return CoeffElem::constant(spec, static_cast<std::int64_t>(m.mul(r, r))) * pres_.tr1 - of_integer(-c);
    }
    const SigmaElem one = pres_.scalar(CoeffElem::constant(spec, 1));
    SigmaElem result(pres_.ring);
    std::uint64_t y = 0;  // residue of the integer evaluated so far
    const auto u = static_cast<std::uint64_t>(c);
    for (int bit = std::bit_width(u) - 1; bit >= 0; --bit) {
        // P(2y) = 2 P(y) + y^2 tr(1)
        result = result + result + CoeffElem::constant(spec, static_cast<std::int64_t>(m.mul(y, y))) * pres_.tr1;
        y = m.add(y, y);
        if ((u >> bit) & 1U) {
            // P(y + 1) = P(y) + P(1) + y tr(1)
            result = result + one + CoeffElem::constant(spec, static_cast<std::int64_t>(y)) * pres_.tr1;
            y = m.add(y, 1);
        }
    }
    return result;
}

SigmaElem PowerOperation::operator()(const CoeffElem& x) const {
    const CoeffRingSpec& spec = pres_.spec();
    const auto& m = spec.modulus();
    const int k = spec.truncation();
    std::vector<std::int64_t> lift(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) lift[static_cast<std::size_t>(i)] = m.signed_lift(x.coefficient(i));

    SigmaElem result(pres_.ring);
    CoeffElem cross(spec);
    for (int i = 0; i < k; ++i) {
        const std::int64_t ci = lift[static_cast<std::size_t>(i)];
        if (ci == 0) continue;
        result += of_integer(ci) * of_a_power(i);
        for (int j = i + 1; j < k; ++j) {
            const std::int64_t cj = lift[static_cast<std::size_t>(j)];
            if (cj == 0) continue;
            cross += CoeffElem::monomial(spec, static_cast<std::int64_t>(m.mul(m.reduce(ci), m.reduce(cj))), i + j);
        }
    }
    return result + cross * pres_.tr1;
}

std::vector<CoeffElem> PowerOperation::pbar_coeffs(const CoeffElem& x) const {
    if (!x.in_maximal_ideal()) throw std::invalid_argument("x must lie in the maximal ideal");
    const SigmaElem px = (*this)(x);
    if (!(px.at_zero() == x * x))
        throw std::logic_error("z^0 coefficient of P(x) is not x^2; presentation data is inconsistent");
    std::vector<CoeffElem> out(px.coefficients().begin() + 1, px.coefficients().end());
    return out;
}

SigmaElem transfer(const ETheoryPresentation& pres, const CoeffElem& x) { return x * pres.tr1; }

SigmaElem power(const ETheoryPresentation& pres, const CoeffElem& x) { return PowerOperation(pres)(x); }

std::vector<CoeffElem> pbar_coeffs(const ETheoryPresentation& pres, const CoeffElem& x) {
    return PowerOperation(pres).pbar_coeffs(x);
}

bool PresentationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const PresentationCheck& c) { return c.passed; });
}

PresentationReport check_presentation(const ETheoryPresentation& pres) {
    const CoeffRingSpec& spec = pres.spec();
    PresentationReport report;
    auto add = [&](std::string name, bool ok, std::string detail) {
        report.checks.push_back({std::move(name), ok, std::move(detail)});
    };

    const auto& printed = pres.printed_f;
    const CoeffElem one = CoeffElem::constant(spec, 1);
    const bool unit_lead = printed.back() == one || printed.back() == -one;
    add("f is monic up to sign", unit_lead, "leading coefficient " + printed.back().to_string());
    add("f(0) = 0", printed.front().is_zero(), "constant term " + printed.front().to_string());
    add("deg f = p^h", pres.ring->degree() == static_cast<int>(checked_prime_power(spec.prime(), pres.height)),
        "degree " + std::to_string(pres.ring->degree()));

    const CoeffElem two = CoeffElem::constant(spec, 2);
    add("tr(1) at z = 0 is 2", pres.tr1.at_zero() == two, "tr(1) = " + pres.tr1.to_string());

    if (pres.p_of_a) {
        const CoeffElem a_squared = CoeffElem::monomial(spec, 1, 2);
        add("P(a) at z = 0 is a^2", pres.p_of_a->at_zero() == a_squared, "P(a) = " + pres.p_of_a->to_string());
    }

    for (const auto& fixture : pres.source.fixtures) {
        const SigmaElem got = reduce_z_power(pres, fixture.power);
        const SigmaElem want = pres.from_terms(fixture.expected);
        add("z^" + std::to_string(fixture.power) + " reduction", got == want,
            "computed " + got.to_string() + ", recorded " + want.to_string());
    }
    return report;
}

}  // namespace morava
