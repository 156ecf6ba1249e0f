#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "morava/rings.hpp"

namespace morava {

/// Total power operation P: E_0 -> E_0[z]/f and transfer tr, evaluated from
/// P(xy) = P(x)P(y), P(x + y) = P(x) + P(y) + tr(xy), tr(x) = x tr(1) and the
/// presentation's P(a).
///
/// P does not descend to Z/p^N: an element is first lifted to the integer
/// polynomial whose coefficients are the symmetric residues in (-p^N/2, p^N/2],
/// and P of that lift is reduced. Changing the lift moves P by multiples of p^(N-1).
class PowerOperation {
public:
    /// Memoizes P(a)^i for i < K.
    explicit PowerOperation(ETheoryPresentation pres);

    const ETheoryPresentation& presentation() const { return pres_; }

    SigmaElem transfer(const CoeffElem& x) const { return x * pres_.tr1; }
    /// P(c) for a signed integer c, by doubling and the sum rule.
    SigmaElem of_integer(std::int64_t c) const;
    /// P(a^i).
    const SigmaElem& of_a_power(int i) const;
    SigmaElem operator()(const CoeffElem& x) const;

    /// (p_1, ..., p_r): the z-coefficients of P(x) - x^2. Requires x in the maximal ideal.
    /// Throws std::logic_error if the z^0 coefficient of P(x) is not x^2.
    std::vector<CoeffElem> pbar_coeffs(const CoeffElem& x) const;

private:
    ETheoryPresentation pres_;
    std::vector<SigmaElem> a_powers_;
};

SigmaElem transfer(const ETheoryPresentation& pres, const CoeffElem& x);
SigmaElem power(const ETheoryPresentation& pres, const CoeffElem& x);
std::vector<CoeffElem> pbar_coeffs(const ETheoryPresentation& pres, const CoeffElem& x);

struct PresentationCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct PresentationReport {
    std::vector<PresentationCheck> checks;
    bool passed() const;
};

/// Structural checks on a presentation plus its recorded reduction fixtures.
PresentationReport check_presentation(const ETheoryPresentation& pres);

}  // namespace morava
