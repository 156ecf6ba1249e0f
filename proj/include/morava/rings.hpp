#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "morava/modular.hpp"

namespace morava {

/// Shape of the truncated coefficient ring E_0.
///
/// truncation == 1 is Z/p^N (height one); truncation K > 1 is Z/2^N[a]/(a^K).
class CoeffRingSpec {
public:
    CoeffRingSpec(std::uint64_t prime, int precision, int truncation);

    std::uint64_t prime() const { return modulus_.prime(); }
    int precision() const { return modulus_.exponent(); }
    int truncation() const { return truncation_; }
    const PrimePowerModulus& modulus() const { return modulus_; }

    std::string describe() const;

    friend bool operator==(const CoeffRingSpec&, const CoeffRingSpec&) = default;

private:
    PrimePowerModulus modulus_;
    int truncation_;
};

/// Element sum_i c_i a^i of the truncated coefficient ring, residues in [0, p^N).
class CoeffElem {
public:
    explicit CoeffElem(const CoeffRingSpec& spec);
    CoeffElem(const CoeffRingSpec& spec, std::vector<std::uint64_t> residues);

    static CoeffElem constant(const CoeffRingSpec& spec, std::int64_t c);
    /// c * a^degree; zero if degree >= K.
    static CoeffElem monomial(const CoeffRingSpec& spec, std::int64_t c, int degree);
    /// From signed integer coefficients (ascending a-degree); terms past a^(K-1) drop.
    static CoeffElem from_integers(const CoeffRingSpec& spec, const std::vector<std::int64_t>& coeffs);

    const CoeffRingSpec& spec() const { return spec_; }
    const std::vector<std::uint64_t>& coefficients() const { return coeffs_; }
    std::uint64_t coefficient(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
    std::uint64_t constant_term() const { return coeffs_.front(); }

    bool is_zero() const;
    /// Highest a-degree with a nonzero coefficient, -1 for zero.
    int degree() const;
    /// Constant coefficient divisible by p.
    bool in_maximal_ideal() const { return constant_term() % spec_.prime() == 0; }

    CoeffElem operator-() const;
    CoeffElem& operator+=(const CoeffElem& y);
    CoeffElem& operator-=(const CoeffElem& y);
    friend CoeffElem operator+(CoeffElem x, const CoeffElem& y) { return x += y; }
    friend CoeffElem operator-(CoeffElem x, const CoeffElem& y) { return x -= y; }
    friend CoeffElem operator*(const CoeffElem& x, const CoeffElem& y);
    CoeffElem scaled(std::int64_t c) const;
    CoeffElem pow(unsigned e) const;
    /// Multiplication by a^shift.
    CoeffElem shifted(int shift) const;

    /// Image under the reduction map to a ring with smaller N and K.
    CoeffElem reduced_to(const CoeffRingSpec& smaller) const;

    friend bool operator==(const CoeffElem&, const CoeffElem&) = default;

    /// Canonical residues, descending a-degree: "a^4 + 244*a".
    std::string to_string() const;

private:
    CoeffRingSpec spec_;
    std::vector<std::uint64_t> coeffs_;
};

/// Ordering used wherever generator lists are printed: by a-degree, then by residues.
bool graded_less(const CoeffElem& x, const CoeffElem& y);

/// The quotient ring E_0[z]/f(z) for a monic f with f(0) = 0.
class SigmaRing {
public:
    /// `f` lists coefficients of z^0 .. z^d; the top one must be 1.
    SigmaRing(CoeffRingSpec spec, std::vector<CoeffElem> f);

    const CoeffRingSpec& spec() const { return spec_; }
    int degree() const { return static_cast<int>(f_.size()) - 1; }
    const std::vector<CoeffElem>& relation() const { return f_; }

    /// Remainder of an arbitrary z-polynomial modulo f.
    std::vector<CoeffElem> reduce(std::vector<CoeffElem> poly) const;
    /// z^k modulo f as d coefficients.
    std::vector<CoeffElem> z_power(int k) const;

private:
    CoeffRingSpec spec_;
    std::vector<CoeffElem> f_;
};

/// Element sum_j s_j z^j, j < deg f, of E_0[z]/f(z).
class SigmaElem {
public:
    explicit SigmaElem(std::shared_ptr<const SigmaRing> ring);
    SigmaElem(std::shared_ptr<const SigmaRing> ring, std::vector<CoeffElem> coeffs);

    static SigmaElem scalar(std::shared_ptr<const SigmaRing> ring, const CoeffElem& c);
    static SigmaElem z_power(std::shared_ptr<const SigmaRing> ring, int k);

    const std::shared_ptr<const SigmaRing>& ring() const { return ring_; }
    const std::vector<CoeffElem>& coefficients() const { return coeffs_; }
    const CoeffElem& coefficient(int j) const { return coeffs_.at(static_cast<std::size_t>(j)); }
    /// Evaluation at z = 0.
    const CoeffElem& at_zero() const { return coeffs_.front(); }
    bool is_zero() const;

    SigmaElem operator-() const;
    SigmaElem& operator+=(const SigmaElem& y);
    SigmaElem& operator-=(const SigmaElem& y);
    friend SigmaElem operator+(SigmaElem x, const SigmaElem& y) { return x += y; }
    friend SigmaElem operator-(SigmaElem x, const SigmaElem& y) { return x -= y; }
    friend SigmaElem operator*(const SigmaElem& x, const SigmaElem& y);
    friend SigmaElem operator*(const CoeffElem& c, const SigmaElem& x);
    SigmaElem pow(unsigned e) const;

    friend bool operator==(const SigmaElem& x, const SigmaElem& y) { return x.coeffs_ == y.coeffs_; }

    /// "(a^4 + 244*a)*z^3 + 18*z^2 + a^5*z".
    std::string to_string() const;

private:
    std::shared_ptr<const SigmaRing> ring_;
    std::vector<CoeffElem> coeffs_;
};

/// "(a + 2)*z^2 + 3*z" from coefficients of z^0, z^1, ...
std::string format_z_polynomial(const std::vector<CoeffElem>& coeffs);

/// One term c(a) z^e of a presentation polynomial, with signed integer coefficients.
struct PresentationTerm {
    int z_exponent = 0;
    std::vector<std::int64_t> a_coeffs;
};

/// A z^k reduction recorded alongside a presentation and checked on load.
struct ReductionFixture {
    int power = 0;
    std::vector<PresentationTerm> expected;
};

/// Integer data of a presentation as it appears in a presentation file.
struct PresentationData {
    std::string name;
    std::uint64_t prime = 2;
    int height = 1;
    int precision = 8;
    int truncation = 1;
    std::vector<PresentationTerm> f;
    std::vector<PresentationTerm> tr1;
    std::optional<std::vector<PresentationTerm>> p_of_a;
    std::vector<ReductionFixture> fixtures;
};

/// Power-operation data (p, h, f(z), tr(1), P(a)) instantiated over a truncated E_0.
struct ETheoryPresentation {
    PresentationData source;
    int height = 1;
    std::shared_ptr<const SigmaRing> ring;
    SigmaElem tr1;
    std::optional<SigmaElem> p_of_a;
    /// f exactly as written in the source, before normalizing the leading sign.
    std::vector<CoeffElem> printed_f;

    const CoeffRingSpec& spec() const { return ring->spec(); }
    /// Rank r = p^h - 1 of the module z E_0[z]/f.
    int rank() const { return ring->degree() - 1; }

    SigmaElem scalar(const CoeffElem& c) const { return SigmaElem::scalar(ring, c); }
    SigmaElem from_terms(const std::vector<PresentationTerm>& terms) const;
};

/// Builds the presentation over Z/p^N[a]/(a^K); N and K default to the file's values.
/// Throws std::invalid_argument if deg f != p^h or the leading coefficient of f is not +-1.
ETheoryPresentation instantiate(const PresentationData& data,
                                std::optional<int> precision = std::nullopt,
                                std::optional<int> truncation = std::nullopt);

/// z^k reduced modulo f.
SigmaElem reduce_z_power(const ETheoryPresentation& pres, int k);

/// Matrix of multiplication by z^shift on the basis z, ..., z^r of z E_0[z]/f.
///
/// Entry (i, j), both 1-based, is the z^i coefficient of z^(j + shift). Row i lists
/// the image of the dual basis vector: delta_{z^i} -> sum_j M(i, j) delta_{z^(j+shift)}.
class WindowMatrix {
public:
    WindowMatrix(int shift, int rank, std::vector<CoeffElem> entries);

    int shift() const { return shift_; }
    int rank() const { return rank_; }
    const CoeffElem& operator()(int i, int j) const;
    const std::vector<CoeffElem>& entries() const { return entries_; }

    friend WindowMatrix operator*(const WindowMatrix& x, const WindowMatrix& y);
    friend bool operator==(const WindowMatrix& x, const WindowMatrix& y) {
        return x.rank_ == y.rank_ && x.entries_ == y.entries_;
    }

    /// One line per dual basis vector, e.g. "delta_z -> 2*delta_z^4".
    std::string describe_dual_map() const;

private:
    int shift_;
    int rank_;
    std::vector<CoeffElem> entries_;  // row-major, rank x rank
};

WindowMatrix window_matrix(const ETheoryPresentation& pres, int shift);

/// Window shift used for an E_n-algebra: floor(n / 2).
inline int window_shift_for_loop_level(int loop_level) { return loop_level / 2; }

}  // namespace morava
