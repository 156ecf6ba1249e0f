#include "morava/rings.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace morava {

// ---------------------------------------------------------------------------
// CoeffRingSpec

CoeffRingSpec::CoeffRingSpec(std::uint64_t prime, int precision, int truncation)
    : modulus_(prime, precision), truncation_(truncation) {
    if (truncation < 1) throw std::invalid_argument("a-adic truncation K must be at least 1");
    if (truncation > 1 && prime != 2)
        throw std::invalid_argument("the a-adic coefficient ring is only modelled at p = 2");
}

std::string CoeffRingSpec::describe() const {
    std::ostringstream os;
    os << "Z/" << modulus_.describe();
    if (truncation_ > 1) os << "[a]/(a^" << truncation_ << ")";
    return os.str();
}

// ---------------------------------------------------------------------------
// CoeffElem

CoeffElem::CoeffElem(const CoeffRingSpec& spec)
    : spec_(spec), coeffs_(static_cast<std::size_t>(spec.truncation()), 0) {}

CoeffElem::CoeffElem(const CoeffRingSpec& spec, std::vector<std::uint64_t> residues)
    : spec_(spec), coeffs_(std::move(residues)) {
    if (coeffs_.size() != static_cast<std::size_t>(spec.truncation()))
        throw std::invalid_argument("coefficient count must equal the a-truncation");
    for (auto& c : coeffs_) c %= spec_.modulus().value();
}

CoeffElem CoeffElem::constant(const CoeffRingSpec& spec, std::int64_t c) {
    return monomial(spec, c, 0);
}

CoeffElem CoeffElem::monomial(const CoeffRingSpec& spec, std::int64_t c, int degree) {
    CoeffElem out(spec);
    if (degree < spec.truncation()) out.coeffs_[static_cast<std::size_t>(degree)] = spec.modulus().reduce(c);
    return out;
}

CoeffElem CoeffElem::from_integers(const CoeffRingSpec& spec, const std::vector<std::int64_t>& coeffs) {
    CoeffElem out(spec);
    for (std::size_t i = 0; i < coeffs.size() && i < out.coeffs_.size(); ++i)
        out.coeffs_[i] = spec.modulus().reduce(coeffs[i]);
    return out;
}

bool CoeffElem::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::uint64_t c) { return c == 0; });
}

int CoeffElem::degree() const {
    for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i)
        if (coeffs_[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

CoeffElem CoeffElem::operator-() const {
    CoeffElem out(*this);
    for (auto& c : out.coeffs_) c = spec_.modulus().neg(c);
    return out;
}

CoeffElem& CoeffElem::operator+=(const CoeffElem& y) {
    if (!(spec_ == y.spec_)) throw std::invalid_argument("coefficient rings differ");
    const auto& m = spec_.modulus();
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = m.add(coeffs_[i], y.coeffs_[i]);
    return *this;
}

CoeffElem& CoeffElem::operator-=(const CoeffElem& y) {
    if (!(spec_ == y.spec_)) throw std::invalid_argument("coefficient rings differ");
    const auto& m = spec_.modulus();
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = m.sub(coeffs_[i], y.coeffs_[i]);
    return *this;
}

CoeffElem operator*(const CoeffElem& x, const CoeffElem& y) {
    if (!(x.spec_ == y.spec_)) throw std::invalid_argument("coefficient rings differ");
    const auto& m = x.spec_.modulus();
    const std::size_t k = x.coeffs_.size();
    CoeffElem out(x.spec_);
    for (std::size_t i = 0; i < k; ++i) {
        if (x.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; i + j < k; ++j)
            out.coeffs_[i + j] = m.add(out.coeffs_[i + j], m.mul(x.coeffs_[i], y.coeffs_[j]));
    }
    return out;
}

CoeffElem CoeffElem::scaled(std::int64_t c) const {
    const auto& m = spec_.modulus();
    const std::uint64_t r = m.reduce(c);
    CoeffElem out(*this);
    for (auto& v : out.coeffs_) v = m.mul(v, r);
    return out;
}

CoeffElem CoeffElem::pow(unsigned e) const {
    CoeffElem result = constant(spec_, 1);
    CoeffElem base = *this;
    while (e > 0) {
        if (e & 1U) result = result * base;
        base = base * base;
        e >>= 1U;
    }
    return result;
}

CoeffElem CoeffElem::shifted(int shift) const {
    CoeffElem out(spec_);
    for (std::size_t i = 0; i + static_cast<std::size_t>(shift) < coeffs_.size(); ++i)
        out.coeffs_[i + static_cast<std::size_t>(shift)] = coeffs_[i];
    return out;
}

CoeffElem CoeffElem::reduced_to(const CoeffRingSpec& smaller) const {
    if (smaller.prime() != spec_.prime() || smaller.precision() > spec_.precision() ||
        smaller.truncation() > spec_.truncation())
        throw std::invalid_argument("target ring is not a quotient of this one");
    CoeffElem out(smaller);
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i)
        out.coeffs_[i] = coeffs_[i] % smaller.modulus().value();
    return out;
}

std::string CoeffElem::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i) {
        const std::uint64_t c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << c;
            continue;
        }
        if (c != 1) os << c << "*";
        os << "a";
        if (i > 1) os << "^" << i;
    }
    if (first) os << "0";
    return os.str();
}

bool graded_less(const CoeffElem& x, const CoeffElem& y) {
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    const auto& cx = x.coefficients();
    const auto& cy = y.coefficients();
    return std::lexicographical_compare(cx.rbegin(), cx.rend(), cy.rbegin(), cy.rend());
}

// ---------------------------------------------------------------------------
// SigmaRing

SigmaRing::SigmaRing(CoeffRingSpec spec, std::vector<CoeffElem> f)
    : spec_(std::move(spec)), f_(std::move(f)) {
    if (f_.size() < 2) throw std::invalid_argument("f must have positive degree");
    if (!(f_.back() == CoeffElem::constant(spec_, 1))) throw std::invalid_argument("f must be monic");
}

std::vector<CoeffElem> SigmaRing::reduce(std::vector<CoeffElem> poly) const {
    const std::size_t d = f_.size() - 1;
    // Long division by the monic f, clearing the top coefficient each step.
    for (std::size_t top = poly.size(); top-- > d;) {
        const CoeffElem lead = poly[top];
        if (lead.is_zero()) continue;
        for (std::size_t i = 0; i <= d; ++i) poly[top - d + i] -= lead * f_[i];
    }
    poly.resize(d, CoeffElem(spec_));
    return poly;
}

std::vector<CoeffElem> SigmaRing::z_power(int k) const {
    if (k < 0) throw std::invalid_argument("negative power of z");
    const std::size_t d = f_.size() - 1;
    std::vector<CoeffElem> current(d, CoeffElem(spec_));
    current[0] = CoeffElem::constant(spec_, 1);
    for (int step = 0; step < k; ++step) {
        // Multiply by z and fold z^d back in via z^d = -(f - z^d).
        CoeffElem overflow = current[d - 1];
        for (std::size_t i = d - 1; i > 0; --i) current[i] = current[i - 1];
        current[0] = CoeffElem(spec_);
        if (!overflow.is_zero())
            for (std::size_t i = 0; i < d; ++i) current[i] -= overflow * f_[i];
    }
    return current;
}

// ---------------------------------------------------------------------------
// SigmaElem

SigmaElem::SigmaElem(std::shared_ptr<const SigmaRing> ring)
    : ring_(std::move(ring)),
      coeffs_(static_cast<std::size_t>(ring_->degree()), CoeffElem(ring_->spec())) {}

SigmaElem::SigmaElem(std::shared_ptr<const SigmaRing> ring, std::vector<CoeffElem> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != static_cast<std::size_t>(ring_->degree())) coeffs_ = ring_->reduce(std::move(coeffs_));
}

SigmaElem SigmaElem::scalar(std::shared_ptr<const SigmaRing> ring, const CoeffElem& c) {
    SigmaElem out(std::move(ring));
    out.coeffs_[0] = c;
    return out;
}

SigmaElem SigmaElem::z_power(std::shared_ptr<const SigmaRing> ring, int k) {
    auto coeffs = ring->z_power(k);
    return SigmaElem(std::move(ring), std::move(coeffs));
}

bool SigmaElem::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const CoeffElem& c) { return c.is_zero(); });
}

SigmaElem SigmaElem::operator-() const {
    SigmaElem out(*this);
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

SigmaElem& SigmaElem::operator+=(const SigmaElem& y) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += y.coeffs_.at(i);
    return *this;
}

SigmaElem& SigmaElem::operator-=(const SigmaElem& y) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= y.coeffs_.at(i);
    return *this;
}

SigmaElem operator*(const SigmaElem& x, const SigmaElem& y) {
    const std::size_t d = x.coeffs_.size();
    std::vector<CoeffElem> prod(2 * d - 1, CoeffElem(x.ring_->spec()));
    for (std::size_t i = 0; i < d; ++i) {
        if (x.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < d; ++j) prod[i + j] += x.coeffs_[i] * y.coeffs_.at(j);
    }
    return SigmaElem(x.ring_, x.ring_->reduce(std::move(prod)));
}

SigmaElem operator*(const CoeffElem& c, const SigmaElem& x) {
    SigmaElem out(x);
    for (auto& v : out.coeffs_) v = c * v;
    return out;
}

SigmaElem SigmaElem::pow(unsigned e) const {
    SigmaElem result = scalar(ring_, CoeffElem::constant(ring_->spec(), 1));
    SigmaElem base = *this;
    while (e > 0) {
        if (e & 1U) result = result * base;
        base = base * base;
        e >>= 1U;
    }
    return result;
}

std::string format_z_polynomial(const std::vector<CoeffElem>& coeffs) {
    std::ostringstream os;
    bool first = true;
    for (int j = static_cast<int>(coeffs.size()) - 1; j >= 0; --j) {
        const CoeffElem& c = coeffs[static_cast<std::size_t>(j)];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        std::string cs = c.to_string();
        if (j == 0) {
            os << cs;
            continue;
        }
        const bool compound = cs.find(' ') != std::string::npos;
        if (cs != "1") os << (compound ? "(" + cs + ")" : cs) << "*";
        os << "z";
        if (j > 1) os << "^" << j;
    }
    if (first) os << "0";
    return os.str();
}

std::string SigmaElem::to_string() const { return format_z_polynomial(coeffs_); }

// ---------------------------------------------------------------------------
// Presentations

SigmaElem ETheoryPresentation::from_terms(const std::vector<PresentationTerm>& terms) const {
    int top = 0;
    for (const auto& t : terms) top = std::max(top, t.z_exponent);
    std::vector<CoeffElem> poly(static_cast<std::size_t>(top) + 1, CoeffElem(spec()));
    for (const auto& t : terms) {
        if (t.z_exponent < 0) throw std::invalid_argument("negative z-exponent");
        poly[static_cast<std::size_t>(t.z_exponent)] += CoeffElem::from_integers(spec(), t.a_coeffs);
    }
    return SigmaElem(ring, ring->reduce(std::move(poly)));
}

ETheoryPresentation instantiate(const PresentationData& data, std::optional<int> precision,
                                std::optional<int> truncation) {
    const int n = precision.value_or(data.precision);
    const int k = data.p_of_a ? truncation.value_or(data.truncation) : 1;
    if (!data.p_of_a && truncation && *truncation != 1)
        throw std::invalid_argument("a presentation without P(a) has no a-adic truncation");
    if (data.height < 1) throw std::invalid_argument("height must be positive");
    if (data.height > 1 && !data.p_of_a) throw std::invalid_argument("height > 1 needs P(a)");
    CoeffRingSpec spec(data.prime, n, k);

    int degree = 0;
    for (const auto& t : data.f) degree = std::max(degree, t.z_exponent);
    const auto expected = checked_prime_power(data.prime, data.height);
    if (static_cast<std::uint64_t>(degree) != expected)
        throw std::invalid_argument("deg f must equal p^height");

    std::vector<CoeffElem> printed(static_cast<std::size_t>(degree) + 1, CoeffElem(spec));
    for (const auto& t : data.f) {
        if (t.z_exponent < 0) throw std::invalid_argument("negative z-exponent in f");
        printed[static_cast<std::size_t>(t.z_exponent)] += CoeffElem::from_integers(spec, t.a_coeffs);
    }
    const CoeffElem one = CoeffElem::constant(spec, 1);
    std::vector<CoeffElem> monic = printed;
    if (printed.back() == -one) {
        for (auto& c : monic) c = -c;
    } else if (!(printed.back() == one)) {
        throw std::invalid_argument("leading coefficient of f must be +1 or -1");
    }

    auto ring = std::make_shared<const SigmaRing>(spec, monic);
    ETheoryPresentation pres{data, data.height, ring, SigmaElem(ring), std::nullopt, printed};
    pres.tr1 = pres.from_terms(data.tr1);
    if (data.p_of_a) pres.p_of_a = pres.from_terms(*data.p_of_a);
    return pres;
}

SigmaElem reduce_z_power(const ETheoryPresentation& pres, int k) {
    return SigmaElem::z_power(pres.ring, k);
}

// ---------------------------------------------------------------------------
// WindowMatrix

WindowMatrix::WindowMatrix(int shift, int rank, std::vector<CoeffElem> entries)
    : shift_(shift), rank_(rank), entries_(std::move(entries)) {
    if (entries_.size() != static_cast<std::size_t>(rank) * static_cast<std::size_t>(rank))
        throw std::invalid_argument("window matrix must be square");
}

const CoeffElem& WindowMatrix::operator()(int i, int j) const {
    if (i < 1 || j < 1 || i > rank_ || j > rank_) throw std::out_of_range("window index");
    return entries_[static_cast<std::size_t>((i - 1) * rank_ + (j - 1))];
}

WindowMatrix operator*(const WindowMatrix& x, const WindowMatrix& y) {
    if (x.rank_ != y.rank_) throw std::invalid_argument("window ranks differ");
    const int r = x.rank_;
    std::vector<CoeffElem> out;
    out.reserve(x.entries_.size());
    for (int i = 1; i <= r; ++i) {
        for (int j = 1; j <= r; ++j) {
            CoeffElem acc(x(1, 1).spec());
            for (int l = 1; l <= r; ++l) acc += x(i, l) * y(l, j);
            out.push_back(acc);
        }
    }
    return WindowMatrix(x.shift_ + y.shift_, r, std::move(out));
}

std::string WindowMatrix::describe_dual_map() const {
    auto basis = [](int e) { return e == 1 ? std::string("delta_z") : "delta_z^" + std::to_string(e); };
    std::ostringstream os;
    for (int i = 1; i <= rank_; ++i) {
        os << basis(i) << " -> ";
        bool first = true;
        for (int j = 1; j <= rank_; ++j) {
            const CoeffElem& c = (*this)(i, j);
            if (c.is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            std::string cs = c.to_string();
            if (cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
            if (cs != "1") os << cs << "*";
            os << basis(j + shift_);
        }
        if (first) os << "0";
        os << "\n";
    }
    return os.str();
}

WindowMatrix window_matrix(const ETheoryPresentation& pres, int shift) {
    if (shift < 0) throw std::invalid_argument("window shift must be non-negative");
    const int r = pres.rank();
    std::vector<CoeffElem> entries(static_cast<std::size_t>(r * r), CoeffElem(pres.spec()));
    for (int j = 1; j <= r; ++j) {
        const auto column = pres.ring->z_power(j + shift);
        for (int i = 1; i <= r; ++i) entries[static_cast<std::size_t>((i - 1) * r + (j - 1))] = column[static_cast<std::size_t>(i)];
    }
    return WindowMatrix(shift, r, std::move(entries));
}

}  // namespace morava
