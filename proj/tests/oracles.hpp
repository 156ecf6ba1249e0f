#pragma once

// Independent reference computations used by the unit and acceptance suites.
// None of these call into the code path they are used to check.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "morava/derive.hpp"
#include "morava/expr.hpp"
#include "morava/howell.hpp"
#include "morava/padic.hpp"
#include "morava/powerops.hpp"
#include "morava/presentation_io.hpp"
#include "morava/rings.hpp"

namespace oracle {

using morava::CoeffElem;
using morava::CoeffRingSpec;
using morava::SigmaElem;

inline std::string data_path(const std::string& name) { return std::string(MORAVA_DATA_DIR) + "/" + name; }

inline morava::ETheoryPresentation load(const std::string& name, std::optional<int> precision = std::nullopt,
                                        std::optional<int> truncation = std::nullopt) {
    return morava::instantiate(morava::load_presentation_file(data_path(name)), precision, truncation);
}

inline std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

inline std::uint64_t mulmod(std::uint64_t x, std::uint64_t y, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<morava::wide_uint>(x) * y) % m);
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    for (; e; e >>= 1, b = mulmod(b, b, m))
        if (e & 1) r = mulmod(r, b, m);
    return r;
}

// Inverse of a unit by brute Fermat-style search on the unit group order.
inline std::uint64_t invmod(std::uint64_t u, std::uint64_t p, int n) {
    const std::uint64_t m = ipow(p, n);
    const std::uint64_t order = ipow(p, n - 1) * (p - 1);
    return powmod(u, order - 1, m);
}

inline CoeffElem elem(const CoeffRingSpec& spec, const std::string& text) { return morava::parse_relation(spec, text); }

/// z-polynomial from coefficient texts, lowest power first.
inline SigmaElem sigma(const morava::ETheoryPresentation& pres, const std::vector<std::string>& coeffs) {
    std::vector<CoeffElem> c;
    for (const auto& t : coeffs) c.push_back(elem(pres.spec(), t));
    c.resize(static_cast<std::size_t>(pres.ring->degree()), CoeffElem(pres.spec()));
    return SigmaElem(pres.ring, c);
}

/// Every c in [0, p^N) with (1 + p c)^(p^(k-1)) = 1 + b p^k modulo p^(N + extra).
inline std::vector<std::uint64_t> hensel_solutions(std::uint64_t p, int k, std::int64_t b, int n, int extra) {
    const std::uint64_t m = ipow(p, n + extra);
    const std::uint64_t e = ipow(p, k - 1);
    const auto bm = static_cast<std::uint64_t>(((b % static_cast<std::int64_t>(m)) + static_cast<std::int64_t>(m)) %
                                               static_cast<std::int64_t>(m));
    const std::uint64_t rhs = (1 + mulmod(bm, ipow(p, k), m)) % m;
    std::vector<std::uint64_t> out;
    for (std::uint64_t c = 0; c < ipow(p, n); ++c)
        if (powmod(1 + p * c, e, m) == rhs) out.push_back(c);
    return out;
}

/// Classical log(1 + t) for p | t, returned modulo p^n. Term-by-term with guard digits.
inline std::uint64_t classical_log(std::uint64_t p, std::uint64_t t, int n) {
    const std::uint64_t m = ipow(p, n);
    std::uint64_t sum = 0;
    for (std::uint64_t k = 1;; ++k) {
        int v = 0;
        std::uint64_t u = k;
        while (u % p == 0) {
            u /= p;
            ++v;
        }
        // v_p(t^k / k) >= k - v
        if (static_cast<int>(k) - v >= n + 4) break;
        const std::uint64_t wide = ipow(p, n + v);
        std::uint64_t term = powmod(t, k, wide);  // divisible by p^v since k >= v
        term /= ipow(p, v);
        term = mulmod(term % m, invmod(u % m, p, n), m);
        sum = (k % 2 == 1) ? (sum + term) % m : (sum + m - term) % m;
    }
    return sum;
}

/// (1 - 1/p) log(1 + t) modulo p^(n - 1), for p | t and x known modulo p^n.
inline std::uint64_t scaled_classical_log(std::uint64_t p, std::uint64_t t, int n) {
    const std::uint64_t full = classical_log(p, t, n + 1);  // valuation >= 1
    const std::uint64_t m = ipow(p, n - 1);
    return mulmod((full / p) % m, p - 1, m);
}

/// Z/p^N-span of the given rows, by closure under addition of generators.
inline std::set<std::vector<std::uint64_t>> span(const std::vector<std::vector<std::uint64_t>>& gens, std::uint64_t modulus,
                                                 std::size_t width) {
    std::set<std::vector<std::uint64_t>> seen{std::vector<std::uint64_t>(width, 0)};
    std::vector<std::vector<std::uint64_t>> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
        std::vector<std::vector<std::uint64_t>> next;
        for (const auto& v : frontier) {
            for (const auto& g : gens) {
                auto w = v;
                for (std::size_t i = 0; i < width; ++i) w[i] = (w[i] + g[i]) % modulus;
                if (seen.insert(w).second) next.push_back(std::move(w));
            }
        }
        frontier = std::move(next);
    }
    return seen;
}

/// P(x) from the symmetric integer lift of x, written as a list of atoms +-a^i and
/// folded one atom at a time with P(u + w) = P(u) + P(w) + tr(u w), in the given order.
/// P(1) = 1, P(-1) = tr(1) - 1, P(+-a^i) = P(+-1) P(a)^i.
inline SigmaElem unary_power(const morava::ETheoryPresentation& pres, const CoeffElem& x, std::mt19937_64* shuffle) {
    const auto& spec = pres.spec();
    const auto& mod = spec.modulus();
    struct Atom {
        int sign;
        int degree;
    };
    std::vector<Atom> atoms;
    for (int i = 0; i < spec.truncation(); ++i) {
        const std::int64_t c = mod.signed_lift(x.coefficient(i));
        for (std::int64_t j = 0; j < (c < 0 ? -c : c); ++j) atoms.push_back({c < 0 ? -1 : 1, i});
    }
    if (shuffle) std::shuffle(atoms.begin(), atoms.end(), *shuffle);

    const SigmaElem one = pres.scalar(CoeffElem::constant(spec, 1));
    const SigmaElem minus_one = pres.tr1 - one;
    std::vector<SigmaElem> pa_pows{one};
    for (int i = 1; i < spec.truncation(); ++i) pa_pows.push_back(pa_pows.back() * *pres.p_of_a);

    SigmaElem total(pres.ring);
    CoeffElem acc(spec);
    for (const auto& atom : atoms) {
        const CoeffElem w = CoeffElem::monomial(spec, atom.sign, atom.degree);
        const SigmaElem pw = (atom.sign > 0 ? one : minus_one) * pa_pows[static_cast<std::size_t>(atom.degree)];
        total = total + pw + (acc * w) * pres.tr1;
        acc += w;
    }
    return total;
}

/// Random element whose symmetric lift has coefficients in [-bound, bound] and a-degree <= max_degree.
inline CoeffElem random_small(const CoeffRingSpec& spec, std::mt19937_64& rng, int bound, int max_degree) {
    std::uniform_int_distribution<std::int64_t> coeff(-bound, bound);
    std::vector<std::int64_t> c(static_cast<std::size_t>(std::min(max_degree + 1, spec.truncation())));
    for (auto& v : c) v = coeff(rng);
    return CoeffElem::from_integers(spec, c);
}

inline CoeffElem random_element(const CoeffRingSpec& spec, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> coeff(0, spec.modulus().value() - 1);
    std::vector<std::uint64_t> c(static_cast<std::size_t>(spec.truncation()));
    for (auto& v : c) v = coeff(rng);
    return CoeffElem(spec, c);
}

/// True iff every coefficient of x - y lies in the ideal.
inline bool congruent_mod(const SigmaElem& x, const SigmaElem& y, const morava::Ideal& ideal) {
    const auto diff = x - y;
    for (const auto& c : diff.coefficients())
        if (!ideal.contains(c)) return false;
    return true;
}

}  // namespace oracle
