#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "morava/howell.hpp"
#include "morava/powerops.hpp"
#include "morava/rings.hpp"

namespace morava {

/// Finitely generated ideal of the truncated E_0.
///
/// The basis is the Howell form of the Z/p^N-span of a^i g over all generators g
/// and i < K, so it is closed under multiplication by a.
class Ideal {
public:
    explicit Ideal(CoeffRingSpec spec);
    Ideal(CoeffRingSpec spec, const std::vector<CoeffElem>& generators);

    const CoeffRingSpec& spec() const { return spec_; }
    /// Generators in insertion order; only generators that enlarged the ideal are kept.
    const std::vector<CoeffElem>& generators() const { return generators_; }
    const HowellForm& basis() const { return basis_; }
    std::vector<CoeffElem> basis_elements() const;

    /// Adds g; returns true when the ideal grew.
    bool add(const CoeffElem& g);
    bool contains(const CoeffElem& x) const;
    bool is_trivial() const;
    /// Canonical representative of x modulo the ideal.
    CoeffElem remainder(const CoeffElem& x) const;
    /// Remainder of x scaled by a unit so its lowest-degree coefficient is a power
    /// of p. Adding it to the ideal has the same effect as adding x.
    CoeffElem normal_form(const CoeffElem& x) const;

    /// Irredundant generating set, ordered by a-degree and then residues.
    std::vector<CoeffElem> minimal_generators() const;

    /// Same ideal (generator lists may differ).
    friend bool operator==(const Ideal& x, const Ideal& y) { return x.spec_ == y.spec_ && x.basis_ == y.basis_; }

    /// "(4, 2*a^2, a^6)".
    std::string to_string() const;

private:
    CoeffRingSpec spec_;
    std::vector<CoeffElem> generators_;
    HowellForm basis_;
};

inline bool contains(const Ideal& ideal, const CoeffElem& x) { return ideal.contains(x); }
inline bool is_trivial(const Ideal& ideal) { return ideal.is_trivial(); }

/// Image of an ideal under the reduction map to a smaller truncation.
Ideal reduce_ideal(const Ideal& ideal, const CoeffRingSpec& smaller);

using RowVector = std::vector<CoeffElem>;

/// Generators of {v : v M = 0 entrywise modulo I}, as a Z/p^N-spanning set.
std::vector<RowVector> syzygies(const WindowMatrix& matrix, const Ideal& ideal);

/// Entries of v M.
RowVector row_times_matrix(const RowVector& v, const WindowMatrix& matrix);
CoeffElem dot(const RowVector& v, const std::vector<CoeffElem>& w);

struct RuleConsequence {
    RowVector syzygy;
    CoeffElem relation;  // syzygy . pbar(x)
};

/// Consequences of "pbar(x) = M u for some u" with M the window matrix at shift
/// floor(n/2): every syzygy v of M modulo I forces v . pbar(x) into the ideal.
/// Each returned syzygy has been re-checked by direct expansion. Requires x in I
/// and in the maximal ideal.
std::vector<RuleConsequence> apply_rule(const PowerOperation& power, int loop_level, const Ideal& ideal,
                                        const CoeffElem& x);
std::vector<RuleConsequence> apply_rule(const ETheoryPresentation& pres, int loop_level, const Ideal& ideal,
                                        const CoeffElem& x);

struct SaturationLimits {
    int max_passes = 64;
    std::size_t max_basis_rows = 4096;
    /// Feed every Howell basis element to the rule, not just the generators.
    bool exhaustive = false;
};

/// One step that enlarged the ideal.
struct TraceEntry {
    CoeffElem input;        // x fed to the rule
    int loop_level = 0;     // n' used for the window
    RowVector syzygy;       // v with v M = 0 mod I
    CoeffElem relation;     // v . pbar(x) as computed
    CoeffElem reduced;      // normal form of relation modulo the prior ideal; the generator added
    int pass = 0;
};

struct SaturationReport {
    CoeffRingSpec spec;
    int loop_level = 0;
    std::vector<CoeffElem> initial;
    Ideal ideal;
    std::vector<TraceEntry> trace;
    bool trivial = false;
    bool fixpoint = false;
    bool exhaustive = false;
    int passes = 0;
    std::size_t rule_applications = 0;
    std::string stop_reason;
};

/// Applies the rule at every even loop level n' <= n to every candidate until a
/// full pass adds nothing, the ideal becomes trivial, or a limit is hit.
/// Requires every initial relation to lie in the maximal ideal.
SaturationReport saturate(const ETheoryPresentation& pres, int loop_level, const std::vector<CoeffElem>& initial,
                          const SaturationLimits& limits = {});

/// Re-runs the rule on every candidate at every admissible loop level and
/// confirms the ideal does not grow.
bool verify_fixpoint(const ETheoryPresentation& pres, const SaturationReport& report);

/// Re-derives every trace entry from scratch: x lies in the ideal known before
/// the step, v M vanishes modulo that ideal, v . pbar(x) equals the recorded
/// relation, and the added normal form generates the same enlargement.
bool verify_trace(const ETheoryPresentation& pres, const SaturationReport& report);

/// Ideal generated by the initial relations and the first `steps` trace relations.
Ideal ideal_after(const SaturationReport& report, std::size_t steps);

/// Index of the first trace entry whose relation generates the same ideal as q
/// on top of everything derived before it.
std::optional<std::size_t> find_derivation(const SaturationReport& report, const CoeffElem& q);

}  // namespace morava
