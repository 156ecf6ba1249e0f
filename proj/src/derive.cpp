#include "morava/derive.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace morava {

// ---------------------------------------------------------------------------
// Ideal

Ideal::Ideal(CoeffRingSpec spec)
    : spec_(spec), basis_(spec.modulus(), static_cast<std::size_t>(spec.truncation())) {}

Ideal::Ideal(CoeffRingSpec spec, const std::vector<CoeffElem>& generators) : Ideal(std::move(spec)) {
    for (const auto& g : generators) add(g);
}

bool Ideal::add(const CoeffElem& g) {
    if (!(g.spec() == spec_)) throw std::invalid_argument("generator lives in a different ring");
    if (contains(g)) return false;
    std::vector<ModRow> rows;
    for (int i = 0; i < spec_.truncation(); ++i) {
        CoeffElem shifted = g.shifted(i);
        if (shifted.is_zero()) break;
        rows.push_back(shifted.coefficients());
    }
    basis_.add_rows(rows);
    generators_.push_back(g);
    return true;
}

bool Ideal::contains(const CoeffElem& x) const { return basis_.contains(x.coefficients()); }

bool Ideal::is_trivial() const { return contains(CoeffElem::constant(spec_, 1)); }

CoeffElem Ideal::remainder(const CoeffElem& x) const {
    return CoeffElem(spec_, basis_.remainder(x.coefficients()));
}

CoeffElem Ideal::normal_form(const CoeffElem& x) const {
    const CoeffElem r = remainder(x);
    const auto& m = spec_.modulus();
    for (std::uint64_t c : r.coefficients()) {
        if (c == 0) continue;
        std::uint64_t unit = c;
        while (unit % m.prime() == 0) unit /= m.prime();
        return remainder(r.scaled(static_cast<std::int64_t>(m.inverse(unit))));
    }
    return r;
}

std::vector<CoeffElem> Ideal::basis_elements() const {
    std::vector<CoeffElem> out;
    for (const auto& row : basis_.rows()) out.emplace_back(spec_, row);
    return out;
}

std::vector<CoeffElem> Ideal::minimal_generators() const {
    std::vector<CoeffElem> sorted = generators_;
    std::sort(sorted.begin(), sorted.end(), graded_less);
    // Greedily keep a generator only if the previously kept ones miss it,
    // then drop any kept generator the others already produce.
    std::vector<CoeffElem> kept;
    Ideal partial(spec_);
    for (const auto& g : sorted)
        if (partial.add(g)) kept.push_back(g);
    for (std::size_t i = kept.size(); i-- > 0;) {
        std::vector<CoeffElem> others;
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        if (Ideal(spec_, others).contains(kept[i])) kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
    }
    return kept;
}

std::string Ideal::to_string() const {
    std::ostringstream os;
    os << "(";
    const auto gens = minimal_generators();
    for (std::size_t i = 0; i < gens.size(); ++i) os << (i ? ", " : "") << gens[i].to_string();
    if (gens.empty()) os << "0";
    os << ")";
    return os.str();
}

Ideal reduce_ideal(const Ideal& ideal, const CoeffRingSpec& smaller) {
    std::vector<CoeffElem> gens;
    for (const auto& g : ideal.generators()) gens.push_back(g.reduced_to(smaller));
    return Ideal(smaller, gens);
}

// ---------------------------------------------------------------------------
// Syzygies

CoeffElem dot(const RowVector& v, const std::vector<CoeffElem>& w) {
    if (v.size() != w.size()) throw std::invalid_argument("dot product of mismatched lengths");
    CoeffElem acc(v.front().spec());
    for (std::size_t i = 0; i < v.size(); ++i) acc += v[i] * w[i];
    return acc;
}

RowVector row_times_matrix(const RowVector& v, const WindowMatrix& matrix) {
    const int r = matrix.rank();
    if (static_cast<int>(v.size()) != r) throw std::invalid_argument("row vector length differs from rank");
    RowVector out;
    for (int j = 1; j <= r; ++j) {
        CoeffElem acc(matrix(1, 1).spec());
        for (int i = 1; i <= r; ++i) acc += v[static_cast<std::size_t>(i - 1)] * matrix(i, j);
        out.push_back(acc);
    }
    return out;
}

std::vector<RowVector> syzygies(const WindowMatrix& matrix, const Ideal& ideal) {
    const CoeffRingSpec& spec = ideal.spec();
    const auto r = static_cast<std::size_t>(matrix.rank());
    const auto k = static_cast<std::size_t>(spec.truncation());
    const std::size_t width = r * k;

    // Unknown v_i = sum_s x_(i,s) a^s; row (i,s) of A is a^s times row i of M,
    // flattened as column block j, a-degree t -> j*K + t.
    std::vector<ModRow> a_rows;
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t s = 0; s < k; ++s) {
            ModRow row(width, 0);
            for (std::size_t j = 0; j < r; ++j) {
                const CoeffElem entry = matrix(static_cast<int>(i + 1), static_cast<int>(j + 1)).shifted(static_cast<int>(s));
                std::copy(entry.coefficients().begin(), entry.coefficients().end(), row.begin() + static_cast<std::ptrdiff_t>(j * k));
            }
            a_rows.push_back(std::move(row));
        }
    }
    std::vector<ModRow> relations;
    for (std::size_t j = 0; j < r; ++j) {
        for (const auto& b : ideal.basis().rows()) {
            ModRow row(width, 0);
            std::copy(b.begin(), b.end(), row.begin() + static_cast<std::ptrdiff_t>(j * k));
            relations.push_back(std::move(row));
        }
    }

    std::vector<RowVector> out;
    for (const auto& tail : left_kernel_modulo(spec.modulus(), width, a_rows, relations)) {
        RowVector v;
        for (std::size_t i = 0; i < r; ++i)
            v.emplace_back(spec, ModRow(tail.begin() + static_cast<std::ptrdiff_t>(i * k),
                                        tail.begin() + static_cast<std::ptrdiff_t>((i + 1) * k)));
        out.push_back(std::move(v));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Rule application

namespace {

std::vector<RuleConsequence> apply_with_matrix(const PowerOperation& power, const WindowMatrix& matrix,
                                               const Ideal& ideal, const CoeffElem& x) {
    if (!x.in_maximal_ideal()) throw std::invalid_argument("rule input must lie in the maximal ideal");
    if (!ideal.contains(x)) throw std::invalid_argument("rule input must lie in the ideal");
    const auto pbar = power.pbar_coeffs(x);
    std::vector<RuleConsequence> out;
    for (auto& v : syzygies(matrix, ideal)) {
        for (const auto& entry : row_times_matrix(v, matrix))
            if (!ideal.contains(entry)) throw std::logic_error("syzygy failed certification");
        CoeffElem relation = dot(v, pbar);
        out.push_back({std::move(v), std::move(relation)});
    }
    return out;
}

std::vector<int> admissible_levels(int loop_level) {
    std::vector<int> levels;
    for (int n = 2; n <= loop_level; n += 2) levels.push_back(n);
    return levels;
}

std::vector<CoeffElem> candidates(const Ideal& ideal, bool exhaustive) {
    std::vector<CoeffElem> out = ideal.generators();
    if (exhaustive) {
        for (const auto& b : ideal.basis_elements())
            if (std::find(out.begin(), out.end(), b) == out.end()) out.push_back(b);
    }
    return out;
}

}  // namespace

std::vector<RuleConsequence> apply_rule(const PowerOperation& power, int loop_level, const Ideal& ideal,
                                        const CoeffElem& x) {
    if (loop_level < 2) throw std::invalid_argument("loop level must be at least 2");
    const auto matrix = window_matrix(power.presentation(), window_shift_for_loop_level(loop_level));
    return apply_with_matrix(power, matrix, ideal, x);
}

std::vector<RuleConsequence> apply_rule(const ETheoryPresentation& pres, int loop_level, const Ideal& ideal,
                                        const CoeffElem& x) {
    return apply_rule(PowerOperation(pres), loop_level, ideal, x);
}

// ---------------------------------------------------------------------------
// Saturation

SaturationReport saturate(const ETheoryPresentation& pres, int loop_level, const std::vector<CoeffElem>& initial,
                          const SaturationLimits& limits) {
    const CoeffRingSpec& spec = pres.spec();
    for (const auto& g : initial)
        if (!g.in_maximal_ideal()) throw std::invalid_argument("initial relation " + g.to_string() + " is not in the maximal ideal");

    SaturationReport report{spec, loop_level, initial, Ideal(spec, initial), {}, false, false, limits.exhaustive, 0, 0, ""};
    const PowerOperation power(pres);
    std::vector<std::pair<int, WindowMatrix>> windows;
    for (int n : admissible_levels(loop_level)) windows.emplace_back(n, window_matrix(pres, window_shift_for_loop_level(n)));

    Ideal& ideal = report.ideal;
    if (ideal.is_trivial()) {
        report.trivial = report.fixpoint = true;
        report.stop_reason = "initial relations already trivial";
        return report;
    }

    while (true) {
        if (report.passes >= limits.max_passes) {
            report.stop_reason = "pass limit reached";
            return report;
        }
        ++report.passes;
        bool grew = false;
        for (const auto& [level, matrix] : windows) {
            // Generators derived during this sweep are visited too.
            auto pending = candidates(ideal, limits.exhaustive);
            for (std::size_t idx = 0; idx < pending.size(); ++idx) {
                const CoeffElem x = pending[idx];
                if (!x.in_maximal_ideal()) continue;
                ++report.rule_applications;
                for (auto& consequence : apply_with_matrix(power, matrix, ideal, x)) {
                    const CoeffElem reduced = ideal.normal_form(consequence.relation);
                    if (!ideal.add(reduced)) continue;
                    grew = true;
                    report.trace.push_back({x, level, std::move(consequence.syzygy), consequence.relation, reduced,
                                            report.passes});
                    pending.push_back(reduced);
                    if (ideal.basis().rows().size() > limits.max_basis_rows) {
                        report.stop_reason = "basis size limit reached";
                        return report;
                    }
                    if (ideal.is_trivial()) {
                        report.trivial = report.fixpoint = true;
                        report.stop_reason = "ideal became trivial";
                        return report;
                    }
                }
            }
        }
        if (!grew) {
            report.fixpoint = true;
            report.stop_reason = "no new relations in a full pass";
            return report;
        }
    }
}

bool verify_fixpoint(const ETheoryPresentation& pres, const SaturationReport& report) {
    if (!report.fixpoint) return false;
    if (report.ideal.is_trivial()) return true;
    const PowerOperation power(pres);
    for (int n : admissible_levels(report.loop_level)) {
        const auto matrix = window_matrix(pres, window_shift_for_loop_level(n));
        for (const auto& x : candidates(report.ideal, report.exhaustive)) {
            if (!x.in_maximal_ideal()) continue;
            for (const auto& c : apply_with_matrix(power, matrix, report.ideal, x))
                if (!report.ideal.contains(c.relation)) return false;
        }
    }
    return true;
}

bool verify_trace(const ETheoryPresentation& pres, const SaturationReport& report) {
    const PowerOperation power(pres);
    Ideal before(report.spec, report.initial);
    for (const auto& t : report.trace) {
        if (!before.contains(t.input) || !t.input.in_maximal_ideal()) return false;
        const auto matrix = window_matrix(pres, window_shift_for_loop_level(t.loop_level));
        for (const auto& entry : row_times_matrix(t.syzygy, matrix))
            if (!before.contains(entry)) return false;
        if (!(dot(t.syzygy, power.pbar_coeffs(t.input)) == t.relation)) return false;
        Ideal via_relation = before;
        via_relation.add(t.relation);
        before.add(t.reduced);
        if (!(via_relation == before)) return false;
    }
    return before == report.ideal;
}

Ideal ideal_after(const SaturationReport& report, std::size_t steps) {
    Ideal ideal(report.spec, report.initial);
    for (std::size_t i = 0; i < steps && i < report.trace.size(); ++i) ideal.add(report.trace[i].reduced);
    return ideal;
}

std::optional<std::size_t> find_derivation(const SaturationReport& report, const CoeffElem& q) {
    Ideal before(report.spec, report.initial);
    for (std::size_t i = 0; i < report.trace.size(); ++i) {
        Ideal with_relation = before;
        with_relation.add(report.trace[i].relation);
        Ideal with_q = before;
        with_q.add(q);
        if (with_relation == with_q) return i;
        before.add(report.trace[i].relation);
    }
    return std::nullopt;
}

}  // namespace morava
