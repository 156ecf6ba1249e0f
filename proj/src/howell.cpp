#include "morava/howell.hpp"

#include <algorithm>
#include <stdexcept>

namespace morava {

namespace {

bool is_zero_row(const ModRow& row) {
    return std::all_of(row.begin(), row.end(), [](std::uint64_t x) { return x == 0; });
}

// row -= q * pivot
void subtract_multiple(const PrimePowerModulus& m, ModRow& row, const ModRow& pivot, std::uint64_t q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < row.size(); ++i) row[i] = m.sub(row[i], m.mul(q, pivot[i]));
}

}  // namespace

HowellForm::HowellForm(PrimePowerModulus modulus, std::size_t columns)
    : modulus_(modulus), columns_(columns) {}

HowellForm::HowellForm(PrimePowerModulus modulus, std::size_t columns, std::vector<ModRow> rows)
    : modulus_(modulus), columns_(columns) {
    rebuild(std::move(rows));
}

void HowellForm::add_rows(const std::vector<ModRow>& extra) {
    std::vector<ModRow> all = rows_;
    all.insert(all.end(), extra.begin(), extra.end());
    rebuild(std::move(all));
}

void HowellForm::rebuild(std::vector<ModRow> work) {
    const auto& m = modulus_;
    const std::uint64_t p = m.prime();
    for (auto& row : work) {
        if (row.size() != columns_) throw std::invalid_argument("row width does not match the module");
        for (auto& x : row) x %= m.value();
    }
    std::erase_if(work, is_zero_row);

    std::vector<ModRow> result;
    std::vector<std::size_t> pivots;
    std::vector<int> pivot_vals;
    for (std::size_t c = 0; c < columns_ && !work.empty(); ++c) {
        std::size_t best = work.size();
        int best_val = m.exponent();
        for (std::size_t r = 0; r < work.size(); ++r) {
            if (auto v = m.valuation(work[r][c]); v && *v < best_val) {
                best_val = *v;
                best = r;
            }
        }
        if (best == work.size()) continue;

        ModRow pivot = std::move(work[best]);
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(best));
        const std::uint64_t scale = checked_prime_power(p, best_val);
        const std::uint64_t unit = pivot[c] / scale;
        const std::uint64_t inv = m.inverse(unit);
        for (auto& x : pivot) x = m.mul(x, inv);

        for (auto& row : work) {
            if (row[c] != 0) subtract_multiple(m, row, pivot, row[c] / scale);
        }
        if (best_val > 0) {
            // p^(N-v) * pivot vanishes in column c but may survive further right.
            ModRow annihilated = pivot;
            const std::uint64_t factor = checked_prime_power(p, m.exponent() - best_val);
            for (auto& x : annihilated) x = m.mul(x, factor);
            if (!is_zero_row(annihilated)) work.push_back(std::move(annihilated));
        }
        std::erase_if(work, is_zero_row);
        result.push_back(std::move(pivot));
        pivots.push_back(c);
        pivot_vals.push_back(best_val);
    }

    // Reduce entries above each pivot into [0, p^v).
    for (std::size_t i = 0; i < result.size(); ++i) {
        const std::size_t c = pivots[i];
        const std::uint64_t scale = checked_prime_power(p, pivot_vals[i]);
        for (std::size_t k = 0; k < i; ++k) subtract_multiple(m, result[k], result[i], result[k][c] / scale);
    }
    rows_ = std::move(result);
    pivots_ = std::move(pivots);
}

ModRow HowellForm::remainder(ModRow v) const {
    if (v.size() != columns_) throw std::invalid_argument("vector width does not match the module");
    for (auto& x : v) x %= modulus_.value();
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const std::size_t c = pivots_[i];
        const std::uint64_t pivot = rows_[i][c];
        subtract_multiple(modulus_, v, rows_[i], v[c] / pivot);
    }
    return v;
}

bool HowellForm::contains(const ModRow& v) const { return is_zero_row(remainder(v)); }

std::vector<ModRow> left_kernel_modulo(const PrimePowerModulus& modulus, std::size_t columns,
                                       const std::vector<ModRow>& a_rows,
                                       const std::vector<ModRow>& relations) {
    const std::size_t n = a_rows.size();
    std::vector<ModRow> augmented;
    augmented.reserve(n + relations.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a_rows[i].size() != columns) throw std::invalid_argument("matrix row width mismatch");
        ModRow row(columns + n, 0);
        std::copy(a_rows[i].begin(), a_rows[i].end(), row.begin());
        row[columns + i] = 1;
        augmented.push_back(std::move(row));
    }
    for (const auto& rel : relations) {
        if (rel.size() != columns) throw std::invalid_argument("relation row width mismatch");
        ModRow row(columns + n, 0);
        std::copy(rel.begin(), rel.end(), row.begin());
        augmented.push_back(std::move(row));
    }
    HowellForm form(modulus, columns + n, std::move(augmented));

    std::vector<ModRow> kernel;
    for (std::size_t i = 0; i < form.rows().size(); ++i) {
        if (form.pivots()[i] < columns) continue;
        const auto& row = form.rows()[i];
        kernel.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(columns), row.end());
    }
    return kernel;
}

}  // namespace morava
