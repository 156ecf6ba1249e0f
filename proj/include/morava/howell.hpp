#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "morava/modular.hpp"

namespace morava {

using ModRow = std::vector<std::uint64_t>;

/// Canonical basis of a submodule of (Z/p^N)^n.
///
/// Rows are in echelon form with pivots p^v, entries above each pivot reduced
/// into [0, p^v), and the Howell property: the rows whose first c entries vanish
/// span every element of the module whose first c entries vanish. The last
/// property is what makes greedy reduction a correct membership test over a
/// chain ring.
class HowellForm {
public:
    HowellForm(PrimePowerModulus modulus, std::size_t columns);
    HowellForm(PrimePowerModulus modulus, std::size_t columns, std::vector<ModRow> rows);

    const PrimePowerModulus& modulus() const { return modulus_; }
    std::size_t columns() const { return columns_; }
    const std::vector<ModRow>& rows() const { return rows_; }
    /// Pivot column of each row.
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Replaces the module by the span of the current rows and `extra`.
    void add_rows(const std::vector<ModRow>& extra);

    /// Canonical representative of v modulo the module.
    ModRow remainder(ModRow v) const;
    bool contains(const ModRow& v) const;

    friend bool operator==(const HowellForm& x, const HowellForm& y) {
        return x.columns_ == y.columns_ && x.rows_ == y.rows_;
    }

private:
    void rebuild(std::vector<ModRow> rows);

    PrimePowerModulus modulus_;
    std::size_t columns_;
    std::vector<ModRow> rows_;
    std::vector<std::size_t> pivots_;
};

/// Howell basis of {x : x * A lies in the span of `relations`}.
///
/// `a_rows` holds the rows of A (each of width `columns`); `relations` rows have
/// the same width. The result rows have length a_rows.size().
std::vector<ModRow> left_kernel_modulo(const PrimePowerModulus& modulus, std::size_t columns,
                                       const std::vector<ModRow>& a_rows,
                                       const std::vector<ModRow>& relations);

}  // namespace morava
