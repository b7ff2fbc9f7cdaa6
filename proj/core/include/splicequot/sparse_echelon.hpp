#ifndef SPLICEQUOT_SPARSE_ECHELON_HPP
#define SPLICEQUOT_SPARSE_ECHELON_HPP

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include <splicequot/rational.hpp>

namespace splicequot
{

// Sparse row over column indices, sorted by column, no zero entries.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

SparseRow make_sparse_row(std::vector<std::pair<std::size_t, Rational>> entries);

// Incremental row echelon form over Q. Every stored row has a distinct
// leading column, normalized to 1, and no entries left of it.
class SparseEchelon
{
public:
    // Reduces the row; stores it if independent. Returns true iff the rank grew.
    bool insert(SparseRow row);

    // Residual of row after eliminating every pivot column; empty iff the
    // row lies in the span.
    SparseRow reduce(SparseRow row) const;

    bool contains(const SparseRow &row) const
    {
        return reduce(row).empty();
    }

    std::size_t rank() const
    {
        return rows_.size();
    }

    bool is_pivot(std::size_t col) const
    {
        return rows_.count(col) != 0;
    }

    // Stored rows, by pivot column.
    std::vector<SparseRow> rows() const
    {
        std::vector<SparseRow> out;
        out.reserve(rows_.size());
        for (const auto &[col, row] : rows_) {
            out.push_back(row);
        }
        return out;
    }

private:
    std::map<std::size_t, SparseRow> rows_;
};

} // namespace splicequot

#endif
