#include <splicequot/sparse_echelon.hpp>

#include <algorithm>

namespace splicequot
{

SparseRow make_sparse_row(std::vector<std::pair<std::size_t, Rational>> entries)
{
    std::sort(entries.begin(), entries.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
    SparseRow out;
    out.reserve(entries.size());
    for (auto &e : entries) {
        if (!out.empty() && out.back().first == e.first) {
            out.back().second += e.second;
            if (out.back().second == 0) {
                out.pop_back();
            }
        } else if (e.second != 0) {
            out.push_back(std::move(e));
        }
    }
    return out;
}

namespace
{

// row <- row - factor * pivot_row, where both are sorted.
SparseRow axpy(const SparseRow &row, const Rational &factor, const SparseRow &pivot_row)
{
    SparseRow out;
    out.reserve(row.size() + pivot_row.size());
    auto a = row.begin();
    auto b = pivot_row.begin();
    while (a != row.end() || b != pivot_row.end()) {
        if (b == pivot_row.end() || (a != row.end() && a->first < b->first)) {
            out.push_back(*a++);
        } else if (a == row.end() || b->first < a->first) {
            out.emplace_back(b->first, -factor * b->second);
            ++b;
        } else {
            Rational v = a->second - factor * b->second;
            if (v != 0) {
                out.emplace_back(a->first, std::move(v));
            }
            ++a;
            ++b;
        }
    }
    return out;
}

} // namespace

SparseRow SparseEchelon::reduce(SparseRow row) const
{
    std::size_t pos = 0;
    while (pos < row.size()) {
        const auto it = rows_.find(row[pos].first);
        if (it == rows_.end()) {
            ++pos;
            continue;
        }
        // Pivot rows have nothing left of their pivot, so entries before pos stay put.
        const Rational factor = row[pos].second;
        row = axpy(row, factor, it->second);
    }
    return row;
}

bool SparseEchelon::insert(SparseRow row)
{
    row = reduce(std::move(row));
    if (row.empty()) {
        return false;
    }
    // Rows are reduced against every pivot, so the leading entry is a new pivot.
    const Rational lead = row.front().second;
    for (auto &e : row) {
        e.second /= lead;
    }
    const std::size_t col = row.front().first;
    rows_.emplace(col, std::move(row));
    return true;
}

} // namespace splicequot
