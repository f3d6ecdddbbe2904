#ifndef AQCI_HERMITE_HPP
#define AQCI_HERMITE_HPP

#include <cstddef>
#include <cstdlib>
#include <utility>
#include <vector>

namespace aqci {

/// Row-style Hermite normal form of an integer matrix: the nonzero rows of the
/// result form an upper-echelon basis of the row lattice with positive pivots
/// and entries above each pivot reduced into [0, pivot). Rows are reduced by
/// repeated Euclidean division, with exact integers throughout.
template <class Integer>
std::vector<std::vector<Integer>> hermite_form(std::vector<std::vector<Integer>> rows) {
    using std::abs;
    if (rows.empty()) return rows;
    const std::size_t cols = rows.front().size();
    std::size_t cur = 0;
    std::vector<std::size_t> pivot_cols;
    for (std::size_t c = 0; c < cols && cur < rows.size(); ++c) {
        for (;;) {
            // Smallest nonzero |entry| in column c among remaining rows.
            std::size_t best = rows.size();
            for (std::size_t r = cur; r < rows.size(); ++r) {
                if (rows[r][c] == 0) continue;
                if (best == rows.size() || abs(rows[r][c]) < abs(rows[best][c])) best = r;
            }
            if (best == rows.size()) break;
            std::swap(rows[cur], rows[best]);
            bool done = true;
            for (std::size_t r = cur + 1; r < rows.size(); ++r) {
                if (rows[r][c] == 0) continue;
                Integer q = rows[r][c] / rows[cur][c];  // truncating; remainder shrinks in magnitude
                for (std::size_t k = c; k < cols; ++k) rows[r][k] -= q * rows[cur][k];
                if (rows[r][c] != 0) done = false;
            }
            if (done) break;
        }
        if (cur < rows.size() && rows[cur][c] != 0) {
            if (rows[cur][c] < 0)
                for (auto& x : rows[cur]) x = -x;
            pivot_cols.push_back(c);
            ++cur;
        }
    }
    rows.resize(cur);
    // Reduce entries above each pivot.
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::size_t c = pivot_cols[i];
        for (std::size_t r = 0; r < i; ++r) {
            Integer q = rows[r][c] / rows[i][c];
            if (rows[r][c] - q * rows[i][c] < 0) q -= 1;
            if (q == 0) continue;
            for (std::size_t k = c; k < cols; ++k) rows[r][k] -= q * rows[i][k];
        }
    }
    return rows;
}

/// Absolute determinant of a full-rank row lattice in Z^cols; 0 if rank-deficient.
template <class Integer>
Integer lattice_determinant(std::vector<std::vector<Integer>> rows) {
    if (rows.empty()) return Integer(0);
    const std::size_t cols = rows.front().size();
    auto h = hermite_form(std::move(rows));
    if (h.size() != cols) return Integer(0);
    Integer det(1);
    for (std::size_t i = 0; i < cols; ++i) {
        if (h[i][i] == 0) return Integer(0);
        det *= h[i][i];
    }
    return det;
}

}  // namespace aqci

#endif  // AQCI_HERMITE_HPP
