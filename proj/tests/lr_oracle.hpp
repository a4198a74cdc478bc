#pragma once

#include "qsi/partition.hpp"

#include <vector>

// Test-only reference implementation of the Littlewood-Richardson count:
// enumerate every assignment of values to the skew cells and check the
// definition verbatim (semistandard rows/columns, content, lattice
// property of the reverse reading word). Deliberately naive; keep inputs
// small.
namespace qsi_test {

inline long long lr_brute(const qsi::Partition& lam, const qsi::Partition& mu,
                          const qsi::Partition& nu) {
    using qsi::Partition;
    if (lam.size() + mu.size() != nu.size()) return 0;
    if (!nu.contains(lam)) return 0;
    const int rows = nu.length();
    const int k = mu.length();
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < rows; ++i)
        for (int j = lam.part(i); j < nu.part(i); ++j) cells.emplace_back(i, j);
    if (cells.empty()) return 1;
    if (k == 0) return 0;

    std::vector<int> fill(cells.size(), 1);
    long long count = 0;
    for (;;) {
        // check this assignment against the definition
        std::vector<std::vector<int>> grid(rows);
        for (int i = 0; i < rows; ++i) grid[i].assign(nu.part(i), 0);
        for (size_t c = 0; c < cells.size(); ++c) grid[cells[c].first][cells[c].second] = fill[c];

        bool ok = true;
        for (int i = 0; i < rows && ok; ++i)
            for (int j = lam.part(i); j + 1 < nu.part(i) && ok; ++j)
                if (grid[i][j] > grid[i][j + 1]) ok = false;
        for (int i = 1; i < rows && ok; ++i)
            for (int j = lam.part(i); j < nu.part(i) && ok; ++j)
                if (j >= lam.part(i - 1) && grid[i - 1][j] >= grid[i][j]) ok = false;
        if (ok) {
            std::vector<int> content(k + 1, 0);
            for (size_t c = 0; c < cells.size(); ++c) ++content[fill[c]];
            for (int v = 1; v <= k && ok; ++v)
                if (content[v] != mu.part(v - 1)) ok = false;
        }
        if (ok) {
            // reverse reading word: rows top to bottom, right to left
            std::vector<int> word;
            for (int i = 0; i < rows; ++i)
                for (int j = nu.part(i) - 1; j >= lam.part(i); --j) word.push_back(grid[i][j]);
            std::vector<int> seen(k + 2, 0);
            for (int v : word) {
                ++seen[v];
                if (v >= 2 && seen[v] > seen[v - 1]) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) ++count;

        size_t c = 0;
        while (c < fill.size() && fill[c] == k) fill[c++] = 1;
        if (c == fill.size()) break;
        ++fill[c];
    }
    return count;
}

// multiplicity of the rectangle in a triple tensor product, summed over
// intermediate shapes with lr_brute only
inline long long invariant_brute(int r, const qsi::Partition& l1, const qsi::Partition& l2,
                                 const qsi::Partition& l3) {
    using qsi::Partition;
    const long long total = l1.size() + l2.size() + l3.size();
    if (total % r != 0) return 0;
    const int k = static_cast<int>(total / r);
    const Partition rect =
        k == 0 ? Partition() : Partition(std::vector<int>(r, k));
    // enumerate intermediate shapes kappa inside the rectangle
    std::vector<int> parts(r, 0);
    long long sum = 0;
    for (;;) {
        bool valid = true;
        for (int i = 1; i < r; ++i)
            if (parts[i] > parts[i - 1]) valid = false;
        if (valid) {
            long long sz = 0;
            for (int p : parts) sz += p;
            if (sz == l1.size() + l2.size()) {
                std::vector<int> copy = parts;
                const Partition kappa(copy);
                sum += lr_brute(l1, l2, kappa) * lr_brute(kappa, l3, rect);
            }
        }
        int i = 0;
        while (i < r && parts[i] == k) parts[i++] = 0;
        if (i == r) break;
        ++parts[i];
    }
    return sum;
}

} // namespace qsi_test
