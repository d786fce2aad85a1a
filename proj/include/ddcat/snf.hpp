#ifndef DDCAT_SNF_HPP
#define DDCAT_SNF_HPP

#include <cstdlib>
#include <utility>
#include <vector>

#include "core.hpp"

namespace ddcat {

using IntMatrix = std::vector<std::vector<Int>>;

// Invariant factors d_1 | d_2 | ... of an integer matrix (nonzero ones only).
inline std::vector<Int> smith_invariants(IntMatrix a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<Int> diag;
    for (std::size_t t = 0; t < rows && t < cols; ++t) {
        // pivot: smallest nonzero absolute value in the remaining block
        for (;;) {
            std::size_t pr = rows, pc = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a[i][j] != 0 && (pr == rows || std::llabs(a[i][j]) < std::llabs(a[pr][pc]))) {
                        pr = i;
                        pc = j;
                    }
            if (pr == rows) return diag;
            std::swap(a[t], a[pr]);
            for (auto& row : a) std::swap(row[t], row[pc]);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                Int q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                Int q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            // divisibility of the remaining block
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        for (std::size_t jj = t; jj < cols; ++jj) a[t][jj] += a[i][jj];
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        diag.push_back(std::llabs(a[t][t]));
    }
    return diag;
}

// Z^cols modulo the row span of a: free rank and torsion orders (> 1).
struct AbelianGroup {
    int free_rank = 0;
    std::vector<Int> torsion;
};

inline AbelianGroup cokernel(const IntMatrix& a) {
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    auto d = smith_invariants(a);
    AbelianGroup g;
    g.free_rank = int(cols - d.size());
    for (Int x : d)
        if (x > 1) g.torsion.push_back(x);
    return g;
}

} // namespace ddcat

#endif
