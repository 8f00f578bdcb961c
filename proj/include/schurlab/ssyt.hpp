#pragma once

#include "schurlab/numeric.hpp"
#include "schurlab/partition.hpp"

#include <functional>
#include <vector>

namespace schurlab {

// Visit every semistandard Young tableau of the given shape with entries in
// 1..m (rows weakly increasing, columns strictly increasing). The callback
// receives the content vector: count of each entry value, length m.
template <class F>
void for_each_ssyt(const partition& shape, long m, F&& visit)
{
    if (shape.rows() > m)
        return;
    if (shape.empty()) {
        visit(std::vector<int>(static_cast<std::size_t>(m), 0));
        return;
    }
    const auto& rows = shape.parts();
    std::vector<std::vector<int>> cells(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        cells[i].assign(static_cast<std::size_t>(rows[i]), 0);
    std::vector<int> content(static_cast<std::size_t>(m), 0);

    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t j) {
        if (i == cells.size()) {
            visit(content);
            return;
        }
        std::size_t ni = i, nj = j + 1;
        if (nj == cells[i].size()) {
            ni = i + 1;
            nj = 0;
        }
        int lo = 1;
        if (j > 0)
            lo = std::max(lo, cells[i][j - 1]);
        if (i > 0)
            lo = std::max(lo, cells[i - 1][j] + 1);
        for (int v = lo; v <= m; ++v) {
            cells[i][j] = v;
            ++content[static_cast<std::size_t>(v - 1)];
            rec(ni, nj);
            --content[static_cast<std::size_t>(v - 1)];
        }
    };
    rec(0, 0);
}

// Number of SSYT of the given shape with entries in 1..m, by direct
// backtracking enumeration (no product formula).
inline Int count_ssyt(const partition& shape, long m)
{
    if (shape.rows() > m)
        return 0;
    if (shape.empty())
        return 1;
    const auto& rows = shape.parts();
    std::vector<std::vector<int>> cells(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        cells[i].assign(static_cast<std::size_t>(rows[i]), 0);
    Int count = 0;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t j) {
        if (i == cells.size()) {
            ++count;
            return;
        }
        std::size_t ni = i, nj = j + 1;
        if (nj == cells[i].size()) {
            ni = i + 1;
            nj = 0;
        }
        int lo = 1;
        if (j > 0)
            lo = std::max(lo, cells[i][j - 1]);
        if (i > 0)
            lo = std::max(lo, cells[i - 1][j] + 1);
        for (int v = lo; v <= m; ++v) {
            cells[i][j] = v;
            rec(ni, nj);
        }
    };
    rec(0, 0);
    return count;
}

} // namespace schurlab
