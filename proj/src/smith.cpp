#include "slopelab/smith.hpp"

#include <utility>

namespace slopelab {

namespace {

BigInt abs_value(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

} // namespace

SmithForm smith_normal_form(IntMatrix a, std::size_t n) {
    const std::size_t m = a.size();
    IntMatrix v(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i) v[i][i] = 1;

    auto swap_cols = [&](std::size_t c1, std::size_t c2) {
        if (c1 == c2) return;
        for (auto& row : a) std::swap(row[c1], row[c2]);
        for (auto& row : v) std::swap(row[c1], row[c2]);
    };
    // col[dst] -= k * col[src]
    auto col_axpy = [&](std::size_t dst, std::size_t src, const BigInt& k) {
        if (k == 0) return;
        for (auto& row : a) row[dst] -= k * row[src];
        for (auto& row : v) row[dst] -= k * row[src];
    };
    auto row_axpy = [&](std::size_t dst, std::size_t src, const BigInt& k) {
        if (k == 0) return;
        for (std::size_t j = 0; j < n; ++j) a[dst][j] -= k * a[src][j];
    };

    std::vector<BigInt> diag;
    bool exhausted = false;
    for (std::size_t t = 0; t < std::min(m, n) && !exhausted; ++t) {
        for (;;) {
            // Pivot: smallest nonzero |entry| in the trailing block.
            std::size_t pi = m, pj = n;
            BigInt best = 0;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (a[i][j] != 0 && (pi == m || abs_value(a[i][j]) < best)) {
                        best = abs_value(a[i][j]);
                        pi = i;
                        pj = j;
                    }
            if (pi == m) {
                exhausted = true;
                break;
            }
            std::swap(a[t], a[pi]);
            swap_cols(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (a[i][t] == 0) continue;
                row_axpy(i, t, a[i][t] / a[t][t]);
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a[t][j] == 0) continue;
                col_axpy(j, t, a[t][j] / a[t][t]);
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) continue;

            // Divisibility: fold an offending row into the pivot row and retry.
            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        row_axpy(t, i, BigInt(-1));
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (exhausted) break;
        if (a[t][t] < 0) a[t][t] = -a[t][t];
        diag.push_back(a[t][t]);
    }
    return {std::move(diag), std::move(v)};
}

} // namespace slopelab
