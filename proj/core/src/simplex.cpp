#include "simplex.hpp"

#include "pairlab/error.hpp"

#include <cstddef>
#include <optional>

namespace pairlab::detail {

PackingSolution solve_packing_lp(const std::vector<std::vector<Rational>>& a,
                                 const std::vector<Rational>& b,
                                 const std::vector<Rational>& c) {
    const std::size_t rows = a.size();
    const std::size_t cols = c.size();
    if (b.size() != rows) throw InvariantError("simplex: rhs size mismatch");
    for (const auto& bi : b) {
        if (bi.sign() < 0) throw InvariantError("simplex: negative rhs");
    }

    // Columns: structural 0..cols-1, slacks cols..cols+rows-1, rhs last.
    const std::size_t width = cols + rows + 1;
    std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(width));
    for (std::size_t i = 0; i < rows; ++i) {
        if (a[i].size() != cols) throw InvariantError("simplex: ragged constraint matrix");
        for (std::size_t j = 0; j < cols; ++j) t[i][j] = a[i][j];
        t[i][cols + i] = 1;
        t[i][width - 1] = b[i];
    }
    // Reduced costs z_j - c_j; the objective value sits in the rhs slot.
    std::vector<Rational> obj(width);
    for (std::size_t j = 0; j < cols; ++j) obj[j] = -c[j];

    std::vector<std::size_t> basis(rows);
    for (std::size_t i = 0; i < rows; ++i) basis[i] = cols + i;

    for (;;) {
        std::optional<std::size_t> entering;
        for (std::size_t j = 0; j + 1 < width; ++j) {
            if (obj[j].sign() < 0) {
                entering = j;
                break;
            }
        }
        if (!entering) break;
        const std::size_t e = *entering;

        std::optional<std::size_t> leaving;
        Rational best_ratio;
        for (std::size_t i = 0; i < rows; ++i) {
            if (t[i][e].sign() <= 0) continue;
            const Rational ratio = t[i][width - 1] / t[i][e];
            if (!leaving || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[*leaving])) {
                leaving = i;
                best_ratio = ratio;
            }
        }
        if (!leaving) throw InvariantError("simplex: packing LP is unbounded");
        const std::size_t r = *leaving;

        const Rational pivot = t[r][e];
        for (auto& v : t[r]) v /= pivot;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || t[i][e].is_zero()) continue;
            const Rational factor = t[i][e];
            for (std::size_t j = 0; j < width; ++j) {
                if (!t[r][j].is_zero()) t[i][j] -= factor * t[r][j];
            }
        }
        if (!obj[e].is_zero()) {
            const Rational factor = obj[e];
            for (std::size_t j = 0; j < width; ++j) {
                if (!t[r][j].is_zero()) obj[j] -= factor * t[r][j];
            }
        }
        basis[r] = e;
    }

    PackingSolution sol;
    sol.value = obj[width - 1];
    sol.y.assign(cols, Rational(0));
    for (std::size_t i = 0; i < rows; ++i) {
        if (basis[i] < cols) sol.y[basis[i]] = t[i][width - 1];
    }
    sol.prices.assign(obj.begin() + static_cast<std::ptrdiff_t>(cols),
                      obj.begin() + static_cast<std::ptrdiff_t>(cols + rows));
    return sol;
}

}  // namespace pairlab::detail
