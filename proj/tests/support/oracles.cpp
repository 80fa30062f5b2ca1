#include "oracles.hpp"

#include "pairlab/error.hpp"

#include <set>
#include <stdexcept>

namespace pairlab::testing {

std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            const Rational f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

LPResult vertex_enum_oracle(const WeightLP& lp) {
    const std::size_t n = lp.n;
    if (n == 0 || n > 3) throw InputError("vertex enumeration oracle supports 1 <= n <= 3");

    // Hyperplanes: constraint rows, then coordinate planes w_i = 0.
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    for (const auto& m : lp.constraints) {
        std::vector<Rational> r;
        for (std::size_t i = 0; i < n; ++i) r.emplace_back(m[i]);
        rows.push_back(std::move(r));
        rhs.emplace_back(1);
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> r(n);
        r[i] = 1;
        rows.push_back(std::move(r));
        rhs.emplace_back(0);
    }

    std::optional<LPResult> best;
    std::vector<std::size_t> pick(n);
    const std::size_t h = rows.size();
    auto consider = [&]() {
        std::vector<std::vector<Rational>> a;
        std::vector<Rational> b;
        for (std::size_t k : pick) {
            a.push_back(rows[k]);
            b.push_back(rhs[k]);
        }
        const auto w = solve_square(a, b);
        if (!w) return;
        for (const auto& wi : *w) {
            if (wi.sign() < 0) return;
        }
        Rational value;
        for (const auto& wi : *w) value += wi;
        std::set<std::size_t> active;
        for (std::size_t j = 0; j < lp.constraints.size(); ++j) {
            Rational s;
            for (std::size_t i = 0; i < n; ++i) s += (*w)[i] * Rational(lp.constraints[j][i]);
            if (s < Rational(1)) return;
            if (s == Rational(1)) active.insert(j);
        }
        if (!best || value < best->value) best = LPResult{value, *w, active};
    };
    // All n-subsets of the h hyperplanes.
    for (pick[0] = 0; pick[0] < h; ++pick[0]) {
        if (n == 1) {
            consider();
            continue;
        }
        for (pick[1] = pick[0] + 1; pick[1] < h; ++pick[1]) {
            if (n == 2) {
                consider();
                continue;
            }
            for (pick[2] = pick[1] + 1; pick[2] < h; ++pick[2]) consider();
        }
    }
    if (!best) throw InvariantError("vertex enumeration found no feasible vertex");
    return *best;
}

std::map<Rational, long> spectrum_by_convolution(const std::vector<long>& m) {
    std::map<Rational, long> acc{{Rational(0), 1}};
    for (long mi : m) {
        std::map<Rational, long> next;
        for (const auto& [alpha, q] : acc) {
            for (long j = 1; j < mi; ++j) next[alpha + Rational(j) / Rational(mi)] += q;
        }
        acc = std::move(next);
    }
    return acc;
}

SparsePoly truncated_square_family(unsigned d) {
    const SparsePoly x = SparsePoly::variable(2, 0);
    const SparsePoly y = SparsePoly::variable(2, 1);
    SparsePoly series = y;
    for (unsigned k = 2; k <= d; ++k) series += x.pow(k);
    SparsePoly shift(2);
    for (unsigned k = 2; k + 1 <= d; ++k) shift += x.pow(k);
    return truncate(series.pow(2), d).substitute(1, y - shift);
}

void for_each_grid_config(const std::function<void(const SncPairConfig&)>& fn) {
    std::vector<Rational> values;
    for (long k = -6; k <= 12; ++k) values.push_back(Rational(k) / Rational(6));

    for (std::size_t n = 0; n <= 3; ++n) {
        std::vector<SncPairConfig::Meet> pairs;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

        std::size_t combos = 1;
        for (std::size_t i = 0; i < n; ++i) combos *= values.size();
        for (std::size_t idx = 0; idx < combos; ++idx) {
            std::vector<Rational> coeffs;
            std::size_t rest = idx;
            for (std::size_t i = 0; i < n; ++i) {
                coeffs.push_back(values[rest % values.size()]);
                rest /= values.size();
            }
            for (std::size_t mask = 0; mask < (std::size_t{1} << pairs.size()); ++mask) {
                std::vector<SncPairConfig::Meet> meets;
                for (std::size_t p = 0; p < pairs.size(); ++p)
                    if (mask & (std::size_t{1} << p)) meets.push_back(pairs[p]);
                fn(SncPairConfig(coeffs, meets));
            }
        }
    }
}

}  // namespace pairlab::testing
