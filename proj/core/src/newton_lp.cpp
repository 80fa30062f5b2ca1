#include "pairlab/newton_lp.hpp"

#include "pairlab/error.hpp"
#include "simplex.hpp"

namespace pairlab {

namespace {

Rational pairing(std::span<const Rational> w, const ExponentVector& m) {
    Rational s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] != 0) s += w[i] * Rational(m[i]);
    }
    return s;
}

}  // namespace

WeightLP weight_lp_for(const SparsePoly& f) {
    if (f.is_zero()) throw ZeroPolynomialError();
    if (!f.constant_term().is_zero()) throw UnitAtOriginError();
    return WeightLP{f.nvars(), f.support()};
}

const char* to_string(Exactness e) noexcept {
    return e == Exactness::ExactIfNondegenerate ? "EXACT_IF_NONDEGENERATE" : "UPPER_BOUND_ONLY";
}

// The weight LP is solved through its dual
//   maximize sum_j y_j  subject to  sum_j y_j m_j <= (1, ..., 1),  y >= 0,
// whose origin is feasible. The optimal weights are the dual prices of the
// n rows.
LPResult lp_minimize(const WeightLP& lp) {
    if (lp.constraints.empty()) throw InputError("weight LP has no constraints");
    for (std::size_t j = 0; j < lp.constraints.size(); ++j) {
        if (lp.constraints[j].size() != lp.n) throw InputError("constraint vector length does not match n");
        if (lp.constraints[j].is_zero()) {
            throw InputError("constraint " + std::to_string(j) + " is zero: infeasible (unit at origin)");
        }
    }

    std::vector<std::vector<Rational>> a(lp.n, std::vector<Rational>(lp.constraints.size()));
    for (std::size_t j = 0; j < lp.constraints.size(); ++j) {
        for (std::size_t i = 0; i < lp.n; ++i) a[i][j] = Rational(lp.constraints[j][i]);
    }
    const auto sol = detail::solve_packing_lp(a, std::vector<Rational>(lp.n, Rational(1)),
                                              std::vector<Rational>(lp.constraints.size(), Rational(1)));

    LPResult result{sol.value, sol.prices, {}};
    Rational total;
    for (const auto& wi : result.optimal_w) {
        if (wi.sign() < 0) throw InvariantError("weight LP: negative optimal weight");
        total += wi;
    }
    if (total != result.value) throw InvariantError("weight LP: duality gap in certificate");
    for (std::size_t j = 0; j < lp.constraints.size(); ++j) {
        const Rational v = pairing(result.optimal_w, lp.constraints[j]);
        if (v < Rational(1)) throw InvariantError("weight LP: certificate violates a constraint");
        if (v == Rational(1)) result.active.insert(j);
    }
    return result;
}

NewtonBound lct_newton_bound(const SparsePoly& f) {
    const LPResult lp = lp_minimize(weight_lp_for(f));
    return NewtonBound{min(Rational(1), lp.value), lp.optimal_w, Exactness::ExactIfNondegenerate};
}

}  // namespace pairlab
