#pragma once

#include "pairlab/poly.hpp"
#include "pairlab/rational.hpp"

#include <cstddef>
#include <set>
#include <vector>

namespace pairlab {

/// minimize sum w_i  subject to  <w, m> >= 1 for every support point m,  w >= 0.
///
/// This is the ratio (sum w_i) / w(f) from the weighted-blow-up bound on the
/// log canonical threshold, normalized by w(f) = 1.
struct WeightLP {
    std::size_t n = 0;
    std::vector<ExponentVector> constraints;
};

/// Builds the LP from the support of f. Throws ZeroPolynomialError, or
/// UnitAtOriginError when f has a constant term.
WeightLP weight_lp_for(const SparsePoly& f);

struct LPResult {
    Rational value;
    WeightVector optimal_w;
    /// Constraint indices with <optimal_w, m> = 1.
    std::set<std::size_t> active;
};

/// Exact simplex with Bland's rule. Throws InputError if some constraint
/// vector is zero (the LP is infeasible).
LPResult lp_minimize(const WeightLP& lp);

enum class Exactness { ExactIfNondegenerate, UpperBoundOnly };

const char* to_string(Exactness e) noexcept;

struct NewtonBound {
    /// min{1, LP value}.
    Rational bound;
    WeightVector certificate;
    /// Always ExactIfNondegenerate: the bound equals c_0(f) when f is
    /// nondegenerate for its Newton polyhedron (e.g. semiquasihomogeneous),
    /// and is an upper bound otherwise. Nondegeneracy is not tested here.
    Exactness exactness = Exactness::ExactIfNondegenerate;
};

NewtonBound lct_newton_bound(const SparsePoly& f);

}  // namespace pairlab
