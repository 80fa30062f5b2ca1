#pragma once

#include "pairlab/poly.hpp"
#include "pairlab/rational.hpp"
#include "pairlab/snc.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace pairlab {

enum class LctMethod {
    MonomialSum,
    ProductForm,
    WeightedHomog,
    PlaneBranch,
    Resolution,
    NewtonBound,
    DirectSum,
    TangentCone,
};

/// How far the reported value can be trusted.
enum class LctStatus {
    Exact,
    /// Exact when f is nondegenerate for its Newton polyhedron.
    ExactIfNondegenerate,
    UpperBound,
};

const char* to_string(LctMethod m) noexcept;
const char* to_string(LctStatus s) noexcept;

/// Log canonical threshold c_0 with provenance. For effective nonzero input
/// the value lies in (0, 1]; +inf encodes the zero divisor / unit at origin.
struct ThresholdResult {
    ThresholdResult(ExtendedRational v, LctMethod m, LctStatus s = LctStatus::Exact)
        : value(std::move(v)), method(m), status(s) {}

    ExtendedRational value;
    LctMethod method;
    LctStatus status = LctStatus::Exact;
    /// Weights achieving the value, when the method has them.
    WeightVector weights;
    /// Resolution entry achieving the minimum, for LctMethod::Resolution.
    std::optional<std::size_t> entry;
};

struct BoundInterval {
    Rational lower;
    Rational upper;
};

/// c_0(sum x_i^{b_i}) = min{1, sum 1/b_i}. Certificate: weights 1/b_i.
ThresholdResult lct_monomial_sum(std::span<const long> b);

/// c_0((prod x_i^{a_i}) (sum x_i^{b_i}))
///   = min{ (sum 1/b_i) / (1 + sum a_i/b_i), 1/a_1, ..., 1/a_n }.
/// Requires every a_i >= 1; with some a_i = 0 the expression can exceed the
/// true (capped) threshold, so use lct_monomial_sum for that case.
ThresholdResult lct_product_form(std::span<const long> a, std::span<const long> b);

/// min{1, (sum w_i) / w(f)} for positive weights. Marked exact when the
/// caller asserts nondegeneracy (weighted leading part with an isolated
/// critical point), otherwise an upper bound.
ThresholdResult lct_weighted_homogeneous(const SparsePoly& f, std::span<const Rational> w,
                                         bool nondegenerate);

/// Irreducible plane branch of multiplicity m with first Puiseux exponent
/// n/m: c_0 = 1/m + 1/n. Only m >= 2 and n > m are checked.
ThresholdResult lct_plane_branch(long m, long n);

/// With d = mult_0 f in n variables: 1/d <= c_0 <= min{1, n/d}. When the
/// caller asserts that (P^{n-1}, (n/d) P(T_0 D)) is lc, the upper end is
/// exact and a ThresholdResult is returned instead of the interval.
std::variant<BoundInterval, ThresholdResult> lct_tangent_cone_bounds(const SparsePoly& f, bool tangent_cone_lc);

/// Threshold read off resolution data, see lct_from_resolution.
ThresholdResult lct_resolution(const ResolutionData& res);

/// Newton-polyhedron bound wrapped as a ThresholdResult.
ThresholdResult lct_newton(const SparsePoly& f);

/// c_0(f(x) + g(y)) = min{1, c_0(f) + c_0(g)} for disjoint variables.
Rational lct_direct_sum(const Rational& c1, const Rational& c2);

/// c_0(f+g) <= c_0(f) + c_0(g) and c_0(fg) <= min{c_0(f), c_0(g)}.
bool check_combination_inequalities(const Rational& cf, const Rational& cg,
                                    const Rational& c_sum, const Rational& c_product);

/// |c_0(f) - c_0(f_{<=d})| <= n/(d+1).
Rational truncation_bound(long n, long d);

/// Smallest power of y in the adjoint ideal of y^m = f: floor(m (c_0 + 1)).
mpz_class quasiadjunction_psi(const Rational& c0, long m);

}  // namespace pairlab
