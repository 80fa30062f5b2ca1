#include "pairlab/lct.hpp"

#include "pairlab/error.hpp"
#include "pairlab/newton_lp.hpp"

namespace pairlab {

const char* to_string(LctMethod m) noexcept {
    switch (m) {
        case LctMethod::MonomialSum: return "MONOMIAL_SUM";
        case LctMethod::ProductForm: return "PRODUCT_FORM";
        case LctMethod::WeightedHomog: return "WEIGHTED_HOMOG";
        case LctMethod::PlaneBranch: return "PLANE_BRANCH";
        case LctMethod::Resolution: return "RESOLUTION";
        case LctMethod::NewtonBound: return "NEWTON_BOUND";
        case LctMethod::DirectSum: return "DIRECT_SUM";
        case LctMethod::TangentCone: return "TANGENT_CONE";
    }
    return "";
}

const char* to_string(LctStatus s) noexcept {
    switch (s) {
        case LctStatus::Exact: return "EXACT";
        case LctStatus::ExactIfNondegenerate: return "EXACT_IF_NONDEGENERATE";
        case LctStatus::UpperBound: return "UPPER_BOUND";
    }
    return "";
}

namespace {

void require_positive_exponents(std::span<const long> v, const char* name) {
    if (v.empty()) throw InputError(std::string(name) + " must be nonempty");
    for (long x : v) {
        if (x < 1) throw InputError(std::string(name) + " entries must be >= 1");
    }
}

}  // namespace

ThresholdResult lct_monomial_sum(std::span<const long> b) {
    require_positive_exponents(b, "exponent list");
    ThresholdResult r{Rational(0), LctMethod::MonomialSum};
    Rational sum;
    for (long bi : b) {
        const Rational w = Rational(bi).inverse();
        sum += w;
        r.weights.push_back(w);
    }
    r.value = min(Rational(1), sum);
    return r;
}

ThresholdResult lct_product_form(std::span<const long> a, std::span<const long> b) {
    if (a.size() != b.size()) throw InputError("product form needs equally many a_i and b_i");
    require_positive_exponents(a, "a");
    require_positive_exponents(b, "b");
    Rational inv_sum;
    Rational ratio_sum;
    for (std::size_t i = 0; i < a.size(); ++i) {
        inv_sum += Rational(b[i]).inverse();
        ratio_sum += Rational(a[i]) / Rational(b[i]);
    }
    const Rational lambda = (Rational(1) + ratio_sum).inverse();
    Rational value = inv_sum * lambda;

    // The main part is attained by w_i = lambda / b_i; a 1/a_i term by the
    // coordinate weight e_i / a_i.
    ThresholdResult r{Rational(0), LctMethod::ProductForm};
    for (long bi : b) r.weights.push_back(lambda / Rational(bi));
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Rational c = Rational(a[i]).inverse();
        if (c < value) {
            value = c;
            r.weights.assign(a.size(), Rational(0));
            r.weights[i] = c;
        }
    }
    r.value = value;
    return r;
}

ThresholdResult lct_weighted_homogeneous(const SparsePoly& f, std::span<const Rational> w, bool nondegenerate) {
    if (w.size() != f.nvars()) throw InputError("weight vector length does not match variable count");
    for (const auto& wi : w) {
        if (wi.sign() <= 0) throw InputError("weights must be positive");
    }
    const Rational wf = weighted_multiplicity(f, w);
    if (wf.is_zero()) throw UnitAtOriginError();
    Rational total;
    for (const auto& wi : w) total += wi;
    ThresholdResult r{min(Rational(1), total / wf), LctMethod::WeightedHomog,
                      nondegenerate ? LctStatus::Exact : LctStatus::UpperBound};
    r.weights.assign(w.begin(), w.end());
    return r;
}

ThresholdResult lct_plane_branch(long m, long n) {
    if (m < 2) throw InputError("branch multiplicity must be >= 2");
    if (n <= m) throw InputError("first Puiseux exponent n/m needs n > m");
    return ThresholdResult{Rational(m).inverse() + Rational(n).inverse(), LctMethod::PlaneBranch};
}

std::variant<BoundInterval, ThresholdResult> lct_tangent_cone_bounds(const SparsePoly& f, bool tangent_cone_lc) {
    const unsigned long d = multiplicity(f);
    if (d == 0) throw UnitAtOriginError();
    const Rational upper = min(Rational(1), Rational(mpz_class(f.nvars()), mpz_class(d)));
    if (tangent_cone_lc) return ThresholdResult{upper, LctMethod::TangentCone};
    return BoundInterval{Rational(mpz_class(1), mpz_class(d)), upper};
}

ThresholdResult lct_resolution(const ResolutionData& res) {
    ThresholdResult r{lct_from_resolution(res), LctMethod::Resolution};
    r.entry = lct_minimizing_entry(res);
    return r;
}

ThresholdResult lct_newton(const SparsePoly& f) {
    auto nb = lct_newton_bound(f);
    ThresholdResult r{nb.bound, LctMethod::NewtonBound, LctStatus::ExactIfNondegenerate};
    r.weights = std::move(nb.certificate);
    return r;
}

Rational lct_direct_sum(const Rational& c1, const Rational& c2) {
    if (c1.sign() <= 0 || c2.sign() <= 0) throw InputError("thresholds must be positive");
    return min(Rational(1), c1 + c2);
}

bool check_combination_inequalities(const Rational& cf, const Rational& cg,
                                    const Rational& c_sum, const Rational& c_product) {
    return c_sum <= cf + cg && c_product <= min(cf, cg);
}

Rational truncation_bound(long n, long d) {
    if (n < 1 || d < 1) throw InputError("truncation bound needs n >= 1 and d >= 1");
    return Rational(n) / Rational(d + 1);
}

mpz_class quasiadjunction_psi(const Rational& c0, long m) {
    if (m < 1) throw InputError("psi(m) needs m >= 1");
    return (Rational(m) * (c0 + Rational(1))).floor();
}

}  // namespace pairlab
